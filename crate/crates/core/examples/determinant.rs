//! Fraction-free elimination against cofactor expansion on the symbolic
//! matrix `M_S` and on a dense random integer matrix.
//!
//!     cargo run --release --example determinant

use std::time::Instant;

use nschur::exactalg::rational;
use nschur::nschur::{build_ms, det_cofactor, det_fraction_free};
use nschur::{MayaSequence, Rational};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn main() {
    let s: MayaSequence = "[-2,-1,1]".parse().expect("valid prefix");
    for n in 1..=2 {
        let m = build_ms(&s, n, s.min_truncation(n) + 1).expect("admissible truncation");
        let t = Instant::now();
        let a = det_fraction_free(&m.entries).expect("square");
        let fast = t.elapsed();
        let t = Instant::now();
        let b = det_cofactor(&m.entries).expect("square");
        let slow = t.elapsed();
        println!(
            "M_S n={n} size {}: {} terms, bareiss {fast:?}, cofactor {slow:?}, equal = {}",
            m.size(),
            a.len(),
            a == b
        );
    }

    let mut rng = StdRng::seed_from_u64(1);
    let m: Vec<Vec<Rational>> = (0..7)
        .map(|_| (0..7).map(|_| rational(rng.gen_range(-9..=9), rng.gen_range(1..=9))).collect())
        .collect();
    let a = det_fraction_free(&m).expect("square");
    let b = det_cofactor(&m).expect("square");
    println!("random 7x7 rational: det = {a}, cofactor agrees = {}", a == b);
}
