//! At n = 1 with `h[1,1,0] = 1`, `f_S^1` is a classical Schur polynomial.
//! Compares it against the Jacobi–Trudi determinant for small partitions.
//!
//!     cargo run --example classical_schur -- 4

use nschur::exactalg::poly_text;
use nschur::kp::jacobi_trudi;
use nschur::nschur::{n_schur, specialize_h0_identity};
use nschur::{MayaSequence, Partition, Polynomial};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let h: Vec<Polynomial> = (0..=2 * max + 1)
        .map(|k| if k == 0 { Polynomial::one() } else { Polynomial::h(1, 1, k) })
        .collect();
    for w in 0..=max {
        for lambda in Partition::all_of(w) {
            let f = n_schur(&MayaSequence::from_partition(&lambda), 1);
            let p = specialize_h0_identity(&f, 1).expect("denominator is a power of h[1,1,0]");
            let ok = p == jacobi_trudi(&lambda, &h);
            println!("({lambda})\t{}\t{}", poly_text(&p), if ok { "ok" } else { "MISMATCH" });
        }
    }
}
