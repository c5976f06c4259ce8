//! Frame determinant `<0|g|W>` against the expansion `Σ_S <S|W> f_S^n` on a
//! random numeric series and point, plus one symbolic check.
//!
//!     cargo run --release --example grassmann_theorem -- 2 2 2 7

use nschur::exactalg::ratfunc_text;
use nschur::grassmann::{
    pluecker_coordinates, random_point, random_series, verify_theorem, verify_theorem_symbolic,
    FinitePoint, SeriesMatrix,
};
use rand::{rngs::StdRng, SeedableRng};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let arg = |i: usize, d: u64| args.get(i).copied().unwrap_or(d);
    let (n, d, r, seed) = (arg(0, 2) as usize, arg(1, 2) as usize, arg(2, 2) as usize, arg(3, 7));

    let mut rng = StdRng::seed_from_u64(seed);
    let g = random_series(&mut rng, n, 4, 9);
    let w = random_point(&mut rng, n, d, r, 9);
    println!("point: {}", w.to_json());
    for (s, c) in pluecker_coordinates(&w) {
        println!("  <{s}|W> = {c}");
    }
    let rep = verify_theorem(&g, &w).expect("generic instance");
    println!("lhs = {}\nrhs = {}\ntruncation = {}\npass = {}", rep.lhs, rep.rhs, rep.truncation, rep.pass);

    // Fully symbolic g of z-degree 1 against the point spanned by e_{-1}.
    let g = SeriesMatrix::symbolic(1, 1);
    let w = FinitePoint::coordinate(1, &"[-1]".parse().expect("valid prefix"));
    let rep = verify_theorem_symbolic(&g, &w).expect("within the symbolic limits");
    println!("symbolic: {} == {} : {}", ratfunc_text(&rep.lhs), ratfunc_text(&rep.rhs), rep.pass);
}
