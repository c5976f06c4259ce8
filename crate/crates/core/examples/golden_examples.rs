//! Prints `f_S^n` for the vacuum and for `S = (-2, 1, 2, …)` at n = 1, 2.
//!
//!     cargo run --example golden_examples

use nschur::exactalg::ratfunc_text;
use nschur::nschur::n_schur;
use nschur::MayaSequence;

fn main() {
    for n in 1..=4 {
        println!("f_0^{n} = {}", ratfunc_text(&n_schur(&MayaSequence::vacuum(), n)));
    }
    let s: MayaSequence = "[-2]".parse().expect("valid prefix");
    for n in 1..=3 {
        println!("f_{s}^{n} = {}", ratfunc_text(&n_schur(&s, n)));
    }
}
