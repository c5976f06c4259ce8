//! Tau quotients `Σ_S π_S f_S^n(t)` under the exponential series
//! `exp(Σ t_i z^i)`, where `f_λ^1` becomes the Schur polynomial `s_λ(t)`.
//!
//!     cargo run --example tau_quotients

use std::collections::BTreeMap;

use nschur::exactalg::{poly_text, ratfunc_text, rational};
use nschur::kp::{exp_specialization, nschur_timed, schur_polynomial, tau_quotient_expansion, TimeSeries};
use nschur::{MayaSequence, Partition};

fn main() {
    let ts = TimeSeries::symbolic(4, 4);
    let psi = exp_specialization(&ts);
    for w in 0..=3 {
        for lambda in Partition::all_of(w) {
            let s = MayaSequence::from_partition(&lambda);
            let f = nschur_timed(&s, &psi).expect("degree 4 covers weight 3");
            println!("({lambda})\t{}\t[schur: {}]", ratfunc_text(&f), poly_text(&schur_polynomial(&lambda, &ts)));
        }
    }

    // A one-soliton style combination 1 + a·s_(1) + a²/2·s_(2).
    let coeffs: BTreeMap<MayaSequence, _> = [("", rational(1, 1)), ("1", rational(3, 1)), ("2", rational(9, 2))]
        .into_iter()
        .map(|(p, c)| (MayaSequence::from_partition(&p.parse().expect("valid partition")), c))
        .collect();
    let tau = tau_quotient_expansion(&psi, &coeffs).expect("degree suffices");
    println!("tau/tau_0 = {}", ratfunc_text(&tau));
}
