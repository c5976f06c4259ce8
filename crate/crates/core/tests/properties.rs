//! Property tests across modules.

use std::collections::BTreeMap;

use nschur::exactalg::rational;
use nschur::grassmann::{
    expand, frame_det, pluecker_coord, pluecker_coordinates, random_point, random_series,
    FinitePoint, SeriesMatrix,
};
use nschur::kp::{tau_quotient_expansion, PsiInvSeries};
use nschur::nschur::{n_schur, NSchurTable};
use nschur::{MayaSequence, Partition, Polynomial, Rational, RationalFunction, Variable};
use proptest::prelude::*;
use rand::{rngs::StdRng, SeedableRng};

const VARS: [Variable; 5] = [
    Variable::H { k: 0, i: 1, j: 1 },
    Variable::H { k: 1, i: 1, j: 2 },
    Variable::H { k: 2, i: 2, j: 1 },
    Variable::T { m: 1 },
    Variable::T { m: 2 },
];

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, 1i64..=3, prop::collection::vec(0..VARS.len(), 0..3)), 0..4)
        .prop_map(|terms| {
            terms
                .into_iter()
                .map(|(n, d, vars)| {
                    vars.into_iter()
                        .map(|v| Polynomial::var(VARS[v]))
                        .fold(Polynomial::constant(rational(n, d)), |a, b| a * b)
                })
                .sum()
        })
}

/// Products of variables with weight `kn + i - j` all equal to `target`.
fn homogeneous_strategy() -> impl Strategy<Value = Polynomial> {
    let hvars = [
        (Variable::h(1, 1, 1), 2),
        (Variable::h(2, 1, 0), 1),
        (Variable::h(1, 2, 1), 1),
        (Variable::h(1, 1, 0), 0),
        (Variable::h(2, 2, 0), 0),
    ];
    prop::collection::vec((1i64..=4, prop::collection::vec(0..hvars.len(), 0..4)), 1..4).prop_map(
        move |terms| {
            // Pad every monomial with h[1,2,0] (weight -1) to a common weight.
            let weights: Vec<i64> =
                terms.iter().map(|(_, vs)| vs.iter().map(|&v| hvars[v].1).sum()).collect();
            let top = *weights.iter().max().unwrap();
            terms
                .into_iter()
                .zip(weights)
                .map(|((c, vs), w)| {
                    let mut m = Polynomial::from_int(c);
                    for v in vs {
                        m = m * Polynomial::var(hvars[v].0);
                    }
                    m * Polynomial::h(2, 1, 0).pow((top - w) as u32)
                })
                .sum()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn exact_div_inverts_mul(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn grading_is_multiplicative(a in homogeneous_strategy(), b in homogeneous_strategy()) {
        let (wa, wb) = (a.homogeneous_weight(2).unwrap(), b.homogeneous_weight(2).unwrap());
        prop_assert_eq!((&a * &b).homogeneous_weight(2).unwrap(), wa + wb);
    }

    #[test]
    fn ratfunc_field_ops(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let g = RationalFunction::new(c.clone(), b.clone()).unwrap();
        let sum = RationalFunction::new(&a + &c, b.clone()).unwrap();
        prop_assert_eq!(&f + &g, sum);
        prop_assert!((&f - &f).is_zero());
        let unit = RationalFunction::new(c.clone(), c).unwrap();
        prop_assert_eq!(&f * &unit, f);
    }

    #[test]
    fn maya_prefix_roundtrip(head in prop::collection::btree_set(-8i64..4, 0..6)) {
        let head: Vec<i64> = head.into_iter().collect();
        if let Ok(s) = MayaSequence::new(head) {
            let lambda = s.to_partition();
            prop_assert_eq!(MayaSequence::from_partition(&lambda), s.clone());
            prop_assert_eq!(s.weight(), lambda.size());
        }
    }

    #[test]
    fn pluecker_is_projective(seed in any::<u64>(), d in 1usize..3, r in 1usize..3, c in 1i64..5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = random_point(&mut rng, 1, d, r, 5);
        let c = rational(-c, 2);
        let scaled = w.scale_column(0, &c).unwrap();
        for (s, x) in pluecker_coordinates(&w) {
            prop_assert_eq!(pluecker_coord(&scaled, &s), &x * &c);
        }
        let g = random_series(&mut rng, 1, 3, 5);
        prop_assert_eq!(frame_det(&g, &scaled).unwrap().value, frame_det(&g, &w).unwrap().value * &c);
    }
}

#[test]
fn maya_bijection_up_to_weight_eight() {
    for w in 0..=8 {
        for lambda in Partition::all_of(w) {
            let s = MayaSequence::from_partition(&lambda);
            assert_eq!(s.to_partition(), lambda);
            assert_eq!(s.weight(), w as u64);
            assert_eq!(s.prefix().len(), lambda.len());
        }
    }
}

/// Partition counts from the recurrence `p(n, k) = p(n, k-1) + p(n-k, k)`.
#[test]
fn partition_counts_match_recurrence() {
    let max = 10usize;
    let mut p = vec![vec![0u64; max + 1]; max + 1];
    for k in 0..=max {
        p[0][k] = 1;
    }
    for n in 1..=max {
        for k in 1..=max {
            p[n][k] = p[n][k - 1] + if k <= n { p[n - k][k] } else { 0 };
        }
    }
    for w in 0..=max {
        let all = MayaSequence::enumerate_by_weight(w as u32);
        assert_eq!(all.len() as u64, p[w][max], "weight {w}");
        assert!(all.windows(2).all(|x| x[0].to_partition() < x[1].to_partition()));
    }
}

/// The frame determinant of a coordinate point `W_S` is `f_S^n(g)` itself.
#[test]
fn coordinate_points_pick_single_terms() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in 1..=2 {
        let g = random_series(&mut rng, n, 4, 9);
        for w in 0..=3 {
            for lambda in Partition::all_of(w) {
                let s = MayaSequence::from_partition(&lambda);
                let point = FinitePoint::coordinate(n, &s);
                let lhs = frame_det(&g, &point).unwrap().value;
                let f = n_schur(&s, n);
                let values = g.h_values(4).unwrap();
                assert_eq!(lhs, f.evaluate(&values).unwrap(), "n={n} ({lambda})");
            }
        }
    }
}

/// `g = 1`: every `f_S^n` except the vacuum vanishes, so `<0|g|W> = <0|W>`.
#[test]
fn trivial_series_reads_vacuum_coordinate() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in 1..=2 {
        let mut coeffs = vec![vec![vec![Rational::from_integer(0.into()); n]; n]; 3];
        for (i, row) in coeffs[0].iter_mut().enumerate() {
            row[i] = Rational::from_integer(1.into());
        }
        let g = SeriesMatrix::numeric(n, coeffs).unwrap();
        for (d, r) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let w = random_point(&mut rng, n, d, r, 7);
            let vac = pluecker_coord(&w, &MayaSequence::vacuum());
            assert_eq!(frame_det(&g, &w).unwrap().value, vac);
            assert_eq!(expand(&g, &w).unwrap().as_constant().unwrap(), vac);
        }
    }
}

#[test]
fn tau_expansion_is_linear_and_matches_expand() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in 1..=2 {
        let g = random_series(&mut rng, n, 4, 9);
        let psi = PsiInvSeries::new(g.clone());
        let w = random_point(&mut rng, n, 2, 2, 9);
        let coeffs: BTreeMap<MayaSequence, Rational> = pluecker_coordinates(&w).into_iter().collect();
        let tau = tau_quotient_expansion(&psi, &coeffs).unwrap();
        assert_eq!(tau, expand(&g, &w).unwrap());

        let halves: BTreeMap<_, _> = coeffs.iter().map(|(s, c)| (s.clone(), c * rational(1, 2))).collect();
        let half = tau_quotient_expansion(&psi, &halves).unwrap();
        assert_eq!(&half + &half, tau);
    }
}

#[test]
fn table_agrees_with_direct_computation() {
    let mut table = NSchurTable::new(2);
    for lambda in Partition::all_of(4) {
        let s = MayaSequence::from_partition(&lambda);
        assert!(table.get(&s).identical(&n_schur(&s, 2)));
    }
}
