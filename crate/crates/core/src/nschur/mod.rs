//! The n-Schur functions `f_S^n`, evaluated as the quotient of two finite
//! determinants `det(M_S|_{nN×nN}) / (det H_0)^N`.

mod det;

use std::collections::{BTreeMap, HashMap};


pub use det::{det_cofactor, det_fraction_free, ExactRing};

use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, RationalFunction, Variable};
use crate::maya::MayaSequence;

/// Entry `(l, m)` of `M_S`: `h[1 + l mod n, 1 + s_m mod n, ⌊l/n⌋ − ⌊s_m/n⌋]`,
/// or zero when the last index is negative. Floor and mod are Euclidean.
pub fn matrix_entry(l: usize, m: usize, s: &MayaSequence, n: usize) -> Polynomial {
    let n = n as i64;
    let (l, sm) = (l as i64, s.get(m));
    let k = l.div_euclid(n) - sm.div_euclid(n);
    if k < 0 {
        return Polynomial::zero();
    }
    let i = 1 + l.rem_euclid(n);
    let j = 1 + sm.rem_euclid(n);
    Polynomial::h(i as u32, j as u32, k as u32)
}

/// The top-left `nN × nN` block of `M_S`.
#[derive(Debug, Clone)]
pub struct TruncatedMatrix {
    pub n: usize,
    pub s: MayaSequence,
    pub truncation: usize,
    pub entries: Vec<Vec<Polynomial>>,
}

impl TruncatedMatrix {
    pub fn size(&self) -> usize {
        self.n * self.truncation
    }

    pub fn det(&self) -> Result<Polynomial> {
        det_fraction_free(&self.entries)
    }
}

pub fn build_ms(s: &MayaSequence, n: usize, truncation: usize) -> Result<TruncatedMatrix> {
    let minimum = s.min_truncation(n);
    if truncation < minimum {
        return Err(Error::TruncationTooSmall { requested: truncation, minimum });
    }
    let size = n * truncation;
    let entries = (0..size)
        .map(|l| (0..size).map(|m| matrix_entry(l, m, s, n)).collect())
        .collect();
    Ok(TruncatedMatrix { n, s: s.clone(), truncation, entries })
}

/// `H_0` as a symbolic matrix of `h[i,j,0]`.
pub fn h0_matrix(n: usize) -> Vec<Vec<Polynomial>> {
    (1..=n as u32)
        .map(|i| (1..=n as u32).map(|j| Polynomial::h(i, j, 0)).collect())
        .collect()
}

pub fn det_h0(n: usize) -> Polynomial {
    det_fraction_free(&h0_matrix(n)).expect("square")
}

/// `f_S^n` at the minimal truncation.
pub fn n_schur(s: &MayaSequence, n: usize) -> RationalFunction {
    n_schur_at(s, n, s.min_truncation(n)).expect("minimal truncation is admissible")
}

/// `f_S^n` computed at an explicit truncation `N`.
pub fn n_schur_at(s: &MayaSequence, n: usize, truncation: usize) -> Result<RationalFunction> {
    assert!(n >= 1, "block size must be positive");
    let num = build_ms(s, n, truncation)?.det()?;
    let den = det_h0(n).pow(truncation as u32);
    RationalFunction::new(num, den)
}

/// Sets `H_0 = I` (`h[i,i,0] → 1`, `h[i,j,0] → 0`) and returns the resulting
/// polynomial; the denominator must become exactly 1.
pub fn specialize_h0_identity(f: &RationalFunction, n: usize) -> Result<Polynomial> {
    let assignment: BTreeMap<Variable, Polynomial> = (1..=n as u32)
        .flat_map(|i| (1..=n as u32).map(move |j| (i, j)))
        .map(|(i, j)| {
            let v = if i == j { 1 } else { 0 };
            (Variable::h(i, j, 0), Polynomial::from_int(v))
        })
        .collect();
    let num = f.numerator().substitute_partial(&assignment);
    let den = f.denominator().substitute_partial(&assignment);
    if !den.is_one() {
        return Err(Error::DenominatorNotUnit);
    }
    Ok(num)
}

/// Memoized `f_S^n` for a fixed block size.
#[derive(Debug, Default)]
pub struct NSchurTable {
    n: usize,
    cache: HashMap<MayaSequence, RationalFunction>,
}

impl NSchurTable {
    pub fn new(n: usize) -> Self {
        NSchurTable { n, cache: HashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&mut self, s: &MayaSequence) -> &RationalFunction {
        let n = self.n;
        self.cache.entry(s.clone()).or_insert_with(|| n_schur(s, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maya::Partition;

    fn h(i: u32, j: u32, k: u32) -> Polynomial {
        Polynomial::h(i, j, k)
    }

    fn maya(v: &[i64]) -> MayaSequence {
        MayaSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn entry_examples() {
        let s = maya(&[-2]);
        assert_eq!(matrix_entry(0, 0, &s, 2), h(1, 1, 1));
        assert_eq!(matrix_entry(1, 1, &s, 2), h(2, 2, 0));
        assert!(matrix_entry(0, 1, &MayaSequence::vacuum(), 1).is_zero());
    }

    #[test]
    fn build_examples() {
        let m = build_ms(&MayaSequence::vacuum(), 1, 2).unwrap();
        assert_eq!(
            m.entries,
            vec![vec![h(1, 1, 0), Polynomial::zero()], vec![h(1, 1, 1), h(1, 1, 0)]]
        );
        let m = build_ms(&maya(&[-2]), 2, 1).unwrap();
        assert_eq!(
            m.entries,
            vec![vec![h(1, 1, 1), h(1, 2, 0)], vec![h(2, 1, 1), h(2, 2, 0)]]
        );
        assert_eq!(build_ms(&maya(&[-2]), 1, 1).unwrap().entries, vec![vec![h(1, 1, 2)]]);
        assert_eq!(
            build_ms(&maya(&[-3, -2, -1]), 2, 1).unwrap_err(),
            Error::TruncationTooSmall { requested: 1, minimum: 2 }
        );
    }

    #[test]
    fn vacuum_is_one() {
        for n in 1..=4 {
            let f = n_schur(&MayaSequence::vacuum(), n);
            assert!(f.identical(&RationalFunction::one()));
            assert_eq!(n_schur_at(&MayaSequence::vacuum(), n, 1).unwrap(), RationalFunction::one());
        }
    }

    #[test]
    fn displayed_examples() {
        let s = maya(&[-2]);
        let f1 = n_schur(&s, 1);
        assert!(f1.identical(&RationalFunction::new(h(1, 1, 2), h(1, 1, 0)).unwrap()));
        let f2 = n_schur(&s, 2);
        let num = h(1, 1, 1) * h(2, 2, 0) - h(1, 2, 0) * h(2, 1, 1);
        let den = h(1, 1, 0) * h(2, 2, 0) - h(1, 2, 0) * h(2, 1, 0);
        assert!(f2.identical(&RationalFunction::new(num, den).unwrap()));
    }

    #[test]
    fn explicit_truncations() {
        // 2x2 truncation of S=(-2,1,...) at n=1 is [[h112, 0], [h113, h110]].
        let f = n_schur_at(&maya(&[-2]), 1, 2).unwrap();
        assert_eq!(f.numerator(), &(h(1, 1, 2) * h(1, 1, 0)));
        assert_eq!(f.denominator(), &h(1, 1, 0).pow(2));
        assert_eq!(f, n_schur(&maya(&[-2]), 1));
        // S=(-1,0,2,...): [[h111, h110], [h112, h111]]
        let f = n_schur_at(&maya(&[-1, 0]), 1, 2).unwrap();
        assert_eq!(f.numerator(), &(h(1, 1, 1).pow(2) - h(1, 1, 0) * h(1, 1, 2)));
        assert_eq!(f.denominator(), &h(1, 1, 0).pow(2));
    }

    #[test]
    fn specialization_examples() {
        assert!(specialize_h0_identity(&n_schur(&MayaSequence::vacuum(), 3), 3).unwrap().is_one());
        let two = MayaSequence::from_partition(&"2".parse::<Partition>().unwrap());
        assert_eq!(specialize_h0_identity(&n_schur(&two, 1), 1).unwrap(), h(1, 1, 2));
        let one_one = MayaSequence::from_partition(&"1,1".parse::<Partition>().unwrap());
        assert_eq!(
            specialize_h0_identity(&n_schur(&one_one, 1), 1).unwrap(),
            h(1, 1, 1).pow(2) - h(1, 1, 2)
        );
        let bogus = RationalFunction::new(h(1, 1, 1), h(1, 1, 1)).unwrap();
        assert_eq!(specialize_h0_identity(&bogus, 1).unwrap_err(), Error::DenominatorNotUnit);
    }

    #[test]
    fn table_memoizes() {
        let mut t = NSchurTable::new(2);
        let s = maya(&[-2]);
        let a = t.get(&s).clone();
        assert!(a.identical(t.get(&s)));
        assert_eq!(t.n(), 2);
    }
}
