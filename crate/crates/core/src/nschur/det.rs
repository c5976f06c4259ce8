//! Determinants over exact integral domains.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{Polynomial, Rational};

/// The ring operations fraction-free elimination needs.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, failing unless the division is exact.
    fn exact_div(&self, rhs: &Self) -> Result<Self>;
    /// Rough cost of using this element as a pivot.
    fn size_hint(&self) -> usize {
        1
    }
}

impl ExactRing for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        Polynomial::exact_div(self, rhs)
    }
    fn size_hint(&self) -> usize {
        self.len()
    }
}

impl ExactRing for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    match m.iter().find(|row| row.len() != n) {
        Some(row) => Err(Error::NotSquare { rows: n, cols: row.len() }),
        None => Ok(n),
    }
}

/// Bareiss fraction-free elimination. Every division is exact; the
/// empty matrix has determinant 1.
///
/// Pivots are chosen by full pivoting: the nonzero entry with the fewest
/// terms, ties broken by the Markowitz count of its row and column. This
/// keeps the intermediate minors small on the sparse banded matrices this
/// crate produces.
pub fn det_fraction_free<R: ExactRing>(m: &[Vec<R>]) -> Result<R> {
    let size = check_square(m)?;
    if size == 0 {
        return Ok(R::one());
    }
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..size {
        let Some((pr, pc)) = choose_pivot(&a, k) else {
            return Ok(R::zero());
        };
        if pr != k {
            a.swap(k, pr);
            negate = !negate;
        }
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
            negate = !negate;
        }
        if k == size - 1 {
            break;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..size {
                let mut v = if row[j].is_zero() { R::zero() } else { pivot.mul(&row[j]) };
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = v.sub(&lead.mul(&pivot_row[j]));
                }
                row[j] = if v.is_zero() { v } else { v.exact_div(&prev)? };
            }
            row[k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[size - 1][size - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

fn choose_pivot<R: ExactRing>(a: &[Vec<R>], k: usize) -> Option<(usize, usize)> {
    let size = a.len();
    let row_nnz: Vec<usize> = (k..size)
        .map(|i| (k..size).filter(|&j| !a[i][j].is_zero()).count())
        .collect();
    let col_nnz: Vec<usize> = (k..size)
        .map(|j| (k..size).filter(|&i| !a[i][j].is_zero()).count())
        .collect();
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for i in k..size {
        for j in k..size {
            if a[i][j].is_zero() {
                continue;
            }
            let key = (
                a[i][j].size_hint(),
                (row_nnz[i - k] - 1) * (col_nnz[j - k] - 1),
            );
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.map(|(_, at)| at)
}

/// Laplace expansion along the first row, skipping zero entries.
/// Exponential cost; kept as an independent check for small matrices.
pub fn det_cofactor<R: ExactRing>(m: &[Vec<R>]) -> Result<R> {
    let size = check_square(m)?;
    let cols: Vec<usize> = (0..size).collect();
    Ok(cofactor_rec(m, 0, &cols))
}

fn cofactor_rec<R: ExactRing>(m: &[Vec<R>], row: usize, cols: &[usize]) -> R {
    if cols.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&cofactor_rec(m, row + 1, &rest));
        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational;

    fn h(i: u32, j: u32, k: u32) -> Polynomial {
        Polynomial::h(i, j, k)
    }

    #[test]
    fn one_by_one() {
        let m = vec![vec![h(1, 1, 0)]];
        assert_eq!(det_fraction_free(&m).unwrap(), h(1, 1, 0));
    }

    #[test]
    fn two_by_two_block() {
        let m = vec![vec![h(1, 1, 1), h(1, 2, 0)], vec![h(2, 1, 1), h(2, 2, 0)]];
        let expected = h(1, 1, 1) * h(2, 2, 0) - h(1, 2, 0) * h(2, 1, 1);
        assert_eq!(det_fraction_free(&m).unwrap(), expected);
        assert_eq!(det_cofactor(&m).unwrap(), expected);
    }

    #[test]
    fn repeated_row_vanishes() {
        let r = vec![h(1, 1, 0), h(1, 1, 1), h(2, 2, 3)];
        let m = vec![r.clone(), vec![h(3, 1, 0), Polynomial::one(), h(1, 2, 2)], r];
        assert!(det_fraction_free(&m).unwrap().is_zero());
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let q = |n| rational(n, 1);
        let m = vec![
            vec![q(0), q(2), q(1)],
            vec![q(3), q(0), q(1)],
            vec![q(1), q(1), q(0)],
        ];
        // 0*(0-1) - 2*(0-1) + 1*(3-0) = 5
        assert_eq!(det_fraction_free(&m).unwrap(), q(5));
        assert_eq!(det_cofactor(&m).unwrap(), q(5));
    }

    #[test]
    fn empty_and_nonsquare() {
        let empty: Vec<Vec<Rational>> = vec![];
        assert_eq!(det_fraction_free(&empty).unwrap(), rational(1, 1));
        let bad = vec![vec![rational(1, 1), rational(2, 1)]];
        assert!(matches!(det_fraction_free(&bad), Err(Error::NotSquare { .. })));
    }
}
