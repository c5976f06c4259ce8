//! Finitely supported points of `Gr^n`, their Plücker coordinates, the
//! action of a matrix series `g = Σ H_k z^k` on the frame bundle, and the
//! expansion `<0|g|W> = Σ_S <S|W> f_S^n`.
//!
//! Basis bookkeeping: `e_i = z^{⌊i/n⌋} e_{i mod n}` for `i ∈ ℤ`; nonnegative
//! indices span `H_+`. A [`FinitePoint`] has admissible basis
//! `w_m = Σ_{i=-d}^{r-1} B[i][m] e_i` for `m < r` and `w_m = e_m` beyond.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Polynomial, Rational, RationalFunction, Variable};
use crate::maya::MayaSequence;
use crate::nschur::{det_fraction_free, NSchurTable};

/// A point `W` given by a `(d + r) × r` block over rows `-d … r-1`, with the
/// identity tail `w_m = e_m` for `m ≥ r`.
#[derive(Debug, Clone, PartialEq)]
pub struct FinitePoint {
    n: usize,
    depth: usize,
    width: usize,
    block: Vec<Vec<Rational>>,
}

impl FinitePoint {
    pub fn new(n: usize, depth: usize, width: usize, block: Vec<Vec<Rational>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPoint("block size n must be positive".into()));
        }
        if block.len() != depth + width || block.iter().any(|row| row.len() != width) {
            return Err(Error::InvalidPoint(format!(
                "B must be {}x{width}",
                depth + width
            )));
        }
        if rank(&block) != width {
            return Err(Error::InvalidPoint("B does not have full column rank".into()));
        }
        Ok(FinitePoint { n, depth, width, block })
    }

    /// `W = H_+` with the identity basis.
    pub fn identity(n: usize) -> Self {
        FinitePoint { n, depth: 0, width: 0, block: Vec::new() }
    }

    /// The coordinate point `W_S` spanned by `e_{s_0}, e_{s_1}, …`.
    pub fn coordinate(n: usize, s: &MayaSequence) -> Self {
        let width = s.prefix().len();
        let depth = s.prefix().first().map_or(0, |&s0| (-s0).max(0) as usize);
        let mut block = vec![vec![Rational::zero(); width]; depth + width];
        for (m, &sm) in s.prefix().iter().enumerate() {
            block[(sm + depth as i64) as usize][m] = Rational::one();
        }
        FinitePoint { n, depth, width, block }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Rows `-d … r-1` of the perturbation block.
    pub fn block(&self) -> &[Vec<Rational>] {
        &self.block
    }

    /// Coefficient of `e_i` in `w_m`.
    pub fn entry(&self, i: i64, m: usize) -> Rational {
        if m >= self.width {
            return if i == m as i64 { Rational::one() } else { Rational::zero() };
        }
        let row = i + self.depth as i64;
        if row < 0 || row as usize >= self.block.len() {
            return Rational::zero();
        }
        self.block[row as usize][m].clone()
    }

    /// Rescales column `m` of the basis by `c`.
    pub fn scale_column(&self, m: usize, c: &Rational) -> Result<Self> {
        let mut block = self.block.clone();
        for row in &mut block {
            row[m] = &row[m] * c;
        }
        FinitePoint::new(self.n, self.depth, self.width, block)
    }

    pub fn max_denominator(&self) -> num_bigint::BigInt {
        self.block
            .iter()
            .flatten()
            .map(|q| q.denom().clone())
            .max()
            .unwrap_or_else(num_bigint::BigInt::one)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .block
            .iter()
            .map(|row| row.iter().map(Rational::to_string).collect())
            .collect();
        json!({"n": self.n, "d": self.depth, "r": self.width, "B": rows})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("point JSON needs integer {k:?}")))
        };
        let (n, depth, width) = (field("n")?, field("d")?, field("r")?);
        let rows = v
            .get("B")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("point JSON needs \"B\"".into()))?;
        let block = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("B rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .ok_or_else(|| Error::Parse("B entries must be strings".into()))
                            .and_then(parse_rational)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FinitePoint::new(n, depth, width, block)
    }
}

fn rank(m: &[Vec<Rational>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let t = &f * &a[r][j];
                a[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// All `r`-subsets of `lo..=hi` in lexicographic order.
fn subsets(lo: i64, hi: i64, r: usize) -> Vec<Vec<i64>> {
    fn rec(start: i64, hi: i64, r: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let need = (r - cur.len()) as i64;
        for x in start..=hi - need + 1 {
            cur.push(x);
            rec(x + 1, hi, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lo, hi, r, &mut Vec::new(), &mut out);
    out
}

/// `<S|W>`: the `r × r` minor of `B` on rows `s_0 … s_{r-1}`, or zero when
/// `S` leaves the band `-d … r-1` or disagrees with the identity tail.
pub fn pluecker_coord(w: &FinitePoint, s: &MayaSequence) -> Rational {
    if s.prefix().len() > w.width {
        return Rational::zero();
    }
    let rows = s.head(w.width);
    if rows.iter().any(|&i| i < -(w.depth as i64)) {
        return Rational::zero();
    }
    let minor: Vec<Vec<Rational>> = rows
        .iter()
        .map(|&i| w.block[(i + w.depth as i64) as usize].clone())
        .collect();
    det_fraction_free(&minor).expect("square minor")
}

/// Every `(S, <S|W>)` with a nonzero coordinate, in lexicographic order of
/// the row sets.
pub fn pluecker_coordinates(w: &FinitePoint) -> Vec<(MayaSequence, Rational)> {
    subsets(-(w.depth as i64), w.width as i64 - 1, w.width)
        .into_iter()
        .filter_map(|rows| {
            let s = MayaSequence::new(rows).expect("sorted subset of the band");
            let c = pluecker_coord(w, &s);
            (!c.is_zero()).then_some((s, c))
        })
        .collect()
}

pub fn pluecker_support(w: &FinitePoint) -> Vec<MayaSequence> {
    pluecker_coordinates(w).into_iter().map(|(s, _)| s).collect()
}

/// `g = Σ_{k=0}^{K} H_k z^k` with `n × n` coefficient matrices whose entries
/// are polynomials: numeric when every entry is a constant, symbolic otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix {
    n: usize,
    coeffs: Vec<Vec<Vec<Polynomial>>>,
}

impl SeriesMatrix {
    pub fn new(n: usize, coeffs: Vec<Vec<Vec<Polynomial>>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSeries("block size n must be positive".into()));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidSeries("at least H_0 is required".into()));
        }
        if coeffs.iter().any(|h| h.len() != n || h.iter().any(|row| row.len() != n)) {
            return Err(Error::InvalidSeries(format!("every H_k must be {n}x{n}")));
        }
        Ok(SeriesMatrix { n, coeffs })
    }

    pub fn numeric(n: usize, coeffs: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let coeffs = coeffs
            .into_iter()
            .map(|h| {
                h.into_iter()
                    .map(|row| row.into_iter().map(Polynomial::constant).collect())
                    .collect()
            })
            .collect();
        SeriesMatrix::new(n, coeffs)
    }

    /// The generic series with `H_k[i][j] = h[i,j,k]` for `k ≤ degree`.
    pub fn symbolic(n: usize, degree: usize) -> Self {
        let coeffs = (0..=degree as u32)
            .map(|k| {
                (1..=n as u32)
                    .map(|i| (1..=n as u32).map(|j| Polynomial::h(i, j, k)).collect())
                    .collect()
            })
            .collect();
        SeriesMatrix { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The cutoff `K`.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> Option<&Vec<Vec<Polynomial>>> {
        self.coeffs.get(k)
    }

    /// Entry `(i, j)` (1-based) of `H_k`; zero past the cutoff.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> Polynomial {
        self.coeffs
            .get(k)
            .map_or_else(Polynomial::zero, |h| h[i - 1][j - 1].clone())
    }

    pub fn is_numeric(&self) -> bool {
        self.coeffs.iter().flatten().flatten().all(|p| p.as_constant().is_some())
    }

    pub fn truncate(&self, degree: usize) -> SeriesMatrix {
        SeriesMatrix {
            n: self.n,
            coeffs: self.coeffs.iter().take(degree + 1).cloned().collect(),
        }
    }

    pub fn det_h0(&self) -> Polynomial {
        det_fraction_free(&self.coeffs[0]).expect("square")
    }

    /// `h[i,j,k] ↦ (H_k)_{ij}` for all `k ≤ max_k`; coefficients past the
    /// cutoff map to zero.
    pub fn h_assignment(&self, max_k: usize) -> BTreeMap<Variable, Polynomial> {
        let n = self.n as u32;
        (0..=max_k as u32)
            .flat_map(|k| (1..=n).flat_map(move |i| (1..=n).map(move |j| (i, j, k))))
            .map(|(i, j, k)| {
                (Variable::h(i, j, k), self.entry(i as usize, j as usize, k as usize))
            })
            .collect()
    }

    /// The numeric values of [`Self::h_assignment`], if every entry is constant.
    pub fn h_values(&self, max_k: usize) -> Option<BTreeMap<Variable, Rational>> {
        self.h_assignment(max_k)
            .into_iter()
            .map(|(v, p)| p.as_constant().map(|c| (v, c)))
            .collect()
    }

    pub fn max_denominator(&self) -> num_bigint::BigInt {
        self.coeffs
            .iter()
            .flatten()
            .flatten()
            .flat_map(|p| p.terms().map(|(_, c)| c.denom().clone()).collect::<Vec<_>>())
            .max()
            .unwrap_or_else(num_bigint::BigInt::one)
    }

    pub fn to_json(&self) -> Value {
        let h: Vec<Vec<Vec<String>>> = self
            .coeffs
            .iter()
            .map(|hk| {
                hk.iter()
                    .map(|row| row.iter().map(entry_to_string).collect())
                    .collect()
            })
            .collect();
        json!({"n": self.n, "K": self.degree(), "H": h})
    }

    /// Entries are rational strings (`"1/3"`) or single variables
    /// (`"h[1,2,0]"`, `"t1"`).
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("series JSON: {m}"));
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("needs integer \"n\""))? as usize;
        let h = v.get("H").and_then(Value::as_array).ok_or_else(|| bad("needs \"H\""))?;
        let coeffs = h
            .iter()
            .map(|hk| {
                hk.as_array()
                    .ok_or_else(|| bad("H_k must be an array"))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| bad("rows must be arrays"))?
                            .iter()
                            .map(|x| x.as_str().ok_or_else(|| bad("entries must be strings")).and_then(parse_entry))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let series = SeriesMatrix::new(n, coeffs)?;
        if let Some(k) = v.get("K").and_then(Value::as_u64) {
            if k as usize != series.degree() {
                return Err(bad("\"K\" does not match the number of H_k"));
            }
        }
        Ok(series)
    }
}

fn entry_to_string(p: &Polynomial) -> String {
    match p.as_constant() {
        Some(c) => c.to_string(),
        None => crate::exactalg::poly_text(p),
    }
}

fn parse_entry(s: &str) -> Result<Polynomial> {
    let t = s.trim();
    if t.starts_with('h') || t.starts_with('t') {
        Ok(Polynomial::var(t.parse()?))
    } else {
        Ok(Polynomial::constant(parse_rational(t)?))
    }
}

fn block_of(i: i64, n: usize) -> i64 {
    i.div_euclid(n as i64)
}

/// Coefficient of `e_row` in `g · e_col`.
pub fn action_entry(g: &SeriesMatrix, row: i64, col: i64) -> Polynomial {
    let n = g.n;
    let k = block_of(row, n) - block_of(col, n);
    if k < 0 || k as usize > g.degree() {
        return Polynomial::zero();
    }
    let i = row.rem_euclid(n as i64) as usize + 1;
    let j = col.rem_euclid(n as i64) as usize + 1;
    g.entry(i, j, k as usize)
}

/// The matrix of `g` on rows `rows` and columns `cols` of the basis `e_i`.
pub fn action_block(
    g: &SeriesMatrix,
    rows: std::ops::Range<i64>,
    cols: std::ops::Range<i64>,
) -> Vec<Vec<Polynomial>> {
    rows.map(|r| cols.clone().map(|c| action_entry(g, r, c)).collect())
        .collect()
}

/// `T × T` matrix of `g` on `e_0 … e_{T-1}`.
pub fn action_matrix(g: &SeriesMatrix, size: usize) -> Vec<Vec<Polynomial>> {
    action_block(g, 0..size as i64, 0..size as i64)
}

/// The compression `a` of `g` to `H_+`, truncated to `T × T`. Multiplication
/// by a series in nonnegative powers of `z` never maps `H_+` into `H_-`, so
/// `a` is the action matrix on nonnegative indices.
pub fn plus_block(g: &SeriesMatrix, size: usize) -> Result<Vec<Vec<Polynomial>>> {
    if g.is_numeric() && g.det_h0().is_zero() {
        return Err(Error::SingularA);
    }
    Ok(action_matrix(g, size))
}

fn numeric_matrix(m: Vec<Vec<Polynomial>>) -> Vec<Vec<Rational>> {
    m.into_iter()
        .map(|row| row.into_iter().map(|p| p.as_constant().expect("numeric series")).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&t| !row[t].is_zero() && !b[t][j].is_zero())
                        .fold(Rational::zero(), |acc, t| acc + &row[t] * &b[t][j])
                })
                .collect()
        })
        .collect()
}

fn invert_small(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let size = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..size).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for c in 0..size {
        let p = (c..size).find(|&i| !a[i][c].is_zero()).ok_or(Error::SingularA)?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..size {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..2 * size {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[size..].to_vec()).collect())
}

/// Inverse of the block lower-triangular truncation of `a` by block
/// forward substitution; `size` must be a multiple of `n`.
fn plus_block_inverse(g: &SeriesMatrix, size: usize) -> Result<Vec<Vec<Rational>>> {
    let n = g.n;
    let blocks = size / n;
    let a = numeric_matrix(plus_block(g, size)?);
    let h0_inv = invert_small(&numeric_matrix(g.coeffs[0].clone()))?;
    let sub = |b: usize, c: usize| -> Vec<Vec<Rational>> {
        (0..n).map(|i| a[b * n + i][c * n..c * n + n].to_vec()).collect()
    };
    // inv[b][c] for c ≤ b
    let mut inv: Vec<Vec<Option<Vec<Vec<Rational>>>>> = vec![vec![None; blocks]; blocks];
    for c in 0..blocks {
        inv[c][c] = Some(h0_inv.clone());
        for b in c + 1..blocks {
            let mut acc = vec![vec![Rational::zero(); n]; n];
            for e in c..b {
                let prod = mat_mul(&sub(b, e), inv[e][c].as_ref().unwrap());
                for i in 0..n {
                    for j in 0..n {
                        acc[i][j] += &prod[i][j];
                    }
                }
            }
            let blk = mat_mul(&h0_inv, &acc);
            inv[b][c] = Some(blk.into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect());
        }
    }
    let mut out = vec![vec![Rational::zero(); size]; size];
    for (b, row) in inv.iter().enumerate() {
        for (c, blk) in row.iter().enumerate() {
            if let Some(blk) = blk {
                for i in 0..n {
                    for j in 0..n {
                        out[b * n + i][c * n + j] = blk[i][j].clone();
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Top-left `T × T` block of `g · w` restricted to nonnegative rows.
fn gw_block(g: &SeriesMatrix, w: &FinitePoint, size: usize) -> Vec<Vec<Polynomial>> {
    let lo = -(w.depth as i64);
    let basis: Vec<Vec<Rational>> = (lo..size as i64)
        .map(|i| (0..size).map(|m| w.entry(i, m)).collect())
        .collect();
    let g_rows = action_block(g, 0..size as i64, lo..size as i64);
    g_rows
        .iter()
        .map(|grow| {
            (0..size)
                .map(|m| {
                    let mut acc = Polynomial::zero();
                    for (t, gv) in grow.iter().enumerate() {
                        let b = &basis[t][m];
                        if !gv.is_zero() && !b.is_zero() {
                            acc = acc + gv.scale(b);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `det` of the top-left `T × T` block of `g · w · a^{-1}` for a numeric
/// series. `T` must be a positive multiple of `n`.
pub fn frame_det_at(g: &SeriesMatrix, w: &FinitePoint, size: usize) -> Result<Rational> {
    if !g.is_numeric() {
        return Err(Error::InvalidSeries("frame_det needs a numeric series".into()));
    }
    if g.n != w.n {
        return Err(Error::InvalidSeries(format!("series has n={}, point has n={}", g.n, w.n)));
    }
    assert!(size > 0 && size.is_multiple_of(g.n), "truncation must be a positive multiple of n");
    let a_inv = plus_block_inverse(g, size)?;
    let gw = numeric_matrix(gw_block(g, w, size));
    det_fraction_free(&mat_mul(&gw, &a_inv))
}

/// A frame determinant together with the truncation it stabilized at.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameDet<V> {
    pub value: V,
    pub truncation: usize,
}

/// Upper bound `n·(⌈(d+r)/n⌉ + K + 1)` on the truncation needed.
pub fn stabilization_bound(g: &SeriesMatrix, w: &FinitePoint) -> usize {
    let n = g.n;
    n * ((w.depth + w.width).div_ceil(n) + g.degree() + 1)
}

fn first_truncation(g: &SeriesMatrix, w: &FinitePoint) -> usize {
    g.n * w.width.div_ceil(g.n).max(1)
}

fn stabilize<V: PartialEq>(
    g: &SeriesMatrix,
    w: &FinitePoint,
    mut at: impl FnMut(usize) -> Result<V>,
) -> Result<FrameDet<V>> {
    let bound = stabilization_bound(g, w);
    let mut size = first_truncation(g, w);
    let mut value = at(size)?;
    while size <= bound {
        let next = at(size + g.n)?;
        if next == value {
            return Ok(FrameDet { value, truncation: size });
        }
        value = next;
        size += g.n;
    }
    Err(Error::NotStabilized { bound })
}

/// `<0|g|W>` for a numeric series: the truncated determinant, certified by
/// two consecutive truncations agreeing.
pub fn frame_det(g: &SeriesMatrix, w: &FinitePoint) -> Result<FrameDet<Rational>> {
    if g.is_numeric() && g.det_h0().is_zero() {
        return Err(Error::SingularA);
    }
    stabilize(g, w, |size| frame_det_at(g, w, size))
}

/// Symbolic `<0|g|W>` as `det(g·w)_T / det(a)_T`. Restricted to
/// `d, r, K ≤ 2`.
pub fn frame_det_symbolic(g: &SeriesMatrix, w: &FinitePoint) -> Result<FrameDet<RationalFunction>> {
    if w.depth > 2 || w.width > 2 || g.degree() > 2 {
        return Err(Error::InvalidSeries(
            "symbolic frame determinant is limited to d, r, K <= 2".into(),
        ));
    }
    if g.n != w.n {
        return Err(Error::InvalidSeries(format!("series has n={}, point has n={}", g.n, w.n)));
    }
    stabilize(g, w, |size| {
        let num = det_fraction_free(&gw_block(g, w, size))?;
        let den = det_fraction_free(&action_matrix(g, size))?;
        RationalFunction::new(num, den)
    })
}

/// Largest z-degree among the variables of `f`.
pub(crate) fn max_h_degree(f: &RationalFunction) -> usize {
    f.numerator()
        .variables()
        .into_iter()
        .chain(f.denominator().variables())
        .filter_map(|v| v.z_degree())
        .max()
        .unwrap_or(0) as usize
}

/// `f_S^n` with `g` substituted for the `h` variables.
fn specialize(f: &RationalFunction, g: &SeriesMatrix) -> Result<RationalFunction> {
    let max_k = max_h_degree(f);
    match g.h_values(max_k) {
        Some(values) => Ok(RationalFunction::constant(f.evaluate(&values)?)),
        None => f.substitute_poly(&g.h_assignment(max_k)),
    }
}

/// `Σ_S <S|W> f_S^n(g)`, summed in the order of [`pluecker_coordinates`].
pub fn expand(g: &SeriesMatrix, w: &FinitePoint) -> Result<RationalFunction> {
    expand_with(&mut NSchurTable::new(g.n), g, w)
}

pub fn expand_with(table: &mut NSchurTable, g: &SeriesMatrix, w: &FinitePoint) -> Result<RationalFunction> {
    if g.n != w.n || table.n() != g.n {
        return Err(Error::InvalidSeries("block sizes of series, point and table differ".into()));
    }
    if g.is_numeric() && g.det_h0().is_zero() {
        return Err(Error::SingularA);
    }
    let mut acc = RationalFunction::zero();
    for (s, c) in pluecker_coordinates(w) {
        let term = specialize(table.get(&s), g)?.scale(&c);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Both sides of `<0|g|W> = Σ_S <S|W> f_S^n`.
#[derive(Debug, Clone)]
pub struct ExpansionReport<V> {
    pub lhs: V,
    pub rhs: V,
    pub support: Vec<MayaSequence>,
    pub truncation: usize,
    pub stabilized: bool,
    pub pass: bool,
}

pub fn verify_theorem(g: &SeriesMatrix, w: &FinitePoint) -> Result<ExpansionReport<Rational>> {
    verify_theorem_with(&mut NSchurTable::new(g.n), g, w)
}

pub fn verify_theorem_with(
    table: &mut NSchurTable,
    g: &SeriesMatrix,
    w: &FinitePoint,
) -> Result<ExpansionReport<Rational>> {
    if !g.is_numeric() {
        return Err(Error::InvalidSeries("numeric verification needs a numeric series".into()));
    }
    let lhs = frame_det(g, w)?;
    let rhs = expand_with(table, g, w)?
        .as_constant()
        .expect("numeric expansion is constant");
    Ok(ExpansionReport {
        pass: lhs.value == rhs,
        lhs: lhs.value,
        rhs,
        support: pluecker_support(w),
        truncation: lhs.truncation,
        stabilized: true,
    })
}

/// Symbolic variant, gated like [`frame_det_symbolic`].
pub fn verify_theorem_symbolic(
    g: &SeriesMatrix,
    w: &FinitePoint,
) -> Result<ExpansionReport<RationalFunction>> {
    let lhs = frame_det_symbolic(g, w)?;
    let rhs = expand(g, w)?;
    Ok(ExpansionReport {
        pass: lhs.value == rhs,
        lhs: lhs.value,
        rhs,
        support: pluecker_support(w),
        truncation: lhs.truncation,
        stabilized: true,
    })
}

fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num.into(), den.into())
}

/// Numeric series with entries `p/q`, `|p|, q ≤ bound`, and `det H_0 ≠ 0`.
pub fn random_series<R: Rng>(rng: &mut R, n: usize, degree: usize, bound: i64) -> SeriesMatrix {
    loop {
        let coeffs = (0..=degree)
            .map(|_| {
                (0..n)
                    .map(|_| (0..n).map(|_| random_rational(rng, bound)).collect())
                    .collect()
            })
            .collect();
        let g = SeriesMatrix::numeric(n, coeffs).expect("well-formed");
        if !g.det_h0().is_zero() {
            return g;
        }
    }
}

/// Random point with full-rank `(d + r) × r` block.
pub fn random_point<R: Rng>(rng: &mut R, n: usize, depth: usize, width: usize, bound: i64) -> FinitePoint {
    loop {
        let block = (0..depth + width)
            .map(|_| (0..width).map(|_| random_rational(rng, bound)).collect())
            .collect();
        if let Ok(w) = FinitePoint::new(n, depth, width, block) {
            return w;
        }
    }
}
