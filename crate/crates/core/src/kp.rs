//! Time-variable specializations for KP tau functions: the exponential
//! series `exp(Σ t_i z^i)`, classical Schur polynomials through
//! Jacobi–Trudi, and tau-quotient sums `Σ_S π_S f_S^n` driven by a
//! user-supplied `Ψ^{-1}` series.
//!
//! Results are projective: the quotient is only defined up to the same
//! overall scalar as the Plücker coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactalg::{parse_rational, Polynomial, Rational, RationalFunction};
use crate::grassmann::{max_h_degree, SeriesMatrix};
use crate::maya::{parse_index, MayaSequence, Partition};
use crate::nschur::{det_cofactor, NSchurTable};

/// Time values `t_1 … t_T` (symbolic or numeric) and a z-degree cutoff `K`.
/// Times past the supplied list are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    times: Vec<Polynomial>,
    degree: usize,
}

impl TimeSeries {
    pub fn new(times: Vec<Polynomial>, degree: usize) -> Self {
        TimeSeries { times, degree }
    }

    /// `t_1 … t_count` as free variables.
    pub fn symbolic(count: usize, degree: usize) -> Self {
        TimeSeries::new((1..=count as u32).map(Polynomial::t).collect(), degree)
    }

    pub fn numeric(values: Vec<Rational>, degree: usize) -> Self {
        TimeSeries::new(values.into_iter().map(Polynomial::constant).collect(), degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn time(&self, i: usize) -> Polynomial {
        self.times.get(i - 1).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// `p_0 … p_K` with `Σ p_k z^k = exp(Σ t_i z^i)`, from the recurrence
    /// `k p_k = Σ_{i=1}^{k} i t_i p_{k-i}`.
    pub fn exp_coefficients(&self) -> Vec<Polynomial> {
        let mut p = vec![Polynomial::one()];
        for k in 1..=self.degree {
            let mut acc = Polynomial::zero();
            for i in 1..=k {
                let ti = self.time(i);
                if ti.is_zero() {
                    continue;
                }
                acc = acc + (&ti * &p[k - i]).scale(&Rational::from_integer(i.into()));
            }
            p.push(acc.scale(&Rational::new(1.into(), k.into())));
        }
        p
    }
}

/// A truncated expansion `Ψ^{-1} = Σ_{k=0}^{K} H_k z^k`. Unlike a
/// [`SeriesMatrix`] used as an exact operator, coefficients past `K` are
/// unknown, not zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiInvSeries(SeriesMatrix);

impl PsiInvSeries {
    pub fn new(series: SeriesMatrix) -> Self {
        PsiInvSeries(series)
    }

    pub fn series(&self) -> &SeriesMatrix {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    /// Either a series JSON or `{"exp":{"times":["t1","1/2"],"K":4}}`, where
    /// a time entry `"tM"` is the free variable `t_M`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let Some(exp) = v.get("exp") else {
            return Ok(PsiInvSeries(SeriesMatrix::from_json(v)?));
        };
        let bad = |m: &str| Error::Parse(format!("exp directive: {m}"));
        let degree = exp.get("K").and_then(Value::as_u64).ok_or_else(|| bad("needs integer \"K\""))?;
        let times = exp
            .get("times")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("needs \"times\" array"))?
            .iter()
            .map(|t| t.as_str().ok_or_else(|| bad("times must be strings")).and_then(parse_time))
            .collect::<Result<Vec<_>>>()?;
        Ok(exp_specialization(&TimeSeries::new(times, degree as usize)))
    }
}

/// `"t3"` is the variable `t_3`; anything else is a rational value.
pub fn parse_time(s: &str) -> Result<Polynomial> {
    let s = s.trim();
    if s.starts_with('t') {
        Ok(Polynomial::var(s.parse()?))
    } else {
        Ok(Polynomial::constant(parse_rational(s)?))
    }
}

/// The `n = 1` series `h_k = p_k(t)` of `exp(Σ t_i z^i)`.
pub fn exp_specialization(ts: &TimeSeries) -> PsiInvSeries {
    let coeffs = ts.exp_coefficients().into_iter().map(|p| vec![vec![p]]).collect();
    PsiInvSeries(SeriesMatrix::new(1, coeffs).expect("1x1 coefficients"))
}

/// `det(h_{λ_i − i + j})_{1 ≤ i,j ≤ ℓ}`, with `h_k = 0` for `k < 0`.
///
/// Evaluated by cofactor expansion so it stays independent of the
/// elimination used for `f_S^n`.
pub fn jacobi_trudi(lambda: &Partition, h: &[Polynomial]) -> Polynomial {
    let parts = lambda.parts();
    let len = parts.len() as i64;
    let matrix: Vec<Vec<Polynomial>> = (1..=len)
        .map(|i| {
            (1..=len)
                .map(|j| {
                    let k = parts[(i - 1) as usize] as i64 - i + j;
                    if k < 0 {
                        Polynomial::zero()
                    } else {
                        h.get(k as usize)
                            .unwrap_or_else(|| panic!("h_{k} not supplied"))
                            .clone()
                    }
                })
                .collect()
        })
        .collect();
    det_cofactor(&matrix).expect("square")
}

/// Classical Schur polynomial of `λ` in the time variables.
pub fn schur_polynomial(lambda: &Partition, ts: &TimeSeries) -> Polynomial {
    let need = lambda.parts().first().copied().unwrap_or(0) as usize + lambda.len();
    let ts = TimeSeries::new(ts.times.clone(), ts.degree.max(need));
    jacobi_trudi(lambda, &ts.exp_coefficients())
}

fn check_degree(f: &RationalFunction, psi: &PsiInvSeries) -> Result<()> {
    if max_h_degree(f) > psi.degree() {
        return Err(Error::InsufficientDegree(psi.degree() + 1));
    }
    Ok(())
}

/// `f_S^n` with `h[i,j,k]` replaced by the entries of `H_k` from `Ψ^{-1}`.
pub fn nschur_timed(s: &MayaSequence, psi: &PsiInvSeries) -> Result<RationalFunction> {
    nschur_timed_with(&mut NSchurTable::new(psi.n()), s, psi)
}

pub fn nschur_timed_with(
    table: &mut NSchurTable,
    s: &MayaSequence,
    psi: &PsiInvSeries,
) -> Result<RationalFunction> {
    let f = table.get(s);
    check_degree(f, psi)?;
    f.substitute_poly(&psi.0.h_assignment(psi.degree()))
}

/// `Σ_S π_S f_S^n(t)`: the quotient `τ/τ_0`. The sum runs in the key order
/// of `coeffs`; every degree is checked before any term is evaluated.
pub fn tau_quotient_expansion(
    psi: &PsiInvSeries,
    coeffs: &BTreeMap<MayaSequence, Rational>,
) -> Result<RationalFunction> {
    let mut table = NSchurTable::new(psi.n());
    for s in coeffs.keys() {
        check_degree(table.get(s), psi)?;
    }
    let mut acc = RationalFunction::zero();
    for (s, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let term = nschur_timed_with(&mut table, s, psi)?.scale(c);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Parses `{"terms":[{"partition":"2,1","coeff":"3/2"}, …]}`. The index may
/// also be a Maya prefix (`"[-2,1]"`, under either `"partition"` or
/// `"maya"`). Repeated indices are summed.
pub fn coefficients_from_json(v: &Value) -> Result<BTreeMap<MayaSequence, Rational>> {
    let bad = |m: &str| Error::Parse(format!("coefficient JSON: {m}"));
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("needs \"terms\""))?;
    let mut out: BTreeMap<MayaSequence, Rational> = BTreeMap::new();
    for t in terms {
        let index = t
            .get("partition")
            .or_else(|| t.get("maya"))
            .and_then(Value::as_str)
            .ok_or_else(|| bad("each term needs \"partition\" or \"maya\""))?;
        let coeff = t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("each term needs \"coeff\""))?;
        *out.entry(parse_index(index)?).or_insert_with(Rational::zero) += parse_rational(coeff)?;
    }
    Ok(out)
}
