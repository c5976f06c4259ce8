//! Exact coefficient arithmetic: rationals, sparse multivariate polynomials
//! in the `h[i,j,k]` and `t_m` variables, and unreduced rational functions.

mod format;
mod polynomial;
mod ratfunc;
mod variable;

pub use format::{
    poly_from_json, poly_latex, poly_text, poly_to_json, ratfunc_from_json, ratfunc_latex,
    ratfunc_text, ratfunc_to_json,
};
pub use polynomial::{Monomial, Polynomial};
pub use ratfunc::{substitute, RationalFunction};
pub use variable::Variable;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |x: &str| {
        x.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (parse_int(n)?, parse_int(d)?);
            if num_traits::Zero::is_zero(&d) {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Weight of a single variable for block size `n`.
pub fn weight(v: Variable, n: u32) -> i64 {
    v.weight(n)
}
