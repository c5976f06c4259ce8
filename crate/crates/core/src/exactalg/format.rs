//! Text, LaTeX and JSON renderings of polynomials and rational functions.
//!
//! JSON shape:
//!
//! ```text
//! {"terms":[{"coeff":"p/q","monomial":[["h",i,j,k,exp],["t",m,exp]]}, ...]}
//! ```
//!
//! with terms in ascending canonical order. A rational function is
//! `{"num":<poly>,"den":<poly>}`. Rendering then parsing reproduces the
//! identical stored value.

use std::fmt::{self, Write};

use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::{parse_rational, Monomial, Polynomial, Rational, RationalFunction, Variable};
use crate::error::{Error, Result};

fn monomial_text(m: &Monomial) -> String {
    m.factors()
        .iter()
        .map(|&(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Human-readable form, e.g. `h[1,1,1]*h[2,2,0] - h[1,2,0]*h[2,1,1]`.
pub fn poly_text(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            write!(out, "{abs}").unwrap();
        } else if abs.is_one() {
            out.push_str(&monomial_text(m));
        } else {
            write!(out, "{abs}*{}", monomial_text(m)).unwrap();
        }
    }
    out
}

pub fn ratfunc_text(f: &RationalFunction) -> String {
    if let Some(p) = f.as_polynomial() {
        return poly_text(p);
    }
    let wrap = |p: &Polynomial| {
        if p.len() > 1 {
            format!("({})", poly_text(p))
        } else {
            poly_text(p)
        }
    };
    format!("{} / {}", wrap(f.numerator()), wrap(f.denominator()))
}

fn rational_latex(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_text(self))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ratfunc_text(self))
    }
}

pub fn poly_latex(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = m
            .factors()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    v.latex()
                } else {
                    format!("{}^{{{e}}}", v.latex())
                }
            })
            .collect::<Vec<_>>()
            .join(" ");
        if m.is_one() {
            out.push_str(&rational_latex(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            write!(out, "{} {mono}", rational_latex(&abs)).unwrap();
        }
    }
    out
}

pub fn ratfunc_latex(f: &RationalFunction) -> String {
    match f.as_polynomial() {
        Some(p) => poly_latex(p),
        None => format!(
            "\\frac{{{}}}{{{}}}",
            poly_latex(f.numerator()),
            poly_latex(f.denominator())
        ),
    }
}

pub fn poly_to_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mono: Vec<Value> = m
                .factors()
                .iter()
                .map(|&(v, e)| match v {
                    Variable::H { k, i, j } => json!(["h", i, j, k, e]),
                    Variable::T { m } => json!(["t", m, e]),
                })
                .collect();
            json!({"coeff": c.to_string(), "monomial": mono})
        })
        .collect();
    json!({ "terms": terms })
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("malformed polynomial JSON: {what}"))
}

fn as_u32(v: &Value) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| bad("expected a non-negative integer"))
}

pub fn poly_from_json(v: &Value) -> Result<Polynomial> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing \"coeff\" string"))?;
        let coeff = parse_rational(coeff)?;
        let mono = t
            .get("monomial")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"monomial\" array"))?;
        let mut pairs = Vec::with_capacity(mono.len());
        for f in mono {
            let f = f.as_array().ok_or_else(|| bad("factor is not an array"))?;
            let pair = match (f.first().and_then(Value::as_str), f.len()) {
                (Some("h"), 5) => {
                    let (i, j, k) = (as_u32(&f[1])?, as_u32(&f[2])?, as_u32(&f[3])?);
                    if i == 0 || j == 0 {
                        return Err(bad("h indices are 1-based"));
                    }
                    (Variable::h(i, j, k), as_u32(&f[4])?)
                }
                (Some("t"), 3) => {
                    let m = as_u32(&f[1])?;
                    if m == 0 {
                        return Err(bad("t indices start at 1"));
                    }
                    (Variable::t(m), as_u32(&f[2])?)
                }
                _ => return Err(bad("unknown factor")),
            };
            pairs.push(pair);
        }
        out.push((coeff, Monomial::from_pairs(pairs)));
    }
    Ok(Polynomial::from_terms(out))
}

pub fn ratfunc_to_json(f: &RationalFunction) -> Value {
    json!({"num": poly_to_json(f.numerator()), "den": poly_to_json(f.denominator())})
}

pub fn ratfunc_from_json(v: &Value) -> Result<RationalFunction> {
    let num = poly_from_json(v.get("num").ok_or_else(|| bad("missing \"num\""))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| bad("missing \"den\""))?)?;
    RationalFunction::new(num, den)
}
