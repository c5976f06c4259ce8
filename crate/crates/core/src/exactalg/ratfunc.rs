use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Polynomial, Rational, Variable};
use crate::error::{Error, Result};

/// A quotient of polynomials, kept unreduced.
///
/// Equality is cross-multiplication: `a/b == c/d` iff `a*d == c*b`. The
/// only normalization applied is dividing both parts by the denominator's
/// leading coefficient (a constant denominator is folded into the numerator).
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let lc = den.leading_term().map(|(_, c)| c.clone()).unwrap();
        let inv = lc.recip();
        if let Some(c) = den.as_constant() {
            return Ok(RationalFunction::from(num.scale(&c.recip())));
        }
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero() -> Self {
        RationalFunction::from(Polynomial::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from(Polynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from(Polynomial::constant(c))
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value when the stored denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    /// Structural equality of the stored parts (stronger than `==`).
    pub fn identical(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Substitutes rational functions into both parts.
    pub fn substitute(&self, assignment: &BTreeMap<Variable, RationalFunction>) -> Result<Self> {
        substitute(&self.num, assignment)?.checked_div(&substitute(&self.den, assignment)?)
    }

    /// Substitutes polynomials into both parts.
    pub fn substitute_poly(&self, assignment: &BTreeMap<Variable, Polynomial>) -> Result<Self> {
        RationalFunction::new(
            self.num.substitute_poly(assignment)?,
            self.den.substitute_poly(assignment)?,
        )
    }

    /// Exact evaluation at rational values.
    pub fn evaluate(&self, values: &BTreeMap<Variable, Rational>) -> Result<Rational> {
        let d = self.den.evaluate(values)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.evaluate(values)? / d)
    }
}

/// Exact substitution of rational functions for the variables of `p`.
pub fn substitute(
    p: &Polynomial,
    assignment: &BTreeMap<Variable, RationalFunction>,
) -> Result<RationalFunction> {
    if let Some(v) = p.variables().into_iter().find(|v| !assignment.contains_key(v)) {
        return Err(Error::MissingAssignment(v));
    }
    let mut acc = RationalFunction::zero();
    for (m, c) in p.terms() {
        let mut t = RationalFunction::constant(c.clone());
        for &(v, e) in m.factors() {
            t = &t * &assignment[&v].pow(e);
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

impl From<Polynomial> for RationalFunction {
    fn from(num: Polynomial) -> Self {
        RationalFunction {
            num,
            den: Polynomial::one(),
        }
    }
}

impl From<Variable> for RationalFunction {
    fn from(v: Variable) -> Self {
        RationalFunction::from(Polynomial::var(v))
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        // when one denominator divides the other, cancel it before comparing
        if let Ok(q) = other.den.exact_div(&self.den) {
            return &self.num * &q == other.num;
        }
        if let Ok(q) = self.den.exact_div(&other.den) {
            return &other.num * &q == self.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        RationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num * &rhs.num);
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
