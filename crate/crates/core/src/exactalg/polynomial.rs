use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Variable};
use crate::error::{Error, Result};

/// A power product, stored as `(variable, exponent)` pairs sorted by the
/// variable order with every exponent positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    vars: Vec<(Variable, u32)>,
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { vars: Vec::new(), deg: 0 }
    }

    pub fn var(v: Variable) -> Self {
        Monomial { vars: vec![(v, 1)], deg: 1 }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and dropping
    /// zero exponents.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_default() += e;
        }
        Monomial::from_sorted(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    fn from_sorted(vars: Vec<(Variable, u32)>) -> Self {
        let deg = vars.iter().map(|&(_, e)| e).sum();
        Monomial { vars, deg }
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.vars
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn weight(&self, n: u32) -> i64 {
        self.vars.iter().map(|&(v, e)| v.weight(n) * e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.vars, &other.vars);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                Ordering::Equal => {
                    out.push((a[x].0, a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Monomial { vars: out, deg: self.deg + other.deg }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.vars.len());
        let mut rest = other.vars.iter().peekable();
        for &(v, e) in &self.vars {
            match rest.peek() {
                Some(&&(w, _)) if w < v => return None,
                Some(&&(w, f)) if w == v => {
                    rest.next();
                    match e.cmp(&f) {
                        Ordering::Less => return None,
                        Ordering::Equal => {}
                        Ordering::Greater => out.push((v, e - f)),
                    }
                }
                _ => out.push((v, e)),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial { vars: out, deg: self.deg - other.deg })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent of the
    /// earliest variable where the two differ (larger exponent wins).
    fn cmp(&self, other: &Self) -> Ordering {
        let by_degree = self.deg.cmp(&other.deg);
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (a, b) = (&self.vars, &other.vars);
        for (p, q) in a.iter().zip(b.iter()) {
            if p.0 != q.0 {
                // the side holding the earlier variable has it with positive exponent
                return if p.0 < q.0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            if p.1 != q.1 {
                return p.1.cmp(&q.1);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration is in
/// ascending graded-lex order and two equal polynomials always have the
/// same stored form. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Polynomial::constant(Rational::from_integer(c.into()))
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn h(i: u32, j: u32, k: u32) -> Self {
        Polynomial::var(Variable::h(i, j, k))
    }

    pub fn t(m: u32) -> Self {
        Polynomial::var(Variable::t(m))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    fn add_term(&mut self, c: Rational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    /// The value if this is a constant (the zero polynomial counts).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in the polynomial ring.
    ///
    /// Uses leading-term reduction; if `divisor` divides `self`, every
    /// remainder's leading monomial is a multiple of the divisor's.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.checked_div(lm).ok_or(Error::NonExactDivision)?;
            let c = rc / lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(-(dc * &c), dm.mul(&m));
            }
            quot.add_term(c, m);
        }
        Ok(quot)
    }

    /// Common weight of every term under `wt(h[i,j,k]) = k*n + i - j`,
    /// `wt(t_m) = m`.
    pub fn homogeneous_weight(&self, n: u32) -> Result<i64> {
        let mut weights = self.terms.keys().map(|m| m.weight(n));
        let first = weights.next().ok_or(Error::ZeroPolynomial)?;
        if weights.all(|w| w == first) {
            Ok(first)
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    /// Substitutes polynomials for variables, leaving unassigned ones alone.
    pub fn substitute_partial(&self, assignment: &BTreeMap<Variable, Polynomial>) -> Polynomial {
        self.map_terms(|v| assignment.get(&v).cloned().unwrap_or_else(|| Polynomial::var(v)))
    }

    /// Substitutes polynomials for every variable.
    pub fn substitute_poly(&self, assignment: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        if let Some(v) = self.variables().into_iter().find(|v| !assignment.contains_key(v)) {
            return Err(Error::MissingAssignment(v));
        }
        Ok(self.substitute_partial(assignment))
    }

    /// Evaluates at rational values.
    pub fn evaluate(&self, values: &BTreeMap<Variable, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                let x = values.get(&v).ok_or(Error::MissingAssignment(v))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    fn map_terms(&self, mut image: impl FnMut(Variable) -> Polynomial) -> Polynomial {
        let mut cache: BTreeMap<Variable, Vec<Polynomial>> = BTreeMap::new();
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let powers = cache.entry(v).or_insert_with(|| vec![Polynomial::one(), image(v)]);
                while powers.len() <= e as usize {
                    let next = &powers[powers.len() - 1] * &powers[1];
                    powers.push(next);
                }
                t = &t * &powers[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(c * d, m.mul(n));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| a + b)
    }
}
