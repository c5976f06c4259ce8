use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An indeterminate: either a matrix-series coefficient `h[i,j,k]` or a
/// time variable `t_m`.
///
/// The derived order is the fixed variable order used by monomial
/// comparison: every `H` precedes every `T`, `H` sorts by `(k, i, j)` and
/// `T` by `m`. Field order in the `H` variant is load-bearing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    H { k: u32, i: u32, j: u32 },
    T { m: u32 },
}

impl Variable {
    /// `h[i,j,k]`, with `i`, `j` 1-based.
    pub fn h(i: u32, j: u32, k: u32) -> Self {
        assert!(i >= 1 && j >= 1, "h[i,j,k] needs 1-based row and column");
        Variable::H { k, i, j }
    }

    pub fn t(m: u32) -> Self {
        assert!(m >= 1, "time variables start at t_1");
        Variable::T { m }
    }

    /// Weight grading: `h[i,j,k]` weighs `k*n + i - j`, `t_m` weighs `m`.
    pub fn weight(&self, n: u32) -> i64 {
        match *self {
            Variable::H { k, i, j } => k as i64 * n as i64 + i as i64 - j as i64,
            Variable::T { m } => m as i64,
        }
    }

    /// z-degree of an `h` variable.
    pub fn z_degree(&self) -> Option<u32> {
        match *self {
            Variable::H { k, .. } => Some(k),
            Variable::T { .. } => None,
        }
    }

    pub fn latex(&self) -> String {
        match *self {
            Variable::H { k, i, j } => format!("h_{{{i},{j},{k}}}"),
            Variable::T { m } => format!("t_{{{m}}}"),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Variable::H { k, i, j } => write!(f, "h[{i},{j},{k}]"),
            Variable::T { m } => write!(f, "t{m}"),
        }
    }
}

impl FromStr for Variable {
    type Err = Error;

    /// Accepts `h[i,j,k]` and `tM` (also `t[M]`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a variable: {s:?}"));
        if let Some(rest) = s.strip_prefix('h') {
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let idx: Vec<u32> = inner
                .split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad())?;
            match idx[..] {
                [i, j, k] if i >= 1 && j >= 1 => Ok(Variable::h(i, j, k)),
                _ => Err(bad()),
            }
        } else if let Some(rest) = s.strip_prefix('t') {
            let rest = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .unwrap_or(rest);
            match rest.parse::<u32>() {
                Ok(m) if m >= 1 => Ok(Variable::t(m)),
                _ => Err(bad()),
            }
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_h_by_kij_then_t() {
        let mut vars = vec![
            Variable::t(2),
            Variable::h(2, 1, 0),
            Variable::t(1),
            Variable::h(1, 1, 1),
            Variable::h(1, 2, 0),
            Variable::h(1, 1, 0),
        ];
        vars.sort();
        assert_eq!(
            vars,
            vec![
                Variable::h(1, 1, 0),
                Variable::h(1, 2, 0),
                Variable::h(2, 1, 0),
                Variable::h(1, 1, 1),
                Variable::t(1),
                Variable::t(2),
            ]
        );
    }

    #[test]
    fn weights() {
        assert_eq!(Variable::h(1, 1, 2).weight(1), 2);
        assert_eq!(Variable::h(1, 2, 0).weight(2), -1);
        assert_eq!(Variable::h(2, 1, 1).weight(2), 3);
        assert_eq!(Variable::t(3).weight(7), 3);
    }

    #[test]
    fn parse_and_display() {
        for s in ["h[1,2,3]", "t4"] {
            assert_eq!(s.parse::<Variable>().unwrap().to_string(), s);
        }
        assert_eq!("t[2]".parse::<Variable>().unwrap(), Variable::t(2));
        assert!("h[0,1,1]".parse::<Variable>().is_err());
        assert!("t0".parse::<Variable>().is_err());
        assert!("x".parse::<Variable>().is_err());
    }
}
