//! Maya sequences (strictly increasing integer sequences that eventually
//! equal their index) and their bijection with integer partitions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer partition `λ_1 ≥ λ_2 ≥ … ≥ λ_ℓ > 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `w` in ascending lexicographic order.
    pub fn all_of(w: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(w, w, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"2,1,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))?;
        Partition::new(parts)
    }
}

/// An element `S = (s_0, s_1, …)` of the index set, stored as its minimal
/// prefix: `s_j = j` for every `j` past the stored entries, and the last
/// stored entry never equals its index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MayaSequence {
    prefix: Vec<i64>,
}

impl MayaSequence {
    /// The vacuum `0 = (0, 1, 2, …)`.
    pub fn vacuum() -> Self {
        MayaSequence::default()
    }

    /// Validates a finite head `(s_0, …, s_J)` followed by the identity
    /// tail, trimming trailing entries with `s_j = j`.
    pub fn new(head: Vec<i64>) -> Result<Self> {
        if head.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMaya(format!("{head:?} is not strictly increasing")));
        }
        if let Some(&last) = head.last() {
            if last > head.len() as i64 - 1 {
                return Err(Error::InvalidMaya(format!(
                    "{head:?} cannot continue with s_j = j"
                )));
            }
        }
        let mut prefix = head;
        while let Some(&last) = prefix.last() {
            if last == prefix.len() as i64 - 1 {
                prefix.pop();
            } else {
                break;
            }
        }
        Ok(MayaSequence { prefix })
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    /// `s_j` for any `j ≥ 0`.
    pub fn get(&self, j: usize) -> i64 {
        self.prefix.get(j).copied().unwrap_or(j as i64)
    }

    /// The first `r` entries.
    pub fn head(&self, r: usize) -> Vec<i64> {
        (0..r).map(|j| self.get(j)).collect()
    }

    pub fn is_vacuum(&self) -> bool {
        self.prefix.is_empty()
    }

    pub fn from_partition(lambda: &Partition) -> Self {
        let prefix = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &p)| j as i64 - p as i64)
            .collect();
        MayaSequence { prefix }
    }

    pub fn to_partition(&self) -> Partition {
        Partition(
            self.prefix
                .iter()
                .enumerate()
                .map(|(j, &s)| (j as i64 - s) as u32)
                .collect(),
        )
    }

    /// `Σ_j (j − s_j)`, equal to the size of the corresponding partition.
    pub fn weight(&self) -> u64 {
        self.prefix
            .iter()
            .enumerate()
            .map(|(j, &s)| (j as i64 - s) as u64)
            .sum()
    }

    /// Smallest `N` with `s_i = i` for every `i ≥ N·n`.
    pub fn min_truncation(&self, n: usize) -> usize {
        assert!(n >= 1, "block size must be positive");
        self.prefix.len().div_ceil(n)
    }

    /// Every sequence of weight `w`, ordered lexicographically by partition.
    pub fn enumerate_by_weight(w: u32) -> Vec<MayaSequence> {
        Partition::all_of(w).iter().map(MayaSequence::from_partition).collect()
    }
}

impl fmt::Display for MayaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for MayaSequence {
    type Err = Error;

    /// `"[-2,1]"`, the stored prefix in brackets.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidMaya(format!("expected [s0,s1,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(MayaSequence::vacuum());
        }
        let head = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidMaya(format!("cannot parse {s:?}")))?;
        MayaSequence::new(head)
    }
}

impl From<&Partition> for MayaSequence {
    fn from(p: &Partition) -> Self {
        MayaSequence::from_partition(p)
    }
}

/// Accepts either a Maya prefix `"[-2,1]"` or a partition `"2,1"`.
pub fn parse_index(s: &str) -> Result<MayaSequence> {
    if s.trim_start().starts_with('[') {
        s.parse()
    } else {
        Ok(MayaSequence::from_partition(&s.parse()?))
    }
}
