//! Young-diagram combinatorics.

pub mod characters;
mod dims;
mod lr;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dims::{binomial, cauchy_decompose, o_harmonic_dim, schur_dim, so_harmonic_dim, so_irrep_dim};
pub use lr::{littlewood_so_multiplicity, lr_coefficient, lr_tableaux, LRTableau};

/// A weakly decreasing sequence of positive integers. Trailing zeros are stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weak decrease; zeros are allowed only as a trailing run and are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|c| self.parts.iter().take_while(|&&r| r > c).count())
            .collect();
        Partition { parts }
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|x| x % 2 == 0)
    }

    /// Comma-separated parts, empty string for the zero partition.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }

    /// Partitions of `n` with at most `max_len` parts each at most `max_part`, in
    /// reverse lexicographic order.
    pub fn all_of(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for k in (1..=cap.min(rest)).rev() {
                cur.push(k);
                go(rest - k, k, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `n`.
    pub fn all(n: usize) -> Vec<Partition> {
        Partition::all_of(n, n, n)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `[3,1]`, `3 1`, and `` or `[]` for the zero partition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
