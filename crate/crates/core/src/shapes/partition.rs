use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not a partition"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `a` (1-based), zero past the last row.
    pub fn row(&self, a: usize) -> usize {
        if a == 0 {
            return usize::MAX;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.row(1);
        Partition(
            (1..=width)
                .map(|b| self.0.iter().filter(|&&p| p >= b).count())
                .collect(),
        )
    }

    /// All consecutive differences (including the last row against 0) are `< r`.
    pub fn is_restricted(&self, r: usize) -> bool {
        (1..=self.len()).all(|a| self.row(a) - self.row(a + 1) < r)
    }

    /// Rows `a` where a cell `(a, row(a)+1)` may be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&a| a == 1 || self.row(a - 1) > self.row(a))
            .collect()
    }

    /// Rows `a` whose last cell may be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&a| self.row(a) > self.row(a + 1))
            .collect()
    }

    pub(crate) fn with_cell_added(&self, a: usize) -> Partition {
        let mut p = self.0.clone();
        if a == p.len() + 1 {
            p.push(1);
        } else {
            p[a - 1] += 1;
        }
        Partition(p)
    }

    pub(crate) fn with_cell_removed(&self, a: usize) -> Partition {
        let mut p = self.0.clone();
        p[a - 1] -= 1;
        if p[a - 1] == 0 {
            p.pop();
        }
        Partition(p)
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parse `"[3,1]"` or `"3,1"`; `"[]"` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn validation_and_parse() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::parse("[3,1]").unwrap().parts(), &[3, 1]);
        assert!(Partition::parse("[]").unwrap().is_empty());
    }

    #[test]
    fn restrictedness() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert!(p.is_restricted(2));
        assert!(!Partition::new(vec![2]).unwrap().is_restricted(2));
        assert_eq!(p.conjugate(), p);
        assert_eq!(Partition::new(vec![3, 1]).unwrap().conjugate().parts(), &[2, 1, 1]);
    }
}
