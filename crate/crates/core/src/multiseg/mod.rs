//! Segments and multisegments of residues, aperiodicity, and counts of
//! aperiodic multisegments.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::Modulus;

/// Consecutive residues `start, start+1, …, start+length-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Segment {
    pub start: i64,
    pub length: usize,
}

impl Segment {
    pub fn new(start: i64, length: usize) -> Result<Self> {
        if length == 0 {
            return Err(Error::InvalidArgument("segment length must be >= 1".into()));
        }
        Ok(Segment { start, length })
    }

    /// Residues of the entries.
    pub fn entries(&self, modulus: Modulus) -> Vec<i64> {
        (0..self.length as i64).map(|k| modulus.reduce(self.start + k).0).collect()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{}]", self.start, self.length)
    }
}

/// A multiset of segments, stored sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort();
        Multisegment { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn size(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }

    /// Parse `"[0;1] [1;2]"` (also comma separated, or empty).
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad multisegment '{s}'"));
        let mut segments = Vec::new();
        for tok in s.split(']') {
            let tok = tok.trim_start_matches([',', ' ']).trim();
            if tok.is_empty() {
                continue;
            }
            let body = tok.strip_prefix('[').ok_or_else(bad)?;
            let (a, l) = body.split_once(';').ok_or_else(bad)?;
            let start = a.trim().parse().map_err(|_| bad())?;
            let length = l.trim().parse().map_err(|_| bad())?;
            segments.push(Segment::new(start, length)?);
        }
        Ok(Multisegment::new(segments))
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// No segment length whose start residues cover all of `Z/r`. Always true
/// for `r = ∞`.
pub fn is_aperiodic(ms: &Multisegment, modulus: Modulus) -> bool {
    let Modulus::Finite(r) = modulus else { return true };
    let mut lengths: Vec<usize> = ms.segments.iter().map(|s| s.length).collect();
    lengths.dedup();
    lengths.into_iter().all(|len| {
        let mut seen = vec![false; r as usize];
        for s in ms.segments.iter().filter(|s| s.length == len) {
            seen[modulus.reduce(s.start).0 as usize] = true;
        }
        !seen.iter().all(|&x| x)
    })
}

/// Periodicity by definition: some segment has all `r` of its shifts
/// (residue sequences with every entry moved by `i`) present.
pub fn is_aperiodic_by_shifts(ms: &Multisegment, modulus: Modulus) -> bool {
    let Modulus::Finite(r) = modulus else { return true };
    let present: Vec<Vec<i64>> = ms.segments.iter().map(|s| s.entries(modulus)).collect();
    !present.iter().any(|word| {
        (0..r as i64).all(|i| {
            let shifted: Vec<i64> = word.iter().map(|x| modulus.reduce(x + i).0).collect();
            present.contains(&shifted)
        })
    })
}

fn segment_types(n: usize, starts: &[i64]) -> Vec<Segment> {
    let mut out = Vec::new();
    for length in (1..=n).rev() {
        for &start in starts {
            out.push(Segment { start, length });
        }
    }
    out
}

fn starts_for(modulus: Modulus, window: usize) -> Vec<i64> {
    match modulus {
        Modulus::Finite(r) => (0..r as i64).collect(),
        Modulus::Infinite => (0..window as i64).collect(),
    }
}

fn extend(types: &[Segment], from: usize, remaining: usize, cur: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
    if remaining == 0 {
        out.push(Multisegment::new(cur.clone()));
        return;
    }
    for k in from..types.len() {
        if types[k].length <= remaining {
            cur.push(types[k]);
            extend(types, k, remaining - types[k].length, cur, out);
            cur.pop();
        }
    }
}

/// All multisegments of total size `n`, sorted. For `r = ∞` the starts are
/// restricted to `0..window`.
pub fn enumerate_multisegments(n: usize, modulus: Modulus, window: usize) -> Vec<Multisegment> {
    if n == 0 {
        return vec![Multisegment::default()];
    }
    let types = segment_types(n, &starts_for(modulus, window));
    // split on the first (largest) segment
    let mut out: Vec<Multisegment> = (0..types.len())
        .into_par_iter()
        .flat_map_iter(|k| {
            let mut found = Vec::new();
            let mut cur = vec![types[k]];
            extend(&types, k, n - types[k].length, &mut cur, &mut found);
            found
        })
        .collect();
    out.sort();
    out
}

/// Number of multisegments of size `n`, and how many are aperiodic.
pub fn count_multisegments(n: usize, modulus: Modulus, window: usize) -> (usize, usize) {
    let all = enumerate_multisegments(n, modulus, window);
    let aperiodic = all.iter().filter(|m| is_aperiodic(m, modulus)).count();
    (all.len(), aperiodic)
}

pub fn count_aperiodic(n: usize, r: u32) -> Result<usize> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be >= 2")));
    }
    Ok(count_multisegments(n, Modulus::Finite(r), 0).1)
}

/// Aperiodic multisegment counts for sizes `0..=n`.
pub fn aperiodic_series(n: usize, r: u32) -> Result<Vec<usize>> {
    (0..=n).map(|k| count_aperiodic(k, r)).collect()
}

/// Families over `labels` labels, aperiodic at each label, of total size `n`:
/// the `labels`-fold convolution power of the aperiodic series.
pub fn count_family(n: usize, r: u32, labels: usize) -> Result<u128> {
    if labels == 0 {
        return Err(Error::InvalidArgument("labels must be >= 1".into()));
    }
    let a: Vec<u128> = aperiodic_series(n, r)?.into_iter().map(|x| x as u128).collect();
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..labels {
        let mut next = vec![0u128; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += acc[i] * a[j];
            }
        }
        acc = next;
    }
    Ok(acc[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        Multisegment::parse(s).unwrap()
    }

    #[test]
    fn aperiodicity_examples() {
        let two = Modulus::Finite(2);
        assert!(is_aperiodic(&ms("[0;3]"), two));
        assert!(!is_aperiodic(&ms("[0;1],[1;1]"), two));
        assert!(is_aperiodic(&ms("[0;1] [0;1]"), two));
        assert!(is_aperiodic(&ms("[0;1],[1;1]"), Modulus::Infinite));
        assert!(!is_aperiodic_by_shifts(&ms("[0;1],[1;1]"), two));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_multisegments(0, Modulus::Finite(2), 0), (1, 1));
        assert_eq!(count_multisegments(2, Modulus::Finite(2), 0), (5, 4));
        assert_eq!(count_aperiodic(2, 2).unwrap(), 4);
        assert_eq!(count_family(0, 3, 2).unwrap(), 1);
        assert_eq!(count_family(1, 3, 2).unwrap(), 2 * count_aperiodic(1, 3).unwrap() as u128);
        assert_eq!(count_family(3, 2, 1).unwrap(), count_aperiodic(3, 2).unwrap() as u128);
    }

    #[test]
    fn display_and_parse() {
        let m = ms("[1;2],[0;1]");
        assert_eq!(m.to_string(), "{[0;1],[1;2]}");
        assert_eq!(Multisegment::parse(&m.to_string().replace(['{', '}'], "")).unwrap(), m);
        assert_eq!(m.size(), 3);
    }
}
