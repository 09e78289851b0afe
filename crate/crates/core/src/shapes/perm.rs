use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored 0-based as the image sequence.
///
/// Permutations act on the right: `(k)(xy) = ((k)x)y`. A word
/// `[i1, …, il]` denotes `s_{i1} s_{i2} ⋯ s_{il}` where `s_i` swaps `i` and
/// `i+1` and `s_{i1}` is applied first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            img: (0..n).collect(),
        }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
            img.push(x - 1);
        }
        Ok(Permutation { img })
    }

    pub(crate) fn from_zero_based(img: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { img }
    }

    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection s_{i} out of range for n={n}");
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.img.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            img: self.img.iter().map(|&x| other.img[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { img: inv }
    }

    /// `self · s_i`: swaps the values `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let (a, b) = (i - 1, i);
        Permutation {
            img: self
                .img
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// `s_i · self`: swaps the images of `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Permutation {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Permutation { img }
    }

    /// `l(self · s_i) < l(self)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        // value i+1 sits before value i
        let pa = self.img.iter().position(|&x| x == i - 1).unwrap();
        let pb = self.img.iter().position(|&x| x == i).unwrap();
        pb < pa
    }

    /// `l(s_i · self) < l(self)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    pub fn from_word(n: usize, word: &[usize]) -> Result<Permutation> {
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: n.saturating_sub(1),
                });
            }
            p = p.times_simple(i);
        }
        Ok(p)
    }

    /// A reduced word, built by peeling off the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    /// All permutations of `{1..n}` in lexicographic order of image sequences.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation { img: cur.clone() });
                return;
            }
            for x in 0..n {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    pub fn longest(n: usize) -> Permutation {
        Permutation {
            img: (0..n).rev().collect(),
        }
    }
}

pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    w.reduced_word()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.img.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(Permutation::identity(4).reduced_word().is_empty());
        assert_eq!(Permutation::simple(2, 1).reduced_word(), vec![1]);
        let w0 = Permutation::longest(3);
        assert_eq!(w0.reduced_word().len(), 3);
        assert_eq!(w0.length(), 3);
    }

    #[test]
    fn reduced_words_reproduce_every_permutation() {
        for n in 0..=5 {
            for w in Permutation::all(n) {
                let word = w.reduced_word();
                assert_eq!(word.len(), w.length());
                assert_eq!(Permutation::from_word(n, &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn descents_match_length_change() {
        for w in Permutation::all(4) {
            for i in 1..4 {
                assert_eq!(w.has_right_descent(i), w.times_simple(i).length() < w.length());
                assert_eq!(w.has_left_descent(i), w.simple_times(i).length() < w.length());
            }
        }
    }

    #[test]
    fn composition_conventions() {
        let s1 = Permutation::simple(3, 1);
        let s2 = Permutation::simple(3, 2);
        assert_eq!(s1.then(&s2), s1.times_simple(2));
        assert_eq!(s1.then(&s2), s2.simple_times(1));
        let w = s1.then(&s2);
        assert!(w.then(&w.inverse()).is_identity());
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }
}
