use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::shapes::Permutation;

/// Index of a normal-form basis element `L_1^{e_1}⋯L_n^{e_n} a_w`.
///
/// Encoded as `eidx · n! + widx` where `eidx = Σ e_k m^{k-1}` and `widx` is
/// the position of `w` in lexicographic order, so the unit has index 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalIndex {
    pub e: Vec<usize>,
    pub w: Permutation,
}

/// Lookup tables for the basis of `H_n` at level `m`.
#[derive(Debug)]
pub struct Basis {
    pub m: usize,
    pub n: usize,
    pub nfact: usize,
    pub dim: usize,
    pub(crate) perms: Vec<Permutation>,
    perm_index: HashMap<Permutation, u32>,
    pub(crate) words: Vec<Vec<usize>>,
    /// `m^{k-1}` for `k = 1..=n` (index `k`).
    pub(crate) pw: Vec<usize>,
    /// `left[j][w]` = index of `s_j w`, for `j` in `1..n`.
    pub(crate) left: Vec<Vec<u32>>,
    pub(crate) left_descent: Vec<Vec<bool>>,
    /// `right[j][w]` = index of `w s_j`.
    pub(crate) right: Vec<Vec<u32>>,
    pub(crate) right_descent: Vec<Vec<bool>>,
}

impl Basis {
    pub fn new(m: usize, n: usize) -> Basis {
        let perms = Permutation::all(n);
        let nfact = perms.len();
        let perm_index: HashMap<Permutation, u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let words = perms.iter().map(Permutation::reduced_word).collect();
        let mut left = vec![Vec::new(); n.max(1)];
        let mut right = vec![Vec::new(); n.max(1)];
        let mut left_descent = vec![Vec::new(); n.max(1)];
        let mut right_descent = vec![Vec::new(); n.max(1)];
        for j in 1..n {
            left[j] = perms.iter().map(|w| perm_index[&w.simple_times(j)]).collect();
            right[j] = perms.iter().map(|w| perm_index[&w.times_simple(j)]).collect();
            left_descent[j] = perms.iter().map(|w| w.has_left_descent(j)).collect();
            right_descent[j] = perms.iter().map(|w| w.has_right_descent(j)).collect();
        }
        let mut pw = vec![0; n + 1];
        let mut acc = 1;
        for slot in pw.iter_mut().skip(1) {
            *slot = acc;
            acc *= m;
        }
        let dim = m.pow(n as u32) * nfact;
        Basis {
            m,
            n,
            nfact,
            dim,
            perms,
            perm_index,
            words,
            pw,
            left,
            left_descent,
            right,
            right_descent,
        }
    }

    pub fn perm_index(&self, w: &Permutation) -> Option<usize> {
        self.perm_index.get(w).map(|&i| i as usize)
    }

    pub fn permutation(&self, widx: usize) -> &Permutation {
        &self.perms[widx]
    }

    /// `(eidx, widx)`.
    pub fn split(&self, b: usize) -> (usize, usize) {
        (b / self.nfact, b % self.nfact)
    }

    pub fn join(&self, eidx: usize, widx: usize) -> usize {
        eidx * self.nfact + widx
    }

    /// Exponent `e_k` of `b` (`k` 1-based).
    pub fn exponent(&self, eidx: usize, k: usize) -> usize {
        (eidx / self.pw[k]) % self.m
    }

    pub fn exponents(&self, b: usize) -> Vec<usize> {
        let (eidx, _) = self.split(b);
        (1..=self.n).map(|k| self.exponent(eidx, k)).collect()
    }

    pub fn index_of(&self, idx: &NormalIndex) -> Result<usize> {
        if idx.e.len() != self.n || idx.w.degree() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "basis index of rank {} in an algebra of rank {}",
                idx.e.len(),
                self.n
            )));
        }
        if let Some(&bad) = idx.e.iter().find(|&&x| x >= self.m) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                max: self.m - 1,
            });
        }
        let eidx: usize = idx.e.iter().enumerate().map(|(k, &x)| x * self.pw[k + 1]).sum();
        Ok(self.join(eidx, self.perm_index[&idx.w] as usize))
    }

    pub fn normal_index(&self, b: usize) -> NormalIndex {
        let (_, widx) = self.split(b);
        NormalIndex {
            e: self.exponents(b),
            w: self.perms[widx].clone(),
        }
    }

    pub fn word(&self, widx: usize) -> &[usize] {
        &self.words[widx]
    }
}
