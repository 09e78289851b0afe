use std::collections::{BTreeSet, HashSet};
use std::fmt::{self, Write};

use rayon::prelude::*;

use super::FockConfig;
use crate::error::Result;
use crate::shapes::{node_sets, Cell, Multipartition, Residue};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    R,
}

/// The `i`-signature of `λ`: addable and removable `i`-nodes in reading
/// order, and what survives RA deletion (always `A…A R…R`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaWord {
    pub letters: Vec<(Cell, Letter)>,
    pub reduced: Vec<(Cell, Letter)>,
}

impl RaWord {
    pub fn word(&self) -> String {
        spell(&self.letters)
    }

    pub fn reduced_word(&self) -> String {
        spell(&self.reduced)
    }
}

fn spell(w: &[(Cell, Letter)]) -> String {
    w.iter()
        .map(|(_, l)| match l {
            Letter::A => 'A',
            Letter::R => 'R',
        })
        .collect()
}

impl fmt::Display for RaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.word(), self.reduced_word())
    }
}

/// Delete every `R` immediately followed by an `A`, to a fixed point.
pub(crate) fn ra_reduce(letters: &[(Cell, Letter)]) -> Vec<(Cell, Letter)> {
    let mut stack: Vec<(Cell, Letter)> = Vec::with_capacity(letters.len());
    for &(x, l) in letters {
        if l == Letter::A && stack.last().is_some_and(|(_, t)| *t == Letter::R) {
            stack.pop();
        } else {
            stack.push((x, l));
        }
    }
    stack
}

pub fn ra_word(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<RaWord> {
    cfg.check_level(lambda)?;
    let (add, rem) = node_sets(lambda, i, cfg.gamma(), cfg.modulus());
    let mut letters: Vec<(Cell, Letter)> = add
        .into_iter()
        .map(|x| (x, Letter::A))
        .chain(rem.into_iter().map(|x| (x, Letter::R)))
        .collect();
    letters.sort_by_key(|(x, _)| x.reading_key());
    let reduced = ra_reduce(&letters);
    Ok(RaWord { letters, reduced })
}

/// Leftmost `R` left after RA deletion.
pub fn good_removable(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<Option<Cell>> {
    let w = ra_word(lambda, i, cfg)?;
    Ok(w.reduced.iter().find(|(_, l)| *l == Letter::R).map(|(x, _)| *x))
}

/// Rightmost `A` left after RA deletion.
pub fn good_addable(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<Option<Cell>> {
    let w = ra_word(lambda, i, cfg)?;
    Ok(w.reduced.iter().rev().find(|(_, l)| *l == Letter::A).map(|(x, _)| *x))
}

pub fn crystal_f(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<Option<Multipartition>> {
    good_addable(lambda, i, cfg)?.map(|x| lambda.add_cell(&x)).transpose()
}

pub fn crystal_e(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<Option<Multipartition>> {
    good_removable(lambda, i, cfg)?.map(|x| lambda.remove_cell(&x)).transpose()
}

/// Kleshchev test by descent: `λ ≠ ∅` lies in the component of `∅` iff some
/// `ẽ_i λ` does, and then every defined `ẽ_i λ` does.
pub fn is_kleshchev(lambda: &Multipartition, cfg: &FockConfig) -> Result<bool> {
    cfg.check_level(lambda)?;
    let mut cur = lambda.clone();
    'descend: while !cur.is_empty() {
        for i in cfg.active_residues(&cur) {
            if let Some(mu) = crystal_e(&cur, i, cfg)? {
                cur = mu;
                continue 'descend;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Kleshchev test by tableau witness: search for a standard tableau of shape
/// `λ` in which every `k` is the good addable node of `T_{<k}`.
pub fn is_kleshchev_by_tableau(lambda: &Multipartition, cfg: &FockConfig) -> Result<bool> {
    cfg.check_level(lambda)?;
    fn search(mu: &Multipartition, lambda: &Multipartition, cfg: &FockConfig, dead: &mut HashSet<Multipartition>) -> Result<bool> {
        if mu.size() == lambda.size() {
            return Ok(true);
        }
        if dead.contains(mu) {
            return Ok(false);
        }
        for i in cfg.active_residues(mu) {
            if let Some(x) = good_addable(mu, i, cfg)? {
                if lambda.contains(&x) && search(&mu.add_cell(&x)?, lambda, cfg, dead)? {
                    return Ok(true);
                }
            }
        }
        dead.insert(mu.clone());
        Ok(false)
    }
    search(&Multipartition::empty(cfg.level()), lambda, cfg, &mut HashSet::new())
}

fn next_layer(layer: &BTreeSet<Multipartition>, cfg: &FockConfig) -> Result<BTreeSet<Multipartition>> {
    let found = layer
        .par_iter()
        .map(|lambda| {
            cfg.active_residues(lambda)
                .into_iter()
                .filter_map(|i| crystal_f(lambda, i, cfg).transpose())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Kleshchev multipartitions of size `n`: the breadth-first closure of `∅`
/// under the `f̃_i`, sorted.
pub fn enumerate_kleshchev(cfg: &FockConfig, n: usize) -> Result<Vec<Multipartition>> {
    let mut layer = BTreeSet::from([Multipartition::empty(cfg.level())]);
    for _ in 0..n {
        layer = next_layer(&layer, cfg)?;
    }
    Ok(layer.into_iter().collect())
}

/// Number of Kleshchev multipartitions of each size `0..=max_n`.
pub fn kleshchev_series(cfg: &FockConfig, max_n: usize) -> Result<Vec<usize>> {
    let mut layer = BTreeSet::from([Multipartition::empty(cfg.level())]);
    let mut out = vec![1];
    for _ in 0..max_n {
        layer = next_layer(&layer, cfg)?;
        out.push(layer.len());
    }
    Ok(out)
}

/// DOT graph of the crystal of `∅` through size `max_n`; edges `λ -> f̃_i λ`
/// labelled by `i`.
pub fn crystal_graph_dot(cfg: &FockConfig, max_n: usize) -> Result<String> {
    let mut out = String::from("digraph crystal {\n");
    let mut layer = BTreeSet::from([Multipartition::empty(cfg.level())]);
    for depth in 0..=max_n {
        for lambda in &layer {
            writeln!(out, "  \"{lambda}\";").unwrap();
        }
        if depth == max_n {
            break;
        }
        for lambda in &layer {
            for i in cfg.active_residues(lambda) {
                if let Some(mu) = crystal_f(lambda, i, cfg)? {
                    writeln!(out, "  \"{lambda}\" -> \"{mu}\" [label=\"{i}\"];").unwrap();
                }
            }
        }
        layer = next_layer(&layer, cfg)?;
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Modulus;
    use proptest::prelude::*;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    fn one(r: u32) -> FockConfig {
        FockConfig::level_one(Modulus::Finite(r)).unwrap()
    }

    #[test]
    fn ra_examples() {
        let c = one(2);
        let w = ra_word(&Multipartition::empty(1), Residue(0), &c).unwrap();
        assert_eq!(w.word(), "A");
        assert_eq!(good_addable(&Multipartition::empty(1), Residue(0), &c).unwrap(), Some(Cell::new(1, 1, 1)));
        assert_eq!(good_removable(&Multipartition::empty(1), Residue(0), &c).unwrap(), None);
        let w = ra_word(&mp("[1]"), Residue(1), &c).unwrap();
        assert_eq!(w.word(), "AA");
        assert_eq!(good_addable(&mp("[1]"), Residue(1), &c).unwrap(), Some(Cell::new(1, 2, 1)));
        // (2,1): removable (1,2), (2,1) have residue 1; addable (1,3), (2,2), (3,1) residue 0
        let w = ra_word(&mp("[2,1]"), Residue(1), &c).unwrap();
        assert_eq!(w.word(), "RR");
        let w = ra_word(&mp("[2,1]"), Residue(0), &c).unwrap();
        assert_eq!(w.word(), "AAA");
    }

    #[test]
    fn crystal_examples() {
        let c = one(2);
        assert_eq!(crystal_f(&mp("[1]"), Residue(1), &c).unwrap(), Some(mp("[1,1]")));
        let c2 = FockConfig::new(Modulus::Finite(2), vec![0, 0]).unwrap();
        assert_eq!(crystal_f(&Multipartition::empty(2), Residue(0), &c2).unwrap(), Some(mp("[[],[1]]")));
        assert_eq!(crystal_f(&Multipartition::empty(2), Residue(1), &c2).unwrap(), None);
    }

    #[test]
    fn kleshchev_examples() {
        let c = one(2);
        assert!(is_kleshchev(&Multipartition::empty(1), &c).unwrap());
        assert!(is_kleshchev(&mp("[1,1]"), &c).unwrap());
        assert!(!is_kleshchev(&mp("[2]"), &c).unwrap());
        assert_eq!(enumerate_kleshchev(&c, 4).unwrap(), vec![mp("[1,1,1,1]"), mp("[2,1,1]")]);
        assert_eq!(enumerate_kleshchev(&c, 0).unwrap(), vec![Multipartition::empty(1)]);
        assert_eq!(kleshchev_series(&c, 4).unwrap(), vec![1, 1, 1, 2, 2]);
    }

    #[test]
    fn dot_output() {
        let dot = crystal_graph_dot(&one(2), 2).unwrap();
        assert!(dot.contains("\"[[]]\" -> \"[[1]]\" [label=\"0\"];"));
        assert!(dot.contains("\"[[1]]\" -> \"[[1,1]]\" [label=\"1\"];"));
    }

    proptest! {
        // deleting RA pairs in any order reaches the same fixed point
        #[test]
        fn ra_deletion_is_confluent(bits in proptest::collection::vec(any::<bool>(), 0..24), picks in proptest::collection::vec(any::<usize>(), 24)) {
            let letters: Vec<(Cell, Letter)> = bits
                .iter()
                .enumerate()
                .map(|(k, &b)| (Cell::new(1, k + 1, 1), if b { Letter::A } else { Letter::R }))
                .collect();
            let mut w = letters.clone();
            let mut step = 0;
            loop {
                let pairs: Vec<usize> = (0..w.len().saturating_sub(1))
                    .filter(|&k| w[k].1 == Letter::R && w[k + 1].1 == Letter::A)
                    .collect();
                if pairs.is_empty() {
                    break;
                }
                let k = pairs[picks[step % picks.len()] % pairs.len()];
                w.drain(k..k + 2);
                step += 1;
            }
            prop_assert_eq!(w, ra_reduce(&letters));
        }
    }
}
