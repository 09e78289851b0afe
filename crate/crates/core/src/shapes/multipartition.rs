use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Residue modulus: a finite `r >= 2`, or no modulus (`r = ∞`, residues in `Z`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Modulus {
    Finite(u32),
    Infinite,
}

impl Modulus {
    pub fn reduce(self, x: i64) -> Residue {
        match self {
            Modulus::Finite(r) => Residue(x.rem_euclid(r as i64)),
            Modulus::Infinite => Residue(x),
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Modulus::Finite(r) => Some(r),
            Modulus::Infinite => None,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Modulus::Infinite);
        }
        let r: u32 = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus '{s}'")))?;
        if r < 2 {
            return Err(Error::InvalidArgument("modulus must be >= 2 or inf".into()));
        }
        Ok(Modulus::Finite(r))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(r) => write!(f, "{r}"),
            Modulus::Infinite => f.write_str("inf"),
        }
    }
}

/// A residue class in `Z/rZ` (or an integer when `r = ∞`), always reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Residue(pub i64);

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The `(row, col)` cell of component `comp` (all 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(comp: usize, row: usize, col: usize) -> Self {
        Cell { comp, row, col }
    }

    /// Sort key for the node reading order: top row of `λ^(m)` down to the
    /// bottom row of `λ^(1)`.
    pub fn reading_key(&self) -> (std::cmp::Reverse<usize>, usize, usize) {
        (std::cmp::Reverse(self.comp), self.row, self.col)
    }

    /// Strictly above `other` in the reading order used by the Fock action.
    pub fn is_above(&self, other: &Cell) -> bool {
        self.comp > other.comp || (self.comp == other.comp && self.row < other.row)
    }

    pub fn is_below(&self, other: &Cell) -> bool {
        self.comp < other.comp || (self.comp == other.comp && self.row > other.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// Residue `-a + b + γ_c` of the cell `(a, b)` in component `c`.
pub fn residue(x: &Cell, gamma: &[i64], modulus: Modulus) -> Residue {
    modulus.reduce(x.col as i64 - x.row as i64 + gamma[x.comp - 1])
}

/// An `m`-tuple of partitions stored as `(λ^(m), …, λ^(1))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multipartition {
    comps: Vec<Partition>,
}

impl Multipartition {
    /// Components in storage order `(λ^(m), …, λ^(1))`.
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidArgument("level must be >= 1".into()));
        }
        Ok(Multipartition { comps })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1);
        Multipartition {
            comps: vec![Partition::empty(); level],
        }
    }

    pub fn from_partition(p: Partition) -> Self {
        Multipartition { comps: vec![p] }
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Storage order `(λ^(m), …, λ^(1))`.
    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    /// `λ^(c)` for `c` in `1..=m`.
    pub fn component(&self, c: usize) -> &Partition {
        &self.comps[self.level() - c]
    }

    fn component_mut(&mut self, c: usize) -> &mut Partition {
        let m = self.level();
        &mut self.comps[m - c]
    }

    pub fn contains(&self, x: &Cell) -> bool {
        x.comp >= 1 && x.comp <= self.level() && x.row >= 1 && x.col >= 1 && x.col <= self.component(x.comp).row(x.row)
    }

    /// All cells in reading order.
    pub fn cells(&self) -> Vec<Cell> {
        let m = self.level();
        let mut out = Vec::with_capacity(self.size());
        for c in (1..=m).rev() {
            for (a, &len) in self.component(c).parts().iter().enumerate() {
                for b in 1..=len {
                    out.push(Cell::new(c, a + 1, b));
                }
            }
        }
        out
    }

    /// Addable cells of every residue, in reading order.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let m = self.level();
        let mut out = Vec::new();
        for c in (1..=m).rev() {
            let p = self.component(c);
            for a in p.addable_rows() {
                out.push(Cell::new(c, a, p.row(a) + 1));
            }
        }
        out
    }

    /// Removable cells of every residue, in reading order.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let m = self.level();
        let mut out = Vec::new();
        for c in (1..=m).rev() {
            let p = self.component(c);
            for a in p.removable_rows() {
                out.push(Cell::new(c, a, p.row(a)));
            }
        }
        out
    }

    pub fn add_cell(&self, x: &Cell) -> Result<Multipartition> {
        if !self.addable_cells().contains(x) {
            return Err(Error::InvalidArgument(format!("{x} is not addable to {self}")));
        }
        let mut out = self.clone();
        let p = out.component(x.comp).with_cell_added(x.row);
        *out.component_mut(x.comp) = p;
        Ok(out)
    }

    pub fn remove_cell(&self, x: &Cell) -> Result<Multipartition> {
        if !self.removable_cells().contains(x) {
            return Err(Error::InvalidArgument(format!("{x} is not removable from {self}")));
        }
        let mut out = self.clone();
        let p = out.component(x.comp).with_cell_removed(x.row);
        *out.component_mut(x.comp) = p;
        Ok(out)
    }

    /// `(a_1, …, a_l)` with `a_k = n - |λ^(1)| - ⋯ - |λ^(k)|`, positive terms only.
    pub fn a_sequence(&self) -> Vec<usize> {
        let n = self.size();
        let mut acc = 0;
        let mut out = Vec::new();
        for k in 1..=self.level() {
            acc += self.component(k).size();
            if n > acc {
                out.push(n - acc);
            }
        }
        out
    }

    /// Flattened part sequence with component boundaries, used for tie-breaks.
    pub fn flattened(&self) -> Vec<Vec<usize>> {
        self.comps.iter().map(|p| p.parts().to_vec()).collect()
    }

    /// All multipartitions of level `m` and size `n`, in a fixed order.
    pub fn all(m: usize, n: usize) -> Vec<Multipartition> {
        assert!(m >= 1);
        fn rec(pos: usize, m: usize, rem: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if pos == m - 1 {
                for p in Partition::all(rem) {
                    cur.push(p);
                    out.push(Multipartition { comps: cur.clone() });
                    cur.pop();
                }
                return;
            }
            for k in (0..=rem).rev() {
                for p in Partition::all(k) {
                    cur.push(p);
                    rec(pos + 1, m, rem - k, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(0, m, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parse `"[[3,1],[2]]"` (components `λ^(m)` first). A bare partition
    /// such as `"[2,1]"` is read as level one.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("bad multipartition '{s}'")))?;
        if !inner.contains('[') {
            return Ok(Multipartition::from_partition(Partition::parse(inner)?));
        }
        let mut comps = Vec::new();
        let mut depth = 0;
        let mut start = 0;
        for (i, ch) in inner.char_indices() {
            match ch {
                '[' => {
                    if depth == 0 {
                        start = i;
                    }
                    depth += 1;
                }
                ']' => {
                    depth -= 1;
                    if depth == 0 {
                        comps.push(Partition::parse(&inner[start..=i])?);
                    }
                }
                ',' if depth == 0 => {}
                _ if depth == 0 => {
                    return Err(Error::Parse(format!("bad multipartition '{s}'")));
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced brackets in '{s}'")));
        }
        Multipartition::new(comps)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `λ ⊵ μ` in the dominance order on multipartitions.
pub fn dominance_geq(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    if lambda.level() != mu.level() || lambda.size() != mu.size() {
        return Err(Error::ShapeMismatch(format!(
            "cannot compare {lambda} and {mu} in dominance order"
        )));
    }
    let mut above_l = 0usize;
    let mut above_m = 0usize;
    for (pl, pm) in lambda.components().iter().zip(mu.components()) {
        let rows = pl.len().max(pm.len()).max(1);
        let (mut sl, mut sm) = (0usize, 0usize);
        for a in 1..=rows {
            sl += pl.row(a);
            sm += pm.row(a);
            if above_l + sl < above_m + sm {
                return Ok(false);
            }
        }
        above_l += pl.size();
        above_m += pm.size();
    }
    Ok(true)
}

/// `λ ⊳ μ`.
pub fn dominates_strictly(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    Ok(lambda != mu && dominance_geq(lambda, mu)?)
}

/// Sort so that `λ` precedes `μ` whenever `λ ⊳ μ`. Among shapes whose
/// dominators are all placed, the lexicographically greatest (by component
/// part sequences) goes first.
pub fn dominance_linear_extension(shapes: &[Multipartition]) -> Vec<Multipartition> {
    let k = shapes.len();
    let mut placed = vec![false; k];
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let next = (0..k)
            .filter(|&i| !placed[i])
            .filter(|&i| {
                (0..k).all(|j| placed[j] || j == i || !dominates_strictly(&shapes[j], &shapes[i]).unwrap_or(false))
            })
            .max_by(|&a, &b| shapes[a].flattened().cmp(&shapes[b].flattened()))
            .expect("dominance is acyclic");
        placed[next] = true;
        out.push(shapes[next].clone());
    }
    out
}

/// Addable and removable `i`-nodes, both in reading order.
pub fn node_sets(
    lambda: &Multipartition,
    i: Residue,
    gamma: &[i64],
    modulus: Modulus,
) -> (Vec<Cell>, Vec<Cell>) {
    let add = lambda
        .addable_cells()
        .into_iter()
        .filter(|x| residue(x, gamma, modulus) == i)
        .collect();
    let rem = lambda
        .removable_cells()
        .into_iter()
        .filter(|x| residue(x, gamma, modulus) == i)
        .collect();
    (add, rem)
}

/// The exponent statistics of the v-deformed Fock action at position `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NStatistics {
    /// `|A_i^a(x)| - |R_i^a(x)|`
    pub above: i64,
    /// `|A_i^b(x)| - |R_i^b(x)|`
    pub below: i64,
    /// `|A_i(λ)| - |R_i(λ)|`
    pub total: i64,
    /// Number of cells of residue 0.
    pub zero_nodes: i64,
}

pub fn n_statistics(
    lambda: &Multipartition,
    x: &Cell,
    i: Residue,
    gamma: &[i64],
    modulus: Modulus,
) -> NStatistics {
    let (add, rem) = node_sets(lambda, i, gamma, modulus);
    let count = |cells: &[Cell], pred: &dyn Fn(&Cell) -> bool| cells.iter().filter(|y| pred(y)).count() as i64;
    let above = count(&add, &|y| y.is_above(x)) - count(&rem, &|y| y.is_above(x));
    let below = count(&add, &|y| y.is_below(x)) - count(&rem, &|y| y.is_below(x));
    let total = add.len() as i64 - rem.len() as i64;
    let zero = modulus.reduce(0);
    let zero_nodes = lambda
        .cells()
        .iter()
        .filter(|y| residue(y, gamma, modulus) == zero)
        .count() as i64;
    NStatistics {
        above,
        below,
        total,
        zero_nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    #[test]
    fn dominance_examples() {
        let l = mp("[[2,1],[1]]");
        assert!(dominance_geq(&l, &l).unwrap());
        assert!(dominance_geq(&mp("[2]"), &mp("[1,1]")).unwrap());
        assert!(!dominance_geq(&mp("[1,1]"), &mp("[2]")).unwrap());
        assert!(dominance_geq(&mp("[[1],[]]"), &mp("[[],[1]]")).unwrap());
        assert!(!dominance_geq(&mp("[[],[1]]"), &mp("[[1],[]]")).unwrap());
        assert!(dominance_geq(&mp("[2]"), &mp("[[2],[]]")).is_err());
        assert!(dominance_geq(&mp("[2]"), &mp("[1]")).is_err());
    }

    #[test]
    fn linear_extension_respects_dominance() {
        for m in 1..=3 {
            for n in 0..=4 {
                let order = dominance_linear_extension(&Multipartition::all(m, n));
                for i in 0..order.len() {
                    for j in i + 1..order.len() {
                        assert!(!dominates_strictly(&order[j], &order[i]).unwrap());
                    }
                }
            }
        }
        let order = dominance_linear_extension(&Multipartition::all(1, 3));
        assert_eq!(order[0], mp("[3]"));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for m in 1..=3 {
            for n in 0..=4 {
                let all = Multipartition::all(m, n);
                for a in &all {
                    assert!(dominance_geq(a, a).unwrap());
                    for b in &all {
                        let ab = dominance_geq(a, b).unwrap();
                        if ab && dominance_geq(b, a).unwrap() {
                            assert_eq!(a, b);
                        }
                        if !ab {
                            continue;
                        }
                        for c in &all {
                            if dominance_geq(b, c).unwrap() {
                                assert!(dominance_geq(a, c).unwrap());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn residue_examples() {
        let g = [0i64];
        assert_eq!(residue(&Cell::new(1, 1, 1), &[3], Modulus::Finite(5)), Residue(3));
        assert_eq!(residue(&Cell::new(1, 2, 1), &g, Modulus::Finite(3)), Residue(2));
        assert_eq!(residue(&Cell::new(1, 1, 3), &[1], Modulus::Finite(2)), Residue(1));
        assert_eq!(residue(&Cell::new(1, 2, 1), &g, Modulus::Infinite), Residue(-1));
    }

    #[test]
    fn node_set_examples() {
        let (a, r) = node_sets(&Multipartition::empty(1), Residue(0), &[0], Modulus::Finite(2));
        assert_eq!(a, vec![Cell::new(1, 1, 1)]);
        assert!(r.is_empty());
        let (a, _) = node_sets(&mp("[1]"), Residue(1), &[0], Modulus::Finite(2));
        assert_eq!(a, vec![Cell::new(1, 1, 2), Cell::new(1, 2, 1)]);
        let (_, r) = node_sets(&mp("[[1],[1]]"), Residue(0), &[0, 0], Modulus::Finite(2));
        assert_eq!(r, vec![Cell::new(2, 1, 1), Cell::new(1, 1, 1)]);
    }

    #[test]
    fn n_statistic_examples() {
        let s = n_statistics(&Multipartition::empty(1), &Cell::new(1, 1, 1), Residue(0), &[0], Modulus::Finite(2));
        assert_eq!(s.below, 0);
        let s = n_statistics(&Multipartition::empty(2), &Cell::new(2, 1, 1), Residue(0), &[0, 0], Modulus::Finite(2));
        assert_eq!(s.below, 1);
        assert_eq!(s.above, 0);
        let s = n_statistics(&mp("[1]"), &Cell::new(1, 1, 2), Residue(1), &[0], Modulus::Finite(2));
        assert_eq!(s.below, 1);
        assert_eq!(s.total, 2);
    }

    #[test]
    fn a_sequence_examples() {
        assert!(mp("[2,1]").a_sequence().is_empty());
        assert_eq!(mp("[[1],[]]").a_sequence(), vec![1]);
        assert!(mp("[[],[1]]").a_sequence().is_empty());
        assert_eq!(mp("[[2],[1],[]]").a_sequence(), vec![3, 2]);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["[[3,1],[2]]", "[[],[1]]", "[2,1]", "[[],[],[]]"] {
            let m = mp(s);
            let back = mp(&m.to_string());
            assert_eq!(m, back);
        }
        assert_eq!(mp("[2,1]").to_string(), "[[2,1]]");
        assert!(Multipartition::parse("[[1],[2]").is_err());
        assert!(Multipartition::parse("[[1,2]]").is_err());
    }

    #[test]
    fn multipartition_counts() {
        // level-2 counts: 1, 2, 5, 10, 20, 36
        let c: Vec<usize> = (0..=5).map(|n| Multipartition::all(2, n).len()).collect();
        assert_eq!(c, vec![1, 2, 5, 10, 20, 36]);
    }
}
