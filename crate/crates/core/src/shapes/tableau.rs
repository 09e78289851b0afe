use std::fmt;

use serde::{Deserialize, Serialize};

use super::multipartition::{Cell, Multipartition};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A standard filling of a multipartition by `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardTableau {
    shape: Multipartition,
    /// `positions[k-1]` is the cell holding `k`.
    positions: Vec<Cell>,
}

impl StandardTableau {
    /// Build from the cell of each entry `1..=n`, checking standardness.
    pub fn from_positions(shape: Multipartition, positions: Vec<Cell>) -> Result<Self> {
        if positions.len() != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a shape of size {}",
                positions.len(),
                shape.size()
            )));
        }
        let mut grown = Multipartition::empty(shape.level());
        for x in &positions {
            if !shape.contains(x) {
                return Err(Error::ShapeMismatch(format!("{x} is not a cell of {shape}")));
            }
            grown = grown
                .add_cell(x)
                .map_err(|_| Error::InvalidArgument("filling is not standard".into()))?;
        }
        Ok(StandardTableau { shape, positions })
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Cell holding `k` (1-based).
    pub fn cell_of(&self, k: usize) -> Cell {
        self.positions[k - 1]
    }

    pub fn positions(&self) -> &[Cell] {
        &self.positions
    }

    pub fn entry(&self, x: &Cell) -> Option<usize> {
        self.positions.iter().position(|y| y == x).map(|i| i + 1)
    }

    /// Shape of the subtableau `T_{≤k}`.
    pub fn restricted_shape(&self, k: usize) -> Multipartition {
        let mut s = Multipartition::empty(self.shape.level());
        for x in &self.positions[..k] {
            s = s.add_cell(x).expect("standard tableau");
        }
        s
    }

    /// `d(t)`: sends `k` to the entry of `t` in the cell where `t^λ` holds `k`.
    pub fn d(&self) -> Permutation {
        let canon = canonical_tableau(&self.shape);
        let images: Vec<usize> = canon
            .positions
            .iter()
            .map(|x| self.entry(x).unwrap() - 1)
            .collect();
        Permutation::from_zero_based(images)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.shape.level();
        let mut comps = Vec::with_capacity(m);
        for c in (1..=m).rev() {
            let p = self.shape.component(c);
            let rows: Vec<String> = (1..=p.len())
                .map(|a| {
                    let entries: Vec<String> = (1..=p.row(a))
                        .map(|b| self.entry(&Cell::new(c, a, b)).unwrap().to_string())
                        .collect();
                    format!("[{}]", entries.join(","))
                })
                .collect();
            comps.push(format!("[{}]", rows.join(",")));
        }
        write!(f, "[{}]", comps.join(","))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `t^λ`: entries placed along rows, `λ^(m)` first.
pub fn canonical_tableau(lambda: &Multipartition) -> StandardTableau {
    StandardTableau {
        shape: lambda.clone(),
        positions: lambda.cells(),
    }
}

/// All standard tableaux of shape `λ`; `t^λ` comes first.
pub fn standard_tableaux(lambda: &Multipartition) -> Vec<StandardTableau> {
    fn rec(shape: &Multipartition, suffix: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        if shape.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for x in shape.removable_cells() {
            let smaller = shape.remove_cell(&x).unwrap();
            suffix.push(x);
            rec(&smaller, suffix, out);
            suffix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(lambda, &mut Vec::new(), &mut raw);
    raw.sort_by(|a, b| {
        let ka: Vec<_> = a.iter().map(Cell::reading_key).collect();
        let kb: Vec<_> = b.iter().map(Cell::reading_key).collect();
        ka.cmp(&kb)
    });
    raw.into_iter()
        .map(|positions| StandardTableau {
            shape: lambda.clone(),
            positions,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    fn growth_chains(l: &Multipartition) -> usize {
        if l.is_empty() {
            return 1;
        }
        l.removable_cells()
            .iter()
            .map(|x| growth_chains(&l.remove_cell(x).unwrap()))
            .sum()
    }

    #[test]
    fn counts() {
        assert_eq!(standard_tableaux(&mp("[4]")).len(), 1);
        assert_eq!(standard_tableaux(&mp("[[1],[1]]")).len(), 2);
        assert_eq!(standard_tableaux(&mp("[2,1]")).len(), 2);
        assert_eq!(standard_tableaux(&Multipartition::empty(2)).len(), 1);
        for m in 1..=3 {
            for n in 0..=4 {
                for l in Multipartition::all(m, n) {
                    assert_eq!(standard_tableaux(&l).len(), growth_chains(&l), "{l}");
                }
            }
        }
    }

    #[test]
    fn canonical_first_and_d() {
        for l in Multipartition::all(2, 3) {
            let ts = standard_tableaux(&l);
            assert_eq!(ts[0], canonical_tableau(&l));
            assert!(ts[0].d().is_identity());
        }
        let ts = standard_tableaux(&mp("[[1],[1]]"));
        assert_eq!(ts[1].d(), Permutation::simple(2, 1));
        let t = canonical_tableau(&mp("[[1],[1]]"));
        assert_eq!(t.cell_of(1).comp, 2);
        assert_eq!(t.cell_of(2).comp, 1);
    }

    #[test]
    fn d_relates_to_canonical() {
        // t = t^λ d(t): the entry of t at the cell of k in t^λ is (k)d(t).
        for l in Multipartition::all(2, 3) {
            let canon = canonical_tableau(&l);
            for t in standard_tableaux(&l) {
                let d = t.d();
                for k in 1..=l.size() {
                    assert_eq!(t.entry(&canon.cell_of(k)), Some(d.apply(k)));
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(canonical_tableau(&mp("[[2],[1]]")).to_string(), "[[[1,2]],[[3]]]");
    }
}
