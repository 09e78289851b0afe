//! The combinatorial Fock space: v-deformed `e_i`, `f_i` action, crystal
//! operators by RA deletion, and Kleshchev multipartitions.

mod crystal;
mod vector;

pub use crystal::{
    crystal_e, crystal_f, crystal_graph_dot, enumerate_kleshchev, good_addable, good_removable,
    is_kleshchev, is_kleshchev_by_tableau, kleshchev_series, ra_word, Letter, RaWord,
};
pub use vector::{classical_i_res, e_op, f_op, weight, FockVector, Weight};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{residue, Cell, Modulus, Multipartition, Residue};

/// Level `m`, modulus `r` and residue vector `γ` of a Fock space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FockConfig {
    modulus: Modulus,
    gamma: Vec<i64>,
}

impl FockConfig {
    /// `γ` is reduced mod `r`.
    pub fn new(modulus: Modulus, gamma: Vec<i64>) -> Result<Self> {
        if gamma.is_empty() {
            return Err(Error::InvalidArgument("gamma must have length m >= 1".into()));
        }
        if let Modulus::Finite(r) = modulus {
            if r < 2 {
                return Err(Error::InvalidArgument(format!("modulus r = {r} must be >= 2")));
            }
        }
        let gamma = gamma.into_iter().map(|g| modulus.reduce(g).0).collect();
        Ok(FockConfig { modulus, gamma })
    }

    /// Level one with `γ = (0)`.
    pub fn level_one(modulus: Modulus) -> Result<Self> {
        FockConfig::new(modulus, vec![0])
    }

    pub fn level(&self) -> usize {
        self.gamma.len()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn residue(&self, x: &Cell) -> Residue {
        residue(x, &self.gamma, self.modulus)
    }

    pub fn reduce(&self, i: i64) -> Residue {
        self.modulus.reduce(i)
    }

    /// Residues whose operators can act nontrivially on `λ`: all of `Z/r`
    /// when `r` is finite, otherwise the residues of addable and removable
    /// nodes. Sorted.
    pub fn active_residues(&self, lambda: &Multipartition) -> Vec<Residue> {
        match self.modulus {
            Modulus::Finite(r) => (0..r as i64).map(Residue).collect(),
            Modulus::Infinite => {
                let mut out: Vec<Residue> = lambda
                    .addable_cells()
                    .iter()
                    .chain(lambda.removable_cells().iter())
                    .map(|x| self.residue(x))
                    .collect();
                out.sort();
                out.dedup();
                out
            }
        }
    }

    pub(crate) fn check_level(&self, lambda: &Multipartition) -> Result<()> {
        if lambda.level() != self.level() {
            return Err(Error::ShapeMismatch(format!(
                "{lambda} has level {}, expected {}",
                lambda.level(),
                self.level()
            )));
        }
        Ok(())
    }
}
