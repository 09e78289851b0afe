use rayon::prelude::*;

use super::cellular::{CellIndex, CellularTable};
use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::hecke::{defining_relations, HeckeAlgebra};
use crate::linalg::{self, Matrix};
use crate::shapes::{Multipartition, StandardTableau};

/// `S^λ` with one matrix per generator; rows are images of basis vectors
/// (the algebra acts on the right).
pub struct SpechtModule<F: Field> {
    pub lambda: Multipartition,
    pub tableaux: Vec<StandardTableau>,
    /// `matrices[i-1]` is the action of `a_i`.
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> SpechtModule<F> {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Check every defining relation of the algebra on the matrices.
    pub fn check_relations(&self, alg: &HeckeAlgebra<F>) -> Result<()> {
        let k = self.dim();
        let zero = alg.zero_scalar();
        let identity: Matrix<F> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { alg.one_scalar() } else { zero.clone() }).collect())
            .collect();
        let eval = |poly: &[(F, Vec<usize>)]| -> Matrix<F> {
            let mut out = vec![vec![zero.clone(); k]; k];
            for (c, word) in poly {
                let mut m = identity.clone();
                for &i in word {
                    m = linalg::mat_mul(&m, &self.matrices[i - 1]);
                }
                for (r, row) in m.iter().enumerate() {
                    for (s, x) in row.iter().enumerate() {
                        out[r][s] = out[r][s].add(&x.mul(c));
                    }
                }
            }
            out
        };
        for rel in defining_relations(alg) {
            if eval(&rel.lhs) != eval(&rel.rhs) {
                return Err(Error::Invariant(format!(
                    "Specht matrices of {} violate {}",
                    self.lambda, rel.name
                )));
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> CellularTable<'a, F> {
    /// Coordinates `(λ, t^λ, u)` of `x ∈ m_λ H` modulo the ideal above `λ`.
    fn top_row(&self, x: &crate::hecke::HeckeElement<F>, shape: usize) -> Result<Vec<F>> {
        let k = self.shapes()[shape].dim();
        let mut row = vec![self.algebra().zero_scalar(); k];
        for (ci, c) in self.expand_mod_ideal(x, shape)? {
            if ci.s != 0 {
                return Err(Error::Invariant(format!(
                    "nonzero coordinate at first tableau {} for {}",
                    ci.s,
                    self.shapes()[shape].lambda
                )));
            }
            row[ci.t] = c;
        }
        Ok(row)
    }

    pub fn specht_module(&self, lambda: &Multipartition) -> Result<SpechtModule<F>> {
        let shape = self.shape_position(lambda)?;
        let data = &self.shapes()[shape];
        let alg = self.algebra();
        let matrices = (1..=alg.n())
            .map(|i| {
                data.right_rows
                    .par_iter()
                    .map(|x| self.top_row(&alg.right_mul_gen(x, i)?, shape))
                    .collect::<Result<Matrix<F>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpechtModule {
            lambda: lambda.clone(),
            tableaux: data.tableaux.clone(),
            matrices,
        })
    }

    /// Gram matrix: entry `(t, s)` is the coefficient of `m_λ` in
    /// `m_λ a_{d(s)} a_{d(t)}^* m_λ` modulo the ideal above `λ`.
    pub fn gram(&self, lambda: &Multipartition) -> Result<Matrix<F>> {
        let shape = self.shape_position(lambda)?;
        let data = &self.shapes()[shape];
        let alg = self.algebra();
        let k = data.dim();
        let starred = data
            .right_rows
            .iter()
            .map(|x| alg.star(x))
            .collect::<Result<Vec<_>>>()?;
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|t| (0..k).map(move |s| (t, s))).collect();
        let entries = pairs
            .into_par_iter()
            .map(|(t, s)| {
                let y = alg.mul(&data.right_rows[s], &starred[t])?;
                let mut value = alg.zero_scalar();
                for (ci, c) in self.expand_mod_ideal(&y, shape)? {
                    if ci == (CellIndex { shape, s: 0, t: 0 }) {
                        value = c;
                    } else {
                        return Err(Error::Invariant(format!(
                            "m_λ h m_λ is not a multiple of m_λ modulo the ideal (λ = {lambda})"
                        )));
                    }
                }
                Ok(value)
            })
            .collect::<Result<Vec<F>>>()?;
        let gram: Matrix<F> = entries.chunks(k.max(1)).map(<[F]>::to_vec).take(k).collect();
        for t in 0..k {
            for s in 0..t {
                if gram[t][s] != gram[s][t] {
                    return Err(Error::Invariant(format!("Gram matrix of {lambda} is not symmetric")));
                }
            }
        }
        Ok(gram)
    }

    /// `dim D^λ`, the rank of the Gram matrix.
    pub fn dim_simple(&self, lambda: &Multipartition) -> Result<usize> {
        Ok(linalg::rank(&self.gram(lambda)?))
    }

    /// Shapes with `D^λ ≠ 0`, in the table's dominance-compatible order.
    pub fn simple_labels(&self) -> Result<Vec<Multipartition>> {
        let ranks = self
            .shapes()
            .par_iter()
            .map(|d| self.dim_simple(&d.lambda))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .shapes()
            .iter()
            .zip(ranks)
            .filter(|(_, r)| *r > 0)
            .map(|(d, _)| d.lambda.clone())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;
    use crate::hecke::{is_semisimple, HeckeParams};

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    fn alg(m: usize, n: usize, q: &str, v: &[&str]) -> HeckeAlgebra<Scalar> {
        HeckeAlgebra::new(&HeckeParams::new(m, n, s(q), v.iter().map(|x| s(x)).collect()).unwrap()).unwrap()
    }

    fn mp(x: &str) -> Multipartition {
        Multipartition::parse(x).unwrap()
    }

    #[test]
    fn gram_examples() {
        let a = alg(1, 1, "-1", &["1"]);
        let t = CellularTable::new(&a).unwrap();
        assert_eq!(t.gram(&mp("[1]")).unwrap(), vec![vec![s("1")]]);
        let a = alg(1, 2, "-1", &["1"]);
        let t = CellularTable::new(&a).unwrap();
        assert_eq!(t.gram(&mp("[2]")).unwrap(), vec![vec![s("0")]]);
        assert_eq!(t.dim_simple(&mp("[2]")).unwrap(), 0);
        assert_eq!(t.dim_simple(&mp("[1,1]")).unwrap(), 1);
        assert_eq!(t.simple_labels().unwrap(), vec![mp("[1,1]")]);
    }

    #[test]
    fn empty_shape() {
        let a = alg(2, 0, "2", &["1", "3"]);
        let t = CellularTable::new(&a).unwrap();
        assert_eq!(t.dim_simple(&Multipartition::empty(2)).unwrap(), 1);
        assert_eq!(t.simple_labels().unwrap(), vec![Multipartition::empty(2)]);
    }

    #[test]
    fn row_shape_acts_by_q() {
        let a = alg(1, 2, "5", &["1"]);
        let t = CellularTable::new(&a).unwrap();
        let sp = t.specht_module(&mp("[2]")).unwrap();
        assert_eq!(sp.matrices[1], vec![vec![s("5")]]);
    }

    #[test]
    fn semisimple_grams_are_nonsingular() {
        let a = alg(2, 3, "2", &["1", "3"]);
        assert!(is_semisimple(a.params()).semisimple);
        let t = CellularTable::new(&a).unwrap();
        for d in t.shapes() {
            let g = t.gram(&d.lambda).unwrap();
            assert!(linalg::is_nonsingular(&g), "{}", d.lambda);
            let sp = t.specht_module(&d.lambda).unwrap();
            sp.check_relations(&a).unwrap();
        }
    }
}
