use rayon::prelude::*;

use super::algebra::{Acc, HeckeAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::exactnum::Field;

/// Which regular representation the relations are checked in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `y ↦ y · x`
    Right,
    /// `y ↦ x · y`
    Left,
}

/// A defining relation `lhs = rhs`, each side a list of monomials
/// `(coefficient, word in the a_i)`.
pub(crate) struct Relation<F> {
    pub(crate) name: String,
    pub(crate) lhs: Vec<(F, Vec<usize>)>,
    pub(crate) rhs: Vec<(F, Vec<usize>)>,
}

pub(crate) fn defining_relations<F: Field>(alg: &HeckeAlgebra<F>) -> Vec<Relation<F>> {
    let n = alg.n();
    let one = alg.one_scalar();
    let zero = alg.zero_scalar();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    // (a_1 - v_1)⋯(a_1 - v_m) expanded as Σ c_k a_1^k
    let mut poly = vec![one.clone()];
    for vj in alg.v() {
        let mut next = vec![zero.clone(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(vj));
        }
        poly = next;
    }
    out.push(Relation {
        name: "(a_1-v_1)...(a_1-v_m)=0".into(),
        lhs: poly.into_iter().enumerate().map(|(k, c)| (c, vec![1; k])).collect(),
        rhs: Vec::new(),
    });
    let q = alg.q().clone();
    for i in 2..=n {
        // (a_i - q)(a_i + 1) = a_i^2 + (1-q) a_i - q
        out.push(Relation {
            name: format!("(a_{i}-q)(a_{i}+1)=0"),
            lhs: vec![
                (one.clone(), vec![i, i]),
                (one.sub(&q), vec![i]),
                (q.neg(), vec![]),
            ],
            rhs: Vec::new(),
        });
    }
    if n >= 2 {
        out.push(Relation {
            name: "a_1a_2a_1a_2=a_2a_1a_2a_1".into(),
            lhs: vec![(one.clone(), vec![1, 2, 1, 2])],
            rhs: vec![(one.clone(), vec![2, 1, 2, 1])],
        });
    }
    for i in 1..=n {
        for j in i + 2..=n {
            out.push(Relation {
                name: format!("a_{i}a_{j}=a_{j}a_{i}"),
                lhs: vec![(one.clone(), vec![i, j])],
                rhs: vec![(one.clone(), vec![j, i])],
            });
        }
    }
    for i in 3..=n {
        out.push(Relation {
            name: format!("a_{i}a_{}a_{i}=a_{}a_{i}a_{}", i - 1, i - 1, i - 1),
            lhs: vec![(one.clone(), vec![i, i - 1, i])],
            rhs: vec![(one.clone(), vec![i - 1, i, i - 1])],
        });
    }
    out
}

fn apply_gen<F: Field>(alg: &HeckeAlgebra<F>, side: Side, i: usize, x: &[(u32, F)]) -> Sparse<F> {
    match side {
        Side::Left => alg.left_gen_vec(i, x),
        Side::Right => {
            let mut acc = Acc::new();
            for (b, c) in x {
                acc.add_scaled(alg.right_gen(*b as usize, i), c);
            }
            acc.finish()
        }
    }
}

/// Image of the basis element `b` under the operator of `Σ c · word`.
fn apply_poly<F: Field>(alg: &HeckeAlgebra<F>, side: Side, b: usize, poly: &[(F, Vec<usize>)]) -> Sparse<F> {
    let mut acc = Acc::new();
    for (c, word) in poly {
        let mut t: Sparse<F> = vec![(b as u32, alg.one_scalar())];
        // operator of a_{i1}⋯a_{il}: right side applies i1 first, left side il first
        match side {
            Side::Right => {
                for &i in word {
                    t = apply_gen(alg, side, i, &t);
                }
            }
            Side::Left => {
                for &i in word.iter().rev() {
                    t = apply_gen(alg, side, i, &t);
                }
            }
        }
        acc.add_scaled(&t, c);
    }
    acc.finish()
}

/// Verify every defining relation as an operator identity on all basis
/// elements. The error names the first violated relation.
pub fn check_relations<F: Field>(alg: &HeckeAlgebra<F>, side: Side) -> Result<()> {
    let dim = alg.dim();
    for rel in defining_relations(alg) {
        let bad = (0..dim).into_par_iter().find_any(|&b| {
            apply_poly(alg, side, b, &rel.lhs) != apply_poly(alg, side, b, &rel.rhs)
        });
        if let Some(b) = bad {
            return Err(Error::Invariant(format!(
                "relation {} fails on basis element {:?} ({side:?} regular representation)",
                rel.name,
                alg.basis().normal_index(b)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;
    use crate::hecke::HeckeParams;

    #[test]
    fn relations_small_rational() {
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let v: Vec<Scalar> = (0..m).map(|k| Scalar::from_int(2 * k as i64 + 3)).collect();
            let p = HeckeParams::new(m, n, Scalar::from_int(5), v).unwrap();
            let a = HeckeAlgebra::<Scalar>::new(&p).unwrap();
            check_relations(&a, Side::Left).unwrap();
            check_relations(&a, Side::Right).unwrap();
        }
    }
}
