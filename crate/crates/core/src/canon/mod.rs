//! Level-one canonical bases by the LLT algorithm, and decomposition
//! matrices of type A Hecke algebras at roots of unity.

mod decomp;

pub use decomp::{decomposition_matrix, dimension_check, DecompositionMatrix, DimensionRow};

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{quantum_factorial, LaurentPoly};
use crate::fock::{f_op, FockConfig, FockVector};
use crate::shapes::{dominance_linear_extension, dominates_strictly, Modulus, Multipartition, Partition, Residue};

/// One ladder of `λ`: its index, common residue and the cells of `λ` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub index: usize,
    pub residue: Residue,
    pub cells: Vec<(usize, usize)>,
}

fn check_r(r: u32) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r = {r} must be >= 2")));
    }
    Ok(())
}

/// Ladders of an `r`-restricted partition. Cells `(a, b)` and
/// `(a - 1, b + r - 1)` are ladder-adjacent; ladder index `b + (r-1)(a-1)`.
pub fn ladders(lambda: &Partition, r: u32) -> Result<Vec<Ladder>> {
    check_r(r)?;
    if !lambda.is_restricted(r as usize) {
        return Err(Error::InvalidArgument(format!("{lambda} is not {r}-restricted")));
    }
    let mut by_index: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (a0, &len) in lambda.parts().iter().enumerate() {
        for b in 1..=len {
            let a = a0 + 1;
            by_index.entry(b + (r as usize - 1) * (a - 1)).or_default().push((a, b));
        }
    }
    Ok(by_index
        .into_iter()
        .map(|(index, mut cells)| {
            cells.sort();
            let (a, b) = cells[0];
            Ladder {
                index,
                residue: Modulus::Finite(r).reduce(b as i64 - a as i64),
                cells,
            }
        })
        .collect())
}

fn level_one(r: u32) -> Result<FockConfig> {
    FockConfig::level_one(Modulus::Finite(r))
}

/// `A(λ) = f_{i_s}^{(k_s)} ⋯ f_{i_1}^{(k_1)} ∅` along the ladders of `λ`,
/// bar-invariant by construction. Checked to be `λ + Σ_{μ ▷ λ} c_μ μ`.
pub fn a_vector(lambda: &Partition, r: u32) -> Result<FockVector> {
    let cfg = level_one(r)?;
    let mut x = FockVector::basis(&Multipartition::empty(1));
    for ladder in ladders(lambda, r)? {
        let k = ladder.cells.len();
        for _ in 0..k {
            x = f_op(&cfg, &x, ladder.residue)?;
        }
        let fact = quantum_factorial(k as u32);
        let mut divided = FockVector::zero(1);
        for (mu, p) in x.terms() {
            let c = p.divide_exact(&fact).map_err(|_| {
                Error::Invariant(format!("divided power f_{}^({k}) is not integral while building A({lambda})", ladder.residue))
            })?;
            divided.add_term(mu.clone(), c);
        }
        x = divided;
    }
    let top = Multipartition::from_partition(lambda.clone());
    check_unitriangular(&x, &top, "A")?;
    Ok(x)
}

fn check_unitriangular(x: &FockVector, top: &Multipartition, name: &str) -> Result<()> {
    if x.coeff(top) != LaurentPoly::one() {
        return Err(Error::Invariant(format!(
            "{name}({top}) has coefficient {} at {top}",
            x.coeff(top)
        )));
    }
    for (mu, _) in x.terms() {
        if mu != top && !dominates_strictly(mu, top)? {
            return Err(Error::Invariant(format!("{name}({top}) has {mu} in its support, not above {top}")));
        }
    }
    Ok(())
}

/// The bar-invariant `c` with `p - c ∈ vZ[v]`:
/// `c = p_0 + Σ_{k>0} p_{-k}(v^k + v^{-k})`.
pub fn bar_symmetric_part(p: &LaurentPoly) -> LaurentPoly {
    let mut c = LaurentPoly::zero();
    for (k, a) in p.terms() {
        if k <= 0 {
            c.add_term(k, a.clone());
            if k < 0 {
                c.add_term(-k, a.clone());
            }
        }
    }
    c
}

/// `p ∈ vZ[v]`.
fn in_v_zv(p: &LaurentPoly) -> bool {
    p.min_degree().map_or(true, |k| k >= 1)
}

/// The canonical basis `{G(λ)}` of the level-one Fock space at size `n`.
#[derive(Clone, Debug)]
pub struct CanonicalBasis {
    pub r: u32,
    pub n: usize,
    /// Restricted partitions in processing order (dominance-greatest first).
    pub order: Vec<Partition>,
    pub vectors: BTreeMap<Partition, FockVector>,
    pub a_vectors: BTreeMap<Partition, FockVector>,
}

impl CanonicalBasis {
    /// Coordinates of `x` in the basis `{A(μ)}` of the highest-weight
    /// submodule; errors if `x` lies outside it.
    pub fn a_coordinates(&self, x: &FockVector) -> Result<BTreeMap<Partition, LaurentPoly>> {
        let mut rest = x.clone();
        let mut out = BTreeMap::new();
        // least dominant first: A(μ') never contains a μ processed earlier
        for mu in self.order.iter().rev() {
            let c = rest.coeff(&Multipartition::from_partition(mu.clone()));
            if c.is_zero() {
                continue;
            }
            rest.add_scaled(&self.a_vectors[mu], &-c.clone());
            out.insert(mu.clone(), c);
        }
        if !rest.is_zero() {
            return Err(Error::InvalidArgument(format!("vector is not in the highest-weight submodule: {rest}")));
        }
        Ok(out)
    }

    /// The bar involution of the highest-weight submodule: antilinear,
    /// fixing every `A(μ)`.
    pub fn bar(&self, x: &FockVector) -> Result<FockVector> {
        let mut out = FockVector::zero(1);
        for (mu, c) in self.a_coordinates(x)? {
            out.add_scaled(&self.a_vectors[&mu], &c.bar());
        }
        Ok(out)
    }

    pub fn is_bar_invariant(&self, x: &FockVector) -> Result<bool> {
        Ok(self.bar(x)? == *x)
    }

    pub fn get(&self, lambda: &Partition) -> Option<&FockVector> {
        self.vectors.get(lambda)
    }

    /// Subtract bar-invariant multiples of known `G(μ)` until every
    /// coefficient off `λ` lies in `vZ[v]`.
    pub fn straighten(&self, x: &FockVector, lambda: &Partition) -> Result<FockVector> {
        let top = Multipartition::from_partition(lambda.clone());
        let mut x = x.clone();
        let cap = 4 * (self.order.len() + 1) * (self.order.len() + 1);
        for _ in 0..cap {
            let bad = self.order.iter().find(|mu| {
                let key = Multipartition::from_partition((*mu).clone());
                key != top && !in_v_zv(&x.coeff(&key))
            });
            let bad = match bad {
                Some(mu) => mu.clone(),
                None => {
                    if let Some((mu, p)) = x.terms().find(|(mu, p)| **mu != top && !in_v_zv(p)) {
                        return Err(Error::Invariant(format!(
                            "coefficient {p} at non-restricted {mu} while straightening G({lambda})"
                        )));
                    }
                    check_unitriangular(&x, &top, "G")?;
                    if !self.is_bar_invariant(&x)? {
                        return Err(Error::Invariant(format!("G({lambda}) is not bar-invariant")));
                    }
                    return Ok(x);
                }
            };
            let key = Multipartition::from_partition(bad.clone());
            let c = bar_symmetric_part(&x.coeff(&key));
            let g = self.vectors.get(&bad).ok_or_else(|| {
                Error::Invariant(format!("G({bad}) needed before it was computed (straightening {lambda})"))
            })?;
            x.add_scaled(g, &-c);
        }
        Err(Error::Invariant(format!("straightening of G({lambda}) did not terminate")))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.order
                .iter()
                .map(|l| json!({"lambda": l.to_string(), "G": self.vectors[l].to_json()}))
                .collect(),
        )
    }
}

/// `r`-restricted partitions of `n`, most dominant first.
pub fn restricted_partitions(n: usize, r: u32) -> Vec<Partition> {
    let all: Vec<Multipartition> = Partition::all(n)
        .into_iter()
        .filter(|p| p.is_restricted(r as usize))
        .map(Multipartition::from_partition)
        .collect();
    dominance_linear_extension(&all)
        .into_iter()
        .map(|m| m.components()[0].clone())
        .collect()
}

pub fn canonical_basis(n: usize, r: u32) -> Result<CanonicalBasis> {
    canonical_basis_in_order(n, r, restricted_partitions(n, r))
}

/// As [`canonical_basis`], processing the given linear extension of
/// dominance on the restricted partitions.
pub fn canonical_basis_in_order(n: usize, r: u32, order: Vec<Partition>) -> Result<CanonicalBasis> {
    check_r(r)?;
    let mut basis = CanonicalBasis {
        r,
        n,
        order: order.clone(),
        vectors: BTreeMap::new(),
        a_vectors: BTreeMap::new(),
    };
    for lambda in &order {
        let a = a_vector(lambda, r)?;
        basis.a_vectors.insert(lambda.clone(), a.clone());
        let g = basis.straighten(&a, lambda)?;
        basis.vectors.insert(lambda.clone(), g);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    #[test]
    fn ladder_examples() {
        let l = ladders(&p("[1]"), 2).unwrap();
        assert_eq!(l, vec![Ladder { index: 1, residue: Residue(0), cells: vec![(1, 1)] }]);
        let l = ladders(&p("[1,1]"), 2).unwrap();
        assert_eq!(l.iter().map(|x| (x.residue, x.cells.clone())).collect::<Vec<_>>(),
            vec![(Residue(0), vec![(1, 1)]), (Residue(1), vec![(2, 1)])]);
        let l = ladders(&p("[2,1]"), 2).unwrap();
        assert_eq!(l[1].cells, vec![(1, 2), (2, 1)]);
        assert!(ladders(&p("[2]"), 2).is_err());
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_vector(&Partition::empty(), 2).unwrap(), FockVector::basis(&Multipartition::empty(1)));
        assert_eq!(a_vector(&p("[1]"), 2).unwrap(), FockVector::basis(&mp("[1]")));
        let a = a_vector(&p("[1,1]"), 2).unwrap();
        assert_eq!(a.coeff(&mp("[1,1]")), LaurentPoly::one());
        assert_eq!(a.coeff(&mp("[2]")), LaurentPoly::monomial(1, 1));
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn bar_symmetric_part_examples() {
        let q: LaurentPoly = "2*v^-2+3+v^1".parse().unwrap();
        let c = bar_symmetric_part(&q);
        assert_eq!(c, "2*v^-2+3+2*v^2".parse().unwrap());
        assert!(in_v_zv(&(&q - &c)));
    }

    #[test]
    fn canonical_examples() {
        let b = canonical_basis(0, 2).unwrap();
        assert_eq!(b.vectors[&Partition::empty()], FockVector::basis(&Multipartition::empty(1)));
        let b = canonical_basis(2, 2).unwrap();
        assert_eq!(b.vectors[&p("[1,1]")], a_vector(&p("[1,1]"), 2).unwrap());
        let b = canonical_basis(3, 4).unwrap();
        for (l, g) in &b.vectors {
            assert_eq!(*g, FockVector::basis(&Multipartition::from_partition(l.clone())));
        }
    }
}
