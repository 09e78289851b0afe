use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::FockConfig;
use crate::error::Result;
use crate::exactnum::LaurentPoly;
use crate::shapes::{n_statistics, node_sets, Multipartition, Residue};

/// Finitely supported `Z[v, v^-1]`-combination of multipartitions of one level.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FockVector {
    level: usize,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero(level: usize) -> Self {
        FockVector {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(lambda: &Multipartition) -> Self {
        let mut x = FockVector::zero(lambda.level());
        x.add_term(lambda.clone(), LaurentPoly::one());
        x
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in the order of [`Multipartition`]'s `Ord`.
    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Multipartition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Multipartition, c: LaurentPoly) {
        assert_eq!(lambda.level(), self.level, "Fock vector level mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self + c · other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (mu, p) in other.terms() {
            self.add_term(mu.clone(), p * c);
        }
    }

    pub fn sub(&self, other: &FockVector) -> FockVector {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::monomial(-1, 0));
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.level);
        out.add_scaled(self, c);
        out
    }

    /// Coefficients evaluated at `v = 1`, zeros dropped.
    pub fn at_one(&self) -> BTreeMap<Multipartition, BigInt> {
        self.terms
            .iter()
            .map(|(l, p)| (l.clone(), p.eval_at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, p)| json!({"shape": l.to_string(), "coefficient": p.to_string()}))
                .collect(),
        )
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, p)| format!("({p}){l}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `f_i x`, with `f_i λ = Σ v^{N_i^b(μ/λ)} μ` over `μ = λ + (i-node)`.
pub fn f_op(cfg: &FockConfig, x: &FockVector, i: Residue) -> Result<FockVector> {
    let mut out = FockVector::zero(cfg.level());
    for (lambda, c) in x.terms() {
        cfg.check_level(lambda)?;
        let (add, _) = node_sets(lambda, i, cfg.gamma(), cfg.modulus());
        for y in &add {
            let n = n_statistics(lambda, y, i, cfg.gamma(), cfg.modulus());
            out.add_term(lambda.add_cell(y)?, c.shift(n.below as i32));
        }
    }
    Ok(out)
}

/// `e_i x`, with `e_i λ = Σ v^{-N_i^a(λ/μ)} μ` over `μ = λ - (i-node)`.
pub fn e_op(cfg: &FockConfig, x: &FockVector, i: Residue) -> Result<FockVector> {
    let mut out = FockVector::zero(cfg.level());
    for (lambda, c) in x.terms() {
        cfg.check_level(lambda)?;
        let (_, rem) = node_sets(lambda, i, cfg.gamma(), cfg.modulus());
        for y in &rem {
            let n = n_statistics(lambda, y, i, cfg.gamma(), cfg.modulus());
            out.add_term(lambda.remove_cell(y)?, c.shift(-n.above as i32));
        }
    }
    Ok(out)
}

/// `N_i(λ)` for each active residue, and `N_d(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    pub n_i: BTreeMap<Residue, i64>,
    pub n_d: i64,
}

pub fn weight(lambda: &Multipartition, cfg: &FockConfig) -> Result<Weight> {
    cfg.check_level(lambda)?;
    let n_i = cfg
        .active_residues(lambda)
        .into_iter()
        .map(|i| {
            let (add, rem) = node_sets(lambda, i, cfg.gamma(), cfg.modulus());
            (i, add.len() as i64 - rem.len() as i64)
        })
        .collect();
    let zero = cfg.reduce(0);
    let n_d = lambda.cells().iter().filter(|x| cfg.residue(x) == zero).count() as i64;
    Ok(Weight { n_i, n_d })
}

/// `i`-restriction on Grothendieck-group labels: every `μ` with `λ/μ` an
/// `i`-node, each with coefficient one.
pub fn classical_i_res(lambda: &Multipartition, i: Residue, cfg: &FockConfig) -> Result<BTreeMap<Multipartition, i64>> {
    cfg.check_level(lambda)?;
    let (_, rem) = node_sets(lambda, i, cfg.gamma(), cfg.modulus());
    let mut out = BTreeMap::new();
    for y in &rem {
        *out.entry(lambda.remove_cell(y)?).or_insert(0) += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Modulus;

    fn mp(s: &str) -> Multipartition {
        Multipartition::parse(s).unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn f_examples() {
        let c = FockConfig::level_one(Modulus::Finite(2)).unwrap();
        let x = f_op(&c, &FockVector::basis(&Multipartition::empty(1)), Residue(0)).unwrap();
        assert_eq!(x, FockVector::basis(&mp("[1]")));
        let y = f_op(&c, &x, Residue(1)).unwrap();
        assert_eq!(y.coeff(&mp("[1,1]")), LaurentPoly::one());
        assert_eq!(y.coeff(&mp("[2]")), lp("v"));
        let c2 = FockConfig::new(Modulus::Finite(2), vec![0, 0]).unwrap();
        let z = f_op(&c2, &FockVector::basis(&Multipartition::empty(2)), Residue(0)).unwrap();
        assert_eq!(z.coeff(&mp("[[1],[]]")), lp("v"));
        assert_eq!(z.coeff(&mp("[[],[1]]")), LaurentPoly::one());
        assert_eq!(z.len(), 2);
    }

    #[test]
    fn e_inverts_single_box() {
        let c = FockConfig::level_one(Modulus::Finite(3)).unwrap();
        let x = e_op(&c, &FockVector::basis(&mp("[1]")), Residue(0)).unwrap();
        assert_eq!(x, FockVector::basis(&Multipartition::empty(1)));
        assert!(e_op(&c, &x, Residue(0)).unwrap().is_zero());
    }

    #[test]
    fn weight_examples() {
        let c = FockConfig::level_one(Modulus::Finite(2)).unwrap();
        let w = weight(&mp("[1]"), &c).unwrap();
        assert_eq!(w.n_i[&Residue(0)], -1);
        assert_eq!(w.n_i[&Residue(1)], 2);
        let c3 = FockConfig::level_one(Modulus::Finite(3)).unwrap();
        assert_eq!(weight(&mp("[2,1]"), &c3).unwrap().n_d, 1);
        let c2 = FockConfig::new(Modulus::Finite(3), vec![0, 2, 0]).unwrap();
        let w = weight(&Multipartition::empty(3), &c2).unwrap();
        assert_eq!((w.n_i[&Residue(0)], w.n_i[&Residue(2)], w.n_d), (2, 1, 0));
    }

    #[test]
    fn restriction_examples() {
        let c = FockConfig::level_one(Modulus::Finite(2)).unwrap();
        assert!(classical_i_res(&Multipartition::empty(1), Residue(0), &c).unwrap().is_empty());
        let r = classical_i_res(&mp("[2]"), Residue(1), &c).unwrap();
        assert_eq!(r.into_iter().collect::<Vec<_>>(), vec![(mp("[1]"), 1)]);
    }
}
