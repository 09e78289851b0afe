use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{common_conductor, Field, Scalar};

/// Parameters `(m, n, q, v_1, …, v_m)` of a cyclotomic Hecke algebra.
///
/// All scalars live in one field: either `Q` or a single `Q(ζ_e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams {
    m: usize,
    n: usize,
    q: Scalar,
    v: Vec<Scalar>,
}

impl HeckeParams {
    /// Validates `q ≠ 0` and `|v| = m`, and moves rational entries into the
    /// cyclotomic field when one is present.
    pub fn new(m: usize, n: usize, q: Scalar, v: Vec<Scalar>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("level m must be >= 1".into()));
        }
        if v.len() != m {
            return Err(Error::InvalidArgument(format!(
                "expected {m} values v_i, got {}",
                v.len()
            )));
        }
        let conductors: Vec<u32> = std::iter::once(&q).chain(&v).filter_map(Scalar::conductor).collect();
        if conductors.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::FieldMismatch {
                left: format!("Q(z{})", conductors[0]),
                right: format!("Q(z{})", conductors.iter().find(|&&c| c != conductors[0]).unwrap()),
            });
        }
        let (q, v) = match common_conductor(std::iter::once(&q).chain(&v)) {
            // Q(ζ_1) = Q(ζ_2) = Q
            Some(1 | 2) => (
                Scalar::from_rational(q.as_rational().unwrap()),
                v.iter().map(|x| Scalar::from_rational(x.as_rational().unwrap())).collect(),
            ),
            Some(e) => (
                q.lift_to(e)?,
                v.iter().map(|x| x.lift_to(e)).collect::<Result<Vec<_>>>()?,
            ),
            None => (q, v),
        };
        if q.is_zero() {
            return Err(Error::InvalidArgument("q must be nonzero".into()));
        }
        Ok(HeckeParams { m, n, q, v })
    }

    /// `q = ζ_r` (or the given `q`) and `v_i = q^{γ_i}`.
    pub fn from_gamma(n: usize, q: Scalar, gamma: &[i64]) -> Result<Self> {
        let v = gamma
            .iter()
            .map(|&g| q.pow(g).ok_or(Error::DivisionByZero))
            .collect::<Result<Vec<_>>>()?;
        HeckeParams::new(gamma.len(), n, q, v)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn v(&self) -> &[Scalar] {
        &self.v
    }

    pub fn conductor(&self) -> Option<u32> {
        self.q.conductor()
    }

    /// Same parameters for another rank `n`.
    pub fn with_rank(&self, n: usize) -> HeckeParams {
        HeckeParams { n, ..self.clone() }
    }

    pub fn all_v_invertible(&self) -> bool {
        self.v.iter().all(|x| !x.is_zero())
    }
}

impl fmt::Display for HeckeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.v.iter().map(|x| x.to_string()).collect();
        write!(f, "m={} n={} q={} v=[{}]", self.m, self.n, self.q, v.join(","))
    }
}

/// Outcome of the semisimplicity criterion, with the first vanishing term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleVerdict {
    pub semisimple: bool,
    pub witness: Option<String>,
}

fn poincare_witness(i: usize) -> String {
    let mut s = String::from("1+q");
    for k in 2..=i {
        s.push_str(&format!("+q^{k}"));
    }
    s
}

/// True iff every `q^i v_j - v_k` (`|i| < n`, `j ≠ k`) and every
/// `1 + q + ⋯ + q^i` (`1 ≤ i < n`) is nonzero.
pub fn is_semisimple(p: &HeckeParams) -> SemisimpleVerdict {
    let n = p.n as i64;
    let q = &p.q;
    let mut partial = q.one_like();
    let mut qi = q.one_like();
    for i in 1..n {
        qi = qi.mul(q);
        partial = partial.add(&qi);
        if partial.is_zero() {
            return SemisimpleVerdict {
                semisimple: false,
                witness: Some(poincare_witness(i as usize)),
            };
        }
    }
    for i in (1 - n)..n {
        let qi = q.pow(i).expect("q is invertible");
        for j in 0..p.m {
            for k in 0..p.m {
                if j != k && qi.mul(&p.v[j]).sub(&p.v[k]).is_zero() {
                    return SemisimpleVerdict {
                        semisimple: false,
                        witness: Some(format!("q^{i}*v_{}-v_{}", j + 1, k + 1)),
                    };
                }
            }
        }
    }
    SemisimpleVerdict {
        semisimple: true,
        witness: None,
    }
}

/// Classes of `{1..m}` under `v_j = v_k q^b`.
///
/// When `q` has finite multiplicative order the full cyclic group is
/// searched; otherwise `|b| ≤ bound`.
pub fn parameter_orbits(p: &HeckeParams, bound: usize) -> Vec<Vec<usize>> {
    let order = p.q.multiplicative_order(1024);
    let exps: Vec<i64> = match order {
        Some(r) => (0..r as i64).collect(),
        None => (-(bound as i64)..=bound as i64).collect(),
    };
    let powers: Vec<Scalar> = exps.iter().map(|&b| p.q.pow(b).unwrap()).collect();
    let mut parent: Vec<usize> = (0..p.m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for j in 0..p.m {
        for k in j + 1..p.m {
            if powers.iter().any(|qb| p.v[k].mul(qb) == p.v[j]) {
                let (a, b) = (find(&mut parent, j), find(&mut parent, k));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_of_block: Vec<usize> = Vec::new();
    for j in 0..p.m {
        let r = find(&mut parent, j);
        match root_of_block.iter().position(|&x| x == r) {
            Some(i) => blocks[i].push(j + 1),
            None => {
                root_of_block.push(r);
                blocks.push(vec![j + 1]);
            }
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn semisimplicity_examples() {
        let p = HeckeParams::new(1, 2, s("-1"), vec![s("1")]).unwrap();
        let verdict = is_semisimple(&p);
        assert!(!verdict.semisimple);
        assert_eq!(verdict.witness.as_deref(), Some("1+q"));
        let p = HeckeParams::new(2, 2, s("2"), vec![s("1"), s("2")]).unwrap();
        assert!(!is_semisimple(&p).semisimple);
        let p = HeckeParams::new(2, 2, s("2"), vec![s("1"), s("3")]).unwrap();
        assert!(is_semisimple(&p).semisimple);
        let p = HeckeParams::new(1, 2, s("z2^1"), vec![s("1")]).unwrap();
        assert!(!is_semisimple(&p).semisimple);
    }

    #[test]
    fn orbit_examples() {
        let p = HeckeParams::new(1, 3, s("2"), vec![s("1")]).unwrap();
        assert_eq!(parameter_orbits(&p, 3), vec![vec![1]]);
        let p = HeckeParams::new(2, 2, s("-1"), vec![s("1"), s("-1")]).unwrap();
        assert_eq!(parameter_orbits(&p, 2), vec![vec![1, 2]]);
        let p = HeckeParams::new(2, 3, s("2"), vec![s("1"), s("3")]).unwrap();
        assert_eq!(parameter_orbits(&p, 3), vec![vec![1], vec![2]]);
    }

    #[test]
    fn validation() {
        assert!(HeckeParams::new(1, 2, s("0"), vec![s("1")]).is_err());
        assert!(HeckeParams::new(2, 2, s("2"), vec![s("1")]).is_err());
        assert!(HeckeParams::new(1, 2, s("z3^1"), vec![s("z4^1")]).is_err());
        let p = HeckeParams::new(2, 2, s("z3^1"), vec![s("1"), s("2")]).unwrap();
        assert_eq!(p.v()[1].conductor(), Some(3));
    }
}
