use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde_json::json;

use super::basis::{Basis, NormalIndex};
use super::params::HeckeParams;
use crate::error::{Error, Result};
use crate::exactnum::{Field, FromScalar};
use crate::shapes::Permutation;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

pub(crate) type Sparse<F> = Vec<(u32, F)>;

/// Accumulator for sparse linear combinations.
pub(crate) struct Acc<F: Field> {
    map: HashMap<u32, F>,
}

impl<F: Field> Acc<F> {
    pub(crate) fn new() -> Self {
        Acc { map: HashMap::new() }
    }

    pub(crate) fn add(&mut self, b: u32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&b) {
            Some(x) => *x = x.add(&c),
            None => {
                self.map.insert(b, c);
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, v: &[(u32, F)], c: &F) {
        for (b, x) in v {
            self.add(*b, x.mul(c));
        }
    }

    pub(crate) fn finish(self) -> Sparse<F> {
        let mut v: Sparse<F> = self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_unstable_by_key(|(b, _)| *b);
        v
    }
}

/// An element of a specific [`HeckeAlgebra`], as sorted sparse coordinates
/// in the normal-form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement<F: Field> {
    alg: u64,
    terms: Sparse<F>,
}

impl<F: Field> HeckeElement<F> {
    pub fn terms(&self) -> impl Iterator<Item = (usize, &F)> + '_ {
        self.terms.iter().map(|(b, c)| (*b as usize, c))
    }

    pub fn coeff(&self, b: usize) -> Option<&F> {
        self.terms
            .binary_search_by_key(&(b as u32), |(i, _)| *i)
            .ok()
            .map(|i| &self.terms[i].1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coordinates.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The cyclotomic Hecke algebra `H_n(v_1, …, v_m; q)` over a field `F`.
///
/// Elements are kept in the basis `L^e a_w`. Multiplication is built from
/// left multiplication of basis elements by the generators `a_i` and the
/// Murphy elements `L_k`; the results needed repeatedly are memoized in
/// lock-free once-cells, so the algebra can be shared between threads.
pub struct HeckeAlgebra<F: Field> {
    id: u64,
    params: HeckeParams,
    basis: Arc<Basis>,
    q: F,
    qm1: F,
    qinv: F,
    v: Vec<F>,
    /// `L_1^m = Σ_j reduce[j] L_1^j`.
    reduce: Vec<F>,
    /// `L_k · b` for `e_k = m-1`, indexed by `(k-1)·dim + b`.
    overflow: Vec<OnceLock<Sparse<F>>>,
    /// `b · a_i`, indexed by `(i-1)·dim + b`.
    right: Vec<OnceLock<Sparse<F>>>,
}

impl<F: FromScalar> HeckeAlgebra<F> {
    pub fn new(params: &HeckeParams) -> Result<Self> {
        let q = F::from_scalar(params.q())?;
        let v = params
            .v()
            .iter()
            .map(F::from_scalar)
            .collect::<Result<Vec<_>>>()?;
        Self::from_field_values(params.clone(), q, v)
    }
}

impl<F: Field> HeckeAlgebra<F> {
    fn from_field_values(params: HeckeParams, q: F, v: Vec<F>) -> Result<Self> {
        let qinv = q.inv().ok_or_else(|| Error::InvalidArgument("q must be invertible".into()))?;
        let m = params.m();
        let n = params.n();
        let one = q.one_like();
        // Π (x - v_j), low degree first
        let mut poly = vec![one.clone()];
        for vj in &v {
            let mut next = vec![q.zero_like(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] = next[k + 1].add(c);
                next[k] = next[k].sub(&c.mul(vj));
            }
            poly = next;
        }
        let reduce = poly[..m].iter().map(F::neg).collect();
        let basis = Arc::new(Basis::new(m, n));
        let dim = basis.dim;
        Ok(HeckeAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            qm1: q.sub(&one),
            qinv,
            q,
            v,
            reduce,
            overflow: (0..n * dim).map(|_| OnceLock::new()).collect(),
            right: (0..n * dim).map(|_| OnceLock::new()).collect(),
            basis,
            params,
        })
    }

    pub fn params(&self) -> &HeckeParams {
        &self.params
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim
    }

    pub fn m(&self) -> usize {
        self.basis.m
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn v(&self) -> &[F] {
        &self.v
    }

    pub fn zero_scalar(&self) -> F {
        self.q.zero_like()
    }

    pub fn one_scalar(&self) -> F {
        self.q.one_like()
    }

    fn wrap(&self, terms: Sparse<F>) -> HeckeElement<F> {
        HeckeElement { alg: self.id, terms }
    }

    pub(crate) fn element_from_sparse(&self, terms: Sparse<F>) -> HeckeElement<F> {
        self.wrap(terms)
    }

    fn check(&self, x: &HeckeElement<F>) -> Result<()> {
        if x.alg == self.id {
            Ok(())
        } else {
            Err(Error::ParameterMismatch)
        }
    }

    pub fn zero(&self) -> HeckeElement<F> {
        self.wrap(Vec::new())
    }

    pub fn unit(&self) -> HeckeElement<F> {
        self.basis_element(0)
    }

    pub fn scalar(&self, c: F) -> HeckeElement<F> {
        if c.is_zero() {
            self.zero()
        } else {
            self.wrap(vec![(0, c)])
        }
    }

    pub fn basis_element(&self, b: usize) -> HeckeElement<F> {
        assert!(b < self.dim(), "basis index {b} out of range");
        self.wrap(vec![(b as u32, self.one_scalar())])
    }

    pub fn element(&self, idx: &NormalIndex) -> Result<HeckeElement<F>> {
        Ok(self.basis_element(self.basis.index_of(idx)?))
    }

    /// Build an element from `(basis index, coefficient)` pairs.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (usize, F)>) -> Result<HeckeElement<F>> {
        let mut acc = Acc::new();
        for (b, c) in terms {
            if b >= self.dim() {
                return Err(Error::IndexOutOfRange {
                    index: b,
                    max: self.dim() - 1,
                });
            }
            acc.add(b as u32, c);
        }
        Ok(self.wrap(acc.finish()))
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.n(),
            });
        }
        Ok(())
    }

    /// `a_i`. For `i = 1` this is `L_1`.
    pub fn generator(&self, i: usize) -> Result<HeckeElement<F>> {
        self.check_gen(i)?;
        Ok(self.wrap(self.left_gen_vec(i, &[(0, self.one_scalar())])))
    }

    /// The Murphy element `L_i`.
    pub fn murphy(&self, i: usize) -> Result<HeckeElement<F>> {
        self.check_gen(i)?;
        Ok(self.wrap(self.left_l_vec(i, &[(0, self.one_scalar())])))
    }

    /// `a_w` for a permutation of `{1..n}`.
    pub fn a_w(&self, w: &Permutation) -> Result<HeckeElement<F>> {
        let widx = self
            .basis
            .perm_index(w)
            .ok_or_else(|| Error::ShapeMismatch(format!("{w} is not in S_{}", self.n())))?;
        Ok(self.basis_element(widx))
    }

    /// Product `a_{i1+1} ⋯ a_{il+1}` along an arbitrary word in the `s_i`.
    pub fn a_word(&self, word: &[usize]) -> Result<HeckeElement<F>> {
        let mut t: Sparse<F> = vec![(0, self.one_scalar())];
        for &j in word.iter().rev() {
            if j == 0 || j >= self.n() {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    max: self.n().saturating_sub(1),
                });
            }
            t = self.left_gen_vec(j + 1, &t);
        }
        Ok(self.wrap(t))
    }

    pub fn add(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = Acc::new();
        acc.add_scaled(&x.terms, &self.one_scalar());
        acc.add_scaled(&y.terms, &self.one_scalar());
        Ok(self.wrap(acc.finish()))
    }

    pub fn sub(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(x)?;
        self.check(y)?;
        let mut acc = Acc::new();
        acc.add_scaled(&x.terms, &self.one_scalar());
        acc.add_scaled(&y.terms, &self.one_scalar().neg());
        Ok(self.wrap(acc.finish()))
    }

    pub fn scale(&self, x: &HeckeElement<F>, c: &F) -> Result<HeckeElement<F>> {
        self.check(x)?;
        let mut acc = Acc::new();
        acc.add_scaled(&x.terms, c);
        Ok(self.wrap(acc.finish()))
    }

    pub fn mul(&self, x: &HeckeElement<F>, y: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(x)?;
        self.check(y)?;
        if let [(b, c)] = y.terms.as_slice() {
            // right multiplication by a generator hits the memo table
            if c.is_one() {
                if let Some(i) = self.generator_of(*b as usize) {
                    return Ok(self.right_gen_elem(x, i));
                }
            }
        }
        let mut acc = Acc::new();
        for (b, c) in &x.terms {
            let t = self.basis_times(*b as usize, &y.terms);
            acc.add_scaled(&t, c);
        }
        Ok(self.wrap(acc.finish()))
    }

    /// `i` when the basis element `b` is the generator `a_i` itself.
    fn generator_of(&self, b: usize) -> Option<usize> {
        let (eidx, widx) = self.basis.split(b);
        if eidx == 0 {
            let word = self.basis.word(widx);
            if word.len() == 1 {
                return Some(word[0] + 1);
            }
        } else if widx == 0 && self.m() >= 2 && eidx == 1 {
            return Some(1);
        }
        None
    }

    /// `x · a_i`.
    pub fn right_mul_gen(&self, x: &HeckeElement<F>, i: usize) -> Result<HeckeElement<F>> {
        self.check(x)?;
        self.check_gen(i)?;
        Ok(self.right_gen_elem(x, i))
    }

    /// `a_i · x`.
    pub fn left_mul_gen(&self, x: &HeckeElement<F>, i: usize) -> Result<HeckeElement<F>> {
        self.check(x)?;
        self.check_gen(i)?;
        Ok(self.wrap(self.left_gen_vec(i, &x.terms)))
    }

    fn right_gen_elem(&self, x: &HeckeElement<F>, i: usize) -> HeckeElement<F> {
        let mut acc = Acc::new();
        for (b, c) in &x.terms {
            acc.add_scaled(self.right_gen(*b as usize, i), c);
        }
        self.wrap(acc.finish())
    }

    /// The anti-involution fixing every `a_i`: `(L^e a_w)^* = a_{w^{-1}} L^e`.
    pub fn star(&self, x: &HeckeElement<F>) -> Result<HeckeElement<F>> {
        self.check(x)?;
        let mut acc = Acc::new();
        for (b, c) in &x.terms {
            let (eidx, widx) = self.basis.split(*b as usize);
            let mut t: Sparse<F> = vec![(self.basis.join(eidx, 0) as u32, c.clone())];
            for &j in self.basis.word(widx) {
                t = self.left_gen_vec(j + 1, &t);
            }
            acc.add_scaled(&t, &self.one_scalar());
        }
        Ok(self.wrap(acc.finish()))
    }

    /// Coefficient of the unit.
    pub fn trace(&self, x: &HeckeElement<F>) -> Result<F> {
        self.check(x)?;
        Ok(x.coeff(0).cloned().unwrap_or_else(|| self.zero_scalar()))
    }

    /// Serializable form: a list of `{exponents, word, coefficient}`.
    pub fn to_json(&self, x: &HeckeElement<F>) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = x
            .terms
            .iter()
            .map(|(b, c)| {
                let (_, widx) = self.basis.split(*b as usize);
                json!({
                    "exponents": self.basis.exponents(*b as usize),
                    "word": self.basis.word(widx),
                    "coefficient": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    // --- engine -------------------------------------------------------

    /// `a_i · b` accumulated into `acc` with coefficient `c`.
    fn left_gen_into(&self, i: usize, b: usize, c: &F, acc: &mut Acc<F>) {
        let basis = &*self.basis;
        let (eidx, widx) = basis.split(b);
        if i == 1 {
            let e1 = basis.exponent(eidx, 1);
            if e1 + 1 < basis.m {
                acc.add(basis.join(eidx + 1, widx) as u32, c.clone());
            } else {
                let base = eidx - e1;
                for (j, r) in self.reduce.iter().enumerate() {
                    acc.add(basis.join(base + j, widx) as u32, r.mul(c));
                }
            }
            return;
        }
        let j = i - 1;
        let (pz, py) = (basis.pw[i - 1], basis.pw[i]);
        let x = basis.exponent(eidx, i - 1);
        let y = basis.exponent(eidx, i);
        let e0 = eidx - x * pz - y * py;
        // a_i Z^x Y^y = Z^y Y^x a_i + (q-1) Y (Z^x Y^y - Z^y Y^x) / (Y - Z)
        let swapped = e0 + y * pz + x * py;
        let sw = basis.left[j][widx] as usize;
        if basis.left_descent[j][widx] {
            acc.add(basis.join(swapped, sw) as u32, c.mul(&self.q));
            acc.add(basis.join(swapped, widx) as u32, c.mul(&self.qm1));
        } else {
            acc.add(basis.join(swapped, sw) as u32, c.clone());
        }
        if x != y {
            let coef = if x > y { c.mul(&self.qm1).neg() } else { c.mul(&self.qm1) };
            let (lo, hi) = (x.min(y), x.max(y));
            for t in 0..hi - lo {
                let ez = e0 + (lo + t) * pz + (hi - t) * py;
                acc.add(basis.join(ez, widx) as u32, coef.clone());
            }
        }
    }

    pub(crate) fn left_gen_vec(&self, i: usize, x: &[(u32, F)]) -> Sparse<F> {
        let mut acc = Acc::new();
        for (b, c) in x {
            self.left_gen_into(i, *b as usize, c, &mut acc);
        }
        acc.finish()
    }

    /// `L_k · b` when `e_k = m-1`, via `L_k = q^{1-k} a_k ⋯ a_1 ⋯ a_k`.
    fn overflow_l(&self, k: usize, b: usize) -> &Sparse<F> {
        self.overflow[(k - 1) * self.dim() + b].get_or_init(|| {
            let mut t: Sparse<F> = vec![(b as u32, self.one_scalar())];
            for i in (1..=k).rev().chain(2..=k) {
                t = self.left_gen_vec(i, &t);
            }
            let s = self.qinv.pow(k as i64 - 1).unwrap();
            let mut acc = Acc::new();
            acc.add_scaled(&t, &s);
            acc.finish()
        })
    }

    fn left_l_into(&self, k: usize, b: usize, c: &F, acc: &mut Acc<F>) {
        if k == 1 {
            return self.left_gen_into(1, b, c, acc);
        }
        let (eidx, widx) = self.basis.split(b);
        if self.basis.exponent(eidx, k) + 1 < self.basis.m {
            acc.add(self.basis.join(eidx + self.basis.pw[k], widx) as u32, c.clone());
        } else {
            acc.add_scaled(self.overflow_l(k, b), c);
        }
    }

    pub(crate) fn left_l_vec(&self, k: usize, x: &[(u32, F)]) -> Sparse<F> {
        let mut acc = Acc::new();
        for (b, c) in x {
            self.left_l_into(k, *b as usize, c, &mut acc);
        }
        acc.finish()
    }

    /// `b · y` for a basis element `b = L^e a_w`.
    fn basis_times(&self, b: usize, y: &[(u32, F)]) -> Sparse<F> {
        let (eidx, widx) = self.basis.split(b);
        let mut t: Sparse<F> = y.to_vec();
        for &j in self.basis.word(widx).iter().rev() {
            t = self.left_gen_vec(j + 1, &t);
        }
        for k in 1..=self.n() {
            for _ in 0..self.basis.exponent(eidx, k) {
                t = self.left_l_vec(k, &t);
            }
        }
        t
    }

    /// `b · a_i`, memoized.
    pub(crate) fn right_gen(&self, b: usize, i: usize) -> &Sparse<F> {
        self.right[(i - 1) * self.dim() + b].get_or_init(|| {
            let basis = &*self.basis;
            if i >= 2 {
                let j = i - 1;
                let (eidx, widx) = basis.split(b);
                let ws = basis.join(eidx, basis.right[j][widx] as usize) as u32;
                if basis.right_descent[j][widx] {
                    let mut v = vec![(ws, self.q.clone()), (b as u32, self.qm1.clone())];
                    v.retain(|(_, c)| !c.is_zero());
                    v.sort_unstable_by_key(|(x, _)| *x);
                    v
                } else {
                    vec![(ws, self.one_scalar())]
                }
            } else {
                let l1 = self.left_gen_vec(1, &[(0, self.one_scalar())]);
                self.basis_times(b, &l1)
            }
        })
    }
}
