use std::fmt;
use std::hash::Hash;

/// Exact field arithmetic used by the algebra engines.
///
/// Constants are produced from an existing element (`zero_like`, `one_like`)
/// because some implementations carry runtime data such as the conductor of a
/// cyclotomic field.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    /// Integer power; negative exponents require an invertible element.
    fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }

    /// Smallest `k` in `1..=limit` with `self^k = 1`.
    fn multiplicative_order(&self, limit: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.one_like();
        let mut acc = self.clone();
        for k in 1..=limit {
            if acc == one {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

/// Fields that receive the exact parameters of an algebra.
pub trait FromScalar: Field {
    fn from_scalar(s: &super::Scalar) -> crate::error::Result<Self>;
}

impl FromScalar for super::Scalar {
    fn from_scalar(s: &super::Scalar) -> crate::error::Result<Self> {
        Ok(s.clone())
    }
}

impl<const P: u64> FromScalar for super::Fp<P> {
    fn from_scalar(s: &super::Scalar) -> crate::error::Result<Self> {
        super::Fp::<P>::reduce(s)
    }
}
