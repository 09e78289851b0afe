use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::field::Field;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Prime field `Z/PZ` used as a modular image of exact computations.
///
/// A matrix over `Z[1/q]` (or over the cyclotomic integers) that is
/// invertible modulo a prime is invertible over the field of fractions, so
/// these images certify nonsingularity at sizes where exact elimination is
/// too slow.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

/// A 61-bit prime with `P ≡ 1 (mod 5040)`, so every conductor dividing 5040
/// (in particular 12) has primitive roots of unity mod `P`.
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_690_801;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn from_bigint(b: &BigInt) -> Self {
        let m = BigInt::from(P);
        Fp(b.mod_floor(&m).to_u64().unwrap())
    }

    pub fn from_rational(r: &BigRational) -> Result<Self> {
        let d = Self::from_bigint(r.denom());
        if d.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_bigint(r.numer()).mul(&d.inv().unwrap()))
    }

    /// A primitive `e`-th root of unity, when `e` divides `P - 1`.
    pub fn primitive_root_of_unity(e: u32) -> Option<Self> {
        let e = e as u64;
        if (P - 1) % e != 0 {
            return None;
        }
        let primes: Vec<u64> = {
            let mut f = Vec::new();
            let mut x = e;
            let mut p = 2;
            while p * p <= x {
                if x % p == 0 {
                    f.push(p);
                    while x % p == 0 {
                        x /= p;
                    }
                }
                p += 1;
            }
            if x > 1 {
                f.push(x);
            }
            f
        };
        for g in 2..10_000u64 {
            let cand = Fp::<P>(g).pow(((P - 1) / e) as i64).unwrap();
            if primes
                .iter()
                .all(|&p| !cand.pow((e / p) as i64).unwrap().is_one())
            {
                return Some(cand);
            }
        }
        None
    }

    /// Image of an exact scalar; cyclotomic values use `ζ_e ↦` a fixed
    /// primitive `e`-th root of unity mod `P`.
    pub fn reduce(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::Rational(r) => Self::from_rational(r),
            Scalar::Cyclotomic(c) => {
                let e = c.conductor();
                let root = Self::primitive_root_of_unity(e).ok_or_else(|| {
                    Error::InvalidArgument(format!("no primitive {e}-th root of unity mod {P}"))
                })?;
                let mut acc = Fp(0);
                let mut pw = Fp(1);
                for coef in c.coefficients() {
                    if !coef.is_zero() {
                        acc = acc.add(&Self::from_rational(coef)?.mul(&pw));
                    }
                    pw = pw.mul(&root);
                }
                Ok(acc)
            }
        }
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero_like(&self) -> Self {
        Fp(0)
    }

    fn one_like(&self) -> Self {
        Fp(1 % P)
    }

    fn from_int_like(&self, n: i64) -> Self {
        Fp::new(n)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 as u128 + rhs.0 as u128;
        Fp((s % P as u128) as u64)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }

    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat
        let mut e = P - 2;
        let mut base = *self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Some(acc)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F = Fp<DEFAULT_PRIME>;

    #[test]
    fn prime_supports_twelfth_roots() {
        assert_eq!((DEFAULT_PRIME - 1) % 12, 0);
        let z = F::primitive_root_of_unity(12).unwrap();
        assert_eq!(z.multiplicative_order(100), Some(12));
    }

    #[test]
    fn reduction_is_a_ring_map() {
        let a: Scalar = "1/3+2*z12^1-z12^3".parse().unwrap();
        let b: Scalar = "-5+z12^2".parse().unwrap();
        let fa = F::reduce(&a).unwrap();
        let fb = F::reduce(&b).unwrap();
        assert_eq!(F::reduce(&(&a * &b)).unwrap(), fa.mul(&fb));
        assert_eq!(F::reduce(&(&a + &b)).unwrap(), fa.add(&fb));
        assert_eq!(F::reduce(&a.try_inv().unwrap()).unwrap(), fa.inv().unwrap());
    }
}
