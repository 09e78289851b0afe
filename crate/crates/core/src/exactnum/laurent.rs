use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in `v`.
///
/// Zero coefficients are never stored, so structural equality is exact
/// polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(k, BigInt::from(c));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// The involution `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True when every exponent is at least 1.
    pub fn in_v_zv(&self) -> bool {
        self.min_degree().is_none_or(|k| k >= 1)
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact quotient `self / divisor`.
    pub fn divide_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let not_div = || Error::NotDivisible(self.to_string(), divisor.to_string());
        let d_lo = divisor.min_degree().unwrap();
        let d_hi = divisor.max_degree().unwrap();
        let lead = divisor.coeff(d_hi);
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let lo = self.min_degree().unwrap();
        // Long division from the top; every quotient exponent stays >= lo - d_lo.
        while let Some(top) = rem.max_degree() {
            let k = top - d_hi;
            if k < lo - d_lo {
                return Err(not_div());
            }
            let (c, r) = rem.coeff(top).div_rem(&lead);
            if !r.is_zero() {
                return Err(not_div());
            }
            let step = LaurentPoly::monomial(1, k).scale(&c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

/// The balanced quantum integer `[k] = v^{k-1} + v^{k-3} + … + v^{1-k}`.
pub fn quantum_integer(k: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for j in 0..k {
        p.add_term(k as i32 - 1 - 2 * j as i32, BigInt::one());
    }
    p
}

/// Signed quantum integer: `[-k] = -[k]`.
pub fn signed_quantum_integer(k: i64) -> LaurentPoly {
    let p = quantum_integer(k.unsigned_abs() as u32);
    if k < 0 {
        -p
    } else {
        p
    }
}

/// `[k]! = [1][2]⋯[k]`.
pub fn quantum_factorial(k: u32) -> LaurentPoly {
    (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &quantum_integer(j))
}

pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

pub fn divide_exact(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    p.divide_exact(q)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms `c*v^k` in increasing exponent order joined by `+`/`-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { "-" } else { "+" })?;
                write!(f, "{}*v^{}", c.abs(), k)?;
            } else {
                write!(f, "{}*v^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts `c*v^k` terms (also `v^k`, `c*v`, `v`, bare integers) joined by
    /// `+` or `-`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
                terms.push(std::mem::take(&mut cur));
            }
            if !(ch == '+' && cur.is_empty()) {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        terms.push(cur);
        let bad = |t: &str| Error::Parse(format!("bad Laurent term '{t}'"));
        let mut p = LaurentPoly::zero();
        for t in terms {
            let (coef, exp) = match t.find('v') {
                None => (t.parse::<BigInt>().map_err(|_| bad(&t))?, 0),
                Some(pos) => {
                    let head = &t[..pos];
                    let coef = match head {
                        "" => BigInt::one(),
                        "-" => -BigInt::one(),
                        h => h
                            .strip_suffix('*')
                            .ok_or_else(|| bad(&t))?
                            .parse::<BigInt>()
                            .map_err(|_| bad(&t))?,
                    };
                    let tail = &t[pos + 1..];
                    let exp = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .ok_or_else(|| bad(&t))?
                            .trim_start_matches('{')
                            .trim_end_matches('}')
                            .parse::<i32>()
                            .map_err(|_| bad(&t))?
                    };
                    (coef, exp)
                }
            };
            p.add_term(exp, coef);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn bar_examples() {
        assert_eq!(lp("v").bar(), lp("v^-1"));
        assert_eq!(lp("1+2*v^3").bar(), lp("1+2*v^-3"));
        assert_eq!(lp("1+v").bar().bar(), lp("1+v"));
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(1), LaurentPoly::one());
        assert_eq!(quantum_integer(2), lp("v+v^-1"));
        assert_eq!(quantum_integer(3), lp("v^2+1+v^-2"));
        for k in 1..=30 {
            assert!(quantum_integer(k).is_bar_invariant());
        }
        assert_eq!(signed_quantum_integer(-2), lp("-v-v^-1"));
        assert!(signed_quantum_integer(0).is_zero());
    }

    #[test]
    fn exact_division() {
        assert_eq!(lp("v+v^-1").divide_exact(&lp("v+v^-1")).unwrap(), LaurentPoly::one());
        assert_eq!(lp("v^2-v^-2").divide_exact(&lp("v-v^-1")).unwrap(), lp("v+v^-1"));
        assert!(matches!(lp("v").divide_exact(&lp("1+v")), Err(Error::NotDivisible(..))));
        assert_eq!(lp("v").divide_exact(&LaurentPoly::zero()), Err(Error::DivisionByZero));
        assert!(lp("2*v").divide_exact(&lp("3")).is_err());
        let f3 = quantum_factorial(3);
        let prod = &f3 * &lp("v^-4+7*v^5");
        assert_eq!(prod.divide_exact(&f3).unwrap(), lp("v^-4+7*v^5"));
    }

    #[test]
    fn display_round_trip() {
        let p = lp("-3*v^-2+1-v^4");
        assert_eq!(p.to_string(), "-3*v^-2+1*v^0-1*v^4");
        assert_eq!(lp(&p.to_string()), p);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
