//! Cyclotomic polynomials and the reduction tables for `Q(ζ_e) = Q[x]/Φ_e`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug)]
pub(crate) struct CycloTable {
    pub e: u32,
    pub phi: usize,
    /// Φ_e, lowest coefficient first; monic of degree `phi`.
    pub poly: Vec<BigInt>,
    /// `x^k mod Φ_e` for `0 <= k < 2*phi - 1` (at least one entry).
    pub powers: Vec<Vec<BigInt>>,
}

fn int_poly_cache() -> &'static Mutex<HashMap<u32, Vec<BigInt>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<CycloTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dn {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// The `e`-th cyclotomic polynomial, computed by dividing `x^e - 1` by all
/// `Φ_d` with `d | e`, `d < e`.
pub(crate) fn cyclotomic_polynomial(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    if let Some(p) = int_poly_cache().lock().unwrap().get(&e) {
        return p.clone();
    }
    let mut p = vec![BigInt::zero(); e as usize + 1];
    p[0] = -BigInt::one();
    p[e as usize] = BigInt::one();
    for d in 1..e {
        if e % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            p = div_monic(&p, &phi_d);
        }
    }
    int_poly_cache().lock().unwrap().insert(e, p.clone());
    p
}

pub(crate) fn table(e: u32) -> Arc<CycloTable> {
    if let Some(t) = table_cache().lock().unwrap().get(&e) {
        return Arc::clone(t);
    }
    let poly = cyclotomic_polynomial(e);
    let phi = poly.len() - 1;
    let count = (2 * phi).saturating_sub(1).max(1);
    let mut powers = Vec::with_capacity(count);
    let mut cur = vec![BigInt::zero(); phi];
    cur[0] = BigInt::one();
    for _ in 0..count {
        powers.push(cur.clone());
        cur = times_x(&cur, &poly);
    }
    let t = Arc::new(CycloTable { e, phi, poly, powers });
    table_cache()
        .lock()
        .unwrap()
        .entry(e)
        .or_insert_with(|| Arc::clone(&t))
        .clone()
}

/// Multiply a reduced integer residue by `x` and reduce modulo the monic `poly`.
fn times_x(v: &[BigInt], poly: &[BigInt]) -> Vec<BigInt> {
    let phi = v.len();
    let mut out = vec![BigInt::zero(); phi];
    let top = v[phi - 1].clone();
    for k in (1..phi).rev() {
        out[k] = v[k - 1].clone();
    }
    if !top.is_zero() {
        for k in 0..phi {
            out[k] -= &top * &poly[k];
        }
    }
    out
}

impl CycloTable {
    /// Reduce a coefficient vector of length `< 2*phi` into `phi` coefficients.
    pub fn reduce(&self, prod: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.phi];
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, p) in self.powers[k].iter().enumerate() {
                if !p.is_zero() {
                    out[j] += c * BigRational::from_integer(p.clone());
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut prod = vec![BigRational::zero(); (2 * self.phi).saturating_sub(1).max(1)];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(&prod)
    }

    /// `ζ^a` as a reduced coefficient vector.
    pub fn root_power(&self, a: i64) -> Vec<BigRational> {
        let k = a.rem_euclid(self.e as i64) as usize;
        let mut cur = vec![BigInt::zero(); self.phi];
        cur[0] = BigInt::one();
        for _ in 0..k {
            cur = times_x(&cur, &self.poly);
        }
        cur.into_iter().map(BigRational::from_integer).collect()
    }

    /// Inverse in `Q[x]/Φ_e` via the extended Euclidean algorithm.
    pub fn inverse(&self, a: &[BigRational]) -> Option<Vec<BigRational>> {
        let modulus: Vec<BigRational> = self
            .poly
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let mut r0 = modulus;
        let mut r1 = trim(a.to_vec());
        if r1.is_empty() {
            return None;
        }
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = trim(poly_sub(&s0, &poly_mul(&q, &s1)));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // Φ_e is irreducible, so the gcd is a nonzero constant.
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        let mut out = vec![BigRational::zero(); self.phi];
        for (k, s) in s0.into_iter().enumerate() {
            out[k] = s / &c;
        }
        Some(out)
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect()
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem[rem.len() - 1].clone() / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        quot[k] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degrees_are_euler_phi() {
        let phi = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8];
        for (i, &p) in phi.iter().enumerate() {
            assert_eq!(cyclotomic_polynomial(i as u32 + 1).len() - 1, p);
        }
    }
}
