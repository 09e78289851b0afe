use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::{self, CycloTable};
use super::field::Field;
use crate::error::{Error, Result};

/// An exact element of `Q` or of a cyclotomic field `Q(ζ_e)`.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
}

/// A residue modulo `Φ_e`, stored as `φ(e)` rational coefficients of
/// `1, ζ, …, ζ^{φ(e)-1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    table: Arc<CycloTable>,
    coeffs: Vec<BigRational>,
}

/// Arithmetic operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Cyclotomic {
    pub fn conductor(&self) -> u32 {
        self.table.e
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn constant_value(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.table.e == other.table.e && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rational(r) => {
                0u8.hash(state);
                r.hash(state);
            }
            Scalar::Cyclotomic(c) => {
                1u8.hash(state);
                c.table.e.hash(state);
                c.coeffs.hash(state);
            }
        }
    }
}

impl Scalar {
    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    /// `ζ_e^a` reduced modulo `Φ_e`.
    pub fn root_of_unity(e: u32, a: i64) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("conductor must be >= 1".into()));
        }
        let table = cyclo::table(e);
        let coeffs = table.root_power(a);
        Ok(Scalar::Cyclotomic(Cyclotomic { table, coeffs }))
    }

    /// The rational `r` viewed inside `Q(ζ_e)`.
    pub fn cyclotomic_constant(e: u32, r: BigRational) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidArgument("conductor must be >= 1".into()));
        }
        let table = cyclo::table(e);
        let mut coeffs = vec![BigRational::zero(); table.phi];
        coeffs[0] = r;
        Ok(Scalar::Cyclotomic(Cyclotomic { table, coeffs }))
    }

    pub fn from_coefficients(e: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        let table = cyclo::table(e);
        if coeffs.len() != table.phi {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients for conductor {e}, got {}",
                table.phi,
                coeffs.len()
            )));
        }
        Ok(Scalar::Cyclotomic(Cyclotomic { table, coeffs }))
    }

    /// Conductor for cyclotomic scalars, `None` for plain rationals.
    pub fn conductor(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Cyclotomic(c) => Some(c.conductor()),
        }
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(c) => c.constant_value(),
        }
    }

    /// Re-express in `Q(ζ_e)`; valid when the current conductor divides `e`.
    pub fn lift_to(&self, e: u32) -> Result<Self> {
        match self {
            Scalar::Rational(r) => Scalar::cyclotomic_constant(e, r.clone()),
            Scalar::Cyclotomic(c) => {
                let d = c.conductor();
                if d == e {
                    return Ok(self.clone());
                }
                if e % d != 0 {
                    return Err(Error::FieldMismatch {
                        left: format!("Q(z{d})"),
                        right: format!("Q(z{e})"),
                    });
                }
                let step = (e / d) as i64;
                let mut acc = Scalar::cyclotomic_constant(e, BigRational::zero())?;
                for (k, coef) in c.coeffs.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let term = Scalar::root_of_unity(e, step * k as i64)?
                        .try_mul(&Scalar::cyclotomic_constant(e, coef.clone())?)?;
                    acc = acc.try_add(&term)?;
                }
                Ok(acc)
            }
        }
    }

    fn field_name(&self) -> String {
        match self {
            Scalar::Rational(_) => "Q".to_string(),
            Scalar::Cyclotomic(c) => format!("Q(z{})", c.conductor()),
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::FieldMismatch {
            left: self.field_name(),
            right: other.field_name(),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.table.e == b.table.e => {
                let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                Ok(Scalar::Cyclotomic(Cyclotomic {
                    table: Arc::clone(&a.table),
                    coeffs,
                }))
            }
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&Field::neg(rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.table.e == b.table.e => {
                let coeffs = a.table.mul(&a.coeffs, &b.coeffs);
                Ok(Scalar::Cyclotomic(Cyclotomic {
                    table: Arc::clone(&a.table),
                    coeffs,
                }))
            }
            _ => Err(self.mismatch(rhs)),
        }
    }

    pub fn try_inv(&self) -> Result<Self> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Cyclotomic(c) => {
                let coeffs = c.table.inverse(&c.coeffs).ok_or(Error::DivisionByZero)?;
                Ok(Scalar::Cyclotomic(Cyclotomic {
                    table: Arc::clone(&c.table),
                    coeffs,
                }))
            }
        }
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if self.conductor() != rhs.conductor() {
            return Err(self.mismatch(rhs));
        }
        self.try_mul(&rhs.try_inv()?)
    }

    /// Parse with every rational lifted into `Q(ζ_e)` when `conductor` is given.
    pub fn parse_in(s: &str, conductor: Option<u32>) -> Result<Self> {
        let v: Scalar = s.parse()?;
        match conductor {
            Some(e) => v.lift_to(e),
            None => Ok(v),
        }
    }
}

/// Exact field operation with variant/conductor checking.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

/// `ζ_e^a`.
pub fn root_of_unity(e: u32, a: i64) -> Result<Scalar> {
    Scalar::root_of_unity(e, a)
}

impl Field for Scalar {
    fn zero_like(&self) -> Self {
        self.from_int_like(0)
    }

    fn one_like(&self) -> Self {
        self.from_int_like(1)
    }

    fn from_int_like(&self, n: i64) -> Self {
        let r = BigRational::from_integer(BigInt::from(n));
        match self {
            Scalar::Rational(_) => Scalar::Rational(r),
            Scalar::Cyclotomic(c) => {
                let mut coeffs = vec![BigRational::zero(); c.table.phi];
                coeffs[0] = r;
                Scalar::Cyclotomic(Cyclotomic {
                    table: Arc::clone(&c.table),
                    coeffs,
                })
            }
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.coeffs.iter().all(|x| x.is_zero()),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(c) => c.coeffs[0].is_one() && c.coeffs[1..].iter().all(|x| x.is_zero()),
        }
    }

    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("scalar field mismatch")
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("scalar field mismatch")
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("scalar field mismatch")
    }

    fn neg(&self) -> Self {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(Cyclotomic {
                table: Arc::clone(&c.table),
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }

    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $call:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$call(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$call(&rhs).expect("scalar field mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Field::neg(&self)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&fmt_rational(r)),
            Scalar::Cyclotomic(c) => {
                if let Some(r) = c.constant_value() {
                    return f.write_str(&fmt_rational(&r));
                }
                let e = c.conductor();
                let mut out = String::new();
                for (k, coef) in c.coeffs.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let neg = coef.is_negative();
                    let mag = coef.abs();
                    if out.is_empty() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push(if neg { '-' } else { '+' });
                    }
                    if k == 0 {
                        out.push_str(&fmt_rational(&mag));
                    } else {
                        if !mag.is_one() {
                            out.push_str(&fmt_rational(&mag));
                            out.push('*');
                        }
                        out.push_str(&format!("z{e}^{k}"));
                    }
                }
                f.write_str(&out)
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.conductor() {
            None => write!(f, "{self}"),
            Some(e) => write!(f, "{self} in Q(z{e})"),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// One summand: a rational coefficient times an optional `ζ_e^a`.
fn parse_term(t: &str) -> Result<(BigRational, Option<(u32, i64)>)> {
    let t = t.trim();
    let (coef, root) = match t.find('z') {
        None => return Ok((parse_rational(t)?, None)),
        Some(pos) => {
            let head = t[..pos].trim();
            let coef = if head.is_empty() {
                BigRational::one()
            } else if head == "-" {
                -BigRational::one()
            } else {
                let head = head
                    .strip_suffix('*')
                    .ok_or_else(|| Error::Parse(format!("expected '*' before root in '{t}'")))?;
                parse_rational(head)?
            };
            (coef, &t[pos + 1..])
        }
    };
    let (e, a) = match root.split_once('^') {
        Some((e, a)) => (e, a),
        None => (root, "1"),
    };
    let e: u32 = e
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad conductor in '{t}'")))?;
    let a: i64 = a
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .parse()
        .map_err(|_| Error::Parse(format!("bad exponent in '{t}'")))?;
    if e == 0 {
        return Err(Error::Parse("conductor must be >= 1".into()));
    }
    Ok((coef, Some((e, a))))
}

/// Split at top-level `+`/`-`, keeping the sign with each summand. Signs
/// directly after `^` belong to the exponent.
fn split_terms(s: &str) -> Vec<String> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        let boundary = (ch == '+' || ch == '-')
            && !cur.is_empty()
            && !matches!(prev, Some('^') | Some('*') | Some('/') | Some('{'));
        if boundary {
            terms.push(std::mem::take(&mut cur));
        }
        if !(ch == '+' && cur.is_empty()) {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        terms.push(cur);
    }
    terms
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `p/q`, integers, `z{e}^{a}` roots of unity, rational multiples
    /// `c*z{e}^{a}`, and sums of these.
    fn from_str(s: &str) -> Result<Self> {
        let terms = split_terms(s);
        if terms.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let parsed: Vec<_> = terms.iter().map(|t| parse_term(t)).collect::<Result<_>>()?;
        let mut conductor: Option<u32> = None;
        for (_, root) in &parsed {
            if let Some((e, _)) = root {
                match conductor {
                    None => conductor = Some(*e),
                    Some(c) if c == *e => {}
                    Some(c) => {
                        return Err(Error::Parse(format!(
                            "mixed conductors z{c} and z{e} in '{s}'"
                        )))
                    }
                }
            }
        }
        match conductor {
            None => {
                let total = parsed
                    .into_iter()
                    .fold(BigRational::zero(), |acc, (c, _)| acc + c);
                Ok(Scalar::Rational(total))
            }
            Some(e) => {
                let mut acc = Scalar::cyclotomic_constant(e, BigRational::zero())?;
                for (c, root) in parsed {
                    let base = match root {
                        Some((_, a)) => Scalar::root_of_unity(e, a)?,
                        None => Scalar::cyclotomic_constant(e, BigRational::one())?,
                    };
                    let term = base.try_mul(&Scalar::cyclotomic_constant(e, c)?)?;
                    acc = acc.try_add(&term)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Least common multiple of all conductors present (1 if none).
pub fn common_conductor<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Option<u32> {
    let mut acc: Option<u32> = None;
    for v in values {
        if let Some(e) = v.conductor() {
            acc = Some(match acc {
                None => e,
                Some(a) => a.lcm(&e),
            });
        }
    }
    acc
}
