//! Exact arithmetic in the cyclotomic field `Q(z)`, `z = exp(2*pi*i/N)`.
//!
//! Elements are dense coefficient vectors of length `phi(N)` in the power
//! basis `1, z, ..., z^(phi(N)-1)`, always reduced modulo the `N`-th
//! cyclotomic polynomial. Two scalars are equal iff they live in the same
//! field and their reduced coefficient vectors agree.

pub mod matrix;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use matrix::Matrix;

/// Arbitrary-precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

/// Default cyclotomic order; `Q(z_12)` contains `+-1`, `+-i`, `z_3` and `z_6`.
pub const DEFAULT_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("mismatched cyclotomic orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// The field `Q(z_N)` together with its defining polynomial.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    /// Monic `Phi_N`, little-endian.
    modulus: Vec<Rational>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Arc<Self>, FieldError> {
        if order == 0 {
            return Err(FieldError::ZeroOrder);
        }
        Ok(Arc::new(Self {
            order,
            modulus: cyclotomic_polynomial(order),
        }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Extension degree `phi(N)`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Coefficients of `Phi_N`, constant term first.
    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> Scalar {
        Scalar {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Scalar {
        self.rational(Rational::one())
    }

    pub fn int(self: &Arc<Self>, n: i64) -> Scalar {
        self.rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(self: &Arc<Self>, num: i64, den: i64) -> Scalar {
        self.rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(self: &Arc<Self>, q: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = q;
        s
    }

    /// The primitive root `z`.
    pub fn zeta(self: &Arc<Self>) -> Scalar {
        self.zeta_pow(1)
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(self: &Arc<Self>, k: i64) -> Scalar {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Scalar::from_poly(self, poly)
    }

    /// Builds a scalar from an arbitrary polynomial in `z` (little-endian).
    pub fn from_poly(self: &Arc<Self>, poly: Vec<Rational>) -> Scalar {
        Scalar::from_poly(self, poly)
    }

    pub fn parse(self: &Arc<Self>, input: &str) -> Result<Scalar, FieldError> {
        parse_scalar(self, input)
    }
}

/// An element of `Q(z_N)`.
#[derive(Clone, Debug)]
pub struct Scalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl Scalar {
    fn from_poly(field: &Arc<CyclotomicField>, mut poly: Vec<Rational>) -> Self {
        reduce_mod(&mut poly, &field.modulus);
        poly.resize(field.degree(), Rational::zero());
        Scalar {
            field: Arc::clone(field),
            coeffs: poly,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.field.order != other.field.order {
            Err(FieldError::OrderMismatch(self.field.order, other.field.order))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(Scalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        Ok(Scalar {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        // Rational operands are common (braiding signs, lambda/2); skip the
        // polynomial product for them.
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(q));
        }
        let n = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Ok(Scalar::from_poly(&self.field, prod))
    }

    pub fn scale(&self, q: &Rational) -> Scalar {
        Scalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in `Q[x]`
    /// against `Phi_N`.
    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        // Invariant: s_i * self == r_i (mod Phi).
        let mut r0 = self.field.modulus.clone();
        let mut r1 = trimmed(self.coeffs.clone());
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1 = vec![Rational::one()];
        while r1.len() != 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd of degree > 0 would mean Phi_N is reducible.
                unreachable!("cyclotomic polynomial is irreducible over Q");
            }
        }
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.iter().map(|x| x * &c).collect();
        Ok(Scalar::from_poly(&self.field, s))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, FieldError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    /// `self^k` for any integer `k` (negative powers invert first).
    pub fn pow(&self, k: i64) -> Result<Scalar, FieldError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Smallest `m >= 1` with `self^m == 1`, or `None` if `self` is not a root
    /// of unity. Every root of unity in `Q(z_N)` has order dividing
    /// `lcm(2, N)`, so the search bound is complete.
    pub fn root_of_unity_order(&self) -> Result<Option<u32>, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let bound = self.field.order.lcm(&2);
        let mut p = self.clone();
        for m in 1..=bound {
            if p.is_one() {
                return Ok(Some(m));
            }
            p = &p * self;
        }
        Ok(None)
    }

    /// Numerical image under `z -> exp(2*pi*i/N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), t)
            })
            .sum()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics on mismatched cyclotomic orders; use the `try_` form to
            /// handle that case.
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar arithmetic across fields")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// Writes the form accepted by [`CyclotomicField::parse`], e.g.
    /// `z^2+1/3`, `-3/2*z-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if (-c).is_one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            if i > 0 && !t.starts_with('-') {
                out.push('+');
            }
            out.push_str(t);
        }
        f.write_str(&out)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_scalar(field: &Arc<CyclotomicField>, input: &str) -> Result<Scalar, FieldError> {
    let err = |reason: &str| FieldError::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    // Split into signed terms; a sign directly after '^' belongs to the exponent.
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev = None;
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    terms.push(cur);

    let mut acc = field.zero();
    for term in terms {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(err("dangling sign"));
        }
        let (coef_str, power) = match body.find('z') {
            None => (body, None),
            Some(pos) => {
                let coef = body[..pos].trim_end_matches('*');
                let rest = &body[pos + 1..];
                let k = if rest.is_empty() {
                    1
                } else {
                    let e = rest.strip_prefix('^').ok_or_else(|| err("expected '^' after z"))?;
                    e.parse::<i64>().map_err(|_| err("bad exponent"))?
                };
                (coef, Some(k))
            }
        };
        let coef = if coef_str.is_empty() {
            if power.is_none() {
                return Err(err("empty term"));
            }
            Rational::one()
        } else {
            parse_rational(coef_str).ok_or_else(|| err("bad rational coefficient"))?
        };
        let mut t = field.rational(if neg { -coef } else { coef });
        if let Some(k) = power {
            t = &t * &field.zeta_pow(k);
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n).ok()?;
            let d = BigInt::from_str(d).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

// Little-endian polynomial helpers over Q. An empty vector is the zero polynomial.

fn trimmed(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trimmed(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trimmed(b.to_vec());
    let mut r = trimmed(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().expect("division by zero polynomial").recip();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        r = trimmed(r);
    }
    (trimmed(q), r)
}

/// Reduces `p` in place modulo a monic polynomial.
fn reduce_mod(p: &mut Vec<Rational>, modulus: &[Rational]) {
    let d = modulus.len() - 1;
    while p.len() > d {
        let c = p.pop().unwrap();
        if c.is_zero() {
            continue;
        }
        let shift = p.len() - d;
        for (i, m) in modulus[..d].iter().enumerate() {
            p[shift + i] -= &c * m;
        }
    }
}

/// `Phi_n` as a monic little-endian polynomial, via
/// `x^n - 1 = prod_{d | n} Phi_d`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    let mut p = vec![Rational::zero(); n as usize + 1];
    p[0] = -Rational::one();
    p[n as usize] = Rational::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly_divrem(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}
