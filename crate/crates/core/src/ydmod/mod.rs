//! Irreducible Yetter-Drinfeld modules over the infinite dihedral group.
//!
//! Each module is the induced module `k[D] (x)_{k[C]} V` for a conjugacy class
//! with base point `s`, centralizer `C`, and a simple `C`-module `V`. The
//! families are:
//!
//! | family      | class             | basis                     |
//! |-------------|-------------------|---------------------------|
//! | `HPower`    | `{h^n, h^-n}`     | `x1 = 1(x)x`, `x2 = g(x)x` |
//! | `GClass`    | reflections `g h^2k` | `a_m = h^m(x)x`, `b_m = g h^m(x)x` |
//! | `GhClass`   | reflections `g h^(2k+1)` | as above, with `b_1 = rho(gh) a_0` |
//! | `OneClass`  | `{1}`             | `v1`, `v2` (or `v1` alone) |
//!
//! Infinite bases are never truncated here; indices are computed lazily and
//! windows only appear in the verification drivers.

pub mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::field::{CyclotomicField, FieldError, Matrix, Rational, Scalar};
use crate::group::{ConjClass, GroupElement};
use crate::repn::{module_axiom_check, FinRep};

pub use tables::{braiding_table_check, TableCheck, TableMismatch};

/// Upper bound on `|n|` when acting by `h^n` generator by generator.
const MAX_STEPS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YdError {
    #[error("basis vector {vector} does not belong to {family}")]
    NotInModule { vector: BasisVector, family: String },
    #[error("exponent {0} too large to apply generator by generator")]
    ExponentTooLarge(BigInt),
    #[error("h^{k} acts through rho(h), but only rho(h^{n}) = a is known (no n-th root of a found in the field)")]
    CharacterUndetermined { k: BigInt, n: u64 },
    #[error("operation needs a finite-dimensional module, {0} is infinite-dimensional")]
    InfiniteDimensional(String),
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Basis vector labels; which ones are valid depends on the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisVector {
    X1,
    X2,
    A(u64),
    B(u64),
    V1,
    V2,
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisVector::X1 => f.write_str("x1"),
            BasisVector::X2 => f.write_str("x2"),
            BasisVector::A(m) => write!(f, "a{m}"),
            BasisVector::B(m) => write!(f, "b{m}"),
            BasisVector::V1 => f.write_str("v1"),
            BasisVector::V2 => f.write_str("v2"),
        }
    }
}

impl Serialize for BasisVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Finite linear combination of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    terms: BTreeMap<BasisVector, Scalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(c: Scalar, v: BasisVector) -> Self {
        let mut out = Self::zero();
        out.add_term(c, v);
        out
    }

    pub fn add_term(&mut self, c: Scalar, v: BasisVector) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&v) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(v, s);
                }
            }
            None => {
                self.terms.insert(v, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisVector, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single `(coefficient, vector)` pair, if this is a monomial.
    pub fn as_signed(&self) -> Option<SignedVector> {
        if self.terms.len() == 1 {
            let (v, c) = self.terms.iter().next().unwrap();
            Some(SignedVector { coeff: c.clone(), vec: *v })
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (v, x) in &self.terms {
            out.add_term(c * x, *v);
        }
        out
    }

    fn try_map(
        &self,
        mut f: impl FnMut(BasisVector) -> Result<Vector, YdError>,
    ) -> Result<Vector, YdError> {
        let mut out = Vector::zero();
        for (v, c) in &self.terms {
            for (w, d) in f(*v)?.terms {
                out.add_term(c * &d, w);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(v, c)| fmt_term(c, &v.to_string())).collect();
        f.write_str(&parts.join(" + "))
    }
}

fn fmt_term(c: &Scalar, body: &str) -> String {
    if c.is_one() {
        body.to_string()
    } else if (-c).is_one() {
        format!("-{body}")
    } else {
        format!("({c}){body}")
    }
}

/// `coeff * vec` with `coeff != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedVector {
    pub coeff: Scalar,
    pub vec: BasisVector,
}

/// Element of `V (x) V` as a combination of basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(BasisVector, BasisVector), Scalar>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, c: Scalar, left: BasisVector, right: BasisVector) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.remove(&key) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `left (x) right`.
    pub fn product(left: &Vector, right: &Vector) -> Self {
        let mut out = Self::zero();
        for (u, c) in left.terms() {
            for (v, d) in right.terms() {
                out.add_term(c * d, *u, *v);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisVector, BasisVector), &Scalar)> {
        self.terms.iter()
    }

    /// `(coeff, left, right)` if this is a single pure tensor of basis vectors.
    pub fn as_monomial(&self) -> Option<(Scalar, BasisVector, BasisVector)> {
        if self.terms.len() == 1 {
            let ((l, r), c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *l, *r))
        } else {
            None
        }
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((l, r), c)| fmt_term(c, &format!("{l}⊗{r}")))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for Tensor2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Simple module of a centralizer `Z/2 = {1, s}`: `s` acts by `-1` or `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReflectionRep {
    Sign,
    Eps,
}

impl ReflectionRep {
    pub fn value(self, k: &Arc<CyclotomicField>) -> Scalar {
        match self {
            ReflectionRep::Sign => k.int(-1),
            ReflectionRep::Eps => k.one(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ReflectionRep::Sign => "sign",
            ReflectionRep::Eps => "eps",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Supported on `{h^n, h^-n}`; `a = rho(h^n)` and, when known,
    /// `h_char = rho(h)` with `h_char^n = a`.
    HPower {
        n: u64,
        a: Scalar,
        h_char: Option<Scalar>,
    },
    /// Supported on the class of `g`; `rep` is the character of `{1, g}`.
    GClass(ReflectionRep),
    /// Supported on the class of `gh`; `rep` is the character of `{1, gh}`.
    GhClass(ReflectionRep),
    /// Supported on `{1}`; `rep` is a representation of the whole group.
    OneClass { name: String, rep: FinRep },
}

/// One irreducible Yetter-Drinfeld module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YdModule {
    field: Arc<CyclotomicField>,
    family: Family,
}

enum Gen {
    G,
    H,
    HInv,
}

impl YdModule {
    /// `M(O_{h^n}, rho)` with `rho(h^n) = a`. An `n`-th root of `a` is
    /// searched among `q z^k` (`q` rational) to fix `rho(h)`; without one the
    /// module still braids (the braiding only uses `h^(+-n)`), but acting by
    /// `h^k` with `n` not dividing `k` reports [`YdError::CharacterUndetermined`].
    pub fn h_class(n: u64, a: &Scalar) -> Result<Self, YdError> {
        if n == 0 {
            return Err(YdError::InvalidParameters("n must be at least 1".into()));
        }
        if a.is_zero() {
            return Err(YdError::InvalidParameters("a must be nonzero".into()));
        }
        Ok(YdModule {
            field: Arc::clone(a.field()),
            family: Family::HPower {
                n,
                a: a.clone(),
                h_char: nth_root(a, n),
            },
        })
    }

    /// `M(O_{h^n}, rho)` from the character value `rho(h) = h_char`.
    pub fn h_class_with_character(n: u64, h_char: &Scalar) -> Result<Self, YdError> {
        if n == 0 || h_char.is_zero() {
            return Err(YdError::InvalidParameters("need n >= 1 and rho(h) != 0".into()));
        }
        let a = h_char.pow(n as i64)?;
        Ok(YdModule {
            field: Arc::clone(h_char.field()),
            family: Family::HPower {
                n,
                a,
                h_char: Some(h_char.clone()),
            },
        })
    }

    pub fn g_class(field: &Arc<CyclotomicField>, rep: ReflectionRep) -> Self {
        YdModule {
            field: Arc::clone(field),
            family: Family::GClass(rep),
        }
    }

    pub fn gh_class(field: &Arc<CyclotomicField>, rep: ReflectionRep) -> Self {
        YdModule {
            field: Arc::clone(field),
            family: Family::GhClass(rep),
        }
    }

    /// `M(1, V)`; `rep` must satisfy the group relations.
    pub fn one_class(name: &str, rep: FinRep) -> Result<Self, YdError> {
        if !module_axiom_check(&rep).passed() {
            return Err(YdError::InvalidParameters(format!(
                "{name} does not satisfy g^2 = 1, g h g = h^-1"
            )));
        }
        Ok(YdModule {
            field: Arc::clone(rep.field()),
            family: Family::OneClass {
                name: name.to_string(),
                rep,
            },
        })
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn support(&self) -> ConjClass {
        match &self.family {
            Family::HPower { n, .. } => ConjClass::HPower(BigInt::from(*n)),
            Family::GClass(_) => ConjClass::EvenReflections,
            Family::GhClass(_) => ConjClass::OddReflections,
            Family::OneClass { .. } => ConjClass::One,
        }
    }

    pub fn label(&self) -> String {
        match &self.family {
            Family::HPower { n, a, .. } => format!("M(O_h^{n}, rho_a) a={a}"),
            Family::GClass(r) => format!("M(O_g, {})", r.name()),
            Family::GhClass(r) => format!("M(O_gh, {})", r.name()),
            Family::OneClass { name, .. } => format!("M(O_1, {name})"),
        }
    }

    pub fn is_finite(&self) -> bool {
        !self.support().is_infinite()
    }

    /// Basis of a finite-dimensional module.
    pub fn finite_basis(&self) -> Result<Vec<BasisVector>, YdError> {
        match &self.family {
            Family::HPower { .. } => Ok(vec![BasisVector::X1, BasisVector::X2]),
            Family::OneClass { rep, .. } if rep.dim() == 1 => Ok(vec![BasisVector::V1]),
            Family::OneClass { .. } => Ok(vec![BasisVector::V1, BasisVector::V2]),
            _ => Err(YdError::InfiniteDimensional(self.label())),
        }
    }

    /// Basis vectors with index at most `window`: the whole basis for finite
    /// families; `a_0..a_w, b_1..b_w` (`2w + 1` labels) for infinite ones.
    /// For the `gh` class the label `b_1` denotes the vector `rho(gh) a_0`.
    pub fn window_basis(&self, window: u64) -> Vec<BasisVector> {
        match self.finite_basis() {
            Ok(b) => b,
            Err(_) => (0..=window)
                .map(BasisVector::A)
                .chain((1..=window).map(BasisVector::B))
                .collect(),
        }
    }

    /// `rho(s)` for the reflection families.
    fn chi(&self) -> Scalar {
        match &self.family {
            Family::GClass(r) | Family::GhClass(r) => r.value(&self.field),
            _ => self.field.one(),
        }
    }

    fn check_vector(&self, v: BasisVector) -> Result<(), YdError> {
        let ok = match (&self.family, v) {
            (Family::HPower { .. }, BasisVector::X1 | BasisVector::X2) => true,
            (Family::GClass(_) | Family::GhClass(_), BasisVector::A(_)) => true,
            (Family::GClass(_) | Family::GhClass(_), BasisVector::B(m)) => m >= 1,
            (Family::OneClass { .. }, BasisVector::V1) => true,
            (Family::OneClass { rep, .. }, BasisVector::V2) => rep.dim() == 2,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(YdError::NotInModule {
                vector: v,
                family: self.label(),
            })
        }
    }

    /// Rewrites a label in the canonical basis. Only `b_1` of the `gh` class
    /// changes: `gh (x) x = 1 (x) rho(gh) x`.
    pub fn canonical(&self, v: BasisVector) -> Result<Vector, YdError> {
        self.check_vector(v)?;
        Ok(match (&self.family, v) {
            (Family::GhClass(_), BasisVector::B(1)) => Vector::basis(self.chi(), BasisVector::A(0)),
            _ => Vector::basis(self.field.one(), v),
        })
    }

    fn gen_on_basis(&self, gen: &Gen, v: BasisVector) -> Result<Vector, YdError> {
        use BasisVector::*;
        let k = &self.field;
        let one = k.one();
        let chi = self.chi();
        let out = match (&self.family, gen) {
            (Family::HPower { .. }, Gen::G) => match v {
                X1 => Vector::basis(one, X2),
                _ => Vector::basis(one, X1),
            },
            (Family::HPower { n, h_char, .. }, Gen::H | Gen::HInv) => {
                let alpha = h_char.as_ref().ok_or(YdError::CharacterUndetermined {
                    k: if matches!(gen, Gen::H) { 1.into() } else { (-1).into() },
                    n: *n,
                })?;
                // h x1 = rho(h) x1, h x2 = h g (x) x = g h^-1 (x) x = rho(h)^-1 x2
                let up = matches!(gen, Gen::H) == (v == X1);
                Vector::basis(if up { alpha.clone() } else { alpha.inv()? }, v)
            }
            (Family::GClass(_), Gen::G) => match v {
                A(0) => Vector::basis(chi, A(0)),
                A(m) => Vector::basis(one, B(m)),
                B(m) => Vector::basis(one, A(m)),
                _ => unreachable!(),
            },
            (Family::GClass(_), Gen::H) => match v {
                A(m) => Vector::basis(one, A(m + 1)),
                B(1) => Vector::basis(chi, A(0)),
                B(m) => Vector::basis(one, B(m - 1)),
                _ => unreachable!(),
            },
            (Family::GClass(_), Gen::HInv) => match v {
                A(0) => Vector::basis(chi, B(1)),
                A(m) => Vector::basis(one, A(m - 1)),
                B(m) => Vector::basis(one, B(m + 1)),
                _ => unreachable!(),
            },
            (Family::GhClass(_), Gen::G) => match v {
                A(0) => Vector::basis(chi, A(1)),
                A(m) => self.canonical(B(m))?,
                B(m) => Vector::basis(one, A(m)),
                _ => unreachable!(),
            },
            (Family::GhClass(_), Gen::H) => match v {
                A(m) => Vector::basis(one, A(m + 1)),
                B(m) => self.canonical(B(m - 1))?,
                _ => unreachable!(),
            },
            (Family::GhClass(_), Gen::HInv) => match v {
                // h^-1 (x) x = gh^2 (x) rho(gh) x
                A(0) => Vector::basis(chi, B(2)),
                A(m) => Vector::basis(one, A(m - 1)),
                B(m) => Vector::basis(one, B(m + 1)),
                _ => unreachable!(),
            },
            (Family::OneClass { rep, .. }, gen) => {
                let m = match gen {
                    Gen::G => rep.g(),
                    Gen::H => rep.h(),
                    Gen::HInv => rep.h_inv(),
                };
                let col = if v == V1 { 0 } else { 1 };
                let mut out = Vector::zero();
                for (row, w) in [V1, V2].into_iter().enumerate().take(rep.dim()) {
                    out.add_term(m[(row, col)].clone(), w);
                }
                out
            }
        };
        Ok(out)
    }

    fn apply_gen(&self, gen: &Gen, v: &Vector) -> Result<Vector, YdError> {
        v.try_map(|b| self.gen_on_basis(gen, b))
    }

    /// `x . v` for `x = g^e h^n`: applies the `h` (or `h^-1`) table `|n|`
    /// times, then `g` if `e = 1`.
    pub fn act(&self, x: &GroupElement, v: BasisVector) -> Result<Vector, YdError> {
        let start = self.canonical(v)?;
        self.act_vector(x, &start)
    }

    pub fn act_vector(&self, x: &GroupElement, v: &Vector) -> Result<Vector, YdError> {
        let k = x.exponent();
        let steps = k
            .abs()
            .to_u64()
            .filter(|s| *s <= MAX_STEPS)
            .ok_or_else(|| YdError::ExponentTooLarge(k.clone()))?;
        let mut out = v.clone();
        match &self.family {
            Family::HPower { n, a, h_char: None } => {
                if !(k % BigInt::from(*n)).is_zero() {
                    return Err(YdError::CharacterUndetermined { k: k.clone(), n: *n });
                }
                // h^n x1 = a x1, h^n x2 = a^-1 x2
                let e = (k / BigInt::from(*n)).to_i64().expect("bounded by MAX_STEPS");
                let (p1, p2) = (a.pow(e)?, a.pow(-e)?);
                let mut t = Vector::zero();
                for (b, c) in out.terms() {
                    let f = if *b == BasisVector::X1 { &p1 } else { &p2 };
                    t.add_term(c * f, *b);
                }
                out = t;
            }
            _ => {
                let gen = if k.is_negative() { Gen::HInv } else { Gen::H };
                for _ in 0..steps {
                    out = self.apply_gen(&gen, &out)?;
                }
            }
        }
        if x.is_reflection() {
            out = self.apply_gen(&Gen::G, &out)?;
        }
        Ok(out)
    }

    /// Degree of a homogeneous basis vector.
    pub fn coact(&self, v: BasisVector) -> Result<GroupElement, YdError> {
        self.check_vector(v)?;
        use BasisVector::*;
        Ok(match (&self.family, v) {
            (Family::HPower { n, .. }, X1) => GroupElement::h_pow(*n),
            (Family::HPower { n, .. }, _) => GroupElement::h_pow(-BigInt::from(*n)),
            // deg a_m = h^2m g, deg b_m = g h^2m
            (Family::GClass(_), A(m)) => GroupElement::h_pow_g(2 * m),
            (Family::GClass(_), B(m)) => GroupElement::g_h_pow(2 * m),
            // deg a_0 = gh, deg a_m = h^(2m-1) g, deg b_m = g h^(2m-1)
            (Family::GhClass(_), A(0)) => GroupElement::g_h_pow(1),
            (Family::GhClass(_), A(m)) => GroupElement::h_pow_g(2 * m - 1),
            (Family::GhClass(_), B(m)) => GroupElement::g_h_pow(2 * m - 1),
            (Family::OneClass { .. }, _) => GroupElement::identity(),
            _ => unreachable!("checked above"),
        })
    }

    /// `c(v (x) w) = deg(v) . w (x) v`.
    pub fn braid(&self, v: BasisVector, w: BasisVector) -> Result<Tensor2, YdError> {
        let left = self.act(&self.coact(v)?, w)?;
        let right = self.canonical(v)?;
        Ok(Tensor2::product(&left, &right))
    }

    /// Checks `deg(x . v) = x deg(v) x^-1` on every term of `x . v`.
    pub fn yd_compat_check(&self, x: &GroupElement, v: BasisVector) -> Result<bool, YdError> {
        let expected = x.conjugate(&self.coact(v)?);
        for (w, _) in self.act(x, v)?.terms() {
            if self.coact(*w)? != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The matrix `(q_ij)` with `c(x_i (x) x_j) = q_ij x_j (x) x_i`, or `None`
    /// when the braiding is not of that shape.
    pub fn diagonal_type(&self) -> Result<Option<Matrix>, YdError> {
        let basis = self.finite_basis()?;
        let mut rows = Vec::new();
        for &xi in &basis {
            let mut row = Vec::new();
            for &xj in &basis {
                match self.braid(xi, xj)?.as_monomial() {
                    Some((q, l, r)) if l == xj && r == xi => row.push(q),
                    _ => return Ok(None),
                }
            }
            rows.push(row);
        }
        Ok(Some(Matrix::from_rows(rows)))
    }
}

/// An `n`-th root of `a` of the form `q z^k` with `q` rational, if any.
pub fn nth_root(a: &Scalar, n: u64) -> Option<Scalar> {
    if n == 1 {
        return Some(a.clone());
    }
    let k = a.field();
    let order = k.order() as i64;
    let n_i = i64::try_from(n).ok()?;
    for e in 0..order {
        let zeta = k.zeta_pow(e);
        let rest = a * &zeta.pow(-n_i).ok()?;
        let Some(q) = rest.as_rational() else { continue };
        if let Some(r) = rational_nth_root(q, n) {
            return Some(&k.rational(r) * &zeta);
        }
    }
    None
}

fn rational_nth_root(q: &Rational, n: u64) -> Option<Rational> {
    if q.is_zero() {
        return None;
    }
    let e = u32::try_from(n).ok()?;
    let neg = q.is_negative();
    if neg && n % 2 == 0 {
        return None;
    }
    let num = q.numer().abs();
    let den = q.denom().clone();
    let (rn, rd) = (num.nth_root(e), den.nth_root(e));
    if rn.pow(e) != num || rd.pow(e) != den {
        return None;
    }
    let r = Rational::new(rn, rd);
    Some(if neg { -r } else { r })
}
