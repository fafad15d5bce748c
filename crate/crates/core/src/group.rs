//! The infinite dihedral group `D = <h, g | g^2 = 1, ghg = h^-1>`.
//!
//! Every element has the unique normal form `g^e h^n` with `e` in `{0, 1}`
//! and `n` an integer, so [`GroupElement`] stores exactly that pair.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse group element {0:?}")]
pub struct ParseGroupError(pub String);

/// `g^reflection h^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    reflection: bool,
    exponent: BigInt,
}

impl GroupElement {
    pub fn new(reflection: bool, exponent: impl Into<BigInt>) -> Self {
        GroupElement {
            reflection,
            exponent: exponent.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(false, 0)
    }

    pub fn g() -> Self {
        Self::new(true, 0)
    }

    pub fn h() -> Self {
        Self::new(false, 1)
    }

    /// `h^n`.
    pub fn h_pow(n: impl Into<BigInt>) -> Self {
        Self::new(false, n)
    }

    /// `g h^n`.
    pub fn g_h_pow(n: impl Into<BigInt>) -> Self {
        Self::new(true, n)
    }

    /// `h^n g`, rewritten to normal form `g h^-n`.
    pub fn h_pow_g(n: impl Into<BigInt>) -> Self {
        Self::new(true, -n.into())
    }

    pub fn is_reflection(&self) -> bool {
        self.reflection
    }

    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    pub fn is_identity(&self) -> bool {
        !self.reflection && self.exponent.is_zero()
    }

    /// `(g^e h^m)(g^d h^n) = g^(e xor d) h^((-1)^d m + n)`.
    pub fn multiply(&self, other: &GroupElement) -> GroupElement {
        let m = if other.reflection {
            -&self.exponent
        } else {
            self.exponent.clone()
        };
        GroupElement {
            reflection: self.reflection ^ other.reflection,
            exponent: m + &other.exponent,
        }
    }

    /// Reflections are involutions; `h^n` inverts to `h^-n`.
    pub fn inverse(&self) -> GroupElement {
        if self.reflection {
            self.clone()
        } else {
            GroupElement::h_pow(-&self.exponent)
        }
    }

    /// `self ▷ y = self * y * self^-1`.
    pub fn conjugate(&self, y: &GroupElement) -> GroupElement {
        self.multiply(y).multiply(&self.inverse())
    }

    pub fn commutes_with(&self, other: &GroupElement) -> bool {
        self.multiply(other) == other.multiply(self)
    }

    pub fn conj_class(&self) -> ConjClass {
        if self.reflection {
            if self.exponent.is_even() {
                ConjClass::EvenReflections
            } else {
                ConjClass::OddReflections
            }
        } else if self.exponent.is_zero() {
            ConjClass::One
        } else {
            ConjClass::HPower(self.exponent.abs())
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hpart = if self.exponent.is_zero() {
            None
        } else if self.exponent.is_one() {
            Some("h".to_string())
        } else {
            Some(format!("h^{}", self.exponent))
        };
        match (self.reflection, hpart) {
            (false, None) => f.write_str("1"),
            (true, None) => f.write_str("g"),
            (false, Some(hp)) => f.write_str(&hp),
            (true, Some(hp)) => write!(f, "g {hp}"),
        }
    }
}

impl FromStr for GroupElement {
    type Err = ParseGroupError;

    /// Accepts normal forms such as `1`, `g`, `h`, `h^-3`, `g h^2`, and also
    /// the spaced-or-not variants `gh`, `g h`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGroupError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" {
            return Ok(Self::identity());
        }
        let (reflection, rest) = match t.strip_prefix('g') {
            Some(r) => (true, r),
            None => (false, t.as_str()),
        };
        if rest.is_empty() {
            return if reflection { Ok(Self::g()) } else { Err(err()) };
        }
        let hp = rest.strip_prefix('h').ok_or_else(err)?;
        let exponent = if hp.is_empty() {
            BigInt::one()
        } else {
            let e = hp.strip_prefix('^').ok_or_else(err)?;
            BigInt::from_str(e).map_err(|_| err())?
        };
        Ok(Self::new(reflection, exponent))
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Conjugacy classes of the infinite dihedral group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjClass {
    /// `{1}`.
    One,
    /// `{h^n, h^-n}`, `n >= 1`.
    HPower(BigInt),
    /// Reflections `g h^(2k)`; the class of `g`.
    EvenReflections,
    /// Reflections `g h^(2k+1)`; the class of `gh`.
    OddReflections,
}

impl ConjClass {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ConjClass::EvenReflections | ConjClass::OddReflections)
    }

    /// The base point used to build induced modules on this class.
    pub fn base_point(&self) -> GroupElement {
        match self {
            ConjClass::One => GroupElement::identity(),
            ConjClass::HPower(n) => GroupElement::h_pow(n.clone()),
            ConjClass::EvenReflections => GroupElement::g(),
            ConjClass::OddReflections => GroupElement::g_h_pow(1),
        }
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        &x.conj_class() == self
    }

    /// Representatives of the cosets `D / C(base_point)`, in the order the
    /// induced-module bases use them.
    ///
    /// - `One`: `1`
    /// - `HPower`: `1, g`
    /// - `EvenReflections`: `1, h, g h, h^2, g h^2, ...`
    /// - `OddReflections`: `1, h, h^2, g h^2, h^3, g h^3, ...`
    ///
    /// The centralizer of `gh` is `{1, gh}`, so `gh` itself lies in the
    /// trivial coset and is skipped for the odd class.
    pub fn coset_reps(&self) -> CosetReps {
        CosetReps {
            class: self.clone(),
            next: 0,
        }
    }

    pub fn label(&self) -> String {
        match self {
            ConjClass::One => "O_1".to_string(),
            ConjClass::HPower(n) => format!("O_h^{n}"),
            ConjClass::EvenReflections => "O_g".to_string(),
            ConjClass::OddReflections => "O_gh".to_string(),
        }
    }
}

impl Serialize for ConjClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.label())
    }
}

/// Lazy iterator over coset representatives; infinite for reflection classes.
#[derive(Clone, Debug)]
pub struct CosetReps {
    class: ConjClass,
    next: u64,
}

impl Iterator for CosetReps {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        let i = self.next;
        self.next += 1;
        match &self.class {
            ConjClass::One => (i == 0).then(GroupElement::identity),
            ConjClass::HPower(_) => match i {
                0 => Some(GroupElement::identity()),
                1 => Some(GroupElement::g()),
                _ => None,
            },
            ConjClass::EvenReflections => Some(match i {
                0 => GroupElement::identity(),
                _ if i % 2 == 1 => GroupElement::h_pow((i + 1) / 2),
                _ => GroupElement::g_h_pow(i / 2),
            }),
            ConjClass::OddReflections => Some(match i {
                0 => GroupElement::identity(),
                1 => GroupElement::h(),
                // i = 2, 3 -> h^2, g h^2; i = 4, 5 -> h^3, g h^3; ...
                _ if i % 2 == 0 => GroupElement::h_pow(i / 2 + 1),
                _ => GroupElement::g_h_pow(i / 2 + 1),
            }),
        }
    }
}
