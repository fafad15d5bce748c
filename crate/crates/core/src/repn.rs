//! The four-dimensional quotient `A = k[D] / <h + h^-1 - lambda>` and small
//! representations of the infinite dihedral group.
//!
//! Every simple `k[D]`-module factors through some `A`, so this module holds
//! the structure constants of `A` in the basis `(1, g, h, gh)`, its idempotent
//! decomposition and nilpotent lines, the simple-module candidates built from
//! them, and exact checkers (module axioms, irreducibility, isomorphism) for
//! representations of dimension at most two.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::field::{CyclotomicField, FieldError, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepnError {
    #[error("elements of A_lambda for different lambda values")]
    LambdaMismatch,
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Element of `A_lambda` in the ordered basis `(1, g, h, gh)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALambdaElement {
    lambda: Scalar,
    coeffs: [Scalar; 4],
}

pub const BASIS_LABELS: [&str; 4] = ["1", "g", "h", "gh"];

impl ALambdaElement {
    pub fn new(lambda: &Scalar, coeffs: [Scalar; 4]) -> Self {
        ALambdaElement {
            lambda: lambda.clone(),
            coeffs,
        }
    }

    fn basis(lambda: &Scalar, i: usize) -> Self {
        let k = lambda.field();
        let mut coeffs = [k.zero(), k.zero(), k.zero(), k.zero()];
        coeffs[i] = k.one();
        Self::new(lambda, coeffs)
    }

    pub fn zero(lambda: &Scalar) -> Self {
        let k = lambda.field();
        Self::new(lambda, [k.zero(), k.zero(), k.zero(), k.zero()])
    }

    pub fn one(lambda: &Scalar) -> Self {
        Self::basis(lambda, 0)
    }

    pub fn g(lambda: &Scalar) -> Self {
        Self::basis(lambda, 1)
    }

    pub fn h(lambda: &Scalar) -> Self {
        Self::basis(lambda, 2)
    }

    pub fn gh(lambda: &Scalar) -> Self {
        Self::basis(lambda, 3)
    }

    /// `h^-1 = lambda - h`.
    pub fn h_inv(lambda: &Scalar) -> Self {
        let k = lambda.field();
        Self::new(lambda, [lambda.clone(), k.zero(), -k.one(), k.zero()])
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn coeffs(&self) -> &[Scalar; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn same_lambda(&self, other: &Self) -> Result<(), RepnError> {
        if self.lambda == other.lambda {
            Ok(())
        } else {
            Err(RepnError::LambdaMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RepnError> {
        self.same_lambda(other)?;
        Ok(Self::new(
            &self.lambda,
            std::array::from_fn(|i| &self.coeffs[i] + &other.coeffs[i]),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RepnError> {
        self.same_lambda(other)?;
        Ok(Self::new(
            &self.lambda,
            std::array::from_fn(|i| &self.coeffs[i] - &other.coeffs[i]),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(&self.lambda, std::array::from_fn(|i| c * &self.coeffs[i]))
    }

    /// Product in `A_lambda`, reduced with `g^2 = 1`, `hg = lambda g - gh`,
    /// `h^2 = lambda h - 1`.
    pub fn multiply(&self, other: &Self) -> Result<Self, RepnError> {
        self.same_lambda(other)?;
        let k = self.lambda.field();
        let mut out: [Scalar; 4] = std::array::from_fn(|_| k.zero());
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(basis_product(&self.lambda, i, j)) {
                    if !c.is_zero() {
                        *o = &*o + &(&xy * &c);
                    }
                }
            }
        }
        Ok(Self::new(&self.lambda, out))
    }

    pub fn pow(&self, n: u32) -> Result<Self, RepnError> {
        let mut acc = Self::one(&self.lambda);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }
}

impl std::fmt::Display for ALambdaElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .zip(BASIS_LABELS)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, b)| match (c.is_one(), b) {
                (true, _) => b.to_string(),
                (false, "1") => format!("({c})"),
                _ if (-c).is_one() => format!("-{b}"),
                _ => format!("({c}){b}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Serialize for ALambdaElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(4))?;
        for (c, b) in self.coeffs.iter().zip(BASIS_LABELS) {
            map.serialize_entry(b, c)?;
        }
        map.end()
    }
}

/// Product of basis elements `i * j` as a coefficient vector over `(1, g, h, gh)`.
fn basis_product(lambda: &Scalar, i: usize, j: usize) -> [Scalar; 4] {
    let k = lambda.field();
    let (z, one, l) = (k.zero(), k.one(), lambda.clone());
    let v = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| [a.clone(), b.clone(), c.clone(), d.clone()];
    let m1 = -&one;
    match (i, j) {
        (0, j) => {
            let mut e = v(&z, &z, &z, &z);
            e[j] = one;
            e
        }
        (i, 0) => {
            let mut e = v(&z, &z, &z, &z);
            e[i] = one;
            e
        }
        (1, 1) => v(&one, &z, &z, &z),
        (1, 2) => v(&z, &z, &z, &one),
        (1, 3) => v(&z, &z, &one, &z),
        // hg = lambda g - gh
        (2, 1) => v(&z, &l, &z, &m1),
        // h^2 = lambda h - 1
        (2, 2) => v(&m1, &z, &l, &z),
        // h gh = g
        (2, 3) => v(&z, &one, &z, &z),
        // gh g = lambda - h
        (3, 1) => v(&l, &z, &m1, &z),
        // gh h = lambda gh - g
        (3, 2) => v(&z, &m1, &z, &l),
        (3, 3) => v(&one, &z, &z, &z),
        _ => unreachable!("basis index out of range"),
    }
}

/// Full 4x4 table of basis products, row `i` times column `j`.
pub fn structure_table(lambda: &Scalar) -> Vec<Vec<ALambdaElement>> {
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| ALambdaElement::new(lambda, basis_product(lambda, i, j)))
                .collect()
        })
        .collect()
}

/// `(e1, e2) = (1/2 (1 + g), 1/2 (1 - g))`, checked to be a complete pair of
/// orthogonal idempotents.
pub fn idempotent_pair(lambda: &Scalar) -> Result<(ALambdaElement, ALambdaElement), RepnError> {
    let k = lambda.field();
    let half = k.frac(1, 2);
    let one = ALambdaElement::one(lambda);
    let g = ALambdaElement::g(lambda);
    let e1 = one.add(&g)?.scale(&half);
    let e2 = one.sub(&g)?.scale(&half);
    let ok = e1.multiply(&e1)? == e1
        && e2.multiply(&e2)? == e2
        && e1.multiply(&e2)?.is_zero()
        && e2.multiply(&e1)?.is_zero()
        && e1.add(&e2)? == one;
    if !ok {
        return Err(RepnError::Inconsistent(
            "e1, e2 fail the idempotent relations".into(),
        ));
    }
    Ok((e1, e2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn scalar(self, k: &Arc<CyclotomicField>) -> Scalar {
        match self {
            Sign::Plus => k.one(),
            Sign::Minus => k.int(-1),
        }
    }
}

/// Generators of the right corner `e A`: `(1 + g, h + gh)` for `Plus`,
/// `(1 - g, h - gh)` for `Minus`.
pub fn corner_generators(lambda: &Scalar, side: Sign) -> (ALambdaElement, ALambdaElement) {
    let k = lambda.field();
    let s = side.scalar(k);
    let z = k.zero();
    let a = ALambdaElement::new(lambda, [k.one(), s.clone(), z.clone(), z.clone()]);
    let b = ALambdaElement::new(lambda, [z.clone(), z, k.one(), s]);
    (a, b)
}

/// Checks `(x1 a + x2 b)^n = (2 x1 + lambda x2)^(n-1) (x1 a + x2 b)` by
/// repeated multiplication in `A_lambda`.
pub fn corner_power_identity(
    x1: &Scalar,
    x2: &Scalar,
    lambda: &Scalar,
    n: u32,
    side: Sign,
) -> Result<bool, RepnError> {
    if n == 0 {
        return Err(RepnError::Precondition("power must be at least 1".into()));
    }
    let (a, b) = corner_generators(lambda, side);
    let x = a.scale(x1).add(&b.scale(x2))?;
    let lhs = x.pow(n)?;
    let factor = (&lambda.field().int(2) * x1 + lambda * x2).pow(n as i64 - 1)?;
    Ok(lhs == x.scale(&factor))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CornerSide {
    /// `e A`
    Right,
    /// `A e`
    Left,
}

/// A corner `e A` or `A e` with a spanning pair and, once computed, its
/// nilpotent line.
#[derive(Clone, Debug, Serialize)]
pub struct CornerData {
    pub side: CornerSide,
    pub sign: Sign,
    pub idempotent: ALambdaElement,
    pub basis: [ALambdaElement; 2],
    pub radical_line: Option<ALambdaElement>,
}

impl CornerData {
    /// `e1 A = k(1+g) + k(h+gh)`, `e2 A = k(1-g) + k(h-gh)`.
    pub fn right(lambda: &Scalar, sign: Sign) -> Result<Self, RepnError> {
        let (e1, e2) = idempotent_pair(lambda)?;
        let (a, b) = corner_generators(lambda, sign);
        let e = if sign == Sign::Plus { e1 } else { e2 };
        Self::checked(CornerSide::Right, sign, e, [a, b])
    }

    /// `A e1 = k(1+g) + k(h^-1+gh)`, `A e2 = k(1-g) + k(h^-1-gh)`.
    pub fn left(lambda: &Scalar, sign: Sign) -> Result<Self, RepnError> {
        let (e1, e2) = idempotent_pair(lambda)?;
        let k = lambda.field();
        let s = sign.scalar(k);
        let z = k.zero();
        let a = ALambdaElement::new(lambda, [k.one(), s.clone(), z.clone(), z.clone()]);
        let b = ALambdaElement::h_inv(lambda).add(&ALambdaElement::new(lambda, [z.clone(), z.clone(), z, s]))?;
        let e = if sign == Sign::Plus { e1 } else { e2 };
        Self::checked(CornerSide::Left, sign, e, [a, b])
    }

    fn checked(
        side: CornerSide,
        sign: Sign,
        idempotent: ALambdaElement,
        basis: [ALambdaElement; 2],
    ) -> Result<Self, RepnError> {
        for x in &basis {
            let absorbed = match side {
                CornerSide::Right => idempotent.multiply(x)?,
                CornerSide::Left => x.multiply(&idempotent)?,
            };
            if &absorbed != x {
                return Err(RepnError::Inconsistent(format!(
                    "{x} is not in the {side:?} corner"
                )));
            }
        }
        Ok(CornerData {
            side,
            sign,
            idempotent,
            basis,
            radical_line: None,
        })
    }
}

/// The nilpotent line `k(b - (lambda/2) a)` of a corner spanned by `(a, b)`.
///
/// Verifies `r^2 = 0` and that `r` annihilates the corner from the side it
/// absorbs (`r a = r b = 0` on a right corner, `a r = b r = 0` on a left one).
pub fn radical_line(corner: &CornerData, lambda: &Scalar) -> Result<ALambdaElement, RepnError> {
    let [a, b] = &corner.basis;
    let half_lambda = lambda * &lambda.field().frac(1, 2);
    let r = b.sub(&a.scale(&half_lambda))?;
    if !r.multiply(&r)?.is_zero() {
        return Err(RepnError::Inconsistent(format!("radical line {r} is not square-zero")));
    }
    for x in [a, b] {
        let p = match corner.side {
            CornerSide::Right => r.multiply(x)?,
            CornerSide::Left => x.multiply(&r)?,
        };
        if !p.is_zero() {
            return Err(RepnError::Inconsistent(format!(
                "radical line {r} does not annihilate {x}"
            )));
        }
    }
    Ok(r)
}

/// Whether the line `k r` is closed under multiplication by `g` and `h` on the
/// corner's module side, i.e. whether it is actually a submodule.
pub fn line_is_submodule(corner: &CornerData, r: &ALambdaElement) -> Result<bool, RepnError> {
    let lambda = r.lambda().clone();
    for gen in [ALambdaElement::g(&lambda), ALambdaElement::h(&lambda)] {
        let img = match corner.side {
            CornerSide::Right => r.multiply(&gen)?,
            CornerSide::Left => gen.multiply(r)?,
        };
        if !proportional(&img, r) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn proportional(x: &ALambdaElement, r: &ALambdaElement) -> bool {
    let Some(p) = r.coeffs.iter().position(|c| !c.is_zero()) else {
        return x.is_zero();
    };
    let t = &x.coeffs[p] * &r.coeffs[p].inv().expect("nonzero");
    x.coeffs.iter().zip(&r.coeffs).all(|(xc, rc)| xc == &(&t * rc))
}

/// A representation of dimension 1 or 2, given by the images of `g`, `h`
/// and `h^-1`. Columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRep {
    g: Matrix,
    h: Matrix,
    h_inv: Matrix,
}

impl FinRep {
    pub fn new(g: Matrix, h: Matrix) -> Result<Self, RepnError> {
        let d = g.rows();
        if !(1..=2).contains(&d) || !g.is_square() || h.rows() != d || !h.is_square() {
            return Err(RepnError::Precondition(
                "representation matrices must be square of size 1 or 2".into(),
            ));
        }
        let h_inv = h
            .inverse()
            .map_err(|_| RepnError::Precondition("image of h must be invertible".into()))?;
        Ok(FinRep { g, h, h_inv })
    }

    /// One-dimensional representation `g -> g_val`, `h -> h_val`.
    pub fn character(g_val: &Scalar, h_val: &Scalar) -> Result<Self, RepnError> {
        Self::new(
            Matrix::from_rows(vec![vec![g_val.clone()]]),
            Matrix::from_rows(vec![vec![h_val.clone()]]),
        )
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.g.field()
    }

    pub fn g(&self) -> &Matrix {
        &self.g
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn h_inv(&self) -> &Matrix {
        &self.h_inv
    }

    /// Conjugate by an invertible change of basis `p`: `x -> p x p^-1`.
    pub fn conjugated(&self, p: &Matrix) -> Result<Self, RepnError> {
        let p_inv = p.inverse()?;
        let conj = |m: &Matrix| -> Result<Matrix, FieldError> { p.mul(m)?.mul(&p_inv) };
        Self::new(conj(&self.g)?, conj(&self.h)?)
    }
}

impl Serialize for FinRep {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FinRep", 3)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("g", &self.g.to_rows())?;
        st.serialize_field("h", &self.h.to_rows())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// `g^2 = 1`
    #[serde(rename = "g^2 = 1")]
    GSquared,
    /// `g h g = h^-1`
    #[serde(rename = "g h g = h^-1")]
    Conjugation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum AxiomCheck {
    Pass,
    Fail { violated: Relation, witness: String },
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomCheck::Pass)
    }
}

/// Checks the defining relations `g^2 = 1` and `g h g = h^-1` on the matrices.
pub fn module_axiom_check(rep: &FinRep) -> AxiomCheck {
    let k = rep.field();
    let id = Matrix::identity(k, rep.dim());
    let g2 = rep.g.mul(&rep.g).expect("same field");
    if g2 != id {
        return AxiomCheck::Fail {
            violated: Relation::GSquared,
            witness: format!("G^2 = {}", g2.to_string().trim_end()),
        };
    }
    let ghg = rep.g.mul(&rep.h).and_then(|m| m.mul(&rep.g)).expect("same field");
    if ghg != rep.h_inv {
        return AxiomCheck::Fail {
            violated: Relation::Conjugation,
            witness: format!(
                "G H G = {} but H^-1 = {}",
                ghg.to_string().trim_end(),
                rep.h_inv.to_string().trim_end()
            ),
        };
    }
    AxiomCheck::Pass
}

/// Whether the representation factors through `A_lambda`, i.e. `H + H^-1 = lambda I`.
pub fn factors_through(rep: &FinRep, lambda: &Scalar) -> bool {
    let d = rep.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let lhs = &rep.h[(i, j)] + &rep.h_inv[(i, j)];
            let rhs = if i == j { lambda.clone() } else { lambda.field().zero() };
            lhs == rhs
        })
    })
}

/// Burnside criterion: a 2-dimensional representation is (absolutely)
/// irreducible iff words of length <= 3 in `G, H` span all 2x2 matrices.
pub fn is_irreducible(rep: &FinRep) -> Result<bool, RepnError> {
    if !module_axiom_check(rep).passed() {
        return Err(RepnError::Precondition(
            "irreducibility needs a representation that passes the module axioms".into(),
        ));
    }
    if rep.dim() == 1 {
        return Ok(true);
    }
    let k = rep.field();
    let mut words = vec![Matrix::identity(k, 2)];
    let mut frontier = words.clone();
    for _ in 0..3 {
        let mut next = Vec::new();
        for w in &frontier {
            for gen in [&rep.g, &rep.h] {
                next.push(w.mul(gen)?);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let rows: Vec<Vec<Scalar>> = words
        .iter()
        .map(|m| vec![m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone()])
        .collect();
    Ok(Matrix::from_rows(rows).rank() == 4)
}

/// Decides whether an invertible `T` with `T G1 = G2 T`, `T H1 = H2 T` exists.
pub fn rep_iso_check(r1: &FinRep, r2: &FinRep) -> Result<bool, RepnError> {
    for r in [r1, r2] {
        if !module_axiom_check(r).passed() {
            return Err(RepnError::Precondition(
                "isomorphism test needs representations that pass the module axioms".into(),
            ));
        }
    }
    if r1.dim() != r2.dim() {
        return Ok(false);
    }
    let d = r1.dim();
    let k = r1.field();
    // Unknown t_{pq} sits at column p*d + q.
    let mut eqs = Vec::new();
    for (m1, m2) in [(&r1.g, &r2.g), (&r1.h, &r2.h)] {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![k.zero(); d * d];
                for s in 0..d {
                    // (T M1)_{ij} = sum_s t_{is} M1_{sj}
                    row[i * d + s] = &row[i * d + s] + &m1[(s, j)];
                    // (M2 T)_{ij} = sum_s M2_{is} t_{sj}
                    row[s * d + j] = &row[s * d + j] - &m2[(i, s)];
                }
                eqs.push(row);
            }
        }
    }
    let basis = Matrix::from_rows(eqs).null_space();
    if basis.is_empty() {
        return Ok(false);
    }
    // det(sum c_i T_i) has degree d in each c_i; a grid with d+1 values per
    // coordinate meets its non-vanishing set whenever it is nonzero.
    let values: Vec<Scalar> = (0..=d as i64).map(|v| k.int(v)).collect();
    let mut idx = vec![0usize; basis.len()];
    loop {
        let mut t = vec![k.zero(); d * d];
        for (c, b) in idx.iter().zip(&basis) {
            for (x, y) in t.iter_mut().zip(b) {
                *x = &*x + &(&values[*c] * y);
            }
        }
        let tm = Matrix::from_rows(t.chunks(d).map(<[Scalar]>::to_vec).collect());
        if !tm.determinant().is_zero() {
            return Ok(true);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(false);
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// A simple-module candidate together with its verification flags.
#[derive(Clone, Debug, Serialize)]
pub struct SimpleCandidate {
    pub name: String,
    pub lambda: Scalar,
    pub rep: FinRep,
    pub axioms: AxiomCheck,
    /// `H + H^-1 = lambda I`.
    pub factors_through_lambda: bool,
    /// `None` when the candidate fails the module axioms.
    pub irreducible: Option<bool>,
}

impl SimpleCandidate {
    pub fn is_valid(&self) -> bool {
        self.axioms.passed() && self.irreducible == Some(true)
    }
}

/// Builds the simple-module candidates for `A_lambda`.
///
/// For `lambda = 0` these are the 2-dimensional `S0+` (`g a = a, h a = -b,
/// g b = -b, h b = a`) and `S0-` (`g c = -c, h c = -d, g d = d, h d = c`).
/// Otherwise they are the characters `Slam+` (`g -> 1`) and `Slam-`
/// (`g -> -1`) with `h -> lambda/2`. Candidates failing the axioms are kept
/// and flagged.
pub fn simple_modules(lambda: &Scalar) -> Result<Vec<SimpleCandidate>, RepnError> {
    let k = lambda.field();
    let (z, one, m1) = (k.zero(), k.one(), k.int(-1));
    let mut out = Vec::new();
    let reps: Vec<(&str, FinRep)> = if lambda.is_zero() {
        let h = Matrix::from_rows(vec![vec![z.clone(), one.clone()], vec![m1.clone(), z.clone()]]);
        let g_plus = Matrix::from_rows(vec![vec![one.clone(), z.clone()], vec![z.clone(), m1.clone()]]);
        let g_minus = Matrix::from_rows(vec![vec![m1.clone(), z.clone()], vec![z.clone(), one.clone()]]);
        vec![
            ("S0+", FinRep::new(g_plus, h.clone())?),
            ("S0-", FinRep::new(g_minus, h)?),
        ]
    } else {
        let half = lambda * &k.frac(1, 2);
        vec![
            ("Slam+", FinRep::character(&one, &half)?),
            ("Slam-", FinRep::character(&m1, &half)?),
        ]
    };
    for (name, rep) in reps {
        let axioms = module_axiom_check(&rep);
        let irreducible = if axioms.passed() { Some(is_irreducible(&rep)?) } else { None };
        out.push(SimpleCandidate {
            name: name.to_string(),
            lambda: lambda.clone(),
            factors_through_lambda: factors_through(&rep, lambda),
            rep,
            axioms,
            irreducible,
        });
    }
    Ok(out)
}

/// Sections of the `A_lambda` JSON report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ALambdaReport {
    Structure,
    Idempotents,
    Radical,
    Simples,
}

impl std::str::FromStr for ALambdaReport {
    type Err = RepnError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "structure" => Ok(Self::Structure),
            "idempotents" => Ok(Self::Idempotents),
            "radical" => Ok(Self::Radical),
            "simples" => Ok(Self::Simples),
            _ => Err(RepnError::Precondition(format!("unknown report {s:?}"))),
        }
    }
}

pub fn alambda_report(lambda: &Scalar, report: ALambdaReport) -> Result<serde_json::Value, RepnError> {
    use serde_json::json;
    let body = match report {
        ALambdaReport::Structure => json!({
            "basis": BASIS_LABELS,
            "products": structure_table(lambda),
        }),
        ALambdaReport::Idempotents => {
            let (e1, e2) = idempotent_pair(lambda)?;
            json!({ "e1": e1, "e2": e2 })
        }
        ALambdaReport::Radical => {
            let mut corners = Vec::new();
            for sign in [Sign::Plus, Sign::Minus] {
                for mut c in [CornerData::right(lambda, sign)?, CornerData::left(lambda, sign)?] {
                    let r = radical_line(&c, lambda)?;
                    let sub = line_is_submodule(&c, &r)?;
                    c.radical_line = Some(r);
                    corners.push(json!({ "corner": c, "line_is_submodule": sub }));
                }
            }
            json!({ "corners": corners })
        }
        ALambdaReport::Simples => json!({ "candidates": simple_modules(lambda)? }),
    };
    Ok(json!({ "lambda": lambda, "report": body }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Arc<CyclotomicField> {
        CyclotomicField::new(12).unwrap()
    }

    #[test]
    fn reduction_rules() {
        let k = k();
        let lam = k.int(3);
        let h = ALambdaElement::h(&lam);
        let g = ALambdaElement::g(&lam);
        let one = ALambdaElement::one(&lam);
        // h^2 = lambda h - 1
        assert_eq!(h.multiply(&h).unwrap(), h.scale(&lam).sub(&one).unwrap());
        // hg = lambda g - gh
        let gh = ALambdaElement::gh(&lam);
        assert_eq!(h.multiply(&g).unwrap(), g.scale(&lam).sub(&gh).unwrap());
        let x = ALambdaElement::new(&lam, [k.int(1), k.int(2), k.frac(1, 3), k.zeta()]);
        assert_eq!(one.multiply(&x).unwrap(), x);
        assert_eq!(ALambdaElement::h_inv(&lam).multiply(&h).unwrap(), one);
    }

    #[test]
    fn lambda_mismatch() {
        let k = k();
        let x = ALambdaElement::g(&k.int(0));
        let y = ALambdaElement::g(&k.int(1));
        assert_eq!(x.multiply(&y), Err(RepnError::LambdaMismatch));
    }

    #[test]
    fn idempotents_at_zero() {
        let k = k();
        let lam = k.zero();
        let (e1, e2) = idempotent_pair(&lam).unwrap();
        assert_eq!(e1.coeffs()[0], k.frac(1, 2));
        assert_eq!(e1.coeffs()[1], k.frac(1, 2));
        assert_eq!(e2.coeffs()[1], k.frac(-1, 2));
        assert!(e1.multiply(&e2).unwrap().is_zero());
        assert_eq!(e1.add(&e2).unwrap(), ALambdaElement::one(&lam));
    }

    #[test]
    fn corner_power_examples() {
        let k = k();
        assert!(corner_power_identity(&k.one(), &k.zero(), &k.int(5), 2, Sign::Plus).unwrap());
        assert!(corner_power_identity(&k.zero(), &k.one(), &k.int(3), 3, Sign::Plus).unwrap());
        // b^3 = 9 b at lambda = 3, spelled out
        let lam = k.int(3);
        let (_, b) = corner_generators(&lam, Sign::Plus);
        assert_eq!(b.pow(3).unwrap(), b.scale(&k.int(9)));
        assert!(corner_power_identity(&k.one(), &k.one(), &k.one(), 0, Sign::Plus).is_err());
    }

    #[test]
    fn radical_lines() {
        let k = k();
        let lam = k.zero();
        let c = CornerData::right(&lam, Sign::Plus).unwrap();
        let r = radical_line(&c, &lam).unwrap();
        assert_eq!(r, c.basis[1]);

        let lam = k.int(2);
        let c = CornerData::right(&lam, Sign::Plus).unwrap();
        let r = radical_line(&c, &lam).unwrap();
        assert_eq!(r, c.basis[1].sub(&c.basis[0]).unwrap());
        assert!(r.multiply(&r).unwrap().is_zero());
        assert!(line_is_submodule(&c, &r).unwrap());

        let lam = k.int(3);
        for side in [Sign::Plus, Sign::Minus] {
            let c = CornerData::left(&lam, side).unwrap();
            let r = radical_line(&c, &lam).unwrap();
            assert!(r.multiply(&r).unwrap().is_zero());
            assert!(!line_is_submodule(&c, &r).unwrap());
        }
    }

    fn s0(sign: &str) -> FinRep {
        let lam = k().zero();
        simple_modules(&lam)
            .unwrap()
            .into_iter()
            .find(|c| c.name == sign)
            .unwrap()
            .rep
    }

    #[test]
    fn simple_candidates() {
        let k = k();
        let at0 = simple_modules(&k.zero()).unwrap();
        assert_eq!(at0.len(), 2);
        assert!(at0.iter().all(|c| c.rep.dim() == 2 && c.is_valid() && c.factors_through_lambda));

        let at2 = simple_modules(&k.int(2)).unwrap();
        assert!(at2.iter().all(|c| c.rep.dim() == 1 && c.is_valid()));
        assert_eq!(at2[0].rep.g()[(0, 0)], k.one());
        assert_eq!(at2[0].rep.h()[(0, 0)], k.one());
        assert_eq!(at2[1].rep.g()[(0, 0)], k.int(-1));

        let at3 = simple_modules(&k.int(3)).unwrap();
        for c in &at3 {
            assert!(!c.axioms.passed());
            assert!(matches!(
                c.axioms,
                AxiomCheck::Fail { violated: Relation::Conjugation, .. }
            ));
            assert!(!c.factors_through_lambda);
            assert_eq!(c.irreducible, None);
        }
    }

    #[test]
    fn axiom_and_irreducibility_examples() {
        let k = k();
        let triv = FinRep::character(&k.one(), &k.one()).unwrap();
        assert!(module_axiom_check(&triv).passed());
        assert!(is_irreducible(&triv).unwrap());
        assert!(module_axiom_check(&s0("S0+")).passed());
        assert!(is_irreducible(&s0("S0+")).unwrap());

        let bad = FinRep::character(&k.one(), &k.frac(3, 2)).unwrap();
        assert!(matches!(
            module_axiom_check(&bad),
            AxiomCheck::Fail { violated: Relation::Conjugation, .. }
        ));
        assert!(is_irreducible(&bad).is_err());

        let z = k.zero();
        let g = Matrix::from_rows(vec![vec![k.one(), z.clone()], vec![z.clone(), k.one()]]);
        let h = Matrix::from_rows(vec![vec![k.int(2), z.clone()], vec![z, k.frac(1, 2)]]);
        let diag = FinRep::new(g, h).unwrap();
        // Commuting images with H != H^-1: G H G = H, so this pair is not a
        // representation and the irreducibility test refuses it.
        assert!(!module_axiom_check(&diag).passed());
        assert!(is_irreducible(&diag).is_err());

        let g = Matrix::from_rows(vec![vec![k.one(), k.zero()], vec![k.zero(), k.int(-1)]]);
        let split = FinRep::new(g, Matrix::identity(&k, 2)).unwrap();
        assert!(module_axiom_check(&split).passed());
        assert!(!is_irreducible(&split).unwrap());
        let triv2 = FinRep::new(Matrix::identity(&k, 2), Matrix::identity(&k, 2)).unwrap();
        assert!(!is_irreducible(&triv2).unwrap());
    }

    #[test]
    fn isomorphism_examples() {
        let k = k();
        let plus = FinRep::character(&k.one(), &k.one()).unwrap();
        let minus = FinRep::character(&k.int(-1), &k.one()).unwrap();
        assert!(rep_iso_check(&plus, &plus).unwrap());
        assert!(!rep_iso_check(&plus, &minus).unwrap());
        assert!(!rep_iso_check(&plus, &s0("S0+")).unwrap());
        // T = [[0, 1], [-1, 0]] intertwines S0+ and S0-.
        assert!(rep_iso_check(&s0("S0+"), &s0("S0-")).unwrap());
    }
}
