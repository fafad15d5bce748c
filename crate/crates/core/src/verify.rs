//! Exhaustive and seeded property suites over the module families.
//!
//! - `braid`: the braid equation on all basis triples (windowed for the
//!   infinite families).
//! - `yd`: Yetter-Drinfeld compatibility, the group relations on every
//!   basis vector, and `(xy).v = x.(y.v)` on random samples.
//! - `tables`: computed braidings against the closed-form tables.
//! - `alambda`: reduction of random words in `A_lambda`, idempotents, the
//!   corner power identity and the radical lines.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::field::{CyclotomicField, FieldError, Matrix, Scalar};
use crate::group::GroupElement;
use crate::repn::{
    corner_power_identity, idempotent_pair, radical_line, ALambdaElement, CornerData, RepnError,
    Sign,
};
use crate::ydmod::{braiding_table_check, BasisVector, Family, ReflectionRep, Tensor2, YdError, YdModule};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?} (expected braid, yd, tables, alambda or all)")]
    UnknownSuite(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Module(#[from] YdError),
    #[error(transparent)]
    Repn(#[from] RepnError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Braid,
    Yd,
    Tables,
    Alambda,
    All,
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "braid" => Ok(Suite::Braid),
            "yd" => Ok(Suite::Yd),
            "tables" => Ok(Suite::Tables),
            "alambda" => Ok(Suite::Alambda),
            "all" => Ok(Suite::All),
            _ => Err(VerifyError::UnknownSuite(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub window: u64,
    pub seed: u64,
    pub order: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            window: 8,
            seed: 0,
            order: crate::field::DEFAULT_ORDER,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {} ({} checked)",
            self.suite,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checked
        )?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckResult>, VerifyError> {
    let k = CyclotomicField::new(opts.order)?;
    let mut out = Vec::new();
    if matches!(suite, Suite::Braid | Suite::All) {
        out.extend(braid_suite(&k, opts.window)?);
    }
    if matches!(suite, Suite::Yd | Suite::All) {
        out.extend(yd_suite(&k, opts.window, opts.seed)?);
    }
    if matches!(suite, Suite::Tables | Suite::All) {
        out.extend(tables_suite(&k, opts.window)?);
    }
    if matches!(suite, Suite::Alambda | Suite::All) {
        out.extend(alambda_suite(&k, opts.seed)?);
    }
    Ok(out)
}

/// `MHn(n, a)` for `n` in `{1, 2}` and `a` in `{1, -1, 2, z_3}`.
pub fn finite_test_modules(k: &Arc<CyclotomicField>) -> Result<Vec<YdModule>, VerifyError> {
    let z3 = k.zeta_pow(k.order() as i64 / 3);
    let mut out = Vec::new();
    for n in [1, 2] {
        for a in [k.one(), k.int(-1), k.int(2), z3.clone()] {
            out.push(YdModule::h_class(n, &a)?);
        }
    }
    Ok(out)
}

pub fn infinite_test_modules(k: &Arc<CyclotomicField>) -> Vec<YdModule> {
    let mut out = Vec::new();
    for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
        out.push(YdModule::g_class(k, rep));
    }
    for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
        out.push(YdModule::gh_class(k, rep));
    }
    out
}

type Tensor3 = BTreeMap<[BasisVector; 3], Scalar>;

fn add3(t: &mut Tensor3, key: [BasisVector; 3], c: Scalar) {
    let e = t.remove(&key);
    let s = match e {
        Some(old) => &old + &c,
        None => c,
    };
    if !s.is_zero() {
        t.insert(key, s);
    }
}

struct BraidCache<'a> {
    m: &'a YdModule,
    memo: HashMap<(BasisVector, BasisVector), Tensor2>,
}

impl BraidCache<'_> {
    fn braid(&mut self, v: BasisVector, w: BasisVector) -> Result<&Tensor2, YdError> {
        if !self.memo.contains_key(&(v, w)) {
            let t = self.m.braid(v, w)?;
            self.memo.insert((v, w), t);
        }
        Ok(&self.memo[&(v, w)])
    }

    /// `c (x) id` when `first`, else `id (x) c`.
    fn apply(&mut self, t: &Tensor3, first: bool) -> Result<Tensor3, YdError> {
        let mut out = Tensor3::new();
        for (&[u, v, w], c) in t {
            let (x, y) = if first { (u, v) } else { (v, w) };
            let br = self.braid(x, y)?.clone();
            for (&(l, r), d) in br.terms() {
                let key = if first { [l, r, w] } else { [u, l, r] };
                add3(&mut out, key, c * d);
            }
        }
        Ok(out)
    }
}

fn fmt3(t: &Tensor3) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|([a, b, c], x)| format!("({x}){a}⊗{b}⊗{c}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks `c12 c23 c12 = c23 c12 c23` on every triple from `basis`.
/// Returns the number of triples and the first failure, if any.
pub fn braid_equation_check(
    m: &YdModule,
    basis: &[BasisVector],
) -> Result<(usize, Option<String>), YdError> {
    let mut cache = BraidCache { m, memo: HashMap::new() };
    let mut count = 0;
    for &u in basis {
        for &v in basis {
            for &w in basis {
                count += 1;
                let mut t = Tensor3::new();
                let (cu, cv, cw) = (m.canonical(u)?, m.canonical(v)?, m.canonical(w)?);
                for (a, x) in cu.terms() {
                    for (b, y) in cv.terms() {
                        for (c, z) in cw.terms() {
                            add3(&mut t, [*a, *b, *c], &(x * y) * z);
                        }
                    }
                }
                let l1 = cache.apply(&t, true)?;
                let l2 = cache.apply(&l1, false)?;
                let lhs = cache.apply(&l2, true)?;
                let r1 = cache.apply(&t, false)?;
                let r2 = cache.apply(&r1, true)?;
                let rhs = cache.apply(&r2, false)?;
                if lhs != rhs {
                    return Ok((
                        count,
                        Some(format!("{u}⊗{v}⊗{w}: lhs {} rhs {}", fmt3(&lhs), fmt3(&rhs))),
                    ));
                }
            }
        }
    }
    Ok((count, None))
}

fn braid_suite(k: &Arc<CyclotomicField>, window: u64) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    let modules = finite_test_modules(k)?
        .into_iter()
        .chain(infinite_test_modules(k));
    for m in modules {
        let basis = m.window_basis(window);
        let (checked, witness) = braid_equation_check(&m, &basis)?;
        out.push(CheckResult {
            suite: "braid",
            name: format!("braid equation {}", m.label()),
            passed: witness.is_none(),
            checked,
            witness,
        });
    }
    Ok(out)
}

fn elements(window: u64) -> Vec<GroupElement> {
    let w = window as i64;
    (-w..=w)
        .flat_map(|e| [GroupElement::h_pow(e), GroupElement::g_h_pow(e)])
        .collect()
}

/// Whether `x` can act on `m`: an `h^n` class without a known `rho(h)` only
/// admits exponents divisible by `n`.
fn acts(m: &YdModule, x: &GroupElement) -> bool {
    match m.family() {
        Family::HPower { n, h_char: None, .. } => {
            (x.exponent() % num_bigint::BigInt::from(*n)) == num_bigint::BigInt::from(0)
        }
        _ => true,
    }
}

fn yd_suite(k: &Arc<CyclotomicField>, window: u64, seed: u64) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let modules: Vec<YdModule> = finite_test_modules(k)?
        .into_iter()
        .chain(infinite_test_modules(k))
        .collect();
    let g = GroupElement::g();
    let h = GroupElement::h();
    let h_inv = GroupElement::h_pow(-1);
    for m in &modules {
        let basis = m.window_basis(window);

        let mut checked = 0;
        let mut witness = None;
        'compat: for x in elements(window).iter().filter(|x| acts(m, x)) {
            for &v in &basis {
                checked += 1;
                if !m.yd_compat_check(x, v)? {
                    witness = Some(format!("deg({x} . {v}) != {x} deg({v}) {x}^-1"));
                    break 'compat;
                }
            }
        }
        out.push(CheckResult {
            suite: "yd",
            name: format!("compatibility {}", m.label()),
            passed: witness.is_none(),
            checked,
            witness,
        });

        let mut checked = 0;
        let mut witness = None;
        let has_h = acts(m, &h);
        for &v in &basis {
            let start = m.canonical(v)?;
            checked += 1;
            let gg = m.act_vector(&g, &m.act_vector(&g, &start)?)?;
            if gg != start {
                witness = Some(format!("g.g.{v} = {gg}"));
                break;
            }
            if has_h {
                let ghg = m.act_vector(&g, &m.act_vector(&h, &m.act_vector(&g, &start)?)?)?;
                let hi = m.act_vector(&h_inv, &start)?;
                let hhi = m.act_vector(&h, &hi)?;
                if ghg != hi || hhi != start {
                    witness = Some(format!("g.h.g.{v} = {ghg}, h^-1.{v} = {hi}"));
                    break;
                }
            }
        }
        out.push(CheckResult {
            suite: "yd",
            name: format!("group relations {}", m.label()),
            passed: witness.is_none(),
            checked,
            witness,
        });

        let w = window as i64;
        let mut checked = 0;
        let mut witness = None;
        for _ in 0..200 {
            let x = GroupElement::new(rng.gen_bool(0.5), rng.gen_range(-w..=w));
            let y = GroupElement::new(rng.gen_bool(0.5), rng.gen_range(-w..=w));
            let v = basis[rng.gen_range(0..basis.len())];
            if !acts(m, &x) || !acts(m, &y) {
                continue;
            }
            checked += 1;
            let lhs = m.act(&x.multiply(&y), v)?;
            let rhs = m.act_vector(&x, &m.act(&y, v)?)?;
            if lhs != rhs {
                witness = Some(format!("({x})({y}).{v}: {lhs} vs {rhs}"));
                break;
            }
        }
        out.push(CheckResult {
            suite: "yd",
            name: format!("action is multiplicative {}", m.label()),
            passed: witness.is_none(),
            checked,
            witness,
        });
    }
    Ok(out)
}

fn tables_suite(k: &Arc<CyclotomicField>, window: u64) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    for m in infinite_test_modules(k) {
        let r = braiding_table_check(&m, window)?;
        let (checked, witness) = match &r {
            crate::ydmod::TableCheck::Pass { pairs_checked } => (*pairs_checked, None),
            crate::ydmod::TableCheck::Fail { pairs_checked, mismatches } => {
                let first = &mismatches[0];
                (
                    *pairs_checked,
                    Some(format!(
                        "{} of {} pairs differ; first c({}⊗{}) = {} but table gives {}",
                        mismatches.len(),
                        pairs_checked,
                        first.left,
                        first.right,
                        first.computed,
                        first.table
                    )),
                )
            }
        };
        out.push(CheckResult {
            suite: "tables",
            name: format!("closed-form braiding {} window {window}", m.label()),
            passed: r.passed(),
            checked,
            witness,
        });
    }
    for m in finite_test_modules(k)? {
        let Family::HPower { a, .. } = m.family() else { unreachable!() };
        let ai = a.inv()?;
        let expected = Matrix::from_rows(vec![vec![a.clone(), ai.clone()], vec![ai, a.clone()]]);
        let q = m.diagonal_type()?;
        out.push(CheckResult {
            suite: "tables",
            name: format!("braiding matrix {}", m.label()),
            passed: q.as_ref() == Some(&expected),
            checked: 4,
            witness: q.filter(|q| q != &expected).map(|q| format!("got {q}")),
        });
    }
    for c in crate::repn::simple_modules(&k.zero())? {
        let m = YdModule::one_class(&c.name, c.rep)?;
        let q = m.diagonal_type()?;
        let ok = q
            .as_ref()
            .is_some_and(|q| q.rows() == 2 && q.to_rows().iter().flatten().all(Scalar::is_one));
        out.push(CheckResult {
            suite: "tables",
            name: format!("braiding matrix {}", m.label()),
            passed: ok,
            checked: 4,
            witness: (!ok).then(|| format!("got {q:?}")),
        });
    }
    Ok(out)
}

/// `lambda` values used by the `A_lambda` suite.
pub fn alambda_lambdas(k: &Arc<CyclotomicField>) -> Vec<Scalar> {
    vec![k.zero(), k.int(2), k.int(-2), k.int(3), k.frac(1, 3)]
}

/// A small random field element `sum c_i z^i` with `c_i` in `[-3, 3] / [1, 3]`.
pub fn random_scalar(rng: &mut impl Rng, k: &Arc<CyclotomicField>) -> Scalar {
    let coeffs = (0..k.degree())
        .map(|_| {
            crate::field::Rational::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
        })
        .collect();
    k.from_poly(coeffs)
}

/// `h^n` in `A_lambda` from `h^(n+1) = lambda h^n - h^(n-1)`, as `(c_1, c_h)`.
fn h_power_coeffs(lambda: &Scalar, n: i64) -> (Scalar, Scalar) {
    let k = lambda.field();
    let (mut prev, mut cur) = ((k.zero(), k.zero()), (k.one(), k.zero()));
    // prev = h^(i-1), cur = h^i, starting from i = 0 with h^-1 = lambda - h
    prev.0 = lambda.clone();
    prev.1 = k.int(-1);
    if n >= 0 {
        for _ in 0..n {
            let next = (
                &(lambda * &cur.0) - &prev.0,
                &(lambda * &cur.1) - &prev.1,
            );
            prev = cur;
            cur = next;
        }
        cur
    } else {
        let mut next = (k.zero(), k.one());
        for _ in 0..(-n) {
            let before = (
                &(lambda * &cur.0) - &next.0,
                &(lambda * &cur.1) - &next.1,
            );
            next = cur;
            cur = before;
        }
        cur
    }
}

/// Image of a group element in `A_lambda` via its normal form `g^e h^n`.
pub fn group_image(lambda: &Scalar, x: &GroupElement) -> ALambdaElement {
    use num_traits::ToPrimitive;
    let k = lambda.field();
    let n = x.exponent().to_i64().expect("small exponent");
    let (c1, ch) = h_power_coeffs(lambda, n);
    let z = k.zero();
    if x.is_reflection() {
        ALambdaElement::new(lambda, [z.clone(), c1, z, ch])
    } else {
        ALambdaElement::new(lambda, [c1, z.clone(), ch, z])
    }
}

fn alambda_suite(k: &Arc<CyclotomicField>, seed: u64) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lambdas = alambda_lambdas(k);

    let mut checked = 0;
    let mut witness = None;
    'words: for lambda in &lambdas {
        let gens = [
            (GroupElement::g(), ALambdaElement::g(lambda)),
            (GroupElement::h(), ALambdaElement::h(lambda)),
            (GroupElement::h_pow(-1), ALambdaElement::h_inv(lambda)),
        ];
        for _ in 0..1000 {
            let len = rng.gen_range(1..=12);
            let mut x = GroupElement::identity();
            let mut prod = ALambdaElement::one(lambda);
            let mut word = Vec::new();
            for _ in 0..len {
                let (gx, ax) = &gens[rng.gen_range(0..3)];
                x = x.multiply(gx);
                prod = prod.multiply(ax)?;
                word.push(gx.to_string());
            }
            checked += 1;
            let expected = group_image(lambda, &x);
            if prod != expected {
                witness = Some(format!(
                    "lambda={lambda}, word {}: product {prod}, normal form {x} gives {expected}",
                    word.join("·")
                ));
                break 'words;
            }
        }
    }
    out.push(CheckResult {
        suite: "alambda",
        name: "random words reduce into span(1, g, h, gh)".into(),
        passed: witness.is_none(),
        checked,
        witness,
    });

    let mut witness = None;
    for lambda in &lambdas {
        let one = ALambdaElement::one(lambda);
        match idempotent_pair(lambda) {
            Ok((e1, e2)) => {
                let ok = e1.multiply(&e1)? == e1 && e1.multiply(&e2)?.is_zero() && e1.add(&e2)? == one;
                if !ok {
                    witness = Some(format!("lambda={lambda}"));
                }
            }
            Err(e) => witness = Some(format!("lambda={lambda}: {e}")),
        }
    }
    out.push(CheckResult {
        suite: "alambda",
        name: "e1^2 = e1, e1 e2 = 0, e1 + e2 = 1".into(),
        passed: witness.is_none(),
        checked: lambdas.len(),
        witness,
    });

    let mut checked = 0;
    let mut witness = None;
    'triples: for _ in 0..100 {
        let (x1, x2, lambda) = (random_scalar(&mut rng, k), random_scalar(&mut rng, k), random_scalar(&mut rng, k));
        for n in 1..=5 {
            for side in [Sign::Plus, Sign::Minus] {
                checked += 1;
                if !corner_power_identity(&x1, &x2, &lambda, n, side)? {
                    witness = Some(format!("x1={x1}, x2={x2}, lambda={lambda}, n={n}, {side:?}"));
                    break 'triples;
                }
            }
        }
    }
    out.push(CheckResult {
        suite: "alambda",
        name: "corner power identity n <= 5".into(),
        passed: witness.is_none(),
        checked,
        witness,
    });

    let mut checked = 0;
    let mut witness = None;
    for lambda in &lambdas {
        for sign in [Sign::Plus, Sign::Minus] {
            for corner in [CornerData::right(lambda, sign)?, CornerData::left(lambda, sign)?] {
                checked += 1;
                match radical_line(&corner, lambda) {
                    Ok(r) if r.multiply(&r)?.is_zero() => {}
                    Ok(r) => witness = Some(format!("lambda={lambda}: r = {r}, r^2 != 0")),
                    Err(e) => witness = Some(format!("lambda={lambda}: {e}")),
                }
            }
        }
    }
    out.push(CheckResult {
        suite: "alambda",
        name: "radical line r^2 = 0".into(),
        passed: witness.is_none(),
        checked,
        witness,
    });
    Ok(out)
}
