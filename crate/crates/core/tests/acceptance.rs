//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dinf_nichols::classify::{theorem_table, Gk, ParamGrid, REPORT_SCHEMA};
use dinf_nichols::field::{CyclotomicField, Matrix, Scalar};
use dinf_nichols::group::GroupElement;
use dinf_nichols::nichols::{growth_fit, BraidedSpace, GrowthFit};
use dinf_nichols::repn::{
    corner_power_identity, idempotent_pair, is_irreducible, module_axiom_check, radical_line,
    rep_iso_check, simple_modules, ALambdaElement, AxiomCheck, CornerData, Relation, Sign,
};
use dinf_nichols::verify::braid_equation_check;
use dinf_nichols::ydmod::{braiding_table_check, ReflectionRep, TableCheck, YdModule};

const BRAID_WINDOW: u64 = 8;
const BRAID_BUDGET: Duration = Duration::from_secs(10);
const TABLE_WINDOW: u64 = 8;
const NICHOLS_DEGREE: usize = 6;
const NICHOLS_BUDGET: Duration = Duration::from_secs(60);
const ALAMBDA_WORDS: usize = 1000;
const ALAMBDA_TRIPLES: usize = 100;
const ALAMBDA_BUDGET: Duration = Duration::from_secs(5);
const SVD_TOLERANCE: f64 = 1e-8;
const SEED: u64 = 20240611;

fn k() -> Arc<CyclotomicField> {
    CyclotomicField::new(12).unwrap()
}

fn report(n: u32, ok: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

fn a_values(k: &Arc<CyclotomicField>) -> Vec<Scalar> {
    vec![k.one(), k.int(-1), k.int(2), k.zeta_pow(4)]
}

#[test]
fn criterion_1_braid_equation() {
    let k = k();
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for n in [1, 2] {
        for a in a_values(&k) {
            let m = YdModule::h_class(n, &a).unwrap();
            let (count, w) = braid_equation_check(&m, &m.finite_basis().unwrap()).unwrap();
            lines.push(format!("{}: {count} triples", m.label()));
            if count != 8 {
                failures.push(format!("{}: {count} triples, expected 8", m.label()));
            }
            failures.extend(w);
        }
    }
    for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
        for m in [YdModule::g_class(&k, rep), YdModule::gh_class(&k, rep)] {
            let (count, w) = braid_equation_check(&m, &m.window_basis(BRAID_WINDOW)).unwrap();
            lines.push(format!("{}: {count} triples", m.label()));
            if count < 17usize.pow(3) {
                failures.push(format!("{}: only {count} triples", m.label()));
            }
            failures.extend(w);
        }
    }
    let elapsed = start.elapsed();
    if elapsed > BRAID_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    for l in &lines {
        println!("  {l}");
    }
    report(1, failures.is_empty(), &format!("braid equation ({elapsed:.2?}) {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_2_braiding_tables() {
    let k = k();
    let mut failures = Vec::new();
    for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
        for m in [YdModule::g_class(&k, rep), YdModule::gh_class(&k, rep)] {
            match braiding_table_check(&m, TABLE_WINDOW).unwrap() {
                TableCheck::Pass { pairs_checked } => {
                    println!("  {}: {pairs_checked} pairs agree", m.label())
                }
                TableCheck::Fail { pairs_checked, mismatches } => {
                    let x = &mismatches[0];
                    let msg = format!(
                        "{}: {} of {pairs_checked} pairs differ, first c({}⊗{}) computed {} table {}",
                        m.label(),
                        mismatches.len(),
                        x.left,
                        x.right,
                        x.computed,
                        x.table
                    );
                    println!("  {msg}");
                    failures.push(msg);
                }
            }
        }
    }
    for n in [1, 2, 3] {
        for a in a_values(&k) {
            let m = YdModule::h_class(n, &a).unwrap();
            let ai = a.inv().unwrap();
            let expected = Matrix::from_rows(vec![vec![a.clone(), ai.clone()], vec![ai, a.clone()]]);
            if m.diagonal_type().unwrap() != Some(expected) {
                failures.push(format!("{}: wrong braiding matrix", m.label()));
            }
        }
    }
    let ones = Matrix::from_rows(vec![vec![k.one(), k.one()], vec![k.one(), k.one()]]);
    for c in simple_modules(&k.zero()).unwrap() {
        let m = YdModule::one_class(&c.name, c.rep).unwrap();
        if m.diagonal_type().unwrap() != Some(ones.clone()) {
            failures.push(format!("{}: braiding matrix is not all ones", m.label()));
        }
    }
    report(2, failures.is_empty(), &format!("braiding tables, {} failing checks", failures.len()));
    assert!(failures.is_empty(), "{failures:#?}");
}

/// The four spaces of criterion 3 with their labels.
fn nichols_spaces() -> Vec<(&'static str, BraidedSpace)> {
    let k = k();
    let hn = |a: i64| BraidedSpace::from_module(&YdModule::h_class(1, &k.int(a)).unwrap()).unwrap();
    let s2 = simple_modules(&k.int(2))
        .unwrap()
        .into_iter()
        .find(|c| c.name == "Slam+")
        .unwrap();
    let s2 = BraidedSpace::from_module(&YdModule::one_class("Slam+", s2.rep).unwrap()).unwrap();
    vec![("MHn(1,1)", hn(1)), ("MHn(1,-1)", hn(-1)), ("MHn(1,2)", hn(2)), ("MOne(S2+)", s2)]
}

#[test]
fn criterion_3_nichols_dimensions() {
    let mut failures = Vec::new();
    for (label, space) in nichols_spaces() {
        let start = Instant::now();
        let dims = space.graded_dims(NICHOLS_DEGREE).unwrap();
        let elapsed = start.elapsed();
        let fit = growth_fit(&dims).unwrap();
        println!("  {label}: {:?} {fit:?} ({elapsed:.2?})", dims.dims);
        if elapsed > NICHOLS_BUDGET {
            failures.push(format!("{label}: took {elapsed:?}"));
        }
        let ok = match label {
            "MHn(1,1)" => dims.dims == [1, 2, 3, 4, 5, 6, 7] && fit == GrowthFit::PolynomialDegree(2),
            "MHn(1,-1)" => dims.dims == [1, 2, 1, 0, 0, 0, 0] && matches!(fit, GrowthFit::TerminatesAt(_)),
            "MHn(1,2)" => dims.dims[2] == 4 && (0..=NICHOLS_DEGREE).any(|n| dims.dims[n] > n + 1),
            _ => dims.dims.iter().all(|&d| d == 1) && fit == GrowthFit::PolynomialDegree(1),
        };
        if !ok {
            failures.push(format!("{label}: {:?} {fit:?}", dims.dims));
        }
    }
    report(3, failures.is_empty(), &format!("Nichols dimensions {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
}

/// `h^n` in `A_lambda` as `(c_1, c_h)`, from `h^(n+1) = lambda h^n - h^(n-1)`
/// run forwards or backwards from `h^0 = 1`, `h^1 = h`.
fn h_power(lambda: &Scalar, n: i64) -> (Scalar, Scalar) {
    let k = lambda.field();
    let mut lo = (k.one(), k.zero());
    let mut hi = (k.zero(), k.one());
    if n >= 0 {
        for _ in 0..n {
            let next = (&(lambda * &hi.0) - &lo.0, &(lambda * &hi.1) - &lo.1);
            lo = hi;
            hi = next;
        }
        lo
    } else {
        for _ in 0..(-n) {
            let prev = (&(lambda * &lo.0) - &hi.0, &(lambda * &lo.1) - &hi.1);
            hi = lo;
            lo = prev;
        }
        lo
    }
}

fn random_scalar(rng: &mut ChaCha8Rng, k: &Arc<CyclotomicField>) -> Scalar {
    let mut s = k.zero();
    for e in 0..k.degree() as i64 {
        let c = k.frac(rng.gen_range(-4..=4), rng.gen_range(1..=4));
        s = &s + &(&c * &k.zeta_pow(e));
    }
    s
}

#[test]
fn criterion_4_alambda() {
    let k = k();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    let lambdas = [k.zero(), k.int(2), k.int(-2), k.int(3), k.parse("z^4").unwrap()];
    for lambda in &lambdas {
        let letters = [
            (GroupElement::g(), ALambdaElement::g(lambda)),
            (GroupElement::h(), ALambdaElement::h(lambda)),
            (GroupElement::h_pow(-1), ALambdaElement::h_inv(lambda)),
        ];
        for _ in 0..ALAMBDA_WORDS {
            let mut x = GroupElement::identity();
            let mut p = ALambdaElement::one(lambda);
            for _ in 0..rng.gen_range(1..=10) {
                let (gx, ax) = &letters[rng.gen_range(0..3)];
                x = x.multiply(gx);
                p = p.multiply(ax).unwrap();
            }
            let n: i64 = x.exponent().try_into().unwrap();
            let (c1, ch) = h_power(lambda, n);
            let z = k.zero();
            let expected = if x.is_reflection() {
                ALambdaElement::new(lambda, [z.clone(), c1, z, ch])
            } else {
                ALambdaElement::new(lambda, [c1, z.clone(), ch, z])
            };
            if p != expected {
                failures.push(format!("lambda={lambda}: {x} reduces to {p}, expected {expected}"));
                break;
            }
        }
        let (e1, e2) = idempotent_pair(lambda).unwrap();
        let one = ALambdaElement::one(lambda);
        if e1.multiply(&e1).unwrap() != e1
            || !e1.multiply(&e2).unwrap().is_zero()
            || e1.add(&e2).unwrap() != one
        {
            failures.push(format!("lambda={lambda}: idempotents"));
        }
        for sign in [Sign::Plus, Sign::Minus] {
            for c in [CornerData::right(lambda, sign).unwrap(), CornerData::left(lambda, sign).unwrap()] {
                let r = radical_line(&c, lambda).unwrap();
                if !r.multiply(&r).unwrap().is_zero() {
                    failures.push(format!("lambda={lambda}: r^2 != 0"));
                }
            }
        }
    }
    for _ in 0..ALAMBDA_TRIPLES {
        let (x1, x2, lambda) = (
            random_scalar(&mut rng, &k),
            random_scalar(&mut rng, &k),
            random_scalar(&mut rng, &k),
        );
        for n in 1..=5 {
            for sign in [Sign::Plus, Sign::Minus] {
                if !corner_power_identity(&x1, &x2, &lambda, n, sign).unwrap() {
                    failures.push(format!("corner power x1={x1} x2={x2} lambda={lambda} n={n}"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > ALAMBDA_BUDGET {
        failures.push(format!("took {elapsed:?}"));
    }
    report(4, failures.is_empty(), &format!("A_lambda suite ({elapsed:.2?}) {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_5_simple_modules() {
    let k = k();
    let mut failures = Vec::new();
    for lambda in [k.zero(), k.int(2), k.int(-2)] {
        for c in simple_modules(&lambda).unwrap() {
            let ok = module_axiom_check(&c.rep).passed() && is_irreducible(&c.rep).unwrap();
            println!("  lambda={lambda} {}: axioms and irreducibility {}", c.name, ok);
            if !ok {
                failures.push(format!("lambda={lambda} {}", c.name));
            }
        }
    }
    for c in simple_modules(&k.int(3)).unwrap() {
        match module_axiom_check(&c.rep) {
            AxiomCheck::Fail { violated: Relation::Conjugation, witness } => {
                println!("  lambda=3 {}: fails g h g = h^-1 ({witness})", c.name)
            }
            other => failures.push(format!("lambda=3 {}: {other:?}", c.name)),
        }
    }
    let s0 = simple_modules(&k.zero()).unwrap();
    let first = rep_iso_check(&s0[0].rep, &s0[1].rep).unwrap();
    let second = rep_iso_check(&s0[0].rep, &s0[1].rep).unwrap();
    println!("  S0+ ~ S0-: {first}");
    if first != second {
        failures.push("isomorphism verdict not deterministic".into());
    }
    report(5, failures.is_empty(), &format!("simple modules, S0+ ~ S0- = {first} {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
}

fn classify_json() -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_dinf"))
        .args(["classify", "--all", "--format", "json"])
        .output()
        .expect("run dinf");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn criterion_6_theorem_reproduction() {
    let mut failures = Vec::new();
    let first = classify_json();
    let second = classify_json();
    if first != second {
        failures.push("classify output differs between runs".to_string());
    }
    let instance: serde_json::Value = serde_json::from_str(&first).unwrap();
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    if let Err(errors) = compiled.validate(&instance) {
        for e in errors {
            failures.push(format!("schema: {e} at {}", e.instance_path));
        }
    }

    let report = theorem_table(&ParamGrid::default()).unwrap();
    if report.to_json().trim_end() != first.trim_end() {
        failures.push("library and CLI reports differ".into());
    }
    let t = &report.theorem_comparison;
    if t.matched != [true; 5] {
        failures.push(format!("matched {:?}", t.matched));
    }
    if !t.unlisted_finite.is_empty() || !t.unexpected_finite.is_empty() {
        failures.push(format!("extra finite: {:?} {:?}", t.unlisted_finite, t.unexpected_finite));
    }
    let k = k();
    for r in &report.families {
        let expect_infinite = match r.family.as_str() {
            "MG" | "MGh" => true,
            "MHn" => {
                let a = k.parse(&r.params["a"]).unwrap();
                !(&a * &a).is_one()
            }
            _ => false,
        };
        if expect_infinite != (r.verdict == Gk::Infinite) {
            failures.push(format!("{} {:?}: {}", r.family, r.params, r.verdict));
        }
    }
    for a in &t.annotations {
        println!("  note: {a}");
    }
    report_line(6, &failures);
    assert!(failures.is_empty(), "{failures:?}");
}

fn report_line(n: u32, failures: &[String]) {
    report(n, failures.is_empty(), &format!("{failures:?}"));
}

fn float_rank(m: &Matrix) -> usize {
    let rows = m.to_complex();
    let dm = DMatrix::<Complex64>::from_fn(m.rows(), m.cols(), |i, j| rows[i][j]);
    let sv = dm.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > SVD_TOLERANCE * max.max(1.0)).count()
}

#[test]
fn criterion_7_float_rank_oracle() {
    let mut failures = Vec::new();
    let mut compared = 0;
    for (label, space) in nichols_spaces() {
        for n in 2..=NICHOLS_DEGREE {
            let m = space.quantum_symmetrizer(n).unwrap();
            let (exact, float) = (m.rank(), float_rank(&m));
            compared += 1;
            if exact != float {
                failures.push(format!("{label} degree {n}: exact {exact}, float {float}"));
            }
        }
    }
    report(7, failures.is_empty(), &format!("{compared} symmetrizers, exact rank = SVD rank {failures:?}"));
    assert!(failures.is_empty(), "{failures:?}");
}
