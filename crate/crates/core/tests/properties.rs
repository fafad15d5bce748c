use std::sync::Arc;

use proptest::prelude::*;

use dinf_nichols::classify::{classify, Evidence, FamilyInstance};
use dinf_nichols::field::{CyclotomicField, Matrix, Scalar};
use dinf_nichols::group::GroupElement;
use dinf_nichols::nichols::{reduced_word, BraidedSpace, ReducedWordStrategy};
use dinf_nichols::repn::ALambdaElement;
use dinf_nichols::ydmod::{ReflectionRep, YdModule};

fn k() -> Arc<CyclotomicField> {
    CyclotomicField::new(12).unwrap()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-6i64..=6, 1i64..=5), 4).prop_map(|cs| {
        let k = k();
        cs.into_iter().enumerate().fold(k.zero(), |s, (e, (n, d))| {
            &s + &(&k.frac(n, d) * &k.zeta_pow(e as i64))
        })
    })
}

fn element() -> impl Strategy<Value = GroupElement> {
    (any::<bool>(), -20i64..=20).prop_map(|(r, e)| GroupElement::new(r, e))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn alambda_associative(
        x in prop::array::uniform4(scalar()),
        y in prop::array::uniform4(scalar()),
        z in prop::array::uniform4(scalar()),
        lambda in scalar(),
    ) {
        let (x, y, z) = (
            ALambdaElement::new(&lambda, x),
            ALambdaElement::new(&lambda, y),
            ALambdaElement::new(&lambda, z),
        );
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn class_is_conjugation_invariant(x in element(), y in element()) {
        prop_assert_eq!(x.conjugate(&y).conj_class(), y.conj_class());
    }
}

#[test]
fn group_axioms_exhaustive() {
    let elems: Vec<_> = (-20i64..=20)
        .flat_map(|e| [GroupElement::new(false, e), GroupElement::new(true, e)])
        .collect();
    let one = GroupElement::identity();
    let (g, h) = (GroupElement::g(), GroupElement::h());
    assert_eq!(g.multiply(&g), one);
    assert_eq!(g.multiply(&h).multiply(&g), h.inverse());
    for x in &elems {
        assert_eq!(x.multiply(&one), *x);
        assert_eq!(x.multiply(&x.inverse()), one);
        for y in elems.iter().step_by(3) {
            for z in elems.iter().step_by(7) {
                assert_eq!(x.multiply(y).multiply(z), x.multiply(&y.multiply(z)));
            }
        }
    }
}

#[test]
fn coset_reps_hit_distinct_class_elements() {
    for x in [GroupElement::g(), GroupElement::g_h_pow(1)] {
        let class = x.conj_class();
        let base = class.base_point();
        let images: Vec<_> = class.coset_reps().take(50).map(|r| r.conjugate(&base)).collect();
        for (i, a) in images.iter().enumerate() {
            assert!(class.contains(a));
            assert!(!images[..i].contains(a), "{a} repeated");
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn spaces() -> Vec<BraidedSpace> {
    let k = k();
    let mut out = Vec::new();
    for a in [k.int(-1), k.int(2), k.zeta_pow(4)] {
        out.push(BraidedSpace::from_module(&YdModule::h_class(1, &a).unwrap()).unwrap());
    }
    let q = Matrix::from_rows(vec![vec![k.int(-1), k.zeta_pow(1)], vec![k.zeta_pow(2), k.int(3)]]);
    out.push(BraidedSpace::diagonal(&q));
    out
}

fn matrix_sum(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| &a[(i, j)] + &b[(i, j)]).collect())
        .collect();
    Matrix::from_rows(rows)
}

#[test]
fn lift_independent_of_reduced_word() {
    for v in spaces() {
        for n in 1..=4 {
            for p in permutations(n) {
                let l = v.lift_permutation(&p, ReducedWordStrategy::Leftmost).unwrap();
                let r = v.lift_permutation(&p, ReducedWordStrategy::Rightmost).unwrap();
                assert_eq!(l.to_matrix(v.field()), r.to_matrix(v.field()), "{p:?}");
            }
        }
    }
}

#[test]
fn symmetrizer_is_sum_of_lifts() {
    for v in spaces() {
        for n in 1..=4 {
            let mut sum = Matrix::zeros(v.field(), v.dim().pow(n as u32), v.dim().pow(n as u32));
            for p in permutations(n) {
                let word = reduced_word(&p, ReducedWordStrategy::Leftmost).unwrap();
                sum = matrix_sum(&sum, &v.lift_word(&word, n).to_matrix(v.field()));
            }
            assert_eq!(sum, v.quantum_symmetrizer(n).unwrap());
        }
    }
}

#[test]
fn degree_two_symmetrizer_is_one_plus_braiding() {
    for v in spaces() {
        let id = Matrix::identity(v.field(), v.dim() * v.dim());
        let c = v.lift_word(&[1], 2).to_matrix(v.field());
        assert_eq!(v.quantum_symmetrizer(2).unwrap(), matrix_sum(&id, &c));
    }
}

#[test]
fn dims_invariant_under_renumbering() {
    for v in spaces() {
        let dims = v.graded_dims(5).unwrap();
        assert_eq!(v.renumbered(&[1, 0]).graded_dims(5).unwrap(), dims);
    }
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn trivial_braiding_gives_symmetric_algebra() {
    let k = k();
    for d in 1..=2 {
        let q = Matrix::from_rows(vec![vec![k.one(); d]; d]);
        let dims = BraidedSpace::diagonal(&q).graded_dims(5).unwrap();
        for n in 0..=5 {
            assert_eq!(dims.dims[n], binomial(n + d - 1, n), "d={d} n={n}");
        }
    }
}

#[test]
fn verdict_independent_of_n() {
    let k = k();
    for a in [k.one(), k.int(-1), k.int(2), k.zeta_pow(4)] {
        let base = classify(&FamilyInstance::h_class(1, &a).unwrap()).unwrap();
        for n in 2..=5 {
            let v = classify(&FamilyInstance::h_class(n, &a).unwrap()).unwrap();
            assert_eq!((v.gk, v.rule), (base.gk, base.rule), "a={a} n={n}");
        }
    }
}

#[test]
fn infinite_support_evidence_lies_in_class() {
    let k = k();
    for odd in [false, true] {
        for rep in [ReflectionRep::Sign, ReflectionRep::Eps] {
            let f = FamilyInstance::reflection(&k, odd, rep);
            let v = classify(&f).unwrap();
            let Evidence::InfiniteSupport { degrees } = v.evidence else {
                panic!("expected support evidence");
            };
            let class = f.module.support();
            assert!(degrees.len() >= 10);
            for (i, d) in degrees.iter().enumerate() {
                assert!(class.contains(d));
                assert!(!degrees[..i].contains(d));
            }
        }
    }
}
