//! Truncated Nichols algebras of finite-dimensional braided spaces.
//!
//! `dim B^n(V)` is the rank of the quantum symmetrizer
//! `sum_{p in S_n} T_p` on `V^(x)n`, where `T_p` composes `c_i = id (x) c (x) id`
//! along a reduced word of `p`. Every finite module built in [`crate::ydmod`]
//! has a monomial braiding (`c(e_i (x) e_j)` is a multiple of a single basis
//! tensor), so lifts are stored as [`MonomialOperator`]s.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::field::{CyclotomicField, FieldError, Matrix, Scalar};
use crate::ydmod::{BasisVector, YdError, YdModule};

pub const DEFAULT_DEGREE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("braid position {position} out of range for a word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("letter {0} is not in the basis")]
    UnknownLetter(BasisVector),
    #[error("c({0} (x) {1}) is not a single basis tensor")]
    NotMonomial(BasisVector, BasisVector),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("Hilbert prefix needs at least 4 entries, got {0}")]
    PrefixTooShort(usize),
    #[error(transparent)]
    Module(#[from] YdError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A finite-dimensional space with a monomial braiding
/// `c(e_i (x) e_j) = q_ij e_k (x) e_l`.
#[derive(Clone, Debug)]
pub struct BraidedSpace {
    field: Arc<CyclotomicField>,
    basis: Vec<BasisVector>,
    table: Vec<Vec<(Scalar, usize, usize)>>,
    degree_cap: usize,
}

impl BraidedSpace {
    /// The braided space underlying a finite-dimensional module.
    pub fn from_module(m: &YdModule) -> Result<Self, NicholsError> {
        let basis = m.finite_basis()?;
        let index = |v: &BasisVector| basis.iter().position(|b| b == v);
        let mut table = Vec::with_capacity(basis.len());
        for &v in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for &w in &basis {
                let (q, l, r) = m
                    .braid(v, w)?
                    .as_monomial()
                    .ok_or(NicholsError::NotMonomial(v, w))?;
                let (k, l) = match (index(&l), index(&r)) {
                    (Some(k), Some(l)) => (k, l),
                    _ => return Err(NicholsError::NotMonomial(v, w)),
                };
                row.push((q, k, l));
            }
            table.push(row);
        }
        Ok(BraidedSpace {
            field: Arc::clone(m.field()),
            basis,
            table,
            degree_cap: DEFAULT_DEGREE_CAP,
        })
    }

    /// Diagonal braiding `c(x_i (x) x_j) = q_ij x_j (x) x_i` on `x_1..x_d`,
    /// labelled `v1, v2` (`d <= 2`) or `a0, a1, ...`.
    pub fn diagonal(q: &Matrix) -> Self {
        assert!(q.is_square(), "braiding matrix must be square");
        let d = q.rows();
        let basis: Vec<BasisVector> = match d {
            1 => vec![BasisVector::V1],
            2 => vec![BasisVector::V1, BasisVector::V2],
            _ => (0..d as u64).map(BasisVector::A).collect(),
        };
        let table = (0..d)
            .map(|i| (0..d).map(|j| (q[(i, j)].clone(), j, i)).collect())
            .collect();
        BraidedSpace {
            field: Arc::clone(q.field()),
            basis,
            table,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn with_degree_cap(mut self, cap: usize) -> Self {
        self.degree_cap = cap;
        self
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// The same space with its basis listed in the order `perm`
    /// (new basis vector `i` is old basis vector `perm[i]`).
    pub fn renumbered(&self, perm: &[usize]) -> Self {
        let d = self.dim();
        let mut inv = vec![0; d];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let table = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let (q, k, l) = &self.table[perm[i]][perm[j]];
                        (q.clone(), inv[*k], inv[*l])
                    })
                    .collect()
            })
            .collect();
        BraidedSpace {
            field: Arc::clone(&self.field),
            basis: perm.iter().map(|&i| self.basis[i]).collect(),
            table,
            degree_cap: self.degree_cap,
        }
    }

    fn check_degree(&self, n: usize) -> Result<(), NicholsError> {
        if n > self.degree_cap {
            Err(NicholsError::DegreeTooLarge {
                degree: n,
                cap: self.degree_cap,
            })
        } else {
            Ok(())
        }
    }

    fn letter_index(&self, v: &BasisVector) -> Result<usize, NicholsError> {
        self.basis
            .iter()
            .position(|b| b == v)
            .ok_or(NicholsError::UnknownLetter(*v))
    }

    fn encode(&self, letters: &[usize]) -> usize {
        letters.iter().fold(0, |acc, &l| acc * self.dim() + l)
    }

    fn decode(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.dim();
            idx /= self.dim();
        }
        out
    }

    /// Applies `c` to letters `i, i+1` (1-based).
    pub fn braid_at(&self, i: usize, w: &Word) -> Result<SignedWord, NicholsError> {
        let n = w.letters.len();
        if i == 0 || i >= n {
            return Err(NicholsError::PositionOutOfRange { position: i, len: n });
        }
        let a = self.letter_index(&w.letters[i - 1])?;
        let b = self.letter_index(&w.letters[i])?;
        let (q, k, l) = &self.table[a][b];
        let mut letters = w.letters.clone();
        letters[i - 1] = self.basis[*k];
        letters[i] = self.basis[*l];
        Ok(SignedWord {
            coeff: q.clone(),
            word: Word { letters },
        })
    }

    /// `c_i` on `V^(x)n`, `i` 1-based.
    fn braid_operator(&self, i: usize, n: usize) -> MonomialOperator {
        let size = self.dim().pow(n as u32);
        let images = (0..size)
            .map(|s| {
                let mut letters = self.decode(s, n);
                let (q, k, l) = &self.table[letters[i - 1]][letters[i]];
                letters[i - 1] = *k;
                letters[i] = *l;
                (q.clone(), self.encode(&letters))
            })
            .collect();
        MonomialOperator { images }
    }

    /// `T_p` for a permutation `p` of `0..n` in one-line notation, composed
    /// along the reduced word chosen by `strategy`.
    pub fn lift_permutation(
        &self,
        p: &[usize],
        strategy: ReducedWordStrategy,
    ) -> Result<MonomialOperator, NicholsError> {
        let n = p.len();
        self.check_degree(n)?;
        let word = reduced_word(p, strategy)?;
        Ok(self.lift_word(&word, n))
    }

    /// `c_{w_1} o c_{w_2} o ... o c_{w_k}` on `V^(x)n`.
    pub fn lift_word(&self, word: &[usize], n: usize) -> MonomialOperator {
        let mut op = MonomialOperator::identity(&self.field, self.dim().pow(n as u32));
        for &i in word {
            op = op.compose(&self.braid_operator(i, n));
        }
        op
    }

    /// The matrix of `sum_{p in S_n} T_p` in the word basis.
    ///
    /// Permutations are generated layer by layer in length: `q = p s_i` with
    /// `l(q) = l(p) + 1` is produced only from `i` = the first descent of `q`,
    /// so every `T_q = T_p o c_i` is built once from a stored `T_p`.
    pub fn quantum_symmetrizer(&self, n: usize) -> Result<Matrix, NicholsError> {
        self.check_degree(n)?;
        let size = self.dim().pow(n as u32);
        let mut acc = vec![self.field.zero(); size * size];
        let gens: Vec<MonomialOperator> = (1..n).map(|i| self.braid_operator(i, n)).collect();
        let mut layer: Vec<(Vec<usize>, MonomialOperator)> =
            vec![((0..n).collect(), MonomialOperator::identity(&self.field, size))];
        while !layer.is_empty() {
            for (_, op) in &layer {
                for (src, (c, tgt)) in op.images.iter().enumerate() {
                    let e = &mut acc[tgt * size + src];
                    *e = &*e + c;
                }
            }
            let gens = &gens;
            let next: Vec<_> = layer
                .par_iter()
                .flat_map_iter(|(p, op)| {
                    (0..n.saturating_sub(1)).filter_map(move |i| {
                        if p[i] > p[i + 1] {
                            return None;
                        }
                        let mut q = p.clone();
                        q.swap(i, i + 1);
                        let first_descent = (0..n - 1).find(|&j| q[j] > q[j + 1]);
                        (first_descent == Some(i)).then(|| (q, op.compose(&gens[i])))
                    })
                })
                .collect();
            layer = next;
        }
        let rows = (0..size)
            .map(|r| acc[r * size..(r + 1) * size].to_vec())
            .collect();
        Ok(Matrix::from_rows(rows))
    }

    /// `dims[n] = rank` of the degree-`n` symmetrizer for `n <= max_degree`.
    pub fn graded_dims(&self, max_degree: usize) -> Result<HilbertPrefix, NicholsError> {
        self.check_degree(max_degree)?;
        let ranks: Vec<usize> = (2..=max_degree)
            .into_par_iter()
            .map(|n| self.quantum_symmetrizer(n).map(|m| m.rank()))
            .collect::<Result<_, _>>()?;
        let mut dims = vec![1, self.dim()];
        dims.truncate(max_degree + 1);
        dims.extend(ranks);
        Ok(HilbertPrefix { dims })
    }
}

/// A word `e_{i_1} (x) ... (x) e_{i_n}` in the letters of a braided space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Word {
    pub letters: Vec<BasisVector>,
}

impl Word {
    pub fn new(letters: Vec<BasisVector>) -> Self {
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedWord {
    pub coeff: Scalar,
    pub word: Word,
}

/// Sends word `s` to `images[s].0 * (word images[s].1)`; coefficients are
/// nonzero whenever the braiding scalars are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOperator {
    images: Vec<(Scalar, usize)>,
}

impl MonomialOperator {
    pub fn identity(field: &Arc<CyclotomicField>, size: usize) -> Self {
        MonomialOperator {
            images: (0..size).map(|s| (field.one(), s)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, source: usize) -> (&Scalar, usize) {
        let (c, t) = &self.images[source];
        (c, *t)
    }

    /// `self o other`.
    pub fn compose(&self, other: &MonomialOperator) -> MonomialOperator {
        MonomialOperator {
            images: other
                .images
                .iter()
                .map(|(c, mid)| {
                    let (d, t) = &self.images[*mid];
                    (c * d, *t)
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self, field: &Arc<CyclotomicField>) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(field, n, n);
        for (s, (c, t)) in self.images.iter().enumerate() {
            m[(*t, s)] = c.clone();
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedWordStrategy {
    /// Repeatedly swap the leftmost descent.
    Leftmost,
    /// Repeatedly swap the rightmost descent.
    Rightmost,
}

/// A reduced word `[i_1, ..., i_k]` (1-based) with `p = s_{i_1} ... s_{i_k}`,
/// where right multiplication by `s_i` swaps positions `i, i+1`.
pub fn reduced_word(p: &[usize], strategy: ReducedWordStrategy) -> Result<Vec<usize>, NicholsError> {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return Err(NicholsError::InvalidPermutation(p.to_vec()));
        }
        seen[x] = true;
    }
    let mut q = p.to_vec();
    let mut word = Vec::new();
    loop {
        let mut descents = (0..n.saturating_sub(1)).filter(|&i| q[i] > q[i + 1]);
        let pick = match strategy {
            ReducedWordStrategy::Leftmost => descents.next(),
            ReducedWordStrategy::Rightmost => descents.last(),
        };
        let Some(i) = pick else { break };
        q.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    Ok(word)
}

/// `dims[n] = dim B^n(V)` for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPrefix {
    pub dims: Vec<usize>,
}

impl HilbertPrefix {
    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (n, d) in self.dims.iter().enumerate() {
            out.push_str(&format!("{n},{d}\n"));
        }
        out
    }
}

/// Growth estimate from a finite prefix. Always an estimate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum GrowthFit {
    PolynomialDegree(usize),
    TerminatesAt(usize),
    SuperPolynomialSuspected,
    Inconclusive,
}

/// Zeros needed at the end of the prefix to call it terminating.
pub const ZERO_TAIL: usize = 3;
/// Ratio threshold above which growth is flagged as super-polynomial.
pub const RATIO_MARGIN: f64 = 0.25;

pub fn growth_fit(p: &HilbertPrefix) -> Result<GrowthFit, NicholsError> {
    let dims = &p.dims;
    let len = dims.len();
    if len < 4 {
        return Err(NicholsError::PrefixTooShort(len));
    }
    let nonzero_end = dims.iter().rposition(|&d| d != 0).map_or(0, |i| i + 1);
    if len - nonzero_end >= ZERO_TAIL {
        return Ok(GrowthFit::TerminatesAt(nonzero_end));
    }
    if nonzero_end < len {
        return Ok(GrowthFit::Inconclusive);
    }

    let cumulative: Vec<i128> = dims
        .iter()
        .scan(0i128, |s, &d| {
            *s += d as i128;
            Some(*s)
        })
        .collect();
    let window = (len.div_ceil(2) + 1).max(4).min(len);
    let mut diffs = cumulative[len - window..].to_vec();
    for d in 0..window - 1 {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.iter().all(|&x| x == 0) {
            return Ok(GrowthFit::PolynomialDegree(d));
        }
        if diffs.len() < 2 {
            break;
        }
    }

    let ratios: Vec<f64> = dims
        .windows(2)
        .map(|w| w[1] as f64 / w[0] as f64)
        .collect();
    if ratios.iter().rev().take(3).all(|&r| r >= 1.0 + RATIO_MARGIN) {
        return Ok(GrowthFit::SuperPolynomialSuspected);
    }
    Ok(GrowthFit::Inconclusive)
}

/// Counts how often each word appears among the images of a [`MonomialOperator`];
/// a lift of a permutation is a bijection on words.
pub fn is_bijective(op: &MonomialOperator) -> bool {
    let mut hits: HashMap<usize, usize> = HashMap::new();
    for (_, t) in &op.images {
        *hits.entry(*t).or_default() += 1;
    }
    hits.len() == op.size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repn::simple_modules;

    fn k() -> Arc<CyclotomicField> {
        CyclotomicField::new(12).unwrap()
    }

    fn hn(a: i64) -> BraidedSpace {
        BraidedSpace::from_module(&YdModule::h_class(1, &k().int(a)).unwrap()).unwrap()
    }

    fn one_class(lambda: i64, name: &str) -> BraidedSpace {
        let c = simple_modules(&k().int(lambda))
            .unwrap()
            .into_iter()
            .find(|c| c.name == name)
            .unwrap();
        BraidedSpace::from_module(&YdModule::one_class(name, c.rep).unwrap()).unwrap()
    }

    use BasisVector::*;

    #[test]
    fn braid_at_examples() {
        let k = k();
        let a = k.int(3);
        let s = BraidedSpace::from_module(&YdModule::h_class(1, &a).unwrap()).unwrap();
        let r = s.braid_at(1, &Word::new(vec![X1, X2])).unwrap();
        assert_eq!(r.coeff, a.inv().unwrap());
        assert_eq!(r.word, Word::new(vec![X2, X1]));
        let s = one_class(0, "S0+");
        let r = s.braid_at(1, &Word::new(vec![V2, V2])).unwrap();
        assert_eq!((r.coeff, r.word), (k.one(), Word::new(vec![V2, V2])));
        assert!(s.braid_at(2, &Word::new(vec![V1, V2])).is_err());
        assert!(s.braid_at(0, &Word::new(vec![V1, V2])).is_err());
    }

    #[test]
    fn lifts() {
        let s = hn(2);
        let id = s.lift_permutation(&[0, 1, 2], ReducedWordStrategy::Leftmost).unwrap();
        assert_eq!(id, MonomialOperator::identity(s.field(), 8));
        let t = s.lift_permutation(&[1, 0], ReducedWordStrategy::Leftmost).unwrap();
        assert_eq!(t, s.braid_operator(1, 2));
        let w0l = s.lift_word(&[1, 2, 1], 3);
        let w0r = s.lift_word(&[2, 1, 2], 3);
        assert_eq!(w0l, w0r);
        assert_eq!(reduced_word(&[2, 1, 0], ReducedWordStrategy::Leftmost).unwrap().len(), 3);
        assert!(reduced_word(&[0, 0], ReducedWordStrategy::Leftmost).is_err());
    }

    #[test]
    fn symmetrizer_examples() {
        let s = hn(1);
        let m = s.quantum_symmetrizer(2).unwrap();
        assert_eq!(m.rank(), 3);
        // id + c kills x1x1, x2x2 and identifies x1x2 with -x2x1
        let s = hn(-1);
        assert_eq!(s.quantum_symmetrizer(2).unwrap().rank(), 1);
        let s = hn(5);
        let k = s.field().clone();
        let id_plus_c = {
            let mut m = s.braid_operator(1, 2).to_matrix(&k);
            for i in 0..4 {
                m[(i, i)] = &m[(i, i)] + &k.one();
            }
            m
        };
        assert_eq!(s.quantum_symmetrizer(2).unwrap(), id_plus_c);
        assert!(matches!(
            s.quantum_symmetrizer(8),
            Err(NicholsError::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn graded_dims_examples() {
        assert_eq!(hn(1).graded_dims(5).unwrap().dims, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(hn(-1).graded_dims(5).unwrap().dims, vec![1, 2, 1, 0, 0, 0]);
        assert_eq!(one_class(2, "Slam+").graded_dims(4).unwrap().dims, vec![1; 5]);
    }

    #[test]
    fn growth_examples() {
        let fit = |d: &[usize]| growth_fit(&HilbertPrefix { dims: d.to_vec() }).unwrap();
        assert_eq!(fit(&[1, 2, 3, 4, 5, 6]), GrowthFit::PolynomialDegree(2));
        assert_eq!(fit(&[1, 2, 1, 0, 0, 0]), GrowthFit::TerminatesAt(3));
        assert_eq!(fit(&[1, 2, 4, 8, 16]), GrowthFit::SuperPolynomialSuspected);
        assert_eq!(fit(&[1, 1, 1, 1, 1]), GrowthFit::PolynomialDegree(1));
        assert_eq!(fit(&[1, 2, 1, 0]), GrowthFit::Inconclusive);
        assert!(growth_fit(&HilbertPrefix { dims: vec![1, 2, 3] }).is_err());
    }

    #[test]
    fn infinite_modules_rejected() {
        let m = YdModule::g_class(&k(), crate::ydmod::ReflectionRep::Sign);
        assert!(matches!(
            BraidedSpace::from_module(&m),
            Err(NicholsError::Module(YdError::InfiniteDimensional(_)))
        ));
    }
}
