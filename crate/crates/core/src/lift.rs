//! The bridge from Pauli polynomials on `n` qubits to Boolean polynomials on
//! `{±1}^{3n}`.
//!
//! A sign vector `ε = (ε^{(1)}, ε^{(2)}, ε^{(3)}) ∈ {±1}^{3n}` selects the
//! product state `ρ(ε) = ρ_1 ⊗ … ⊗ ρ_n` with
//! `ρ_j = (1/3) Σ_κ |e^κ_{ε^{(κ)}_j}⟩⟨e^κ_{ε^{(κ)}_j}|`, and for every observable
//! `tr[A ρ(ε)] = f_A(ε)` where `f_A` carries `3^{-|s|} Â_s` on the subset
//! `q(s)`. Coordinate `ε^{(κ)}_j` lives at flat index `(κ−1)·n + j`
//! (0-based); printed subsets are 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::pauli::{DenseMatrix, PauliIndex, PauliPolynomial, DEFAULT_DENSE_LIMIT};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A subset of `[m]`, stored as sorted 0-based indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    /// Builds a subset from 1-based indices as printed.
    pub fn from_one_based(indices: impl IntoIterator<Item = usize>) -> Self {
        Self::new(indices.into_iter().map(|i| {
            assert!(i >= 1, "1-based index must be positive");
            i - 1
        }))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `χ_S(x) = Π_{j∈S} x_j`.
    pub fn character(&self, x: &[i8]) -> i8 {
        self.0.iter().fold(1i8, |acc, &j| acc * x[j])
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subset{self}")
    }
}

/// A point `ε ∈ {±1}^{3n}` addressing the product state `ρ(ε)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: usize,
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(n: usize, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != 3 * n {
            return Err(Error::LengthMismatch {
                expected: 3 * n,
                got: signs.len(),
            });
        }
        if let Some(bad) = signs.iter().find(|&&v| v != 1 && v != -1) {
            return Err(Error::InvalidArgument(format!("sign entries must be ±1, got {bad}")));
        }
        Ok(Self { n, signs })
    }

    pub fn all_plus(n: usize) -> Self {
        Self { n, signs: vec![1; 3 * n] }
    }

    /// The point whose flat coordinate `j` is `−1` exactly when bit `j` of
    /// `mask` is set. Requires `3n ≤ 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(3 * n <= 64, "mask enumeration needs 3n <= 64");
        let signs = (0..3 * n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
        Self { n, signs }
    }

    /// Every point of `{±1}^{3n}` in mask order.
    pub fn enumerate(n: usize) -> impl Iterator<Item = SignVector> {
        assert!(3 * n < 64, "exhaustive enumeration needs 3n < 64");
        (0..1u64 << (3 * n)).map(move |mask| Self::from_mask(n, mask))
    }

    /// A uniformly random point.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let signs = (0..3 * n).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
        Self { n, signs }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.signs
    }

    /// `ε^{(κ)}_site` for `κ ∈ {1,2,3}` and a 0-based site.
    pub fn get(&self, kappa: u8, site: usize) -> i8 {
        assert!((1..=3).contains(&kappa), "κ must be 1, 2 or 3");
        self.signs[(kappa as usize - 1) * self.n + site]
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, &v) in self.signs.iter().enumerate() {
            if j > 0 && j % self.n == 0 {
                write!(f, "|")?;
            }
            write!(f, "{}", if v > 0 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

/// Parses three `|`-separated blocks of `+`/`-` (the Unicode minus is also
/// accepted).
impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks: Vec<&str> = s.trim().split('|').collect();
        if blocks.len() != 3 {
            return Err(Error::InvalidArgument(format!("expected three `|`-separated blocks in {s:?}")));
        }
        let n = blocks[0].chars().count();
        let mut signs = Vec::with_capacity(3 * n);
        for block in &blocks {
            if block.chars().count() != n {
                return Err(Error::InvalidArgument(format!("sign blocks of unequal length in {s:?}")));
            }
            for ch in block.chars() {
                signs.push(match ch {
                    '+' => 1,
                    '-' | '\u{2212}' => -1,
                    other => return Err(Error::InvalidArgument(format!("invalid sign {other:?}"))),
                });
            }
        }
        if n == 0 {
            return Err(Error::InvalidArgument("empty sign vector".into()));
        }
        Self::new(n, signs)
    }
}

/// A sparse Walsh expansion `f = Σ_S f̂(S) χ_S` on `{±1}^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct BooleanPolynomial {
    m: usize,
    terms: BTreeMap<Subset, Complex64>,
}

impl BooleanPolynomial {
    pub fn zero(m: usize) -> Self {
        Self { m, terms: BTreeMap::new() }
    }

    pub fn constant(m: usize, c: Complex64) -> Self {
        let mut f = Self::zero(m);
        f.insert_unchecked(Subset::empty(), c);
        f
    }

    pub fn from_terms<I>(m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, Complex64)>,
    {
        let mut f = Self::zero(m);
        for (s, c) in terms {
            f.add_term(s, c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, subset: Subset, coefficient: Complex64) -> Result<()> {
        if let Some(&last) = subset.indices().last() {
            if last >= self.m {
                return Err(Error::InvalidArgument(format!("subset {subset} exceeds cube dimension {}", self.m)));
            }
        }
        self.insert_unchecked(subset, coefficient);
        Ok(())
    }

    fn insert_unchecked(&mut self, subset: Subset, coefficient: Complex64) {
        let entry = self.terms.entry(subset).or_insert(ZERO);
        *entry += coefficient;
        if *entry == ZERO {
            self.terms.retain(|_, c| *c != ZERO);
        }
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Subset, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, subset: &Subset) -> Complex64 {
        self.terms.get(subset).copied().unwrap_or(ZERO)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Subset::len).max().unwrap_or(0)
    }

    /// True when only the empty-set coefficient is present (or none).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Subset::is_empty)
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        let mut f = Self::zero(self.m);
        for (s, c) in &self.terms {
            f.insert_unchecked(s.clone(), c * factor);
        }
        f
    }

    /// `f(x) = Σ_S f̂(S) Π_{j∈S} x_j` at a point of `{±1}^m`.
    pub fn eval(&self, x: &[i8]) -> Result<Complex64> {
        if x.len() != self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                got: x.len(),
            });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &[i8]) -> Complex64 {
        self.terms
            .iter()
            .map(|(s, c)| if s.character(x) > 0 { *c } else { -c })
            .sum()
    }

    pub fn eval_signs(&self, eps: &SignVector) -> Result<Complex64> {
        self.eval(eps.as_slice())
    }
}

/// Unit eigenvectors `e^κ_ε` of `σ_κ` for `κ ∈ {1,2,3}`, `ε ∈ {±1}`:
/// `e^1_± = (1, ±1)/√2`, `e^2_± = (1, ±i)/√2`, `e^3_+ = (1, 0)`, `e^3_− = (0, 1)`.
#[derive(Clone, Debug)]
pub struct EigenvectorTable {
    vectors: [[[Complex64; 2]; 2]; 3],
}

/// One row of `⟨σ_j e^k_ε, e^k_ε⟩`.
#[derive(Clone, Copy, Debug)]
pub struct OverlapEntry {
    pub j: u8,
    pub k: u8,
    pub eps: i8,
    pub value: Complex64,
}

impl EigenvectorTable {
    pub fn standard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let r = |x: f64| Complex64::new(x, 0.0);
        let i = Complex64::new(0.0, h);
        Self {
            vectors: [
                [[r(h), r(h)], [r(h), r(-h)]],
                [[r(h), i], [r(h), -i]],
                [[r(1.0), ZERO], [ZERO, r(1.0)]],
            ],
        }
    }

    pub fn get(&self, kappa: u8, eps: i8) -> [Complex64; 2] {
        assert!((1..=3).contains(&kappa), "κ must be 1, 2 or 3");
        self.vectors[kappa as usize - 1][usize::from(eps < 0)]
    }

    /// Checks `σ_κ e^κ_ε = ε e^κ_ε` and `‖e^κ_ε‖ = 1` entrywise within `tol`.
    pub fn verify(&self, tol: f64) -> Result<()> {
        for kappa in 1..=3u8 {
            let sigma = crate::pauli::pauli_matrix(kappa)?;
            for eps in [1i8, -1] {
                let e = self.get(kappa, eps);
                let norm_sq: f64 = e.iter().map(|z| z.norm_sqr()).sum();
                let image = apply(&sigma, &e);
                let defect = (0..2).map(|t| (image[t] - e[t] * f64::from(eps)).norm()).fold(0.0, f64::max);
                if (norm_sq - 1.0).abs() > tol || defect > tol {
                    return Err(Error::InvalidArgument(format!(
                        "eigenvector e^{kappa}_{eps:+} fails: |‖e‖²−1| = {:e}, eigen defect {defect:e}",
                        (norm_sq - 1.0).abs()
                    )));
                }
            }
        }
        Ok(())
    }

    /// All 18 overlaps `⟨σ_j e^k_ε, e^k_ε⟩` (inner product conjugate-linear
    /// in the first slot).
    pub fn overlap_table(&self) -> Vec<OverlapEntry> {
        let mut out = Vec::with_capacity(18);
        for j in 1..=3u8 {
            let sigma = crate::pauli::pauli_matrix(j).expect("valid symbol");
            for k in 1..=3u8 {
                for eps in [1i8, -1] {
                    let e = self.get(k, eps);
                    let image = apply(&sigma, &e);
                    let value = image[0].conj() * e[0] + image[1].conj() * e[1];
                    out.push(OverlapEntry { j, k, eps, value });
                }
            }
        }
        out
    }

    /// `|e^κ_ε⟩⟨e^κ_ε|` as a 2×2 matrix.
    pub fn projector(&self, kappa: u8, eps: i8) -> DenseMatrix {
        let e = self.get(kappa, eps);
        let entries = vec![e[0] * e[0].conj(), e[0] * e[1].conj(), e[1] * e[0].conj(), e[1] * e[1].conj()];
        DenseMatrix::from_row_major(2, entries).expect("2x2")
    }
}

fn apply(m: &DenseMatrix, v: &[Complex64; 2]) -> [Complex64; 2] {
    [
        m.get(0, 0) * v[0] + m.get(0, 1) * v[1],
        m.get(1, 0) * v[0] + m.get(1, 1) * v[1],
    ]
}

/// `q(s) = {(κ_j − 1)·n + i_j}` over the non-identity sites of `s`.
pub fn index_q(s: &PauliIndex) -> Subset {
    let n = s.qubits();
    Subset::new(s.support().map(|(site, kappa)| (kappa as usize - 1) * n + site))
}

/// Inverse of [`index_q`] on its image; `None` when two elements of the
/// subset claim the same site or an element is outside `[3n]`.
pub fn index_p(subset: &Subset, n: usize) -> Option<PauliIndex> {
    let mut symbols = vec![0u8; n];
    for &flat in subset.indices() {
        if flat >= 3 * n {
            return None;
        }
        let (kappa, site) = (flat / n + 1, flat % n);
        if symbols[site] != 0 {
            return None;
        }
        symbols[site] = kappa as u8;
    }
    Some(PauliIndex::from_symbols(&symbols).expect("symbols in range"))
}

/// The Boolean polynomial `f_A` on `{±1}^{3n}` with `f̂_A(q(s)) = 3^{-|s|} Â_s`.
pub fn lift(a: &PauliPolynomial) -> BooleanPolynomial {
    let mut f = BooleanPolynomial::zero(3 * a.qubits());
    for (s, c) in a.terms() {
        let scale = 3f64.powi(s.weight() as i32);
        f.insert_unchecked(index_q(s), c / scale);
    }
    f
}

/// Recovers `A = Σ_S 3^{|S|} f̂(S) σ_{p(S)}` from a lift on `{±1}^{3n}`.
pub fn unlift(f: &BooleanPolynomial) -> Result<PauliPolynomial> {
    if f.dimension() % 3 != 0 {
        return Err(Error::InvalidArgument(format!(
            "cube dimension {} is not a multiple of 3",
            f.dimension()
        )));
    }
    let n = f.dimension() / 3;
    let mut a = PauliPolynomial::zero(n);
    for (subset, c) in f.terms() {
        let s = index_p(subset, n).ok_or_else(|| Error::NotInImage(subset.to_string()))?;
        a.add_term(s, c * 3f64.powi(subset.len() as i32))?;
    }
    Ok(a)
}

/// `tr[A ρ(ε)] = Σ_s Â_s 3^{-|s|} Π_{j: s_j≠0} ε^{(s_j)}_j`, without building `ρ`.
pub fn expectation(a: &PauliPolynomial, eps: &SignVector) -> Result<Complex64> {
    if eps.qubits() != a.qubits() {
        return Err(Error::QubitMismatch {
            left: a.qubits(),
            right: eps.qubits(),
        });
    }
    Ok(a.terms()
        .map(|(s, c)| {
            let mut sign = 1i8;
            let mut weight = 0;
            for (site, kappa) in s.support() {
                sign *= eps.get(kappa, site);
                weight += 1;
            }
            let v = c / 3f64.powi(weight);
            if sign > 0 {
                v
            } else {
                -v
            }
        })
        .sum())
}

/// Dense `ρ(ε) = ρ_1 ⊗ … ⊗ ρ_n`; a test oracle for [`expectation`].
pub fn product_state(eps: &SignVector) -> Result<DenseMatrix> {
    let n = eps.qubits();
    if n > DEFAULT_DENSE_LIMIT {
        return Err(Error::Capacity {
            n,
            limit: DEFAULT_DENSE_LIMIT,
        });
    }
    let table = EigenvectorTable::standard();
    let third = Complex64::new(1.0 / 3.0, 0.0);
    let mut rho = DenseMatrix::identity(1)?;
    for site in 0..n {
        let mut local = DenseMatrix::zeros(2)?;
        for kappa in 1..=3u8 {
            local = &local + &table.projector(kappa, eps.get(kappa, site));
        }
        rho = rho.kron(&local.scale(third));
    }
    Ok(rho)
}

/// Embeds `f` on `{±1}^m` into the diagonal algebra on `m` qubits:
/// `χ_S ↦ σ_3` on the sites of `S`.
pub fn diagonal_embedding(f: &BooleanPolynomial) -> PauliPolynomial {
    let m = f.dimension();
    let mut a = PauliPolynomial::zero(m);
    for (subset, c) in f.terms() {
        let sites: Vec<(usize, u8)> = subset.indices().iter().map(|&j| (j, 3)).collect();
        let s = PauliIndex::from_sites(m, &sites).expect("subset within dimension");
        a.add_term(s, *c).expect("same qubit count");
    }
    a
}

/// Inverse of [`diagonal_embedding`]; fails on any term outside `{0,3}^n`.
pub fn diagonal_restriction(a: &PauliPolynomial) -> Result<BooleanPolynomial> {
    let mut f = BooleanPolynomial::zero(a.qubits());
    for (s, c) in a.terms() {
        if s.symbols().any(|k| k == 1 || k == 2) {
            return Err(Error::InvalidArgument(format!("term {s} is not diagonal")));
        }
        f.insert_unchecked(Subset::new(s.support().map(|(site, _)| site)), *c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn word(s: &str) -> PauliIndex {
        s.parse().unwrap()
    }

    #[test]
    fn index_q_examples() {
        assert_eq!(index_q(&word("IYI")), Subset::from_one_based([5]));
        assert_eq!(index_q(&word("Z")), Subset::from_one_based([3]));
        assert_eq!(index_q(&word("III")), Subset::empty());
        assert_eq!(index_q(&word("XZ")), Subset::from_one_based([1, 6]));
    }

    #[test]
    fn index_p_examples() {
        assert_eq!(index_p(&Subset::from_one_based([5]), 3), Some(word("IYI")));
        assert_eq!(index_p(&Subset::from_one_based([1, 2]), 1), None);
        assert_eq!(index_p(&Subset::empty(), 2), Some(word("II")));
        assert_eq!(index_p(&Subset::from_one_based([7]), 2), None);
    }

    #[test]
    fn p_inverts_q_exhaustively() {
        for n in 1..=4usize {
            for code in 0..4usize.pow(n as u32) {
                let symbols: Vec<u8> = (0..n).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
                let s = PauliIndex::from_symbols(&symbols).unwrap();
                if s.weight() > 3 {
                    continue;
                }
                let q = index_q(&s);
                assert_eq!(q.len(), s.weight());
                assert_eq!(index_p(&q, n), Some(s));
            }
        }
    }

    #[test]
    fn lift_examples() {
        let y = PauliPolynomial::monomial(word("Y"), c(1.0));
        let f = lift(&y);
        assert_eq!(f.dimension(), 3);
        assert_eq!(f.coefficient(&Subset::from_one_based([2])), c(1.0 / 3.0));

        let id = PauliPolynomial::identity(2).scale_real(2.5);
        assert_eq!(lift(&id).coefficient(&Subset::empty()), c(2.5));

        let xz = PauliPolynomial::monomial(word("XZ"), c(1.0));
        assert_eq!(lift(&xz).coefficient(&Subset::from_one_based([1, 6])), c(1.0 / 9.0));
        assert_eq!(lift(&xz).degree(), 2);
    }

    #[test]
    fn unlift_examples() {
        let f = BooleanPolynomial::from_terms(3, [(Subset::from_one_based([2]), c(1.0 / 3.0))]).unwrap();
        assert_eq!(unlift(&f).unwrap(), PauliPolynomial::monomial(word("Y"), c(1.0)));
        assert!(unlift(&BooleanPolynomial::zero(6)).unwrap().is_zero());

        let bad = BooleanPolynomial::from_terms(3, [(Subset::from_one_based([1, 2]), c(1.0))]).unwrap();
        match unlift(&bad) {
            Err(Error::NotInImage(s)) => assert_eq!(s, "{1,2}"),
            other => panic!("expected NotInImage, got {other:?}"),
        }
        assert!(unlift(&BooleanPolynomial::zero(4)).is_err());
    }

    #[test]
    fn eval_examples() {
        let chi = BooleanPolynomial::from_terms(4, [(Subset::from_one_based([1, 2]), c(1.0))]).unwrap();
        assert_eq!(chi.eval(&[-1, -1, 1, -1]).unwrap(), c(1.0));
        assert_eq!(chi.eval(&[-1, 1, 1, -1]).unwrap(), c(-1.0));
        let k = BooleanPolynomial::constant(2, Complex64::new(0.5, -2.0));
        for x in [[1, 1], [1, -1], [-1, 1], [-1, -1]] {
            assert_eq!(k.eval(&x).unwrap(), Complex64::new(0.5, -2.0));
        }
        assert!(matches!(chi.eval(&[1, 1]), Err(Error::LengthMismatch { expected: 4, got: 2 })));
    }

    #[test]
    fn eigenvector_table_is_valid() {
        EigenvectorTable::standard().verify(1e-14).unwrap();
    }

    #[test]
    fn overlap_table_is_delta() {
        let table = EigenvectorTable::standard().overlap_table();
        assert_eq!(table.len(), 18);
        for e in table {
            let expected = if e.j == e.k { f64::from(e.eps) } else { 0.0 };
            assert!((e.value - c(expected)).norm() <= 1e-14, "{e:?}");
        }
    }

    #[test]
    fn product_state_single_qubit() {
        for mask in 0..8u64 {
            let eps = SignVector::from_mask(1, mask);
            let rho = product_state(&eps).unwrap();
            assert!((rho.trace() - c(1.0)).norm() < 1e-12);
            for ev in rho.hermitian_eigenvalues() {
                assert!((-1e-12..=1.0 + 1e-12).contains(&ev));
            }
        }
        let plus: SignVector = "+|+|+".parse().unwrap();
        let x = crate::pauli::pauli_matrix(1).unwrap();
        assert!(((&x * &product_state(&plus).unwrap()).trace() - c(1.0 / 3.0)).norm() < 1e-15);
        let last_minus: SignVector = "+|+|-".parse().unwrap();
        let z = crate::pauli::pauli_matrix(3).unwrap();
        assert!(((&z * &product_state(&last_minus).unwrap()).trace() - c(-1.0 / 3.0)).norm() < 1e-15);
    }

    #[test]
    fn expectation_examples() {
        for eps in SignVector::enumerate(2) {
            assert_eq!(expectation(&PauliPolynomial::identity(2), &eps).unwrap(), c(1.0));
        }
        let z = PauliPolynomial::monomial(word("Z"), c(1.0));
        let eps: SignVector = "+|+|-".parse().unwrap();
        assert_eq!(expectation(&z, &eps).unwrap(), c(-1.0 / 3.0));
        assert!(expectation(&z, &SignVector::all_plus(2)).is_err());
    }

    #[test]
    fn sign_vector_text() {
        let eps: SignVector = "++-|-++|+--".parse().unwrap();
        assert_eq!(eps.qubits(), 3);
        assert_eq!(eps.get(1, 2), -1);
        assert_eq!(eps.get(2, 0), -1);
        assert_eq!(eps.get(3, 0), 1);
        assert_eq!(eps.to_string(), "++-|-++|+--");
        assert_eq!("+\u{2212}|++|++".parse::<SignVector>().unwrap().to_string(), "+-|++|++");
        assert!("++|+|++".parse::<SignVector>().is_err());
        assert!("++|++".parse::<SignVector>().is_err());
        assert!(SignVector::new(1, vec![1, 0, 1]).is_err());
    }

    #[test]
    fn diagonal_embedding_round_trip() {
        let f = BooleanPolynomial::from_terms(
            3,
            [(Subset::from_one_based([1, 3]), c(0.5)), (Subset::empty(), c(-1.0))],
        )
        .unwrap();
        let a = diagonal_embedding(&f);
        assert_eq!(a.coefficient(&word("ZIZ")), c(0.5));
        assert_eq!(diagonal_restriction(&a).unwrap(), f);
        assert!(diagonal_restriction(&PauliPolynomial::monomial(word("XI"), c(1.0))).is_err());
    }
}
