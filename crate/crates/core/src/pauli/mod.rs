//! Sparse Pauli polynomial algebra.
//!
//! An observable on `n` qubits is stored by its Fourier expansion
//! `A = Σ_s Â_s σ_s` over Pauli words `s ∈ {0,1,2,3}^n`. Dense matrices are
//! only built on request, for `n` up to [`DEFAULT_DENSE_LIMIT`].

mod dense;
mod text;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_complex::Complex64;

pub use dense::{DenseMatrix, DEFAULT_DENSE_LIMIT};

use crate::error::{Error, Result};

const SITES_PER_WORD: usize = 32;
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The single-qubit Pauli matrix `σ_κ` for `κ ∈ {0,1,2,3}` (identity, X, Y, Z).
pub fn pauli_matrix(kappa: u8) -> Result<DenseMatrix> {
    let (o, l, i) = (ZERO, Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0));
    let entries = match kappa {
        0 => vec![l, o, o, l],
        1 => vec![o, l, l, o],
        2 => vec![o, -i, i, o],
        3 => vec![l, o, o, -l],
        other => return Err(Error::InvalidSymbol(other)),
    };
    DenseMatrix::from_row_major(2, entries)
}

/// The low bit of every two-bit site slot.
const LOW_BITS: u64 = 0x5555_5555_5555_5555;

/// A Pauli word `s ∈ {0,1,2,3}^n`, packed two bits per site.
///
/// Site 0 sits in the most significant bits of the first word, so the
/// derived ordering is lexicographic in the symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliIndex {
    n: usize,
    words: Box<[u64]>,
}

impl PauliIndex {
    /// The all-identity word on `n` qubits.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            words: vec![0u64; n.div_ceil(SITES_PER_WORD)].into_boxed_slice(),
        }
    }

    pub fn from_symbols(symbols: &[u8]) -> Result<Self> {
        let mut index = Self::identity(symbols.len());
        for (site, &kappa) in symbols.iter().enumerate() {
            index.set(site, kappa)?;
        }
        Ok(index)
    }

    /// Word with `kappa` at each listed site and identity elsewhere.
    pub fn from_sites(n: usize, sites: &[(usize, u8)]) -> Result<Self> {
        let mut index = Self::identity(n);
        for &(site, kappa) in sites {
            if site >= n {
                return Err(Error::InvalidArgument(format!("site {site} out of range for {n} qubits")));
            }
            index.set(site, kappa)?;
        }
        Ok(index)
    }

    fn slot(site: usize) -> (usize, u32) {
        (site / SITES_PER_WORD, (2 * (SITES_PER_WORD - 1 - site % SITES_PER_WORD)) as u32)
    }

    pub fn set(&mut self, site: usize, kappa: u8) -> Result<()> {
        if kappa > 3 {
            return Err(Error::InvalidSymbol(kappa));
        }
        assert!(site < self.n, "site {site} out of range for {} qubits", self.n);
        let (w, shift) = Self::slot(site);
        self.words[w] = (self.words[w] & !(0b11 << shift)) | (u64::from(kappa) << shift);
        Ok(())
    }

    pub fn symbol(&self, site: usize) -> u8 {
        assert!(site < self.n, "site {site} out of range for {} qubits", self.n);
        let (w, shift) = Self::slot(site);
        ((self.words[w] >> shift) & 0b11) as u8
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.n).map(|site| self.symbol(site))
    }

    /// Non-identity sites as `(site, κ)` pairs in increasing site order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut occupied = (w | (w >> 1)) & LOW_BITS;
            std::iter::from_fn(move || {
                if occupied == 0 {
                    return None;
                }
                let shift = 63 - occupied.leading_zeros();
                occupied &= !(1 << shift);
                let site = wi * SITES_PER_WORD + SITES_PER_WORD - 1 - shift as usize / 2;
                Some((site, ((w >> shift) & 0b11) as u8))
            })
        })
    }

    /// `|s|`, the number of non-identity sites.
    pub fn weight(&self) -> usize {
        self.words
            .iter()
            .map(|&w| ((w | (w >> 1)) & LOW_BITS).count_ones() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Bit masks over row indices (site 0 = most significant bit) of the
    /// sites carrying X or Y, Y, and Z. Requires `n ≤ 63`.
    fn masks(&self) -> (usize, usize, usize) {
        let (mut flip, mut y, mut z) = (0usize, 0usize, 0usize);
        for (site, kappa) in self.support() {
            let bit = 1usize << (self.n - 1 - site);
            match kappa {
                1 => flip |= bit,
                2 => {
                    flip |= bit;
                    y |= bit;
                }
                _ => z |= bit,
            }
        }
        (flip, y, z)
    }
}

/// Every word on `n` qubits whose weight lies in `weights`, in
/// lexicographic order.
pub fn words_with_weight(n: usize, weights: RangeInclusive<usize>) -> Vec<PauliIndex> {
    fn walk(site: usize, weight: usize, current: &mut PauliIndex, weights: &RangeInclusive<usize>, out: &mut Vec<PauliIndex>) {
        let n = current.qubits();
        if site == n {
            if weights.contains(&weight) {
                out.push(current.clone());
            }
            return;
        }
        // not enough sites left to reach the minimum weight
        if weight + (n - site) < *weights.start() {
            return;
        }
        for kappa in 0..4u8 {
            let next = weight + usize::from(kappa != 0);
            if next > *weights.end() {
                break;
            }
            current.set(site, kappa).expect("valid symbol");
            walk(site + 1, next, current, weights, out);
        }
        current.set(site, 0).expect("valid symbol");
    }
    let mut out = Vec::new();
    if n == 0 {
        if weights.contains(&0) {
            out.push(PauliIndex::identity(0));
        }
        return out;
    }
    walk(0, 0, &mut PauliIndex::identity(n), &weights, &mut out);
    out
}

impl fmt::Debug for PauliIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliIndex({self})")
    }
}

/// A sparse Pauli expansion `Σ_s Â_s σ_s` on a fixed number of qubits.
///
/// Stored coefficients are never exactly zero; nothing is pruned by
/// magnitude, so small-but-nonzero terms keep their degree contribution.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliPolynomial {
    n: usize,
    terms: BTreeMap<PauliIndex, Complex64>,
}

impl PauliPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.terms.insert(PauliIndex::identity(n), Complex64::new(1.0, 0.0));
        p
    }

    pub fn monomial(index: PauliIndex, coefficient: Complex64) -> Self {
        let mut p = Self::zero(index.qubits());
        p.insert_unchecked(index, coefficient);
        p
    }

    /// Collects terms, summing repeated indices.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (PauliIndex, Complex64)>,
    {
        let mut p = Self::zero(n);
        for (index, c) in terms {
            p.add_term(index, c)?;
        }
        Ok(p)
    }

    /// Adds `coefficient · σ_index` in place.
    pub fn add_term(&mut self, index: PauliIndex, coefficient: Complex64) -> Result<()> {
        if index.qubits() != self.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: index.qubits(),
            });
        }
        self.insert_unchecked(index, coefficient);
        Ok(())
    }

    fn insert_unchecked(&mut self, index: PauliIndex, coefficient: Complex64) {
        match self.terms.entry(index) {
            Entry::Vacant(slot) => {
                if coefficient != ZERO {
                    slot.insert(coefficient);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if *slot.get() == ZERO {
                    slot.remove();
                }
            }
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliIndex, &Complex64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &PauliIndex) -> Complex64 {
        self.terms.get(index).copied().unwrap_or(ZERO)
    }

    /// Maximum stored weight; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(PauliIndex::weight).max().unwrap_or(0)
    }

    /// Drops every term of weight above `d`.
    pub fn truncate(&self, d: usize) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| s.weight() <= d)
                .map(|(s, c)| (s.clone(), *c))
                .collect(),
        }
    }

    /// True when every stored coefficient is exactly real, which is
    /// equivalent to the operator being Hermitian.
    pub fn is_hermitian(&self) -> bool {
        self.terms.values().all(|c| c.im == 0.0)
    }

    pub fn is_hermitian_within(&self, tol: f64) -> bool {
        self.terms.values().all(|c| c.im.abs() <= tol)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        if factor == ZERO {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c * factor))
                .filter(|(_, c)| *c != ZERO)
                .collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    fn check_same_qubits(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_qubits(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.insert_unchecked(s.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_qubits(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.insert_unchecked(s.clone(), -c);
        }
        Ok(out)
    }

    /// `Σ_s |Â_s|²`, the squared normalized Schatten-2 norm by Parseval.
    pub fn l2_norm_sq(&self) -> f64 {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// `Σ_s |P̂_s − Q̂_s|²`, computed over the union of supports.
    pub fn l2_distance_sq(&self, other: &Self) -> Result<f64> {
        self.check_same_qubits(other)?;
        let mut total = 0.0;
        for (s, c) in &self.terms {
            total += (c - other.coefficient(s)).norm_sqr();
        }
        for (s, c) in &other.terms {
            if !self.terms.contains_key(s) {
                total += c.norm_sqr();
            }
        }
        Ok(total)
    }

    pub fn to_dense(&self) -> Result<DenseMatrix> {
        self.to_dense_with_limit(DEFAULT_DENSE_LIMIT)
    }

    /// `Σ_s Â_s σ_s` as a `2^n × 2^n` matrix, site 0 being the leftmost
    /// Kronecker factor.
    pub fn to_dense_with_limit(&self, limit: usize) -> Result<DenseMatrix> {
        if self.n > limit || self.n >= usize::BITS as usize / 2 {
            return Err(Error::Capacity { n: self.n, limit });
        }
        let dim = 1usize << self.n;
        let mut m = DenseMatrix::zeros(dim)?;
        let minus_i = Complex64::new(0.0, -1.0);
        for (s, &c) in &self.terms {
            let (flip, y, z) = s.masks();
            let base = c * minus_i.powu(y.count_ones());
            let signed = y | z;
            for row in 0..dim {
                let col = row ^ flip;
                let v = if (row & signed).count_ones() % 2 == 0 { base } else { -base };
                m.set(row, col, m.get(row, col) + v);
            }
        }
        Ok(m)
    }

    /// Fourier coefficients `Â_s = 2^{-n} tr(σ_s M)` of a dense matrix.
    ///
    /// Uses a per-site 2×2 → Pauli transform, `O(n 4^n)`.
    pub fn fourier_coefficients(m: &DenseMatrix) -> Result<Self> {
        let dim = m.dim();
        if !dim.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(dim));
        }
        let n = m.qubits();
        let spread = |mut x: usize| {
            let mut out = 0usize;
            let mut bit = 0;
            while x != 0 {
                out |= (x & 1) << (2 * bit);
                x >>= 1;
                bit += 1;
            }
            out
        };
        let mut data = vec![ZERO; dim * dim];
        for r in 0..dim {
            let rs = spread(r) << 1;
            for c in 0..dim {
                data[rs | spread(c)] = m.get(r, c);
            }
        }
        let half = Complex64::new(0.5, 0.0);
        let half_i = Complex64::new(0.0, 0.5);
        for position in 0..n {
            let stride = 1usize << (2 * position);
            for block in (0..data.len()).step_by(4 * stride) {
                for offset in block..block + stride {
                    let m00 = data[offset];
                    let m01 = data[offset + stride];
                    let m10 = data[offset + 2 * stride];
                    let m11 = data[offset + 3 * stride];
                    data[offset] = (m00 + m11) * half;
                    data[offset + stride] = (m01 + m10) * half;
                    data[offset + 2 * stride] = (m01 - m10) * half_i;
                    data[offset + 3 * stride] = (m00 - m11) * half;
                }
            }
        }
        let mut p = Self::zero(n);
        for (idx, &c) in data.iter().enumerate() {
            if c == ZERO {
                continue;
            }
            let mut s = PauliIndex::identity(n);
            for site in 0..n {
                s.set(site, ((idx >> (2 * (n - 1 - site))) & 0b11) as u8)?;
            }
            p.terms.insert(s, c);
        }
        Ok(p)
    }

    /// Largest singular value of the dense matrix.
    pub fn operator_norm(&self) -> Result<f64> {
        if self.is_zero() {
            return Ok(0.0);
        }
        Ok(self.to_dense()?.operator_norm())
    }

    /// Normalized Schatten-p norm `(2^{-n} tr|A|^p)^{1/p}`; `p = ∞` gives the
    /// operator norm.
    pub fn schatten_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidArgument(format!("Schatten exponent must be >= 1, got {p}")));
        }
        let m = self.to_dense()?;
        if p.is_infinite() {
            return Ok(m.operator_norm());
        }
        let sv = m.singular_values();
        let mean: f64 = sv.iter().map(|s| s.powf(p)).sum::<f64>() / m.dim() as f64;
        Ok(mean.powf(1.0 / p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn word(s: &str) -> PauliIndex {
        s.parse().unwrap()
    }

    #[test]
    fn support_spans_words() {
        let symbols: Vec<u8> = (0..70).map(|j| ((j * 7 + j / 5) % 4) as u8).collect();
        let s = PauliIndex::from_symbols(&symbols).unwrap();
        let expected: Vec<(usize, u8)> = symbols.iter().copied().enumerate().filter(|&(_, k)| k != 0).collect();
        assert_eq!(s.support().collect::<Vec<_>>(), expected);
        assert_eq!(s.weight(), expected.len());
        assert_eq!(PauliIndex::identity(40).support().count(), 0);
    }

    fn poly(n: usize, terms: &[(&str, f64)]) -> PauliPolynomial {
        PauliPolynomial::from_terms(n, terms.iter().map(|(s, v)| (word(s), c(*v, 0.0)))).unwrap()
    }

    /// Explicit Kronecker products of the single-site matrices.
    fn kron_dense(p: &PauliPolynomial) -> DenseMatrix {
        let dim = 1 << p.qubits();
        let mut acc = DenseMatrix::zeros(dim).unwrap();
        for (s, coef) in p.terms() {
            let mut m = pauli_matrix(s.symbol(0)).unwrap();
            for site in 1..p.qubits() {
                m = m.kron(&pauli_matrix(s.symbol(site)).unwrap());
            }
            acc = &acc + &m.scale(*coef);
        }
        acc
    }

    #[test]
    fn pauli_matrices_match_display() {
        let y = pauli_matrix(2).unwrap();
        assert_eq!(y.entries(), &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]);
        let z = pauli_matrix(3).unwrap();
        assert_eq!(z.entries(), &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(pauli_matrix(0).unwrap(), DenseMatrix::identity(2).unwrap());
        assert!(matches!(pauli_matrix(4), Err(Error::InvalidSymbol(4))));
    }

    #[test]
    fn paulis_anticommute() {
        for j in 1..=3u8 {
            for k in 1..=3u8 {
                if j == k {
                    continue;
                }
                let (a, b) = (pauli_matrix(j).unwrap(), pauli_matrix(k).unwrap());
                let anti = &(&a * &b) + &(&b * &a);
                assert!(anti.entries().iter().all(|z| z.norm() == 0.0), "σ{j}σ{k} + σ{k}σ{j} ≠ 0");
            }
        }
    }

    #[test]
    fn packing_spans_word_boundaries() {
        let mut s = PauliIndex::identity(70);
        s.set(0, 1).unwrap();
        s.set(31, 2).unwrap();
        s.set(32, 3).unwrap();
        s.set(69, 1).unwrap();
        assert_eq!(s.weight(), 4);
        assert_eq!(s.symbol(31), 2);
        assert_eq!(s.symbol(32), 3);
        assert_eq!(s.support().collect::<Vec<_>>(), vec![(0, 1), (31, 2), (32, 3), (69, 1)]);
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut words: Vec<PauliIndex> = ["ZI", "IX", "XZ", "II", "XI"].iter().map(|s| word(s)).collect();
        words.sort();
        let shown: Vec<String> = words.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["II", "IX", "XI", "XZ", "ZI"]);
    }

    #[test]
    fn word_enumeration_counts() {
        // Σ_{l ≤ d} 3^l C(n, l)
        assert_eq!(words_with_weight(2, 0..=1).len(), 7);
        assert_eq!(words_with_weight(2, 0..=2).len(), 16);
        assert_eq!(words_with_weight(4, 2..=2).len(), 9 * 6);
        let w = words_with_weight(3, 0..=2);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        assert!(w.iter().all(|s| s.weight() <= 2));
        assert!(words_with_weight(2, 3..=3).is_empty());
    }

    #[test]
    fn dense_examples() {
        assert_eq!(PauliPolynomial::identity(1).to_dense().unwrap(), DenseMatrix::identity(2).unwrap());

        let xx = poly(2, &[("XX", 1.0)]).to_dense().unwrap();
        for r in 0..4 {
            for col in 0..4 {
                let expected = if r + col == 3 { 1.0 } else { 0.0 };
                assert_eq!(xx.get(r, col), c(expected, 0.0));
            }
        }

        let xz = poly(1, &[("X", 1.0), ("Z", 1.0)]).to_dense().unwrap();
        assert_eq!(xz.entries(), &[c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)]);
    }

    #[test]
    fn dense_matches_kronecker_oracle() {
        let p = PauliPolynomial::from_terms(
            3,
            [
                (word("XYZ"), c(0.5, -0.25)),
                (word("YIY"), c(-1.5, 0.0)),
                (word("IZX"), c(0.0, 2.0)),
                (word("III"), c(0.75, 0.0)),
            ],
        )
        .unwrap();
        assert!(p.to_dense().unwrap().max_abs_diff(&kron_dense(&p)) == 0.0);
    }

    #[test]
    fn capacity_error_above_limit() {
        let p = PauliPolynomial::identity(11);
        assert!(matches!(p.to_dense(), Err(Error::Capacity { n: 11, limit: 10 })));
        assert!(p.to_dense_with_limit(3).is_err());
    }

    #[test]
    fn fourier_examples() {
        let id = PauliPolynomial::fourier_coefficients(&DenseMatrix::identity(4).unwrap()).unwrap();
        assert_eq!(id, PauliPolynomial::identity(2));

        let xz = poly(2, &[("XZ", 1.0)]);
        assert_eq!(PauliPolynomial::fourier_coefficients(&xz.to_dense().unwrap()).unwrap(), xz);

        let y = poly(1, &[("Y", 1.0)]);
        assert_eq!(PauliPolynomial::fourier_coefficients(&y.to_dense().unwrap()).unwrap(), y);
    }

    #[test]
    fn operator_norm_examples() {
        let xy = poly(2, &[("XY", 1.0)]);
        assert!((xy.operator_norm().unwrap() - 1.0).abs() < 1e-10);
        let xz = poly(1, &[("X", 1.0), ("Z", 1.0)]);
        assert!((xz.operator_norm().unwrap() - 2f64.sqrt()).abs() < 1e-10 * 2f64.sqrt());
        let xyz = poly(1, &[("X", 1.0), ("Y", 1.0), ("Z", 1.0)]);
        assert!((xyz.operator_norm().unwrap() - 3f64.sqrt()).abs() < 1e-10 * 3f64.sqrt());
        // Non-Hermitian: σ_1 + iσ_2 = 2|0⟩⟨1| has norm 2.
        let raising = PauliPolynomial::from_terms(1, [(word("X"), c(1.0, 0.0)), (word("Y"), c(0.0, 1.0))]).unwrap();
        assert!((raising.operator_norm().unwrap() - 2.0).abs() < 1e-10);
    }

    #[test]
    fn schatten_examples() {
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            assert!((PauliPolynomial::identity(2).schatten_norm(p).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((poly(1, &[("Z", 1.0)]).schatten_norm(2.0).unwrap() - 1.0).abs() < 1e-12);
        let xz = poly(1, &[("X", 1.0), ("Z", 1.0)]);
        assert!((xz.schatten_norm(2.0).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((xz.l2_norm_sq().sqrt() - 2f64.sqrt()).abs() < 1e-12);
        assert!(matches!(xz.schatten_norm(0.5), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn degree_and_truncate() {
        let p = poly(2, &[("XI", 1.0), ("YZ", 1.0)]);
        assert_eq!(p.degree(), 2);
        assert_eq!(p.truncate(1), poly(2, &[("XI", 1.0)]));
        assert!(p.truncate(0).is_zero());
        assert_eq!(PauliPolynomial::zero(3).degree(), 0);
    }

    #[test]
    fn arithmetic_and_distance() {
        let x = poly(1, &[("X", 1.0)]);
        let zero = PauliPolynomial::zero(1);
        assert_eq!(x.l2_distance_sq(&zero).unwrap(), 1.0);
        assert_eq!(x.l2_distance_sq(&x).unwrap(), 0.0);
        assert!(x.sub(&x).unwrap().is_zero());
        assert!(x.scale_real(0.0).is_zero());
        assert_eq!(x.add(&x).unwrap(), poly(1, &[("X", 2.0)]));
        assert!(matches!(x.add(&PauliPolynomial::zero(2)), Err(Error::QubitMismatch { .. })));
        assert!(x.l2_distance_sq(&PauliPolynomial::zero(2)).is_err());
    }

    #[test]
    fn exact_cancellation_prunes_term() {
        let mut p = poly(2, &[("XY", 0.5), ("ZZ", 1.0)]);
        p.add_term(word("XY"), c(-0.5, 0.0)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.degree(), 2);
        // tiny but nonzero coefficients are kept
        p.add_term(word("XI"), c(1e-300, 0.0)).unwrap();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn hermitian_detection() {
        let p = poly(2, &[("XY", 0.5)]);
        assert!(p.is_hermitian());
        assert!(p.to_dense().unwrap().is_hermitian(1e-12));
        let q = p.scale(c(0.0, 1.0));
        assert!(!q.is_hermitian());
        assert!(!q.to_dense().unwrap().is_hermitian(1e-12));
    }
}
