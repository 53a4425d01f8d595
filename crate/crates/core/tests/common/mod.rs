//! Independent reference computations shared by the integration tests.
//! Nothing here calls the library routine it is used to check.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use qcube::lift::{BooleanPolynomial, SignVector};
use qcube::{PauliIndex, PauliPolynomial};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Textbook Pauli matrices.
pub fn pauli2(kappa: u8) -> DMatrix<Complex64> {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match kappa {
        0 => DMatrix::from_row_slice(2, 2, &[l, o, o, l]),
        1 => DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        2 => DMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        _ => DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
    }
}

pub fn monomial_dense(s: &PauliIndex) -> DMatrix<Complex64> {
    s.symbols().fold(DMatrix::from_element(1, 1, c(1.0, 0.0)), |acc, k| acc.kronecker(&pauli2(k)))
}

/// `Σ_s Â_s σ_s` by explicit Kronecker products.
pub fn dense(a: &PauliPolynomial) -> DMatrix<Complex64> {
    let dim = 1usize << a.qubits();
    a.terms()
        .fold(DMatrix::zeros(dim, dim), |acc, (s, v)| acc + monomial_dense(s) * *v)
}

pub fn from_library(m: &qcube::DenseMatrix) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(m.dim(), m.dim(), m.entries())
}

/// Largest singular value via nalgebra's SVD.
pub fn operator_norm(m: &DMatrix<Complex64>) -> f64 {
    m.clone().singular_values().iter().cloned().fold(0.0, f64::max)
}

/// `(tr|M|^p / dim)^{1/p}` from singular values.
pub fn schatten(m: &DMatrix<Complex64>, p: f64) -> f64 {
    let dim = m.nrows() as f64;
    let sum: f64 = m.clone().singular_values().iter().map(|s| s.powf(p)).sum();
    (sum / dim).powf(1.0 / p)
}

/// `2^{-n} tr(σ_s M)` for every word.
pub fn trace_coefficients(m: &DMatrix<Complex64>, n: usize) -> Vec<(PauliIndex, Complex64)> {
    let dim = (1usize << n) as f64;
    (0..4u64.pow(n as u32))
        .map(|code| {
            let symbols: Vec<u8> = (0..n).map(|j| ((code >> (2 * (n - 1 - j))) & 3) as u8).collect();
            let s = PauliIndex::from_symbols(&symbols).unwrap();
            let v = (monomial_dense(&s) * m).trace() / dim;
            (s, v)
        })
        .collect()
}

/// `Σ_S f̂(S) Π_{j∈S} x_j`, term by term.
pub fn eval(f: &BooleanPolynomial, x: &[i8]) -> Complex64 {
    f.terms()
        .map(|(s, v)| {
            let chi: i32 = s.indices().iter().map(|&j| x[j] as i32).product();
            v * chi as f64
        })
        .sum()
}

/// Every point of `{±1}^m`.
pub fn cube(m: usize) -> impl Iterator<Item = Vec<i8>> {
    (0..1u64 << m).map(move |mask| (0..m).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect())
}

pub fn brute_sup(f: &BooleanPolynomial) -> f64 {
    cube(f.dimension()).map(|x| eval(f, &x).norm()).fold(0.0, f64::max)
}

/// The single-qubit state `(1/3) Σ_κ (I + ε_κ σ_κ)/2` as a matrix.
pub fn product_state(eps: &SignVector) -> DMatrix<Complex64> {
    let n = eps.qubits();
    (0..n).fold(DMatrix::from_element(1, 1, c(1.0, 0.0)), |acc, site| {
        let mut local = pauli2(0) * c(0.5, 0.0);
        for kappa in 1..=3u8 {
            local += pauli2(kappa) * c(eps.get(kappa, site) as f64 / 6.0, 0.0);
        }
        acc.kronecker(&local)
    })
}

/// Random polynomial with complex coefficients on a random subset of the
/// words of weight `≤ d`.
pub fn random_pauli(n: usize, d: usize, hermitian: bool, seed: u64) -> PauliPolynomial {
    let mut r = rng(seed);
    let mut a = PauliPolynomial::zero(n);
    for code in 0..4u64.pow(n as u32) {
        let symbols: Vec<u8> = (0..n).map(|j| ((code >> (2 * j)) & 3) as u8).collect();
        let s = PauliIndex::from_symbols(&symbols).unwrap();
        if s.weight() > d || r.random_bool(0.3) {
            continue;
        }
        let im = if hermitian { 0.0 } else { r.random_range(-1.0..1.0) };
        a.add_term(s, c(r.random_range(-1.0..1.0), im)).unwrap();
    }
    a
}

pub fn random_boolean(m: usize, d: usize, seed: u64) -> BooleanPolynomial {
    let mut r = rng(seed);
    let mut f = BooleanPolynomial::zero(m);
    for mask in 0u64..1 << m {
        if mask.count_ones() as usize > d || r.random_bool(0.4) {
            continue;
        }
        let s = qcube::Subset::new((0..m).filter(|j| mask >> j & 1 == 1));
        f.add_term(s, c(r.random_range(-1.0..1.0), 0.0)).unwrap();
    }
    f
}
