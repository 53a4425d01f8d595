//! Bohnenblust–Hille functionals and observed constants.
//!
//! For a degree-`d` polynomial the left-hand side is the
//! `ℓ_{2d/(d+1)}` norm of its Fourier coefficients; dividing by the sup norm
//! (Boolean case) or the operator norm (Pauli case) gives the observed
//! constant for that instance.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lift::BooleanPolynomial;
use crate::pauli::{words_with_weight, PauliIndex, PauliPolynomial};
use crate::rng;

/// Cube dimensions up to this size get an exact sup norm by enumeration.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// Variables handled by one in-memory Walsh–Hadamard block.
const BLOCK_BITS: usize = 16;

/// The exponent `2d/(d+1)`.
pub fn bh_exponent(d: usize) -> f64 {
    2.0 * d as f64 / (d as f64 + 1.0)
}

/// Default stand-in for the classical constant `BH^{≤d}_{±1}`: `2^d`.
pub fn default_bh_bound(d: usize) -> f64 {
    2f64.powi(d as i32)
}

/// `3^d · bh` bounds the Pauli-side constant in terms of the classical one.
pub fn quantum_bh_bound(d: usize, classical: f64) -> f64 {
    3f64.powi(d as i32) * classical
}

fn check_degree(degree: usize, d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree parameter d must be at least 1".into()));
    }
    if degree > d {
        return Err(Error::DegreeExceeded { degree, d });
    }
    Ok(())
}

fn lp_mass<'a>(coefficients: impl Iterator<Item = &'a Complex64>, d: usize) -> f64 {
    let p = bh_exponent(d);
    let sum: f64 = coefficients.map(|c| c.norm().powf(p)).sum();
    sum.powf(1.0 / p)
}

/// `(Σ_s |Â_s|^{2d/(d+1)})^{(d+1)/(2d)}`.
pub fn bh_lhs_quantum(a: &PauliPolynomial, d: usize) -> Result<f64> {
    check_degree(a.degree(), d)?;
    Ok(lp_mass(a.terms().map(|(_, c)| c), d))
}

/// `(Σ_S |f̂(S)|^{2d/(d+1)})^{(d+1)/(2d)}`.
pub fn bh_lhs_boolean(f: &BooleanPolynomial, d: usize) -> Result<f64> {
    check_degree(f.degree(), d)?;
    Ok(lp_mass(f.terms().map(|(_, c)| c), d))
}

/// Whether a norm was computed exactly or is only a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormMode {
    Exact,
    LowerBound,
}

impl fmt::Display for NormMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormMode::Exact => "exact",
            NormMode::LowerBound => "lower_bound",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SupNorm {
    pub value: f64,
    pub mode: NormMode,
    /// A point attaining `value`.
    pub argmax: Vec<i8>,
}

#[derive(Clone, Debug)]
pub struct SupNormOptions {
    pub exhaustive_limit: usize,
    /// Random starting points in sampling mode.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SupNormOptions {
    fn default() -> Self {
        Self {
            exhaustive_limit: EXHAUSTIVE_LIMIT,
            samples: 100_000,
            seed: 0,
        }
    }
}

pub fn sup_norm_boolean(f: &BooleanPolynomial) -> SupNorm {
    sup_norm_boolean_with(f, &SupNormOptions::default())
}

/// `‖f‖_∞` over `{±1}^m`: exact for `m ≤ exhaustive_limit`, otherwise the
/// best of random sampling plus single-flip ascent, flagged as a lower bound.
pub fn sup_norm_boolean_with(f: &BooleanPolynomial, options: &SupNormOptions) -> SupNorm {
    if f.dimension() <= options.exhaustive_limit {
        exhaustive_sup(f)
    } else {
        sampled_sup(f, options)
    }
}

fn mask_to_point(m: usize, mask: u64) -> Vec<i8> {
    (0..m).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect()
}

/// In-place Walsh–Hadamard transform: afterwards `a[x] = Σ_S a_S (−1)^{|S∩x|}`.
pub(crate) fn walsh_hadamard(a: &mut [Complex64]) {
    let mut len = 1;
    while len < a.len() {
        for block in (0..a.len()).step_by(2 * len) {
            for j in block..block + len {
                let (u, v) = (a[j], a[j + len]);
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
        len <<= 1;
    }
}

/// Splits the variables into a low block transformed in memory and a high
/// block enumerated outright.
fn exhaustive_sup(f: &BooleanPolynomial) -> SupNorm {
    let m = f.dimension();
    let low = m.min(BLOCK_BITS);
    let high = m - low;
    let terms: Vec<(u64, u64, Complex64)> = f
        .terms()
        .map(|(s, c)| {
            let (mut lo, mut hi) = (0u64, 0u64);
            for &j in s.indices() {
                if j < low {
                    lo |= 1 << j;
                } else {
                    hi |= 1 << (j - low);
                }
            }
            (lo, hi, *c)
        })
        .collect();
    let best_in_block = |h: u64| {
        let mut block = vec![Complex64::new(0.0, 0.0); 1 << low];
        for &(lo, hi, c) in &terms {
            if (hi & h).count_ones() % 2 == 0 {
                block[lo as usize] += c;
            } else {
                block[lo as usize] -= c;
            }
        }
        walsh_hadamard(&mut block);
        let mut best = (f64::NEG_INFINITY, 0u64);
        for (x, v) in block.iter().enumerate() {
            let a = v.norm();
            if a > best.0 {
                best = (a, x as u64);
            }
        }
        (best.0, (h << low) | best.1)
    };
    // ties resolve to the smallest mask so the reduction is order independent
    let pick = |a: (f64, u64), b: (f64, u64)| {
        if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
            b
        } else {
            a
        }
    };
    let (value, mask) = if high == 0 {
        best_in_block(0)
    } else {
        (0..1u64 << high)
            .into_par_iter()
            .map(best_in_block)
            .reduce(|| (f64::NEG_INFINITY, u64::MAX), pick)
    };
    SupNorm {
        value,
        mode: NormMode::Exact,
        argmax: mask_to_point(m, mask),
    }
}

fn sampled_sup(f: &BooleanPolynomial, options: &SupNormOptions) -> SupNorm {
    let m = f.dimension();
    let mut rng = rng::stream(options.seed, rng::SEARCH_STREAM);
    let mut best_point: Vec<i8> = vec![1; m];
    let mut best = f.eval_unchecked(&best_point).norm();
    for _ in 0..options.samples {
        let point: Vec<i8> = (0..m).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
        let v = f.eval_unchecked(&point).norm();
        if v > best {
            best = v;
            best_point = point;
        }
    }
    // single-flip ascent from the best sample
    loop {
        let mut improved = false;
        for j in 0..m {
            best_point[j] = -best_point[j];
            let v = f.eval_unchecked(&best_point).norm();
            if v > best {
                best = v;
                improved = true;
            } else {
                best_point[j] = -best_point[j];
            }
        }
        if !improved {
            break;
        }
    }
    SupNorm {
        value: best,
        mode: NormMode::LowerBound,
        argmax: best_point,
    }
}

/// Observed Bohnenblust–Hille ratio for one instance.
#[derive(Clone, Debug, PartialEq)]
pub struct BhReport {
    pub d: usize,
    pub lhs: f64,
    pub norm: f64,
    /// A lower-bound norm makes `ratio` an upper bound on the true ratio.
    pub norm_mode: NormMode,
    pub ratio: f64,
}

impl BhReport {
    fn new(d: usize, lhs: f64, norm: f64, norm_mode: NormMode) -> Self {
        let ratio = if lhs == 0.0 {
            0.0
        } else {
            assert!(norm > 0.0, "nonzero coefficients with zero norm");
            lhs / norm
        };
        Self {
            d,
            lhs,
            norm,
            norm_mode,
            ratio,
        }
    }
}

pub fn bh_ratio_quantum(a: &PauliPolynomial, d: usize) -> Result<BhReport> {
    let lhs = bh_lhs_quantum(a, d)?;
    let norm = a.operator_norm()?;
    Ok(BhReport::new(d, lhs, norm, NormMode::Exact))
}

pub fn bh_ratio_boolean(f: &BooleanPolynomial, d: usize) -> Result<BhReport> {
    let lhs = bh_lhs_boolean(f, d)?;
    let sup = sup_norm_boolean(f);
    Ok(BhReport::new(d, lhs, sup.value, sup.mode))
}

/// Coefficients `a^{κ_1…κ_d}_{i_1…i_d}` of a `d`-linear form in Pauli
/// factors, `κ ∈ {1,2,3}`, `i ∈ [n]` (0-based here).
#[derive(Clone, Debug, PartialEq)]
pub struct MultilinearTensor {
    d: usize,
    n: usize,
    values: Vec<Complex64>,
}

impl MultilinearTensor {
    pub fn zeros(d: usize, n: usize) -> Self {
        assert!(d >= 1 && n >= 1, "need d >= 1 and n >= 1");
        let len = 3usize.pow(d as u32) * n.pow(d as u32);
        Self {
            d,
            n,
            values: vec![Complex64::new(0.0, 0.0); len],
        }
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn sites(&self) -> usize {
        self.n
    }

    fn offset(&self, kappas: &[u8], sites: &[usize]) -> usize {
        assert!(kappas.len() == self.d && sites.len() == self.d, "need exactly d indices");
        let mut k = 0usize;
        for &kappa in kappas {
            assert!((1..=3).contains(&kappa), "κ must be 1, 2 or 3");
            k = 3 * k + (kappa as usize - 1);
        }
        let mut i = 0usize;
        for &site in sites {
            assert!(site < self.n, "site out of range");
            i = self.n * i + site;
        }
        k * self.n.pow(self.d as u32) + i
    }

    pub fn get(&self, kappas: &[u8], sites: &[usize]) -> Complex64 {
        self.values[self.offset(kappas, sites)]
    }

    pub fn set(&mut self, kappas: &[u8], sites: &[usize], value: Complex64) {
        let at = self.offset(kappas, sites);
        self.values[at] = value;
    }

    /// `Σ a σ^{(κ_1)}_{i_1} ⊗ ⋯ ⊗ σ^{(κ_d)}_{i_d}` on `d·n` qubits, factor
    /// `k` acting on block `k` (qubits `k·n .. (k+1)·n`).
    pub fn to_pauli(&self) -> PauliPolynomial {
        let (d, n) = (self.d, self.n);
        let mut a = PauliPolynomial::zero(d * n);
        let kappa_count = 3usize.pow(d as u32);
        let site_count = n.pow(d as u32);
        for k in 0..kappa_count {
            for i in 0..site_count {
                let value = self.values[k * site_count + i];
                if value == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let mut placements = Vec::with_capacity(d);
                let (mut kk, mut ii) = (k, i);
                for block in (0..d).rev() {
                    let kappa = (kk % 3) as u8 + 1;
                    let site = ii % n;
                    kk /= 3;
                    ii /= n;
                    placements.push((block * n + site, kappa));
                }
                let s = PauliIndex::from_sites(d * n, &placements).expect("sites within blocks");
                a.add_term(s, value).expect("same qubit count");
            }
        }
        a
    }
}

/// Ratio for the multilinear form's operator on `d·n` qubits.
pub fn multilinear_ratio(a: &MultilinearTensor) -> Result<BhReport> {
    bh_ratio_quantum(&a.to_pauli(), a.degree())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Uniform on `{−1, +1}`.
    Rademacher,
    /// Standard normal.
    Gaussian,
}

impl FromStr for Distribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rademacher" | "pm1" | "sign" => Ok(Distribution::Rademacher),
            "gaussian" | "normal" => Ok(Distribution::Gaussian),
            other => Err(Error::InvalidArgument(format!("unknown distribution {other:?}"))),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distribution::Rademacher => "rademacher",
            Distribution::Gaussian => "gaussian",
        })
    }
}

impl Distribution {
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> f64 {
        match self {
            Distribution::Rademacher => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            Distribution::Gaussian => rng.sample(StandardNormal),
        }
    }
}

/// Random real Pauli polynomial with i.i.d. coefficients on every word of
/// weight `d` (homogeneous) or weight `≤ d`.
pub fn random_instance(n: usize, d: usize, homogeneous: bool, seed: u64, distribution: Distribution) -> PauliPolynomial {
    let weights = if homogeneous { d..=d } else { 0..=d };
    let mut rng = rng::stream(seed, rng::INSTANCE_STREAM);
    let mut a = PauliPolynomial::zero(n);
    for s in words_with_weight(n, weights) {
        let v = distribution.sample(&mut rng);
        a.add_term(s, Complex64::new(v, 0.0)).expect("same qubit count");
    }
    a
}
