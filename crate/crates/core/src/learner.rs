//! Learning a degree-`d` observable from product-state queries.
//!
//! Each query draws `ε` uniformly from `{±1}^{3n}` and observes
//! `tr[A ρ(ε)] = f_A(ε)`. Empirical Walsh coefficients
//! `α_S = (1/N) Σ_m f_A(ε_m) χ_S(ε_m)` are computed on every `S = q(s)` with
//! `|s| ≤ d`; those with `|α_S| ≥ 2b` survive and are mapped back through
//! `Ã = Σ_{S survives} 3^{|S|} α_S σ_{p(S)}`.
//!
//! With `‖A‖ ≤ 1`, Hoeffding gives `P{|α_S − f̂_A(S)| > b} ≤ 2 exp(−N b²/2)`,
//! which drives [`sample_count`]; [`threshold_b`] is the threshold for which
//! the resulting error bound equals the target `ε`.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::bh::bh_exponent;
use crate::error::{Error, Result};
use crate::lift::{index_p, index_q, lift, SignVector, Subset};
use crate::pauli::{words_with_weight, PauliPolynomial};
use crate::rng;

/// Refuse to draw more samples than this in one run.
pub const MAX_SAMPLES: u64 = 1_000_000_000;

/// Queries are drawn and answered in chunks of this many points.
const CHUNK: usize = 4096;

/// Source of query answers `ε ↦ tr[A ρ(ε)]`.
pub trait QueryOracle: Sync {
    fn qubits(&self) -> usize;

    /// Answers query number `index` at `point`.
    fn query(&self, index: usize, point: &SignVector) -> Result<Complex64>;

    /// Whether `query` may be called from several threads at once.
    fn supports_concurrent_queries(&self) -> bool {
        false
    }
}

/// Answers queries for a known observable, optionally with additive
/// Gaussian noise of standard deviation `noise_std` on the real part.
///
/// Noise for query `index` is drawn from its own seeded stream, so answers
/// do not depend on the order in which queries are evaluated.
#[derive(Clone, Debug)]
pub struct SimulatedOracle {
    observable: PauliPolynomial,
    /// Per term: `3^{-|s|} Â_s` and the flat sign coordinates it reads.
    compiled: Vec<(Complex64, Vec<usize>)>,
    noise_std: f64,
    noise_seed: u64,
}

impl SimulatedOracle {
    pub fn exact(observable: PauliPolynomial) -> Self {
        let n = observable.qubits();
        let compiled = observable
            .terms()
            .map(|(s, c)| {
                let flat: Vec<usize> = s.support().map(|(site, kappa)| (kappa as usize - 1) * n + site).collect();
                (c / 3f64.powi(flat.len() as i32), flat)
            })
            .collect();
        Self {
            observable,
            compiled,
            noise_std: 0.0,
            noise_seed: 0,
        }
    }

    pub fn noisy(observable: PauliPolynomial, noise_std: f64, noise_seed: u64) -> Result<Self> {
        if !(noise_std >= 0.0 && noise_std.is_finite()) {
            return Err(Error::InvalidArgument(format!("noise_std must be finite and >= 0, got {noise_std}")));
        }
        Ok(Self {
            noise_std,
            noise_seed,
            ..Self::exact(observable)
        })
    }

    pub fn observable(&self) -> &PauliPolynomial {
        &self.observable
    }
}

impl QueryOracle for SimulatedOracle {
    fn qubits(&self) -> usize {
        self.observable.qubits()
    }

    /// Agrees bit for bit with [`crate::lift::expectation`]: same terms, same scaling,
    /// same summation order.
    fn query(&self, index: usize, point: &SignVector) -> Result<Complex64> {
        if point.qubits() != self.observable.qubits() {
            return Err(Error::QubitMismatch {
                left: self.observable.qubits(),
                right: point.qubits(),
            });
        }
        let signs = point.as_slice();
        let exact: Complex64 = self
            .compiled
            .iter()
            .map(|(v, flat)| if flat.iter().fold(1i8, |acc, &j| acc * signs[j]) > 0 { *v } else { -v })
            .sum();
        if self.noise_std == 0.0 {
            return Ok(exact);
        }
        let mut noise_rng = rng::stream(rng::derive_seed(self.noise_seed, index as u64), rng::NOISE_STREAM);
        let noise: f64 = StandardNormal.sample(&mut noise_rng);
        Ok(exact + self.noise_std * noise)
    }

    fn supports_concurrent_queries(&self) -> bool {
        true
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LearnerConfig {
    pub n: usize,
    pub d: usize,
    /// Target squared ℓ2 error.
    pub eps: f64,
    /// Failure probability.
    pub delta: f64,
    /// Stand-in for the classical Bohnenblust–Hille constant.
    pub bh_bound: f64,
    pub n_override: Option<u64>,
    pub b_override: Option<f64>,
}

impl LearnerConfig {
    pub fn new(n: usize, d: usize, eps: f64, delta: f64, bh_bound: f64) -> Result<Self> {
        let cfg = Self {
            n,
            d,
            eps,
            delta,
            bh_bound,
            n_override: None,
            b_override: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_overrides(mut self, samples: Option<u64>, threshold: Option<f64>) -> Result<Self> {
        self.n_override = samples;
        self.b_override = threshold;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.d < 1 || self.d > self.n {
            return bad(format!("need 1 <= d <= n, got d = {}, n = {}", self.d, self.n));
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return bad(format!("eps must lie in (0, 1), got {}", self.eps));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return bad(format!("delta must lie in (0, 1), got {}", self.delta));
        }
        if !(self.bh_bound >= 1.0 && self.bh_bound.is_finite()) {
            return bad(format!("bh_bound must be finite and >= 1, got {}", self.bh_bound));
        }
        if self.n_override == Some(0) {
            return bad("sample count override must be positive".into());
        }
        if let Some(b) = self.b_override {
            if !(b > 0.0 && b.is_finite()) {
                return bad(format!("threshold override must be positive, got {b}"));
            }
        }
        Ok(())
    }
}

/// `Σ_{l ≤ d} C(n, l)` in floating point.
fn binomial_prefix_sum(n: usize, d: usize) -> f64 {
    let mut term = 1.0;
    let mut total = 1.0;
    for l in 1..=d.min(n) {
        term *= (n - l + 1) as f64 / l as f64;
        total += term;
    }
    total
}

/// `|Im q| = Σ_{l ≤ d} 3^l C(n, l)`.
pub fn candidate_count(n: usize, d: usize) -> f64 {
    let mut term = 1.0;
    let mut total = 1.0;
    for l in 1..=d.min(n) {
        term *= 3.0 * (n - l + 1) as f64 / l as f64;
        total += term;
    }
    total
}

/// The subsets `q(s)`, `|s| ≤ d`, in lexicographic order.
pub fn candidate_sets(n: usize, d: usize) -> Vec<Subset> {
    let mut sets: Vec<Subset> = words_with_weight(n, 0..=d).iter().map(index_q).collect();
    sets.sort();
    sets
}

/// `b = 10^{−(d+1)/2} (3^{d+1} BH)^{−d} ε^{(d+1)/2}`.
pub fn threshold_b(cfg: &LearnerConfig) -> f64 {
    let d = cfg.d as f64;
    10f64.powf(-(d + 1.0) / 2.0) * (3f64.powf(d + 1.0) * cfg.bh_bound).powf(-d) * cfg.eps.powf((d + 1.0) / 2.0)
}

fn union_bound_log(cfg: &LearnerConfig, binomials: f64) -> f64 {
    (2.0 * 3f64.powi(cfg.d as i32) / cfg.delta * binomials).ln()
}

/// Smallest `N ≥ (2/b²) log((2·3^d/δ) Σ_{l≤d} C(n,l))`. Saturates at
/// `u128::MAX`.
pub fn sample_count(cfg: &LearnerConfig, b: f64) -> u128 {
    let bound = 2.0 / (b * b) * union_bound_log(cfg, binomial_prefix_sum(cfg.n, cfg.d));
    bound.ceil() as u128
}

/// The same count with `Σ_{l≤d} C(n,l)` replaced by its upper bound
/// `(en/d)^d`; never smaller than [`sample_count`].
pub fn sample_count_binomial_bound(cfg: &LearnerConfig, b: f64) -> f64 {
    let relaxed = (std::f64::consts::E * cfg.n as f64 / cfg.d as f64).powi(cfg.d as i32);
    (2.0 / (b * b) * union_bound_log(cfg, relaxed)).ceil()
}

/// `α_S = (1/N) Σ_m v_m χ_S(ε_m)` for every set, summed in sample order.
pub fn empirical_coefficients(samples: &[(SignVector, Complex64)], sets: &[Subset]) -> Result<BTreeMap<Subset, Complex64>> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut acc = CoefficientAccumulator::new(sets.to_vec());
    acc.extend(samples.iter().map(|(p, v)| (p, *v)));
    Ok(acc.finish())
}

/// Running sums `Σ v χ_S` over a fixed list of sets.
struct CoefficientAccumulator {
    sets: Vec<Subset>,
    sums: Vec<Complex64>,
    count: u64,
}

impl CoefficientAccumulator {
    fn new(sets: Vec<Subset>) -> Self {
        let sums = vec![Complex64::new(0.0, 0.0); sets.len()];
        Self { sets, sums, count: 0 }
    }

    fn extend<'a>(&mut self, samples: impl Iterator<Item = (&'a SignVector, Complex64)>) {
        let samples: Vec<(&SignVector, Complex64)> = samples.collect();
        self.sums.par_iter_mut().zip(self.sets.par_iter()).for_each(|(sum, set)| {
            for (point, value) in &samples {
                if set.character(point.as_slice()) > 0 {
                    *sum += value;
                } else {
                    *sum -= value;
                }
            }
        });
        self.count += samples.len() as u64;
    }

    fn finish(self) -> BTreeMap<Subset, Complex64> {
        let n = self.count as f64;
        self.sets.into_iter().zip(self.sums).map(|(s, sum)| (s, sum / n)).collect()
    }
}

#[derive(Clone, Debug)]
pub struct LearnerReport {
    pub samples_used: u64,
    pub threshold: f64,
    pub alpha: BTreeMap<Subset, Complex64>,
    /// Sets with `|α_S| ≥ 2b`, in lexicographic order.
    pub survivors: Vec<Subset>,
    pub reconstructed: PauliPolynomial,
    /// `b^{−2d/(d+1)} · bh_bound^{2d/(d+1)}`.
    pub survivor_bound: f64,
    pub survivor_bound_holds: bool,
    /// `‖A − Ã‖_2²`, filled in when the true observable is known.
    pub err_l2sq: Option<f64>,
}

impl LearnerReport {
    pub fn with_ground_truth(mut self, truth: &PauliPolynomial) -> Result<Self> {
        self.err_l2sq = Some(err_l2sq(truth, &self)?);
        Ok(self)
    }
}

/// `|S_b| ≤ b^{−2d/(d+1)} r^{2d/(d+1)}` for a constant `r`.
pub fn survivor_bound(d: usize, r: f64, b: f64) -> f64 {
    let p = bh_exponent(d);
    b.powf(-p) * r.powf(p)
}

/// `10 (3^{d+1} r)^{2d/(d+1)} b^{2/(d+1)}`.
pub fn error_chain_bound(d: usize, r: f64, b: f64) -> f64 {
    let p = bh_exponent(d);
    10.0 * (3f64.powi(d as i32 + 1) * r).powf(p) * b.powf(2.0 / (d as f64 + 1.0))
}

/// Thresholds `alpha` at `2b` and maps survivors back to Pauli words.
pub fn reconstruct(n: usize, d: usize, alpha: BTreeMap<Subset, Complex64>, b: f64, bh_bound: f64, samples_used: u64) -> Result<LearnerReport> {
    let survivors: Vec<Subset> = alpha
        .iter()
        .filter(|(_, a)| a.norm() >= 2.0 * b)
        .map(|(s, _)| s.clone())
        .collect();
    let mut reconstructed = PauliPolynomial::zero(n);
    for s in &survivors {
        let word = index_p(s, n).ok_or_else(|| Error::NotInImage(s.to_string()))?;
        reconstructed.add_term(word, alpha[s] * 3f64.powi(s.len() as i32))?;
    }
    let bound = survivor_bound(d, bh_bound, b);
    Ok(LearnerReport {
        samples_used,
        threshold: b,
        survivor_bound_holds: survivors.len() as f64 <= bound,
        survivor_bound: bound,
        alpha,
        survivors,
        reconstructed,
        err_l2sq: None,
    })
}

/// Runs estimation and reconstruction on an explicit list of samples.
pub fn estimate_from_samples(samples: &[(SignVector, Complex64)], cfg: &LearnerConfig, b: f64) -> Result<LearnerReport> {
    cfg.validate()?;
    if let Some((bad, _)) = samples.iter().find(|(p, _)| p.qubits() != cfg.n) {
        return Err(Error::QubitMismatch {
            left: cfg.n,
            right: bad.qubits(),
        });
    }
    let alpha = empirical_coefficients(samples, &candidate_sets(cfg.n, cfg.d))?;
    reconstruct(cfg.n, cfg.d, alpha, b, cfg.bh_bound, samples.len() as u64)
}

/// Threshold and sample count actually used: overrides win over formulas.
pub fn resolved_parameters(cfg: &LearnerConfig) -> (f64, u128) {
    let b = cfg.b_override.unwrap_or_else(|| threshold_b(cfg));
    let n = cfg.n_override.map_or_else(|| sample_count(cfg, b), u128::from);
    (b, n)
}

/// Draws `N` uniform sign vectors from the seeded sample stream, queries the
/// oracle, and reconstructs.
pub fn learn(oracle: &dyn QueryOracle, cfg: &LearnerConfig, seed: u64) -> Result<LearnerReport> {
    cfg.validate()?;
    if oracle.qubits() != cfg.n {
        return Err(Error::QubitMismatch {
            left: cfg.n,
            right: oracle.qubits(),
        });
    }
    let (b, total) = resolved_parameters(cfg);
    if total > u128::from(MAX_SAMPLES) {
        return Err(Error::InvalidArgument(format!(
            "sample count {total} exceeds the runnable maximum {MAX_SAMPLES}; set an explicit sample count"
        )));
    }
    let total = total as usize;
    let mut rng = rng::stream(seed, rng::SAMPLE_STREAM);
    let mut acc = CoefficientAccumulator::new(candidate_sets(cfg.n, cfg.d));
    let mut done = 0usize;
    while done < total {
        let len = CHUNK.min(total - done);
        let points: Vec<SignVector> = (0..len).map(|_| SignVector::random(cfg.n, &mut rng)).collect();
        let answer = |(offset, point): (usize, &SignVector)| {
            oracle.query(done + offset, point).map_err(|e| (done + offset, e))
        };
        let values: std::result::Result<Vec<Complex64>, (usize, Error)> = if oracle.supports_concurrent_queries() {
            points.par_iter().enumerate().map(answer).collect()
        } else {
            points.iter().enumerate().map(answer).collect()
        };
        let values = values.map_err(|(index, e)| Error::Oracle {
            index,
            completed: done,
            reason: e.to_string(),
        })?;
        acc.extend(points.iter().zip(values));
        done += len;
    }
    reconstruct(cfg.n, cfg.d, acc.finish(), b, cfg.bh_bound, total as u64)
}

/// `Σ_s |Â_s − Ã_s|²`.
pub fn err_l2sq(truth: &PauliPolynomial, report: &LearnerReport) -> Result<f64> {
    truth.l2_distance_sq(&report.reconstructed)
}

/// `max_S |α_S − f̂_A(S)|` over the estimated sets.
pub fn max_coefficient_deviation(truth: &PauliPolynomial, report: &LearnerReport) -> f64 {
    let f = lift(truth);
    report
        .alpha
        .iter()
        .map(|(s, a)| (a - f.coefficient(s)).norm())
        .fold(0.0, f64::max)
}

/// Whether every estimate landed within `b` of its true coefficient.
pub fn good_event(truth: &PauliPolynomial, report: &LearnerReport) -> bool {
    max_coefficient_deviation(truth, report) <= report.threshold
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lift::expectation;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn cfg(n: usize, d: usize) -> LearnerConfig {
        LearnerConfig::new(n, d, 0.1, 0.1, 1.0).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(LearnerConfig::new(2, 0, 0.1, 0.1, 1.0).is_err());
        assert!(LearnerConfig::new(2, 3, 0.1, 0.1, 1.0).is_err());
        assert!(LearnerConfig::new(2, 1, 1.0, 0.1, 1.0).is_err());
        assert!(LearnerConfig::new(2, 1, 0.1, 0.0, 1.0).is_err());
        assert!(LearnerConfig::new(2, 1, 0.1, 0.1, 0.5).is_err());
        assert!(cfg(2, 1).with_overrides(Some(0), None).is_err());
        assert!(cfg(2, 1).with_overrides(None, Some(-1.0)).is_err());
    }

    #[test]
    fn candidate_set_examples() {
        let one = candidate_sets(1, 1);
        assert_eq!(
            one,
            vec![
                Subset::empty(),
                Subset::from_one_based([1]),
                Subset::from_one_based([2]),
                Subset::from_one_based([3])
            ]
        );
        assert_eq!(candidate_sets(2, 1).len(), 7);
        assert_eq!(candidate_sets(2, 2).len(), 16);
        assert_eq!(candidate_count(2, 2), 16.0);
        assert_eq!(candidate_count(5, 3), candidate_sets(5, 3).len() as f64);
    }

    #[test]
    fn threshold_examples() {
        let b = threshold_b(&cfg(1, 1));
        assert!((b - 1.0 / 900.0).abs() < 1e-18);
        let mut two = cfg(1, 1);
        two.bh_bound = 2.0;
        assert!((threshold_b(&two) - 1.0 / 1800.0).abs() < 1e-18);
        let mut smaller = cfg(1, 1);
        smaller.eps = 0.05;
        assert!(threshold_b(&smaller) < b);
    }

    #[test]
    fn sample_count_examples() {
        assert_eq!(sample_count(&cfg(4, 1), 0.1), 1141);
        let n1 = sample_count(&cfg(4, 1), 0.1) as f64;
        let n2 = sample_count(&cfg(4, 1), 0.05) as f64;
        assert!((n2 / n1 - 4.0).abs() < 0.01);
        let mut strict = cfg(4, 1);
        strict.delta = 0.01;
        assert!(sample_count(&strict, 0.1) > 1141);
        assert!(sample_count_binomial_bound(&cfg(4, 1), 0.1) >= 1141.0);
    }

    #[test]
    fn empirical_coefficient_examples() {
        assert!(matches!(empirical_coefficients(&[], &candidate_sets(1, 1)), Err(Error::EmptySamples)));

        let point: SignVector = "+|-|-".parse().unwrap();
        let alpha = empirical_coefficients(&[(point, c(0.5))], &candidate_sets(1, 1)).unwrap();
        assert_eq!(alpha[&Subset::empty()], c(0.5));
        assert_eq!(alpha[&Subset::from_one_based([1])], c(0.5));
        assert_eq!(alpha[&Subset::from_one_based([2])], c(-0.5));

        let constant: Vec<_> = SignVector::enumerate(1).map(|p| (p, c(0.25))).collect();
        let alpha = empirical_coefficients(&constant, &candidate_sets(1, 1)).unwrap();
        assert_eq!(alpha[&Subset::empty()], c(0.25));
        assert_eq!(alpha[&Subset::from_one_based([3])], c(0.0));
    }

    #[test]
    fn zero_observable_learns_zero() {
        let oracle = SimulatedOracle::exact(PauliPolynomial::zero(2));
        let config = cfg(2, 2).with_overrides(Some(1), Some(0.1)).unwrap();
        let report = learn(&oracle, &config, 1).unwrap();
        assert!(report.reconstructed.is_zero());
        assert!(report.survivors.is_empty());
    }

    #[test]
    fn threshold_tie_is_included() {
        let mut alpha = BTreeMap::new();
        alpha.insert(Subset::from_one_based([1]), c(0.2));
        alpha.insert(Subset::from_one_based([2]), c(0.1999));
        let report = reconstruct(1, 1, alpha, 0.1, 1.0, 1).unwrap();
        assert_eq!(report.survivors, vec![Subset::from_one_based([1])]);
        assert_eq!(report.reconstructed.coefficient(&"X".parse().unwrap()), c(0.6000000000000001));
    }

    #[test]
    fn learn_is_deterministic_and_checks_qubits() {
        let a = crate::bh::random_instance(3, 1, false, 4, crate::bh::Distribution::Gaussian);
        let oracle = SimulatedOracle::exact(a);
        let config = cfg(3, 1).with_overrides(Some(5000), Some(0.02)).unwrap();
        let r1 = learn(&oracle, &config, 9).unwrap();
        let r2 = learn(&oracle, &config, 9).unwrap();
        assert_eq!(r1.alpha, r2.alpha);
        assert_eq!(r1.reconstructed, r2.reconstructed);
        assert!(learn(&oracle, &cfg(2, 1), 9).is_err());
    }

    #[test]
    fn theoretical_count_is_refused() {
        let oracle = SimulatedOracle::exact(PauliPolynomial::identity(3));
        let config = LearnerConfig::new(3, 2, 0.1, 0.1, 4.0).unwrap();
        assert!(matches!(learn(&oracle, &config, 0), Err(Error::InvalidArgument(_))));
    }

    struct Failing;

    impl QueryOracle for Failing {
        fn qubits(&self) -> usize {
            1
        }

        fn query(&self, index: usize, _point: &SignVector) -> Result<Complex64> {
            if index == 5000 {
                Err(Error::InvalidArgument("device offline".into()))
            } else {
                Ok(c(0.0))
            }
        }
    }

    #[test]
    fn oracle_failure_reports_progress() {
        let config = cfg(1, 1).with_overrides(Some(10_000), Some(0.1)).unwrap();
        match learn(&Failing, &config, 0) {
            Err(Error::Oracle { index, completed, reason }) => {
                assert_eq!(index, 5000);
                assert_eq!(completed, 4096);
                assert!(reason.contains("device offline"));
            }
            other => panic!("expected oracle error, got {other:?}"),
        }
    }

    #[test]
    fn exact_oracle_matches_expectation_bitwise() {
        let a = crate::bh::random_instance(3, 3, false, 11, crate::bh::Distribution::Gaussian);
        let oracle = SimulatedOracle::exact(a.clone());
        for (i, p) in SignVector::enumerate(3).enumerate() {
            let q = oracle.query(i, &p).unwrap();
            let e = expectation(&a, &p).unwrap();
            assert_eq!((q.re.to_bits(), q.im.to_bits()), (e.re.to_bits(), e.im.to_bits()));
        }
    }

    #[test]
    fn noisy_oracle_is_reproducible() {
        let a = PauliPolynomial::monomial("Z".parse().unwrap(), c(1.0));
        let oracle = SimulatedOracle::noisy(a.clone(), 0.5, 3).unwrap();
        let p = SignVector::all_plus(1);
        assert_eq!(oracle.query(7, &p).unwrap(), oracle.query(7, &p).unwrap());
        assert_ne!(oracle.query(7, &p).unwrap(), oracle.query(8, &p).unwrap());
        let exact = SimulatedOracle::exact(a);
        assert_eq!(exact.query(0, &p).unwrap(), c(1.0 / 3.0));
        assert!(exact.query(0, &SignVector::all_plus(2)).is_err());
        assert!(SimulatedOracle::noisy(PauliPolynomial::zero(1), -1.0, 0).is_err());
    }
}
