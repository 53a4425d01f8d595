//! Reproducible experiment drivers behind the `qcube` binary.
//!
//! Every run is configured by a [`Manifest`]: flat `key = value` text,
//! one entry per line, `#` starting a comment line. Unknown keys are errors.
//! List-valued keys (`n`, `d`, `kind`, `class`) take comma-separated values,
//! and an empty value is an empty list. A run returns its CSV text, an
//! optional JSON summary, human-readable messages, and whether every
//! assertion held; identical manifests give byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bh::{bh_ratio_boolean, bh_ratio_quantum, default_bh_bound, quantum_bh_bound, random_instance, Distribution};
use crate::bohr::{class_radius_search, radius_inequality_check, CheckOutcome, RadiusClass};
use crate::error::{Error, Result};
use crate::learner::{
    candidate_count, good_event, learn, resolved_parameters, sample_count, sample_count_binomial_bound, survivor_bound, threshold_b, LearnerConfig,
    SimulatedOracle,
};
use crate::lift::{expectation, lift, product_state, SignVector, Subset};
use crate::pauli::{DenseMatrix, PauliPolynomial};
use crate::rng;

/// Cube dimensions up to this size are verified point by point.
const LIFT_EXHAUSTIVE_DIM: usize = 18;

/// Coefficient shift injected by the `corrupt` negative control.
const CORRUPTION: f64 = 1e-3;

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    entries: BTreeMap<String, String>,
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        let mut manifest = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected `key = value`, got {line:?}"),
                });
            };
            let key = key.trim();
            if key.is_empty() || !key.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("invalid key {key:?}"),
                });
            }
            if manifest.entries.insert(key.to_string(), value.trim().to_string()).is_some() {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("duplicate key {key:?}"),
                });
            }
        }
        Ok(manifest)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Sets or replaces one entry.
    pub fn set(&mut self, key: &str, value: &str) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    /// Applies a `key=value` override.
    pub fn apply_override(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Manifest(format!("override {assignment:?} is not `key=value`")))?;
        self.set(key.trim(), value.trim());
        Ok(())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    fn check_keys(&self, command: &str, allowed: &[&str]) -> Result<()> {
        match self.entries.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(key) => Err(Error::Manifest(format!(
                "unknown key {key:?} for {command}; allowed: {}",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }

    fn parsed<T>(&self, key: &str, default: T, parse: impl Fn(&str) -> Option<T>) -> Result<T> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => parse(v).ok_or_else(|| Error::Manifest(format!("bad value {v:?} for {key}"))),
        }
    }

    fn f64_or(&self, key: &str, default: f64) -> Result<f64> {
        self.parsed(key, default, |v| v.parse().ok())
    }

    fn opt_f64(&self, key: &str) -> Result<Option<f64>> {
        self.parsed(key, None, |v| v.parse().ok().map(Some))
    }

    fn u64_or(&self, key: &str, default: u64) -> Result<u64> {
        self.parsed(key, default, parse_count)
    }

    fn opt_u64(&self, key: &str) -> Result<Option<u64>> {
        self.parsed(key, None, |v| parse_count(v).map(Some))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        self.parsed(key, default, |v| parse_count(v).and_then(|x| usize::try_from(x).ok()))
    }

    fn bool_or(&self, key: &str, default: bool) -> Result<bool> {
        self.parsed(key, default, |v| match v {
            "true" | "yes" | "1" => Some(true),
            "false" | "no" | "0" => Some(false),
            _ => None,
        })
    }

    fn list<T>(&self, key: &str, default: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
        let raw = self.get(key).unwrap_or(default);
        raw.split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .map(|v| parse(v).ok_or_else(|| Error::Manifest(format!("bad list entry {v:?} for {key}"))))
            .collect()
    }

    fn usize_list(&self, key: &str, default: &str) -> Result<Vec<usize>> {
        self.list(key, default, |v| parse_count(v).and_then(|x| usize::try_from(x).ok()))
    }

    fn distribution(&self) -> Result<Distribution> {
        self.get("distribution").unwrap_or("gaussian").parse()
    }

    fn seed(&self) -> Result<u64> {
        self.u64_or("seed", 0)
    }

    fn observable(&self) -> Result<Option<PauliPolynomial>> {
        self.get("observable")
            .map(|path| PauliPolynomial::from_text(&std::fs::read_to_string(path)?))
            .transpose()
    }
}

/// Non-negative integer, also accepting integral decimals such as `2e4`.
fn parse_count(v: &str) -> Option<u64> {
    v.parse::<u64>().ok().or_else(|| {
        let x: f64 = v.parse().ok()?;
        (x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64).then_some(x as u64)
    })
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunOutput {
    pub csv: String,
    pub summary: Option<String>,
    pub messages: Vec<String>,
    pub passed: bool,
}

pub const BH_SWEEP_KEYS: &[&str] = &["kind", "n", "d", "instances", "seed", "distribution", "homogeneous", "bh_bound"];

/// Observed ratios for random instances over a grid of `(n, d)`.
///
/// `kind = quantum` rows compare `A` against `3^d · bh_bound(d)`; `lifted`
/// rows compare `f_A` against `bh_bound(d)`. Cells with `d > n` are skipped.
pub fn run_bh_sweep(manifest: &Manifest) -> Result<RunOutput> {
    manifest.check_keys("bh-sweep", BH_SWEEP_KEYS)?;
    let kinds = manifest.list("kind", "quantum", |v| matches!(v, "quantum" | "lifted").then(|| v.to_string()))?;
    let ns = manifest.usize_list("n", "1")?;
    let ds = manifest.usize_list("d", "1")?;
    let instances = manifest.usize_or("instances", 100)?;
    let seed = manifest.seed()?;
    let distribution = manifest.distribution()?;
    let homogeneous = manifest.bool_or("homogeneous", false)?;
    let fixed_bound = manifest.opt_f64("bh_bound")?;

    let mut cells = Vec::new();
    for kind in &kinds {
        for &n in &ns {
            for &d in &ds {
                if d >= 1 && d <= n {
                    cells.push((kind.as_str(), n, d));
                }
            }
        }
    }

    let mut out = RunOutput {
        csv: "kind,n,d,seed,lhs,norm,norm_mode,ratio\n".into(),
        passed: true,
        ..Default::default()
    };
    for (kind, n, d) in cells {
        let classical = fixed_bound.unwrap_or_else(|| default_bh_bound(d));
        let bound = if kind == "quantum" { quantum_bh_bound(d, classical) } else { classical };
        let rows: Vec<(u64, Result<crate::bh::BhReport>)> = (0..instances)
            .into_par_iter()
            .map(|i| {
                let s = rng::derive_seed(seed, i as u64);
                let a = random_instance(n, d, homogeneous, s, distribution);
                let report = if kind == "quantum" {
                    bh_ratio_quantum(&a, d)
                } else {
                    bh_ratio_boolean(&lift(&a), d)
                };
                (s, report)
            })
            .collect();
        let mut max_ratio = 0.0f64;
        for (s, report) in rows {
            match report {
                Ok(r) => {
                    let _ = writeln!(
                        out.csv,
                        "{kind},{n},{d},{s},{},{},{},{}",
                        float(r.lhs),
                        float(r.norm),
                        r.norm_mode,
                        float(r.ratio)
                    );
                    max_ratio = max_ratio.max(r.ratio);
                }
                Err(e) => {
                    let _ = writeln!(out.csv, "{kind},{n},{d},{s},nan,nan,error,nan");
                    out.messages.push(format!("{kind} n={n} d={d} seed={s}: {e}"));
                    out.passed = false;
                }
            }
        }
        let ok = max_ratio <= bound;
        out.passed &= ok;
        out.messages.push(format!(
            "{} {kind} n={n} d={d}: max ratio {max_ratio:.6} over {instances} instances, bound {bound:.6}",
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    Ok(out)
}

pub const LEARN_KEYS: &[&str] = &[
    "n",
    "d",
    "eps",
    "delta",
    "bh_bound",
    "trials",
    "seed",
    "noise_std",
    "n_override",
    "b_override",
    "distribution",
    "observable",
];

fn learner_config(manifest: &Manifest, n: usize) -> Result<LearnerConfig> {
    let d = manifest.usize_or("d", 1)?;
    let eps = manifest.f64_or("eps", 0.1)?;
    let delta = manifest.f64_or("delta", 0.1)?;
    let bh_bound = manifest.f64_or("bh_bound", default_bh_bound(d))?;
    LearnerConfig::new(n, d, eps, delta, bh_bound)?.with_overrides(manifest.opt_u64("n_override")?, manifest.opt_f64("b_override")?)
}

#[derive(Serialize)]
struct Quantiles {
    min: f64,
    q10: f64,
    median: f64,
    q90: f64,
    max: f64,
}

impl Quantiles {
    /// Linear interpolation between order statistics.
    fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let mut v = values.to_vec();
        v.sort_by(f64::total_cmp);
        let at = |q: f64| {
            let pos = q * (v.len() - 1) as f64;
            let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
            v[lo] + (v[hi] - v[lo]) * (pos - lo as f64)
        };
        Some(Self {
            min: v[0],
            q10: at(0.1),
            median: at(0.5),
            q90: at(0.9),
            max: v[v.len() - 1],
        })
    }
}

#[derive(Serialize)]
struct LearnSummary {
    n: usize,
    d: usize,
    eps: f64,
    delta: f64,
    bh_bound: f64,
    noise_std: f64,
    samples: u64,
    threshold: f64,
    trials: usize,
    successes: usize,
    success_rate: Option<f64>,
    required_success_rate: Option<f64>,
    good_events: usize,
    survivor_bound_violations: usize,
    err_l2sq: Option<Quantiles>,
}

/// Theoretical threshold and sample count, without sampling.
pub fn paper_n(manifest: &Manifest) -> Result<String> {
    manifest.check_keys("learn", LEARN_KEYS)?;
    let cfg = learner_config(manifest, manifest.usize_or("n", 4)?)?;
    let b = threshold_b(&cfg);
    let mut text = String::new();
    let _ = writeln!(text, "n = {}", cfg.n);
    let _ = writeln!(text, "d = {}", cfg.d);
    let _ = writeln!(text, "eps = {}", cfg.eps);
    let _ = writeln!(text, "delta = {}", cfg.delta);
    let _ = writeln!(text, "bh_bound = {}", cfg.bh_bound);
    let _ = writeln!(text, "candidate_sets = {}", candidate_count(cfg.n, cfg.d));
    let _ = writeln!(text, "b = {}", float(b));
    let _ = writeln!(text, "N = {}", sample_count(&cfg, b));
    let _ = writeln!(text, "N_binomial_bound = {}", float(sample_count_binomial_bound(&cfg, b)));
    Ok(text)
}

/// Repeated learning trials against simulated exact (or noisy) oracles.
///
/// Without an `observable` each trial draws a fresh random degree-`d`
/// instance scaled to operator norm 1. A trial succeeds when
/// `err_l2sq ≤ eps`; the run passes when the success rate is at least
/// `1 − δ` minus three binomial standard errors.
pub fn run_learn(manifest: &Manifest) -> Result<RunOutput> {
    manifest.check_keys("learn", LEARN_KEYS)?;
    let fixed = manifest.observable()?;
    let n = match &fixed {
        Some(a) => a.qubits(),
        None => manifest.usize_or("n", 4)?,
    };
    if let (Some(a), Some(v)) = (&fixed, manifest.get("n")) {
        if parse_count(v) != Some(a.qubits() as u64) {
            return Err(Error::Manifest(format!("n = {v} contradicts the {}-qubit observable", a.qubits())));
        }
    }
    let cfg = learner_config(manifest, n)?;
    let trials = manifest.usize_or("trials", 10)?;
    let seed = manifest.seed()?;
    let noise_std = manifest.f64_or("noise_std", 0.0)?;
    let distribution = manifest.distribution()?;
    let (b, samples) = resolved_parameters(&cfg);

    let results: Vec<Result<(u64, usize, f64, bool, bool)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let trial_seed = rng::derive_seed(seed, t as u64);
            let truth = match &fixed {
                Some(a) => a.clone(),
                None => {
                    let a = random_instance(n, cfg.d, false, trial_seed, distribution);
                    let norm = a.operator_norm()?;
                    if norm > 0.0 {
                        a.scale_real(1.0 / norm)
                    } else {
                        a
                    }
                }
            };
            let oracle = SimulatedOracle::noisy(truth.clone(), noise_std, trial_seed)?;
            let report = learn(&oracle, &cfg, trial_seed)?.with_ground_truth(&truth)?;
            let err = report.err_l2sq.unwrap_or(f64::NAN);
            let good = good_event(&truth, &report);
            let ratio = bh_ratio_boolean(&lift(&truth), cfg.d)?.ratio;
            let within = report.survivors.len() as f64 <= survivor_bound(cfg.d, ratio, b);
            Ok((trial_seed, report.survivors.len(), err, good, !good || within))
        })
        .collect();

    let mut out = RunOutput {
        csv: "trial,seed,N,b,survivors,err_l2sq,good_event\n".into(),
        ..Default::default()
    };
    let (mut errs, mut successes, mut goods, mut violations) = (Vec::new(), 0, 0, 0);
    for (t, result) in results.into_iter().enumerate() {
        let (s, survivors, err, good, within) = result?;
        let _ = writeln!(out.csv, "{t},{s},{samples},{},{survivors},{},{good}", float(b), float(err));
        errs.push(err);
        successes += usize::from(err <= cfg.eps);
        goods += usize::from(good);
        violations += usize::from(!within);
    }
    let required = (trials > 0).then(|| {
        let p = 1.0 - cfg.delta;
        p - 3.0 * (p * cfg.delta / trials as f64).sqrt()
    });
    let rate = (trials > 0).then(|| successes as f64 / trials as f64);
    out.passed = rate.zip(required).is_none_or(|(r, q)| r >= q) && violations == 0;
    out.messages.push(match (rate, required) {
        (Some(r), Some(q)) => format!(
            "{} learn: success rate {r:.4} (required {q:.4}), {violations} survivor-bound violations",
            if out.passed { "PASS" } else { "FAIL" }
        ),
        _ => "PASS learn: no trials".into(),
    });
    let summary = LearnSummary {
        n,
        d: cfg.d,
        eps: cfg.eps,
        delta: cfg.delta,
        bh_bound: cfg.bh_bound,
        noise_std,
        samples: samples as u64,
        threshold: b,
        trials,
        successes,
        success_rate: rate,
        required_success_rate: required,
        good_events: goods,
        survivor_bound_violations: violations,
        err_l2sq: Quantiles::of(&errs),
    };
    out.summary = Some(serde_json::to_string_pretty(&summary)? + "\n");
    Ok(out)
}

pub const LIFT_VERIFY_KEYS: &[&str] = &["n", "d", "instances", "seed", "distribution", "points", "tol", "dense", "corrupt", "observable"];

/// `tr(A B)` for square matrices of equal size.
fn trace_product(a: &DenseMatrix, b: &DenseMatrix) -> Complex64 {
    let dim = a.dim();
    (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).map(|(i, j)| a.get(i, j) * b.get(j, i)).sum()
}

struct PointCheck {
    lift_error: f64,
    dense_error: f64,
    worst: SignVector,
}

/// Checks `tr[A ρ(ε)] = f(ε)` for one observable, and against the dense
/// trace when `dense` is set.
fn verify_points(a: &PauliPolynomial, f: &crate::lift::BooleanPolynomial, points: &[SignVector], dense: bool) -> Result<PointCheck> {
    let matrix = if dense { Some(a.to_dense()?) } else { None };
    let errors = points
        .par_iter()
        .map(|eps| {
            let e = expectation(a, eps)?;
            let lift_error = (e - f.eval_signs(eps)?).norm();
            let dense_error = match &matrix {
                Some(m) => (e - trace_product(m, &product_state(eps)?)).norm(),
                None => 0.0,
            };
            Ok((lift_error, dense_error))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let mut check = PointCheck {
        lift_error: 0.0,
        dense_error: 0.0,
        worst: points.first().cloned().unwrap_or_else(|| SignVector::all_plus(a.qubits())),
    };
    let mut worst = -1.0;
    for (eps, (l, d)) in points.iter().zip(errors) {
        check.lift_error = check.lift_error.max(l);
        check.dense_error = check.dense_error.max(d);
        if l.max(d) > worst {
            worst = l.max(d);
            check.worst = eps.clone();
        }
    }
    Ok(check)
}

/// Verifies the bridge identity on every point of `{±1}^{3n}` when
/// `3n ≤ 18`, otherwise on `points` random points per instance.
///
/// `corrupt = true` shifts one lifted coefficient before comparing, which
/// must make the run fail.
pub fn run_lift_verify(manifest: &Manifest) -> Result<RunOutput> {
    manifest.check_keys("lift-verify", LIFT_VERIFY_KEYS)?;
    let fixed = manifest.observable()?;
    let n = match &fixed {
        Some(a) => a.qubits(),
        None => manifest.usize_or("n", 2)?,
    };
    let d = manifest.usize_or("d", 2)?.min(n);
    let instances = if fixed.is_some() { 1 } else { manifest.usize_or("instances", 10)? };
    let seed = manifest.seed()?;
    let distribution = manifest.distribution()?;
    let random_points = manifest.usize_or("points", 10_000)?;
    let tol = manifest.f64_or("tol", 1e-12)?;
    let dense = manifest.bool_or("dense", n <= 4)?;
    let corrupt = manifest.bool_or("corrupt", false)?;

    let mut out = RunOutput {
        csv: "instance,seed,points,max_lift_error,max_dense_error,status,offending_eps\n".into(),
        passed: true,
        ..Default::default()
    };
    for i in 0..instances {
        let s = rng::derive_seed(seed, i as u64);
        let a = match &fixed {
            Some(a) => a.clone(),
            None => random_instance(n, d, false, s, distribution),
        };
        let mut f = lift(&a);
        if corrupt {
            let target = f.terms().next().map(|(s, _)| s.clone()).unwrap_or_else(Subset::empty);
            f.add_term(target, Complex64::new(CORRUPTION, 0.0))?;
        }
        let points: Vec<SignVector> = if 3 * n <= LIFT_EXHAUSTIVE_DIM {
            SignVector::enumerate(n).collect()
        } else {
            let mut r = rng::stream(s, rng::SAMPLE_STREAM);
            (0..random_points).map(|_| SignVector::random(n, &mut r)).collect()
        };
        let check = verify_points(&a, &f, &points, dense)?;
        let ok = check.lift_error <= tol && check.dense_error <= tol;
        out.passed &= ok;
        let dense_col = if dense { float(check.dense_error) } else { "na".into() };
        let offending = if ok { String::new() } else { check.worst.to_string() };
        let _ = writeln!(
            out.csv,
            "{i},{s},{},{},{dense_col},{},{offending}",
            points.len(),
            float(check.lift_error),
            if ok { "pass" } else { "fail" }
        );
        if !ok {
            out.messages.push(format!("instance {i}: identity violated at {}", check.worst));
        }
    }
    out.messages.push(format!(
        "{} lift-verify: {instances} instances on n = {n}",
        if out.passed { "PASS" } else { "FAIL" }
    ));
    Ok(out)
}

pub const BOHR_KEYS: &[&str] = &["class", "n", "d", "ensemble", "seed", "observable"];

/// Class radius searches over a grid, or the radii of one observable.
///
/// Every class minimum must respect the lower bound `2^{1/n} − 1`. With an
/// `observable` the single row carries `qBr_n(A)` in the radius column and
/// `Br_{3n}(f_A)` in the reference column, and the run passes when
/// `Br_{3n}(f_A) ≤ 3 qBr_n(A)`; constants give `inf` in both.
pub fn run_bohr(manifest: &Manifest) -> Result<RunOutput> {
    manifest.check_keys("bohr", BOHR_KEYS)?;
    let seed = manifest.seed()?;
    let mut out = RunOutput {
        csv: "class,n,d,ensemble,seed,empirical_min_radius,reference_value\n".into(),
        passed: true,
        ..Default::default()
    };
    if let Some(a) = manifest.observable()? {
        let check = radius_inequality_check(&a)?;
        out.passed = check.outcome != CheckOutcome::Fail;
        let _ = writeln!(
            out.csv,
            "observable,{},{},1,{seed},{},{}",
            a.qubits(),
            a.degree(),
            check.quantum.value,
            check.lifted.value
        );
        out.messages.push(format!("{:?} radius inequality", check.outcome));
        return Ok(out);
    }
    let classes = manifest.list("class", "all", |v| v.parse::<RadiusClass>().ok())?;
    let ns = manifest.usize_list("n", "1")?;
    let ds = manifest.usize_list("d", "1")?;
    let ensemble = manifest.usize_or("ensemble", 200)?;
    for class in classes {
        for &n in &ns {
            let degrees: Vec<usize> = match class {
                RadiusClass::All | RadiusClass::Hom => vec![n],
                _ => ds.iter().copied().filter(|&d| d >= 1 && d <= n).collect(),
            };
            for d in degrees {
                let search = class_radius_search(class, n, d, ensemble, seed)?;
                let floor = 2f64.powf(1.0 / n as f64) - 1.0 - 1e-9;
                let min = search.min_radius.map(|(r, _)| r);
                let ok = min.is_none_or(|r| r >= floor);
                out.passed &= ok;
                let _ = writeln!(
                    out.csv,
                    "{class},{n},{d},{ensemble},{seed},{},{}",
                    min.map_or_else(|| "inf".into(), float),
                    float(search.reference)
                );
                if !ok {
                    out.messages.push(format!("{class} n={n} d={d}: minimum below 2^(1/n) - 1"));
                }
            }
        }
    }
    out.messages.push(format!("{} bohr", if out.passed { "PASS" } else { "FAIL" }));
    Ok(out)
}

pub const GEN_KEYS: &[&str] = &["n", "d", "seed", "homogeneous", "distribution", "normalize"];

/// A random observable in the Pauli text format.
pub fn run_gen(manifest: &Manifest) -> Result<String> {
    manifest.check_keys("gen", GEN_KEYS)?;
    let n = manifest.usize_or("n", 2)?;
    let d = manifest.usize_or("d", 1)?;
    if d > n {
        return Err(Error::InvalidArgument(format!("degree {d} exceeds qubit count {n}")));
    }
    let mut a = random_instance(n, d, manifest.bool_or("homogeneous", false)?, manifest.seed()?, manifest.distribution()?);
    if manifest.bool_or("normalize", false)? {
        let norm = a.operator_norm()?;
        if norm > 0.0 {
            a = a.scale_real(1.0 / norm);
        }
    }
    Ok(a.to_text())
}
