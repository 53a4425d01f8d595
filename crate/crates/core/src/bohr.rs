//! Boolean and quantum Boolean radii.
//!
//! The radius of `f` is the `r ≥ 0` solving `Σ_S |f̂(S)| r^{|S|} = ‖f‖_∞`;
//! for an observable the sum runs over Pauli coefficients and the right
//! side is the operator norm. The left side has nonnegative coefficients, so
//! it is increasing in `r` and bisection finds the root.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;

use crate::bh::{sup_norm_boolean, walsh_hadamard, Distribution, NormMode, EXHAUSTIVE_LIMIT};
use crate::error::{Error, Result};
use crate::lift::{lift, BooleanPolynomial, Subset};
use crate::pauli::PauliPolynomial;
use crate::rng;

/// Largest cube dimension accepted by [`class_radius_search`].
pub const MAX_SEARCH_DIM: usize = 12;

/// Every `±1`-valued function joins the search ensemble up to this dimension.
pub const ALL_SIGN_FUNCTIONS_DIM: usize = 4;

/// Slack allowed in the comparison `Br_{3n}(f_A) ≤ 3 qBr_n(A)`.
pub const INEQUALITY_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Radius {
    Finite(f64),
    /// The function is constant: every `r` solves the defining equation.
    Infinite,
}

impl Radius {
    pub fn finite(self) -> Option<f64> {
        match self {
            Radius::Finite(r) => Some(r),
            Radius::Infinite => None,
        }
    }
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Finite(r) => write!(f, "{r:.16e}"),
            Radius::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadiusResult {
    pub value: Radius,
    /// `|g(r) − norm|` at the returned `r`.
    pub residual: f64,
    pub norm_used: f64,
    pub norm_mode: NormMode,
}

/// `g(r) = Σ_k masses[k] r^k`.
fn weighted_mass(masses: &[f64], r: f64) -> f64 {
    masses.iter().rev().fold(0.0, |acc, &m| acc * r + m)
}

/// Solves `Σ_k masses[k] r^k = norm` for `r ≥ 0`.
fn solve_radius(masses: &[f64], norm: f64) -> (Radius, f64) {
    let g = |r: f64| weighted_mass(masses, r);
    let residual = |r: f64| (g(r) - norm).abs();
    if masses.iter().skip(1).all(|&m| m == 0.0) {
        return (Radius::Infinite, residual(0.0));
    }
    if g(0.0) >= norm {
        return (Radius::Finite(0.0), residual(0.0));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while g(hi) < norm {
        lo = hi;
        hi *= 2.0;
    }
    let target = 1e-10 * norm.max(1.0);
    loop {
        let narrow = hi - lo <= 1e-12 * hi.max(1.0);
        if narrow && residual(lo).min(residual(hi)) <= target {
            break;
        }
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) < norm {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = if residual(hi) <= residual(lo) { hi } else { lo };
    (Radius::Finite(r), residual(r))
}

fn masses_by_degree<'a>(terms: impl Iterator<Item = (usize, &'a Complex64)>) -> Vec<f64> {
    let mut masses = Vec::new();
    for (k, c) in terms {
        if masses.len() <= k {
            masses.resize(k + 1, 0.0);
        }
        masses[k] += c.norm();
    }
    masses
}

/// `Br_m(f)` with `‖f‖_∞` from [`sup_norm_boolean`].
pub fn boolean_radius(f: &BooleanPolynomial) -> Result<RadiusResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("Boolean radius"));
    }
    let sup = sup_norm_boolean(f);
    let masses = masses_by_degree(f.terms().map(|(s, c)| (s.len(), c)));
    let (value, residual) = solve_radius(&masses, sup.value);
    Ok(RadiusResult {
        value,
        residual,
        norm_used: sup.value,
        norm_mode: sup.mode,
    })
}

/// `qBr_n(A)` with the operator norm.
pub fn quantum_radius(a: &PauliPolynomial) -> Result<RadiusResult> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("quantum radius"));
    }
    let norm = a.operator_norm()?;
    let masses = masses_by_degree(a.terms().map(|(s, c)| (s.weight(), c)));
    let (value, residual) = solve_radius(&masses, norm);
    Ok(RadiusResult {
        value,
        residual,
        norm_used: norm,
        norm_mode: NormMode::Exact,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// Both radii are infinite (constant input).
    SkippedDegenerate,
}

#[derive(Clone, Debug)]
pub struct RadiusCheck {
    pub quantum: RadiusResult,
    pub lifted: RadiusResult,
    pub outcome: CheckOutcome,
}

/// Compares `Br_{3n}(f_A)` against `3 qBr_n(A)`.
pub fn radius_inequality_check(a: &PauliPolynomial) -> Result<RadiusCheck> {
    let limit = EXHAUSTIVE_LIMIT / 3;
    if a.qubits() > limit {
        return Err(Error::Capacity { n: a.qubits(), limit });
    }
    let quantum = quantum_radius(a)?;
    let lifted = boolean_radius(&lift(a))?;
    let outcome = match (quantum.value, lifted.value) {
        (Radius::Infinite, Radius::Infinite) => CheckOutcome::SkippedDegenerate,
        (Radius::Finite(q), Radius::Finite(b)) if b <= 3.0 * q + INEQUALITY_SLACK => CheckOutcome::Pass,
        _ => CheckOutcome::Fail,
    };
    Ok(RadiusCheck { quantum, lifted, outcome })
}

/// The four function classes of the radius problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RadiusClass {
    All,
    /// Homogeneous of some degree.
    Hom,
    /// `d`-homogeneous.
    EqD,
    /// Degree at most `d`.
    LeD,
}

impl fmt::Display for RadiusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadiusClass::All => "all",
            RadiusClass::Hom => "hom",
            RadiusClass::EqD => "eq_d",
            RadiusClass::LeD => "le_d",
        })
    }
}

impl FromStr for RadiusClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(RadiusClass::All),
            "hom" => Ok(RadiusClass::Hom),
            "eq_d" | "=d" => Ok(RadiusClass::EqD),
            "le_d" | "<=d" => Ok(RadiusClass::LeD),
            other => Err(Error::InvalidArgument(format!("unknown function class {other:?}"))),
        }
    }
}

impl RadiusClass {
    fn contains_degrees(self, mut degrees: impl Iterator<Item = usize>, d: usize) -> bool {
        match self {
            RadiusClass::All => true,
            RadiusClass::Hom => match degrees.next() {
                Some(first) => degrees.all(|k| k == first),
                None => true,
            },
            RadiusClass::EqD => degrees.all(|k| k == d),
            RadiusClass::LeD => degrees.all(|k| k <= d),
        }
    }
}

/// Reference curve for the class infimum. Only the `all` value is exact;
/// the others are the known growth orders with every unnamed constant set
/// to 1.
pub fn reference_value(class: RadiusClass, n: usize, d: usize) -> f64 {
    let nf = n as f64;
    match class {
        RadiusClass::All => 2f64.powf(1.0 / nf) - 1.0,
        RadiusClass::Hom => (nf.ln() / nf).sqrt(),
        RadiusClass::EqD => {
            let binom = (1..=d).fold(1.0, |acc, l| acc * (n - l + 1) as f64 / l as f64);
            nf.powf(1.0 / (2.0 * nf)) * binom.powf(-1.0 / (2.0 * d as f64))
        }
        RadiusClass::LeD => nf.powf(-(d as f64 - 1.0) / (2.0 * d as f64)),
    }
}

fn check_class_args(class: RadiusClass, n: usize, d: usize) -> Result<()> {
    if n == 0 || n > MAX_SEARCH_DIM {
        return Err(Error::InvalidArgument(format!("need 1 <= n <= {MAX_SEARCH_DIM}, got {n}")));
    }
    if matches!(class, RadiusClass::EqD | RadiusClass::LeD) && (d == 0 || d > n) {
        return Err(Error::InvalidArgument(format!("need 1 <= d <= n, got d = {d}, n = {n}")));
    }
    Ok(())
}

fn random_member(class: RadiusClass, n: usize, d: usize, seed: u64, distribution: Distribution) -> BooleanPolynomial {
    let mut rng = rng::stream(seed, rng::SEARCH_STREAM);
    let degrees = match class {
        RadiusClass::All => 0..=n,
        RadiusClass::Hom => {
            let k = rng.random_range(1..=n);
            k..=k
        }
        RadiusClass::EqD => d..=d,
        RadiusClass::LeD => 0..=d,
    };
    let mut f = BooleanPolynomial::zero(n);
    for mask in 0u64..1 << n {
        if degrees.contains(&(mask.count_ones() as usize)) {
            let subset = Subset::new((0..n).filter(|j| mask >> j & 1 == 1));
            let v = distribution.sample(&mut rng);
            f.add_term(subset, Complex64::new(v, 0.0)).expect("subset within dimension");
        }
    }
    f
}

/// The `±1`-valued function whose value at the point with mask `x` is
/// `−1` exactly when bit `x` of `table` is set.
fn sign_function(n: usize, table: u64) -> BooleanPolynomial {
    let points = 1usize << n;
    let mut values: Vec<Complex64> = (0..points)
        .map(|x| Complex64::new(if table >> x & 1 == 1 { -1.0 } else { 1.0 }, 0.0))
        .collect();
    walsh_hadamard(&mut values);
    let scale = 1.0 / points as f64;
    let mut f = BooleanPolynomial::zero(n);
    for (mask, v) in values.into_iter().enumerate() {
        let subset = Subset::new((0..n).filter(|j| mask >> j & 1 == 1));
        f.add_term(subset, v * scale).expect("subset within dimension");
    }
    f
}

/// The search ensemble: `ensemble` seeded random members of the class
/// (alternating Gaussian and `±1` coefficients), followed for
/// `n ≤ ALL_SIGN_FUNCTIONS_DIM` by every `±1`-valued function in the class.
pub fn class_ensemble(class: RadiusClass, n: usize, d: usize, ensemble: usize, seed: u64) -> Result<Vec<BooleanPolynomial>> {
    check_class_args(class, n, d)?;
    let mut members: Vec<BooleanPolynomial> = (0..ensemble)
        .into_par_iter()
        .map(|i| {
            let distribution = if i % 2 == 0 {
                Distribution::Gaussian
            } else {
                Distribution::Rademacher
            };
            random_member(class, n, d, rng::derive_seed(seed, i as u64), distribution)
        })
        .collect();
    if n <= ALL_SIGN_FUNCTIONS_DIM {
        let signs: Vec<BooleanPolynomial> = (0u64..1 << (1u64 << n))
            .into_par_iter()
            .map(|table| sign_function(n, table))
            .filter(|f| class.contains_degrees(f.terms().map(|(s, _)| s.len()), d))
            .collect();
        members.extend(signs);
    }
    Ok(members)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClassSearch {
    pub class: RadiusClass,
    pub n: usize,
    pub d: usize,
    pub ensemble: usize,
    pub seed: u64,
    /// Members actually evaluated, constants included.
    pub evaluated: usize,
    /// Smallest finite radius seen, with the ensemble index attaining it.
    /// An upper bound on the class infimum.
    pub min_radius: Option<(f64, usize)>,
    pub reference: f64,
}

/// Smallest Boolean radius over [`class_ensemble`].
pub fn class_radius_search(class: RadiusClass, n: usize, d: usize, ensemble: usize, seed: u64) -> Result<ClassSearch> {
    let members = class_ensemble(class, n, d, ensemble, seed)?;
    let radii = members
        .par_iter()
        .map(|f| if f.is_zero() { Ok(Radius::Infinite) } else { boolean_radius(f).map(|r| r.value) })
        .collect::<Result<Vec<Radius>>>()?;
    let min_radius = radii
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.finite().map(|v| (v, i)))
        .fold(None, |best: Option<(f64, usize)>, cand| match best {
            Some(b) if b.0 <= cand.0 => Some(b),
            _ => Some(cand),
        });
    Ok(ClassSearch {
        class,
        n,
        d,
        ensemble,
        seed,
        evaluated: members.len(),
        min_radius,
        reference: reference_value(class, n, d),
    })
}
