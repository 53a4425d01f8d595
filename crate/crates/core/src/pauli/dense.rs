//! Dense complex matrices of dimension `2^n`.
//!
//! These only exist as an oracle representation for small qubit counts:
//! operator and Schatten norms, Fourier round trips and the product-state
//! trace identity are all checked against them.

use std::ops::{Add, Mul};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest qubit count for which dense matrices are built (dimension 1024).
pub const DEFAULT_DENSE_LIMIT: usize = 10;

/// Matrices whose Hermitian defect is below this are handed to the
/// Hermitian eigensolver directly instead of through the dilation.
pub(crate) const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        if !dim.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(dim));
        }
        Ok(Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    /// Builds a matrix from row-major entries; `entries.len()` must be a
    /// square of a power of two.
    pub fn from_row_major(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if !dim.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of qubits, `log2(dim)`.
    pub fn qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for r in 0..d {
            for c in 0..d {
                out.entries[c * d + r] = self.entries[r * d + c].conj();
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| z * factor).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`; `self` indexes the most significant
    /// bits of the result.
    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let dim = a * b;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r1 in 0..a {
            for c1 in 0..a {
                let x = self.entries[r1 * a + c1];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for r2 in 0..b {
                    for c2 in 0..b {
                        entries[(r1 * b + r2) * dim + c1 * b + c2] = x * other.entries[r2 * b + c2];
                    }
                }
            }
        }
        Self { dim, entries }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise distance between `self` and its adjoint.
    pub fn hermitian_defect(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for r in 0..d {
            for c in r..d {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.entries)
    }

    /// Eigenvalues of a Hermitian matrix in descending order. Only the
    /// Hermitian part `(M + M*)/2` is used.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let m = self.to_nalgebra();
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let mut values: Vec<f64> = SymmetricEigen::new(h).eigenvalues.iter().copied().collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values
    }

    /// Singular values in descending order.
    ///
    /// Hermitian inputs use `|eigenvalues|`; others go through the Hermitian
    /// dilation `[[0, M], [M*, 0]]`, whose spectrum is `±σ_i`.
    pub fn singular_values(&self) -> Vec<f64> {
        if self.is_hermitian(HERMITIAN_TOL) {
            let mut values: Vec<f64> = self.hermitian_eigenvalues().into_iter().map(f64::abs).collect();
            values.sort_by(|a, b| b.total_cmp(a));
            return values;
        }
        let d = self.dim;
        let mut dilation = DMatrix::<Complex64>::zeros(2 * d, 2 * d);
        for r in 0..d {
            for c in 0..d {
                let z = self.get(r, c);
                dilation[(r, d + c)] = z;
                dilation[(d + c, r)] = z.conj();
            }
        }
        let mut values: Vec<f64> = SymmetricEigen::new(dilation).eigenvalues.iter().copied().collect();
        values.sort_by(|a, b| b.total_cmp(a));
        values.truncate(d);
        values.into_iter().map(|v| v.max(0.0)).collect()
    }

    pub fn operator_norm(&self) -> f64 {
        self.singular_values().first().copied().unwrap_or(0.0)
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let x = self.entries[r * d + k];
                if x == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let row = &rhs.entries[k * d..(k + 1) * d];
                for (out, y) in entries[r * d..(r + 1) * d].iter_mut().zip(row) {
                    *out += x * y;
                }
            }
        }
        DenseMatrix { dim: d, entries }
    }
}
