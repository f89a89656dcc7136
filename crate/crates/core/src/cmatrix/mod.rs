//! Dense complex linear algebra for small square matrices (2 ≤ N ≲ 64).
//!
//! Everything is immutable after construction and stored row-major.
//! Tolerances are relative to the Frobenius norm so that contracts behave
//! under overall rescaling of the input.

mod general;
mod hermitian;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use thiserror::Error;

pub use num_complex::Complex64;

/// Shorthand constructor for a complex scalar.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Errors raised by the dense linear-algebra layer.
#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("matrix construction requires square data: got {rows} rows, {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular (pivot {pivot:.3e} in column {col})")]
    Singular { col: usize, pivot: f64 },
    #[error("matrix is numerically singular: condition estimate {cond:.3e} exceeds 1e12")]
    IllConditioned { cond: f64 },
    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { defect: f64, tol: f64 },
    #[error(
        "eigenvalue separation {sep:.3e} is below the degeneracy threshold {tol:.3e}; \
         matrix is defective or near-degenerate"
    )]
    Degenerate { sep: f64, tol: f64 },
    #[error("eigenvalue iteration failed to converge after {iters} iterations")]
    NoConvergence { iters: usize },
}

/// Dense N×N complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    /// Zero matrix of dimension `n`.
    pub fn zeros(n: usize) -> Self {
        Matrix {
            dim: n,
            data: vec![Complex64::default(); n * n],
        }
    }

    /// Identity matrix of dimension `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m[(i, i)] = c64(1.0, 0.0);
        }
        m
    }

    /// Build from nested rows, validating squareness and finiteness.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(MatrixError::NotSquare {
                    rows: n,
                    cols: r.len(),
                });
            }
            for (j, z) in r.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(MatrixError::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Matrix {
            dim: n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Build from nested real rows.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        let complex: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| c64(x, 0.0)).collect())
            .collect();
        Matrix::from_rows(&complex)
    }

    /// Build entry-wise from a closure. Panics on non-finite values, which
    /// indicate a bug in the caller rather than bad input data.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let z = f(i, j);
                assert!(
                    z.re.is_finite() && z.im.is_finite(),
                    "non-finite entry generated at ({i}, {j})"
                );
                m[(i, j)] = z;
            }
        }
        m
    }

    /// Diagonal matrix from complex entries.
    pub fn diag(entries: &[Complex64]) -> Self {
        let mut m = Matrix::zeros(entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn diag_real(entries: &[f64]) -> Self {
        Matrix::diag(&entries.iter().map(|&x| c64(x, 0.0)).collect::<Vec<_>>())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, |i, j| self[(j, i)].conj())
    }

    /// Plain transpose, no conjugation.
    pub fn transpose(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, |i, j| self[(j, i)])
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm √Σ|a_ij|².
    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Hermiticity defect ‖A − A†‖_F.
    pub fn herm_defect(&self) -> f64 {
        (self - &self.adjoint()).frob_norm()
    }

    /// Checked matrix product; errors on dimension mismatch.
    pub fn mul_checked(&self, rhs: &Matrix) -> Result<Matrix, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::default() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product; errors on dimension mismatch.
    pub fn apply(&self, v: &Vector) -> Result<Vector, MatrixError> {
        if self.dim != v.dim() {
            return Err(MatrixError::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let mut out = vec![Complex64::default(); self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[i] += self[(i, j)] * v[j];
            }
        }
        Ok(Vector::new(out))
    }

    /// Scale every entry by a complex factor.
    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Scale every entry by a real factor.
    pub fn scale_real(&self, s: f64) -> Matrix {
        self.scale(c64(s, 0.0))
    }

    /// Extract column `j` as a vector.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self[(i, j)]).collect())
    }

    /// Replace column `j`.
    pub fn set_column(&mut self, j: usize, v: &Vector) {
        assert_eq!(v.dim(), self.dim);
        for i in 0..self.dim {
            self[(i, j)] = v[i];
        }
    }

    /// Inverse by Gauss–Jordan elimination with partial pivoting.
    ///
    /// Rejects exactly singular matrices and matrices whose Frobenius
    /// condition estimate ‖A‖·‖A⁻¹‖ exceeds 1e12.
    pub fn inverse(&self) -> Result<Matrix, MatrixError> {
        let n = self.dim;
        let scale = self.max_abs();
        if scale == 0.0 {
            return Err(MatrixError::Singular { col: 0, pivot: 0.0 });
        }
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        let pivot_floor = (n as f64) * f64::EPSILON * scale;
        for k in 0..n {
            let mut piv_row = k;
            let mut piv_mag = a[(k, k)].norm();
            for r in k + 1..n {
                let mag = a[(r, k)].norm();
                if mag > piv_mag {
                    piv_mag = mag;
                    piv_row = r;
                }
            }
            if piv_mag <= pivot_floor {
                return Err(MatrixError::Singular {
                    col: k,
                    pivot: piv_mag,
                });
            }
            if piv_row != k {
                for j in 0..n {
                    a.data.swap(k * n + j, piv_row * n + j);
                    inv.data.swap(k * n + j, piv_row * n + j);
                }
            }
            let piv = a[(k, k)];
            for j in 0..n {
                a[(k, j)] /= piv;
                inv[(k, j)] /= piv;
            }
            for r in 0..n {
                if r == k {
                    continue;
                }
                let factor = a[(r, k)];
                if factor == Complex64::default() {
                    continue;
                }
                for j in 0..n {
                    let akj = a[(k, j)];
                    let ikj = inv[(k, j)];
                    a[(r, j)] -= factor * akj;
                    inv[(r, j)] -= factor * ikj;
                }
            }
        }
        let cond = self.frob_norm() * inv.frob_norm();
        if cond > 1e12 {
            return Err(MatrixError::IllConditioned { cond });
        }
        Ok(inv)
    }

    /// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
    /// Eigenvalues come back ascending with orthonormal eigenvector columns.
    pub fn herm_eig(&self) -> Result<HermEig, MatrixError> {
        hermitian::herm_eig(self)
    }

    /// Eigenvalues and unit right eigenvectors of a general (diagonalizable)
    /// matrix, sorted ascending by (Re, Im).
    ///
    /// Uses the closed form for N ≤ 2 and Hessenberg reduction followed by
    /// Wilkinson-shifted QR for larger N. Matrices whose eigenvalue
    /// separation falls below 1e−8·‖A‖_F are rejected as degenerate: the
    /// downstream biorthogonal machinery needs a complete, well-separated
    /// eigenbasis.
    pub fn gen_eig(&self) -> Result<(Vec<Complex64>, Matrix), MatrixError> {
        general::gen_eig(self)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.mul_checked(rhs)
            .expect("matrix product dimension mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix sum dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim, "matrix difference dimension mismatch");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(c64(-1.0, 0.0))
    }
}

/// Hermitian eigendecomposition: ascending real eigenvalues and a unitary
/// matrix whose columns are the corresponding eigenvectors.
#[derive(Clone, Debug)]
pub struct HermEig {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
}

impl HermEig {
    /// Rebuild V f(Λ) V† for a scalar function of the eigenvalues.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> Matrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = Matrix::zeros(n);
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            let flam = f(lam);
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] += v[(i, k)] * flam * v[(j, k)].conj();
                }
            }
        }
        out
    }

    /// Reconstruct the original matrix V Λ V†.
    pub fn reconstruct(&self) -> Matrix {
        self.map_eigenvalues(|x| x)
    }
}

/// Dense complex column vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    data: Vec<Complex64>,
}

impl Vector {
    pub fn new(data: Vec<Complex64>) -> Self {
        Vector { data }
    }

    pub fn zeros(n: usize) -> Self {
        Vector {
            data: vec![Complex64::default(); n],
        }
    }

    /// Standard basis vector e_k.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.data[k] = c64(1.0, 0.0);
        v
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Vector::new(entries.iter().map(|&x| c64(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Inner product ⟨self|other⟩, conjugating the left argument.
    pub fn dot(&self, other: &Vector) -> Complex64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Vector {
        Vector::new(self.data.iter().map(|z| z * s).collect())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// self + s·other, the workhorse of the integrators.
    pub fn axpy(&self, s: Complex64, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + s * b)
                .collect(),
        )
    }
}

impl Index<usize> for Vector {
    type Output = Complex64;
    #[inline]
    fn index(&self, i: usize) -> &Complex64 {
        &self.data[i]
    }
}

impl IndexMut<usize> for Vector {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut Complex64 {
        &mut self.data[i]
    }
}

#[cfg(test)]
mod tests;
