//! Biorthogonal eigensystems: paired right kets |E_n⟩ of H and left
//! "ketkets" |E_n⟩⟩ of H† satisfying ⟨⟨E_m|E_n⟩ = δ_mn and the completeness
//! relation Σ|E_n⟩⟨⟨E_n| = I, together with the per-eigenvector κ
//! renormalization freedom that parameterizes the admissible metrics.

use thiserror::Error;

use crate::cmatrix::{c64, Complex64, Matrix, MatrixError, Vector};

#[derive(Debug, Error)]
pub enum BiorthoError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(
        "left/right eigenvalue sets disagree: nearest match for {value} is {distance:.3e} away \
         (tolerance {tol:.3e})"
    )]
    PairingFailure {
        value: Complex64,
        distance: f64,
        tol: f64,
    },
    #[error("left/right eigenvector overlap {overlap:.3e} is too small; system is near-defective")]
    NearDefective { overlap: f64 },
    #[error("kappa parameter {index} is zero")]
    ZeroKappa { index: usize },
    #[error("kappa list has length {got}, system dimension is {expected}")]
    KappaLength { got: usize, expected: usize },
}

/// Right/left eigenvector pairs of a diagonalizable matrix with their shared
/// eigenvalues and normalization parameters κ_n.
///
/// Invariants established by [`decompose`] and preserved by
/// [`BiorthogonalSystem::rescale`]: `left† · right = I` and
/// `right · left† = I` to 1e−10, per-column eigen-residuals below
/// 1e−10·‖H‖_F, all κ_n nonzero.
#[derive(Clone, Debug)]
pub struct BiorthogonalSystem {
    dim: usize,
    eigenvalues: Vec<Complex64>,
    right: Matrix,
    left: Matrix,
    kappas: Vec<Complex64>,
}

/// Residuals of the defining relations, all as Frobenius norms.
#[derive(Clone, Copy, Debug)]
pub struct DiagnosticsReport {
    /// ‖L†R − I‖_F
    pub biorthonormality: f64,
    /// ‖RL† − I‖_F
    pub completeness: f64,
    /// ‖HR − R·diag(E)‖_F
    pub right_residual: f64,
    /// ‖H†L − L·diag(E*)‖_F
    pub left_residual: f64,
}

impl DiagnosticsReport {
    pub fn max_residual(&self) -> f64 {
        self.biorthonormality
            .max(self.completeness)
            .max(self.right_residual)
            .max(self.left_residual)
    }
}

/// Build the biorthogonal eigensystem of a diagonalizable matrix.
///
/// Right vectors come from the eigenproblem of `h`, left vectors from the
/// eigenproblem of `h†` paired by nearest conjugated eigenvalue, then each
/// left column is rescaled so that `left† · right = I` holds exactly column
/// by column. Eigenvalues are sorted ascending by (Re, Im) and all κ_n start
/// at 1, the convention that fixes basis and metric at once.
pub fn decompose(h: &Matrix) -> Result<BiorthogonalSystem, BiorthoError> {
    let n = h.dim();
    let scale = h.frob_norm();
    let (values, right) = h.gen_eig()?;
    let (left_values, left_raw) = h.adjoint().gen_eig()?;

    let pair_tol = 1e-8 * scale.max(1.0);
    let mut left = Matrix::zeros(n);
    let mut used = vec![false; n];
    for k in 0..n {
        let target = values[k].conj();
        let mut best: Option<(usize, f64)> = None;
        for (m, &lv) in left_values.iter().enumerate() {
            if used[m] {
                continue;
            }
            let d = (lv - target).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((m, d));
            }
        }
        let (m, distance) = best.expect("nonempty eigenvalue list");
        if distance > pair_tol {
            return Err(BiorthoError::PairingFailure {
                value: values[k],
                distance,
                tol: pair_tol,
            });
        }
        used[m] = true;

        // Rescale the left column so that l† r = 1 exactly.
        let l = left_raw.column(m);
        let r = right.column(k);
        let overlap = l.dot(&r);
        if overlap.norm() <= 1e-12 {
            return Err(BiorthoError::NearDefective {
                overlap: overlap.norm(),
            });
        }
        left.set_column(k, &l.scale(c64(1.0, 0.0) / overlap.conj()));
    }

    Ok(BiorthogonalSystem {
        dim: n,
        eigenvalues: values,
        right,
        left,
        kappas: vec![c64(1.0, 0.0); n],
    })
}

impl BiorthogonalSystem {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn right(&self) -> &Matrix {
        &self.right
    }

    pub fn left(&self) -> &Matrix {
        &self.left
    }

    pub fn kappas(&self) -> &[Complex64] {
        &self.kappas
    }

    pub fn right_col(&self, n: usize) -> Vector {
        self.right.column(n)
    }

    pub fn left_col(&self, n: usize) -> Vector {
        self.left.column(n)
    }

    /// Apply the κ renormalization freedom: right columns pick up κ_n, left
    /// columns 1/κ_n*, which preserves biorthonormality exactly.
    pub fn rescale(&self, kappas: &[Complex64]) -> Result<BiorthogonalSystem, BiorthoError> {
        if kappas.len() != self.dim {
            return Err(BiorthoError::KappaLength {
                got: kappas.len(),
                expected: self.dim,
            });
        }
        for (i, k) in kappas.iter().enumerate() {
            if k.norm() == 0.0 {
                return Err(BiorthoError::ZeroKappa { index: i });
            }
        }
        let mut right = self.right.clone();
        let mut left = self.left.clone();
        let mut total = self.kappas.clone();
        for (n, &k) in kappas.iter().enumerate() {
            right.set_column(n, &self.right.column(n).scale(k));
            left.set_column(n, &self.left.column(n).scale(c64(1.0, 0.0) / k.conj()));
            total[n] *= k;
        }
        Ok(BiorthogonalSystem {
            dim: self.dim,
            eigenvalues: self.eigenvalues.clone(),
            right,
            left,
            kappas: total,
        })
    }

    /// Residuals of biorthonormality, completeness, and both eigenproblems
    /// against `h`. Always succeeds; the caller judges the numbers.
    pub fn verify(&self, h: &Matrix) -> DiagnosticsReport {
        let id = Matrix::identity(self.dim);
        let lt_r = &self.left.adjoint() * &self.right;
        let r_lt = &self.right * &self.left.adjoint();
        let diag = Matrix::diag(&self.eigenvalues);
        let diag_conj = Matrix::diag(
            &self
                .eigenvalues
                .iter()
                .map(|z| z.conj())
                .collect::<Vec<_>>(),
        );
        DiagnosticsReport {
            biorthonormality: (&lt_r - &id).frob_norm(),
            completeness: (&r_lt - &id).frob_norm(),
            right_residual: (&(h * &self.right) - &(&self.right * &diag)).frob_norm(),
            left_residual: (&(&h.adjoint() * &self.left) - &(&self.left * &diag_conj)).frob_norm(),
        }
    }

    #[cfg(test)]
    pub(crate) fn corrupt_left_for_test(&mut self, col: usize, delta: Complex64) {
        let mut v = self.left.column(col);
        v[0] += delta;
        self.left.set_column(col, &v);
    }
}
