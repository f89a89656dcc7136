//! Hermitian eigendecomposition by cyclic complex Jacobi sweeps.

use super::{c64, Complex64, HermEig, Matrix, MatrixError};

const MAX_SWEEPS: usize = 60;

/// Off-diagonal Frobenius norm.
fn off_norm(a: &Matrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

pub(super) fn herm_eig(a: &Matrix) -> Result<HermEig, MatrixError> {
    let n = a.dim();
    let norm = a.frob_norm();
    let defect = a.herm_defect();
    let tol = 1e-10 * norm;
    if defect > tol && norm > 0.0 {
        return Err(MatrixError::NotHermitian { defect, tol });
    }

    // Work on the exactly Hermitian part; diagonal becomes real.
    let mut b = Matrix::from_fn(n, |i, j| {
        let z = (a[(i, j)] + a[(j, i)].conj()) * c64(0.5, 0.0);
        if i == j {
            c64(z.re, 0.0)
        } else {
            z
        }
    });
    let mut v = Matrix::identity(n);

    if n > 1 {
        let stop = f64::EPSILON * norm.max(f64::MIN_POSITIVE);
        let mut converged = false;
        for _sweep in 0..MAX_SWEEPS {
            if off_norm(&b) <= stop {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let bpq = b[(p, q)];
                    let mag = bpq.norm();
                    if mag == 0.0 {
                        continue;
                    }
                    rotate(&mut b, &mut v, p, q, bpq, mag);
                }
            }
        }
        if !converged && off_norm(&b) > stop * 10.0 {
            return Err(MatrixError::NoConvergence { iters: MAX_SWEEPS });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| b[(i, i)].re.partial_cmp(&b[(j, j)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| b[(i, i)].re).collect();
    let eigenvectors = Matrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(HermEig {
        eigenvalues,
        eigenvectors,
    })
}

/// One unitary plane rotation annihilating b[p][q].
///
/// With app, aqq real and apq = |apq|·e^{iφ}, the rotation
/// U[p][p] = U[q][q] = c, U[p][q] = s·e^{iφ}, U[q][p] = −s·e^{−iφ}
/// (c, s real) diagonalizes the (p, q) block when
/// t = s/c solves t² − 2τt − 1 = 0, τ = (app − aqq)/(2|apq|).
fn rotate(b: &mut Matrix, v: &mut Matrix, p: usize, q: usize, bpq: Complex64, mag: f64) {
    let n = b.dim();
    let app = b[(p, p)].re;
    let aqq = b[(q, q)].re;
    let tau = (app - aqq) / (2.0 * mag);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let phase = bpq / c64(mag, 0.0);
    let se = c64(s, 0.0) * phase; // s·e^{iφ}

    // Left multiply by U†: rows p, q.
    for j in 0..n {
        let bp = b[(p, j)];
        let bq = b[(q, j)];
        b[(p, j)] = c * bp - se * bq;
        b[(q, j)] = se.conj() * bp + c * bq;
    }
    // Right multiply by U: columns p, q.
    for i in 0..n {
        let bp = b[(i, p)];
        let bq = b[(i, q)];
        b[(i, p)] = c * bp - se.conj() * bq;
        b[(i, q)] = se * bp + c * bq;
        let vp = v[(i, p)];
        let vq = v[(i, q)];
        v[(i, p)] = c * vp - se.conj() * vq;
        v[(i, q)] = se * vp + c * vq;
    }
    // Clean up rounding on the annihilated pair and the diagonal.
    b[(p, q)] = Complex64::default();
    b[(q, p)] = Complex64::default();
    let dp = b[(p, p)];
    let dq = b[(q, q)];
    b[(p, p)] = c64(dp.re, 0.0);
    b[(q, q)] = c64(dq.re, 0.0);
}
