//! General complex eigendecomposition: Householder reduction to Hessenberg
//! form, Wilkinson-shifted QR with Givens rotations to a Schur form, then
//! eigenvectors by back-substitution on the triangular factor.

use super::{c64, Complex64, Matrix, MatrixError, Vector};

const SEPARATION_FACTOR: f64 = 1e-8;
const MAX_QR_ITERS_PER_EIG: usize = 60;

pub(super) fn gen_eig(a: &Matrix) -> Result<(Vec<Complex64>, Matrix), MatrixError> {
    let n = a.dim();
    let scale = a.frob_norm();

    let (mut values, mut vectors) = match n {
        0 => (Vec::new(), Matrix::zeros(0)),
        1 => (vec![a[(0, 0)]], Matrix::identity(1)),
        2 => eig2(a)?,
        _ => eig_qr(a, scale)?,
    };

    check_separation(&values, scale)?;

    // Deterministic ordering: ascending by real part, then imaginary part.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        (values[i].re, values[i].im)
            .partial_cmp(&(values[j].re, values[j].im))
            .unwrap()
    });
    values = order.iter().map(|&i| values[i]).collect();
    vectors = Matrix::from_fn(n, |i, j| vectors[(i, order[j])]);
    Ok((values, vectors))
}

fn check_separation(values: &[Complex64], scale: f64) -> Result<(), MatrixError> {
    let tol = SEPARATION_FACTOR * scale;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            let sep = (values[i] - values[j]).norm();
            if sep <= tol {
                return Err(MatrixError::Degenerate { sep, tol });
            }
        }
    }
    Ok(())
}

/// Closed-form 2×2 eigenpairs with the cancellation-safe root ordering.
fn eig2(a: &Matrix) -> Result<(Vec<Complex64>, Matrix), MatrixError> {
    let (a11, a12, a21, a22) = (a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
    let mean = (a11 + a22) * c64(0.5, 0.0);
    let det = a11 * a22 - a12 * a21;
    let disc = mean * mean - det;
    let mut sq = disc.sqrt();
    // Pick the root direction that avoids cancellation in mean + sq.
    if (mean.conj() * sq).re < 0.0 {
        sq = -sq;
    }
    let big = mean + sq;
    let small = if big.norm() > 0.0 { det / big } else { mean - sq };
    let values = vec![big, small];

    let mut vectors = Matrix::zeros(2);
    for (k, &lam) in values.iter().enumerate() {
        // Null vector of (A − λ): rows give two candidates; take the larger.
        let cand1 = Vector::new(vec![a12, lam - a11]);
        let cand2 = Vector::new(vec![lam - a22, a21]);
        let v = if cand1.norm() >= cand2.norm() {
            cand1
        } else {
            cand2
        };
        let norm = v.norm();
        if norm == 0.0 {
            // A is a multiple of the identity; separation check will reject.
            vectors.set_column(k, &Vector::basis(2, k));
            continue;
        }
        vectors.set_column(k, &v.scale(c64(1.0 / norm, 0.0)));
    }
    Ok((values, vectors))
}

/// Householder reduction to upper Hessenberg: A = Q H Q†.
fn hessenberg(a: &Matrix) -> (Matrix, Matrix) {
    let n = a.dim();
    let mut h = a.clone();
    let mut q = Matrix::identity(n);
    for k in 0..n.saturating_sub(2) {
        let m = n - k - 1; // length of the column tail below the subdiagonal
        let mut x = vec![Complex64::default(); m];
        for i in 0..m {
            x[i] = h[(k + 1 + i, k)];
        }
        let norm_x = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let phase = if x[0].norm() > 0.0 {
            x[0] / c64(x[0].norm(), 0.0)
        } else {
            c64(1.0, 0.0)
        };
        let alpha = -phase * c64(norm_x, 0.0);
        let mut v = x;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm <= f64::EPSILON * norm_x {
            continue;
        }
        for z in v.iter_mut() {
            *z /= c64(vnorm, 0.0);
        }
        // h ← P h with P = I − 2vv† acting on rows k+1..n.
        for j in 0..n {
            let mut s = Complex64::default();
            for i in 0..m {
                s += v[i].conj() * h[(k + 1 + i, j)];
            }
            s *= c64(2.0, 0.0);
            for i in 0..m {
                let vi = v[i];
                h[(k + 1 + i, j)] -= s * vi;
            }
        }
        // h ← h P on columns k+1..n; same for the accumulated q.
        for i in 0..n {
            let mut s = Complex64::default();
            for j in 0..m {
                s += h[(i, k + 1 + j)] * v[j];
            }
            s *= c64(2.0, 0.0);
            for j in 0..m {
                let vj = v[j].conj();
                h[(i, k + 1 + j)] -= s * vj;
            }
            let mut sq = Complex64::default();
            for j in 0..m {
                sq += q[(i, k + 1 + j)] * v[j];
            }
            sq *= c64(2.0, 0.0);
            for j in 0..m {
                let vj = v[j].conj();
                q[(i, k + 1 + j)] -= sq * vj;
            }
        }
        // Enforce the Hessenberg zero pattern in column k.
        h[(k + 1, k)] = alpha;
        for i in k + 2..n {
            h[(i, k)] = Complex64::default();
        }
    }
    (h, q)
}

/// Givens rotation G = [[c, s], [−s̄, c]] with real c ≥ 0 zeroing y in (x, y)ᵀ.
fn givens(x: Complex64, y: Complex64) -> (f64, Complex64) {
    let ax = x.norm();
    let ay = y.norm();
    if ay == 0.0 {
        return (1.0, Complex64::default());
    }
    if ax == 0.0 {
        return (0.0, y.conj() / c64(ay, 0.0));
    }
    let r = ax.hypot(ay);
    let c = ax / r;
    let s = (x / c64(ax, 0.0)) * y.conj() / c64(r, 0.0);
    (c, s)
}

/// Eigenvalues of the trailing 2×2 block, returning the one closer to `corner`.
fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    let mean = (a + d) * c64(0.5, 0.0);
    let det = a * d - b * c;
    let disc = mean * mean - det;
    let sq = disc.sqrt();
    let e1 = mean + sq;
    let e2 = mean - sq;
    if (e1 - d).norm() <= (e2 - d).norm() {
        e1
    } else {
        e2
    }
}

/// Shifted QR on the Hessenberg matrix, accumulating the unitary similarity
/// into `q`. On success `h` is upper triangular (a Schur factor).
fn schur(h: &mut Matrix, q: &mut Matrix, scale: f64) -> Result<(), MatrixError> {
    let n = h.dim();
    let mut hi = n - 1;
    let mut iters_here = 0usize;
    let total_budget = MAX_QR_ITERS_PER_EIG * n;
    let mut total = 0usize;

    while hi > 0 {
        // Deflate negligible subdiagonals.
        for i in 0..hi {
            let small = f64::EPSILON * (h[(i, i)].norm() + h[(i + 1, i + 1)].norm()).max(scale * f64::EPSILON);
            if h[(i + 1, i)].norm() <= small {
                h[(i + 1, i)] = Complex64::default();
            }
        }
        if h[(hi, hi - 1)] == Complex64::default() {
            hi -= 1;
            iters_here = 0;
            continue;
        }
        // Active block [lo, hi] ending at hi.
        let mut lo = hi;
        while lo > 0 && h[(lo, lo - 1)] != Complex64::default() {
            lo -= 1;
        }

        total += 1;
        iters_here += 1;
        if total > total_budget {
            return Err(MatrixError::NoConvergence { iters: total });
        }
        let shift = if iters_here % 12 == 0 {
            // Occasional exceptional shift to break symmetric stalls.
            h[(hi, hi)] + c64(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };

        for i in lo..=hi {
            h[(i, i)] -= shift;
        }
        // Factor the block with Givens rotations: G_{hi-1}···G_lo (H−μ) = R.
        let mut rots: Vec<(f64, Complex64)> = Vec::with_capacity(hi - lo);
        for i in lo..hi {
            let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
            for j in i..n {
                let hp = h[(i, j)];
                let hq = h[(i + 1, j)];
                h[(i, j)] = c * hp + s * hq;
                h[(i + 1, j)] = -s.conj() * hp + c * hq;
            }
            h[(i + 1, i)] = Complex64::default();
            rots.push((c, s));
        }
        // H ← R G_lo†···G_{hi-1}†, and accumulate into q.
        for (offset, (c, s)) in rots.iter().enumerate() {
            let i = lo + offset;
            let top = (i + 2).min(hi + 1);
            for r in 0..top {
                let hp = h[(r, i)];
                let hq = h[(r, i + 1)];
                h[(r, i)] = *c * hp + s.conj() * hq;
                h[(r, i + 1)] = -*s * hp + *c * hq;
            }
            for r in 0..n {
                let qp = q[(r, i)];
                let qq = q[(r, i + 1)];
                q[(r, i)] = *c * qp + s.conj() * qq;
                q[(r, i + 1)] = -*s * qp + *c * qq;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += shift;
        }
    }
    Ok(())
}

fn eig_qr(a: &Matrix, scale: f64) -> Result<(Vec<Complex64>, Matrix), MatrixError> {
    let n = a.dim();
    let (mut t, mut q) = hessenberg(a);
    schur(&mut t, &mut q, scale)?;

    let values: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    // Eigenvalue separation guards the back-substitution denominators.
    check_separation(&values, scale)?;

    let mut vectors = Matrix::zeros(n);
    for k in 0..n {
        let lam = values[k];
        let mut y = vec![Complex64::default(); n];
        y[k] = c64(1.0, 0.0);
        for i in (0..k).rev() {
            let mut s = Complex64::default();
            for j in i + 1..=k {
                s += t[(i, j)] * y[j];
            }
            let den = t[(i, i)] - lam;
            y[i] = -s / den;
        }
        let mut v = Vector::zeros(n);
        for r in 0..n {
            let mut s = Complex64::default();
            for j in 0..=k {
                s += q[(r, j)] * y[j];
            }
            v[r] = s;
        }
        let norm = v.norm();
        vectors.set_column(k, &v.scale(c64(1.0 / norm, 0.0)));
    }
    Ok((values, vectors))
}
