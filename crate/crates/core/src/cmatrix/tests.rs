use super::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_close(x: f64, y: f64, tol: f64) {
    assert!((x - y).abs() <= tol, "expected {y}, got {x} (tol {tol})");
}

fn diff_norm(a: &Matrix, b: &Matrix) -> f64 {
    (a - b).frob_norm()
}

/// Two-level Hamiltonian [[1, -cos a],[cos a, -1]] used across the suite.
fn h00(alpha: f64) -> Matrix {
    let c = alpha.cos();
    Matrix::from_real_rows(&[vec![1.0, -c], vec![c, -1.0]]).unwrap()
}

/// Two-level metric [[1+T, -C],[-C, 1-T]], T = sin a sin g, C = cos a.
fn theta00(alpha: f64, gamma: f64) -> Matrix {
    let t = alpha.sin() * gamma.sin();
    let c = alpha.cos();
    Matrix::from_real_rows(&[vec![1.0 + t, -c], vec![-c, 1.0 - t]]).unwrap()
}

fn random_matrix(rng: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, |_, _| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn random_hermitian(rng: &mut impl Rng, n: usize) -> Matrix {
    let a = random_matrix(rng, n);
    (&a + &a.adjoint()).scale_real(0.5)
}

// ---- construction ---------------------------------------------------------

#[test]
fn from_rows_rejects_non_square_and_non_finite() {
    let err = Matrix::from_rows(&[vec![c64(1.0, 0.0)], vec![c64(0.0, 0.0), c64(1.0, 0.0)]]);
    assert!(matches!(err, Err(MatrixError::NotSquare { .. })));
    let err = Matrix::from_real_rows(&[vec![1.0, f64::NAN], vec![0.0, 1.0]]);
    assert!(matches!(
        err,
        Err(MatrixError::NonFinite { row: 0, col: 1 })
    ));
}

// ---- products -------------------------------------------------------------

#[test]
fn identity_is_neutral_for_products() {
    let a = h00(0.7);
    let id = Matrix::identity(2);
    assert_eq!(diff_norm(&(&id * &a), &a), 0.0);
    assert_eq!(diff_norm(&(&a * &id), &a), 0.0);
}

#[test]
fn product_with_inverse_recovers_identity() {
    let a = theta00(1.0, 0.5);
    let inv = a.inverse().unwrap();
    assert!(diff_norm(&(&a * &inv), &Matrix::identity(2)) <= 1e-12);
}

#[test]
fn pauli_x_squares_to_identity() {
    let x = Matrix::from_real_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
    assert!(diff_norm(&(&x * &x), &Matrix::identity(2)) <= 1e-15);
}

#[test]
fn checked_product_rejects_dimension_mismatch() {
    let a = Matrix::identity(2);
    let b = Matrix::identity(3);
    assert!(matches!(
        a.mul_checked(&b),
        Err(MatrixError::DimensionMismatch { left: 2, right: 3 })
    ));
}

#[test]
fn product_adjoint_reverses_factors() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [2usize, 3, 5, 8] {
        let a = random_matrix(&mut rng, n);
        let b = random_matrix(&mut rng, n);
        let lhs = (&a * &b).adjoint();
        let rhs = &b.adjoint() * &a.adjoint();
        assert!(diff_norm(&lhs, &rhs) <= 1e-13 * lhs.frob_norm().max(1.0));
    }
}

// ---- adjoint --------------------------------------------------------------

#[test]
fn adjoint_fixes_hermitian_matrices() {
    let a = theta00(0.9, 0.3);
    assert_eq!(diff_norm(&a.adjoint(), &a), 0.0);
}

#[test]
fn adjoint_is_an_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = random_matrix(&mut rng, 4);
    assert_eq!(diff_norm(&a.adjoint().adjoint(), &a), 0.0);
}

#[test]
fn adjoint_of_two_level_hamiltonian() {
    let c = 0.6f64.cos();
    let expected = Matrix::from_real_rows(&[vec![1.0, c], vec![-c, -1.0]]).unwrap();
    assert_eq!(diff_norm(&h00(0.6).adjoint(), &expected), 0.0);
}

// ---- inverse --------------------------------------------------------------

#[test]
fn inverse_of_identity() {
    let inv = Matrix::identity(3).inverse().unwrap();
    assert_eq!(diff_norm(&inv, &Matrix::identity(3)), 0.0);
}

#[test]
fn inverse_of_diagonal() {
    let inv = Matrix::diag_real(&[2.0, 4.0]).inverse().unwrap();
    assert!(diff_norm(&inv, &Matrix::diag_real(&[0.5, 0.25])) <= 1e-16);
}

#[test]
fn inverse_of_metric_verified_by_products() {
    let th = theta00(1.0, 0.5);
    let inv = th.inverse().unwrap();
    let id = Matrix::identity(2);
    assert!(diff_norm(&(&th * &inv), &id) <= 1e-13);
    assert!(diff_norm(&(&inv * &th), &id) <= 1e-13);
}

#[test]
fn inverse_rejects_singular_matrix() {
    let a = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
    assert!(matches!(a.inverse(), Err(MatrixError::Singular { .. })));
}

#[test]
fn inverse_rejects_numerically_singular_matrix() {
    let a = Matrix::diag_real(&[1.0, 1e-13]);
    assert!(matches!(
        a.inverse(),
        Err(MatrixError::IllConditioned { .. })
    ));
}

#[test]
fn inverse_round_trip_for_moderate_condition_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let id4 = Matrix::identity(4);
    let mut tested = 0;
    for _ in 0..40 {
        let a = random_matrix(&mut rng, 4);
        let inv = match a.inverse() {
            Ok(inv) => inv,
            Err(_) => continue,
        };
        if a.frob_norm() * inv.frob_norm() >= 1e6 {
            continue;
        }
        tested += 1;
        assert!(diff_norm(&(&a * &inv), &id4) <= 1e-8);
    }
    assert!(tested >= 30, "too few well-conditioned samples: {tested}");
}

// ---- Hermitian eigendecomposition -----------------------------------------

#[test]
fn herm_eig_orders_diagonal_eigenvalues() {
    let eig = Matrix::diag_real(&[3.0, 1.0]).herm_eig().unwrap();
    assert_close(eig.eigenvalues[0], 1.0, 1e-15);
    assert_close(eig.eigenvalues[1], 3.0, 1e-15);
}

#[test]
fn herm_eig_matches_characteristic_polynomial_roots() {
    // [[1, -C],[-C, 1]] has char. poly l^2 - 2l + 1 - C^2 with roots 1 -+ C.
    let c = 0.3f64.cos();
    let a = Matrix::from_real_rows(&[vec![1.0, -c], vec![-c, 1.0]]).unwrap();
    let eig = a.herm_eig().unwrap();
    assert_close(eig.eigenvalues[0], 1.0 - c, 1e-14);
    assert_close(eig.eigenvalues[1], 1.0 + c, 1e-14);
}

#[test]
fn herm_eig_of_two_level_metric() {
    // Roots of l^2 - 2l + (1 - T^2 - C^2): l = 1 -+ R, R = hypot(T, C).
    let (alpha, gamma) = (1.0f64, 0.5f64);
    let t = alpha.sin() * gamma.sin();
    let r = t.hypot(alpha.cos());
    let eig = theta00(alpha, gamma).herm_eig().unwrap();
    assert_close(eig.eigenvalues[0], 1.0 - r, 1e-14);
    assert_close(eig.eigenvalues[1], 1.0 + r, 1e-14);
}

#[test]
fn herm_eig_rejects_non_hermitian_input() {
    assert!(matches!(
        h00(0.4).herm_eig(),
        Err(MatrixError::NotHermitian { .. })
    ));
}

#[test]
fn herm_eig_reconstruction_and_orthonormality() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for n in [2usize, 3, 5, 9, 16] {
        let a = random_hermitian(&mut rng, n);
        let eig = a.herm_eig().unwrap();
        let norm = a.frob_norm();
        assert!(
            diff_norm(&eig.reconstruct(), &a) <= 1e-12 * norm,
            "reconstruction failed at n = {n}"
        );
        let v = &eig.eigenvectors;
        let gram = &v.adjoint() * v;
        assert!(
            diff_norm(&gram, &Matrix::identity(n)) <= 1e-12,
            "orthonormality failed at n = {n}"
        );
        for k in 1..n {
            assert!(eig.eigenvalues[k] >= eig.eigenvalues[k - 1]);
        }
    }
}

// ---- general eigendecomposition -------------------------------------------

#[test]
fn gen_eig_of_real_diagonal() {
    let (vals, vecs) = Matrix::diag_real(&[1.0, -1.0]).gen_eig().unwrap();
    assert_close(vals[0].re, -1.0, 1e-15);
    assert_close(vals[1].re, 1.0, 1e-15);
    assert!(vals.iter().all(|v| v.im.abs() <= 1e-15));
    // Columns are the standard basis up to phase.
    assert_close(vecs.column(0).dot(&Vector::basis(2, 1)).norm(), 1.0, 1e-14);
    assert_close(vecs.column(1).dot(&Vector::basis(2, 0)).norm(), 1.0, 1e-14);
}

#[test]
fn gen_eig_two_level_spectrum_is_plus_minus_sin_alpha() {
    // Characteristic polynomial of [[1, -C],[C, -1]]: l^2 = 1 - C^2 = sin^2 a.
    for alpha in [std::f64::consts::FRAC_PI_6, std::f64::consts::FRAC_PI_3] {
        let expected = alpha.sin();
        let (vals, vecs) = h00(alpha).gen_eig().unwrap();
        assert_close(vals[0].re, -expected, 1e-12);
        assert_close(vals[1].re, expected, 1e-12);
        assert!(vals.iter().all(|v| v.im.abs() <= 1e-12));
        let h = h00(alpha);
        for k in 0..2 {
            let v = vecs.column(k);
            let res = h.apply(&v).unwrap().sub(&v.scale(vals[k])).norm();
            assert!(res <= 1e-12);
        }
    }
    assert_close(
        h00(std::f64::consts::FRAC_PI_6).gen_eig().unwrap().0[1].re,
        0.5,
        1e-13,
    );
    assert_close(
        h00(std::f64::consts::FRAC_PI_3).gen_eig().unwrap().0[1].re,
        0.86603,
        1e-5,
    );
}

#[test]
fn gen_eig_rejects_jordan_block() {
    let a = Matrix::from_real_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
    assert!(matches!(a.gen_eig(), Err(MatrixError::Degenerate { .. })));
}

#[test]
fn gen_eig_rejects_repeated_eigenvalues() {
    assert!(matches!(
        Matrix::identity(3).gen_eig(),
        Err(MatrixError::Degenerate { .. })
    ));
}

#[test]
fn gen_eig_residuals_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for n in [3usize, 4, 6, 8] {
        let a = random_matrix(&mut rng, n);
        let (vals, vecs) = a.gen_eig().unwrap();
        let scale = a.frob_norm();
        for k in 0..n {
            let v = vecs.column(k);
            assert_close(v.norm(), 1.0, 1e-12);
            let res = a.apply(&v).unwrap().sub(&v.scale(vals[k])).norm();
            assert!(
                res <= 1e-10 * scale,
                "residual {res:.3e} too large at n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn gen_eig_agrees_with_herm_eig_on_hermitian_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let a = random_hermitian(&mut rng, 5);
    let herm = a.herm_eig().unwrap();
    let (vals, _) = match a.gen_eig() {
        Ok(out) => out,
        // Random Hermitian spectra are separated for this seed.
        Err(e) => panic!("unexpected degeneracy: {e}"),
    };
    for k in 0..5 {
        assert_close(vals[k].re, herm.eigenvalues[k], 1e-10 * a.frob_norm());
        assert!(vals[k].im.abs() <= 1e-10 * a.frob_norm());
    }
}

// ---- norms ----------------------------------------------------------------

#[test]
fn frob_norm_reference_values() {
    assert_eq!(Matrix::zeros(3).frob_norm(), 0.0);
    assert_close(Matrix::identity(2).frob_norm(), 2.0f64.sqrt(), 1e-16);
    assert_close(Matrix::diag_real(&[3.0, 4.0]).frob_norm(), 5.0, 1e-15);
}

// ---- vectors ---------------------------------------------------------------

#[test]
fn vector_dot_conjugates_left_argument() {
    let a = Vector::new(vec![c64(0.0, 1.0), c64(1.0, 0.0)]);
    let b = Vector::new(vec![c64(0.0, 1.0), c64(0.0, 0.0)]);
    let d = a.dot(&b);
    assert_close(d.re, 1.0, 1e-16);
    assert_close(d.im, 0.0, 1e-16);
}

#[test]
fn matrix_apply_matches_column_combination() {
    let a = theta00(0.8, 0.2);
    let v = Vector::new(vec![c64(0.3, -0.1), c64(0.2, 0.5)]);
    let av = a.apply(&v).unwrap();
    let manual = a.column(0).scale(v[0]).add(&a.column(1).scale(v[1]));
    assert!(av.sub(&manual).norm() <= 1e-15);
}
