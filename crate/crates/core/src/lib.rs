//! Construction of positive-definite metric operators for quasi-Hermitian
//! Hamiltonians and time evolution under moving metrics.
//!
//! A quasi-Hermitian Hamiltonian obeys `H^† = Θ H Θ^{-1}` for some Hermitian
//! positive-definite metric `Θ`. With `ω = Θ^{1/2}` the similarity map
//! `h = ω H ω^{-1}` produces an ordinary Hermitian generator, and a state
//! evolved with the right/left propagator pair
//!
//! ```text
//! U_R(t) = ω^{-1}(t) u(t) ω(0),      U_L^†(t) = ω(t) u(t) ω^{-1}(0),
//! ```
//!
//! where `i ∂_t u = h(t) u`, conserves the physical norm `⟨Φ(t)|Θ(t)|Φ(t)⟩`
//! even when the metric itself depends on time. The crate provides
//!
//! * [`cmatrix`] — dense complex matrices with Hermitian and general
//!   eigensolvers sized for small dimensions,
//! * [`biortho`] — biorthogonal eigensystems (right kets, left "ketkets")
//!   with the κ-renormalization freedom,
//! * [`metric`] — metric construction from biorthogonal systems, principal
//!   square roots, Hermitization, and observable-compatible weight solving,
//! * [`twolevel`] — the closed-form two-level model family,
//! * [`evolve`] — the time-dependent propagation engine and its diagnostics.

pub mod biortho;
pub mod cmatrix;
pub mod evolve;
pub mod metric;
pub mod twolevel;

pub use cmatrix::{c64, Complex64, HermEig, Matrix, MatrixError, Vector};
