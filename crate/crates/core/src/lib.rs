//! Workbench for 2x2 matrix differential operators that preserve
//! finite-dimensional polynomial vector spaces.
//!
//! The central question: given an operator `H` whose entries are sums of
//! terms `c * x^p * d^q/dx^q`, does `H` map some space
//! `span{(p_d1, q_d2)}` of polynomial 2-vectors into itself? When it does,
//! the restriction of `H` to that space is a finite matrix and part of the
//! spectrum ("algebraic eigenvalues") comes out of plain linear algebra.
//!
//! The crate is organised bottom-up:
//!
//! - [`poly`], [`roots`], [`matrix`]: complex polynomials, a polynomial
//!   root finder, and small dense complex matrices with an eigensolver.
//! - [`diffop`]: operator terms, application to polynomial 2-vectors, and
//!   the degree grading that splits `H = H_1 + H_0 + ...`.
//! - [`mod@certify`]: extraction of the constant matrices `M_1`, `M~_1`, `M_0`
//!   from the graded pieces, the algebraic invariance conditions, and a
//!   brute-force closure test that serves as ground truth.
//! - [`spectrum`]: invariant-basis construction, the restricted matrix,
//!   and its eigenvalues.
//! - [`models`]: the four built-in operator families (sextic, trigonometric,
//!   hyperbolic, quartic) with their parameter solvers and PT checks.
//! - [`recurrence`]: the four-term recurrence formulation of the quartic
//!   family and its determinant quantisation, used as an independent
//!   cross-check on the restricted-matrix spectra.

pub mod certify;
pub mod diffop;
pub mod error;
pub mod matrix;
pub mod models;
pub mod poly;
pub mod recurrence;
pub mod roots;
pub mod spectrum;

/// Complex scalar used throughout: double-precision complex floating point.
pub type C64 = num_complex::Complex64;

pub use certify::{certify, closure_check, extract_matrices, QESCertificate, Verdict};
pub use diffop::{DegreeProfile, GradedDecomposition, MatrixDiffOp, OpTerm};
pub use error::Error;
pub use matrix::{CMatrix, KernelResult};
pub use poly::{Poly, PolyVec2};
pub use spectrum::{algebraic_spectrum, build_basis, matrix_rep, InvariantBasis, SpectrumResult};

/// Shorthand complex constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
