//! Sextic matrix oscillator in its gauged form.
//!
//! After factoring the exponential weight out of the wavefunction and moving
//! to `x = y^2`, the operator reads
//! `(-4x d^2 - 2 d) I + 8 p2 diag(J_+(m-2), J_+(m)) - 8 m p2 k0 sigma_1`,
//! preserving vectors with component degrees `(m-1, m)`. The space locks the
//! top-coefficient ratio to `alpha_0 / beta_0 = m k0`.

use crate::diffop::{j_plus, DegreeProfile, MatrixDiffOp, OpTerm};
use crate::{c64, C64};
use serde::{Deserialize, Serialize};

/// Parameters of the sextic family (the simplified branch: `eps = 0`,
/// `p1 = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SexticParams {
    pub m: u32,
    pub p2: f64,
    pub kappa0: f64,
}

impl SexticParams {
    pub fn new(m: u32, p2: f64, kappa0: f64) -> Self {
        assert!(m >= 1, "m must be a positive integer");
        assert!(p2 > 0.0, "p2 must be positive");
        SexticParams { m, p2, kappa0 }
    }
}

/// Gauged sextic operator with profile `(m-1, m)`.
pub fn sextic_operator(p: &SexticParams) -> (MatrixDiffOp, DegreeProfile) {
    let m = p.m as f64;
    let eight_p2 = c64(8.0 * p.p2, 0.0);
    let coupling = c64(-8.0 * m * p.p2 * p.kappa0, 0.0);
    let mut terms: Vec<OpTerm> = Vec::new();
    for entry in 1..=2u8 {
        terms.push(OpTerm::new(entry, entry, 1, 2, c64(-4.0, 0.0)));
        terms.push(OpTerm::new(entry, entry, 0, 1, c64(-2.0, 0.0)));
    }
    terms.extend(j_plus(1, m - 2.0, eight_p2));
    terms.extend(j_plus(2, m, eight_p2));
    terms.push(OpTerm::new(1, 2, 0, 0, coupling));
    terms.push(OpTerm::new(2, 1, 0, 0, coupling));
    (
        MatrixDiffOp::from_terms(terms),
        DegreeProfile::new(p.m - 1, p.m),
    )
}

/// The expected locked top-coefficient ratio `alpha_0 / beta_0 = m kappa_0`.
pub fn sextic_kernel_ratio(p: &SexticParams) -> C64 {
    c64(p.m as f64 * p.kappa0, 0.0)
}
