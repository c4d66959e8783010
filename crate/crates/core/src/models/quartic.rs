//! Quartic anharmonic PT family in its doubly-gauged form.
//!
//! An exponential gauge with cubic exponent followed by the triangular
//! substitution `S = [[1, lambda d/dx], [0, 1]]` brings the operator to
//! polynomial coefficients; the result manifestly preserves vectors with
//! component degrees `(n-2, n)` because both diagonal ladders `J_+(n-2)`
//! and `J_+(n)` annihilate their top monomials (so `M_1 = 0`, rank 0).

use crate::diffop::{j_plus, DegreeProfile, MatrixDiffOp, OpTerm};
use crate::{c64, C64};
use serde::{Deserialize, Serialize};

/// Quartic family parameters. `a`, `b`, `d`, `wtilde` are free reals;
/// `lambda` is the free complex gauge parameter (nonzero).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "QuarticParamsDoc", into = "QuarticParamsDoc")]
pub struct QuarticParams {
    pub n: u32,
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub wtilde: f64,
    pub lambda: C64,
}

#[derive(Serialize, Deserialize, Clone)]
struct QuarticParamsDoc {
    n: u32,
    a: f64,
    b: f64,
    d: f64,
    wtilde: f64,
    lambda_re: f64,
    lambda_im: f64,
}

impl From<QuarticParamsDoc> for QuarticParams {
    fn from(d: QuarticParamsDoc) -> Self {
        QuarticParams {
            n: d.n,
            a: d.a,
            b: d.b,
            d: d.d,
            wtilde: d.wtilde,
            lambda: c64(d.lambda_re, d.lambda_im),
        }
    }
}

impl From<QuarticParams> for QuarticParamsDoc {
    fn from(p: QuarticParams) -> Self {
        QuarticParamsDoc {
            n: p.n,
            a: p.a,
            b: p.b,
            d: p.d,
            wtilde: p.wtilde,
            lambda_re: p.lambda.re,
            lambda_im: p.lambda.im,
        }
    }
}

impl QuarticParams {
    pub fn new(n: u32, a: f64, b: f64, d: f64, wtilde: f64, lambda: C64) -> Self {
        assert!(n >= 2, "n must be at least 2");
        assert!(lambda.norm() > 0.0, "lambda must be nonzero");
        QuarticParams {
            n,
            a,
            b,
            d,
            wtilde,
            lambda,
        }
    }

    /// The drift combination `G = B - A^2/4`.
    pub fn g(&self) -> f64 {
        self.b - self.a * self.a / 4.0
    }

    /// Upper coupling fixed by the gauge: `omega = -2 i lambda n`.
    pub fn omega(&self) -> C64 {
        c64(0.0, -2.0) * self.lambda * self.n as f64
    }

    /// x-space linear coefficient of component 1: `C = 2n - 2 + A G / 2`.
    pub fn c_coupling(&self) -> f64 {
        2.0 * self.n as f64 - 2.0 + self.a * self.g() / 2.0
    }

    /// x-space linear coefficient of component 2: `C~ = 2n + 2 + A G / 2`.
    pub fn c_tilde_coupling(&self) -> f64 {
        2.0 * self.n as f64 + 2.0 + self.a * self.g() / 2.0
    }

    /// Component-2 constant `D~ = -A + D`.
    pub fn d_tilde(&self) -> f64 {
        -self.a + self.d
    }
}

/// Doubly-gauged quartic operator with profile `(n-2, n)`.
pub fn quartic_operator(p: &QuarticParams) -> (MatrixDiffOp, DegreeProfile) {
    let g = p.g();
    let base = c64(p.d + g * g / 4.0, 0.0);
    let wl = p.wtilde * p.lambda;
    let mut terms: Vec<OpTerm> = Vec::new();
    for (entry, sign, shift) in [(1u8, 1.0, p.n as f64 - 2.0), (2u8, -1.0, p.n as f64)] {
        terms.push(OpTerm::new(entry, entry, 0, 2, c64(-1.0, 0.0)));
        terms.push(OpTerm::new(entry, entry, 1, 1, c64(p.a, 0.0)));
        terms.push(OpTerm::new(entry, entry, 0, 1, c64(0.0, -g) - sign * wl));
        terms.push(OpTerm::new(entry, entry, 0, 0, base + c64(sign * p.a / 2.0, 0.0)));
        terms.extend(j_plus(entry, shift, c64(0.0, 2.0)));
    }
    terms.push(OpTerm::new(1, 2, 0, 2, -c64(p.wtilde, 0.0) * p.lambda * p.lambda));
    terms.push(OpTerm::new(2, 1, 0, 0, c64(p.wtilde, 0.0)));
    (
        MatrixDiffOp::from_terms(terms),
        DegreeProfile::new(p.n - 2, p.n),
    )
}

/// Original x-space potential matrix at (possibly complex) `x`.
///
/// `V_11 = -x^4 + iA x^3 + B x^2 + iC x + D` with the derived `C`; component
/// 2 swaps in `C~` and `D~`; the off-diagonal constants are `omega` and
/// `omega~`. The matrix is PT-symmetric under `x -> -x` plus conjugation
/// exactly when `omega` is real, i.e. when `lambda` is purely imaginary.
pub fn quartic_potential(p: &QuarticParams, x: C64) -> [[C64; 2]; 2] {
    let x2 = x * x;
    let x3 = x2 * x;
    let x4 = x2 * x2;
    let diag = |c_lin: f64, d_const: f64| {
        -x4 + c64(0.0, p.a) * x3 + p.b * x2 + c64(0.0, c_lin) * x + c64(d_const, 0.0)
    };
    [
        [diag(p.c_coupling(), p.d), p.omega()],
        [c64(p.wtilde, 0.0), diag(p.c_tilde_coupling(), p.d_tilde())],
    ]
}
