//! Hyperbolic Razavi-type family.
//!
//! Diagonal potential `-(rho cosh 2x - iM)^2` with linear off-diagonals
//! `C z + C~` and `D z + D~` in the gauged variable `z = cosh 2x - 1`.
//! Internally the family is parameterized by `N = (M-1)/2` and
//! `N~ = (M~-1)/2`.

use crate::diffop::{DegreeProfile, MatrixDiffOp, OpTerm};
use crate::error::Error;
use crate::{c64, C64};
use serde::{Deserialize, Serialize};

/// Hyperbolic family parameters. `big_n` is the shifted coupling
/// `N = (M - 1)/2` of component 1, `big_n_tilde` its partner.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "HyperParamsDoc", into = "HyperParamsDoc")]
pub struct HyperParams {
    pub n: u32,
    pub rho: f64,
    pub big_n: f64,
    pub big_n_tilde: f64,
    pub c: C64,
    pub d: C64,
    pub c_tilde: C64,
    pub d_tilde: C64,
}

#[derive(Serialize, Deserialize, Clone)]
struct HyperParamsDoc {
    n: u32,
    rho: f64,
    big_n: f64,
    big_n_tilde: f64,
    c_re: f64,
    c_im: f64,
    d_re: f64,
    d_im: f64,
    c_tilde_re: f64,
    c_tilde_im: f64,
    d_tilde_re: f64,
    d_tilde_im: f64,
}

impl From<HyperParamsDoc> for HyperParams {
    fn from(d: HyperParamsDoc) -> Self {
        HyperParams {
            n: d.n,
            rho: d.rho,
            big_n: d.big_n,
            big_n_tilde: d.big_n_tilde,
            c: c64(d.c_re, d.c_im),
            d: c64(d.d_re, d.d_im),
            c_tilde: c64(d.c_tilde_re, d.c_tilde_im),
            d_tilde: c64(d.d_tilde_re, d.d_tilde_im),
        }
    }
}

impl From<HyperParams> for HyperParamsDoc {
    fn from(p: HyperParams) -> Self {
        HyperParamsDoc {
            n: p.n,
            rho: p.rho,
            big_n: p.big_n,
            big_n_tilde: p.big_n_tilde,
            c_re: p.c.re,
            c_im: p.c.im,
            d_re: p.d.re,
            d_im: p.d.im,
            c_tilde_re: p.c_tilde.re,
            c_tilde_im: p.c_tilde.im,
            d_tilde_re: p.d_tilde.re,
            d_tilde_im: p.d_tilde.im,
        }
    }
}

impl HyperParams {
    /// Potential coupling `M = 2N + 1` of component 1.
    pub fn m(&self) -> f64 {
        2.0 * self.big_n + 1.0
    }

    pub fn m_tilde(&self) -> f64 {
        2.0 * self.big_n_tilde + 1.0
    }
}

/// Gauged hyperbolic operator in `z = cosh 2x - 1`, profile `(n, n)`.
pub fn hyper_operator(p: &HyperParams) -> (MatrixDiffOp, DegreeProfile) {
    let rho = p.rho;
    let i_rho = c64(0.0, rho);
    let mut terms: Vec<OpTerm> = Vec::new();
    for (entry, nn) in [(1u8, p.big_n), (2u8, p.big_n_tilde)] {
        // -4z(z+2) d^2 - 4(z+1) d - 8 i rho z d - rho^2
        //   - 4 i rho (z^2 d - N z) + 4 i rho N + (2N+1)^2
        terms.push(OpTerm::new(entry, entry, 2, 2, c64(-4.0, 0.0)));
        terms.push(OpTerm::new(entry, entry, 1, 2, c64(-8.0, 0.0)));
        terms.push(OpTerm::new(entry, entry, 1, 1, c64(-4.0, -8.0 * rho)));
        terms.push(OpTerm::new(entry, entry, 0, 1, c64(-4.0, 0.0)));
        terms.push(OpTerm::new(entry, entry, 2, 1, -4.0 * i_rho));
        terms.push(OpTerm::new(entry, entry, 1, 0, 4.0 * i_rho * nn));
        terms.push(OpTerm::new(
            entry,
            entry,
            0,
            0,
            c64(-rho * rho + (2.0 * nn + 1.0).powi(2), 0.0) + 4.0 * i_rho * nn,
        ));
    }
    terms.push(OpTerm::new(1, 2, 1, 0, p.c));
    terms.push(OpTerm::new(1, 2, 0, 0, p.c_tilde));
    terms.push(OpTerm::new(2, 1, 1, 0, p.d));
    terms.push(OpTerm::new(2, 1, 0, 0, p.d_tilde));
    (
        MatrixDiffOp::from_terms(terms),
        DegreeProfile::new(p.n, p.n),
    )
}

/// Completes `(n, N, rho, C, C~)` to a certified parameter set:
/// `N~ = 2n - 1 - N`, `D = -16 rho^2 (n - N)(n - N~) / C`, and `D~` from the
/// `M_0` eigenvector condition with `(alpha_0, beta_0) = (1, 4 i rho (n-N)/C)`.
pub fn hyper_qes_params(
    n: u32,
    big_n: f64,
    rho: f64,
    c: C64,
    c_tilde: C64,
) -> Result<HyperParams, Error> {
    assert!(n >= 1, "n must be a positive integer");
    assert!(rho != 0.0, "rho must be nonzero");
    if c.norm() == 0.0 {
        return Err(Error::DivisionByZero("C must be nonzero"));
    }
    let nf = n as f64;
    if (nf - big_n).abs() < 1e-12 * (1.0 + big_n.abs()) {
        return Err(Error::DegenerateKernel);
    }
    let big_n_tilde = 2.0 * nf - 1.0 - big_n;
    let d = c64(-16.0 * rho * rho * (nf - big_n) * (nf - big_n_tilde), 0.0) / c;
    let beta0 = c64(0.0, 4.0 * rho * (nf - big_n)) / c;
    let d_tilde = c_tilde * beta0 * beta0
        + 4.0 * (big_n - big_n_tilde) * (c64(2.0 * nf, rho)) * beta0;
    Ok(HyperParams {
        n,
        rho,
        big_n,
        big_n_tilde,
        c,
        d,
        c_tilde,
        d_tilde,
    })
}

/// Original x-space potential matrix at (possibly complex) `x`.
pub fn hyper_potential(p: &HyperParams, x: C64) -> [[C64; 2]; 2] {
    let ch = (2.0 * x).cosh();
    let z = ch - c64(1.0, 0.0);
    let diag = |m: f64| {
        let w = p.rho * ch - c64(0.0, m);
        -(w * w)
    };
    [
        [diag(p.m()), p.c * z + p.c_tilde],
        [p.d * z + p.d_tilde, diag(p.m_tilde())],
    ]
}
