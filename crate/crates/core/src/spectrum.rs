//! Invariant-basis construction, the restricted finite matrix, and the
//! algebraic spectrum.

use crate::certify::{QESCertificate, Verdict};
use crate::diffop::{DegreeProfile, MatrixDiffOp};
use crate::error::Error;
use crate::matrix::CMatrix;
use crate::poly::PolyVec2;
use crate::C64;
use serde::Serialize;

/// Default relative tolerance for classifying an eigenvalue as real.
pub const DEFAULT_REALNESS_TOL: f64 = 1e-8;

/// Basis of the invariant space implied by a certificate.
///
/// Rank 1: the locked top vector `(a0 x^d1, b0 x^d2)` plus all lower
/// monomials in each component; dimension `d1 + d2 + 1`.
/// Rank 0: every monomial up to `(d1, d2)` independently; dimension
/// `d1 + d2 + 2`.
#[derive(Debug, Clone)]
pub struct InvariantBasis {
    profile: DegreeProfile,
    vectors: Vec<PolyVec2>,
    locked_ratio: Option<[C64; 2]>,
}

impl InvariantBasis {
    pub fn profile(&self) -> DegreeProfile {
        self.profile
    }

    pub fn vectors(&self) -> &[PolyVec2] {
        &self.vectors
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    pub fn locked_ratio(&self) -> Option<[C64; 2]> {
        self.locked_ratio
    }
}

/// Builds the invariant basis for a certified operator.
pub fn build_basis(
    cert: &QESCertificate,
    profile: DegreeProfile,
) -> Result<InvariantBasis, Error> {
    let one = C64::new(1.0, 0.0);
    match cert.verdict {
        Verdict::Failed => Err(Error::NotCertified),
        Verdict::CertifiedRank1 => {
            let k = cert.kernel.expect("rank-1 certificate carries a kernel");
            let d1 = profile.d1 as usize;
            let d2 = profile.d2 as usize;
            let mut vectors = Vec::with_capacity(d1 + d2 + 1);
            let locked = PolyVec2::monomial(0, d1, k[0]).add(&PolyVec2::monomial(1, d2, k[1]));
            vectors.push(locked);
            for deg in 0..d1 {
                vectors.push(PolyVec2::monomial(0, deg, one));
            }
            for deg in 0..d2 {
                vectors.push(PolyVec2::monomial(1, deg, one));
            }
            Ok(InvariantBasis {
                profile,
                vectors,
                locked_ratio: Some(k),
            })
        }
        Verdict::CertifiedRank0 => {
            let d1 = profile.d1 as usize;
            let d2 = profile.d2 as usize;
            let mut vectors = Vec::with_capacity(d1 + d2 + 2);
            for deg in 0..=d1 {
                vectors.push(PolyVec2::monomial(0, deg, one));
            }
            for deg in 0..=d2 {
                vectors.push(PolyVec2::monomial(1, deg, one));
            }
            Ok(InvariantBasis {
                profile,
                vectors,
                locked_ratio: None,
            })
        }
    }
}

/// Restriction of the operator to the basis by coefficient matching.
///
/// Returns the matrix whose column `j` holds the coordinates of
/// `op(basis[j])`, together with the largest relative out-of-span remainder.
/// With a locked top vector, its coordinate is read off the dominant
/// component and cross-checked against the other; the mismatch feeds the
/// residual.
pub fn matrix_rep(op: &MatrixDiffOp, basis: &InvariantBasis) -> Result<(CMatrix, f64), Error> {
    let n = basis.dimension();
    if n == 0 {
        return Err(Error::SingularBasis);
    }
    let d1 = basis.profile.d1 as usize;
    let d2 = basis.profile.d2 as usize;
    let mut rep = CMatrix::zeros(n, n);
    let mut worst: f64 = 0.0;

    for (j, v) in basis.vectors.iter().enumerate() {
        let img = op.apply(v);
        let img_norm = img.l2_norm();
        let mut top: Vec<C64> = (0..=d1).map(|k| img.top.coeff(k)).collect();
        let mut bot: Vec<C64> = (0..=d2).map(|k| img.bot.coeff(k)).collect();

        // Everything beyond the profile degrees can never be represented.
        let mut leftover = 0.0_f64;
        for (deg, c) in img.top.coeffs().iter().enumerate() {
            if deg > d1 {
                leftover += c.norm_sqr();
            }
        }
        for (deg, c) in img.bot.coeffs().iter().enumerate() {
            if deg > d2 {
                leftover += c.norm_sqr();
            }
        }

        let mut col = 0usize;
        if let Some(k) = basis.locked_ratio {
            // Locked coordinate from the dominant component; the other
            // component's top coefficient cross-checks it.
            let c0 = if k[0].norm() >= k[1].norm() {
                top[d1] / k[0]
            } else {
                bot[d2] / k[1]
            };
            top[d1] -= c0 * k[0];
            bot[d2] -= c0 * k[1];
            leftover += top[d1].norm_sqr() + bot[d2].norm_sqr();
            rep[(0, j)] = c0;
            col = 1;
            for (deg, &c) in top.iter().enumerate().take(d1) {
                rep[(col + deg, j)] = c;
            }
            col += d1;
            for (deg, &c) in bot.iter().enumerate().take(d2) {
                rep[(col + deg, j)] = c;
            }
        } else {
            for (deg, &c) in top.iter().enumerate() {
                rep[(col + deg, j)] = c;
            }
            col += d1 + 1;
            for (deg, &c) in bot.iter().enumerate() {
                rep[(col + deg, j)] = c;
            }
        }

        if img_norm > 0.0 {
            worst = worst.max(leftover.sqrt() / img_norm);
        }
    }
    Ok((rep, worst))
}

/// Algebraic spectrum with realness classification.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumResult {
    /// Eigenvalues as `[re, im]` pairs.
    pub eigenvalues: Vec<[f64; 2]>,
    pub real_count: usize,
    pub closure_residual: f64,
    pub realness_tol: f64,
}

impl SpectrumResult {
    pub fn eigenvalues_c64(&self) -> Vec<C64> {
        self.eigenvalues
            .iter()
            .map(|e| C64::new(e[0], e[1]))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }

    /// Minimum pairwise eigenvalue distance (level-crossing diagnostic).
    pub fn min_gap(&self) -> f64 {
        let ev = self.eigenvalues_c64();
        let mut best = f64::INFINITY;
        for i in 0..ev.len() {
            for j in i + 1..ev.len() {
                best = best.min((ev[i] - ev[j]).norm());
            }
        }
        best
    }
}

/// An eigenvalue is counted real when `|Im| <= tol * (1 + |Re|)`.
pub fn is_real(e: C64, realness_tol: f64) -> bool {
    e.im.abs() <= realness_tol * (1.0 + e.re.abs())
}

/// Builds the basis, restricts the operator, and solves the eigenproblem.
pub fn algebraic_spectrum(
    op: &MatrixDiffOp,
    cert: &QESCertificate,
    profile: DegreeProfile,
    realness_tol: f64,
) -> Result<SpectrumResult, Error> {
    let basis = build_basis(cert, profile)?;
    let (rep, closure_residual) = matrix_rep(op, &basis)?;
    let eigs = rep.eig()?;
    let real_count = eigs.iter().filter(|&&e| is_real(e, realness_tol)).count();
    Ok(SpectrumResult {
        eigenvalues: eigs.iter().map(|e| [e.re, e.im]).collect(),
        real_count,
        closure_residual,
        realness_tol,
    })
}
