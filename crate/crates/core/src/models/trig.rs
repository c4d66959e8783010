//! Trigonometric (periodic Razavi-type) family.
//!
//! Diagonal potential `(rho cos 2x - iM)^2 + A` with an off-diagonal menu.
//! The gauge weight `exp(i rho cos(2x)/2)` and per-component powers
//! `z^eps (1-z)^phi`, `z = (cos 2x + 1)/2`, map the operator to polynomial
//! coefficients in `z`. For the `sin x cos x` coupling there are four
//! algebraisations (wavefunction types I-IV) distinguished by their
//! `(eps, phi)` assignments; the sign branch is fixed by
//! `sin x cos x = +sqrt(z(1-z))`.

use crate::diffop::{DegreeProfile, MatrixDiffOp, OpTerm};
use crate::error::Error;
use crate::{c64, C64};
use serde::{Deserialize, Serialize};

/// Wavefunction algebraisation types for the `sin x cos x` coupling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WaveType {
    I,
    II,
    III,
    IV,
}

impl WaveType {
    /// Gauge exponents `(eps, phi, eps~, phi~)`.
    fn gauges(&self) -> (f64, f64, f64, f64) {
        match self {
            WaveType::I => (0.0, 0.0, 0.5, 0.5),
            WaveType::II => (0.5, 0.5, 0.0, 0.0),
            WaveType::III => (0.0, 0.5, 0.5, 0.0),
            WaveType::IV => (0.5, 0.0, 0.0, 0.5),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            WaveType::I => "i",
            WaveType::II => "ii",
            WaveType::III => "iii",
            WaveType::IV => "iv",
        }
    }

    pub fn parse(s: &str) -> Option<WaveType> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Some(WaveType::I),
            "ii" | "2" => Some(WaveType::II),
            "iii" | "3" => Some(WaveType::III),
            "iv" | "4" => Some(WaveType::IV),
            _ => None,
        }
    }
}

/// Off-diagonal coupling menu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OffDiag {
    /// `C sin x cos x`; the case with the four wavefunction types.
    #[serde(rename = "sinxcosx")]
    SinXCosX,
    /// `C cos 2x + D` (experimental: no parameter solver).
    #[serde(rename = "cos2x_plus_d")]
    Cos2xPlusD,
    /// `C cos x` (experimental: no parameter solver).
    #[serde(rename = "cosx")]
    CosX,
    /// `C sin x` (experimental: no parameter solver).
    #[serde(rename = "sinx")]
    SinX,
}

/// Trigonometric family parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "TrigParamsDoc", into = "TrigParamsDoc")]
pub struct TrigParams {
    pub n: u32,
    pub rho: f64,
    pub m: f64,
    pub m_tilde: f64,
    pub c: C64,
    pub c_tilde: C64,
    pub a: f64,
    pub a_tilde: f64,
    pub wtype: WaveType,
    pub offdiag: OffDiag,
    /// Constant parts of the `cos 2x + D` menu entry; unused otherwise.
    pub d: C64,
    pub d_tilde: C64,
}

/// Serialized form: complex values split into `_re`/`_im` pairs.
#[derive(Serialize, Deserialize, Clone)]
struct TrigParamsDoc {
    n: u32,
    rho: f64,
    m: f64,
    m_tilde: f64,
    c_re: f64,
    c_im: f64,
    c_tilde_re: f64,
    c_tilde_im: f64,
    a: f64,
    a_tilde: f64,
    wtype: WaveType,
    offdiag: OffDiag,
    #[serde(default)]
    d_re: f64,
    #[serde(default)]
    d_im: f64,
    #[serde(default)]
    d_tilde_re: f64,
    #[serde(default)]
    d_tilde_im: f64,
}

impl From<TrigParamsDoc> for TrigParams {
    fn from(d: TrigParamsDoc) -> Self {
        TrigParams {
            n: d.n,
            rho: d.rho,
            m: d.m,
            m_tilde: d.m_tilde,
            c: c64(d.c_re, d.c_im),
            c_tilde: c64(d.c_tilde_re, d.c_tilde_im),
            a: d.a,
            a_tilde: d.a_tilde,
            wtype: d.wtype,
            offdiag: d.offdiag,
            d: c64(d.d_re, d.d_im),
            d_tilde: c64(d.d_tilde_re, d.d_tilde_im),
        }
    }
}

impl From<TrigParams> for TrigParamsDoc {
    fn from(p: TrigParams) -> Self {
        TrigParamsDoc {
            n: p.n,
            rho: p.rho,
            m: p.m,
            m_tilde: p.m_tilde,
            c_re: p.c.re,
            c_im: p.c.im,
            c_tilde_re: p.c_tilde.re,
            c_tilde_im: p.c_tilde.im,
            a: p.a,
            a_tilde: p.a_tilde,
            wtype: p.wtype,
            offdiag: p.offdiag,
            d_re: p.d.re,
            d_im: p.d.im,
            d_tilde_re: p.d_tilde.re,
            d_tilde_im: p.d_tilde.im,
        }
    }
}

/// Gauged diagonal component in `z`: terms `(power, deriv, coeff)`.
///
/// Conjugating `-d^2/dx^2 + (rho cos 2x - iM)^2 + A` by
/// `exp(i rho cos(2x)/2) z^eps (1-z)^phi` and switching to
/// `z = (cos 2x + 1)/2` gives, for `eps`, `phi` in {0, 1/2} (which kills the
/// singular terms):
fn gauged_diag(m: f64, a: f64, eps: f64, phi: f64, rho: f64) -> [(u32, u32, C64); 7] {
    let i_rho = c64(0.0, rho);
    [
        (1, 2, c64(-4.0, 0.0)),
        (2, 2, c64(4.0, 0.0)),
        (0, 1, c64(-2.0 - 8.0 * eps, 0.0)),
        (1, 1, c64(4.0 + 8.0 * eps + 8.0 * phi, -8.0 * rho)),
        (2, 1, 8.0 * i_rho),
        (
            0,
            0,
            c64(
                rho * rho - m * m + a + 8.0 * eps * phi + 2.0 * eps + 2.0 * phi,
                0.0,
            ) - 2.0 * i_rho * (1.0 - m)
                - 8.0 * i_rho * eps,
        ),
        (1, 0, i_rho * (4.0 * (1.0 - m) + 8.0 * eps + 8.0 * phi)),
    ]
}

/// `coupling * z^zpow * (1-z)^opow` as constant (deriv-free) terms, for
/// exponents in {0, 1}.
fn off_poly(zpow: i32, opow: i32, coupling: C64) -> Vec<(u32, C64)> {
    match (zpow, opow) {
        (0, 0) => vec![(0, coupling)],
        (1, 0) => vec![(1, coupling)],
        (0, 1) => vec![(0, coupling), (1, -coupling)],
        (1, 1) => vec![(1, coupling), (2, -coupling)],
        _ => unreachable!("off-diagonal exponents stay in {{0, 1}}"),
    }
}

/// Builds the gauged trigonometric operator and its degree profile.
///
/// Types II-IV require the `sin x cos x` coupling; the other menu entries
/// are constructible with `wtype = I` (treated as "default") and profile
/// `(n, n)`, for experimentation through the generic certification path.
pub fn trig_operator(p: &TrigParams) -> Result<(MatrixDiffOp, DegreeProfile), Error> {
    if p.offdiag != OffDiag::SinXCosX && p.wtype != WaveType::I {
        return Err(Error::UnsupportedCombination);
    }
    let n = p.n;
    let (eps, phi, eps_t, phi_t) = match p.offdiag {
        OffDiag::SinXCosX => p.wtype.gauges(),
        OffDiag::Cos2xPlusD => (0.0, 0.0, 0.0, 0.0),
        OffDiag::CosX => (0.5, 0.0, 0.0, 0.0),
        OffDiag::SinX => (0.0, 0.5, 0.0, 0.0),
    };
    let mut terms: Vec<OpTerm> = Vec::new();
    for (pw, q, c) in gauged_diag(p.m, p.a, eps, phi, p.rho) {
        terms.push(OpTerm::new(1, 1, pw, q, c));
    }
    for (pw, q, c) in gauged_diag(p.m_tilde, p.a_tilde, eps_t, phi_t, p.rho) {
        terms.push(OpTerm::new(2, 2, pw, q, c));
    }

    match p.offdiag {
        OffDiag::SinXCosX => {
            // H~_12 = z^(eps~-eps) (1-z)^(phi~-phi) * C sqrt(z(1-z)), and the
            // mirrored expression for H~_21; exponents land in {0, 1}.
            let e12 = ((eps_t - eps + 0.5).round() as i32, (phi_t - phi + 0.5).round() as i32);
            let e21 = ((eps - eps_t + 0.5).round() as i32, (phi - phi_t + 0.5).round() as i32);
            for (pw, c) in off_poly(e12.0, e12.1, p.c) {
                terms.push(OpTerm::new(1, 2, pw, 0, c));
            }
            for (pw, c) in off_poly(e21.0, e21.1, p.c_tilde) {
                terms.push(OpTerm::new(2, 1, pw, 0, c));
            }
        }
        OffDiag::Cos2xPlusD => {
            // cos 2x = 2z - 1.
            terms.push(OpTerm::new(1, 2, 1, 0, 2.0 * p.c));
            terms.push(OpTerm::new(1, 2, 0, 0, p.d - p.c));
            terms.push(OpTerm::new(2, 1, 1, 0, 2.0 * p.c_tilde));
            terms.push(OpTerm::new(2, 1, 0, 0, p.d_tilde - p.c_tilde));
        }
        OffDiag::CosX => {
            // cos x = z^(1/2): H~_12 = C, H~_21 = C~ z.
            terms.push(OpTerm::new(1, 2, 0, 0, p.c));
            terms.push(OpTerm::new(2, 1, 1, 0, p.c_tilde));
        }
        OffDiag::SinX => {
            // sin x = (1-z)^(1/2): H~_12 = C, H~_21 = C~ (1 - z).
            terms.push(OpTerm::new(1, 2, 0, 0, p.c));
            terms.push(OpTerm::new(2, 1, 0, 0, p.c_tilde));
            terms.push(OpTerm::new(2, 1, 1, 0, -p.c_tilde));
        }
    }

    let profile = match (p.offdiag, p.wtype) {
        (OffDiag::SinXCosX, WaveType::I) => DegreeProfile::new(n, n - 1),
        (OffDiag::SinXCosX, WaveType::II) => DegreeProfile::new(n - 1, n),
        (OffDiag::SinXCosX, _) => DegreeProfile::new(n, n),
        _ => DegreeProfile::new(n, n),
    };
    Ok((MatrixDiffOp::from_terms(terms), profile))
}

/// Completes `(n, M, rho, C)` to a certified parameter set for the given
/// wavefunction type (with the convention `A = 0`).
///
/// Types I/II: `M~ = 4n - M`, `C C~ = 16 rho^2 ((1 - 4n^2) + M M~)`.
/// Types III/IV: `M~ = 4n + 2 - M`, `C C~ = 16 rho^2 (M M~ - 4n(n+1))`.
/// Both: `A - A~ = M^2 - M~^2`.
///
/// Convention: only `A - A~` is constrained, so the absolute eigenvalues
/// depend on the choice of `A`. Moving from `A = 0` to another value `A'`
/// shifts the whole operator by `A' . I` (the tilde side moves with it),
/// so spectra differ by an exact constant; with `A = M^2` the type-i n=1
/// doublet sits at `rho^2 + 2 +- 2 sqrt(1 - rho^2 (1-M)^2)`, and under
/// `A = 0` it is lower by exactly `M^2`. Compare eigenvalue differences,
/// never absolute values.
pub fn trig_qes_params(
    n: u32,
    m: f64,
    rho: f64,
    c: C64,
    wtype: WaveType,
) -> Result<TrigParams, Error> {
    assert!(n >= 1, "n must be a positive integer");
    assert!(rho != 0.0, "rho must be nonzero");
    let nf = n as f64;
    let (m_tilde, product) = match wtype {
        WaveType::I | WaveType::II => {
            let mt = 4.0 * nf - m;
            (mt, 16.0 * rho * rho * ((1.0 - 4.0 * nf * nf) + m * mt))
        }
        WaveType::III | WaveType::IV => {
            let mt = 4.0 * nf + 2.0 - m;
            (mt, 16.0 * rho * rho * (m * mt - 4.0 * nf * (nf + 1.0)))
        }
    };
    let c_tilde = if c.norm() == 0.0 {
        if product.abs() > 0.0 {
            return Err(Error::DivisionByZero(
                "C = 0 but the coupling product is nonzero",
            ));
        }
        c64(0.0, 0.0)
    } else {
        c64(product, 0.0) / c
    };
    let a = 0.0;
    let a_tilde = a - (m * m - m_tilde * m_tilde);
    Ok(TrigParams {
        n,
        rho,
        m,
        m_tilde,
        c,
        c_tilde,
        a,
        a_tilde,
        wtype,
        offdiag: OffDiag::SinXCosX,
        d: c64(0.0, 0.0),
        d_tilde: c64(0.0, 0.0),
    })
}

/// Original x-space potential matrix, evaluated at (possibly complex) `x`.
pub fn trig_potential(p: &TrigParams, x: C64) -> [[C64; 2]; 2] {
    let cos2x = (2.0 * x).cos();
    let diag = |m: f64, a: f64| {
        let w = p.rho * cos2x - c64(0.0, m);
        w * w + c64(a, 0.0)
    };
    let f = match p.offdiag {
        OffDiag::SinXCosX => x.sin() * x.cos(),
        OffDiag::Cos2xPlusD => cos2x,
        OffDiag::CosX => x.cos(),
        OffDiag::SinX => x.sin(),
    };
    let (extra12, extra21) = match p.offdiag {
        OffDiag::Cos2xPlusD => (p.d, p.d_tilde),
        _ => (c64(0.0, 0.0), c64(0.0, 0.0)),
    };
    [
        [diag(p.m, p.a), p.c * f + extra12],
        [p.c_tilde * f + extra21, diag(p.m_tilde, p.a_tilde)],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::{certify, extract_matrices, Verdict, DEFAULT_TOL};
    use crate::diffop::grade_of;

    #[test]
    fn solver_examples() {
        // Type I, n=1, M=1: M~ = 3 and the product vanishes, so C~ = 0.
        let p = trig_qes_params(1, 1.0, 0.3, c64(1.0, 0.0), WaveType::I).unwrap();
        assert_eq!(p.m_tilde, 3.0);
        assert!(p.c_tilde.norm() < 1e-15);

        // Type I, n=2, M=1: C C~ = -128 rho^2.
        let rho = 0.45;
        let p = trig_qes_params(2, 1.0, rho, c64(2.0, 0.0), WaveType::I).unwrap();
        assert_eq!(p.m_tilde, 7.0);
        let prod = p.c * p.c_tilde;
        assert!((prod - c64(-128.0 * rho * rho, 0.0)).norm() < 1e-12);

        // Type III, n=1, M=1: M~ = 5, C C~ = -48 rho^2.
        let p = trig_qes_params(1, 1.0, rho, c64(1.0, 0.0), WaveType::III).unwrap();
        assert_eq!(p.m_tilde, 5.0);
        let prod = p.c * p.c_tilde;
        assert!((prod - c64(-48.0 * rho * rho, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn division_by_zero_detected() {
        assert!(matches!(
            trig_qes_params(2, 1.0, 0.5, c64(0.0, 0.0), WaveType::I),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn type_i_grade_one_piece_matches_display() {
        // Grade +1 of type I must be
        // [[8 i rho (z^2 d - ((M-1)/2) z), -C z^2], [C~, 8 i rho (z^2 d - ((M~-3)/2) z)]].
        let p = trig_qes_params(2, 0.8, 0.6, c64(1.5, 0.0), WaveType::I).unwrap();
        let (op, profile) = trig_operator(&p).unwrap();
        let g = op.grade_decompose(profile);
        let h1 = g.piece(1).expect("grade +1 piece");
        let rho = p.rho;
        let mut want = MatrixDiffOp::new();
        want.push(1, 1, 2, 1, c64(0.0, 8.0 * rho));
        want.push(1, 1, 1, 0, c64(0.0, -8.0 * rho) * c64((p.m - 1.0) / 2.0, 0.0));
        want.push(1, 2, 2, 0, -p.c);
        want.push(2, 1, 0, 0, p.c_tilde);
        want.push(2, 2, 2, 1, c64(0.0, 8.0 * rho));
        want.push(
            2,
            2,
            1,
            0,
            c64(0.0, -8.0 * rho) * c64((p.m_tilde - 3.0) / 2.0, 0.0),
        );
        for (a, b) in h1.terms().iter().zip(want.terms()) {
            assert_eq!((a.row, a.col, a.power, a.deriv), (b.row, b.col, b.power, b.deriv));
            assert!((a.coeff - b.coeff).norm() < 1e-12, "{a:?} vs {b:?}");
        }
        assert_eq!(h1.terms().len(), want.terms().len());
    }

    #[test]
    fn type_i_grade_zero_contains_common_scalar_piece() {
        // Grade 0 must contain (4 z^2 d^2 + (4 - 8 i rho) z d + rho^2) on both diagonals.
        let p = trig_qes_params(1, 0.4, 0.35, c64(1.0, 0.0), WaveType::I).unwrap();
        let (op, profile) = trig_operator(&p).unwrap();
        let g = op.grade_decompose(profile);
        let h0 = g.piece(0).expect("grade 0 piece");
        for entry in 1..=2u8 {
            let find = |pw: u32, q: u32| {
                h0.terms()
                    .iter()
                    .find(|t| (t.row, t.col, t.power, t.deriv) == (entry, entry, pw, q))
                    .map(|t| t.coeff)
                    .unwrap_or_else(|| c64(0.0, 0.0))
            };
            assert!((find(2, 2) - c64(4.0, 0.0)).norm() < 1e-14);
            let zd = find(1, 1);
            // (2,2) carries an extra 8 z d from the half-integer gauge powers.
            let want_re = if entry == 1 { 4.0 } else { 12.0 };
            assert!((zd - c64(want_re, -8.0 * p.rho)).norm() < 1e-12, "{zd}");
        }
    }

    #[test]
    fn all_types_certify_and_perturbation_fails() {
        for wtype in [WaveType::I, WaveType::II, WaveType::III, WaveType::IV] {
            for n in [1u32, 2] {
                let p = trig_qes_params(n, 0.7, 0.45, c64(1.0, 0.0), wtype).unwrap();
                let (op, profile) = trig_operator(&p).unwrap();
                let cert = certify(&op, profile, DEFAULT_TOL);
                assert_eq!(
                    cert.verdict,
                    Verdict::CertifiedRank1,
                    "{wtype:?} n={n}: {cert:?}"
                );

                let mut bad = p;
                bad.m_tilde += 0.1;
                let (op, profile) = trig_operator(&bad).unwrap();
                let cert = certify(&op, profile, DEFAULT_TOL);
                assert_eq!(cert.verdict, Verdict::Failed, "{wtype:?} n={n}");
            }
        }
    }

    #[test]
    fn types_i_and_ii_share_constraints_iii_and_iv_too() {
        let (n, m, rho, c) = (2u32, 0.9, 0.55, c64(1.3, 0.0));
        let p1 = trig_qes_params(n, m, rho, c, WaveType::I).unwrap();
        let p2 = trig_qes_params(n, m, rho, c, WaveType::II).unwrap();
        assert_eq!(p1.m_tilde, p2.m_tilde);
        assert_eq!(p1.c_tilde, p2.c_tilde);
        assert_eq!(p1.a - p1.a_tilde, p2.a - p2.a_tilde);

        let p3 = trig_qes_params(n, m, rho, c, WaveType::III).unwrap();
        let p4 = trig_qes_params(n, m, rho, c, WaveType::IV).unwrap();
        assert_eq!(p3.m_tilde, p4.m_tilde);
        assert_eq!(p3.c_tilde, p4.c_tilde);
        assert_eq!(p3.a - p3.a_tilde, p4.a - p4.a_tilde);
    }

    #[test]
    fn serde_spellings_and_round_trip() {
        assert_eq!(
            serde_json::to_string(&OffDiag::SinXCosX).unwrap(),
            "\"sinxcosx\""
        );
        assert_eq!(
            serde_json::to_string(&OffDiag::Cos2xPlusD).unwrap(),
            "\"cos2x_plus_d\""
        );
        assert_eq!(serde_json::to_string(&WaveType::III).unwrap(), "\"iii\"");

        let p = trig_qes_params(2, 1.0, 0.5, c64(1.0, 0.0), WaveType::I).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        for key in ["m_tilde", "c_re", "c_tilde_im", "a_tilde", "wtype", "offdiag"] {
            assert!(s.contains(key), "missing field {key} in {s}");
        }
        let back: TrigParams = serde_json::from_str(&s).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn unsupported_combination_rejected() {
        let mut p = trig_qes_params(1, 1.0, 0.5, c64(1.0, 0.0), WaveType::II).unwrap();
        p.offdiag = OffDiag::CosX;
        assert!(matches!(trig_operator(&p), Err(Error::UnsupportedCombination)));
    }

    #[test]
    fn off_diagonal_grades_follow_delta_bookkeeping() {
        // Type I off-diagonals: -C z^2 at grade +1 (delta = 2) and C~ at
        // grade +1 (delta' = 0).
        let p = trig_qes_params(2, 1.1, 0.4, c64(1.0, 0.0), WaveType::I).unwrap();
        let (op, profile) = trig_operator(&p).unwrap();
        assert_eq!(profile.delta(), 2);
        for t in op.terms().iter().filter(|t| t.row != t.col) {
            let g = grade_of(t, profile);
            assert!(g <= 1, "off-diagonal term above grade +1: {t:?}");
        }
        let (m1, _, _) = extract_matrices(&op.grade_decompose(profile), profile);
        assert!((m1[(0, 1)] + p.c).norm() < 1e-12);
        assert!((m1[(1, 0)] - p.c_tilde).norm() < 1e-12);
    }
}
