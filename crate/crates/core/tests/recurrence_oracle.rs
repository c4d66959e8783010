//! Cross-validation of the recurrence quantisation against the
//! restricted-matrix spectra, over a parameter grid.

use qeslab_core::certify::{certify, DEFAULT_TOL};
use qeslab_core::models::quartic::{quartic_operator, QuarticParams};
use qeslab_core::poly::{Poly, PolyVec2};
use qeslab_core::recurrence::{
    find_qes_energies, forward_generate, qes_determinant, truncation_null_vector,
    truncation_residual, SearchBox,
};
use qeslab_core::roots::multiset_distance;
use qeslab_core::spectrum::{algebraic_spectrum, DEFAULT_REALNESS_TOL};
use qeslab_core::{c64, C64};

#[test]
fn recurrence_energies_match_matrix_spectra_on_parameter_grid() {
    for n in [2u32, 3, 4] {
        for a in [-1.0, 0.0, 1.0] {
            for b in [0.0, 1.0, 2.0] {
                let p = QuarticParams::new(n, a, b, 0.0, 0.5, c64(1.0, 0.0));
                let (op, profile) = quartic_operator(&p);
                let cert = certify(&op, profile, DEFAULT_TOL);
                let spec = algebraic_spectrum(&op, &cert, profile, DEFAULT_REALNESS_TOL).unwrap();
                let found = find_qes_energies(&p, &SearchBox::default_box());
                assert!(
                    !found.count_mismatch,
                    "n={n} A={a} B={b}: found {} of {}",
                    found.energies.len(),
                    found.expected
                );
                let d = multiset_distance(&found.energies, &spec.eigenvalues_c64()).unwrap();
                assert!(d < 1e-6, "n={n} A={a} B={b}: multiset distance {d}");

                // True truncation: eight terms past the imposed zeros stay
                // at rounding scale.
                for &e in &found.energies {
                    let t = truncation_residual(&p, e);
                    assert!(t < 1e-8, "n={n} A={a} B={b} E={e}: tail {t}");
                }
            }
        }
    }
}

#[test]
fn truncated_series_solves_the_gauged_eigenproblem() {
    // For each root, assemble the polynomial pair from the null solution and
    // apply (H - E): the remainder must vanish coefficientwise.
    for n in [2u32, 3] {
        let p = QuarticParams::new(n, 1.0, 1.0, 0.0, 0.5, c64(1.0, 0.0));
        let (op, _) = quartic_operator(&p);
        let found = find_qes_energies(&p, &SearchBox::default_box());
        assert!(!found.count_mismatch);
        for &e in &found.energies {
            let params = truncation_null_vector(&p, e);
            let seq = forward_generate(&p, e, n as usize + 8);
            let top_coeffs: Vec<C64> = seq.p[..=(n as usize).saturating_sub(2)]
                .iter()
                .map(|f| f.eval(&params))
                .collect();
            let bot_coeffs: Vec<C64> =
                seq.q[..=n as usize].iter().map(|f| f.eval(&params)).collect();
            let psi = PolyVec2::new(Poly::new(top_coeffs), Poly::new(bot_coeffs));
            assert!(psi.max_abs() > 1e-6, "null solution degenerated");
            let shifted = op.shift_identity(-e);
            let resid = shifted.apply(&psi);
            let rel = resid.max_abs() / psi.max_abs();
            assert!(rel < 1e-7, "n={n} E={e}: residual {rel}");
        }
    }
}

#[test]
fn wtilde_zero_energies_split_into_scalar_sectors() {
    // Block-triangular case: 2n energies = (n-1) from the first component
    // plus (n+1) from the second; verified through the determinant factor
    // structure by comparing against the coupled search.
    let n = 4u32;
    let p = QuarticParams::new(n, 1.0, 1.0, 0.0, 0.0, c64(1.0, 0.0));
    let (op, profile) = quartic_operator(&p);
    let cert = certify(&op, profile, DEFAULT_TOL);
    let spec = algebraic_spectrum(&op, &cert, profile, DEFAULT_REALNESS_TOL).unwrap();
    let found = find_qes_energies(&p, &SearchBox::default_box());
    assert!(!found.count_mismatch);
    let d = multiset_distance(&found.energies, &spec.eigenvalues_c64()).unwrap();
    assert!(d < 1e-6);
}

#[test]
fn determinant_magnitude_grows_away_from_roots() {
    let p = QuarticParams::new(3, 0.5, 2.0, 0.0, 0.5, c64(1.0, 0.0));
    let found = find_qes_energies(&p, &SearchBox::default_box());
    for &root in &found.energies {
        let at = qes_determinant(&p, root).norm();
        for dir in [c64(1e-3, 0.0), c64(0.0, 1e-3), c64(-7e-4, 7e-4)] {
            let off = qes_determinant(&p, root + dir).norm();
            assert!(off > 1e3 * at, "root {root} shallow along {dir}");
        }
    }
}
