//! PT-symmetry checks on the original x-space potential matrices.
//!
//! A family is PT-symmetric when conjugating the potential at the
//! parity-reflected point reproduces it: `conj(V(parity(x))) = V(x)`.
//! The kinetic term is invariant identically, so the potential decides.
//!
//! Parity maps per family:
//! - quartic: `x -> -x` (odd powers carry `i`, so conjugation undoes the flip);
//! - trigonometric: `x -> pi/2 - x` (flips `cos 2x`, preserves `sin x cos x`);
//! - hyperbolic: `x -> i pi/2 - x`, the reflection through `i pi/4`, which is
//!   the map that flips `cosh 2x`. A real-axis reflection leaves `cosh`
//!   untouched and can never cancel the `-i M cosh` cross term, so the
//!   family's antilinear symmetry lives on the shifted axis; the potential
//!   is simply evaluated at the complex reflected points.
//!
//! The natural PT-closed hyperbolic parameter set has real `rho`, `N`,
//! purely imaginary `C`, and `Im C~ = -iC`; the parameter solver then
//! produces `D`, `D~` already satisfying the mirrored constraints.

use crate::{c64, C64};

use super::hyper::{hyper_potential, HyperParams};
use super::quartic::{quartic_potential, QuarticParams};
use super::trig::{trig_potential, TrigParams};

/// A family instance for the PT check.
#[derive(Debug, Clone)]
pub enum PtFamily {
    Trig(TrigParams),
    Hyper(HyperParams),
    Quartic(QuarticParams),
}

impl PtFamily {
    pub fn potential(&self, x: C64) -> [[C64; 2]; 2] {
        match self {
            PtFamily::Trig(p) => trig_potential(p, x),
            PtFamily::Hyper(p) => hyper_potential(p, x),
            PtFamily::Quartic(p) => quartic_potential(p, x),
        }
    }

    pub fn parity(&self, x: f64) -> C64 {
        match self {
            PtFamily::Trig(_) => c64(std::f64::consts::FRAC_PI_2 - x, 0.0),
            PtFamily::Hyper(_) => c64(-x, std::f64::consts::FRAC_PI_2),
            PtFamily::Quartic(_) => c64(-x, 0.0),
        }
    }
}

/// Max over the grid of the Frobenius norm of `conj(V(parity(x))) - V(x)`.
pub fn pt_residual(
    potential: impl Fn(C64) -> [[C64; 2]; 2],
    parity: impl Fn(f64) -> C64,
    grid: &[f64],
) -> f64 {
    let mut worst: f64 = 0.0;
    for &x in grid {
        let reflected = potential(parity(x));
        let direct = potential(c64(x, 0.0));
        let mut acc = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                acc += (reflected[i][j].conj() - direct[i][j]).norm_sqr();
            }
        }
        worst = worst.max(acc.sqrt());
    }
    worst
}

/// PT residual of a family instance on a grid of real x-values.
pub fn pt_check(family: &PtFamily, grid: &[f64]) -> f64 {
    pt_residual(|x| family.potential(x), |x| family.parity(x), grid)
}

/// Default 101-point grid, symmetric under the family's parity map
/// (trig: centred at pi/4; quartic/hyperbolic: centred at 0).
pub fn default_grid(family: &PtFamily) -> Vec<f64> {
    let (center, half_width) = match family {
        PtFamily::Trig(_) => (std::f64::consts::FRAC_PI_4, 1.0),
        PtFamily::Hyper(_) => (0.0, 1.5),
        PtFamily::Quartic(_) => (0.0, 2.0),
    };
    (0..101)
        .map(|i| center - half_width + 2.0 * half_width * i as f64 / 100.0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::hyper::hyper_qes_params;
    use crate::models::trig::{trig_qes_params, WaveType};

    #[test]
    fn quartic_real_params_exact_zero() {
        // lambda purely imaginary makes omega real: the PT-closed set.
        let p = QuarticParams::new(2, 1.0, 1.0, 0.0, 0.5, c64(0.0, 0.5));
        let fam = PtFamily::Quartic(p);
        let grid = default_grid(&fam);
        assert_eq!(pt_check(&fam, &grid), 0.0);
    }

    #[test]
    fn quartic_violations_visible() {
        let p = QuarticParams::new(2, 1.0, 1.0, 0.0, 0.5, c64(0.0, 0.5));
        let fam = PtFamily::Quartic(p);
        let grid = default_grid(&fam);
        // A -> iA in the (1,1) cubic term.
        let a = p.a;
        let r = pt_residual(
            |x| {
                let mut v = fam.potential(x);
                v[0][0] += (c64(0.0, 1.0) * c64(0.0, a) - c64(0.0, a)) * x * x * x;
                v
            },
            |x| fam.parity(x),
            &grid,
        );
        assert!(r > 0.1, "A -> iA residual {r}");

        // Real lambda makes omega imaginary: PT broken by the coupling.
        let bad = QuarticParams::new(2, 1.0, 1.0, 0.0, 0.5, c64(1.0, 0.0));
        let fam = PtFamily::Quartic(bad);
        assert!(pt_check(&fam, &grid) > 1e-2);
    }

    #[test]
    fn trig_real_params_pass_and_cos_term_perturbation_fails() {
        let p = trig_qes_params(2, 1.0, 0.6, c64(1.0, 0.0), WaveType::I).unwrap();
        let fam = PtFamily::Trig(p);
        let grid = default_grid(&fam);
        assert!(pt_check(&fam, &grid) < 1e-12);

        // A real multiple of cos 2x on the diagonal is PT-odd here.
        let r = pt_residual(
            |x| {
                let mut v = fam.potential(x);
                v[0][0] += 0.1 * (2.0 * x).cos();
                v
            },
            |x| fam.parity(x),
            &grid,
        );
        assert!(r > 1e-2, "residual {r}");
    }

    #[test]
    fn hyper_pt_set_passes_and_perturbation_fails() {
        // C imaginary, Im C~ = -iC: the PT-closed parameter set.
        let p = hyper_qes_params(2, 0.3, 0.7, c64(0.0, 2.0), c64(1.0, 2.0)).unwrap();
        let fam = PtFamily::Hyper(p);
        let grid = default_grid(&fam);
        let r = pt_check(&fam, &grid);
        assert!(r < 1e-12, "residual {r}");

        let mut bad = p;
        bad.c_tilde += c64(0.0, 0.1);
        let fam = PtFamily::Hyper(bad);
        assert!(pt_check(&fam, &grid) > 1e-2);
    }

    #[test]
    fn hyper_real_axis_reflection_is_not_the_symmetry() {
        let p = hyper_qes_params(2, 0.3, 0.7, c64(0.0, 2.0), c64(1.0, 2.0)).unwrap();
        let fam = PtFamily::Hyper(p);
        let grid = default_grid(&fam);
        let r = pt_residual(|x| fam.potential(x), |x| c64(-x, 0.0), &grid);
        assert!(r > 1.0, "real-axis reflection should fail loudly, got {r}");
    }
}
