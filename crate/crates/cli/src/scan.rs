//! Parameter-plane scans over (M, rho) and critical-curve bisection for the
//! trigonometric family.

use qeslab_core::certify::certify;
use qeslab_core::models::trig::{trig_operator, trig_qes_params, WaveType};
use qeslab_core::spectrum::algebraic_spectrum;
use qeslab_core::C64;
use rayon::prelude::*;
use serde::Serialize;

/// One grid point of a scan. `real_count = -1` flags a solver or
/// certification failure at that point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScanPoint {
    pub m: f64,
    pub rho: f64,
    pub real_count: i64,
    pub min_gap: f64,
    pub closure_residual: f64,
}

/// Scan request: the grid is the cartesian product of the two value lists,
/// iterated M-major (fixed row order regardless of parallelism).
#[derive(Debug, Clone)]
pub struct ScanGrid {
    pub n: u32,
    pub wtype: WaveType,
    pub c: C64,
    pub m_values: Vec<f64>,
    pub rho_values: Vec<f64>,
    pub tol: f64,
    pub realness_tol: f64,
}

/// Uniform inclusive grid helper.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn scan_point(grid: &ScanGrid, m: f64, rho: f64) -> ScanPoint {
    let fail = ScanPoint {
        m,
        rho,
        real_count: -1,
        min_gap: f64::NAN,
        closure_residual: f64::NAN,
    };
    let params = match trig_qes_params(grid.n, m, rho, grid.c, grid.wtype) {
        Ok(p) => p,
        Err(_) => return fail,
    };
    let (op, profile) = match trig_operator(&params) {
        Ok(t) => t,
        Err(_) => return fail,
    };
    let cert = certify(&op, profile, grid.tol);
    if !cert.verdict.is_certified() {
        return fail;
    }
    match algebraic_spectrum(&op, &cert, profile, grid.realness_tol) {
        Ok(s) => ScanPoint {
            m,
            rho,
            real_count: s.real_count as i64,
            min_gap: s.min_gap(),
            closure_residual: s.closure_residual,
        },
        Err(_) => fail,
    }
}

/// Runs the scan in parallel; the output row order is the deterministic
/// M-major grid order.
pub fn run_scan(grid: &ScanGrid) -> Vec<ScanPoint> {
    let points: Vec<(f64, f64)> = grid
        .m_values
        .iter()
        .flat_map(|&m| grid.rho_values.iter().map(move |&rho| (m, rho)))
        .collect();
    points
        .par_iter()
        .map(|&(m, rho)| scan_point(grid, m, rho))
        .collect()
}

/// One critical-curve branch at a fixed M: the `branch`-th value of rho
/// (ordered increasing) where the real-eigenvalue count drops. A branch
/// that never materialises below `rho_max` is reported with
/// `rho_c = +infinity`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CriticalBranch {
    pub m: f64,
    pub rho_c: f64,
    pub branch: usize,
}

fn real_count_at(grid: &ScanGrid, m: f64, rho: f64) -> i64 {
    scan_point(grid, m, rho).real_count
}

/// Locates the count-change points along rho for every M in the grid.
///
/// Coarse pass on `rho_values`, then bisection to `bisect_tol` inside each
/// cell whose count changes. The expected number of branches is half the
/// count at the smallest rho (each collision removes a real pair); missing
/// branches are padded with the infinity sentinel.
pub fn critical_curve(grid: &ScanGrid, bisect_tol: f64) -> Vec<CriticalBranch> {
    let per_m: Vec<Vec<CriticalBranch>> = grid
        .m_values
        .par_iter()
        .map(|&m| {
            let counts: Vec<i64> = grid
                .rho_values
                .iter()
                .map(|&rho| real_count_at(grid, m, rho))
                .collect();
            let mut branches = Vec::new();
            let initial = counts.first().copied().unwrap_or(-1);
            for w in 0..grid.rho_values.len().saturating_sub(1) {
                let (ca, cb) = (counts[w], counts[w + 1]);
                if ca < 0 || cb < 0 || ca == cb {
                    continue;
                }
                let (mut lo, mut hi) = (grid.rho_values[w], grid.rho_values[w + 1]);
                while hi - lo > bisect_tol {
                    let mid = 0.5 * (lo + hi);
                    if real_count_at(grid, m, mid) == ca {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                branches.push(0.5 * (lo + hi));
            }
            branches.sort_by(|a, b| a.total_cmp(b));
            let expected = if initial > 0 { (initial as usize) / 2 } else { 0 };
            while branches.len() < expected {
                branches.push(f64::INFINITY);
            }
            branches
                .into_iter()
                .enumerate()
                .map(|(k, rho_c)| CriticalBranch {
                    m,
                    rho_c,
                    branch: k,
                })
                .collect()
        })
        .collect();
    per_m.into_iter().flatten().collect()
}
