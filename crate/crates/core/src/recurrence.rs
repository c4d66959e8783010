//! Four-term recurrence formulation of the quartic family.
//!
//! Writing the eigenvector components as power series with coefficients
//! `P_k`, `Q_l`, the gauged eigenvalue equation becomes
//!
//! `A_k (P_k, Q_{k+2})^t + B_k (P_{k-1}, Q_{k+1})^t + C_k (P_{k-2}, Q_k)^t
//!  + D_k (P_{k-3}, Q_{k-1})^t = 0`
//!
//! with constant 2x2 blocks depending on `k`, the parameters and `E`. The
//! pivots `k(k-1)` (row 1) and `(k+2)(k+1)` (row 2) never vanish where they
//! are used, so a forward sweep expresses every coefficient as a linear form
//! in the free parameters `(P_0, P_1, Q_0, Q_1)`. Requiring
//! `P_n = P_{n-1} = Q_{n+2} = Q_{n+1} = 0` truncates both series; the 4x4
//! determinant of that linear system vanishes exactly at the QES energies.
//!
//! Note the free-parameter basis: row 2 at `k = 0` already determines `Q_2`
//! from `(P_0, Q_0, Q_1)`, so the four free coordinates in a forward sweep
//! are `(P_0, P_1, Q_0, Q_1)`; the determinant's zero set does not depend on
//! that choice.

use crate::matrix::CMatrix;
use crate::models::quartic::QuarticParams;
use crate::{c64, C64};

/// Value linear in the four free parameters `(P_0, P_1, Q_0, Q_1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearForm(pub [C64; 4]);

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm([c64(0.0, 0.0); 4])
    }

    fn basis(i: usize) -> Self {
        let mut f = LinearForm::zero();
        f.0[i] = c64(1.0, 0.0);
        f
    }

    pub fn scale(&self, c: C64) -> Self {
        LinearForm([self.0[0] * c, self.0[1] * c, self.0[2] * c, self.0[3] * c])
    }

    pub fn add(&self, rhs: &LinearForm) -> Self {
        LinearForm([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }

    /// Evaluates at a concrete parameter vector.
    pub fn eval(&self, params: &[C64; 4]) -> C64 {
        (0..4).map(|i| self.0[i] * params[i]).sum()
    }
}

/// The recurrence block generators at fixed parameters and energy.
pub struct RecurrenceCoeffs<'a> {
    p: &'a QuarticParams,
    e: C64,
}

impl<'a> RecurrenceCoeffs<'a> {
    pub fn new(p: &'a QuarticParams, e: C64) -> Self {
        RecurrenceCoeffs { p, e }
    }

    pub fn a_k(&self, k: i64) -> [[C64; 2]; 2] {
        let kf = k as f64;
        [
            [c64(kf * (kf - 1.0), 0.0), c64(0.0, 0.0)],
            [c64(-self.p.wtilde, 0.0), c64((kf + 2.0) * (kf + 1.0), 0.0)],
        ]
    }

    pub fn b_k(&self, k: i64) -> [[C64; 2]; 2] {
        let kf = k as f64;
        let ig = c64(0.0, self.p.g());
        let lw = self.p.lambda * self.p.wtilde;
        [
            [(ig + lw) * (kf - 1.0), c64(0.0, 0.0)],
            [c64(0.0, 0.0), (ig - lw) * (kf + 1.0)],
        ]
    }

    pub fn c_k(&self, k: i64) -> [[C64; 2]; 2] {
        let kf = k as f64;
        let g = self.p.g();
        let base = c64(-self.p.d - g * g / 4.0, 0.0) + self.e;
        let wl2 = c64(self.p.wtilde, 0.0) * self.p.lambda * self.p.lambda;
        [
            [
                base + c64(-self.p.a * (kf - 2.0) - self.p.a / 2.0, 0.0),
                wl2 * kf * (kf - 1.0),
            ],
            [
                c64(0.0, 0.0),
                base + c64(-self.p.a * kf + self.p.a / 2.0, 0.0),
            ],
        ]
    }

    pub fn d_k(&self, k: i64) -> [[C64; 2]; 2] {
        let v = c64(0.0, -2.0 * (k as f64 - self.p.n as f64 - 1.0));
        [[v, c64(0.0, 0.0)], [c64(0.0, 0.0), v]]
    }
}

/// The `(P_k, Q_k)` sequences as linear forms, generated forward up to
/// index `k_max` (inclusive) with negative-index terms zero.
#[derive(Debug, Clone)]
pub struct Sequences {
    pub p: Vec<LinearForm>,
    pub q: Vec<LinearForm>,
}

/// Forward sweep of the recurrence at energy `e`.
///
/// Row 1 at `k = 0, 1` reads `0 = 0` (the pivot `k(k-1)` vanishes), leaving
/// `P_0`, `P_1` free; row 2 determines `Q_{k+2}` for every `k >= 0`, and
/// row 1 determines `P_k` for `k >= 2`.
pub fn forward_generate(p: &QuarticParams, e: C64, k_max: usize) -> Sequences {
    assert!(k_max >= p.n as usize + 3, "k_max must be at least n + 3");
    let rc = RecurrenceCoeffs::new(p, e);
    let len = k_max + 3;
    let mut pf = vec![LinearForm::zero(); len];
    let mut qf = vec![LinearForm::zero(); len];
    pf[0] = LinearForm::basis(0);
    pf[1] = LinearForm::basis(1);
    qf[0] = LinearForm::basis(2);
    qf[1] = LinearForm::basis(3);

    let at = |v: &Vec<LinearForm>, idx: i64| -> LinearForm {
        if idx < 0 {
            LinearForm::zero()
        } else {
            v[idx as usize]
        }
    };

    for k in 0..=k_max as i64 {
        if k >= 2 {
            // Row 1: k(k-1) P_k + b11 P_{k-1} + c11 P_{k-2} + c12 Q_k + d P_{k-3} = 0.
            let b = rc.b_k(k);
            let c = rc.c_k(k);
            let d = rc.d_k(k);
            let acc = at(&pf, k - 1)
                .scale(b[0][0])
                .add(&at(&pf, k - 2).scale(c[0][0]))
                .add(&at(&qf, k).scale(c[0][1]))
                .add(&at(&pf, k - 3).scale(d[0][0]));
            let pivot = rc.a_k(k)[0][0];
            pf[k as usize] = acc.scale(-c64(1.0, 0.0) / pivot);
        }
        // Row 2: -w~ P_k + (k+2)(k+1) Q_{k+2} + b22 Q_{k+1} + c22 Q_k + d Q_{k-1} = 0.
        let a = rc.a_k(k);
        let b = rc.b_k(k);
        let c = rc.c_k(k);
        let d = rc.d_k(k);
        let acc = at(&pf, k)
            .scale(a[1][0])
            .add(&at(&qf, k + 1).scale(b[1][1]))
            .add(&at(&qf, k).scale(c[1][1]))
            .add(&at(&qf, k - 1).scale(d[1][1]));
        let pivot = a[1][1];
        qf[(k + 2) as usize] = acc.scale(-c64(1.0, 0.0) / pivot);
    }
    pf.truncate(k_max + 1);
    qf.truncate(k_max + 1);
    Sequences { p: pf, q: qf }
}

/// The truncation system `{P_n, P_{n-1}, Q_{n+2}, Q_{n+1}} = 0` as a 4x4
/// matrix over the free parameters.
fn truncation_matrix(p: &QuarticParams, e: C64) -> CMatrix {
    let n = p.n as usize;
    let seq = forward_generate(p, e, n + 3);
    let rows = [seq.p[n], seq.p[n - 1], seq.q[n + 2], seq.q[n + 1]];
    let mut m = CMatrix::zeros(4, 4);
    for (i, r) in rows.iter().enumerate() {
        for j in 0..4 {
            m[(i, j)] = r.0[j];
        }
    }
    m
}

/// Determinant of the truncation system; zero exactly at QES energies.
pub fn qes_determinant(p: &QuarticParams, e: C64) -> C64 {
    truncation_matrix(p, e).det().expect("4x4 is square")
}

/// Null vector of the truncation system at a determinant root, by full-pivot
/// elimination with the weakest pivot's variable set to one.
pub fn truncation_null_vector(p: &QuarticParams, e: C64) -> [C64; 4] {
    let mut m = truncation_matrix(p, e);
    let n = 4usize;
    let mut col_perm: [usize; 4] = [0, 1, 2, 3];
    let mut rank_rows = Vec::new();
    for step in 0..n {
        // Full pivoting over the remaining submatrix.
        let mut best = (step, step, -1.0_f64);
        for i in step..n {
            for j in step..n {
                let v = m[(i, j)].norm();
                if v > best.2 {
                    best = (i, j, v);
                }
            }
        }
        let (bi, bj, bv) = best;
        if bv <= 1e-10 * m.frobenius_norm().max(f64::MIN_POSITIVE) {
            break;
        }
        if bi != step {
            for j in 0..n {
                let t = m[(step, j)];
                m[(step, j)] = m[(bi, j)];
                m[(bi, j)] = t;
            }
        }
        if bj != step {
            for i in 0..n {
                let t = m[(i, step)];
                m[(i, step)] = m[(i, bj)];
                m[(i, bj)] = t;
            }
            col_perm.swap(step, bj);
        }
        for i in step + 1..n {
            let f = m[(i, step)] / m[(step, step)];
            for j in step..n {
                let s = m[(step, j)];
                m[(i, j)] -= f * s;
            }
        }
        rank_rows.push(step);
    }
    let rank = rank_rows.len().min(3);
    // Free variable (permuted index `rank`) set to 1; back-substitute.
    let mut x = [c64(0.0, 0.0); 4];
    x[rank] = c64(1.0, 0.0);
    for i in (0..rank).rev() {
        let mut s = c64(0.0, 0.0);
        for j in i + 1..n {
            s += m[(i, j)] * x[j];
        }
        x[i] = -s / m[(i, i)];
    }
    let mut out = [c64(0.0, 0.0); 4];
    for (permuted, &orig) in col_perm.iter().enumerate() {
        out[orig] = x[permuted];
    }
    let nrm = out.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    for v in &mut out {
        *v /= nrm;
    }
    out
}

/// Relative size of the series tail past the imposed zeros: the null
/// solution propagated to `k = n + 8` must give `P_k ~ 0` for `k >= n-1`
/// and `Q_k ~ 0` for `k >= n+1` (true truncation).
pub fn truncation_residual(p: &QuarticParams, e: C64) -> f64 {
    let n = p.n as usize;
    let params = truncation_null_vector(p, e);
    let seq = forward_generate(p, e, n + 8);
    let mut tail: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for (k, f) in seq.p.iter().enumerate() {
        let v = f.eval(&params).norm();
        scale = scale.max(v);
        if k >= n - 1 {
            tail = tail.max(v);
        }
    }
    for (k, f) in seq.q.iter().enumerate() {
        let v = f.eval(&params).norm();
        scale = scale.max(v);
        if k > n {
            tail = tail.max(v);
        }
    }
    tail / scale.max(f64::MIN_POSITIVE)
}

/// Rectangular complex search region with its sampling resolution.
#[derive(Debug, Clone, Copy)]
pub struct SearchBox {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub re_samples: usize,
    pub im_samples: usize,
}

impl SearchBox {
    /// Generous default for desk-scale parameters.
    pub fn default_box() -> Self {
        SearchBox {
            re_min: -50.0,
            re_max: 70.0,
            im_min: -35.0,
            im_max: 35.0,
            re_samples: 81,
            im_samples: 51,
        }
    }
}

/// Result of a determinant root search.
#[derive(Debug, Clone)]
pub struct EnergySearch {
    pub energies: Vec<C64>,
    /// Expected count `2n` (the invariant-space dimension).
    pub expected: usize,
    /// Set when the found count differs from the expected one; a warning,
    /// not an error (roots may sit outside the search region).
    pub count_mismatch: bool,
}

fn newton_polish(p: &QuarticParams, start: C64) -> Option<C64> {
    let mut e = start;
    for _ in 0..60 {
        let h = 1e-6 * e.norm().max(1.0);
        let f = qes_determinant(p, e);
        let fp = (qes_determinant(p, e + c64(h, 0.0)) - qes_determinant(p, e - c64(h, 0.0)))
            / c64(2.0 * h, 0.0);
        if fp.norm() == 0.0 {
            return None;
        }
        let step = f / fp;
        let next = e - step;
        if step.norm() <= 1e-11 * (1.0 + next.norm()) {
            return Some(next);
        }
        e = next;
    }
    None
}

/// Locates determinant zeros in the box: samples `|det|` on the grid, runs
/// Newton polish from every sample in the low-magnitude tail (clusters of
/// nearby roots share grid cells, so strict local minima are not enough),
/// deduplicates within `1e-7` and flags a count mismatch against the
/// expected `2n`.
pub fn find_qes_energies(p: &QuarticParams, search: &SearchBox) -> EnergySearch {
    let nre = search.re_samples.max(3);
    let nim = search.im_samples.max(3);
    let mut mag = vec![0.0_f64; nre * nim];
    let coord = |i: usize, j: usize| -> C64 {
        c64(
            search.re_min + (search.re_max - search.re_min) * i as f64 / (nre - 1) as f64,
            search.im_min + (search.im_max - search.im_min) * j as f64 / (nim - 1) as f64,
        )
    };
    for i in 0..nre {
        for j in 0..nim {
            mag[i * nim + j] = qes_determinant(p, coord(i, j)).norm().ln();
        }
    }
    // Start set: the lowest ~12% of samples, capped.
    let mut order: Vec<usize> = (0..mag.len()).collect();
    order.sort_by(|&x, &y| mag[x].total_cmp(&mag[y]));
    let take = (mag.len() / 8).clamp(32.min(mag.len()), 800);
    let mut roots: Vec<C64> = Vec::new();
    let margin_re = (search.re_max - search.re_min) * 0.05;
    let margin_im = (search.im_max - search.im_min) * 0.05;
    for &idx in order.iter().take(take) {
        let (i, j) = (idx / nim, idx % nim);
        if let Some(root) = newton_polish(p, coord(i, j)) {
            let inside = root.re >= search.re_min - margin_re
                && root.re <= search.re_max + margin_re
                && root.im >= search.im_min - margin_im
                && root.im <= search.im_max + margin_im;
            if inside && !roots.iter().any(|r| (r - root).norm() <= 1e-7 * (1.0 + root.norm())) {
                roots.push(root);
            }
        }
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let expected = 2 * p.n as usize;
    EnergySearch {
        count_mismatch: roots.len() != expected,
        energies: roots,
        expected,
    }
}

/// Log-slope estimate of the determinant's polynomial degree in `E`
/// (diagnostic only: sampled on a large circle, averaged over four rays).
pub fn det_degree_estimate(p: &QuarticParams) -> f64 {
    let r1 = 1e3;
    let r2 = 1e4;
    let mut acc = 0.0;
    let mut used = 0usize;
    for k in 0..4 {
        let theta = 0.37 + std::f64::consts::FRAC_PI_2 * k as f64;
        let dir = C64::from_polar(1.0, theta);
        let d1 = qes_determinant(p, dir * r1).norm();
        let d2 = qes_determinant(p, dir * r2).norm();
        if d1 > 0.0 && d2 > 0.0 {
            acc += (d2.ln() - d1.ln()) / (r2.ln() - r1.ln());
            used += 1;
        }
    }
    if used == 0 {
        f64::NAN
    } else {
        acc / used as f64
    }
}
