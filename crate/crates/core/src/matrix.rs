//! Small dense complex matrices: eigenvalues, determinants, least squares,
//! and the 2x2 kernel extraction used by the certification conditions.

use crate::error::Error;
use crate::poly::Poly;
use crate::C64;

/// Dimension cap for eigenproblems; everything here is desk scale.
pub const DIM_CAP: usize = 64;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![C64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from row-major data; panics if the length does not match.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        CMatrix { rows, cols, data }
    }

    pub fn from_rows_2x2(rows: [[C64; 2]; 2]) -> Self {
        CMatrix::from_vec(2, 2, vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: C64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        self.add(&rhs.scale(C64::new(-1.0, 0.0)))
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn det2(&self) -> C64 {
        assert_eq!((self.rows, self.cols), (2, 2));
        self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)]
    }

    /// Determinant via LU with partial pivoting.
    pub fn det(&self) -> Result<C64, Error> {
        if self.rows != self.cols {
            return Err(Error::Dimension {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = C64::new(1.0, 0.0);
        for k in 0..n {
            let (piv, pmax) = (k..n)
                .map(|i| (i, a[(i, k)].norm()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pmax == 0.0 {
                return Ok(C64::new(0.0, 0.0));
            }
            if piv != k {
                for j in 0..n {
                    let t = a[(k, j)];
                    a[(k, j)] = a[(piv, j)];
                    a[(piv, j)] = t;
                }
                det = -det;
            }
            det *= a[(k, k)];
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                for j in k..n {
                    let s = a[(k, j)];
                    a[(i, j)] -= f * s;
                }
            }
        }
        Ok(det)
    }

    /// Full eigenvalue multiset via Hessenberg reduction and shifted QR.
    ///
    /// Dimensions 1 and 2 are closed-form. Errors on non-square input and on
    /// dimensions above [`DIM_CAP`].
    pub fn eig(&self) -> Result<Vec<C64>, Error> {
        if self.rows != self.cols {
            return Err(Error::Dimension {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > DIM_CAP {
            return Err(Error::TooLarge(self.rows));
        }
        match self.rows {
            0 => Ok(Vec::new()),
            1 => Ok(vec![self[(0, 0)]]),
            2 => Ok(eig2(self[(0, 0)], self[(0, 1)], self[(1, 0)], self[(1, 1)]).to_vec()),
            _ => {
                let mut h = self.clone();
                hessenberg(&mut h);
                qr_eigenvalues(h)
            }
        }
    }

    /// Monic characteristic polynomial by the Faddeev–LeVerrier recursion.
    ///
    /// Independent route to the spectrum (roots of this polynomial); kept as
    /// the cross-check against [`CMatrix::eig`] at small dimensions.
    pub fn char_poly(&self) -> Result<Poly, Error> {
        if self.rows != self.cols {
            return Err(Error::Dimension {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
        coeffs[n] = C64::new(1.0, 0.0);
        let mut m = self.clone();
        for k in 1..=n {
            let c = -m.trace() / C64::new(k as f64, 0.0);
            coeffs[n - k] = c;
            if k < n {
                let mut shifted = m;
                for i in 0..n {
                    shifted[(i, i)] += c;
                }
                m = self.matmul(&shifted);
            }
        }
        Ok(Poly::new(coeffs))
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Eigenvalues of a 2x2, with the numerically stable quadratic branch.
fn eig2(a: C64, b: C64, c: C64, d: C64) -> [C64; 2] {
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr - 4.0 * det).sqrt();
    let q = if (tr + disc).norm() >= (tr - disc).norm() {
        0.5 * (tr + disc)
    } else {
        0.5 * (tr - disc)
    };
    if q.norm() > 0.0 {
        [q, det / q]
    } else {
        [q, tr - q]
    }
}

/// In-place Householder reduction to upper Hessenberg form.
fn hessenberg(h: &mut CMatrix) {
    let n = h.rows();
    for k in 0..n.saturating_sub(2) {
        // Reflector annihilating column k below the subdiagonal.
        let norm_x: f64 = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if norm_x == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            C64::new(1.0, 0.0)
        };
        let alpha = -phase * norm_x;
        let mut v: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let tau = 2.0 / vnorm2;

        // Left: rows k+1..n, all columns.
        for j in 0..n {
            let s: C64 = (0..v.len()).map(|i| v[i].conj() * h[(k + 1 + i, j)]).sum();
            let s = s * tau;
            for i in 0..v.len() {
                let upd = s * v[i];
                h[(k + 1 + i, j)] -= upd;
            }
        }
        // Right: columns k+1..n, all rows.
        for i in 0..n {
            let s: C64 = (0..v.len()).map(|j| h[(i, k + 1 + j)] * v[j]).sum();
            let s = s * tau;
            for j in 0..v.len() {
                let upd = s * v[j].conj();
                h[(i, k + 1 + j)] -= upd;
            }
        }
    }
    // Clean the strictly-lower part.
    for i in 2..n {
        for j in 0..i - 1 {
            h[(i, j)] = C64::new(0.0, 0.0);
        }
    }
}

/// Complex Givens rotation: returns (c, s) with c real so that
/// [c s; -conj(s) c] * [f; g] = [r; 0].
fn givens(f: C64, g: C64) -> (f64, C64) {
    if g.norm() == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    if f.norm() == 0.0 {
        return (0.0, g.conj() / g.norm());
    }
    let r = (f.norm_sqr() + g.norm_sqr()).sqrt();
    let c = f.norm() / r;
    let s = (f / f.norm()) * g.conj() / r;
    (c, s)
}

/// Explicit single-shift QR with deflation on an upper Hessenberg matrix.
fn qr_eigenvalues(mut h: CMatrix) -> Result<Vec<C64>, Error> {
    let n = h.rows();
    let mut eigs = Vec::with_capacity(n);
    let mut hi = n - 1;
    let eps = 2.0 * f64::EPSILON;
    let max_sweeps = 60 * n as u32;
    let mut sweeps = 0u32;
    let mut stagnation = 0u32;

    'outer: loop {
        // Kill negligible subdiagonals in the active range.
        for i in 1..=hi {
            let small = eps * (h[(i - 1, i - 1)].norm() + h[(i, i)].norm()).max(f64::MIN_POSITIVE);
            if h[(i, i - 1)].norm() <= small {
                h[(i, i - 1)] = C64::new(0.0, 0.0);
            }
        }
        // Deflate converged trailing eigenvalues.
        loop {
            if hi == 0 {
                eigs.push(h[(0, 0)]);
                break 'outer;
            }
            if h[(hi, hi - 1)].norm() == 0.0 {
                eigs.push(h[(hi, hi)]);
                hi -= 1;
                stagnation = 0;
            } else {
                break;
            }
        }
        // Active block [lo, hi].
        let mut lo = hi;
        while lo > 0 && h[(lo, lo - 1)].norm() != 0.0 {
            lo -= 1;
        }
        if hi - lo == 1 {
            let [e1, e2] = eig2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            eigs.push(e1);
            eigs.push(e2);
            if lo == 0 {
                break 'outer;
            }
            hi = lo - 1;
            stagnation = 0;
            continue;
        }

        sweeps += 1;
        stagnation += 1;
        if sweeps > max_sweeps {
            return Err(Error::NonConvergence(max_sweeps));
        }

        // Wilkinson shift from the trailing 2x2; exceptional shift on stagnation.
        let mu = if stagnation % 12 == 0 {
            h[(hi, hi)] + C64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let [e1, e2] = eig2(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            );
            if (e1 - h[(hi, hi)]).norm() <= (e2 - h[(hi, hi)]).norm() {
                e1
            } else {
                e2
            }
        };

        for i in lo..=hi {
            h[(i, i)] -= mu;
        }
        // QR sweep: row rotations zeroing the subdiagonal...
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..n {
                let a = h[(k, j)];
                let b = h[(k + 1, j)];
                h[(k, j)] = C64::new(c, 0.0) * a + s * b;
                h[(k + 1, j)] = -s.conj() * a + C64::new(c, 0.0) * b;
            }
            rots.push((c, s));
        }
        // ...followed by the conjugate column rotations (RQ).
        for (k, &(c, s)) in (lo..hi).zip(&rots) {
            let top = (k + 2).min(hi);
            for i in 0..=top {
                let a = h[(i, k)];
                let b = h[(i, k + 1)];
                h[(i, k)] = a * C64::new(c, 0.0) + b * s.conj();
                h[(i, k + 1)] = b * C64::new(c, 0.0) - a * s;
            }
        }
        for i in lo..=hi {
            h[(i, i)] += mu;
        }
    }
    Ok(eigs)
}

/// Outcome of the 2x2 kernel probe behind certification condition (i).
#[derive(Debug, Clone, PartialEq)]
pub enum KernelResult {
    /// det(M) is significantly nonzero: no null vector.
    NoKernel,
    /// Numerical rank 1: the unit-norm null vector (alpha_0, beta_0).
    Rank1([C64; 2]),
    /// The whole matrix is negligible: every vector is a null vector.
    Rank0,
}

/// Null-vector probe for a 2x2 matrix.
///
/// Rank 0 when `||m|| <= tol`; otherwise a kernel exists when
/// `|det m| <= tol * ||m||^2`, and the returned vector is the singular
/// direction of minimal stretch (eigenvector of `m* m` for its smaller
/// eigenvalue), which is well-conditioned even near rank boundaries.
pub fn kernel_vector(m: &CMatrix, tol: f64) -> KernelResult {
    assert_eq!((m.rows(), m.cols()), (2, 2), "kernel_vector expects 2x2");
    let nrm = m.frobenius_norm();
    if nrm <= tol {
        return KernelResult::Rank0;
    }
    if m.det2().norm() > tol * nrm * nrm {
        return KernelResult::NoKernel;
    }
    KernelResult::Rank1(min_singular_vector_2x2(m))
}

/// Right singular vector for the smaller singular value of a 2x2 matrix.
pub fn min_singular_vector_2x2(m: &CMatrix) -> [C64; 2] {
    // m* m is hermitian [[a, b], [conj(b), d]] with a, d real.
    let a = m[(0, 0)].norm_sqr() + m[(1, 0)].norm_sqr();
    let d = m[(0, 1)].norm_sqr() + m[(1, 1)].norm_sqr();
    let b = m[(0, 0)].conj() * m[(0, 1)] + m[(1, 0)].conj() * m[(1, 1)];
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    let lam = mid - rad;
    let v1 = [b, C64::new(lam - a, 0.0)];
    let v2 = [C64::new(lam - d, 0.0), b.conj()];
    let n1 = (v1[0].norm_sqr() + v1[1].norm_sqr()).sqrt();
    let n2 = (v2[0].norm_sqr() + v2[1].norm_sqr()).sqrt();
    let (v, nv) = if n1 >= n2 { (v1, n1) } else { (v2, n2) };
    if nv == 0.0 {
        // Degenerate (multiple of a unitary); any direction works.
        return [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
    }
    [v[0] / nv, v[1] / nv]
}

/// Smallest singular value of a 2x2 matrix.
pub fn min_singular_value_2x2(m: &CMatrix) -> f64 {
    let v = min_singular_vector_2x2(m);
    let w = m.matvec(&v);
    (w[0].norm_sqr() + w[1].norm_sqr()).sqrt()
}

/// Householder QR least-squares factorization of a tall matrix.
pub struct Lstsq {
    qr: CMatrix,
    betas: Vec<f64>,
    rank_ok: bool,
}

impl Lstsq {
    /// Factors `a` (rows >= cols). Rank deficiency is flagged and reported
    /// as [`Error::SingularBasis`] at solve time.
    pub fn new(a: &CMatrix) -> Self {
        let (m, n) = (a.rows(), a.cols());
        assert!(m >= n, "least squares expects rows >= cols");
        let mut qr = a.clone();
        let mut betas = vec![0.0; n];
        for k in 0..n {
            let norm_x: f64 = (k..m).map(|i| qr[(i, k)].norm_sqr()).sum::<f64>().sqrt();
            if norm_x == 0.0 {
                betas[k] = 0.0;
                continue;
            }
            let x0 = qr[(k, k)];
            let phase = if x0.norm() > 0.0 {
                x0 / x0.norm()
            } else {
                C64::new(1.0, 0.0)
            };
            let alpha = -phase * norm_x;
            let mut vnorm2 = 0.0;
            qr[(k, k)] -= alpha;
            for i in k..m {
                vnorm2 += qr[(i, k)].norm_sqr();
            }
            if vnorm2 == 0.0 {
                betas[k] = 0.0;
                qr[(k, k)] = alpha;
                continue;
            }
            let beta = 2.0 / vnorm2;
            for j in k + 1..n {
                let s: C64 = (k..m).map(|i| qr[(i, k)].conj() * qr[(i, j)]).sum();
                let s = s * beta;
                for i in k..m {
                    let upd = s * qr[(i, k)];
                    qr[(i, j)] -= upd;
                }
            }
            // Store v rescaled so v[0] = 1 (fold |v[0]|^2 into beta); the
            // diagonal slot then holds the R entry alpha.
            let v0 = qr[(k, k)];
            for i in k + 1..m {
                let t = qr[(i, k)] / v0;
                qr[(i, k)] = t;
            }
            betas[k] = beta * v0.norm_sqr();
            qr[(k, k)] = alpha;
        }
        let maxdiag = (0..n).map(|k| qr[(k, k)].norm()).fold(0.0, f64::max);
        let rank_ok = (0..n).all(|k| qr[(k, k)].norm() > 1e-12 * maxdiag.max(f64::MIN_POSITIVE));
        Lstsq {
            qr,
            betas,
            rank_ok,
        }
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank_ok
    }

    /// Minimizes `||a x - b||`; returns `(x, residual_norm)`.
    pub fn solve(&self, b: &[C64]) -> Result<(Vec<C64>, f64), Error> {
        if !self.rank_ok {
            return Err(Error::SingularBasis);
        }
        let (m, n) = (self.qr.rows(), self.qr.cols());
        assert_eq!(b.len(), m);
        let mut y = b.to_vec();
        // Apply Q* (reflectors with implicit v[0] = 1).
        for k in 0..n {
            let beta = self.betas[k];
            if beta == 0.0 {
                continue;
            }
            let mut s = y[k];
            for i in k + 1..m {
                s += self.qr[(i, k)].conj() * y[i];
            }
            s *= beta;
            y[k] -= s;
            for i in k + 1..m {
                let upd = s * self.qr[(i, k)];
                y[i] -= upd;
            }
        }
        // Back-substitution on R.
        let mut x = vec![C64::new(0.0, 0.0); n];
        for k in (0..n).rev() {
            let mut s = y[k];
            for j in k + 1..n {
                s -= self.qr[(k, j)] * x[j];
            }
            x[k] = s / self.qr[(k, k)];
        }
        let resid = (n..m).map(|i| y[i].norm_sqr()).sum::<f64>().sqrt();
        Ok((x, resid))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::roots::{multiset_distance, poly_roots};

    #[test]
    fn eig_diag_and_rotation() {
        let m = CMatrix::from_rows_2x2([
            [c64(2.0, 0.0), c64(0.0, 0.0)],
            [c64(0.0, 0.0), c64(3.0, 1.0)],
        ]);
        let e = m.eig().unwrap();
        assert!(multiset_distance(&e, &[c64(2.0, 0.0), c64(3.0, 1.0)]).unwrap() < 1e-12);

        let rot = CMatrix::from_rows_2x2([
            [c64(0.0, 0.0), c64(1.0, 0.0)],
            [c64(-1.0, 0.0), c64(0.0, 0.0)],
        ]);
        let e = rot.eig().unwrap();
        assert!(multiset_distance(&e, &[c64(0.0, 1.0), c64(0.0, -1.0)]).unwrap() < 1e-12);
    }

    #[test]
    fn eig_companion_of_cubic() {
        // Companion of x^3 - 6x^2 + 11x - 6; eigenvalues {1, 2, 3}.
        let mut m = CMatrix::zeros(3, 3);
        m[(0, 2)] = c64(6.0, 0.0);
        m[(1, 0)] = c64(1.0, 0.0);
        m[(1, 2)] = c64(-11.0, 0.0);
        m[(2, 1)] = c64(1.0, 0.0);
        m[(2, 2)] = c64(6.0, 0.0);
        let e = m.eig().unwrap();
        let want = [c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)];
        assert!(multiset_distance(&e, &want).unwrap() < 1e-8);
    }

    #[test]
    fn eig_matches_char_poly_roots() {
        // Deterministic pseudo-random 6x6.
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let n = 6;
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = c64(next(), next());
            }
        }
        let e1 = m.eig().unwrap();
        let cp = m.char_poly().unwrap();
        let e2 = poly_roots(&cp).unwrap();
        assert!(multiset_distance(&e1, &e2).unwrap() < 1e-8);
    }

    #[test]
    fn kernel_rank1_example() {
        let m = CMatrix::from_rows_2x2([
            [c64(1.0, 0.0), c64(2.0, 0.0)],
            [c64(2.0, 0.0), c64(4.0, 0.0)],
        ]);
        match kernel_vector(&m, 1e-9) {
            KernelResult::Rank1(v) => {
                // Proportional to (2, -1).
                let cross = v[0] * c64(-1.0, 0.0) - v[1] * c64(2.0, 0.0);
                assert!(cross.norm() < 1e-12);
                let nrm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
                assert!((nrm - 1.0).abs() < 1e-12);
            }
            other => panic!("expected Rank1, got {other:?}"),
        }
    }

    #[test]
    fn kernel_rank0_and_none() {
        let z = CMatrix::zeros(2, 2);
        assert_eq!(kernel_vector(&z, 1e-9), KernelResult::Rank0);
        let m = CMatrix::from_rows_2x2([
            [c64(1.0, 0.0), c64(0.0, 0.0)],
            [c64(0.0, 0.0), c64(1.0, 0.0)],
        ]);
        assert_eq!(kernel_vector(&m, 1e-9), KernelResult::NoKernel);
    }

    #[test]
    fn lstsq_exact_and_residual() {
        // Overdetermined 3x2 with known solution.
        let a = CMatrix::from_vec(
            3,
            2,
            vec![
                c64(1.0, 0.0),
                c64(0.0, 0.0),
                c64(0.0, 0.0),
                c64(1.0, 0.0),
                c64(1.0, 0.0),
                c64(1.0, 0.0),
            ],
        );
        let f = Lstsq::new(&a);
        let b = vec![c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)];
        let (x, r) = f.solve(&b).unwrap();
        let fit = a.matvec(&x);
        let direct: f64 = fit
            .iter()
            .zip(&b)
            .map(|(u, v)| (u - v).norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!((r - direct).abs() < 1e-12);
    }

    #[test]
    fn det_of_singular_and_known() {
        let m = CMatrix::from_rows_2x2([
            [c64(1.0, 0.0), c64(2.0, 0.0)],
            [c64(2.0, 0.0), c64(4.0, 0.0)],
        ]);
        assert!(m.det().unwrap().norm() < 1e-14);
        assert!((m.det2() - m.det().unwrap()).norm() < 1e-14);
    }

    #[test]
    fn non_square_rejected() {
        let m = CMatrix::zeros(2, 3);
        assert!(matches!(m.eig(), Err(Error::Dimension { .. })));
    }
}
