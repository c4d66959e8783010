//! Dense complex-coefficient univariate polynomials and polynomial 2-vectors.

use crate::C64;
use std::ops::{Add, Mul, Neg, Sub};

/// Relative threshold below which a leading coefficient is considered a
/// cancellation artifact and trimmed. Keeps degree bookkeeping stable.
pub const TRIM_REL: f64 = 1e-13;

/// Dense polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// Invariant: the highest-index coefficient is nonzero unless the polynomial
/// is the zero polynomial, which is the empty coefficient list. The degree of
/// the zero polynomial is `None` (the "-inf" sentinel).
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<C64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds a polynomial from raw coefficients, trimming numerically-zero
    /// leading coefficients (relative threshold [`TRIM_REL`]).
    pub fn new(coeffs: Vec<C64>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: C64) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: C64) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_else(|| C64::new(0.0, 0.0))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    fn trim(&mut self) {
        let m = self.max_abs();
        if m == 0.0 {
            self.coeffs.clear();
            return;
        }
        let cut = TRIM_REL * m;
        while let Some(last) = self.coeffs.last() {
            if last.norm() < cut {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.iter().all(|c| c.norm() < cut) {
            self.coeffs.clear();
        }
    }

    pub fn scale(&self, c: C64) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// First derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c * C64::new((i + 1) as f64, 0.0))
            .collect();
        Poly::new(coeffs)
    }

    /// `q`-th derivative.
    pub fn nth_derivative(&self, q: usize) -> Poly {
        let mut p = self.clone();
        for _ in 0..q {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    /// Multiplies by `x^k` (index shift).
    pub fn mul_xk(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C64) -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Monic copy (leading coefficient scaled to 1). Zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            Some(&lead) => self.scale(C64::new(1.0, 0.0) / lead),
            None => Poly::zero(),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// Polynomial 2-vector `(top, bot)`; the elements the operators act on.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyVec2 {
    pub top: Poly,
    pub bot: Poly,
}

impl PolyVec2 {
    pub fn zero() -> Self {
        PolyVec2 {
            top: Poly::zero(),
            bot: Poly::zero(),
        }
    }

    pub fn new(top: Poly, bot: Poly) -> Self {
        PolyVec2 { top, bot }
    }

    /// `c * x^k` in the given component (0 = top, 1 = bot), zero in the other.
    pub fn monomial(component: usize, k: usize, c: C64) -> Self {
        let mut v = PolyVec2::zero();
        match component {
            0 => v.top = Poly::monomial(k, c),
            1 => v.bot = Poly::monomial(k, c),
            _ => panic!("component index must be 0 or 1"),
        }
        v
    }

    pub fn add(&self, rhs: &PolyVec2) -> PolyVec2 {
        PolyVec2 {
            top: &self.top + &rhs.top,
            bot: &self.bot + &rhs.bot,
        }
    }

    pub fn sub(&self, rhs: &PolyVec2) -> PolyVec2 {
        PolyVec2 {
            top: &self.top - &rhs.top,
            bot: &self.bot - &rhs.bot,
        }
    }

    pub fn scale(&self, c: C64) -> PolyVec2 {
        PolyVec2 {
            top: self.top.scale(c),
            bot: self.bot.scale(c),
        }
    }

    /// L2 norm of the stacked coefficient vector.
    pub fn l2_norm(&self) -> f64 {
        (self.top.l2_norm().powi(2) + self.bot.l2_norm().powi(2)).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.top.max_abs().max(self.bot.max_abs())
    }
}
