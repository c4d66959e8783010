//! 2x2 matrix differential operators with polynomial coefficients, their
//! action on polynomial 2-vectors, and the degree grading.
//!
//! Operators are stored monomial-by-monomial: each term is
//! `coeff * x^power * d^deriv/dx^deriv` sitting in one matrix entry. That
//! makes the grading exact: a term raises the degree of the component it
//! lands in by `power - deriv` plus the profile offset between source and
//! target components.

use crate::error::Error;
use crate::poly::PolyVec2;
use crate::C64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One operator term: `coeff * x^power * (d/dx)^deriv` mapping component
/// `col` into component `row` (both 1-based, in {1, 2}).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpTerm {
    pub row: u8,
    pub col: u8,
    pub power: u32,
    pub deriv: u32,
    pub coeff: C64,
}

impl OpTerm {
    pub fn new(row: u8, col: u8, power: u32, deriv: u32, coeff: C64) -> Self {
        assert!((1..=2).contains(&row) && (1..=2).contains(&col), "row/col must be 1 or 2");
        OpTerm {
            row,
            col,
            power,
            deriv,
            coeff,
        }
    }
}

/// A 2x2 matrix differential operator as a canonically ordered, merged term
/// list (sorted by `(row, col, deriv, power)`, no duplicate keys, no zero
/// coefficients).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatrixDiffOp {
    terms: Vec<OpTerm>,
}

impl MatrixDiffOp {
    pub fn new() -> Self {
        MatrixDiffOp { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<OpTerm>) -> Self {
        let mut op = MatrixDiffOp { terms };
        op.normalize();
        op
    }

    pub fn terms(&self) -> &[OpTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, row: u8, col: u8, power: u32, deriv: u32, coeff: C64) {
        self.terms.push(OpTerm::new(row, col, power, deriv, coeff));
        self.normalize();
    }

    fn normalize(&mut self) {
        self.terms
            .sort_by_key(|t| (t.row, t.col, t.deriv, t.power));
        let mut merged: Vec<OpTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last)
                    if (last.row, last.col, last.deriv, last.power)
                        == (t.row, t.col, t.deriv, t.power) =>
                {
                    last.coeff += t.coeff;
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != C64::new(0.0, 0.0));
        self.terms = merged;
    }

    /// Sum of entry-coefficient magnitudes; the operator scale used for
    /// relative residuals.
    pub fn coeff_l1(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.norm()).sum()
    }

    pub fn scale(&self, c: C64) -> MatrixDiffOp {
        MatrixDiffOp::from_terms(
            self.terms
                .iter()
                .map(|t| OpTerm { coeff: t.coeff * c, ..*t })
                .collect(),
        )
    }

    pub fn add(&self, rhs: &MatrixDiffOp) -> MatrixDiffOp {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&rhs.terms);
        MatrixDiffOp::from_terms(terms)
    }

    /// Adds `c * I` (a constant on both diagonal entries).
    pub fn shift_identity(&self, c: C64) -> MatrixDiffOp {
        let mut out = self.clone();
        out.terms.push(OpTerm::new(1, 1, 0, 0, c));
        out.terms.push(OpTerm::new(2, 2, 0, 0, c));
        out.normalize();
        out
    }

    /// Applies the operator: term `(i, j, p, q, c)` adds
    /// `c * x^p * f_j^(q)` into component `i`.
    pub fn apply(&self, v: &PolyVec2) -> PolyVec2 {
        let mut out = PolyVec2::zero();
        for t in &self.terms {
            let src = if t.col == 1 { &v.top } else { &v.bot };
            let contrib = src
                .nth_derivative(t.deriv as usize)
                .mul_xk(t.power as usize)
                .scale(t.coeff);
            let dst = if t.row == 1 { &mut out.top } else { &mut out.bot };
            *dst = &*dst + &contrib;
        }
        out
    }

    /// Splits the operator by grade with respect to a degree profile.
    pub fn grade_decompose(&self, profile: DegreeProfile) -> GradedDecomposition {
        let mut pieces: BTreeMap<i64, Vec<OpTerm>> = BTreeMap::new();
        for t in &self.terms {
            pieces.entry(grade_of(t, profile)).or_default().push(*t);
        }
        GradedDecomposition {
            pieces: pieces
                .into_iter()
                .map(|(g, ts)| (g, MatrixDiffOp::from_terms(ts)))
                .collect(),
        }
    }

    /// Serializes to the operator-document JSON form.
    pub fn to_json(&self) -> String {
        let doc = OpDoc {
            terms: self
                .terms
                .iter()
                .map(|t| TermDoc {
                    row: t.row,
                    col: t.col,
                    p: t.power,
                    q: t.deriv,
                    re: t.coeff.re,
                    im: t.coeff.im,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("operator document serializes")
    }

    /// Parses the operator-document JSON form, validating indices and
    /// coefficient finiteness.
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let doc: OpDoc =
            serde_json::from_str(s).map_err(|e| Error::InvalidOperator(e.to_string()))?;
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            if !(1..=2).contains(&t.row) || !(1..=2).contains(&t.col) {
                return Err(Error::InvalidOperator(format!(
                    "row/col must be 1 or 2, got ({}, {})",
                    t.row, t.col
                )));
            }
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(Error::InvalidOperator(
                    "coefficients must be finite".to_string(),
                ));
            }
            if t.p > 1_000 || t.q > 1_000 {
                return Err(Error::InvalidOperator(format!(
                    "power/derivative order out of range: ({}, {})",
                    t.p, t.q
                )));
            }
            terms.push(OpTerm::new(t.row, t.col, t.p, t.q, C64::new(t.re, t.im)));
        }
        Ok(MatrixDiffOp::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct OpDoc {
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    row: u8,
    col: u8,
    p: u32,
    q: u32,
    re: f64,
    im: f64,
}

/// Top degrees `(d1, d2)` of the candidate invariant space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub d1: u32,
    pub d2: u32,
}

impl DegreeProfile {
    pub fn new(d1: u32, d2: u32) -> Self {
        DegreeProfile { d1, d2 }
    }

    /// Top degree of the given 1-based component.
    pub fn degree_of(&self, component: u8) -> u32 {
        match component {
            1 => self.d1,
            2 => self.d2,
            _ => panic!("component index must be 1 or 2"),
        }
    }

    /// The off-diagonal exponent bookkeeping `delta = d1 - d2 + 1`.
    pub fn delta(&self) -> i64 {
        self.d1 as i64 - self.d2 as i64 + 1
    }

    /// Dimension of the rank-1 invariant space (`d1 + d2 + 1`).
    pub fn rank1_dimension(&self) -> usize {
        (self.d1 + self.d2 + 1) as usize
    }
}

/// Net degree change a term induces on vectors with the given profile:
/// `power - deriv + d(col) - d(row)`.
pub fn grade_of(term: &OpTerm, profile: DegreeProfile) -> i64 {
    term.power as i64 - term.deriv as i64 + profile.degree_of(term.col) as i64
        - profile.degree_of(term.row) as i64
}

/// Operator split by grade; reassembling all pieces restores the original.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    pieces: BTreeMap<i64, MatrixDiffOp>,
}

impl GradedDecomposition {
    pub fn piece(&self, grade: i64) -> Option<&MatrixDiffOp> {
        self.pieces.get(&grade)
    }

    pub fn grades(&self) -> impl Iterator<Item = i64> + '_ {
        self.pieces.keys().copied()
    }

    pub fn max_grade(&self) -> Option<i64> {
        self.pieces.keys().next_back().copied()
    }

    pub fn reassemble(&self) -> MatrixDiffOp {
        let mut terms = Vec::new();
        for op in self.pieces.values() {
            terms.extend_from_slice(op.terms());
        }
        MatrixDiffOp::from_terms(terms)
    }
}

/// `J_+(m) = x^2 d/dx - m x` in the given diagonal entry, scaled by `c`.
pub fn j_plus(entry: u8, m: f64, c: C64) -> [OpTerm; 2] {
    [
        OpTerm::new(entry, entry, 2, 1, c),
        OpTerm::new(entry, entry, 1, 0, -c * C64::new(m, 0.0)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;
    use crate::poly::Poly;

    fn one() -> C64 {
        c64(1.0, 0.0)
    }

    #[test]
    fn j_plus_annihilates_its_top_monomial() {
        // J_+(m) on x^m gives (m - m) x^{m+1} = 0.
        for m in 1..6u32 {
            let op = MatrixDiffOp::from_terms(j_plus(1, m as f64, one()).to_vec());
            let v = PolyVec2::monomial(0, m as usize, one());
            let w = op.apply(&v);
            assert!(w.top.is_zero() && w.bot.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn j_plus_on_lower_monomials() {
        // J_+(m) x^k = (k - m) x^{k+1}.
        let m = 4.0;
        let op = MatrixDiffOp::from_terms(j_plus(1, m, one()).to_vec());
        for k in 0..8usize {
            let w = op.apply(&PolyVec2::monomial(0, k, one()));
            let want = k as f64 - m;
            if want == 0.0 {
                assert!(w.top.is_zero());
            } else {
                assert_eq!(w.top.degree(), Some(k + 1));
                assert!((w.top.coeff(k + 1) - c64(want, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn grade_examples() {
        let profile = DegreeProfile::new(5, 4);
        // Diagonal x^2 d/dx raises the degree by one.
        let t = OpTerm::new(1, 1, 2, 1, one());
        assert_eq!(grade_of(&t, profile), 1);
        // A (1,2) constant with profile (m-1, m) also sits at grade +1.
        let t = OpTerm::new(1, 2, 0, 0, one());
        let p = DegreeProfile::new(3, 4); // (m-1, m) with m = 4
        assert_eq!(grade_of(&t, p), 1);
        // A (1,2) second-derivative term with profile (n-2, n) is grade 0.
        let t = OpTerm::new(1, 2, 0, 2, one());
        let p = DegreeProfile::new(4, 6);
        assert_eq!(grade_of(&t, p), 0);
    }

    #[test]
    fn identity_operator_single_grade_zero() {
        let op = MatrixDiffOp::from_terms(vec![
            OpTerm::new(1, 1, 0, 0, one()),
            OpTerm::new(2, 2, 0, 0, one()),
        ]);
        let g = op.grade_decompose(DegreeProfile::new(3, 2));
        assert_eq!(g.grades().collect::<Vec<_>>(), vec![0]);
        assert_eq!(g.reassemble(), op);
    }

    #[test]
    fn apply_is_linear() {
        let op = MatrixDiffOp::from_terms(vec![
            OpTerm::new(1, 1, 1, 2, c64(-4.0, 0.0)),
            OpTerm::new(1, 2, 0, 0, c64(2.0, 1.0)),
            OpTerm::new(2, 1, 2, 1, c64(0.0, 3.0)),
            OpTerm::new(2, 2, 0, 1, c64(-2.0, 0.5)),
        ]);
        let u = PolyVec2::new(
            Poly::new(vec![c64(1.0, 2.0), c64(0.0, -1.0), c64(3.0, 0.0)]),
            Poly::new(vec![c64(-1.0, 0.0), c64(2.0, 2.0)]),
        );
        let v = PolyVec2::new(
            Poly::new(vec![c64(0.5, 0.0), c64(1.0, 1.0)]),
            Poly::new(vec![c64(2.0, -1.0), c64(0.0, 0.0), c64(1.0, 1.0)]),
        );
        let a = c64(1.3, -0.7);
        let b = c64(-0.2, 2.1);
        let lhs = op.apply(&u.scale(a).add(&v.scale(b)));
        let rhs = op.apply(&u).scale(a).add(&op.apply(&v).scale(b));
        let diff = lhs.sub(&rhs);
        assert!(diff.max_abs() < 1e-12 * lhs.max_abs().max(1.0));
    }

    #[test]
    fn merge_and_cancel_terms() {
        let op = MatrixDiffOp::from_terms(vec![
            OpTerm::new(1, 1, 1, 0, c64(2.0, 0.0)),
            OpTerm::new(1, 1, 1, 0, c64(-2.0, 0.0)),
            OpTerm::new(2, 1, 0, 0, c64(1.0, 0.0)),
        ]);
        assert_eq!(op.terms().len(), 1);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let op = MatrixDiffOp::from_terms(vec![
            OpTerm::new(1, 2, 0, 0, c64(1.5, -0.25)),
            OpTerm::new(2, 2, 2, 1, c64(0.0, 8.0)),
        ]);
        let s = op.to_json();
        let back = MatrixDiffOp::from_json(&s).unwrap();
        assert_eq!(op, back);

        assert!(MatrixDiffOp::from_json("{").is_err());
        let bad = r#"{"terms":[{"row":3,"col":1,"p":0,"q":0,"re":1.0,"im":0.0}]}"#;
        assert!(matches!(
            MatrixDiffOp::from_json(bad),
            Err(Error::InvalidOperator(_))
        ));
        let nan = r#"{"terms":[{"row":1,"col":1,"p":0,"q":0,"re":null,"im":0.0}]}"#;
        assert!(MatrixDiffOp::from_json(nan).is_err());
    }
}
