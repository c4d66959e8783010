//! Cross-cutting invariants checked on randomized inputs (seeded).

use proptest::prelude::*;
use qeslab_core::certify::{certify, extract_matrices, Verdict, DEFAULT_TOL};
use qeslab_core::diffop::{DegreeProfile, MatrixDiffOp, OpTerm};
use qeslab_core::matrix::{CMatrix, Lstsq};
use qeslab_core::models::trig::{trig_qes_params, trig_operator, WaveType};
use qeslab_core::poly::{Poly, PolyVec2};
use qeslab_core::roots::{from_roots, multiset_distance, poly_roots};
use qeslab_core::spectrum::{build_basis, matrix_rep};
use qeslab_core::{c64, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_c64(r: &mut ChaCha8Rng) -> C64 {
    c64(r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0))
}

fn rand_matrix(r: &mut ChaCha8Rng, n: usize) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = rand_c64(r);
        }
    }
    m
}

#[test]
fn eig_shift_invariance_random_matrices() {
    let mut r = rng(11);
    for dim in 2..=12usize {
        for _ in 0..4 {
            let m = rand_matrix(&mut r, dim);
            let c = rand_c64(&mut r);
            let base = m.eig().unwrap();
            let shifted_matrix = m.add(&CMatrix::identity(dim).scale(c));
            let shifted = shifted_matrix.eig().unwrap();
            let want: Vec<C64> = base.iter().map(|e| e + c).collect();
            let d = multiset_distance(&want, &shifted).unwrap();
            assert!(d < 1e-10, "dim {dim}: shift mismatch {d}");
        }
    }
}

#[test]
fn eig_at_the_dimension_cap() {
    // Large dense matrices up to the cap: the eigenvalue sum must match the
    // trace, and a diagonal shift must move the whole multiset rigidly.
    let mut r = rng(19);
    for dim in [24usize, 48, 64] {
        let m = rand_matrix(&mut r, dim);
        let eigs = m.eig().unwrap();
        assert_eq!(eigs.len(), dim);
        let sum: C64 = eigs.iter().sum();
        let scale: f64 = eigs.iter().map(|e| e.norm()).sum::<f64>().max(1.0);
        assert!(
            (sum - m.trace()).norm() < 1e-10 * scale,
            "dim {dim}: eigenvalue sum drifted from the trace by {}",
            (sum - m.trace()).norm()
        );
        let c = rand_c64(&mut r);
        let shifted = m.add(&CMatrix::identity(dim).scale(c)).eig().unwrap();
        let want: Vec<C64> = eigs.iter().map(|e| e + c).collect();
        let d = multiset_distance(&want, &shifted).unwrap();
        assert!(d < 1e-9, "dim {dim}: shift mismatch {d}");
    }
    let too_big = CMatrix::zeros(65, 65);
    assert!(matches!(
        too_big.eig(),
        Err(qeslab_core::Error::TooLarge(65))
    ));
}

#[test]
fn eig_agrees_with_char_poly_roots() {
    let mut r = rng(12);
    for dim in 2..=8usize {
        for _ in 0..4 {
            let m = rand_matrix(&mut r, dim);
            let e1 = m.eig().unwrap();
            let e2 = poly_roots(&m.char_poly().unwrap()).unwrap();
            let d = multiset_distance(&e1, &e2).unwrap();
            assert!(d < 1e-8, "dim {dim}: routes disagree by {d}");
        }
    }
}

#[test]
fn roots_round_trip_random_products() {
    let mut r = rng(13);
    for deg in 3..=8usize {
        for _ in 0..6 {
            // Well-separated random roots.
            let mut want: Vec<C64> = Vec::new();
            while want.len() < deg {
                let cand = c64(r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
                if want.iter().all(|w| (w - cand).norm() > 0.35) {
                    want.push(cand);
                }
            }
            let p = from_roots(rand_c64(&mut r) + c64(3.0, 0.0), &want);
            let got = poly_roots(&p).unwrap();
            let d = multiset_distance(&got, &want).unwrap();
            assert!(d < 1e-8, "deg {deg}: {d}");
        }
    }
}

fn rand_op(r: &mut ChaCha8Rng, nterms: usize) -> MatrixDiffOp {
    let terms: Vec<OpTerm> = (0..nterms)
        .map(|_| {
            OpTerm::new(
                r.gen_range(1..=2),
                r.gen_range(1..=2),
                r.gen_range(0..5),
                r.gen_range(0..4),
                rand_c64(r),
            )
        })
        .collect();
    MatrixDiffOp::from_terms(terms)
}

fn rand_vec2(r: &mut ChaCha8Rng, d1: usize, d2: usize) -> PolyVec2 {
    let top = Poly::new((0..=d1).map(|_| rand_c64(r)).collect());
    let bot = Poly::new((0..=d2).map(|_| rand_c64(r)).collect());
    PolyVec2::new(top, bot)
}

#[test]
fn graded_reassembly_reproduces_application() {
    let mut r = rng(14);
    for _ in 0..20 {
        let nterms = r.gen_range(5..40);
        let op = rand_op(&mut r, nterms);
        let profile = DegreeProfile::new(r.gen_range(0..6), r.gen_range(0..6));
        let g = op.grade_decompose(profile);
        assert_eq!(g.reassemble(), op);
        for _ in 0..10 {
            let v = rand_vec2(&mut r, 4, 4);
            let direct = op.apply(&v);
            let mut summed = PolyVec2::zero();
            for grade in g.grades() {
                summed = summed.add(&g.piece(grade).unwrap().apply(&v));
            }
            let diff = direct.sub(&summed);
            assert!(diff.max_abs() <= 1e-12 * direct.max_abs().max(1.0));
        }
    }
}

#[test]
fn grade_degree_law_on_certified_models() {
    // A grade-g piece applied to a vector with component degrees exactly
    // (d1, d2) produces degrees <= (d1+g, d2+g).
    let mut r = rng(15);
    let p = trig_qes_params(2, 1.3, 0.5, c64(1.0, 0.0), WaveType::I).unwrap();
    let (op, profile) = trig_operator(&p).unwrap();
    let g = op.grade_decompose(profile);
    for _ in 0..10 {
        let v = rand_vec2(&mut r, profile.d1 as usize, profile.d2 as usize);
        for grade in g.grades() {
            let w = g.piece(grade).unwrap().apply(&v);
            let lim1 = profile.d1 as i64 + grade;
            let lim2 = profile.d2 as i64 + grade;
            if let Some(d) = w.top.degree() {
                assert!(d as i64 <= lim1, "grade {grade}: top degree {d}");
            }
            if let Some(d) = w.bot.degree() {
                assert!(d as i64 <= lim2, "grade {grade}: bot degree {d}");
            }
        }
    }
}

#[test]
fn condition_ii_holds_for_arbitrary_subleading_coefficients() {
    // For certified rank-1 instances, M~_1 (a1, b1)^t + M_0 (a0, b0)^t stays
    // proportional to (a0, b0)^t no matter the subleading coefficients.
    let mut r = rng(16);
    let p = trig_qes_params(2, 0.8, 0.45, c64(1.0, 0.0), WaveType::I).unwrap();
    let (op, profile) = trig_operator(&p).unwrap();
    let cert = certify(&op, profile, DEFAULT_TOL);
    assert_eq!(cert.verdict, Verdict::CertifiedRank1);
    let (m1t, m0) = (cert.m1_tilde.clone(), cert.m0.clone());
    let k = cert.kernel.unwrap();
    let m0k = m0.matvec(&k);
    let scale = m1t.frobenius_norm().max(m0.frobenius_norm());
    for _ in 0..20 {
        let sub = [rand_c64(&mut r), rand_c64(&mut r)];
        let lhs = m1t.matvec(&sub);
        let total = [lhs[0] + m0k[0], lhs[1] + m0k[1]];
        let cross = total[0] * k[1] - total[1] * k[0];
        assert!(
            cross.norm() <= 1e-9 * scale * (1.0 + sub[0].norm() + sub[1].norm()),
            "cross product {cross}"
        );
    }
}

/// Least-squares representation over an arbitrary basis ordering; the
/// independent route used to check basis-order invariance.
fn rep_by_lstsq(op: &MatrixDiffOp, vectors: &[PolyVec2]) -> CMatrix {
    let images: Vec<PolyVec2> = vectors.iter().map(|v| op.apply(v)).collect();
    let deg1 = vectors
        .iter()
        .chain(&images)
        .filter_map(|v| v.top.degree())
        .max()
        .unwrap_or(0);
    let deg2 = vectors
        .iter()
        .chain(&images)
        .filter_map(|v| v.bot.degree())
        .max()
        .unwrap_or(0);
    let rows = deg1 + deg2 + 2;
    let stack = |v: &PolyVec2| -> Vec<C64> {
        let mut s = vec![c64(0.0, 0.0); rows];
        for (k, c) in v.top.coeffs().iter().enumerate() {
            s[k] = *c;
        }
        for (k, c) in v.bot.coeffs().iter().enumerate() {
            s[deg1 + 1 + k] = *c;
        }
        s
    };
    let mut b = CMatrix::zeros(rows, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, c) in stack(v).into_iter().enumerate() {
            b[(i, j)] = c;
        }
    }
    let f = Lstsq::new(&b);
    let mut rep = CMatrix::zeros(vectors.len(), vectors.len());
    for (j, img) in images.iter().enumerate() {
        let (x, _) = f.solve(&stack(img)).unwrap();
        for (i, c) in x.into_iter().enumerate() {
            rep[(i, j)] = c;
        }
    }
    rep
}

#[test]
fn basis_order_independence_of_the_spectrum() {
    let mut r = rng(17);
    let p = trig_qes_params(2, 1.0, 0.6, c64(1.0, 0.0), WaveType::I).unwrap();
    let (op, profile) = trig_operator(&p).unwrap();
    let cert = certify(&op, profile, DEFAULT_TOL);
    let basis = build_basis(&cert, profile).unwrap();
    let (rep, _) = matrix_rep(&op, &basis).unwrap();
    let reference = rep.eig().unwrap();

    let mut vectors: Vec<PolyVec2> = basis.vectors().to_vec();
    for _ in 0..4 {
        // Fisher-Yates shuffle.
        for i in (1..vectors.len()).rev() {
            let j = r.gen_range(0..=i);
            vectors.swap(i, j);
        }
        let rep2 = rep_by_lstsq(&op, &vectors);
        let eigs = rep2.eig().unwrap();
        let d = multiset_distance(&reference, &eigs).unwrap();
        assert!(d < 1e-10, "permuted-basis spectrum moved by {d}");
    }
}

#[test]
fn certify_scale_invariance_on_a_model() {
    let mut r = rng(18);
    let p = trig_qes_params(1, 0.6, 0.4, c64(1.0, 0.0), WaveType::III).unwrap();
    let (op, profile) = trig_operator(&p).unwrap();
    let base = certify(&op, profile, DEFAULT_TOL);
    for _ in 0..5 {
        let c = {
            let mut x = rand_c64(&mut r);
            while x.norm() < 0.1 {
                x = rand_c64(&mut r);
            }
            x
        };
        let cert = certify(&op.scale(c), profile, DEFAULT_TOL);
        assert_eq!(cert.verdict, base.verdict);
        let a = base.kernel.unwrap();
        let b = cert.kernel.unwrap();
        let cross = a[0] * b[1] - a[1] * b[0];
        assert!(cross.norm() < 1e-10);
    }
}

#[test]
fn extracted_matrices_are_scale_equivariant() {
    let p = trig_qes_params(2, 0.4, 0.3, c64(1.0, 0.0), WaveType::II).unwrap();
    let (op, profile) = trig_operator(&p).unwrap();
    let (m1, m1t, m0) = extract_matrices(&op.grade_decompose(profile), profile);
    let c = c64(0.0, -3.0);
    let (s1, s1t, s0) = extract_matrices(&op.scale(c).grade_decompose(profile), profile);
    for (a, b) in [(&m1, &s1), (&m1t, &s1t), (&m0, &s0)] {
        assert!(a.scale(c).sub(b).frobenius_norm() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_product_degree_adds(
        a in proptest::collection::vec(-3.0f64..3.0, 1..6),
        b in proptest::collection::vec(-3.0f64..3.0, 1..6),
    ) {
        let pa = Poly::new(a.iter().map(|&x| c64(x, 0.5 * x)).collect());
        let pb = Poly::new(b.iter().map(|&x| c64(-x, x * x)).collect());
        let prod = &pa * &pb;
        match (pa.degree(), pb.degree()) {
            (Some(da), Some(db)) => {
                // Leading coefficients cannot cancel in a product.
                prop_assert_eq!(prod.degree(), Some(da + db));
            }
            _ => prop_assert!(prod.is_zero()),
        }
    }

    #[test]
    fn poly_eval_is_ring_homomorphism(
        a in proptest::collection::vec(-2.0f64..2.0, 1..5),
        b in proptest::collection::vec(-2.0f64..2.0, 1..5),
        zre in -1.5f64..1.5,
        zim in -1.5f64..1.5,
    ) {
        let pa = Poly::new(a.iter().map(|&x| c64(x, -x)).collect());
        let pb = Poly::new(b.iter().map(|&x| c64(0.3 * x, x)).collect());
        let z = c64(zre, zim);
        let sum = (&pa + &pb).eval(z);
        prop_assert!((sum - (pa.eval(z) + pb.eval(z))).norm() < 1e-10);
        let prod = (&pa * &pb).eval(z);
        prop_assert!((prod - pa.eval(z) * pb.eval(z)).norm() < 1e-9 * (1.0 + prod.norm()));
    }

    #[test]
    fn operator_json_round_trip(
        rows in proptest::collection::vec((1u8..=2, 1u8..=2, 0u32..5, 0u32..4, -3.0f64..3.0, -3.0f64..3.0), 1..12)
    ) {
        let op = MatrixDiffOp::from_terms(
            rows.iter()
                .map(|&(r, c, p, q, re, im)| OpTerm::new(r, c, p, q, c64(re, im)))
                .collect(),
        );
        let s = op.to_json();
        let back = MatrixDiffOp::from_json(&s).unwrap();
        prop_assert_eq!(op, back);
    }
}
