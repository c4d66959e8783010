//! Polynomial root finding via Aberth-Ehrlich simultaneous iteration.

use crate::error::Error;
use crate::poly::Poly;
use crate::C64;

/// Default iteration cap for the Aberth-Ehrlich loop.
pub const MAX_ITERATIONS: u32 = 500;

/// Finds all roots (with multiplicity) of a polynomial of degree >= 1.
///
/// Degrees 1 and 2 are solved in closed form; higher degrees run the
/// Aberth-Ehrlich iteration on the monic polynomial. Exact zero trailing
/// coefficients are peeled off as roots at the origin first.
pub fn poly_roots(p: &Poly) -> Result<Vec<C64>, Error> {
    match p.degree() {
        None | Some(0) => return Err(Error::DegreeTooSmall),
        _ => {}
    }
    let mut coeffs: Vec<C64> = p.coeffs().to_vec();

    let mut roots = Vec::new();
    while coeffs.len() > 1 && coeffs[0] == C64::new(0.0, 0.0) {
        roots.push(C64::new(0.0, 0.0));
        coeffs.remove(0);
    }
    let deg = coeffs.len() - 1;
    match deg {
        0 => {}
        1 => roots.push(-coeffs[0] / coeffs[1]),
        2 => roots.extend(quadratic(coeffs[0], coeffs[1], coeffs[2])),
        _ => roots.extend(aberth(&coeffs)?),
    }
    Ok(roots)
}

/// Roots of `c + b x + a x^2` with a stable branch choice.
fn quadratic(c: C64, b: C64, a: C64) -> [C64; 2] {
    let disc = (b * b - 4.0 * a * c).sqrt();
    // Pick the sign that avoids cancellation in -b -+ disc.
    let q = if (b + disc).norm() >= (b - disc).norm() {
        -0.5 * (b + disc)
    } else {
        -0.5 * (b - disc)
    };
    let r1 = q / a;
    let r2 = if q.norm() > 0.0 { c / q } else { -b / a - r1 };
    [r1, r2]
}

fn aberth(coeffs: &[C64]) -> Result<Vec<C64>, Error> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<C64> = coeffs.iter().map(|c| c / lead).collect();
    let dmonic: Vec<C64> = monic[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c * C64::new((i + 1) as f64, 0.0))
        .collect();

    // Initial guesses on a circle sized by the Cauchy bound, angles offset
    // so no guess starts on a symmetry axis.
    let cauchy = 1.0 + monic[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let r0 = monic[0].norm().powf(1.0 / deg as f64).clamp(0.05, cauchy);
    let mut z: Vec<C64> = (0..deg)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / deg as f64 + 0.41;
            C64::from_polar(r0, theta)
        })
        .collect();

    let horner = |cs: &[C64], x: C64| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };

    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0_f64;
        for i in 0..deg {
            let zi = z[i];
            let pz = horner(&monic, zi);
            let dpz = horner(&dmonic, zi);
            if pz.norm() == 0.0 {
                continue;
            }
            let w = if dpz.norm() > 0.0 {
                pz / dpz
            } else {
                // Flat spot: nudge off it.
                C64::new(1e-8, 1e-8)
            };
            let mut s = C64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let d = zi - zj;
                    if d.norm() > 0.0 {
                        s += C64::new(1.0, 0.0) / d;
                    }
                }
            }
            let denom = C64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() > 1e-300 { w / denom } else { w };
            z[i] = zi - step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        if max_step <= 1e-14 {
            return Ok(z);
        }
    }
    Err(Error::NonConvergence(MAX_ITERATIONS))
}

/// Rebuilds `lead * prod (x - r_i)`; used to validate recovered roots.
pub fn from_roots(lead: C64, roots: &[C64]) -> Poly {
    let mut p = Poly::constant(lead);
    for &r in roots {
        p = &p * &Poly::new(vec![-r, C64::new(1.0, 0.0)]);
    }
    p
}

/// Greedy minimal-distance multiset match; returns the largest pairing
/// distance, or `None` when the lengths differ.
pub fn multiset_distance(a: &[C64], b: &[C64]) -> Option<f64> {
    if a.len() != b.len() {
        return None;
    }
    let mut unused: Vec<C64> = b.to_vec();
    let mut worst = 0.0_f64;
    for &x in a {
        let (idx, dist) = unused
            .iter()
            .enumerate()
            .map(|(i, &y)| (i, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))?;
        worst = worst.max(dist);
        unused.swap_remove(idx);
    }
    Some(worst)
}
