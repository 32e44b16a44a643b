use alloc::vec::Vec;

use num_complex::Complex64;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;

use super::dense::CPoly;
use crate::{Error, Result};

/// Modulus below which a leading coefficient is treated as zero.
pub const ZERO_THRESHOLD: f64 = 1e-300;

const MAX_SWEEPS: usize = 500;

/// All complex roots of a polynomial, with multiplicity.
///
/// Near-coincident roots are reported as a multiset without merging;
/// downstream measure computations sum over roots, so merging is never
/// needed.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// max |P(r_i)| over the returned roots.
    pub residual: f64,
    pub lead: Complex64,
}

/// Simultaneous-iteration (Aberth–Ehrlich) root finder.
///
/// Initial guesses sit on a circle of radius `1 + max|c_i / c_d|`. Success
/// requires `max |P(r_i)| / |lead| <= tol * (1 + max|r_i|)^deg`; otherwise an
/// error carrying the best residual is returned.
pub fn roots(p: &CPoly, tol: f64) -> Result<RootSet> {
    p.check_finite()?;
    let deg = match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::InvalidInput("roots requires degree >= 1")),
        Some(d) => d,
    };
    let lead = *p.leading().expect("nonzero");
    if lead.norm() <= ZERO_THRESHOLD {
        return Err(Error::InvalidInput("leading coefficient below zero threshold"));
    }

    // deflate exact zero roots so low-degree closed forms stay clean
    let mut coeffs: Vec<Complex64> = p.coeffs().to_vec();
    let mut zero_roots = 0usize;
    while coeffs.len() > 1 && coeffs[0] == Complex64::new(0.0, 0.0) {
        coeffs.remove(0);
        zero_roots += 1;
    }

    let mut found: Vec<Complex64> = (0..zero_roots).map(|_| Complex64::new(0.0, 0.0)).collect();
    match coeffs.len() - 1 {
        0 => {}
        1 => found.push(-coeffs[0] / coeffs[1]),
        2 => found.extend(quadratic_roots(coeffs[0], coeffs[1], coeffs[2])),
        _ => found.extend(aberth(&coeffs)?),
    }

    let max_mod = found.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let residual = found
        .iter()
        .map(|r| p.eval(r).norm())
        .fold(0.0, f64::max);
    let bound = tol * (1.0 + max_mod).powi(deg as i32) * lead.norm();
    if residual <= bound {
        Ok(RootSet {
            roots: found,
            residual,
            lead,
        })
    } else {
        Err(Error::RootsDidNotConverge { residual })
    }
}

/// Stable quadratic formula (citardauq for the small root).
fn quadratic_roots(c0: Complex64, c1: Complex64, c2: Complex64) -> [Complex64; 2] {
    let disc = (c1 * c1 - 4.0 * c2 * c0).sqrt();
    // pick the sign that avoids cancellation in -c1 -/+ disc
    let q = if (c1 * disc.conj()).re >= 0.0 {
        -0.5 * (c1 + disc)
    } else {
        -0.5 * (c1 - disc)
    };
    if q.norm() > 0.0 {
        [q / c2, c0 / q]
    } else {
        // c0 == 0 handled by deflation; c1 == 0 gives symmetric pair
        let r = (-c0 / c2).sqrt();
        [r, -r]
    }
}

fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);

    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * core::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            radius * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();

    let eval_with_derivative = |x: &Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };

    let coeff_scale = monic.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut best_residual = f64::INFINITY;
    for _sweep in 0..MAX_SWEEPS {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval_with_derivative(&z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() > 0.0 {
                p / dp
            } else {
                // flat spot: nudge off it
                Complex64::new(1e-8, 1e-8)
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        sum += 1.0 / diff;
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum;
            let step = if denom.norm() > 1e-12 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
        }
        let residual = z
            .iter()
            .map(|r| {
                let (p, _) = eval_with_derivative(r);
                p.norm()
            })
            .fold(0.0, f64::max);
        best_residual = best_residual.min(residual);
        if max_step < 1e-15 || residual < 1e-14 * (1.0 + coeff_scale) {
            break;
        }
    }

    // polish with a couple of Newton steps per root
    for r in z.iter_mut() {
        for _ in 0..2 {
            let (p, dp) = eval_with_derivative(r);
            if dp.norm() > 0.0 {
                let step = p / dp;
                if step.norm() < 0.5 * (1.0 + r.norm()) {
                    *r -= step;
                }
            }
        }
    }

    if z.iter().all(|r| r.re.is_finite() && r.im.is_finite()) {
        Ok(z)
    } else {
        Err(Error::RootsDidNotConverge {
            residual: best_residual,
        })
    }
}
