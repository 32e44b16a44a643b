//! Green's function / potential by escape-rate limits, canonical heights,
//! and the univariate dynamical Mahler measure via dynamical Jensen.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::{Float, Signed, ToPrimitive, Zero};

use crate::dynamics::{escape_radius, is_preperiodic_exact, orbit, ExactPreper, OrbitStatus};
use crate::poly::{roots, CPoly, ZPoly};
use crate::Result;

/// Value of the potential `p_{μ_f}(z)` (the Green's function for monic f).
#[derive(Clone, Copy, Debug)]
pub struct PotentialValue {
    pub value: f64,
    /// `false` only in the ambiguous bounded case: the orbit neither escaped
    /// nor settled into a visible cycle within the iteration budget. The
    /// returned 0 is then heuristic (the point sits near `J_f`).
    pub converged: bool,
    pub iterations_used: usize,
}

/// Escape-rate limit `g(z) = lim_n d^{-n} log|f^n(z)|`.
///
/// Once the orbit leaves the escape radius the increments
/// `d^{-(n+1)} log|z_{n+1}| - d^{-n} log|z_n|` shrink geometrically; the
/// refinement stops when they drop below `tol` (with at least three extra
/// iterations past escape). Bounded orbits give 0.
pub fn green(f: &ZPoly, z: Complex64, max_iter: usize, tol: f64) -> PotentialValue {
    assert!(f.is_monic() && f.deg() >= 2);
    let d = f.deg() as f64;
    let radius = escape_radius(f);
    let fc = f.to_cpoly();

    let mut w = z;
    for n in 0..=max_iter {
        if w.norm() > radius {
            // refine: keep iterating while increments matter
            let mut k = n;
            let mut scale = d.powi(-(n as i32));
            let mut est = scale * w.norm().ln();
            let mut extra = 0usize;
            while k < n + max_iter {
                if w.norm() > 1e100 {
                    break;
                }
                w = fc.eval(&w);
                k += 1;
                scale /= d;
                let next = scale * w.norm().ln();
                let inc = (next - est).abs();
                est = next;
                extra += 1;
                if extra >= 3 && inc < tol {
                    break;
                }
            }
            return PotentialValue {
                value: est.max(0.0),
                converged: true,
                iterations_used: k,
            };
        }
        w = fc.eval(&w);
    }

    // bounded through the budget: decide whether the orbit is visibly cyclic
    let rep = orbit(f, z, max_iter, 1e-9);
    let converged = matches!(rep.status, OrbitStatus::CycleDetected { .. });
    PotentialValue {
        value: 0.0,
        converged,
        iterations_used: max_iter,
    }
}

/// Canonical height estimate with its error bound.
#[derive(Clone, Copy, Debug)]
pub struct HeightValue {
    pub value: f64,
    pub error_bound: f64,
}

/// Natural log of a nonzero big integer's absolute value.
fn ln_bigint(n: &BigInt) -> f64 {
    let n = n.abs();
    if let Some(v) = n.to_f64() {
        if v.is_finite() && v > 0.0 {
            return v.ln();
        }
    }
    // shift down to a representable mantissa
    let bits = n.bits();
    let shift = bits.saturating_sub(64);
    let top = (n >> shift).to_f64().unwrap_or(f64::MAX);
    top.ln() + (shift as f64) * core::f64::consts::LN_2
}

/// Naive (Weil) height of a reduced rational: `log max(|num|, |den|)`.
fn naive_height(x: &BigRational) -> f64 {
    let n = x.numer().abs();
    let d = x.denom().abs();
    let m = if n > d { n } else { d };
    if m.is_zero() {
        0.0
    } else {
        ln_bigint(&m).max(0.0)
    }
}

/// Canonical height `ĥ_f(α) = lim h(f^n(α)) / d^n` by exact rational
/// iteration.
///
/// Preperiodic points (decided exactly) give 0 exactly. Otherwise iteration
/// stops when the tail bound `C / (d^N (d-1))` with
/// `C = d log(2 (1 + Σ|c_i|))` reaches `target_error`, or when the exact
/// values grow past a size cap (the bound is then reported as-is).
pub fn canonical_height(f: &ZPoly, alpha: &BigRational, target_error: f64) -> HeightValue {
    assert!(f.is_monic() && f.deg() >= 2);
    if let ExactPreper::Preperiodic { .. } = is_preperiodic_exact(f, alpha) {
        return HeightValue {
            value: 0.0,
            error_bound: 0.0,
        };
    }
    let d = f.deg() as f64;
    let c_const = d * (2.0 * (1.0 + f.lower_coeff_abs_sum())).ln();
    let fq = f.to_qpoly();

    const HEIGHT_CAP: f64 = 2e5; // nats; keeps exact values below ~10^5 digits
    const MAX_STEPS: usize = 64;

    let mut x = alpha.clone();
    let mut n = 0usize;
    let mut scale = 1.0f64;
    loop {
        let bound = c_const * scale / (d - 1.0);
        let h = naive_height(&x);
        if (bound <= target_error && n >= 1) || h > HEIGHT_CAP || n >= MAX_STEPS {
            return HeightValue {
                value: (h * scale).max(0.0),
                error_bound: bound,
            };
        }
        x = fq.eval(&x);
        n += 1;
        scale /= d;
    }
}

/// `m_f(P) = log|lead(P)| + Σ_i g_f(α_i)` over the roots of `P`
/// (dynamical Jensen formula).
pub fn mahler_univariate_jensen(f: &ZPoly, p: &CPoly, tol: f64) -> Result<f64> {
    let rs = roots(p, tol)?;
    let mut total = rs.lead.norm().ln();
    for r in &rs.roots {
        total += green(f, *r, 10_000, 1e-13).value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream_rng;
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zp(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn green_power_map_closed_form() {
        let f = zp(&[0, 0, 1]);
        let g = green(&f, c(2.0, 0.0), 10_000, 1e-13);
        assert!((g.value - 2.0f64.ln()).abs() < 1e-12);
        assert!(g.converged);

        let g = green(&f, c(0.5, 0.0), 10_000, 1e-13);
        assert_eq!(g.value, 0.0);
        assert!(g.converged);

        let mut rng = stream_rng(42, 0);
        for _ in 0..1000 {
            let r = 0.1 + 9.9 * rng.gen::<f64>();
            let theta = 2.0 * core::f64::consts::PI * rng.gen::<f64>();
            let z = r * c(theta.cos(), theta.sin());
            let g = green(&f, z, 10_000, 1e-13);
            assert!((g.value - r.max(1.0).ln()).abs() < 1e-9, "r={r}");
        }
    }

    #[test]
    fn green_vanishes_on_attracting_basin() {
        let f = zp(&[-1, 0, 1]);
        let g = green(&f, c(0.0, 0.0), 10_000, 1e-13);
        assert_eq!(g.value, 0.0);
        assert!(g.converged);
    }

    #[test]
    fn green_functional_equation() {
        let panel = [zp(&[-1, 0, 1]), zp(&[1, -1, 0, 1]), zp(&[-2, 0, 1])];
        let mut rng = stream_rng(7, 1);
        for f in &panel {
            let d = f.deg() as f64;
            let fc = f.to_cpoly();
            let mut tested = 0;
            while tested < 200 {
                let z = c(
                    6.0 * rng.gen::<f64>() - 3.0,
                    6.0 * rng.gen::<f64>() - 3.0,
                );
                let gz = green(f, z, 10_000, 1e-13);
                if gz.value <= 0.0 {
                    continue; // want escaping points
                }
                let gfz = green(f, fc.eval(&z), 10_000, 1e-13);
                assert!(
                    (gfz.value - d * gz.value).abs() < 1e-8,
                    "f={f}, z={z}"
                );
                tested += 1;
            }
        }
    }

    #[test]
    fn green_nonnegative_and_zero_on_preperiodic() {
        let f = zp(&[-2, 0, 1]);
        for k in [-2.0, -1.0, 0.0, 1.0, 2.0] {
            let g = green(&f, c(k, 0.0), 10_000, 1e-13);
            assert!(g.value >= 0.0);
            assert!(g.value < 1e-12, "integer point {k} of z^2-2 is preperiodic");
        }
    }

    #[test]
    fn height_power_map() {
        let f = zp(&[0, 0, 1]);
        let h = canonical_height(&f, &rat(2, 1), 1e-9);
        assert!((h.value - 2.0f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn height_zero_iff_preperiodic() {
        let f = zp(&[-1, 0, 1]);
        let h = canonical_height(&f, &rat(0, 1), 1e-9);
        assert_eq!(h.value, 0.0);
        assert_eq!(h.error_bound, 0.0);

        let h = canonical_height(&f, &rat(2, 1), 1e-9);
        assert!(h.value > 0.5);
    }

    #[test]
    fn height_stability_between_depths() {
        // f = z^2 - 1, α = 2: compare exact brute force at N and N+1
        let f = zp(&[-1, 0, 1]);
        let fq = f.to_qpoly();
        let mut x = rat(2, 1);
        for _ in 0..20 {
            x = fq.eval(&x);
        }
        let est20 = naive_height(&x) / 2.0f64.powi(20);
        x = fq.eval(&x);
        let est21 = naive_height(&x) / 2.0f64.powi(21);
        assert!((est20 - est21).abs() < 1e-6);
        let h = canonical_height(&f, &rat(2, 1), 1e-9);
        assert!((h.value - est21).abs() < 1e-5);
    }

    #[test]
    fn height_scaling() {
        let f = zp(&[-1, 0, 1]);
        let fq = f.to_qpoly();
        let mut rng = stream_rng(11, 2);
        let mut tested = 0;
        while tested < 20 {
            let num = rng.gen_range(-30i64..30);
            let den = rng.gen_range(1i64..10);
            let a = rat(num, den);
            if matches!(is_preperiodic_exact(&f, &a), ExactPreper::Preperiodic { .. }) {
                continue;
            }
            let h_a = canonical_height(&f, &a, 1e-9);
            let h_fa = canonical_height(&f, &fq.eval(&a), 1e-9);
            let budget = h_fa.error_bound + 2.0 * h_a.error_bound + 1e-9;
            assert!(
                (h_fa.value - 2.0 * h_a.value).abs() <= budget,
                "alpha={a}: {} vs {}",
                h_fa.value,
                2.0 * h_a.value
            );
            tested += 1;
        }
    }

    #[test]
    fn jensen_power_map_examples() {
        let f = zp(&[0, 0, 1]);
        let p = zp(&[-2, 1]).to_cpoly();
        let m = mahler_univariate_jensen(&f, &p, 1e-10).unwrap();
        assert!((m - 2.0f64.ln()).abs() < 1e-9);

        let lehmer = zp(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]).to_cpoly();
        let m = mahler_univariate_jensen(&f, &lehmer, 1e-10).unwrap();
        assert!((m - 0.162357612).abs() < 1e-6);
    }

    #[test]
    fn jensen_vanishes_on_preperiodic_roots() {
        // f = z^2 - 1, P = x^2 + x (roots 0 and -1, a superattracting cycle)
        let f = zp(&[-1, 0, 1]);
        let p = zp(&[0, 1, 1]).to_cpoly();
        let m = mahler_univariate_jensen(&f, &p, 1e-10).unwrap();
        assert!(m.abs() < 1e-9);
    }

    #[test]
    fn jensen_additivity() {
        let f = zp(&[-1, 0, 1]);
        let p = zp(&[-2, 1]).to_cpoly();
        let q = zp(&[-1, 3, 1]).to_cpoly();
        let mp = mahler_univariate_jensen(&f, &p, 1e-10).unwrap();
        let mq = mahler_univariate_jensen(&f, &q, 1e-10).unwrap();
        let mpq = mahler_univariate_jensen(&f, &(&p * &q), 1e-10).unwrap();
        assert!((mpq - mp - mq).abs() < 1e-8);
    }
}
