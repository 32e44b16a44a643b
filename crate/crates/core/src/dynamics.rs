//! Orbits, escape radii, preperiodicity, periodic points, and cycle
//! classification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::{Float, Signed};

use crate::poly::{roots, AffineMap, ZPoly};
use crate::rng::stream_rng;
use crate::{Error, Result};
use rand::Rng;

/// Escape radius for a monic integer polynomial of degree >= 2.
///
/// Returns `R = max(2, 2*S, S + 2)` where `S` is the sum of |c_i| over the
/// non-leading coefficients. For `|z| >= R` this guarantees
/// `|f(z)| >= 2 |z|`: with `|z| >= 1`, `|f(z)| >= |z|^{d-1} (|z| - S)`, and
/// `|z| >= S + 2` makes the last factor at least 2.
pub fn escape_radius(f: &ZPoly) -> f64 {
    assert!(f.is_monic() && f.deg() >= 2, "escape_radius requires monic f of degree >= 2");
    let s = f.lower_coeff_abs_sum();
    (2.0f64).max(2.0 * s).max(s + 2.0)
}

/// Outcome of a forward orbit.
#[derive(Clone, Debug, PartialEq)]
pub enum OrbitStatus {
    Escaped { at_step: usize },
    CycleDetected { tail: usize, period: usize },
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    /// Orbit values starting at `z0` (capped in length for long orbits).
    pub points: Vec<Complex64>,
    pub status: OrbitStatus,
}

const ORBIT_POINT_CAP: usize = 4096;

/// Iterates `z0` under `f` until escape, cycle detection (Brent's
/// algorithm with relative tolerance `tol`), or `max_iter` steps.
pub fn orbit(f: &ZPoly, z0: Complex64, max_iter: usize, tol: f64) -> OrbitReport {
    let fc = f.to_cpoly();
    let radius = escape_radius(f);
    let step = |z: &Complex64| fc.eval(z);
    let close = |a: &Complex64, b: &Complex64| (a - b).norm() <= tol * (1.0 + a.norm());

    let record = |n: usize| {
        let mut pts = Vec::with_capacity(n.min(ORBIT_POINT_CAP));
        let mut z = z0;
        for _ in 0..n.min(ORBIT_POINT_CAP) {
            pts.push(z);
            z = step(&z);
        }
        pts
    };

    if z0.norm() > radius {
        return OrbitReport {
            points: record(1),
            status: OrbitStatus::Escaped { at_step: 0 },
        };
    }

    // Brent: find a period, then the tail length.
    let mut power = 1usize;
    let mut lam = 1usize;
    let mut tortoise = z0;
    let mut hare = step(&z0);
    let mut steps = 1usize;
    loop {
        if hare.norm() > radius {
            return OrbitReport {
                points: record(steps + 1),
                status: OrbitStatus::Escaped { at_step: steps },
            };
        }
        if close(&tortoise, &hare) {
            break;
        }
        if steps >= max_iter {
            return OrbitReport {
                points: record(max_iter.min(ORBIT_POINT_CAP)),
                status: OrbitStatus::Undetermined,
            };
        }
        if power == lam {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        hare = step(&hare);
        steps += 1;
        lam += 1;
    }

    // minimal period dividing lam
    let mut period = lam;
    'div: for p in 1..lam {
        if lam % p == 0 {
            let mut w = tortoise;
            for _ in 0..p {
                w = step(&w);
            }
            if close(&tortoise, &w) {
                period = p;
                break 'div;
            }
        }
    }

    // tail: advance a probe `period` steps ahead and walk both forward
    let mut probe = z0;
    for _ in 0..period {
        probe = step(&probe);
    }
    let mut base = z0;
    let mut tail = 0usize;
    while !close(&base, &probe) {
        base = step(&base);
        probe = step(&probe);
        tail += 1;
        if tail > max_iter {
            return OrbitReport {
                points: record(max_iter.min(ORBIT_POINT_CAP)),
                status: OrbitStatus::Undetermined,
            };
        }
    }

    OrbitReport {
        points: record(tail + period),
        status: OrbitStatus::CycleDetected { tail, period },
    }
}

/// Exact preperiodicity verdict for rational starting points.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactPreper {
    Preperiodic { tail: usize, period: usize },
    Wandering,
}

/// Decides preperiodicity of a rational point under monic integer `f`
/// exactly.
///
/// Non-integer rationals wander: with `f` monic over the integers the
/// denominator of the orbit grows as `b^{d^n}` and can never repeat.
/// Integer orbits either exceed the escape radius (wandering, rigorous) or
/// revisit one of the finitely many integers inside it (preperiodic), so
/// this always terminates.
pub fn is_preperiodic_exact(f: &ZPoly, alpha: &BigRational) -> ExactPreper {
    assert!(f.is_monic() && f.deg() >= 2);
    if !alpha.is_integer() {
        return ExactPreper::Wandering;
    }
    let radius = BigInt::from(escape_radius(f).ceil() as i64);
    let mut seen: BTreeMap<BigInt, usize> = BTreeMap::new();
    let mut v = alpha.to_integer();
    let mut n = 0usize;
    loop {
        if v.abs() > radius {
            return ExactPreper::Wandering;
        }
        if let Some(&first) = seen.get(&v) {
            return ExactPreper::Preperiodic {
                tail: first,
                period: n - first,
            };
        }
        seen.insert(v.clone(), n);
        v = f.eval(&v);
        n += 1;
    }
}

/// Numeric preperiodicity surrogate.
#[derive(Clone, Debug, PartialEq)]
pub enum NumericPreper {
    /// Heuristic: a numeric cycle within tolerance was observed.
    Preperiodic { tail: usize, period: usize },
    /// Rigorous: the orbit exceeded the escape radius.
    Wandering,
    Undetermined,
}

pub fn is_preperiodic_numeric(
    f: &ZPoly,
    z0: Complex64,
    tol: f64,
    max_iter: usize,
) -> NumericPreper {
    match orbit(f, z0, max_iter, tol).status {
        OrbitStatus::Escaped { .. } => NumericPreper::Wandering,
        OrbitStatus::CycleDetected { tail, period } => NumericPreper::Preperiodic { tail, period },
        OrbitStatus::Undetermined => NumericPreper::Undetermined,
    }
}

/// Roots of `f^n(z) - z` with multiplicity, Newton-refined.
pub fn periodic_points(f: &ZPoly, n: u32, tol: f64, degree_cap: usize) -> Result<Vec<Complex64>> {
    assert!(f.is_monic() && f.deg() >= 2);
    let d = f.deg();
    let mut total: usize = 1;
    for _ in 0..n {
        total = total.saturating_mul(d);
        if total > degree_cap {
            return Err(Error::DegreeCapExceeded {
                required: total,
                cap: degree_cap,
            });
        }
    }
    let g = &f.iterate(n) - &ZPoly::identity();
    let gc = g.to_cpoly();
    let dgc = gc.derivative();
    let mut pts = roots(&gc, tol)?.roots;
    for p in pts.iter_mut() {
        for _ in 0..3 {
            let val = gc.eval(p);
            let der = dgc.eval(p);
            if der.norm() > 1e-12 {
                let step = val / der;
                if step.norm() < 0.5 {
                    *p -= step;
                }
            }
        }
    }
    Ok(pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleClass {
    Superattracting,
    Attracting,
    Neutral,
    Repelling,
}

/// Classification of a cycle by its multiplier.
#[derive(Clone, Debug)]
pub struct CycleReport {
    pub cycle: Vec<Complex64>,
    /// Product of `f'` over the cycle.
    pub multiplier: Complex64,
    pub class: CycleClass,
    /// `arg(multiplier) / 2π`, with a nearest-rational hint `(p, q)` when it
    /// is close to a low-order fraction. Deciding whether the multiplier is
    /// exactly a root of unity is ill-posed numerically, so only hints are
    /// reported.
    pub arg_turns: f64,
    pub root_of_unity_hint: Option<(i64, u32)>,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyConfig {
    pub neutral_band: f64,
    pub superattract_eps: f64,
    pub cycle_residual_tol: f64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            neutral_band: 1e-6,
            superattract_eps: 1e-9,
            cycle_residual_tol: 1e-6,
        }
    }
}

pub fn classify_cycle(
    f: &ZPoly,
    cycle_point: Complex64,
    period: usize,
    cfg: &ClassifyConfig,
) -> Result<CycleReport> {
    assert!(period >= 1);
    let fc = f.to_cpoly();
    let dfc = fc.derivative();
    let mut cycle = Vec::with_capacity(period);
    let mut z = cycle_point;
    for _ in 0..period {
        cycle.push(z);
        z = fc.eval(&z);
    }
    let residual = (z - cycle_point).norm();
    if residual > cfg.cycle_residual_tol * (1.0 + cycle_point.norm()) {
        return Err(Error::NotACycle { residual });
    }
    let multiplier = cycle
        .iter()
        .fold(Complex64::new(1.0, 0.0), |acc, p| acc * dfc.eval(p));
    let mag = multiplier.norm();
    let class = if mag < cfg.superattract_eps {
        CycleClass::Superattracting
    } else if mag < 1.0 - cfg.neutral_band {
        CycleClass::Attracting
    } else if (mag - 1.0).abs() <= cfg.neutral_band {
        CycleClass::Neutral
    } else {
        CycleClass::Repelling
    };
    let arg_turns = multiplier.arg() / (2.0 * core::f64::consts::PI);
    let root_of_unity_hint = nearest_rational_turn(arg_turns);
    Ok(CycleReport {
        cycle,
        multiplier,
        class,
        arg_turns,
        root_of_unity_hint,
    })
}

/// Nearest `p/q` with `q <= 12` when within 1e-4 of `t`.
fn nearest_rational_turn(t: f64) -> Option<(i64, u32)> {
    let mut best: Option<(i64, u32, f64)> = None;
    for q in 1..=12u32 {
        let p = (t * q as f64).round() as i64;
        let err = (t - p as f64 / q as f64).abs();
        if best.map_or(true, |(_, _, e)| err < e) {
            best = Some((p, q, err));
        }
    }
    best.filter(|&(_, _, e)| e < 1e-4).map(|(p, q, _)| (p, q))
}

/// Roots of the derivative of `f`.
pub fn critical_points(f: &ZPoly) -> Result<Vec<Complex64>> {
    assert!(f.deg() >= 2);
    Ok(roots(&f.to_cpoly().derivative(), 1e-10)?.roots)
}

/// Enumerates affine maps `L(z) = a z + b` commuting with `f`.
///
/// The leading-coefficient constraint forces `a^{d-1} = 1`, so `a` ranges
/// over the `(d-1)`-th roots of unity; for each `a`, candidate `b` values
/// are roots of `f(x) - x - a c_0`. Candidates are kept when
/// `|L(f(z)) - f(L(z))| < tol` on 50 random sample points.
pub fn find_linear_commuters(f: &ZPoly, tol: f64) -> Result<Vec<AffineMap<Complex64>>> {
    assert!(f.is_monic() && f.deg() >= 2);
    let d = f.deg();
    let fc = f.to_cpoly();
    let c0 = fc.coeff(0);

    let mut rng = stream_rng(0x11EA_C0DE, 0);
    let samples: Vec<Complex64> = (0..50)
        .map(|_| {
            Complex64::new(
                4.0 * rng.gen::<f64>() - 2.0,
                4.0 * rng.gen::<f64>() - 2.0,
            )
        })
        .collect();

    let mut out: Vec<AffineMap<Complex64>> = Vec::new();
    for k in 0..(d - 1) {
        let theta = 2.0 * core::f64::consts::PI * (k as f64) / ((d - 1) as f64);
        let a = Complex64::new(theta.cos(), theta.sin());
        // b solves L(f(0-term)) consistency: f(b) = a c_0 + b
        let shifted = &(&fc - &crate::poly::CPoly::identity())
            - &crate::poly::CPoly::constant(a * c0);
        let candidates = roots(&shifted, 1e-10)?.roots;
        for b in candidates {
            let l = AffineMap::new(a, b)?;
            let ok = samples.iter().all(|z| {
                let lhs = l.apply(&fc.eval(z));
                let rhs = fc.eval(&l.apply(z));
                (lhs - rhs).norm() < tol * (1.0 + lhs.norm())
            });
            if ok
                && !out
                    .iter()
                    .any(|m| (m.a() - l.a()).norm() < 1e-8 && (m.b() - l.b()).norm() < 1e-8)
            {
                out.push(l);
            }
        }
    }
    Ok(out)
}
