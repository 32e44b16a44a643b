//! Equilibrium-measure sampling and quadrature engines for m_f(P):
//! stochastic backward iteration, deterministic preimage trees, nested
//! two-variable decomposition, circle and segment closed-form oracles, and
//! Boyd–Lawton sequences.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::{Float, ToPrimitive};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::dynamics::periodic_points;
use crate::poly::{roots, CPoly, MPoly, ZPoly};
use crate::potential::{green, mahler_univariate_jensen};
use crate::rng::{derive_seed, stream_rng};
use crate::{Error, Result};

/// Default burn-in for backward-iteration samplers.
pub const DEFAULT_BURN_IN: u32 = 64;
/// Samples with |P| below this are resampled (log singularity policy).
pub const UNDERFLOW_FLOOR: f64 = 1e-300;
/// Default leaf cap for preimage trees.
pub const TREE_CAP: usize = 1 << 16;
const ROOT_TOL: f64 = 1e-10;

/// Quadrature method tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Mc,
    Tree(u32),
    Circle,
    Segment,
    Nested,
    Jensen,
}

/// Result of one m_f(P) quadrature.
#[derive(Clone, Copy, Debug)]
pub struct QuadratureResult {
    pub estimate: f64,
    /// Sample standard deviation / sqrt(n); 0 for deterministic methods.
    pub std_error: f64,
    pub n_samples: u64,
    /// Samples resampled because |P| fell below the underflow floor (or a
    /// root-finder failed, in nested mode).
    pub rejections: u64,
    pub method: Method,
}

impl QuadratureResult {
    fn deterministic(estimate: f64, n: u64, method: Method) -> Self {
        QuadratureResult {
            estimate,
            std_error: 0.0,
            n_samples: n,
            rejections: 0,
            method,
        }
    }
}

/// Stochastic backward-iteration sampler whose stationary distribution is
/// the equilibrium measure μ_f.
pub struct MeasureSampler {
    fc: CPoly,
    degree: usize,
    state: Complex64,
    rng: ChaCha8Rng,
    start_point: Complex64,
}

/// Picks a repelling fixed point of `f` (largest multiplier, ties broken by
/// coordinates) and applies `burn_in` backward steps.
///
/// Falls back to a repelling 2-periodic point when every fixed point has
/// `|f'| <= 1`; errors when that also fails.
pub fn new_sampler(f: &ZPoly, seed: u64) -> Result<MeasureSampler> {
    new_sampler_with(f, seed, DEFAULT_BURN_IN)
}

pub fn new_sampler_with(f: &ZPoly, seed: u64, burn_in: u32) -> Result<MeasureSampler> {
    assert!(f.is_monic() && f.deg() >= 2);
    let start = repelling_start_point(f)?;
    let mut s = MeasureSampler {
        fc: f.to_cpoly(),
        degree: f.deg(),
        state: start,
        rng: stream_rng(seed, 0),
        start_point: start,
    };
    for _ in 0..burn_in {
        s.next_sample()?;
    }
    Ok(s)
}

fn repelling_start_point(f: &ZPoly) -> Result<Complex64> {
    let fc = f.to_cpoly();
    let dfc = fc.derivative();
    for period in 1..=2u32 {
        let pts = periodic_points(f, period, ROOT_TOL, 4096)?;
        let mut best: Option<(f64, Complex64)> = None;
        for p in pts {
            // multiplier of the cycle through p
            let mut m = Complex64::new(1.0, 0.0);
            let mut z = p;
            for _ in 0..period {
                m *= dfc.eval(&z);
                z = fc.eval(&z);
            }
            if (fc.eval(&p) - p).norm() < 1e-10 && period == 2 {
                continue; // fixed point rediscovered at period 2
            }
            let mag = m.norm();
            if mag > 1.0 + 1e-9 {
                let better = match best {
                    None => true,
                    Some((b, q)) => {
                        mag > b + 1e-12
                            || ((mag - b).abs() <= 1e-12
                                && (p.re, p.im) > (q.re, q.im))
                    }
                };
                if better {
                    best = Some((mag, p));
                }
            }
        }
        if let Some((_, p)) = best {
            return Ok(p);
        }
    }
    Err(Error::NoRepellingStartPoint)
}

impl MeasureSampler {
    pub fn start_point(&self) -> Complex64 {
        self.start_point
    }

    /// Replaces the state by a uniformly random d-th preimage and returns it.
    pub fn next_sample(&mut self) -> Result<Complex64> {
        let shifted = &self.fc - &CPoly::constant(self.state);
        let pre = roots(&shifted, ROOT_TOL)?.roots;
        let idx = self.rng.gen_range(0..self.degree);
        self.state = pre[idx.min(pre.len() - 1)];
        Ok(self.state)
    }
}

/// All `depth`-fold preimages of `w` under `f`, with multiplicity
/// (`d^depth` points).
pub fn preimage_tree(f: &ZPoly, w: Complex64, depth: u32, cap: usize) -> Result<Vec<Complex64>> {
    assert!(f.is_monic() && f.deg() >= 2);
    let d = f.deg();
    let mut required = 1usize;
    for _ in 0..depth {
        required = required.saturating_mul(d);
    }
    if required > cap {
        return Err(Error::DegreeCapExceeded { required, cap });
    }
    let fc = f.to_cpoly();
    let mut level = vec![w];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(level.len() * d);
        for v in &level {
            let shifted = &fc - &CPoly::constant(*v);
            next.extend(roots(&shifted, ROOT_TOL)?.roots);
        }
        level = next;
    }
    Ok(level)
}

/// Polynomial terms flattened to complex coefficients for fast evaluation.
fn complex_terms(p: &MPoly) -> Vec<(Vec<u32>, Complex64)> {
    p.terms()
        .map(|(e, c)| {
            (
                e.to_vec(),
                Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0),
            )
        })
        .collect()
}

fn eval_terms(terms: &[(Vec<u32>, Complex64)], point: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (exps, coeff) in terms {
        let mut t = *coeff;
        for (x, &e) in point.iter().zip(exps.iter()) {
            if e > 0 {
                t *= x.powu(e);
            }
        }
        acc += t;
    }
    acc
}

/// Monte Carlo estimate of `m_f(P)` with one independent backward-iteration
/// chain per variable (seeds split from `seed`).
pub fn mahler_mc(f: &ZPoly, p: &MPoly, n_samples: u64, seed: u64) -> Result<QuadratureResult> {
    if p.is_zero() {
        return Err(Error::InvalidInput("mahler_mc requires P != 0"));
    }
    let k = p.nvars();
    let mut samplers: Vec<MeasureSampler> = (0..k)
        .map(|v| new_sampler(f, derive_seed(seed, v as u64)))
        .collect::<Result<_>>()?;
    let terms = complex_terms(p);

    let mut sum = 0.0f64;
    let mut sumsq = 0.0f64;
    let mut accepted = 0u64;
    let mut rejections = 0u64;
    let mut point = vec![Complex64::new(0.0, 0.0); k];
    let budget = n_samples + (n_samples / 50).max(200);
    let mut attempts = 0u64;
    while accepted < n_samples {
        if attempts >= budget {
            return Err(Error::ExcessiveRejections {
                rejected: rejections,
                total: attempts,
            });
        }
        attempts += 1;
        for (s, slot) in samplers.iter_mut().zip(point.iter_mut()) {
            *slot = s.next_sample()?;
        }
        let v = eval_terms(&terms, &point).norm();
        if v < UNDERFLOW_FLOOR || !v.is_finite() {
            rejections += 1;
            continue;
        }
        let l = v.ln();
        sum += l;
        sumsq += l * l;
        accepted += 1;
    }
    if rejections * 100 > n_samples {
        return Err(Error::ExcessiveRejections {
            rejected: rejections,
            total: attempts,
        });
    }
    let n = accepted as f64;
    let mean = sum / n;
    let var = ((sumsq / n) - mean * mean).max(0.0) * n / (n - 1.0).max(1.0);
    Ok(QuadratureResult {
        estimate: mean,
        std_error: (var / n).sqrt(),
        n_samples: accepted,
        rejections,
        method: Method::Mc,
    })
}

/// Deterministic preimage-tree estimate from the default start point.
pub fn mahler_tree(f: &ZPoly, p: &MPoly, depth: u32) -> Result<QuadratureResult> {
    mahler_tree_from(f, p, repelling_start_point(f)?, depth)
}

/// Deterministic estimate averaging `log|P|` over the product of one
/// depth-`depth` preimage leaf set per variable (the same leaf set is reused
/// across variables: the target is a product measure).
pub fn mahler_tree_from(
    f: &ZPoly,
    p: &MPoly,
    w: Complex64,
    depth: u32,
) -> Result<QuadratureResult> {
    if p.is_zero() {
        return Err(Error::InvalidInput("mahler_tree requires P != 0"));
    }
    let k = p.nvars();
    let leaves = preimage_tree(f, w, depth, TREE_CAP)?;
    let n = leaves.len();
    let mut total_tuples = 1usize;
    for _ in 0..k {
        total_tuples = total_tuples.saturating_mul(n);
    }
    if total_tuples > (1 << 24) {
        return Err(Error::DegreeCapExceeded {
            required: total_tuples,
            cap: 1 << 24,
        });
    }
    let terms = complex_terms(p);
    let mut idx = vec![0usize; k];
    let mut point = vec![Complex64::new(0.0, 0.0); k];
    let mut sum = 0.0f64;
    let mut counted = 0u64;
    'outer: loop {
        for (slot, &i) in point.iter_mut().zip(idx.iter()) {
            *slot = leaves[i];
        }
        let v = eval_terms(&terms, &point).norm();
        if v >= UNDERFLOW_FLOOR {
            sum += v.ln();
        }
        counted += 1;
        // odometer increment
        for d in 0..k {
            idx[d] += 1;
            if idx[d] < n {
                continue 'outer;
            }
            idx[d] = 0;
        }
        break;
    }
    Ok(QuadratureResult::deterministic(
        sum / counted as f64,
        counted,
        Method::Tree(depth),
    ))
}

/// Nested estimate for bivariate `P`: `m_f(lead_x(P)) + E_y[Σ_j g_f(root_j)]`
/// via the non-negativity decomposition.
pub fn mahler_nested(
    f: &ZPoly,
    p: &MPoly,
    n_samples: u64,
    seed: u64,
) -> Result<QuadratureResult> {
    if p.nvars() != 2 {
        return Err(Error::InvalidInput("mahler_nested requires 2 variables"));
    }
    let dx = p.degree_in(0);
    if dx == 0 {
        return Err(Error::InvalidInput(
            "mahler_nested requires positive degree in the first variable",
        ));
    }
    // leading coefficient of P in x, a polynomial in y
    let lead = p.coeff_of_power(0, dx);
    let lead_measure = match lead.to_zpoly_single(1) {
        Some(a) if a.deg() == 0 => a.to_cpoly().coeff(0).norm().ln(),
        Some(a) => mahler_univariate_jensen(f, &a.to_cpoly(), ROOT_TOL)?,
        None => return Err(Error::InvalidInput("leading coefficient not univariate")),
    };

    // slice coefficients: P as a polynomial in x with MPoly coefficients in y
    let x_coeffs: Vec<MPoly> = (0..=dx).map(|k| p.coeff_of_power(0, k)).collect();
    let x_terms: Vec<Vec<(Vec<u32>, Complex64)>> =
        x_coeffs.iter().map(complex_terms).collect();

    let mut sampler = new_sampler(f, derive_seed(seed, 1))?;
    let mut sum = 0.0f64;
    let mut sumsq = 0.0f64;
    let mut accepted = 0u64;
    let mut rejections = 0u64;
    let budget = n_samples + (n_samples / 50).max(200);
    let mut attempts = 0u64;
    while accepted < n_samples {
        if attempts >= budget {
            return Err(Error::ExcessiveRejections {
                rejected: rejections,
                total: attempts,
            });
        }
        attempts += 1;
        let y = sampler.next_sample()?;
        let point = [Complex64::new(0.0, 0.0), y];
        let coeffs: Vec<Complex64> = x_terms
            .iter()
            .map(|t| eval_terms(t, &point))
            .collect();
        let slice = CPoly::from_coeffs(coeffs);
        let slice_roots = match slice.degree() {
            Some(d) if d >= 1 => match roots(&slice, ROOT_TOL) {
                Ok(rs) => rs.roots,
                Err(_) => {
                    rejections += 1;
                    continue;
                }
            },
            _ => {
                // x-degree collapsed at this sample (lead vanished)
                rejections += 1;
                continue;
            }
        };
        let contrib: f64 = slice_roots
            .iter()
            .map(|r| green(f, *r, 10_000, 1e-13).value)
            .sum();
        sum += contrib;
        sumsq += contrib * contrib;
        accepted += 1;
    }
    if rejections * 100 > n_samples {
        return Err(Error::ExcessiveRejections {
            rejected: rejections,
            total: attempts,
        });
    }
    let n = accepted as f64;
    let mean = sum / n;
    let var = ((sumsq / n) - mean * mean).max(0.0) * n / (n - 1.0).max(1.0);
    Ok(QuadratureResult {
        estimate: lead_measure + mean,
        std_error: (var / n).sqrt(),
        n_samples: accepted,
        rejections,
        method: Method::Nested,
    })
}

/// Classical Mahler measure oracle (f = z^d case).
///
/// Univariate P: exact root formula `log|a| + Σ log max(1, |α_j|)`.
/// Multivariate P: midpoint tensor-product quadrature over the torus with
/// `grid_n` points per circle.
pub fn mahler_circle(p: &MPoly, grid_n: usize) -> Result<QuadratureResult> {
    if p.is_zero() {
        return Err(Error::InvalidInput("mahler_circle requires P != 0"));
    }
    if p.nvars() <= 1 {
        let up = p
            .to_zpoly_single(0)
            .ok_or(Error::InvalidInput("univariate conversion failed"))?;
        if up.deg() == 0 {
            return Ok(QuadratureResult::deterministic(
                up.to_cpoly().coeff(0).norm().ln(),
                1,
                Method::Circle,
            ));
        }
        let rs = roots(&up.to_cpoly(), ROOT_TOL)?;
        let est = rs.lead.norm().ln()
            + rs.roots
                .iter()
                .map(|r| r.norm().max(1.0).ln())
                .sum::<f64>();
        return Ok(QuadratureResult::deterministic(
            est,
            rs.roots.len() as u64,
            Method::Circle,
        ));
    }
    let nodes: Vec<Complex64> = (0..grid_n)
        .map(|j| {
            let theta = 2.0 * core::f64::consts::PI * (j as f64 + 0.5) / grid_n as f64;
            Complex64::new(theta.cos(), theta.sin())
        })
        .collect();
    tensor_quadrature(p, &nodes, Method::Circle)
}

/// Segment oracle: `m_{[α,β]}(P)` by arcsine-weighted quadrature via
/// `z = ((β−α)/2) cos(πθ) + (α+β)/2` on a uniform θ-grid (exact for the
/// generalized Chebyshev dynamics on the segment).
pub fn mahler_segment(
    p: &MPoly,
    alpha: Complex64,
    beta: Complex64,
    grid_n: usize,
) -> Result<QuadratureResult> {
    if p.is_zero() {
        return Err(Error::InvalidInput("mahler_segment requires P != 0"));
    }
    if alpha == beta {
        return Err(Error::InvalidInput("mahler_segment requires α != β"));
    }
    let half = 0.5 * (beta - alpha);
    let mid = 0.5 * (alpha + beta);
    let nodes: Vec<Complex64> = (0..grid_n)
        .map(|j| {
            let theta = core::f64::consts::PI * (j as f64 + 0.5) / grid_n as f64;
            half * theta.cos() + mid
        })
        .collect();
    tensor_quadrature(p, &nodes, Method::Segment)
}

fn tensor_quadrature(p: &MPoly, nodes: &[Complex64], method: Method) -> Result<QuadratureResult> {
    let k = p.nvars();
    let n = nodes.len();
    let mut total = 1usize;
    for _ in 0..k {
        total = total.saturating_mul(n);
    }
    if total > (1 << 25) {
        return Err(Error::DegreeCapExceeded {
            required: total,
            cap: 1 << 25,
        });
    }
    // power tables per node up to the largest exponent per variable
    let max_exp: Vec<u32> = (0..k).map(|v| p.degree_in(v)).collect();
    let overall_max = max_exp.iter().copied().max().unwrap_or(0) as usize;
    let powers: Vec<Vec<Complex64>> = nodes
        .iter()
        .map(|z| {
            let mut row = Vec::with_capacity(overall_max + 1);
            let mut acc = Complex64::new(1.0, 0.0);
            row.push(acc);
            for _ in 0..overall_max {
                acc *= z;
                row.push(acc);
            }
            row
        })
        .collect();
    let terms = complex_terms(p);

    let mut idx = vec![0usize; k];
    let mut sum = 0.0f64;
    let mut counted = 0u64;
    'outer: loop {
        let mut val = Complex64::new(0.0, 0.0);
        for (exps, coeff) in &terms {
            let mut t = *coeff;
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t *= powers[idx[v]][e as usize];
                }
            }
            val += t;
        }
        let m = val.norm();
        if m >= UNDERFLOW_FLOOR {
            sum += m.ln();
        }
        counted += 1;
        for d in 0..k {
            idx[d] += 1;
            if idx[d] < n {
                continue 'outer;
            }
            idx[d] = 0;
        }
        break;
    }
    Ok(QuadratureResult::deterministic(
        sum / counted as f64,
        counted,
        method,
    ))
}

/// Boyd–Lawton sequence: `m_f(P(x, f^n(x)))` for `n = 1..=n_max`, each slice
/// substituted exactly in ℤ[x] and measured by dynamical Jensen.
pub fn boyd_lawton_sequence(
    f: &ZPoly,
    p: &MPoly,
    n_max: u32,
    degree_cap: usize,
) -> Result<Vec<(u32, QuadratureResult)>> {
    if p.nvars() != 2 {
        return Err(Error::InvalidInput("boyd_lawton requires 2 variables"));
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        let fn_iter = f.iterate(n);
        let slice = p.compose_zpoly(&[ZPoly::identity(), fn_iter]);
        if slice.is_zero() {
            return Err(Error::InvalidInput("Boyd-Lawton slice is identically zero"));
        }
        if slice.deg() > degree_cap {
            return Err(Error::DegreeCapExceeded {
                required: slice.deg(),
                cap: degree_cap,
            });
        }
        let est = mahler_univariate_jensen(f, &slice.to_cpoly(), ROOT_TOL)?;
        out.push((
            n,
            QuadratureResult::deterministic(est, slice.deg() as u64, Method::Jensen),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zp(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    /// x - k in one variable.
    fn x_minus(k: i64) -> MPoly {
        let mut p = MPoly::zero(1);
        p.add_term(vec![1], BigInt::from(1));
        p.add_term(vec![0], BigInt::from(-k));
        p
    }

    /// x - y.
    fn x_minus_y() -> MPoly {
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 0], BigInt::from(1));
        p.add_term(vec![0, 1], BigInt::from(-1));
        p
    }

    /// 1 + x + y.
    fn one_x_y() -> MPoly {
        let mut p = MPoly::zero(2);
        p.add_term(vec![0, 0], BigInt::from(1));
        p.add_term(vec![1, 0], BigInt::from(1));
        p.add_term(vec![0, 1], BigInt::from(1));
        p
    }

    #[test]
    fn start_points_match_examples() {
        let s = new_sampler(&zp(&[0, 0, 1]), 1).unwrap();
        assert!((s.start_point() - c(1.0, 0.0)).norm() < 1e-9);

        let s = new_sampler(&zp(&[-2, 0, 1]), 1).unwrap();
        assert!((s.start_point() - c(2.0, 0.0)).norm() < 1e-9);

        let s = new_sampler(&zp(&[-1, 0, 1]), 1).unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!(
            (s.start_point() - c(phi, 0.0)).norm() < 1e-9
                || (s.start_point() - c(1.0 - phi, 0.0)).norm() < 1e-9
        );
    }

    #[test]
    fn power_map_samples_on_unit_circle() {
        let mut s = new_sampler(&zp(&[0, 0, 1]), 7).unwrap();
        for _ in 0..10_000 {
            let z = s.next_sample().unwrap();
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn chebyshev_samples_on_segment() {
        let mut s = new_sampler(&zp(&[-2, 0, 1]), 7).unwrap();
        for _ in 0..5_000 {
            let z = s.next_sample().unwrap();
            assert!(z.im.abs() < 1e-8);
            assert!(z.re >= -2.0 - 1e-8 && z.re <= 2.0 + 1e-8);
        }
    }

    #[test]
    fn preimage_tree_eighth_roots() {
        let leaves = preimage_tree(&zp(&[0, 0, 1]), c(1.0, 0.0), 3, TREE_CAP).unwrap();
        assert_eq!(leaves.len(), 8);
        for z in &leaves {
            assert!((z.powu(8) - c(1.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn preimage_tree_satisfies_iterate_equation() {
        let f = zp(&[-1, 0, 1]);
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        let w = c(phi, 0.0);
        let leaves = preimage_tree(&f, w, 2, TREE_CAP).unwrap();
        assert_eq!(leaves.len(), 4);
        let f2 = f.iterate(2).to_cpoly();
        for z in &leaves {
            assert!((f2.eval(z) - w).norm() < 1e-8);
        }
    }

    #[test]
    fn tree_mean_log_distance_is_classical_jensen() {
        // mean of log|z-3| over depth-10 preimages of 1 under z^2 -> log 3
        let leaves = preimage_tree(&zp(&[0, 0, 1]), c(1.0, 0.0), 10, TREE_CAP).unwrap();
        let mean: f64 = leaves.iter().map(|z| (z - c(3.0, 0.0)).norm().ln()).sum::<f64>()
            / leaves.len() as f64;
        assert!((mean - 3.0f64.ln()).abs() < 1e-3);
    }

    #[test]
    fn mc_classical_jensen() {
        let r = mahler_mc(&zp(&[0, 0, 1]), &x_minus(2), 20_000, 3).unwrap();
        assert!((r.estimate - 2.0f64.ln()).abs() < 3.0 * r.std_error + 1e-3);
        assert!(r.std_error > 0.0);
    }

    #[test]
    fn mc_diagonal_vanishes() {
        let r = mahler_mc(&zp(&[-1, 0, 1]), &x_minus_y(), 20_000, 5).unwrap();
        assert!(r.estimate.abs() < (3.0 * r.std_error).max(1e-2));
    }

    #[test]
    fn mc_smyth_constant() {
        let r = mahler_mc(&zp(&[0, 0, 1]), &one_x_y(), 50_000, 9).unwrap();
        assert!((r.estimate - 0.3230659).abs() < 3.0 * r.std_error + 2e-3);
    }

    #[test]
    fn mc_reproducible() {
        let f = zp(&[-1, 0, 1]);
        let a = mahler_mc(&f, &one_x_y(), 2_000, 42).unwrap();
        let b = mahler_mc(&f, &one_x_y(), 2_000, 42).unwrap();
        assert_eq!(a.estimate, b.estimate);
        let cdiff = mahler_mc(&f, &one_x_y(), 2_000, 43).unwrap();
        assert_ne!(a.estimate, cdiff.estimate);
    }

    #[test]
    fn nested_diagonal_vanishes() {
        let r = mahler_nested(&zp(&[0, 0, 1]), &x_minus_y(), 3_000, 11).unwrap();
        assert!(r.estimate.abs() < (3.0 * r.std_error).max(1e-2));
    }

    #[test]
    fn nested_agrees_with_mc() {
        // f = z^2 - 1, P = xy - 1
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 1], BigInt::from(1));
        p.add_term(vec![0, 0], BigInt::from(-1));
        let f = zp(&[-1, 0, 1]);
        let a = mahler_nested(&f, &p, 20_000, 13).unwrap();
        let b = mahler_mc(&f, &p, 20_000, 17).unwrap();
        let budget = 3.0 * (a.std_error * a.std_error + b.std_error * b.std_error).sqrt() + 1e-2;
        assert!((a.estimate - b.estimate).abs() < budget);
    }

    #[test]
    fn circle_root_formula() {
        let r = mahler_circle(&x_minus(2), 0).unwrap();
        assert!((r.estimate - 2.0f64.ln()).abs() < 1e-12);
        assert_eq!(r.std_error, 0.0);

        let mut lehmer = MPoly::zero(1);
        for (i, co) in [1i64, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1].iter().enumerate() {
            lehmer.add_term(vec![i as u32], BigInt::from(*co));
        }
        let r = mahler_circle(&lehmer, 0).unwrap();
        assert!((r.estimate - 0.162357612).abs() < 1e-6);
    }

    #[test]
    fn circle_grid_smyth() {
        let r = mahler_circle(&one_x_y(), 4096).unwrap();
        assert!((r.estimate - 0.32306594).abs() < 1e-4);
    }

    #[test]
    fn segment_oracle_values() {
        // m_{[-2,2]}(x) = 0
        let mut x = MPoly::zero(1);
        x.add_term(vec![1], BigInt::from(1));
        // log|P| is singular on the segment here, so the uniform grid only
        // reaches ~log(4)/grid_n accuracy
        let r = mahler_segment(&x, c(-2.0, 0.0), c(2.0, 0.0), 4096).unwrap();
        assert!(r.estimate.abs() < 1e-3);

        // m_{[-2,2]}(x - 3) = log((3+sqrt 5)/2)
        let r = mahler_segment(&x_minus(3), c(-2.0, 0.0), c(2.0, 0.0), 4096).unwrap();
        let target = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
        assert!((r.estimate - target).abs() < 1e-6);

        // m_{[-2,2]}(x - 10) vs classical root formula for z^2 - 10z + 1
        let r = mahler_segment(&x_minus(10), c(-2.0, 0.0), c(2.0, 0.0), 4096).unwrap();
        let mut cleared = MPoly::zero(1);
        cleared.add_term(vec![2], BigInt::from(1));
        cleared.add_term(vec![1], BigInt::from(-10));
        cleared.add_term(vec![0], BigInt::from(1));
        let oracle = mahler_circle(&cleared, 0).unwrap();
        assert!((r.estimate - oracle.estimate).abs() < 1e-6);
    }

    #[test]
    fn boyd_lawton_diagonal_zero() {
        let seq = boyd_lawton_sequence(&zp(&[-1, 0, 1]), &x_minus_y(), 4, 4096).unwrap();
        for (n, r) in &seq {
            assert!(r.estimate.abs() < 1e-6, "n={n}: {}", r.estimate);
        }
    }

    #[test]
    fn boyd_lawton_cyclotomic_zero() {
        // f = z^2, P = xy - 1: slices x^(2^n + 1) - 1 are cyclotomic
        let mut p = MPoly::zero(2);
        p.add_term(vec![1, 1], BigInt::from(1));
        p.add_term(vec![0, 0], BigInt::from(-1));
        let seq = boyd_lawton_sequence(&zp(&[0, 0, 1]), &p, 5, 4096).unwrap();
        for (n, r) in &seq {
            assert!(r.estimate.abs() < 1e-6, "n={n}");
        }
    }

    #[test]
    fn tree_univariate_matches_jensen() {
        let f = zp(&[-2, 0, 1]);
        let r = mahler_tree(&f, &x_minus(3), 12).unwrap();
        let target = ((3.0 + 5.0f64.sqrt()) / 2.0).ln();
        assert!((r.estimate - target).abs() < 1e-2);
    }

    #[test]
    fn additivity_shared_samples() {
        // deterministic tree quadrature shares nodes exactly
        let f = zp(&[-1, 0, 1]);
        let p = x_minus(2);
        let q = x_minus(3);
        let pq = &p * &q;
        let rp = mahler_tree(&f, &p, 10).unwrap();
        let rq = mahler_tree(&f, &q, 10).unwrap();
        let rpq = mahler_tree(&f, &pq, 10).unwrap();
        assert!((rpq.estimate - rp.estimate - rq.estimate).abs() < 1e-12);
    }
}
