//! Zero-measure certification: univariate dynamical Kronecker checks,
//! two-variable divisibility certificates, and preperiodic-pair search on
//! curves.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::dynamics::{is_preperiodic_numeric, NumericPreper};
use crate::poly::{roots, AffineMap, CPoly, MPoly, ZPoly};
use crate::potential::mahler_univariate_jensen;
use crate::{Error, Result};

const PREPER_TOL: f64 = 1e-8;
const PREPER_MAX_ITER: usize = 10_000;
const FACTOR_DEGREE_CAP: usize = 4096;

/// Preperiodicity report for one root of the candidate polynomial.
#[derive(Clone, Debug)]
pub struct RootWitness {
    pub root: Complex64,
    pub tail: usize,
    pub period: usize,
}

/// Verdict of a zero-measure certification attempt.
#[derive(Clone, Debug)]
pub enum KroneckerVerdict {
    /// All mass conditions verified. `heuristic` is true on the univariate
    /// numeric path (cycle detection is a tolerance check, not a proof);
    /// false on the exact bivariate divisibility path.
    CertifiedZero {
        heuristic: bool,
        root_witnesses: Vec<RootWitness>,
        /// Exact cofactor `R / P` on the bivariate path.
        divisor_witness: Option<MPoly>,
    },
    /// The measure is provably or numerically positive (estimate attached).
    PositiveEvidence { estimate: f64, std_error: f64 },
    Undetermined,
}

fn zpoly_content(p: &ZPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
    }
    g
}

/// Dynamical Kronecker check for univariate `P`: `m_f(P) = 0` iff `P` is
/// `±∏(x − α_i)` with every `α_i` preperiodic under `f`.
pub fn certify_zero_univariate(f: &ZPoly, p: &ZPoly) -> Result<KroneckerVerdict> {
    assert!(f.is_monic() && f.deg() >= 2);
    if p.is_zero() {
        return Err(Error::InvalidInput("certify_zero_univariate requires P != 0"));
    }
    let lead_unit = p.leading().map_or(false, |l| l.abs().is_one());
    let content_one = zpoly_content(p).is_one();
    if !lead_unit || !content_one {
        let est = mahler_univariate_jensen(f, &p.to_cpoly(), 1e-10)?;
        return Ok(KroneckerVerdict::PositiveEvidence {
            estimate: est,
            std_error: 0.0,
        });
    }
    if p.deg() == 0 {
        // P = ±1: empty product, measure 0
        return Ok(KroneckerVerdict::CertifiedZero {
            heuristic: false,
            root_witnesses: Vec::new(),
            divisor_witness: None,
        });
    }
    let rs = roots(&p.to_cpoly(), 1e-10)?;
    let mut witnesses = Vec::new();
    let mut any_wandering = false;
    let mut any_undetermined = false;
    for r in &rs.roots {
        match is_preperiodic_numeric(f, *r, PREPER_TOL, PREPER_MAX_ITER) {
            NumericPreper::Preperiodic { tail, period } => witnesses.push(RootWitness {
                root: *r,
                tail,
                period,
            }),
            NumericPreper::Wandering => any_wandering = true,
            NumericPreper::Undetermined => any_undetermined = true,
        }
    }
    if any_wandering {
        let est = mahler_univariate_jensen(f, &p.to_cpoly(), 1e-10)?;
        Ok(KroneckerVerdict::PositiveEvidence {
            estimate: est,
            std_error: 0.0,
        })
    } else if any_undetermined {
        Ok(KroneckerVerdict::Undetermined)
    } else {
        Ok(KroneckerVerdict::CertifiedZero {
            heuristic: true,
            root_witnesses: witnesses,
            divisor_witness: None,
        })
    }
}

/// One factor `f̃^n(x) − L(f̃^m(y))` of a candidate divisor product.
#[derive(Clone, Debug)]
pub struct FactorSpec {
    pub ftilde: ZPoly,
    pub l: AffineMap<BigRational>,
    pub n: u32,
    pub m: u32,
}

impl FactorSpec {
    /// Default factor `f^0(x) − f^0(y) = x − y` up to the supplied `(n, m)`.
    pub fn new(ftilde: ZPoly, l: AffineMap<BigRational>, n: u32, m: u32) -> Self {
        FactorSpec { ftilde, l, n, m }
    }
}

/// Result of expanding a factor product.
#[derive(Clone, Debug)]
pub enum FactorProduct {
    Integral(MPoly),
    /// The exact expansion has non-integer coefficients (L not defined over
    /// ℤ in a compatible way); such a product certifies nothing.
    NotIntegral,
}

/// Expands `∏_j (f̃_j^{n_j}(x) − L_j(f̃_j^{m_j}(y)))` with exact rational
/// arithmetic, returning the integer polynomial or `NotIntegral`.
pub fn build_factor_product(specs: &[FactorSpec]) -> Result<FactorProduct> {
    if specs.is_empty() {
        return Err(Error::InvalidInput("factor product needs at least one factor"));
    }
    // exact bivariate polynomial over ℚ, keyed by (x-exp, y-exp)
    let mut prod: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    prod.insert((0, 0), BigRational::one());
    let mut total_deg = 0usize;
    for spec in specs {
        if spec.ftilde.deg() < 2 {
            return Err(Error::InvalidInput("ftilde must have degree >= 2"));
        }
        let fx = spec.ftilde.iterate(spec.n);
        let fy = spec.ftilde.iterate(spec.m);
        total_deg += fx.deg().max(fy.deg());
        if fx.deg() > FACTOR_DEGREE_CAP || fy.deg() > FACTOR_DEGREE_CAP || total_deg > FACTOR_DEGREE_CAP
        {
            return Err(Error::DegreeCapExceeded {
                required: total_deg,
                cap: FACTOR_DEGREE_CAP,
            });
        }
        // factor = Σ_i a_i x^i − (a_L Σ_j b_j y^j + b_L)
        let mut factor: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for (i, a) in fx.coeffs().iter().enumerate() {
            if !a.is_zero() {
                add_entry(&mut factor, (i as u32, 0), BigRational::from_integer(a.clone()));
            }
        }
        for (j, b) in fy.coeffs().iter().enumerate() {
            let scaled = spec.l.a().clone() * BigRational::from_integer(b.clone());
            if !scaled.is_zero() {
                add_entry(&mut factor, (0, j as u32), -scaled);
            }
        }
        if !spec.l.b().is_zero() {
            add_entry(&mut factor, (0, 0), -spec.l.b().clone());
        }
        // multiply into the running product
        let mut next: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
        for ((i1, j1), c1) in &prod {
            for ((i2, j2), c2) in &factor {
                add_entry(&mut next, (i1 + i2, j1 + j2), c1.clone() * c2.clone());
            }
        }
        prod = next;
    }
    let mut out = MPoly::zero(2);
    for ((i, j), c) in &prod {
        if !c.is_integer() {
            return Ok(FactorProduct::NotIntegral);
        }
        out.add_term(alloc::vec![*i, *j], c.to_integer());
    }
    Ok(FactorProduct::Integral(out))
}

fn add_entry(
    map: &mut BTreeMap<(u32, u32), BigRational>,
    key: (u32, u32),
    val: BigRational,
) {
    let slot = map.entry(key).or_insert_with(BigRational::zero);
    *slot = slot.clone() + val;
    if slot.is_zero() {
        map.remove(&key);
    }
}

/// Exact bivariate certificate: `m_f(P) = 0` when `P` divides the factor
/// product in ℤ[x, y]. Failure to divide proves nothing, so the negative
/// outcome is always `Undetermined`.
pub fn certify_zero_bivariate(
    _f: &ZPoly,
    p: &MPoly,
    specs: &[FactorSpec],
) -> Result<KroneckerVerdict> {
    if p.is_zero() {
        return Err(Error::InvalidInput("certify_zero_bivariate requires P != 0"));
    }
    if !p.is_primitive() {
        return Err(Error::InvalidInput("certify_zero_bivariate requires primitive P"));
    }
    let product = match build_factor_product(specs)? {
        FactorProduct::Integral(r) => r,
        FactorProduct::NotIntegral => return Ok(KroneckerVerdict::Undetermined),
    };
    match product.divide_exact(p) {
        Some(q) => Ok(KroneckerVerdict::CertifiedZero {
            heuristic: false,
            root_witnesses: Vec::new(),
            divisor_witness: Some(q),
        }),
        None => Ok(KroneckerVerdict::Undetermined),
    }
}

/// Searches the curve `P(x, y) = 0` for pairs of preperiodic points.
///
/// Candidate `α` values are roots of `f^n(x) − f^m(x)` for `m < n ≤ max_n`,
/// `m ≤ max_m`; for each, the fiber roots `β` of `P(α, ·)` are kept when
/// numerically preperiodic. Results are ordered by `(n, m, root index)`.
pub fn find_preperiodic_pairs(
    f: &ZPoly,
    p: &MPoly,
    max_n: u32,
    max_m: u32,
) -> Result<Vec<(Complex64, Complex64)>> {
    assert!(f.is_monic() && f.deg() >= 2);
    if p.nvars() != 2 {
        return Err(Error::InvalidInput("find_preperiodic_pairs requires 2 variables"));
    }
    let dy = p.degree_in(1);
    let y_coeffs: Vec<MPoly> = (0..=dy).map(|k| p.coeff_of_power(1, k)).collect();
    let mut pairs: Vec<(Complex64, Complex64)> = Vec::new();
    let mut seen_alpha: Vec<Complex64> = Vec::new();
    for n in 1..=max_n {
        let fn_ = f.iterate(n);
        if fn_.deg() > FACTOR_DEGREE_CAP {
            break;
        }
        for m in 0..n.min(max_m + 1) {
            let diff = &fn_ - &f.iterate(m);
            if diff.is_zero() {
                continue;
            }
            let alphas = roots(&diff.to_cpoly(), 1e-9)?.roots;
            for alpha in alphas {
                if seen_alpha.iter().any(|a| (a - alpha).norm() < 1e-8) {
                    continue;
                }
                seen_alpha.push(alpha);
                // fiber polynomial P(alpha, y)
                let pt = [alpha, Complex64::new(0.0, 0.0)];
                let coeffs: Vec<Complex64> = y_coeffs
                    .iter()
                    .map(|c| {
                        c.eval(&pt)
                    })
                    .collect();
                let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
                if scale < 1e-10 {
                    continue; // vertical-line component P(alpha, ·) ≡ 0
                }
                let fiber = CPoly::from_coeffs(coeffs);
                let betas = match fiber.degree() {
                    Some(d) if d >= 1 => match roots(&fiber, 1e-9) {
                        Ok(rs) => rs.roots,
                        Err(_) => continue,
                    },
                    _ => continue,
                };
                for beta in betas {
                    let residual = p.eval(&[alpha, beta]).norm();
                    if residual >= 1e-8 {
                        continue;
                    }
                    if matches!(
                        is_preperiodic_numeric(f, beta, PREPER_TOL, PREPER_MAX_ITER),
                        NumericPreper::Preperiodic { .. }
                    ) {
                        pairs.push((alpha, beta));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_i64(coeffs)
    }

    fn id_l() -> AffineMap<BigRational> {
        AffineMap::identity()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mp(terms: &[(&[u32], i64)]) -> MPoly {
        let nv = terms[0].0.len();
        let mut p = MPoly::zero(nv);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigInt::from(*c));
        }
        p
    }

    #[test]
    fn univariate_certifies_preperiodic_roots() {
        // f = z^2 - 1, P = x^2 + x
        let v = certify_zero_univariate(&zp(&[-1, 0, 1]), &zp(&[0, 1, 1])).unwrap();
        match v {
            KroneckerVerdict::CertifiedZero {
                heuristic,
                root_witnesses,
                ..
            } => {
                assert!(heuristic);
                assert_eq!(root_witnesses.len(), 2);
            }
            other => panic!("expected CertifiedZero, got {other:?}"),
        }
    }

    #[test]
    fn univariate_positive_evidence() {
        let v = certify_zero_univariate(&zp(&[0, 0, 1]), &zp(&[-2, 1])).unwrap();
        match v {
            KroneckerVerdict::PositiveEvidence { estimate, .. } => {
                assert!((estimate - 2.0f64.ln()).abs() < 1e-9);
            }
            other => panic!("expected PositiveEvidence, got {other:?}"),
        }
    }

    #[test]
    fn univariate_cyclotomic_certified() {
        // 5th cyclotomic polynomial under z^2
        let v = certify_zero_univariate(&zp(&[0, 0, 1]), &zp(&[1, 1, 1, 1, 1])).unwrap();
        assert!(matches!(v, KroneckerVerdict::CertifiedZero { .. }));
    }

    #[test]
    fn univariate_nonunit_lead_is_positive() {
        // 2x - 1 has content 1 but lead 2: m(2x-1) = log 2
        let v = certify_zero_univariate(&zp(&[0, 0, 1]), &zp(&[-1, 2])).unwrap();
        match v {
            KroneckerVerdict::PositiveEvidence { estimate, .. } => {
                assert!((estimate - 2.0f64.ln()).abs() < 1e-9);
            }
            other => panic!("expected PositiveEvidence, got {other:?}"),
        }
    }

    #[test]
    fn factor_product_examples() {
        // n = m = 0, L = id: x - y
        let spec = FactorSpec::new(zp(&[0, 0, 1]), id_l(), 0, 0);
        match build_factor_product(&[spec]).unwrap() {
            FactorProduct::Integral(r) => {
                assert_eq!(r, mp(&[(&[1, 0], 1), (&[0, 1], -1)]));
            }
            _ => panic!("expected integral"),
        }

        // f̃ = z^2, L = -z, n=1, m=0: x^2 + y
        let neg = AffineMap::new(rat(-1), rat(0)).unwrap();
        let spec = FactorSpec::new(zp(&[0, 0, 1]), neg, 1, 0);
        match build_factor_product(&[spec]).unwrap() {
            FactorProduct::Integral(r) => {
                assert_eq!(r, mp(&[(&[2, 0], 1), (&[0, 1], 1)]));
            }
            _ => panic!("expected integral"),
        }

        // (x^2 - y)(x - y^2)
        let s1 = FactorSpec::new(zp(&[0, 0, 1]), id_l(), 1, 0);
        let s2 = FactorSpec::new(zp(&[0, 0, 1]), id_l(), 0, 1);
        match build_factor_product(&[s1, s2]).unwrap() {
            FactorProduct::Integral(r) => {
                let expected = &mp(&[(&[2, 0], 1), (&[0, 1], -1)])
                    * &mp(&[(&[1, 0], 1), (&[0, 2], -1)]);
                assert_eq!(r, expected);
            }
            _ => panic!("expected integral"),
        }
    }

    #[test]
    fn factor_product_non_integral() {
        let half = AffineMap::new(BigRational::new(BigInt::from(1), BigInt::from(2)), rat(0))
            .unwrap();
        let spec = FactorSpec::new(zp(&[0, 0, 1]), half, 0, 0);
        assert!(matches!(
            build_factor_product(&[spec]).unwrap(),
            FactorProduct::NotIntegral
        ));
    }

    #[test]
    fn bivariate_diagonal_certified() {
        let f = zp(&[-1, 0, 1]);
        let p = mp(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let spec = FactorSpec::new(f.clone(), id_l(), 0, 0);
        let v = certify_zero_bivariate(&f, &p, &[spec]).unwrap();
        assert!(matches!(v, KroneckerVerdict::CertifiedZero { heuristic: false, .. }));
    }

    #[test]
    fn bivariate_difference_of_squares() {
        // P = x^2 - y^2 divides (x - y)(x + y) built from L = z and L = -z
        let f = zp(&[0, 0, 1]);
        let p = mp(&[(&[2, 0], 1), (&[0, 2], -1)]);
        let s1 = FactorSpec::new(f.clone(), id_l(), 0, 0);
        let s2 = FactorSpec::new(f.clone(), AffineMap::new(rat(-1), rat(0)).unwrap(), 0, 0);
        let v = certify_zero_bivariate(&f, &p, &[s1, s2]).unwrap();
        match v {
            KroneckerVerdict::CertifiedZero { divisor_witness, .. } => {
                assert!(divisor_witness.is_some());
            }
            other => panic!("expected CertifiedZero, got {other:?}"),
        }
    }

    #[test]
    fn bivariate_undetermined_when_division_fails() {
        let f = zp(&[0, 0, 1]);
        let p = mp(&[(&[1, 0], 1), (&[0, 1], -1), (&[0, 0], -1)]);
        let s1 = FactorSpec::new(f.clone(), id_l(), 0, 0);
        let s2 = FactorSpec::new(f.clone(), AffineMap::new(rat(-1), rat(0)).unwrap(), 0, 0);
        let v = certify_zero_bivariate(&f, &p, &[s1, s2]).unwrap();
        assert!(matches!(v, KroneckerVerdict::Undetermined));
    }

    #[test]
    fn preperiodic_pairs_on_diagonal() {
        let f = zp(&[-1, 0, 1]);
        let p = mp(&[(&[1, 0], 1), (&[0, 1], -1)]);
        let pairs = find_preperiodic_pairs(&f, &p, 3, 2).unwrap();
        assert!(!pairs.is_empty());
        for (a, b) in &pairs {
            assert!((a - b).norm() < 1e-7, "diagonal pairs have α = β");
        }
    }

    #[test]
    fn preperiodic_pairs_on_hyperbola() {
        // f = z^2, P = xy - 1: pairs (ζ, ζ^{-1}) with ζ a root of unity
        let f = zp(&[0, 0, 1]);
        let p = mp(&[(&[1, 1], 1), (&[0, 0], -1)]);
        let pairs = find_preperiodic_pairs(&f, &p, 3, 2).unwrap();
        assert!(!pairs.is_empty());
        for (a, b) in &pairs {
            assert!((a.norm() - 1.0).abs() < 1e-7);
            assert!((a * b - Complex64::new(1.0, 0.0)).norm() < 1e-7);
        }
    }

    #[test]
    fn preperiodic_pairs_can_be_empty() {
        // f = z^2, P = x + y - 5 avoids PrePer x PrePer at small caps
        let f = zp(&[0, 0, 1]);
        let p = mp(&[(&[1, 0], 1), (&[0, 1], 1), (&[0, 0], -5)]);
        let pairs = find_preperiodic_pairs(&f, &p, 3, 2).unwrap();
        assert!(pairs.is_empty());
    }
}
