//! Multibrot membership and exact real intervals, quadratic and unicritical
//! normal forms, and the PrePer(f) ⊆ J_f classification.

use alloc::string::String;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
// `Float` supplies the libm-backed float methods in no_std builds.
#[allow(unused_imports)]
use num_traits::{Float, ToPrimitive, Zero};

use crate::dynamics::{classify_cycle, ClassifyConfig, CycleReport};
use crate::poly::{roots, AffineMap, QPoly, ZPoly};
use crate::{Error, Result};

/// Membership verdict for `c` in the Multibrot set `M_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultibrotMembership {
    /// Critical orbit stayed bounded through the budget (not rigorous).
    Inside,
    /// Rigorous: the critical orbit left the escape radius.
    Outside { escape_step: usize },
}

/// Critical-orbit test for `z^d + c`. Escape (radius `2 max(2, |c|)`) is
/// rigorous; `Inside` means bounded through `max_iter`.
pub fn multibrot_member(d: u32, c: Complex64, max_iter: usize) -> MultibrotMembership {
    assert!(d >= 2);
    let radius = 2.0 * c.norm().max(2.0);
    let mut z = Complex64::new(0.0, 0.0);
    for step in 0..max_iter {
        if z.norm() > radius {
            return MultibrotMembership::Outside { escape_step: step };
        }
        z = z.powu(d) + c;
    }
    MultibrotMembership::Inside
}

/// Exact real slice `M_d ∩ ℝ` with the defining expressions echoed.
#[derive(Clone, Debug)]
pub struct RealInterval {
    pub lo: f64,
    pub hi: f64,
    pub lo_expr: String,
    pub hi_expr: String,
}

/// `M_d ∩ ℝ`: for odd `d` the symmetric interval `±(d−1)/d^{d/(d−1)}`, for
/// even `d` the interval `[−2^{1/(d−1)}, (d−1)/d^{d/(d−1)}]`.
pub fn multibrot_real_interval(d: u32) -> RealInterval {
    assert!(d >= 2);
    let df = d as f64;
    let hi = (df - 1.0) / df.powf(df / (df - 1.0));
    let hi_expr = alloc::format!("({d}-1)/{d}^({d}/({d}-1))");
    if d % 2 == 1 {
        RealInterval {
            lo: -hi,
            hi,
            lo_expr: alloc::format!("-({d}-1)/{d}^({d}/({d}-1))"),
            hi_expr,
        }
    } else {
        RealInterval {
            lo: -(2.0f64.powf(1.0 / (df - 1.0))),
            hi,
            lo_expr: alloc::format!("-2^(1/({d}-1))"),
            hi_expr,
        }
    }
}

fn bigint_of(f: &ZPoly, i: usize) -> BigInt {
    f.coeff(i)
}

fn int_affine(shift: &BigInt) -> AffineMap<BigRational> {
    AffineMap::new(
        BigRational::from_integer(BigInt::from(1)),
        BigRational::from_integer(shift.clone()),
    )
    .expect("slope 1 is nonzero")
}

fn conjugate_exact(f: &ZPoly, l: &AffineMap<BigRational>) -> QPoly {
    f.to_qpoly().conjugate(l)
}

fn qpoly_to_zpoly(q: &QPoly) -> Option<ZPoly> {
    q.try_to_zpoly()
}

/// Reduces a monic integer quadratic to the normal form `z² + c` (even
/// linear coefficient) or `z² + z + c` (odd), via an integral conjugation.
///
/// For `f = z² + αz + β` and `α = 2α₁` or `2α₁ + 1`, the map `L(z) = z − α₁`
/// satisfies `L⁻¹ ∘ f ∘ L = form` exactly.
pub fn quadratic_normal_form(f: &ZPoly) -> Result<(ZPoly, AffineMap<BigRational>)> {
    if f.deg() != 2 || !f.is_monic() {
        return Err(Error::InvalidInput("quadratic_normal_form requires monic quadratic"));
    }
    let alpha = bigint_of(f, 1);
    let alpha1 = alpha.div_floor(&BigInt::from(2));
    let l = int_affine(&-alpha1);
    let form_q = conjugate_exact(f, &l);
    let form = qpoly_to_zpoly(&form_q)
        .expect("integral conjugation of an integer polynomial stays integral");
    Ok((form, l))
}

/// Normal-form outcome for degree > 2.
#[derive(Clone, Debug)]
pub enum UnicriticalForm {
    Unicritical { c: BigInt, l: AffineMap<BigRational> },
    NotUnicritical,
}

/// Detects `f = (z − γ)^d + b` with integer `γ` and returns `(c, L)` with
/// `c = b − γ`, `L(z) = z + γ`, so that `L⁻¹ ∘ f ∘ L = z^d + c`.
pub fn unicritical_normal_form(f: &ZPoly) -> Result<UnicriticalForm> {
    let d = f.deg();
    if d <= 2 || !f.is_monic() {
        return Err(Error::InvalidInput("unicritical_normal_form requires monic degree > 2"));
    }
    // coefficient of z^{d-1} is -d·γ
    let a = bigint_of(f, d - 1);
    let neg = -&a;
    let (gamma, rem) = neg.div_rem(&BigInt::from(d as i64));
    if !rem.is_zero() {
        return Ok(UnicriticalForm::NotUnicritical);
    }
    let l = int_affine(&gamma);
    let form = conjugate_exact(f, &l);
    // z^d + c requires all middle coefficients to vanish
    let z = qpoly_to_zpoly(&form).expect("integral shift conjugation stays integral");
    for i in 1..d {
        if !bigint_of(&z, i).is_zero() {
            return Ok(UnicriticalForm::NotUnicritical);
        }
    }
    Ok(UnicriticalForm::Unicritical {
        c: bigint_of(&z, 0),
        l,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Holds {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    TotallyDisconnected,
    NeutralRootOfUnity,
    ChebyshevSegment,
    PowerMapBoundary,
}

/// Verdict for "PrePer(f) ⊆ J_f".
#[derive(Clone, Debug)]
pub struct PreperJuliaVerdict {
    pub holds: Holds,
    pub reason: Option<Reason>,
    /// For `No`: the attracting/superattracting cycle whose preperiodic
    /// points leave `J_f`. For `NeutralRootOfUnity`: the neutral cycle.
    pub witness: Option<CycleReport>,
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Maps a normal-form cycle point back to an `f`-cycle and classifies it.
fn witness_cycle(
    f: &ZPoly,
    l: &AffineMap<BigRational>,
    form_point: Complex64,
    period: usize,
) -> Result<CycleReport> {
    let shift = rational_to_f64(l.b());
    let slope = rational_to_f64(l.a());
    let point = Complex64::new(slope, 0.0) * form_point + Complex64::new(shift, 0.0);
    classify_cycle(f, point, period, &ClassifyConfig::default())
}

/// Decides "PrePer(f) ⊆ J_f" for the families the source material
/// classifies: monic integer quadratics and unicritical `z^d + c` (after
/// exact normal-form reduction). Everything else is `Unknown`.
pub fn preper_in_julia(f: &ZPoly) -> Result<PreperJuliaVerdict> {
    if !f.is_monic() || f.deg() < 2 {
        return Ok(PreperJuliaVerdict {
            holds: Holds::Unknown,
            reason: None,
            witness: None,
        });
    }
    if f.deg() == 2 {
        let (form, l) = quadratic_normal_form(f)?;
        let c = bigint_of(&form, 0);
        let linear = bigint_of(&form, 1);
        let c_i64 = c.to_i64().unwrap_or(i64::MAX);
        return if linear.is_zero() {
            // z^2 + c
            match c_i64 {
                0 => Ok(PreperJuliaVerdict {
                    holds: Holds::No,
                    reason: Some(Reason::PowerMapBoundary),
                    witness: Some(witness_cycle(f, &l, Complex64::new(0.0, 0.0), 1)?),
                }),
                -1 => Ok(PreperJuliaVerdict {
                    holds: Holds::No,
                    reason: Some(Reason::PowerMapBoundary),
                    witness: Some(witness_cycle(f, &l, Complex64::new(0.0, 0.0), 2)?),
                }),
                -2 => Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::ChebyshevSegment),
                    witness: None,
                }),
                _ => Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::TotallyDisconnected),
                    witness: None,
                }),
            }
        } else {
            // z^2 + z + c
            match c_i64 {
                0 => Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::NeutralRootOfUnity),
                    witness: Some(witness_cycle(f, &l, Complex64::new(0.0, 0.0), 1)?),
                }),
                -1 => Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::NeutralRootOfUnity),
                    witness: Some(witness_cycle(f, &l, Complex64::new(-1.0, 0.0), 1)?),
                }),
                -2 => {
                    // the neutral 3-cycle of z^2 + z - 2: roots of
                    // z^3 + 2z^2 - z - 1
                    let cubic = ZPoly::from_i64(&[-1, -1, 2, 1]).to_cpoly();
                    let w = roots(&cubic, 1e-12)?.roots[0];
                    Ok(PreperJuliaVerdict {
                        holds: Holds::Yes,
                        reason: Some(Reason::NeutralRootOfUnity),
                        witness: Some(witness_cycle(f, &l, w, 3)?),
                    })
                }
                _ => Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::TotallyDisconnected),
                    witness: None,
                }),
            }
        };
    }
    match unicritical_normal_form(f)? {
        UnicriticalForm::NotUnicritical => Ok(PreperJuliaVerdict {
            holds: Holds::Unknown,
            reason: None,
            witness: None,
        }),
        UnicriticalForm::Unicritical { c, l } => {
            let d = f.deg();
            let c_i64 = c.to_i64().unwrap_or(i64::MAX);
            if c_i64 == 0 {
                Ok(PreperJuliaVerdict {
                    holds: Holds::No,
                    reason: Some(Reason::PowerMapBoundary),
                    witness: Some(witness_cycle(f, &l, Complex64::new(0.0, 0.0), 1)?),
                })
            } else if c_i64 == -1 && d % 2 == 0 {
                Ok(PreperJuliaVerdict {
                    holds: Holds::No,
                    reason: Some(Reason::PowerMapBoundary),
                    witness: Some(witness_cycle(f, &l, Complex64::new(-1.0, 0.0), 2)?),
                })
            } else {
                Ok(PreperJuliaVerdict {
                    holds: Holds::Yes,
                    reason: Some(Reason::TotallyDisconnected),
                    witness: None,
                })
            }
        }
    }
}
