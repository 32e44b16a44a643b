use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use super::affine::AffineMap;

/// Coefficient ring bound for [`DensePoly`].
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The zero polynomial is represented by an empty coefficient vector; for
/// nonzero polynomials the leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly<T> {
    coeffs: Vec<T>,
}

/// Exact integer polynomial (`f`, Chebyshev polynomials, integer `P`).
pub type ZPoly = DensePoly<BigInt>;
/// Exact rational polynomial, used for exact affine conjugation.
pub type QPoly = DensePoly<BigRational>;
/// Complex floating polynomial, used for numeric factoring and preimages.
pub type CPoly = DensePoly<Complex64>;

impl<T: Coeff> DensePoly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The identity map `z`.
    pub fn identity() -> Self {
        DensePoly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn monomial(k: usize, c: T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0` for the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Composition `self(g(z))` by Horner over polynomials.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Self::constant(c.clone());
        }
        acc
    }

    /// `n`-fold iterate; the 0-th iterate is the identity `z`.
    pub fn iterate(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn derivative(&self) -> Self
    where
        T: FromPrimitive,
    {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("small integer"))
                .collect(),
        )
    }

    /// Affine conjugation `L^{-1} ∘ self ∘ L`.
    pub fn conjugate(&self, l: &AffineMap<T>) -> Self
    where
        T: Div<Output = T>,
    {
        let inner = self.compose(&l.to_poly());
        // apply L^{-1}(w) = (w - b) / a
        let a_inv = T::one() / l.a().clone();
        (&inner - &Self::constant(l.b().clone())).scale(&a_inv)
    }
}

impl<T: Coeff> Add for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn add(self, rhs: &DensePoly<T>) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        DensePoly::from_coeffs(out)
    }
}

impl<T: Coeff> Sub for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn sub(self, rhs: &DensePoly<T>) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        DensePoly::from_coeffs(out)
    }
}

impl<T: Coeff> Mul for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn mul(self, rhs: &DensePoly<T>) -> DensePoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::from_coeffs(out)
    }
}

impl<T: Coeff> Neg for &DensePoly<T> {
    type Output = DensePoly<T>;
    fn neg(self) -> DensePoly<T> {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl ZPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn to_cpoly(&self) -> CPoly {
        CPoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0))
                .collect(),
        )
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Sum of |c_i| over the non-leading coefficients, as f64.
    pub fn lower_coeff_abs_sum(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.coeffs()[..self.coeffs().len() - 1]
            .iter()
            .map(|c| c.magnitude().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }
}

impl QPoly {
    pub fn to_cpoly(&self) -> CPoly {
        CPoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0))
                .collect(),
        )
    }

    /// Succeeds when every coefficient is an integer.
    pub fn try_to_zpoly(&self) -> Option<ZPoly> {
        let mut out = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(ZPoly::from_coeffs(out))
    }
}

impl CPoly {
    pub fn from_f64(coeffs: &[f64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn check_finite(&self) -> crate::Result<()> {
        if self.coeffs().iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            Ok(())
        } else {
            Err(crate::Error::NonFinite)
        }
    }
}

/// The monic Chebyshev polynomial `T_d` with `T_d(z + 1/z) = z^d + z^{-d}`,
/// built by the recurrence `T_0 = 2`, `T_1 = z`, `T_{k+1} = z T_k - T_{k-1}`.
pub fn chebyshev(d: u32) -> ZPoly {
    assert!(d >= 1, "chebyshev requires d >= 1");
    let z = ZPoly::identity();
    let mut prev = ZPoly::constant(BigInt::from(2)); // T_0
    let mut cur = z.clone(); // T_1
    for _ in 1..d {
        let next = &(&z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl<T: Coeff + fmt::Display> fmt::Display for DensePoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> ZPoly {
        ZPoly::from_i64(&[0, 0, 1])
    }

    #[test]
    fn compose_binomial() {
        // (z+1)^2 = z^2 + 2z + 1
        let g = ZPoly::from_i64(&[1, 1]);
        assert_eq!(z2().compose(&g), ZPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn compose_squared_minus_one() {
        // (z^2-1)^2 - 1 = z^4 - 2z^2
        let f = ZPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(f.compose(&f), ZPoly::from_i64(&[0, 0, -2, 0, 1]));
    }

    #[test]
    fn third_iterate_fixed_point_factorization() {
        // g = z^2 + z - 2: g^3(z) - z = (z^2 - 2)(z^3 + 2z^2 - z - 1)^2
        let g = ZPoly::from_i64(&[-2, 1, 1]);
        let lhs = &g.iterate(3) - &ZPoly::identity();
        let cubic = ZPoly::from_i64(&[-1, -1, 2, 1]);
        let rhs = &ZPoly::from_i64(&[-2, 0, 1]) * &(&cubic * &cubic);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn iterate_power_map() {
        assert_eq!(z2().iterate(3), ZPoly::monomial(8, BigInt::from(1)));
        assert_eq!(z2().iterate(0), ZPoly::identity());
    }

    #[test]
    fn iterate_degree_multiplicativity() {
        let f = ZPoly::from_i64(&[3, -1, 0, 2, 1]); // degree 4
        for n in 0..4u32 {
            assert_eq!(f.iterate(n).deg(), 4usize.pow(n));
        }
    }

    #[test]
    fn conjugate_shift_kills_linear_term() {
        // z^2 + z conjugated by L = z - 1/2 gives z^2 + 1/4
        let f = ZPoly::from_i64(&[0, 1, 1]).to_qpoly();
        let l = AffineMap::new(
            BigRational::from_integer(BigInt::from(1)),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
        )
        .unwrap();
        let g = f.conjugate(&l);
        let expected = QPoly::from_coeffs(alloc::vec![
            BigRational::new(BigInt::from(1), BigInt::from(4)),
            BigRational::from_integer(BigInt::from(0)),
            BigRational::from_integer(BigInt::from(1)),
        ]);
        assert_eq!(g, expected);
    }

    #[test]
    fn conjugate_identity_is_noop() {
        let f = ZPoly::from_i64(&[1, -3, 0, 1]).to_qpoly();
        let id = AffineMap::<BigRational>::identity();
        assert_eq!(f.conjugate(&id), f);
    }

    #[test]
    fn conjugate_even_linear_coefficient() {
        // z^2 + 4z + 7 with L = z - 2 becomes monic quadratic without linear term
        let f = ZPoly::from_i64(&[7, 4, 1]).to_qpoly();
        let l = AffineMap::new(
            BigRational::from_integer(BigInt::from(1)),
            BigRational::from_integer(BigInt::from(-2)),
        )
        .unwrap();
        let g = f.conjugate(&l);
        assert!(g.coeff(1).is_zero());
        assert!(g.coeff(2).is_one());
    }

    #[test]
    fn chebyshev_small() {
        assert_eq!(chebyshev(1), ZPoly::identity());
        assert_eq!(chebyshev(2), ZPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(chebyshev(3), ZPoly::from_i64(&[0, -3, 0, 1]));
    }

    #[test]
    fn chebyshev_defining_relation_on_circle() {
        #[allow(unused_imports)]
        use num_traits::Float;
        for d in 1..=10u32 {
            let t = chebyshev(d).to_cpoly();
            for k in 0..100 {
                let theta = 2.0 * core::f64::consts::PI * (k as f64) / 100.0 + 0.05;
                let w = Complex64::new(theta.cos(), theta.sin());
                let lhs = t.eval(&(w + 1.0 / w));
                let rhs = w.powi(d as i32) + w.powi(-(d as i32));
                assert!((lhs - rhs).norm() < 1e-9, "d={d} k={k}");
            }
        }
    }
}
