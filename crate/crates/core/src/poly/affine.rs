use alloc::vec;
use core::ops::{Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::dense::{Coeff, DensePoly};
use crate::{Error, Result};

/// Invertible affine map `L(z) = a z + b` with `a != 0`.
///
/// The scalar type is either `Complex64` (numeric mode) or `BigRational`
/// (exact mode, used wherever normal forms must be computed exactly).
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<T> {
    a: T,
    b: T,
}

impl<T> AffineMap<T>
where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>,
{
    pub fn new(a: T, b: T) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::InvalidInput("affine map requires a != 0"));
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity() -> Self {
        AffineMap {
            a: T::one(),
            b: T::zero(),
        }
    }

    pub fn a(&self) -> &T {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn apply(&self, z: &T) -> T {
        self.a.clone() * z.clone() + self.b.clone()
    }

    /// `L^{-1}(w) = (w - b) / a`; satisfies `L(L^{-1}(z)) = z` exactly in the
    /// exact representation.
    pub fn inverse(&self) -> Self {
        let a_inv = T::one() / self.a.clone();
        AffineMap {
            a: a_inv.clone(),
            b: -(self.b.clone() * a_inv),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The map as a degree-1 polynomial `b + a z`.
    pub fn to_poly(&self) -> DensePoly<T>
    where
        T: Coeff,
    {
        DensePoly::from_coeffs(vec![self.b.clone(), self.a.clone()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRational;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn inverse_round_trips_exactly() {
        let l = AffineMap::new(rat(3, 2), rat(-7, 5)).unwrap();
        let inv = l.inverse();
        let z = rat(11, 13);
        assert_eq!(l.apply(&inv.apply(&z)), z);
        assert_eq!(inv.apply(&l.apply(&z)), z);
    }

    #[test]
    fn zero_slope_rejected() {
        assert!(AffineMap::new(rat(0, 1), rat(1, 1)).is_err());
    }
}
