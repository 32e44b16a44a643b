use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::dense::ZPoly;
use crate::{Error, Result};

/// Sparse multivariate polynomial over the integers.
///
/// Terms map exponent vectors (length `nvars`) to nonzero coefficients. The
/// `BTreeMap` ordering of exponent vectors is lexicographic with the first
/// variable most significant, which is a monomial order; the last entry is
/// the leading term used by exact division.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1);
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(exp, BigInt::from(1));
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            // re-fetch key to remove; easiest via retain on zero entries
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree in variable `var` (zero polynomial has degree 0).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (exp, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
            for (v, &e) in exp.iter().enumerate() {
                if e > 0 {
                    t *= point[v].powu(e);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.nvars, BigInt::from(1));
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Positive gcd of the coefficients and the primitive part.
    pub fn content_primitive(&self) -> Result<(BigInt, MPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        let prim = MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c / &g))
                .collect(),
        };
        Ok((g, prim))
    }

    pub fn is_primitive(&self) -> bool {
        self.content_primitive()
            .map(|(c, _)| c == BigInt::from(1))
            .unwrap_or(false)
    }

    /// Exact division over the integers: returns `Q` with `self = divisor * Q`,
    /// or `None` when no such integer quotient exists.
    pub fn divide_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return None;
        }
        let (lead_exp, lead_coeff) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (r_exp, r_coeff) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
            // leading monomial of the remainder must be divisible by the
            // divisor's leading monomial, with exact coefficient division
            let mut q_exp = Vec::with_capacity(self.nvars);
            for (re, le) in r_exp.iter().zip(lead_exp.iter()) {
                if re < le {
                    return None;
                }
                q_exp.push(re - le);
            }
            let (q_coeff, r) = r_coeff.div_rem(lead_coeff);
            if !r.is_zero() {
                return None;
            }
            let mut t = MPoly::zero(self.nvars);
            t.add_term(q_exp, q_coeff);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Coefficient of `var^k`, returned with `var`'s exponent zeroed out.
    pub fn coeff_of_power(&self, var: usize, k: u32) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (exp, c) in &self.terms {
            if exp[var] == k {
                let mut e = exp.clone();
                e[var] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Views the polynomial as univariate in `var`; `None` when any other
    /// variable occurs.
    pub fn to_zpoly_single(&self, var: usize) -> Option<ZPoly> {
        let mut coeffs = vec![BigInt::zero(); self.degree_in(var) as usize + 1];
        for (exp, c) in &self.terms {
            for (v, &e) in exp.iter().enumerate() {
                if v != var && e != 0 {
                    return None;
                }
            }
            coeffs[exp[var] as usize] = c.clone();
        }
        Some(ZPoly::from_coeffs(coeffs))
    }

    /// Substitutes `x_i := subs[i](x)` for univariate `subs` in a common
    /// variable, producing an exact univariate polynomial.
    pub fn compose_zpoly(&self, subs: &[ZPoly]) -> ZPoly {
        assert_eq!(subs.len(), self.nvars);
        // power cache per variable
        let mut caches: Vec<Vec<ZPoly>> = subs
            .iter()
            .map(|s| vec![ZPoly::constant(BigInt::from(1)), s.clone()])
            .collect();
        for (v, cache) in caches.iter_mut().enumerate() {
            let dmax = self.degree_in(v) as usize;
            while cache.len() <= dmax {
                let next = &cache[cache.len() - 1] * &cache[1];
                cache.push(next);
            }
        }
        let mut acc = ZPoly::zero();
        for (exp, c) in &self.terms {
            let mut t = ZPoly::constant(c.clone());
            for (v, &e) in exp.iter().enumerate() {
                if e > 0 {
                    t = &t * &caches[v][e as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Largest |coefficient| as f64 (0 for the zero polynomial).
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }
}

impl core::fmt::Display for MPoly {
    /// Terms in descending monomial order with generic variable names
    /// `x0, x1, ...` (or `x, y` for two variables).
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let name = |v: usize| -> alloc::string::String {
            if self.nvars <= 2 {
                alloc::string::String::from(if v == 0 { "x" } else { "y" })
            } else {
                alloc::format!("x{v}")
            }
        };
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let is_const = exp.iter().all(|&e| e == 0);
            let unit = mag == BigInt::from(1);
            if !unit || is_const {
                write!(f, "{mag}")?;
            }
            let mut star = !unit && !is_const;
            for (v, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if star {
                    f.write_str("*")?;
                }
                star = true;
                write!(f, "{}", name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp: Vec<u32> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> (MPoly, MPoly) {
        (MPoly::var(2, 0), MPoly::var(2, 1))
    }

    fn int(c: i64) -> MPoly {
        MPoly::constant(2, BigInt::from(c))
    }

    #[test]
    fn content_factoring() {
        let (x, y) = xy();
        let p = &(&x * &int(2)) + &(&y * &int(2)); // 2x + 2y
        let (c, prim) = p.content_primitive().unwrap();
        assert_eq!(c, BigInt::from(2));
        assert_eq!(prim, &x + &y);

        let q = &(&x * &x) + &x; // x^2 + x, already primitive
        let (c, prim) = q.content_primitive().unwrap();
        assert_eq!(c, BigInt::from(1));
        assert_eq!(prim, q);
    }

    #[test]
    fn content_of_mixed_terms() {
        // 6x^2y - 9xy^2 + 3 -> (3, 2x^2y - 3xy^2 + 1)
        let p = MPoly::from_terms(
            2,
            [
                (vec![2, 1], BigInt::from(6)),
                (vec![1, 2], BigInt::from(-9)),
                (vec![0, 0], BigInt::from(3)),
            ],
        );
        let (c, prim) = p.content_primitive().unwrap();
        assert_eq!(c, BigInt::from(3));
        assert_eq!(
            prim,
            MPoly::from_terms(
                2,
                [
                    (vec![2, 1], BigInt::from(2)),
                    (vec![1, 2], BigInt::from(-3)),
                    (vec![0, 0], BigInt::from(1)),
                ],
            )
        );
    }

    #[test]
    fn divide_exact_roundtrip() {
        let (x, y) = xy();
        let a = &x - &y;
        let b = &x + &y;
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&a), Some(b.clone()));
        assert_eq!(prod.divide_exact(&b), Some(a.clone()));
    }

    #[test]
    fn divide_exact_rejects_remainder() {
        let (x, y) = xy();
        // x^2 - y^2 + 1 is not divisible by x - y
        let p = &(&(&x * &x) - &(&y * &y)) + &int(1);
        assert_eq!(p.divide_exact(&(&x - &y)), None);
    }

    #[test]
    fn divide_difference_of_iterates() {
        // f = z^2 - 1: f(x) - f(y) = x^2 - y^2 = (x - y)(x + y)
        let (x, y) = xy();
        let f = ZPoly::from_i64(&[-1, 0, 1]);
        let fx = MPoly::from_terms(
            2,
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32, 0], c.clone())),
        );
        let fy = MPoly::from_terms(
            2,
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![0, i as u32], c.clone())),
        );
        let diff = &fx - &fy;
        assert_eq!(diff.divide_exact(&(&x - &y)), Some(&x + &y));
    }

    #[test]
    fn compose_substitutes_iterates() {
        // P = xy - 1 with y := x^2 gives x^3 - 1
        let (x, y) = xy();
        let p = &(&x * &y) - &int(1);
        let ident = ZPoly::identity();
        let sq = ZPoly::from_i64(&[0, 0, 1]);
        assert_eq!(p.compose_zpoly(&[ident, sq]), ZPoly::from_i64(&[-1, 0, 0, 1]));
    }

    #[test]
    fn zero_content_errors() {
        assert!(MPoly::zero(2).content_primitive().is_err());
    }
}
