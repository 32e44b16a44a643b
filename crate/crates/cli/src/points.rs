//! Point syntax: rationals like `2`, `-7/3`; complex numbers like `1.5`,
//! `0.5i`, `1.5+0.5i`, `-1-2i`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::{CliError, CliResult};

/// Parses an exact rational (`p` or `p/q`); fails on decimals.
pub fn parse_rational(s: &str) -> CliResult<BigRational> {
    let t = s.trim();
    let mk = |m: &str| {
        BigInt::from_str(m)
            .map_err(|_| CliError::Usage(format!("'{s}' is not a rational (use p or p/q)")))
    };
    if let Some((n, d)) = t.split_once('/') {
        let den = mk(d.trim())?;
        if den == BigInt::from(0) {
            return Err(CliError::Usage(format!("'{s}': zero denominator")));
        }
        Ok(BigRational::new(mk(n.trim())?, den))
    } else {
        Ok(BigRational::from_integer(mk(t)?))
    }
}

/// Parses a complex number; accepts rationals, decimals, and `a+bi` forms.
pub fn parse_complex(s: &str) -> CliResult<Complex64> {
    let t: String = s.trim().chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(CliError::Usage("empty point".into()));
    }
    if let Ok(r) = parse_rational(&t) {
        return Ok(Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0));
    }
    // pure imaginary or real
    if let Some(im) = t.strip_suffix('i') {
        // try splitting a+bi / a-bi at the last sign not at position 0
        if let Some(pos) = split_pos(im) {
            let (re_s, im_s) = im.split_at(pos);
            let re = parse_real(re_s, s)?;
            let im_val = match im_s {
                "+" => 1.0,
                "-" => -1.0,
                _ => parse_real(im_s, s)?,
            };
            return Ok(Complex64::new(re, im_val));
        }
        let im_val = match im {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => parse_real(im, s)?,
        };
        return Ok(Complex64::new(0.0, im_val));
    }
    Ok(Complex64::new(parse_real(&t, s)?, 0.0))
}

/// Index of the sign separating real and imaginary parts, if any.
fn split_pos(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    for i in (1..bytes.len()).rev() {
        if (bytes[i] == b'+' || bytes[i] == b'-')
            && bytes[i - 1] != b'e'
            && bytes[i - 1] != b'E'
        {
            return Some(i);
        }
    }
    None
}

fn parse_real(part: &str, whole: &str) -> CliResult<f64> {
    if let Ok(r) = parse_rational(part) {
        return Ok(r.to_f64().unwrap_or(f64::NAN));
    }
    part.parse::<f64>()
        .map_err(|_| CliError::Usage(format!("'{whole}' is not a valid point")))
}
