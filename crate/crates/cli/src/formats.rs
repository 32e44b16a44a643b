//! JSON schemas for polynomials and factor specs.
//!
//! Univariate: `{"var": "z", "coeffs": ["c0", "c1", ...]}` (ascending,
//! decimal strings). Multivariate: `{"vars": ["x", "y"], "terms":
//! [{"exp": [i, j], "coeff": "c"}]}`. A flag value starting with `{` or `[`
//! is parsed inline; anything else is read as a file path.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use dynmahler_core::poly::{AffineMap, MPoly, ZPoly};

use crate::{CliError, CliResult};

#[derive(Deserialize)]
#[serde(untagged)]
enum PolyJson {
    Uni {
        #[allow(dead_code)]
        var: String,
        coeffs: Vec<String>,
    },
    Multi {
        vars: Vec<String>,
        terms: Vec<TermJson>,
    },
}

#[derive(Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coeff: String,
}

/// Reads inline JSON or a file path into a string.
fn load(spec: &str) -> CliResult<String> {
    let trimmed = spec.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(spec.to_owned())
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| CliError::Usage(format!("cannot read '{spec}': {e}")))
    }
}

fn parse_bigint(s: &str, field: &str) -> CliResult<BigInt> {
    BigInt::from_str(s.trim())
        .map_err(|_| CliError::Usage(format!("field '{field}': '{s}' is not an integer")))
}

fn parse_bigrational(s: &str, field: &str) -> CliResult<BigRational> {
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let num = parse_bigint(n, field)?;
        let den = parse_bigint(d, field)?;
        if den == BigInt::from(0) {
            return Err(CliError::Usage(format!("field '{field}': zero denominator")));
        }
        Ok(BigRational::new(num, den))
    } else {
        Ok(BigRational::from_integer(parse_bigint(t, field)?))
    }
}

/// Parses a univariate integer polynomial.
pub fn parse_zpoly(spec: &str) -> CliResult<ZPoly> {
    let text = load(spec)?;
    let json: PolyJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("polynomial JSON: {e}")))?;
    match json {
        PolyJson::Uni { coeffs, .. } => {
            let mut out = Vec::with_capacity(coeffs.len());
            for (i, c) in coeffs.iter().enumerate() {
                out.push(parse_bigint(c, &format!("coeffs[{i}]"))?);
            }
            Ok(ZPoly::from_coeffs(out))
        }
        PolyJson::Multi { .. } => Err(CliError::Usage(
            "expected a univariate polynomial ({\"var\", \"coeffs\"}), got a multivariate one"
                .into(),
        )),
    }
}

/// Parses either schema into an `MPoly` plus its variable names.
pub fn parse_mpoly(spec: &str) -> CliResult<(MPoly, Vec<String>)> {
    let text = load(spec)?;
    let json: PolyJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("polynomial JSON: {e}")))?;
    match json {
        PolyJson::Uni { var, coeffs } => {
            let mut p = MPoly::zero(1);
            for (i, c) in coeffs.iter().enumerate() {
                p.add_term(vec![i as u32], parse_bigint(c, &format!("coeffs[{i}]"))?);
            }
            Ok((p, vec![var]))
        }
        PolyJson::Multi { vars, terms } => {
            if vars.is_empty() {
                return Err(CliError::Usage("field 'vars': must be non-empty".into()));
            }
            let mut p = MPoly::zero(vars.len());
            for (i, t) in terms.iter().enumerate() {
                if t.exp.len() != vars.len() {
                    return Err(CliError::Usage(format!(
                        "field 'terms[{i}].exp': expected {} exponents, got {}",
                        vars.len(),
                        t.exp.len()
                    )));
                }
                p.add_term(
                    t.exp.clone(),
                    parse_bigint(&t.coeff, &format!("terms[{i}].coeff"))?,
                );
            }
            Ok((p, vars))
        }
    }
}

#[derive(Deserialize)]
struct FactorSpecJson {
    ftilde: serde_json::Value,
    #[serde(rename = "L", default)]
    l: Option<AffineJson>,
    n: u32,
    m: u32,
}

#[derive(Deserialize)]
struct AffineJson {
    a: String,
    b: String,
}

/// Parses a JSON list of factor specs
/// `[{"ftilde": {...}, "L": {"a": "1", "b": "0"}, "n": 1, "m": 0}, ...]`;
/// `L` defaults to the identity.
pub fn parse_factor_specs(
    spec: &str,
) -> CliResult<Vec<dynmahler_core::kronecker::FactorSpec>> {
    let text = load(spec)?;
    let entries: Vec<FactorSpecJson> = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("factor-spec JSON: {e}")))?;
    let mut out = Vec::with_capacity(entries.len());
    for (i, e) in entries.into_iter().enumerate() {
        let ftilde = parse_zpoly(&e.ftilde.to_string())?;
        let l = match e.l {
            None => AffineMap::identity(),
            Some(aj) => {
                let a = parse_bigrational(&aj.a, &format!("[{i}].L.a"))?;
                let b = parse_bigrational(&aj.b, &format!("[{i}].L.b"))?;
                AffineMap::new(a, b)
                    .map_err(|_| CliError::Usage(format!("field '[{i}].L.a': must be nonzero")))?
            }
        };
        out.push(dynmahler_core::kronecker::FactorSpec::new(ftilde, l, e.n, e.m));
    }
    Ok(out)
}
