//! Polynomial files: `{"terms": [{"x": i, "y": j, "c": "<decimal>"}, ...]}`.
//! Hilbert series files: `{"dims": [d0, d1, ...]}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use super::{BivariatePolynomial, HilbertSeries};
use crate::error::ParseError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermFile {
    x: u32,
    y: u32,
    c: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialFile {
    terms: Vec<TermFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HilbertFile {
    dims: Vec<u64>,
}

/// Coefficients are decimal strings so that values beyond 64 bits survive.
/// Zero coefficients are accepted and dropped; repeated exponents are not.
pub fn parse_polynomial(text: &str) -> Result<BivariatePolynomial, ParseError> {
    let raw: PolynomialFile = serde_json::from_str(text)?;
    let mut seen = BTreeSet::new();
    let mut poly = BivariatePolynomial::zero();
    for (i, term) in raw.terms.iter().enumerate() {
        let c: BigInt = term.c.trim().parse().map_err(|_| {
            ParseError::field(
                format!("terms[{i}].c"),
                format!("not an integer: {:?}", term.c),
            )
        })?;
        if !seen.insert((term.x, term.y)) {
            return Err(ParseError::field(
                format!("terms[{i}]"),
                format!("repeated monomial x^{} y^{}", term.x, term.y),
            ));
        }
        if !c.is_zero() {
            poly.add_term(term.x, term.y, c);
        }
    }
    Ok(poly)
}

/// Terms are listed from the highest `(x, y)` exponent pair down.
pub fn polynomial_to_json(p: &BivariatePolynomial) -> serde_json::Value {
    let terms: Vec<_> = p
        .terms()
        .rev()
        .map(|(x, y, c)| serde_json::json!({"x": x, "y": y, "c": c.to_string()}))
        .collect();
    serde_json::json!({ "terms": terms })
}

pub fn parse_hilbert(text: &str) -> Result<HilbertSeries, ParseError> {
    let raw: HilbertFile = serde_json::from_str(text)?;
    Ok(HilbertSeries::new(raw.dims))
}

pub fn hilbert_to_json(hs: &HilbertSeries) -> serde_json::Value {
    serde_json::json!({ "dims": hs.dims() })
}
