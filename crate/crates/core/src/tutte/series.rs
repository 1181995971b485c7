use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::poly::BivariatePolynomial;
use super::TutteError;

/// Dimensions of the graded components of a graded algebra: `dims[k]` is the
/// dimension in degree `k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    dims: Vec<u64>,
}

impl HilbertSeries {
    pub fn new(mut dims: Vec<u64>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        Self { dims }
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    /// Total dimension. Saturates instead of overflowing.
    pub fn total(&self) -> u64 {
        self.dims.iter().fold(0u64, |a, &d| a.saturating_add(d))
    }

    /// Highest degree with a nonzero component; `None` for the zero series.
    pub fn top_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    fn from_bigints(coeffs: Vec<BigInt>) -> Result<Self, TutteError> {
        let dims = coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                if c.is_negative() {
                    Err(TutteError::NegativeCoefficient { degree: k })
                } else {
                    c.to_u64().ok_or(TutteError::Overflow)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(dims))
    }
}

/// Coefficients of `T(1 + t, 1/t) * t^(e - rank)`, the Hilbert series of the
/// forest algebra of a matroid with `e` elements and the given rank.
pub fn forest_hilbert_from_rank(
    t: &BivariatePolynomial,
    elements: usize,
    rank: usize,
) -> Result<HilbertSeries, TutteError> {
    specialize(t, elements, rank, true)
}

/// Forest-algebra series of a graph with `e` edges, `v` vertices and `c`
/// components from its Tutte polynomial.
pub fn forest_hilbert_from_tutte(
    t: &BivariatePolynomial,
    e: usize,
    v: usize,
    c: usize,
) -> Result<HilbertSeries, TutteError> {
    let rank = v.checked_sub(c).ok_or(TutteError::InconsistentCounts)?;
    specialize(t, e, rank, true)
}

/// Coefficients of `T(1, 1/t) * t^(e - v + c)`, the tree-algebra series.
pub fn tree_hilbert_from_tutte(
    t: &BivariatePolynomial,
    e: usize,
    v: usize,
    c: usize,
) -> Result<HilbertSeries, TutteError> {
    let rank = v.checked_sub(c).ok_or(TutteError::InconsistentCounts)?;
    specialize(t, e, rank, false)
}

fn specialize(
    t: &BivariatePolynomial,
    elements: usize,
    rank: usize,
    keep_x: bool,
) -> Result<HilbertSeries, TutteError> {
    let shift = elements
        .checked_sub(rank)
        .ok_or(TutteError::InconsistentCounts)? as i64;
    let mut out: Vec<BigInt> = Vec::new();
    for (i, j, c) in t.terms() {
        let base = shift - j as i64;
        if base < 0 {
            return Err(TutteError::NonPolynomial { y_degree: j });
        }
        let base = base as usize;
        // (1 + t)^i contributes binomial coefficients; with x = 1 it is just 2^0 = 1.
        let expansion: Vec<BigInt> = if keep_x {
            binomial_row(i)
        } else {
            vec![BigInt::from(1)]
        };
        if out.len() < base + expansion.len() {
            out.resize(base + expansion.len(), BigInt::zero());
        }
        for (k, b) in expansion.into_iter().enumerate() {
            out[base + k] += c * b;
        }
    }
    HilbertSeries::from_bigints(out)
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..n {
        let next = row[k as usize].clone() * (n - k) / (k + 1);
        row.push(next);
    }
    row
}
