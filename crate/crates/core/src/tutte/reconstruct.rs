use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{BivariatePolynomial, UnivariatePolynomial};
use super::series::HilbertSeries;
use super::TutteError;

/// The forest generating polynomial
/// `sum_F (1 + y + ... + y^(t-1))^e(F) * y^(t*act(F) + e(F))`
/// read off a t-labelled series: it equals `sum_k dims[k] * y^(t*e - k)`,
/// where `t*e` is the top degree of the series.
pub fn star_polynomial(hs: &HilbertSeries) -> UnivariatePolynomial {
    let top = hs.top_degree().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (k, &d) in hs.dims().iter().enumerate() {
        coeffs[top - k] = BigInt::from(d);
    }
    UnivariatePolynomial::new(coeffs)
}

fn fail(msg: impl Into<String>) -> TutteError {
    TutteError::Reconstruction(msg.into())
}

/// Recovers the Tutte polynomial of a connected graph on `n` vertices from
/// the Hilbert series of its t-labelled forest algebra, for `t >= n`.
///
/// The top degree of the series is `t * e`. Because every forest has fewer
/// than `t` edges, the lowest term `s * y^m` of the star polynomial counts
/// the `s` forests with `e(F) = m mod t` and `act(F) = m div t`; their
/// contribution is subtracted and the step repeats until nothing is left.
pub fn reconstruct_tutte(
    hs: &HilbertSeries,
    t: usize,
    n: usize,
) -> Result<BivariatePolynomial, TutteError> {
    if n == 0 {
        return Err(fail("graph must have at least one vertex"));
    }
    if t < n {
        return Err(fail(format!("t = {t} must be at least n = {n}")));
    }
    let top = hs
        .top_degree()
        .ok_or_else(|| fail("series is identically zero"))?;
    if hs.dims()[0] != 1 {
        return Err(fail(format!(
            "degree-0 dimension is {}, expected 1",
            hs.dims()[0]
        )));
    }
    if top % t != 0 {
        return Err(fail(format!(
            "top degree {top} is not divisible by t = {t}"
        )));
    }
    let edges = top / t;
    if edges + 1 < n {
        return Err(fail(format!("{edges} edges cannot connect {n} vertices")));
    }

    let mut residue = star_polynomial(hs);
    let geometric = UnivariatePolynomial::geometric(t);
    let mut counts: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    while let Some((m, s)) = residue.lowest_term() {
        let s = s.clone();
        if s.is_negative() {
            return Err(fail(format!(
                "negative coefficient {s} at y^{m} while peeling"
            )));
        }
        let (size, activity) = (m % t, m / t);
        if size >= n {
            return Err(fail(format!(
                "term y^{m} implies a forest with {size} edges on {n} vertices"
            )));
        }
        if size + activity > edges {
            return Err(fail(format!("term y^{m} implies more than {edges} edges")));
        }
        residue = &residue - &geometric.pow(size).scaled_shift(&s, m);
        *counts.entry((size, activity)).or_insert_with(BigInt::zero) += s;
    }

    let empty: Vec<_> = counts.iter().filter(|((a, _), _)| *a == 0).collect();
    if empty.len() != 1 || *empty[0].0 != (0, 0) || !empty[0].1.is_one() {
        return Err(fail(
            "the empty forest must appear exactly once, with activity 0",
        ));
    }
    if !counts.keys().any(|&(a, _)| a + 1 == n) {
        return Err(fail(
            "no spanning tree: the series does not come from a connected graph",
        ));
    }

    let mut tutte = BivariatePolynomial::zero();
    for ((size, activity), count) in counts {
        let term = &BivariatePolynomial::x_shift_pow(-1, (n - 1 - size) as u32)
            * &BivariatePolynomial::monomial(0, activity as u32, count);
        tutte = &tutte + &term;
    }
    if !tutte.has_nonnegative_coefficients() {
        return Err(fail(format!("result {tutte} has negative coefficients")));
    }
    Ok(tutte)
}
