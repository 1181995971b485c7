use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{Exponents, NilError, RankPolicy};
use crate::exactalg::SparseRow;
use crate::limits::Limits;

/// Homogeneous polynomial keyed by exponent vector.
pub(crate) type Poly = BTreeMap<Exponents, BigInt>;

/// Keeps the candidates that raise the rank when inserted in order, so the
/// result is a basis of their span. Columns are the monomials that occur,
/// in graded lexicographic order.
pub(crate) fn independent_subset<K>(
    candidates: Vec<(K, Poly)>,
    degree: usize,
    policy: RankPolicy,
    limits: Limits,
) -> Result<Vec<(K, Poly)>, NilError> {
    let monomials: Vec<&Exponents> = candidates
        .iter()
        .flat_map(|(_, p)| p.keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let width = monomials.len();
    if width > limits.basis_budget {
        return Err(NilError::Budget {
            degree,
            columns: width,
            budget: limits.basis_budget,
        });
    }
    let rows: Vec<SparseRow> = candidates
        .iter()
        .map(|(_, p)| {
            p.iter()
                .rev()
                .map(|(m, c)| {
                    let pos = monomials.binary_search(&m).expect("monomial was collected");
                    (width - 1 - pos, c.clone())
                })
                .collect()
        })
        .collect();
    let mut echelon = policy.backend(width, limits.exact_threshold).echelon();
    Ok(candidates
        .into_iter()
        .zip(rows)
        .filter_map(|(cand, row)| echelon.insert(&row).then_some(cand))
        .collect())
}
