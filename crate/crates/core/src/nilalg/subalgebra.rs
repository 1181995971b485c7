use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::algebra::accumulate;
use super::span::{independent_subset, Poly};
use super::{Exponents, LinearFormFamily, NilError, RankPolicy, TruncatedAlgebra};
use crate::limits::Limits;
use crate::tutte::HilbertSeries;

/// Hilbert series of the subalgebra of `alg` generated by `forms`.
pub fn subalgebra_hilbert(
    alg: &TruncatedAlgebra,
    forms: &LinearFormFamily,
) -> Result<HilbertSeries, NilError> {
    subalgebra_hilbert_with(alg, forms, RankPolicy::Auto)
}

pub fn subalgebra_hilbert_with(
    alg: &TruncatedAlgebra,
    forms: &LinearFormFamily,
    policy: RankPolicy,
) -> Result<HilbertSeries, NilError> {
    if forms.variable_count() != alg.variable_count() {
        return Err(NilError::FormMismatch {
            expected: alg.variable_count(),
            got: forms.variable_count(),
        });
    }
    if !alg.unit_survives() {
        return Ok(HilbertSeries::default());
    }
    let limits = Limits::global();
    let xs = forms.nonzero_entries();
    let unit: Exponents = vec![0u16; alg.variable_count()].into();
    // Basis of the degree-k component as products of generators, each
    // recorded by the sorted multiset of generator indices it came from.
    let mut basis: Vec<(Vec<usize>, Poly)> =
        vec![(Vec::new(), Poly::from([(unit, BigInt::from(1))]))];
    let mut dims = vec![1u64];
    for degree in 1.. {
        let mut seen = BTreeSet::new();
        let mut candidates = Vec::new();
        for (word, p) in &basis {
            for (j, x) in xs.iter().enumerate() {
                let mut next = word.clone();
                let at = next.partition_point(|&i| i <= j);
                next.insert(at, j);
                if !seen.insert(next.clone()) {
                    continue;
                }
                let product = times_form(alg, p, x);
                if !product.is_empty() {
                    candidates.push((next, product));
                }
            }
        }
        basis = independent_subset(candidates, degree, policy, limits)?;
        // The subalgebra is generated in degree 1, so the component in
        // degree k+1 is spanned by X_j times the component in degree k:
        // once a component vanishes, all later ones do.
        if basis.is_empty() {
            break;
        }
        dims.push(basis.len() as u64);
    }
    Ok(HilbertSeries::new(dims))
}

fn times_form(alg: &TruncatedAlgebra, p: &Poly, form: &[(usize, BigInt)]) -> Poly {
    let mut out = Poly::new();
    for (m, c) in p {
        for (var, a) in form {
            if let Some(next) = alg.times_variable(m, *var) {
                accumulate(&mut out, next, c * a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{PrimeField, DEFAULT_PRIME};
    use crate::graphs::Multigraph;
    use crate::nilalg::{graph_linear_forms, vector_configuration_forms};

    fn forest_series(g: &Multigraph, t: u32) -> Vec<u64> {
        let alg = TruncatedAlgebra::forest(g, t).unwrap();
        subalgebra_hilbert(&alg, &graph_linear_forms(g))
            .unwrap()
            .dims()
            .to_vec()
    }

    #[test]
    fn single_edge_and_k3() {
        assert_eq!(forest_series(&Multigraph::path(2), 1), vec![1, 1]);
        let k3 = Multigraph::complete(3);
        assert_eq!(forest_series(&k3, 1), vec![1, 2, 3, 1]);
        let tree = TruncatedAlgebra::tree(&k3).unwrap();
        let hs = subalgebra_hilbert(&tree, &graph_linear_forms(&k3)).unwrap();
        assert_eq!(hs.dims(), &[1, 2]);
    }

    #[test]
    fn vector_configurations() {
        let vecs = |v: &[[i64; 2]]| -> Vec<Vec<BigInt>> {
            v.iter()
                .map(|a| a.iter().map(|&c| BigInt::from(c)).collect())
                .collect()
        };
        let u23 = vector_configuration_forms(&vecs(&[[1, 0], [0, 1], [1, 1]])).unwrap();
        let alg = TruncatedAlgebra::new(3, 1).unwrap();
        let hs = subalgebra_hilbert(&alg, &u23).unwrap();
        assert_eq!(hs.dims(), &[1, 2, 3, 1]);
        assert_eq!(hs.total(), 7);
        let empty = vector_configuration_forms(&[]).unwrap();
        let hs = subalgebra_hilbert(&TruncatedAlgebra::new(0, 1).unwrap(), &empty).unwrap();
        assert_eq!(hs.dims(), &[1]);
        let zero = vector_configuration_forms(&vecs(&[[0, 0]])).unwrap();
        let hs = subalgebra_hilbert(&TruncatedAlgebra::new(1, 1).unwrap(), &zero).unwrap();
        assert_eq!(hs.dims(), &[1]);
    }

    #[test]
    fn backends_agree() {
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
        let alg = TruncatedAlgebra::forest(&g, 1).unwrap();
        let forms = graph_linear_forms(&g);
        let exact = subalgebra_hilbert_with(&alg, &forms, RankPolicy::Exact).unwrap();
        let field = PrimeField::new(DEFAULT_PRIME).unwrap();
        let modular = subalgebra_hilbert_with(&alg, &forms, RankPolicy::Modular(field)).unwrap();
        assert_eq!(exact, modular);
        assert_eq!(exact.total(), 38);
    }

    #[test]
    fn form_shape_is_checked() {
        let alg = TruncatedAlgebra::new(2, 1).unwrap();
        let forms = graph_linear_forms(&Multigraph::path(2));
        assert!(matches!(
            subalgebra_hilbert(&alg, &forms),
            Err(NilError::FormMismatch {
                expected: 2,
                got: 1
            })
        ));
    }
}
