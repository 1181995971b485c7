use num_bigint::BigInt;
use num_traits::Zero;

use super::NilError;
use crate::graphs::Multigraph;

/// Generators `X_i = sum_e c[i][e] * phi_e` of a subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormFamily {
    variables: usize,
    rows: Vec<Vec<BigInt>>,
}

impl LinearFormFamily {
    pub fn new(variables: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, NilError> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != variables) {
            return Err(NilError::Invalid(format!(
                "row {i} has {} entries, expected {variables}",
                r.len()
            )));
        }
        Ok(Self { variables, rows })
    }

    pub fn from_i64(variables: usize, rows: &[Vec<i64>]) -> Result<Self, NilError> {
        Self::new(
            variables,
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn generator_count(&self) -> usize {
        self.rows.len()
    }

    pub fn variable_count(&self) -> usize {
        self.variables
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Multiplies column `var` by `c`.
    pub fn scale_column(&mut self, var: usize, c: &BigInt) {
        for r in &mut self.rows {
            r[var] *= c;
        }
    }

    /// Row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        Self {
            variables: self.variables,
            rows: perm.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    pub(crate) fn nonzero_entries(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e, c.clone()))
                    .collect()
            })
            .collect()
    }
}

/// One form per vertex: edge `(i, j)` with `i < j` contributes `+phi_e` to
/// `X_i` and `-phi_e` to `X_j`.
pub fn graph_linear_forms(g: &Multigraph) -> LinearFormFamily {
    let mut rows = vec![vec![BigInt::zero(); g.edge_count()]; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (lo, hi) = (u.min(v), u.max(v));
        rows[lo][e] = BigInt::from(1);
        rows[hi][e] = BigInt::from(-1);
    }
    LinearFormFamily {
        variables: g.edge_count(),
        rows,
    }
}

/// Vectors `a_1..a_m` in `K^n` give `n` forms in `m` variables:
/// `X_i = sum_k a_k[i] * phi_k`.
pub fn vector_configuration_forms(vectors: &[Vec<BigInt>]) -> Result<LinearFormFamily, NilError> {
    let dim = vectors.first().map_or(0, Vec::len);
    if let Some(k) = vectors.iter().position(|a| a.len() != dim) {
        return Err(NilError::Invalid(format!(
            "vector {k} has {} coordinates, expected {dim}",
            vectors[k].len()
        )));
    }
    let rows = (0..dim)
        .map(|i| vectors.iter().map(|a| a[i].clone()).collect())
        .collect();
    LinearFormFamily::new(vectors.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &LinearFormFamily) -> Vec<Vec<i64>> {
        rows.rows()
            .iter()
            .map(|r| r.iter().map(|c| i64::try_from(c).unwrap()).collect())
            .collect()
    }

    #[test]
    fn single_edge_signs() {
        let g = Multigraph::path(2);
        assert_eq!(ints(&graph_linear_forms(&g)), vec![vec![1], vec![-1]]);
        let reversed = Multigraph::new(2, vec![(1, 0)]).unwrap();
        assert_eq!(
            ints(&graph_linear_forms(&reversed)),
            vec![vec![1], vec![-1]]
        );
    }

    #[test]
    fn columns_sum_to_zero() {
        let g = Multigraph::new(4, vec![(0, 1), (2, 1), (3, 0), (2, 3), (0, 1)]).unwrap();
        let forms = ints(&graph_linear_forms(&g));
        for e in 0..g.edge_count() {
            let col: Vec<i64> = forms.iter().map(|r| r[e]).collect();
            assert_eq!(col.iter().sum::<i64>(), 0);
            assert_eq!(col.iter().filter(|&&c| c == 1).count(), 1);
            assert_eq!(col.iter().filter(|&&c| c == -1).count(), 1);
        }
    }

    #[test]
    fn vector_configurations() {
        let a: Vec<Vec<BigInt>> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| v.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        let f = vector_configuration_forms(&a).unwrap();
        assert_eq!(ints(&f), vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(
            vector_configuration_forms(&[]).unwrap().generator_count(),
            0
        );
        let ragged = vec![vec![BigInt::from(1)], vec![]];
        assert!(vector_configuration_forms(&ragged).is_err());
    }
}
