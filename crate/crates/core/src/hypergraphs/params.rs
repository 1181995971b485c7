use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HyperError, Hypergraph};
use crate::exactalg::{random_prime, PrimeField};
use crate::nilalg::LinearFormFamily;

/// Zero-sum parameter vectors of a hypergraph over a prime field: column
/// `e` is supported on the vertices of edge `e` and sums to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSet {
    field: PrimeField,
    n: usize,
    /// `columns[e]` lists `(vertex, value)` over the vertices of edge `e`.
    columns: Vec<Vec<(usize, u64)>>,
}

impl ParameterSet {
    /// `values[e][k]` is the value at the `k`-th vertex (in increasing
    /// order) of edge `e`.
    pub fn new(
        h: &Hypergraph,
        field: PrimeField,
        values: Vec<Vec<u64>>,
    ) -> Result<Self, HyperError> {
        if values.len() != h.edge_count() {
            return Err(HyperError::Parameters(format!(
                "{} columns for {} edges",
                values.len(),
                h.edge_count()
            )));
        }
        let mut columns = Vec::with_capacity(values.len());
        for (e, vals) in values.into_iter().enumerate() {
            let edge = h.edge(e);
            if vals.len() != edge.len() {
                return Err(HyperError::Parameters(format!(
                    "edge {e} has {} vertices but {} values",
                    edge.len(),
                    vals.len()
                )));
            }
            let vals: Vec<u64> = vals.into_iter().map(|v| v % field.modulus()).collect();
            if vals.iter().fold(0, |acc, &v| field.add(acc, v)) != 0 {
                return Err(HyperError::Parameters(format!(
                    "column {e} does not sum to zero"
                )));
            }
            columns.push(edge.iter().copied().zip(vals).collect());
        }
        Ok(Self {
            field,
            n: h.vertex_count(),
            columns,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn column(&self, e: usize) -> &[(usize, u64)] {
        &self.columns[e]
    }

    pub fn value(&self, vertex: usize, e: usize) -> u64 {
        self.columns[e]
            .iter()
            .find(|&&(v, _)| v == vertex)
            .map_or(0, |&(_, c)| c)
    }

    /// Multiplies column `e` by `c`.
    pub fn scale_column(&mut self, e: usize, c: u64) {
        let f = self.field;
        for (_, v) in &mut self.columns[e] {
            *v = f.mul(*v, c % f.modulus());
        }
    }

    /// One form per vertex: `X_i = sum_e c[i][e] * phi_e`, with residues
    /// lifted to `0..p`. Only meaningful for ranks taken modulo `p`.
    pub fn vertex_forms(&self) -> LinearFormFamily {
        let mut rows = vec![vec![BigInt::from(0); self.columns.len()]; self.n];
        for (e, col) in self.columns.iter().enumerate() {
            for &(v, c) in col {
                rows[v][e] = BigInt::from(c);
            }
        }
        LinearFormFamily::new(self.columns.len(), rows).expect("rows have one entry per edge")
    }
}

/// Random zero-sum parameters: a random prime in `(2^60, 2^62)`, then
/// independent uniform values on all but the last vertex of every edge, the
/// last taking minus their sum.
pub fn random_parameters(h: &Hypergraph, seed: u64) -> ParameterSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = random_prime(&mut rng);
    parameters_with(h, field, &mut rng)
}

pub(crate) fn parameters_with(
    h: &Hypergraph,
    field: PrimeField,
    rng: &mut impl Rng,
) -> ParameterSet {
    let columns = h
        .edges()
        .iter()
        .map(|edge| {
            let (last, free) = edge.split_last().expect("edges have at least two vertices");
            let mut col: Vec<(usize, u64)> = free.iter().map(|&v| (v, field.random(rng))).collect();
            let sum = col.iter().fold(0, |acc, &(_, c)| field.add(acc, c));
            col.push((*last, field.neg(sum)));
            col
        })
        .collect();
    ParameterSet {
        field,
        n: h.vertex_count(),
        columns,
    }
}
