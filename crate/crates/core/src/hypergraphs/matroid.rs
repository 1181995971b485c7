use std::collections::HashMap;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::params::parameters_with;
use super::{HyperError, Hypergraph, ParameterSet, MAX_CYCLE_SIZE};
use crate::exactalg::{random_prime, Echelon, ModularEchelon, DEFAULT_TRIALS};
use crate::limits::Limits;
use crate::nilalg::{subalgebra_hilbert_with, RankPolicy, TruncatedAlgebra};
use crate::tutte::{tutte_corank_nullity, BivariatePolynomial, HilbertSeries};

/// Generic rank of edge sets, estimated as the largest rank seen over a few
/// random parameter sets (each over its own random prime). A rank can only
/// be underestimated, and only when every trial hits a root of a nonzero
/// minor, which has probability at most `e / p` per trial.
#[derive(Clone, Debug)]
pub struct RankOracle {
    h: Hypergraph,
    params: Vec<ParameterSet>,
    memo: HashMap<Vec<usize>, usize>,
}

impl RankOracle {
    /// Trial 0 uses the same parameters as `random_parameters(h, seed)`.
    pub fn new(h: &Hypergraph, trials: usize, seed: u64) -> Result<Self, HyperError> {
        if trials == 0 {
            return Err(HyperError::ZeroTrials);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = (0..trials)
            .map(|_| {
                let field = random_prime(&mut rng);
                parameters_with(h, field, &mut rng)
            })
            .collect();
        Ok(Self::with_parameters(h, params))
    }

    pub fn with_parameters(h: &Hypergraph, params: Vec<ParameterSet>) -> Self {
        Self {
            h: h.clone(),
            params,
            memo: HashMap::new(),
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn parameters(&self) -> &[ParameterSet] {
        &self.params
    }

    pub fn rank(&mut self, subset: &[usize]) -> Result<usize, HyperError> {
        let sorted = self.h.check_subset(subset)?;
        Ok(self.rank_sorted(sorted))
    }

    fn rank_sorted(&mut self, sorted: Vec<usize>) -> usize {
        if let Some(&r) = self.memo.get(&sorted) {
            return r;
        }
        let r = self
            .params
            .iter()
            .map(|p| column_rank(p, &sorted))
            .max()
            .unwrap_or(0);
        self.memo.insert(sorted, r);
        r
    }

    fn rank_mask(&mut self, mask: u64) -> usize {
        self.rank_sorted(bits(mask).collect())
    }

    pub fn is_independent(&mut self, subset: &[usize]) -> Result<bool, HyperError> {
        Ok(self.rank(subset)? == subset.len())
    }

    fn all_edges(&self) -> Vec<usize> {
        (0..self.h.edge_count()).collect()
    }

    pub fn maximal_forest_size(&mut self) -> usize {
        let all = self.all_edges();
        self.rank_sorted(all)
    }

    /// Strongly connected: some forest has `n - 1` edges.
    pub fn is_strongly_connected(&mut self) -> bool {
        self.h.vertex_count() > 0 && self.maximal_forest_size() == self.h.vertex_count() - 1
    }

    /// Independent edge sets in lexicographic order of their sorted indices.
    pub fn forests(&mut self) -> Result<Vec<Vec<usize>>, HyperError> {
        check_cap(self.h.edge_count())?;
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend_forests(0, &mut current, &mut out);
        Ok(out)
    }

    fn extend_forests(&mut self, from: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for e in from..self.h.edge_count() {
            current.push(e);
            if self.rank_sorted(current.clone()) == current.len() {
                self.extend_forests(e + 1, current, out);
            }
            current.pop();
        }
    }

    /// Forests with `n - 1` edges.
    pub fn trees(&mut self) -> Result<Vec<Vec<usize>>, HyperError> {
        let size = self.h.vertex_count().saturating_sub(1);
        Ok(self
            .forests()?
            .into_iter()
            .filter(|f| f.len() == size)
            .collect())
    }

    /// Adds edges in index order whenever independence is kept.
    pub fn greedy_extension(&mut self, forest: &[usize]) -> Result<Vec<usize>, HyperError> {
        let mut current = self.h.check_subset(forest)?;
        if self.rank_sorted(current.clone()) != current.len() {
            return Err(HyperError::Dependent { subset: current });
        }
        for e in 0..self.h.edge_count() {
            if current.contains(&e) {
                continue;
            }
            let mut next = current.clone();
            next.push(e);
            next.sort_unstable();
            if self.rank_sorted(next.clone()) == next.len() {
                current = next;
            }
        }
        Ok(current)
    }

    pub fn tutte(&mut self) -> Result<BivariatePolynomial, HyperError> {
        let m = self.h.edge_count();
        Ok(tutte_corank_nullity(|mask| self.rank_mask(mask), m)?)
    }

    /// Whether the edges inside `vertices` have rank `|vertices| - 1`.
    fn spans_strongly(&mut self, vertices: u64) -> bool {
        let inside: Vec<usize> = (0..self.h.edge_count())
            .filter(|&e| self.h.edge(e).iter().all(|&v| vertices >> v & 1 == 1))
            .collect();
        self.rank_sorted(inside) + 1 == vertices.count_ones() as usize
    }

    /// Grows `seed` by every strongly connected vertex set meeting it until
    /// nothing changes; unions of overlapping strongly connected sets are
    /// strongly connected, so the result does not depend on the order.
    pub fn strongly_connected_closure(&mut self, seed: &[usize]) -> Result<Vec<usize>, HyperError> {
        self.h.check_vertices(seed)?;
        let n = self.h.vertex_count();
        check_cap(n)?;
        let mut current = seed.iter().fold(0u64, |m, &v| m | 1 << v);
        loop {
            let before = current;
            for mask in 1..1u64 << n {
                if mask & current != 0 && mask & !current != 0 && self.spans_strongly(mask) {
                    current |= mask;
                }
            }
            if current == before {
                return Ok(bits(current).collect());
            }
        }
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn check_cap(size: usize) -> Result<(), HyperError> {
    let cap = Limits::global().enumeration_cap;
    if size > cap {
        return Err(HyperError::CapExceeded { size, cap });
    }
    Ok(())
}

fn column_rank(p: &ParameterSet, edges: &[usize]) -> usize {
    let mut echelon = ModularEchelon::new(p.field());
    edges
        .iter()
        .filter(|&&e| {
            let row: Vec<(usize, BigInt)> = p
                .column(e)
                .iter()
                .map(|&(v, c)| (v, BigInt::from(c)))
                .collect();
            echelon.insert(&row)
        })
        .count()
}

pub fn generic_rank(
    h: &Hypergraph,
    subset: &[usize],
    trials: usize,
    seed: u64,
) -> Result<usize, HyperError> {
    RankOracle::new(h, trials, seed)?.rank(subset)
}

fn default_oracle(h: &Hypergraph) -> RankOracle {
    RankOracle::new(h, DEFAULT_TRIALS, 0).expect("default trials are positive")
}

pub fn is_independent(h: &Hypergraph, subset: &[usize]) -> Result<bool, HyperError> {
    default_oracle(h).is_independent(subset)
}

fn union_size(h: &Hypergraph, edges: impl Iterator<Item = usize>) -> usize {
    let mut seen = vec![false; h.vertex_count()];
    edges
        .flat_map(|e| h.edge(e))
        .filter(|&&v| !std::mem::replace(&mut seen[v], true))
        .count()
}

fn pick(subset: &[usize], mask: u64) -> impl Iterator<Item = usize> + '_ {
    bits(mask).map(move |i| subset[i])
}

/// A cycle: `|C| = |union of C|` and no proper nonempty subset has the same
/// property. The empty set is not a cycle.
pub fn is_cycle(h: &Hypergraph, subset: &[usize]) -> Result<bool, HyperError> {
    let c = h.check_subset(subset)?;
    if c.len() > MAX_CYCLE_SIZE {
        return Err(HyperError::CapExceeded {
            size: c.len(),
            cap: MAX_CYCLE_SIZE,
        });
    }
    if c.is_empty() || union_size(h, c.iter().copied()) != c.len() {
        return Ok(false);
    }
    let full = (1u64 << c.len()) - 1;
    Ok(!(1..full).any(|mask| union_size(h, pick(&c, mask)) == mask.count_ones() as usize))
}

/// Smallest subset `T` with `|T| = |union of T|`, scanning by size. Being
/// smallest, it is a cycle.
pub fn find_cycle(h: &Hypergraph, subset: &[usize]) -> Result<Option<Vec<usize>>, HyperError> {
    let s = h.check_subset(subset)?;
    check_cap(s.len())?;
    for k in 1..=s.len() {
        // Gosper's hack: masks with exactly k bits, in increasing order.
        let mut mask: u64 = (1 << k) - 1;
        while mask < 1 << s.len() {
            if union_size(h, pick(&s, mask)) == k {
                return Ok(Some(pick(&s, mask).collect()));
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    Ok(None)
}

pub fn contains_cycle(h: &Hypergraph, subset: &[usize]) -> Result<bool, HyperError> {
    Ok(find_cycle(h, subset)?.is_some())
}

pub fn enumerate_hyperforests(h: &Hypergraph) -> Result<Vec<Vec<usize>>, HyperError> {
    default_oracle(h).forests()
}

pub fn enumerate_hypertrees(h: &Hypergraph) -> Result<Vec<Vec<usize>>, HyperError> {
    default_oracle(h).trees()
}

pub fn is_strongly_connected(h: &Hypergraph) -> bool {
    default_oracle(h).is_strongly_connected()
}

pub fn maximal_forest_size(h: &Hypergraph) -> usize {
    default_oracle(h).maximal_forest_size()
}

pub fn greedy_extension(h: &Hypergraph, forest: &[usize]) -> Result<Vec<usize>, HyperError> {
    default_oracle(h).greedy_extension(forest)
}

pub fn hypergraph_tutte(h: &Hypergraph) -> Result<BivariatePolynomial, HyperError> {
    default_oracle(h).tutte()
}

pub fn strongly_connected_closure(
    h: &Hypergraph,
    seed: &[usize],
) -> Result<Vec<usize>, HyperError> {
    default_oracle(h).strongly_connected_closure(seed)
}

/// Series of the subalgebra generated by the vertex forms of `params`,
/// with ranks taken over the parameters' own prime field.
pub fn hypergraph_hilbert(
    h: &Hypergraph,
    params: &ParameterSet,
) -> Result<HilbertSeries, HyperError> {
    let forms = params.vertex_forms();
    if forms.generator_count() != h.vertex_count() || forms.variable_count() != h.edge_count() {
        return Err(HyperError::Parameters(format!(
            "parameters are for {} vertices and {} edges",
            forms.generator_count(),
            forms.variable_count()
        )));
    }
    let alg = TruncatedAlgebra::new(h.edge_count(), 1)?;
    Ok(subalgebra_hilbert_with(
        &alg,
        &forms,
        RankPolicy::Modular(params.field()),
    )?)
}

/// Edges contained in `vertices`, relabelled onto `0..|vertices|` in
/// increasing order.
pub fn induced_subhypergraph(h: &Hypergraph, vertices: &[usize]) -> Result<Hypergraph, HyperError> {
    h.check_vertices(vertices)?;
    let mut index = vec![None; h.vertex_count()];
    let mut kept: Vec<usize> = vertices.to_vec();
    kept.sort_unstable();
    kept.dedup();
    for (i, &v) in kept.iter().enumerate() {
        index[v] = Some(i);
    }
    let edges = h
        .edges()
        .iter()
        .filter_map(|e| e.iter().map(|&v| index[v]).collect::<Option<Vec<_>>>())
        .collect();
    Hypergraph::new(kept.len(), edges)
}
