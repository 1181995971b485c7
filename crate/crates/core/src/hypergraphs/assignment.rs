use petgraph::unionfind::UnionFind;

use super::{HyperError, Hypergraph, RankOracle};
use crate::exactalg::DEFAULT_TRIALS;

/// `(edge index, (u, v))` with `{u, v}` inside the edge.
pub type PairAssignment = Vec<(usize, (usize, usize))>;

/// Chooses a pair of vertices inside every edge of `forest` so that the
/// pairs form a forest of the complete graph.
///
/// The forest is padded with copies of the full vertex set up to `n - 1`
/// edges, the edges are matched to distinct vertices other than 0, and the
/// edges are then processed from the lowest index that meets the visited
/// set `A` (initially `{0}`), pairing the lowest visited vertex `u` in the
/// edge with its matched vertex, which then joins `A`.
pub fn edge_to_pair_assignment(
    h: &Hypergraph,
    forest: &[usize],
) -> Result<PairAssignment, HyperError> {
    let mut oracle = RankOracle::new(h, DEFAULT_TRIALS, 0)?;
    oracle.pair_assignment(forest)
}

impl RankOracle {
    pub fn pair_assignment(&mut self, forest: &[usize]) -> Result<PairAssignment, HyperError> {
        let sorted = self.hypergraph().check_subset(forest)?;
        if !self.is_independent(&sorted)? {
            return Err(HyperError::Dependent { subset: sorted });
        }
        assign(self.hypergraph(), &sorted).ok_or(HyperError::MatchingFailed { subset: sorted })
    }
}

/// The same construction with no independence check; `None` when the
/// matching or the processing loop gets stuck, which happens exactly for
/// dependent sets: a cycle `C` covers `|C|` vertices, so either it contains
/// vertex 0 and cannot be matched, or its matched vertices fill its union
/// and none of its edges can ever meet `A`.
pub fn try_pair_assignment(
    h: &Hypergraph,
    subset: &[usize],
) -> Result<Option<PairAssignment>, HyperError> {
    let sorted = h.check_subset(subset)?;
    Ok(assign(h, &sorted))
}

fn assign(h: &Hypergraph, forest: &[usize]) -> Option<PairAssignment> {
    let n = h.vertex_count();
    if n == 0 || forest.len() > n - 1 {
        return forest.is_empty().then(Vec::new);
    }
    let full: Vec<usize> = (0..n).collect();
    let mut padded: Vec<&[usize]> = forest.iter().map(|&e| h.edge(e)).collect();
    padded.resize(n - 1, &full);

    let mut owner: Vec<Option<usize>> = vec![None; n];
    for b in 0..padded.len() {
        let mut visited = vec![false; n];
        if !augment(b, &padded, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut matched = vec![0; padded.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(b) = *o {
            matched[b] = v;
        }
    }

    let mut in_a = vec![false; n];
    in_a[0] = true;
    let mut pairs = vec![None; padded.len()];
    for _ in 0..padded.len() {
        let (b, u) = (0..padded.len())
            .filter(|&b| pairs[b].is_none())
            .find_map(|b| padded[b].iter().find(|&&v| in_a[v]).map(|&u| (b, u)))?;
        pairs[b] = Some((u, matched[b]));
        in_a[matched[b]] = true;
    }
    Some(
        forest
            .iter()
            .zip(pairs)
            .map(|(&e, p)| (e, p.expect("every edge was processed")))
            .collect(),
    )
}

/// Kuhn's augmenting path step for edge `b` against vertices other than 0.
fn augment(
    b: usize,
    edges: &[&[usize]],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &v in edges[b] {
        if v == 0 || visited[v] {
            continue;
        }
        visited[v] = true;
        if owner[v].is_none_or(|other| augment(other, edges, owner, visited)) {
            owner[v] = Some(b);
            return true;
        }
    }
    false
}

/// Checks that `pairs` names each edge of `subset` once, that each pair is
/// two distinct vertices of its edge, and that the pairs form a forest.
pub fn is_pair_forest(h: &Hypergraph, subset: &[usize], pairs: &[(usize, (usize, usize))]) -> bool {
    let Ok(expected) = h.check_subset(subset) else {
        return false;
    };
    let mut named: Vec<usize> = pairs.iter().map(|&(e, _)| e).collect();
    named.sort_unstable();
    if named != expected {
        return false;
    }
    let mut uf = UnionFind::new(h.vertex_count());
    pairs.iter().all(|&(e, (u, v))| {
        let edge = h.edge(e);
        u != v && edge.contains(&u) && edge.contains(&v) && uf.union(u, v)
    })
}
