use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::{GraphError, Multigraph};
use crate::limits::Limits;

/// A spanning forest together with its size and external activity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestRecord {
    pub edges: Vec<usize>,
    pub size: usize,
    pub activity: usize,
}

/// Number of edges outside the forest `f` that close a cycle with `f` and are
/// the smallest edge of that cycle under `order` (smallest first).
pub fn external_activity(
    g: &Multigraph,
    f: &[usize],
    order: &[usize],
) -> Result<usize, GraphError> {
    g.order_positions(order)?;
    if !g.is_forest(f)? {
        return Err(GraphError::NotAForest);
    }
    let mut in_forest = vec![false; g.edge_count()];
    for &e in f {
        in_forest[e] = true;
    }
    Ok(activity(g, &in_forest, order))
}

/// An outside edge is active iff its endpoints are joined by forest edges that
/// all come later in the order: the closing cycle is unique, so "minimal in
/// its cycle" is the same as "connected through larger forest edges".
fn activity(g: &Multigraph, in_forest: &[bool], order: &[usize]) -> usize {
    let mut uf = UnionFind::new(g.vertex_count());
    let mut active = 0;
    for &e in order.iter().rev() {
        let (u, v) = g.edge(e);
        if in_forest[e] {
            uf.union(u, v);
        } else if uf.equiv(u, v) {
            active += 1;
        }
    }
    active
}

/// All acyclic edge subsets with their external activities under `order`.
///
/// Forests are listed in lexicographic order of their sorted edge lists.
pub fn enumerate_forests(g: &Multigraph, order: &[usize]) -> Result<Vec<ForestRecord>, GraphError> {
    g.order_positions(order)?;
    let cap = Limits::global().enumeration_cap;
    if g.edge_count() > cap {
        return Err(GraphError::CapExceeded {
            edges: g.edge_count(),
            cap,
        });
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let labels: Vec<usize> = (0..g.vertex_count()).collect();
    let mut in_forest = vec![false; g.edge_count()];
    extend(g, 0, &labels, &mut chosen, &mut in_forest, order, &mut out);
    Ok(out)
}

fn extend(
    g: &Multigraph,
    next: usize,
    labels: &[usize],
    chosen: &mut Vec<usize>,
    in_forest: &mut [bool],
    order: &[usize],
    out: &mut Vec<ForestRecord>,
) {
    out.push(ForestRecord {
        edges: chosen.clone(),
        size: chosen.len(),
        activity: activity(g, in_forest, order),
    });
    for e in next..g.edge_count() {
        let (u, v) = g.edge(e);
        let (a, b) = (labels[u], labels[v]);
        if a == b {
            continue;
        }
        let merged: Vec<usize> = labels.iter().map(|&l| if l == b { a } else { l }).collect();
        chosen.push(e);
        in_forest[e] = true;
        extend(g, e + 1, &merged, chosen, in_forest, order, out);
        in_forest[e] = false;
        chosen.pop();
    }
}
