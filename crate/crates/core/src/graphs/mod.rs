//! Loopless multigraphs and the combinatorics the algebras are built on:
//! spanning forests with external activity, cuts, cycle spaces, bridges,
//! edge cloning, and the three Whitney operations.

mod cuts;
mod forests;
pub mod io;
mod transforms;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

pub use cuts::{
    bridge_free, bridges, cut_space, cycle_space, is_cut_free_support, minimal_cuts,
    same_cycle_space, Gf2Matrix,
};
pub use forests::{enumerate_forests, external_activity, ForestRecord};
pub use transforms::{clone_graph, whitney_cleave, whitney_identify, whitney_twist};

/// Largest edge count for which edge subsets are handled as bitmasks.
pub const MAX_MASK_EDGES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} = ({u}, {v}) is a loop")]
    Loop { index: usize, u: usize, v: usize },
    #[error("edge {index} = ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("vertex {vertex} outside 0..{n}")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("edge index {index} outside 0..{edges}")]
    NoSuchEdge { index: usize, edges: usize },
    #[error("edge {index} listed more than once in a subset")]
    DuplicateEdge { index: usize },
    #[error("edge order is not a permutation of 0..{edges}")]
    InvalidOrder { edges: usize },
    #[error("edge subset contains a cycle")]
    NotAForest,
    #[error("{edges} edges exceed the enumeration cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("edge counts differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{0}")]
    Whitney(String),
}

/// Undirected loopless multigraph on vertices `0..n`. The edge list order is
/// the default linear order on edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop { index, u, v });
            }
        }
        Ok(Self { n, edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Self {
            n,
            edges: (1..n).map(|v| (v - 1, v)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 2 {
            g.edges.push((n - 1, 0));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Same vertex set, only the edges selected by `keep`.
    pub fn edge_subgraph(&self, keep: impl Fn(usize) -> bool) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(i, _)| keep(*i))
                .map(|(_, &e)| e)
                .collect(),
        }
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        components_with(self.n, self.edges.iter().copied())
    }

    /// Component label (the smallest vertex in the component) for each vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut smallest = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = uf.find(v);
            smallest[r] = smallest[r].min(v);
        }
        (0..self.n).map(|v| smallest[uf.find(v)]).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Rank of the graphic matroid: `v - c`.
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// `true` iff the edges in `subset` contain no cycle.
    pub fn is_forest(&self, subset: &[usize]) -> Result<bool, GraphError> {
        self.check_subset(subset)?;
        let mut uf = UnionFind::new(self.n);
        Ok(subset.iter().all(|&i| {
            let (u, v) = self.edges[i];
            uf.union(u, v)
        }))
    }

    pub(crate) fn check_subset(&self, subset: &[usize]) -> Result<(), GraphError> {
        let mut seen = vec![false; self.edges.len()];
        for &index in subset {
            if index >= self.edges.len() {
                return Err(GraphError::NoSuchEdge {
                    index,
                    edges: self.edges.len(),
                });
            }
            if std::mem::replace(&mut seen[index], true) {
                return Err(GraphError::DuplicateEdge { index });
            }
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.n {
            Ok(())
        } else {
            Err(GraphError::NoSuchVertex { vertex, n: self.n })
        }
    }

    /// Validates an edge order (smallest edge first) and returns each edge's position.
    pub(crate) fn order_positions(&self, order: &[usize]) -> Result<Vec<usize>, GraphError> {
        let m = self.edges.len();
        let invalid = GraphError::InvalidOrder { edges: m };
        if order.len() != m {
            return Err(invalid);
        }
        let mut pos = vec![usize::MAX; m];
        for (p, &e) in order.iter().enumerate() {
            if e >= m || pos[e] != usize::MAX {
                return Err(invalid);
            }
            pos[e] = p;
        }
        Ok(pos)
    }

    /// The identity order `0, 1, ..., e-1`.
    pub fn natural_order(&self) -> Vec<usize> {
        (0..self.edges.len()).collect()
    }
}

pub(crate) fn components_with(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut uf = UnionFind::new(n);
    let mut count = n;
    for (u, v) in edges {
        if uf.union(u, v) {
            count -= 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(
            Multigraph::new(2, vec![(1, 1)]),
            Err(GraphError::Loop {
                index: 0,
                u: 1,
                v: 1
            })
        );
        assert!(matches!(
            Multigraph::new(2, vec![(0, 2)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn component_counts() {
        assert_eq!(Multigraph::edgeless(3).component_count(), 3);
        assert_eq!(Multigraph::complete(3).component_count(), 1);
        let g = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.component_labels(), vec![0, 0, 2, 2]);
        assert_eq!(Multigraph::edgeless(0).component_count(), 0);
    }

    #[test]
    fn forest_checks() {
        let k3 = Multigraph::complete(3);
        assert!(k3.is_forest(&[0, 1]).unwrap());
        assert!(!k3.is_forest(&[0, 1, 2]).unwrap());
        let parallel = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(!parallel.is_forest(&[0, 1]).unwrap());
        assert!(k3.is_forest(&[]).unwrap());
        assert_eq!(
            k3.is_forest(&[0, 0]),
            Err(GraphError::DuplicateEdge { index: 0 })
        );
        assert!(matches!(
            k3.is_forest(&[3]),
            Err(GraphError::NoSuchEdge { .. })
        ));
    }
}
