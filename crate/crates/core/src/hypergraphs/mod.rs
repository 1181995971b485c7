//! Hypergraphs and their matroid: a set of hyperedges is independent when
//! generic zero-sum parameter vectors on it are linearly independent, which
//! happens exactly when it contains no cycle.

mod assignment;
pub mod io;
mod matroid;
mod params;

use thiserror::Error;

use crate::graphs::Multigraph;
use crate::nilalg::NilError;
use crate::tutte::TutteError;

pub use assignment::{
    edge_to_pair_assignment, is_pair_forest, try_pair_assignment, PairAssignment,
};
pub use matroid::{
    contains_cycle, enumerate_hyperforests, enumerate_hypertrees, find_cycle, generic_rank,
    greedy_extension, hypergraph_hilbert, hypergraph_tutte, induced_subhypergraph, is_cycle,
    is_independent, is_strongly_connected, maximal_forest_size, strongly_connected_closure,
    RankOracle,
};
pub use params::{random_parameters, ParameterSet};

/// Largest candidate cycle whose proper subsets are checked exhaustively.
pub const MAX_CYCLE_SIZE: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("edge {index} has {size} vertices; hyperedges need at least 2")]
    EdgeTooSmall { index: usize, size: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },
    #[error("edge {index} has vertex {vertex} outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("vertex {vertex} outside 0..{n}")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("edge {index} outside 0..{m}")]
    NoSuchEdge { index: usize, m: usize },
    #[error("edge {index} listed twice in a subset")]
    DuplicateEdge { index: usize },
    #[error("{size} items exceed the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("edge set {subset:?} is dependent")]
    Dependent { subset: Vec<usize> },
    #[error("no matching of edges to vertices other than 0 for {subset:?}")]
    MatchingFailed { subset: Vec<usize> },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Algebra(#[from] NilError),
}

/// Hypergraph on vertices `0..n`; each edge is a sorted set of at least two
/// vertices. Repeated edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, HyperError> {
        let mut sorted = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(HyperError::VertexOutOfRange { index, vertex, n });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HyperError::RepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
            if e.len() < 2 {
                return Err(HyperError::EdgeTooSmall {
                    index,
                    size: e.len(),
                });
            }
            sorted.push(e);
        }
        Ok(Self { n, edges: sorted })
    }

    pub fn from_graph(g: &Multigraph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| vec![u.min(v), u.max(v)])
                .collect(),
        }
    }

    /// The graph with the same edges, when every edge has two vertices.
    pub fn to_graph(&self) -> Option<Multigraph> {
        if self.edges.iter().any(|e| e.len() != 2) {
            return None;
        }
        Multigraph::new(self.n, self.edges.iter().map(|e| (e[0], e[1])).collect()).ok()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    pub(crate) fn check_subset(&self, subset: &[usize]) -> Result<Vec<usize>, HyperError> {
        let mut seen = vec![false; self.edges.len()];
        for &index in subset {
            if index >= self.edges.len() {
                return Err(HyperError::NoSuchEdge {
                    index,
                    m: self.edges.len(),
                });
            }
            if std::mem::replace(&mut seen[index], true) {
                return Err(HyperError::DuplicateEdge { index });
            }
        }
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        Ok(sorted)
    }

    pub(crate) fn check_vertices(&self, vertices: &[usize]) -> Result<(), HyperError> {
        match vertices.iter().find(|&&v| v >= self.n) {
            Some(&vertex) => Err(HyperError::NoSuchVertex { vertex, n: self.n }),
            None => Ok(()),
        }
    }
}
