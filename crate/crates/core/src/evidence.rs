//! Comparison reports: invariance of the forest algebra under Whitney
//! operations, and evidence on whether tree algebras are determined by
//! bridge-free graphical matroids.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{bridge_free, cycle_space, same_cycle_space, GraphError, Multigraph};
use crate::tutte::{
    forest_hilbert_from_tutte, tree_hilbert_from_tutte, tutte_deletion_contraction, HilbertSeries,
    TutteError,
};

/// Largest bridge-free edge set searched exhaustively for a matroid isomorphism.
pub const MAX_BRUTE_FORCE_EDGES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvidenceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error("graph {0} is disconnected")]
    Disconnected(char),
    #[error("bijection has {got} entries for {expected} bridge-free edges")]
    BijectionLength { expected: usize, got: usize },
    #[error("bijection target {0} is a bridge or not an edge of the second graph")]
    BijectionTarget(usize),
}

fn forest_series(g: &Multigraph) -> Result<HilbertSeries, TutteError> {
    let t = tutte_deletion_contraction(g);
    forest_hilbert_from_tutte(&t, g.edge_count(), g.vertex_count(), g.component_count())
}

fn tree_series(g: &Multigraph) -> Result<HilbertSeries, TutteError> {
    let t = tutte_deletion_contraction(g);
    tree_hilbert_from_tutte(&t, g.edge_count(), g.vertex_count(), g.component_count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhitneyReport {
    /// Cycle spaces agree with edge `i` of one graph matched to edge `i` of the other.
    pub same_cycle_space: bool,
    pub forest_series_before: HilbertSeries,
    pub forest_series_after: HilbertSeries,
    pub forest_series_equal: bool,
}

impl WhitneyReport {
    pub fn invariant(&self) -> bool {
        self.same_cycle_space && self.forest_series_equal
    }
}

/// Compares a graph with the result of a Whitney operation on it. The
/// operations keep edge indices, so edges correspond by index.
pub fn whitney_report(
    before: &Multigraph,
    after: &Multigraph,
) -> Result<WhitneyReport, EvidenceError> {
    let identity: Vec<usize> = (0..before.edge_count()).collect();
    let same = same_cycle_space(before, after, &identity)?;
    let a = forest_series(before)?;
    let b = forest_series(after)?;
    Ok(WhitneyReport {
        same_cycle_space: same,
        forest_series_equal: a == b,
        forest_series_before: a,
        forest_series_after: b,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MatroidComparison {
    /// Edge `i` of the first bridge-free graph maps to edge `bijection[i]`
    /// of the second (indices into the original graphs).
    Isomorphic {
        bijection: Vec<usize>,
    },
    NotIsomorphic {
        reason: String,
    },
    /// Too many edges to search, and the supplied bijection (if any) failed.
    Unknown {
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    /// Isomorphic matroids with equal series, or different series.
    Consistent,
    /// Equal series although the matroids are not isomorphic. This is
    /// evidence against the converse direction, not a proof.
    PotentialCounterexample,
    /// Isomorphic matroids but different series; contradicts the proven
    /// direction, so it points at a bug.
    ForwardDirectionViolation,
    /// Equal series and the matroid comparison was inconclusive.
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// Original indices of the edges that are not bridges.
    pub bridge_free_edges: [Vec<usize>; 2],
    pub matroids: MatroidComparison,
    pub tree_series: [HilbertSeries; 2],
    pub series_equal: bool,
    pub classification: Classification,
}

/// Builds the report for two connected graphs. `bijection`, if given, maps
/// the k-th non-bridge edge of `a` to an original edge index of `b`.
pub fn conjecture_evidence(
    a: &Multigraph,
    b: &Multigraph,
    bijection: Option<&[usize]>,
) -> Result<ConjectureReport, EvidenceError> {
    for (name, g) in [('A', a), ('B', b)] {
        if !g.is_connected() {
            return Err(EvidenceError::Disconnected(name));
        }
    }
    let (fa, keep_a) = bridge_free(a);
    let (fb, keep_b) = bridge_free(b);
    let matroids = compare_matroids(&fa, &fb, &keep_b, bijection)?;
    let tree_series = [tree_series(a)?, tree_series(b)?];
    let series_equal = tree_series[0] == tree_series[1];
    let classification = match (&matroids, series_equal) {
        (MatroidComparison::Isomorphic { .. }, true) => Classification::Consistent,
        (MatroidComparison::Isomorphic { .. }, false) => Classification::ForwardDirectionViolation,
        (_, false) => Classification::Consistent,
        (MatroidComparison::NotIsomorphic { .. }, true) => Classification::PotentialCounterexample,
        (MatroidComparison::Unknown { .. }, true) => Classification::Undetermined,
    };
    Ok(ConjectureReport {
        bridge_free_edges: [keep_a, keep_b],
        matroids,
        tree_series,
        series_equal,
        classification,
    })
}

fn compare_matroids(
    fa: &Multigraph,
    fb: &Multigraph,
    keep_b: &[usize],
    bijection: Option<&[usize]>,
) -> Result<MatroidComparison, EvidenceError> {
    let to_original = |perm: &[usize]| perm.iter().map(|&j| keep_b[j]).collect::<Vec<_>>();
    if fa.edge_count() != fb.edge_count() {
        return Ok(MatroidComparison::NotIsomorphic {
            reason: format!(
                "{} versus {} non-bridge edges",
                fa.edge_count(),
                fb.edge_count()
            ),
        });
    }
    let (ra, rb) = (cycle_space(fa).rank(), cycle_space(fb).rank());
    if ra != rb {
        return Ok(MatroidComparison::NotIsomorphic {
            reason: format!("cycle spaces of dimension {ra} versus {rb}"),
        });
    }
    if let Some(map) = bijection {
        if map.len() != fa.edge_count() {
            return Err(EvidenceError::BijectionLength {
                expected: fa.edge_count(),
                got: map.len(),
            });
        }
        let local = map
            .iter()
            .map(|&j| {
                keep_b
                    .iter()
                    .position(|&k| k == j)
                    .ok_or(EvidenceError::BijectionTarget(j))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if same_cycle_space(fa, fb, &local)? {
            return Ok(MatroidComparison::Isomorphic {
                bijection: map.to_vec(),
            });
        }
    }
    if fa.edge_count() > MAX_BRUTE_FORCE_EDGES {
        return Ok(MatroidComparison::Unknown {
            reason: format!(
                "{} non-bridge edges exceed the exhaustive search limit of {MAX_BRUTE_FORCE_EDGES}",
                fa.edge_count()
            ),
        });
    }
    let target = cycle_space(fb);
    let source = cycle_space(fa);
    let mut perm: Vec<usize> = (0..fa.edge_count()).collect();
    loop {
        if source.relabel_columns(&perm).same_row_space(&target) {
            return Ok(MatroidComparison::Isomorphic {
                bijection: to_original(&perm),
            });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(MatroidComparison::NotIsomorphic {
        reason: "no edge bijection matches the cycle spaces".into(),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("suffix has a larger entry");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// `g` with a new vertex joined to `v` by one edge.
pub fn add_pendant(g: &Multigraph, v: usize) -> Result<Multigraph, GraphError> {
    let mut edges = g.edges().to_vec();
    edges.push((v, g.vertex_count()));
    Multigraph::new(g.vertex_count() + 1, edges)
}
