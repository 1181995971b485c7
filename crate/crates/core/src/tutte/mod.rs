//! Tutte polynomials by three independent routes, their specializations to
//! Hilbert series, the clone identity, and recovery of the Tutte polynomial
//! from a t-labelled forest series.

mod deletion_contraction;
pub mod io;
mod poly;
mod reconstruct;
mod series;
mod subsets;
mod tlabel;

use thiserror::Error;

use crate::graphs::GraphError;

pub use deletion_contraction::tutte_deletion_contraction;
pub use poly::{BivariatePolynomial, UnivariatePolynomial};
pub use reconstruct::{reconstruct_tutte, star_polynomial};
pub use series::{
    forest_hilbert_from_rank, forest_hilbert_from_tutte, tree_hilbert_from_tutte, HilbertSeries,
};
pub use subsets::{tutte_activity, tutte_corank_nullity};
pub use tlabel::{clone_tutte_identity_check, clone_tutte_sides, tlabel_hilbert};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TutteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("ground set of {size} exceeds the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("rank function is not a matroid rank: r({subset:#b}) is inconsistent")]
    InvalidRank { subset: u64 },
    #[error("specialization is not a polynomial: y-degree {y_degree} exceeds e - rank")]
    NonPolynomial { y_degree: u32 },
    #[error("specialization has a negative coefficient in degree {degree}")]
    NegativeCoefficient { degree: usize },
    #[error("coefficient does not fit in 64 bits")]
    Overflow,
    #[error("vertex, edge and component counts are inconsistent")]
    InconsistentCounts,
    #[error("sample point {0} is a pole of the clone identity")]
    DegenerateSample(String),
    #[error("t must be at least 1")]
    ZeroLabels,
    #[error("cannot reconstruct: {0}")]
    Reconstruction(String),
}
