//! Truncated commutative algebras on edge variables, the subalgebras their
//! vertex linear forms generate, and quotients of polynomial rings by powers
//! of linear forms. Both presentations of each forest/tree algebra reduce to
//! ranks of graded components.

mod algebra;
mod forms;
mod quotient;
mod span;
mod subalgebra;

use thiserror::Error;

use crate::exactalg::{PrimeField, RankBackend, DEFAULT_PRIME};
use crate::graphs::GraphError;

pub use algebra::{AlgebraElement, TruncatedAlgebra};
pub use forms::{graph_linear_forms, vector_configuration_forms, LinearFormFamily};
pub use quotient::{
    boundary_degree, graph_quotient_generators, graph_tree_generators, quotient_hilbert,
    quotient_hilbert_with, QuotientGenerator,
};
pub use subalgebra::{subalgebra_hilbert, subalgebra_hilbert_with};

/// Exponent vector of a monomial.
pub type Exponents = Box<[u16]>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NilError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cap must be between 1 and {}, got {0}", u16::MAX)]
    InvalidCap(u32),
    #[error("forbidden supports need at most 64 variables, got {0}")]
    TooManyVariables(usize),
    #[error("elements live in different algebras")]
    HostMismatch,
    #[error("exponent vector has {got} entries, algebra has {expected} variables")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("linear forms have {got} columns, algebra has {expected} variables")]
    FormMismatch { expected: usize, got: usize },
    #[error("generator {index} has power 0")]
    ZeroPower { index: usize },
    #[error(
        "degree {degree} component needs {columns} columns, over the budget of {budget}; \
         raise PSALG_BUDGET=basis=N to allow it"
    )]
    Budget {
        degree: usize,
        columns: usize,
        budget: usize,
    },
    #[error("quotient is not finite-dimensional: degree {degree} is still nonzero")]
    NotArtinian { degree: usize },
    #[error("dimension does not fit in 64 bits")]
    Overflow,
    #[error("the tree algebra needs a connected graph")]
    Disconnected,
    #[error("{0}")]
    Invalid(String),
}

/// How graded components are ranked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RankPolicy {
    /// Exact up to the process-wide threshold, modular beyond it.
    #[default]
    Auto,
    Exact,
    Modular(PrimeField),
}

impl RankPolicy {
    fn backend(self, columns: usize, exact_threshold: usize) -> RankBackend {
        match self {
            RankPolicy::Exact => RankBackend::Exact,
            RankPolicy::Modular(f) => RankBackend::Modular(f),
            RankPolicy::Auto if columns > exact_threshold => {
                RankBackend::Modular(PrimeField::new(DEFAULT_PRIME).expect("default prime"))
            }
            RankPolicy::Auto => RankBackend::Exact,
        }
    }
}
