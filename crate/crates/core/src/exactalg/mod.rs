//! Exact arithmetic and rank computation.
//!
//! Every Hilbert-series engine in this crate reduces to "what is the rank of
//! this span of integer vectors". Two backends answer that question: a
//! fraction-free integer route that is exact over the rationals, and a
//! prime-field route that is fast and agrees with the exact answer except
//! with negligible probability.

mod echelon;
mod matrix;
mod prime;
mod rank;

pub use echelon::{Echelon, IntegerEchelon, ModularEchelon, RankBackend, SparseRow};
pub use matrix::DenseMatrix;
pub use prime::{is_prime_u64, random_prime, PrimeField, PrimeFieldElement, DEFAULT_PRIME};
pub use rank::{rank_exact, rank_integer, rank_mod_prime, rank_modular, DEFAULT_TRIALS};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
