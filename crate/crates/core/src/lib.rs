//! Forest and tree algebras of graphs, vector configurations and
//! hypergraphs: exact Hilbert series in both presentations, Tutte
//! polynomials, t-labelled cloning and reconstruction, Whitney operations,
//! and the hypergraphical matroid.

pub mod corpus;
pub mod evidence;
pub mod exactalg;
pub mod graphs;
pub mod hypergraphs;
pub mod limits;
pub mod nilalg;
pub mod tutte;

mod error;

pub use error::ParseError;
