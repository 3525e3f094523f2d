//! Exact colored Jones polynomials of braid closures.
//!
//! Two independent state models are evaluated over `Z[t^(±1/4)]`: an
//! R-matrix model on part-arc colorings with decreasing over-strand colors,
//! and an arc-graph model on jump potentials with increasing over-strand
//! colors. Their totals agree; the test suite checks this on a corpus.

pub mod braid;
pub mod corpus;
pub mod diagram;
pub mod exec;
pub mod oracle;
pub mod qalgebra;
pub mod search;
pub mod states;
pub mod statesum;
pub mod verify;

pub use braid::BraidWord;
pub use diagram::Diagram;
pub use exec::ExecMode;
pub use qalgebra::LaurentQ;
