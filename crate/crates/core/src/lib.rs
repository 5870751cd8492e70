//! Secure connected domination in graphs: certifiers, exact oracles, the
//! `(Δ+1)` approximation, chain graphs and hardness gadgets.

pub mod approx;
pub mod certify;
pub mod chain;
pub mod classes;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod vertex_set;

pub use error::{Error, Result};
pub use exact::{ExactResult, ExactSolver, SetCoverInstance};
pub use graph::{Bipartition, Graph};
pub use reductions::ReductionArtifact;
pub use vertex_set::VertexSet;
