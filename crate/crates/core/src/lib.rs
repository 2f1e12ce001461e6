//! Broadcast domination and boundary independence on small connected graphs.

pub mod broadcast;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod solver;

pub use broadcast::{Broadcast, ParameterKind};
pub use constructions::{build, CertificateName, CertificateSpec};
pub use error::{Error, Result};
pub use families::{generate, FamilySpec};
pub use graph::{distances, DistanceMatrix, Graph};
pub use solver::{bounds, enumerate_optimal, solve, ParameterResult, SolveOptions};
