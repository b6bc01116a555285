//! Augmented cubes AQ_n and completely independent spanning trees (CISTs)
//! on them: the graph model, spanning trees, the small base families, the
//! lifting step to higher dimensions, an independent verifier, multipath
//! routing and the file formats used by the `aqcist` binary.

pub mod base_families;
pub mod cli;
pub mod error;
pub mod family;
pub mod io;
pub mod lifting;
pub mod routing;
pub mod topology;
pub mod tree;
pub mod verification;

pub use error::{Error, Result};
pub use family::{CistFamily, Provenance};
pub use lifting::{construct_cists, lift_family};
pub use topology::{AugmentedCube, Edge, VertexId};
pub use tree::{SpanningTree, TreePath};
pub use verification::{verify_family, Mode, VerificationReport};
