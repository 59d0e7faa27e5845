//! Irregularising walks of graphs.
//!
//! Adding the edges of a walk `W` to a graph `G` (with multiplicity) gives
//! the multigraph `G + W`. The walk is irregularising when `G + W` is locally
//! irregular, i.e. adjacent vertices of `G` end up with distinct degrees.

pub mod closedform;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod io;
pub mod treedp;
pub mod walkops;

pub use error::{Error, Result};
pub use exact::{ExactResult, ExactValue};
pub use graph::{degree_profile, multiset_profile, validate_walk, DegreeProfile, EdgeMultiset, Graph, Walk};
pub use walkops::{check_irregularising, is_irregularising, ConflictReport, NormalForm};
