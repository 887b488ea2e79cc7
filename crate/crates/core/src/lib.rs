//! Deciders for well-covered graphs, the `W_p` classes and alpha-critical
//! graphs, with the complement-side saturation view and exhaustive
//! cross-validation over labeled-graph catalogs.
//!
//! The main entry points:
//!
//! * [`independence::profile`] — facets, independence number, ridges and fibers.
//! * [`wp`] — three `W_p` deciders, the W-index, alpha-criticality and the
//!   four-condition [`wp::TheoremReport`].
//! * [`saturation`] — `K_t`-saturation, clique codegrees and the
//!   complement-side bounds.
//! * [`scan`] and [`verify`] — catalog scans and the acceptance suites.

pub mod analysis;
pub mod catalog;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod saturation;
pub mod scan;
pub mod verify;
pub mod vertex_set;
pub mod wp;

pub use error::{FamilyError, Graph6Error, GraphError, IndependenceError, SaturationError, WpError};
pub use graph::{Edge, Graph, Localized, Partitioned, Subgraph};
pub use vertex_set::{VertexSet, MAX_VERTICES};
