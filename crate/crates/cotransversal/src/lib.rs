//! Cotransversal matroids presented by planted graphs.
//!
//! A *planted graph* is a finite directed graph with a distinguished set
//! of sinks.  Its bases are the vertex sets that can be routed to the
//! sinks along vertex-disjoint paths; the sets of bases arising this way
//! are exactly the cotransversal matroids.  This crate computes with such
//! presentations:
//!
//! - routing, rank, basis enumeration, and loops ([`planted`]);
//! - the swap move relating presentations of one matroid ([`planted`]);
//! - the duality with transversal presentations and systems of distinct
//!   representatives ([`transversal`]);
//! - saturation, which grows any presentation to the unique maximal one
//!   ([`saturation`]);
//! - the decision procedure for "do these graphs present the same
//!   matroid?", with an explicit swap path as witness ([`equivalence`]);
//! - a brute-force matroid oracle for cross-checking ([`oracle`]);
//! - JSON/DOT input and output ([`io`]) and seeded random instances
//!   ([`gen`]).

pub mod equivalence;
pub mod error;
pub mod gen;
pub mod io;
pub mod oracle;
pub mod planted;
pub mod saturation;
pub mod transversal;

#[cfg(test)]
#[allow(dead_code)]
pub(crate) mod testdata;

pub use equivalence::{SwapGraph, SwapSequence};
pub use error::{Error, Result};
pub use oracle::BasisSet;
pub use planted::{PlantedGraph, Routing, VertexId, DEFAULT_SIZE_LIMIT};
pub use transversal::{Sdr, TransversalPresentation};
