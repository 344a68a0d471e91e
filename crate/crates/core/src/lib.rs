//! Enumeration of minimal dominating sets by flipping.
//!
//! Maximal independent sets seed a depth-first search over a parent/child
//! relation between minimal dominating sets; class-specific generators
//! produce the children. Supported classes are line graphs, line graphs of
//! bipartite graphs and graphs of girth at least 7. Minimal edge dominating
//! sets are enumerated through the line graph.
//!
//! Vertices are `0..n` throughout the library; the edge-list reader and the
//! `Display` impls translate to one-based labels.

pub mod domination;
pub mod edge_dom;
mod error;
pub mod flip;
pub mod gen;
pub mod graph;
pub mod io;
pub mod mis;
pub mod oracle;
mod vertex_set;

pub use error::{Error, Result, Unsupported};
pub use graph::{Girth, Graph};
pub use vertex_set::VertexSet;
