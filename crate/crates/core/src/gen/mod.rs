//! Child generators for the supported graph classes.

mod common;
pub mod bipartite;
pub mod girth;
pub mod line;

pub use bipartite::{BipFlipContext, BipartiteLineGenerator};
pub use girth::{GirthCase, GirthFlipContext, GirthGenerator};
pub use line::{LineFlipContext, LineGenerator};
