use thiserror::Error;

/// Structural reasons a graph is rejected by one of the enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Unsupported {
    /// Induced K_{1,3}; the center comes first.
    #[error("graph contains an induced claw (center {}, leaves {}, {}, {})", .0[0] + 1, .0[1] + 1, .0[2] + 1, .0[3] + 1)]
    Claw([usize; 4]),
    /// Induced K_4 minus an edge; the first two vertices span the shared edge.
    #[error("graph contains an induced diamond on {}, {}, {}, {}", .0[0] + 1, .0[1] + 1, .0[2] + 1, .0[3] + 1)]
    Diamond([usize; 4]),
    #[error("graph has girth {girth}, at least 7 is required")]
    Girth { girth: usize },
    #[error("root graph has no edges")]
    Edgeless,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("structural invariant violated: {0}")]
    Invariant(String),
    #[error("unsupported input: {0}")]
    Unsupported(#[from] Unsupported),
    #[error("oracle refuses instances of size {size}, the cap is {cap}")]
    OracleCap { size: usize, cap: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
