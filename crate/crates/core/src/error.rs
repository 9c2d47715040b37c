use thiserror::Error;

/// Precondition and numerical failures raised by the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node vector must hold at least one node")]
    EmptyNodes,
    #[error("F and G are written against different node vectors")]
    NodeMismatch,
    #[error("degree of G ({m}) exceeds degree of F ({n})")]
    DegreeOrder { n: usize, m: usize },
    #[error("F must have degree exactly {expected} with a nonzero leading coefficient")]
    LeadingCoefficient { expected: usize },
    #[error("polynomial of degree {degree} does not fit a basis with {nodes} nodes")]
    BasisCapacity { degree: usize, nodes: usize },
    #[error("instance requires 1 <= m <= n, got n = {n}, m = {m}")]
    InstanceDegrees { n: usize, m: usize },
    #[error("matrix dimensions do not match: {0}")]
    Dimension(&'static str),
    #[error("matrix is singular")]
    Singular,
    #[error("operation requires an exact field")]
    InexactField,
}
