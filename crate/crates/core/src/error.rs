use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    #[error("not a bipartite characteristic polynomial: {0}")]
    NotBipartitePolynomial(String),

    #[error("vertex counts differ after padding: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error(
        "matching count by subset scan is an oracle only (m = {0} > 20 and graph is not a forest)"
    )]
    OracleOnly(usize),

    #[error(
        "tree enumeration is capped at n = {cap} (requested {n}); use random sampling instead"
    )]
    EnumerationCap { n: usize, cap: usize },

    #[error(
        "jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("quadrature tolerance {tol:e} not met within {evaluations} evaluations (estimated error {estimate:e})")]
    Quadrature {
        tol: f64,
        estimate: f64,
        evaluations: usize,
    },

    #[error("psi vanishes at z = {0}; coefficients are corrupted")]
    PsiVanishes(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
