use thiserror::Error;

/// Errors surfaced by the numeric kernel and the model constructors.
#[derive(Debug, Error)]
pub enum Error {
    /// An iterative solver hit its iteration cap; the input is likely
    /// ill-conditioned.
    #[error("no convergence after {0} iterations")]
    NonConvergence(u32),

    /// A matrix operation received a non-square matrix.
    #[error("matrix must be square, got {rows}x{cols}")]
    Dimension { rows: usize, cols: usize },

    /// Eigenproblems are supported up to dimension 64 (desk scale).
    #[error("matrix dimension {0} exceeds the supported cap of 64")]
    TooLarge(usize),

    /// Root finding needs a polynomial of degree at least one.
    #[error("polynomial must have degree >= 1")]
    DegreeTooSmall,

    /// The supplied basis is numerically rank-deficient.
    #[error("basis is numerically rank-deficient")]
    SingularBasis,

    /// A spectrum was requested from a FAILED certificate.
    #[error("operator is not certified (verdict FAILED)")]
    NotCertified,

    /// The hyperbolic parameter solver degenerates when N = n: the kernel
    /// vector collapses and the off-diagonal coupling is unconstrained.
    #[error("degenerate kernel: N = n leaves the coupling unconstrained")]
    DegenerateKernel,

    /// A parameter solver hit a division by zero.
    #[error("division by zero while solving constraints: {0}")]
    DivisionByZero(&'static str),

    /// The requested wavefunction type is only defined for the
    /// `sinxcosx` off-diagonal coupling.
    #[error("unsupported combination of wavefunction type and off-diagonal form")]
    UnsupportedCombination,

    /// An operator JSON document failed validation.
    #[error("invalid operator document: {0}")]
    InvalidOperator(String),
}
