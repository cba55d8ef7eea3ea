//! Error types shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors from graph construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    EmptyParts,
    ZeroPartSize,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for n={n}")
            }
            GraphError::EmptyParts => write!(f, "part list must be nonempty"),
            GraphError::ZeroPartSize => write!(f, "all part sizes must be positive"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Errors from pattern-parameterized operations (singular search, WORM checks).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternError {
    /// The pattern has fewer vertices than the operation requires.
    TooFewVertices { required: usize, got: usize },
    /// A coloring does not cover exactly the host vertex set.
    ColoringSizeMismatch { expected: usize, got: usize },
    /// Automorphism counting is brute-force and capped.
    PatternTooLarge { n: usize, limit: usize },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::TooFewVertices { required, got } => {
                write!(
                    f,
                    "pattern must have at least {required} vertices, got {got}"
                )
            }
            PatternError::ColoringSizeMismatch { expected, got } => {
                write!(f, "coloring covers {got} vertices, host has {expected}")
            }
            PatternError::PatternTooLarge { n, limit } => {
                write!(
                    f,
                    "pattern on {n} vertices exceeds the supported limit {limit}"
                )
            }
        }
    }
}

impl core::error::Error for PatternError {}

/// Canonical labeling is limited to the single-word bitset range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonError {
    TooManyVertices { n: usize, limit: usize },
}

impl fmt::Display for CanonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonError::TooManyVertices { n, limit } => {
                write!(
                    f,
                    "canonical labeling supports up to {limit} vertices, got {n}"
                )
            }
        }
    }
}

impl core::error::Error for CanonError {}

/// Errors from the extremal-graph constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    /// A parameter is outside the constructor's domain of definition.
    InvalidArgument(String),
    /// The parameters are syntactically fine but no such graph exists.
    Domain(String),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            ConstructionError::Domain(msg) => write!(f, "domain error: {msg}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

/// Errors from closed-form evaluators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaError {
    Domain(String),
    InvalidArgument(String),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::Domain(msg) => write!(f, "domain error: {msg}"),
            FormulaError::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for FormulaError {}

/// Errors from the exact solvers and the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// The request exceeds an explicit cost guard; the message says what to do.
    CostGuard(String),
    Pattern(PatternError),
    Canon(CanonError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::CostGuard(msg) => write!(f, "cost guard: {msg}"),
            SolveError::Pattern(e) => write!(f, "{e}"),
            SolveError::Canon(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SolveError {}

impl From<PatternError> for SolveError {
    fn from(e: PatternError) -> Self {
        SolveError::Pattern(e)
    }
}

impl From<CanonError> for SolveError {
    fn from(e: CanonError) -> Self {
        SolveError::Canon(e)
    }
}
