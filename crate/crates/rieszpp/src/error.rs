use crate::exactnum::Rational;
use thiserror::Error;

/// Errors shared by every layer of the library.
///
/// All arithmetic is exact, so an error is never a precision problem; it is
/// either invalid input or a value that genuinely falls outside what the
/// rational-only engine can represent (an irrational crossing point).
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("indeterminate roots: the zero polynomial vanishes everywhere")]
    IndeterminateRoots,

    #[error("invalid range: need lo < hi, got [{lo}, {hi}]")]
    InvalidRange { lo: Rational, hi: Rational },

    #[error("breakpoints and pieces must be nonempty lists of equal length")]
    MismatchedPieces,

    #[error("first breakpoint must be 0, got {got}")]
    FirstBreakpointNotZero { got: Rational },

    #[error("breakpoints not strictly increasing at index {index}")]
    NonMonotoneBreakpoints { index: usize },

    #[error("discontinuity at breakpoint {breakpoint} (index {index}): {left} != {right}")]
    Discontinuity {
        index: usize,
        breakpoint: Rational,
        left: Rational,
        right: Rational,
    },

    #[error("evaluation point {x} is outside the domain [0, oo)")]
    NegativeArgument { x: Rational },

    #[error("irrational crossing in ({lo}, {hi})")]
    IrrationalCrossing { lo: Rational, hi: Rational },

    #[error("not a member of the principal ideal: {reason}")]
    NotInIdeal { reason: String },

    #[error("bound violated: |f({x})| = {value} > {bound} = C*{x}")]
    BoundViolated {
        x: Rational,
        value: Rational,
        bound: Rational,
    },

    #[error("factor outside its principal ideal (term {term}, {side} factor): {reason}")]
    FactorNotInIdeal {
        term: usize,
        side: &'static str,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("missing bimorphism table entry for basis pair ({i}, {j})")]
    MissingTableEntry { i: usize, j: usize },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("{context}: {line}:{column}: {message}")]
    Syntax {
        context: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("binding `{name}`: {source}")]
    Binding {
        name: String,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("type error: {0}")]
    Type(String),
}

pub type Result<T> = std::result::Result<T, Error>;
