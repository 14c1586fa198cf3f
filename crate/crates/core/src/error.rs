use thiserror::Error;

use crate::complex::MAX_VERTICES;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("vertex set has {0} labels; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("vertex set mismatch: expected {{{expected}}}, found {{{found}}}")]
    VertexSetMismatch { expected: String, found: String },
    #[error("vertex sets are not disjoint: {0:?} occurs in both")]
    NotDisjoint(String),
    #[error("{what} needs {size} elements but is limited to {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("map does not assign an image to {0:?}")]
    NonTotalMap(String),
    #[error("map assigns {0:?} twice")]
    DuplicateAssignment(String),
    #[error("map is not surjective")]
    NotSurjective,
    #[error("map is not injective")]
    NotInjective,
    #[error("map is not a section of the given surjection")]
    NotASection,
    #[error("maps do not compose: codomain {{{codomain}}} differs from domain {{{domain}}}")]
    NotComposable { codomain: String, domain: String },
    #[error("functor `{0}` is not supported here")]
    UnsupportedKind(&'static str),
    #[error("morphisms do not compose: {0}")]
    MorphismMismatch(String),
    #[error("{0} disagrees with its adjoint reformulation")]
    AdjointDisagreement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
