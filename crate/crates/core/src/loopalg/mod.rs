//! Exact graded algebras given by structure constants.
//!
//! A [`GradedBasisAlgebra`] plays the role of the loop homology ring of a
//! closed manifold, graded so that the fundamental class sits in degree 0.
//! Besides the product table it records the unit, the Euler characteristic
//! of the manifold and, when known, the class of the constant loop at the
//! base point. Those last two data determine the base coproduct.

mod algebra;
mod element;
mod models;
mod presentation;
mod scalar;

use thiserror::Error;

pub use algebra::{BasisElement, GradedBasisAlgebra, MAX_BASIS};
pub use element::{AlgebraElement, TensorElement};
pub use presentation::{load_presentation, parse_presentation, Presentation, PresentationBasis};
pub use scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("unknown scalar field {0:?} (expected \"Q\" or \"Fp:<p>\")")]
    BadField(String),
    #[error("cannot parse coefficient {0:?}")]
    BadCoefficient(String),
    #[error("product {left} * {right} leaves the model window")]
    WindowOverflow { left: String, right: String },
    #[error("window must be at least 1")]
    InvalidWindow,
    #[error("algebra has an empty basis")]
    EmptyBasis,
    #[error("basis of size {0} exceeds the supported maximum {MAX_BASIS}")]
    TooLarge(usize),
    #[error("{what} index {index} is out of range")]
    IndexOutOfRange { what: &'static str, index: usize },
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("unit law fails at basis element {0}")]
    UnitLaw(String),
    #[error("associativity fails at ({0}, {1}, {2})")]
    Associativity(String, String, String),
    #[error("degree additivity fails for {0} * {1}")]
    DegreeMismatch(String, String),
    #[error("graded commutativity fails for {0} * {1}")]
    Commutativity(String, String),
    #[error("coproduct needs a point class: Euler characteristic is nonzero in the field")]
    PointClassRequired,
    #[error("unknown basis element {0:?}")]
    UnknownBasis(String),
    #[error("cannot parse algebra element {0:?}")]
    ElementParse(String),
    #[error("candidate set not closed: product of candidates {0} and {1} is outside the set")]
    NotClosed(usize, usize),
    #[error("candidate set does not contain the unit")]
    MissingUnit,
    #[error("candidate {0} has no inverse in the set")]
    NoInverse(usize),
    #[error("candidates {0} and {1} are equal")]
    DuplicateCandidate(usize, usize),
    #[error("algebra has products outside its window and cannot be written as a presentation")]
    NotPresentable,
    #[error("invalid presentation: {0}")]
    Presentation(String),
}
