//! Cocycle-twisted algebras `H ⊗_c k[G]`, the maps between them induced by
//! 1-cochains, and the checks built on top: invariant parts, nearly
//! Frobenius axioms and splitting verdicts.

mod element;
mod fxi;
mod invariant;
mod tqft;
mod twisted;
mod verdict;

use thiserror::Error;

use crate::abelian::AbelianError;
use crate::cohomology::CohomologyError;
use crate::loopalg::AlgebraError;

pub use element::{TwistedBasis, TwistedElement, TwistedTensor, TwistedTensor3};
pub use fxi::{FXiMap, MapCheck};
pub use invariant::{invariant_part, InvariantPart};
pub use tqft::{check_tqft, AxiomCheck, DegreeWindow, TqftReport};
pub use twisted::{ProductTable, TwistedAlgebra};
pub use verdict::{splitting_verdict, SplittingReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("the unit embedding targets a different algebra")]
    EmbeddingTarget,
    #[error("the cocycle lives over a different group")]
    GroupMismatch,
    #[error("the cocycle's coefficients differ from the embedding's domain")]
    CoeffMismatch,
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    NotCocycle(usize, usize, usize),
    #[error("cocycle changes under conjugation by {0} at ({1}, {2})")]
    NotConjugationInvariant(usize, usize, usize),
    #[error("the two twisted algebras do not share base, group and embedding")]
    DifferentData,
    #[error("c({g}, {h}) differs from c'({g}, {h}) + dξ({g}, {h})")]
    CocycleRelation { g: usize, h: usize },
    #[error("the invariant part is not closed: {0}")]
    NotClosed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
