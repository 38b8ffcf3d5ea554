//! The quantum Frobenius pullback, the small quantum group, the factorization of modules
//! with trivial small-quantum-group action, and the maps alpha_V.

mod dualrep;
mod hecke;
mod pullback;

pub use dualrep::{Chevalley, DualGroupElement, DualGroupRep};
pub use hecke::{build_hecke_structure, swap_matrix, HeckeCheck, HeckeStructure};
pub use pullback::{
    class_vectors, factorization_reconstruct, frobenius_pullback, frobenius_sign, lattice_for, restrict_to_small,
    small_invariants, verify_commutator_identity, CommutatorReport, SmallQuantumView,
};

use thiserror::Error;

use crate::repcore::RepError;
use crate::rootdata::Weight;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FrobError {
    #[error("invalid dual representation: {0}")]
    InvalidRep(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("small quantum group acts nontrivially: invariants have dimension {invariant_dim} of {dim}")]
    NotTrivialOnSmall { invariant_dim: usize, dim: usize },
    #[error("weight {0} is not in the image of the Frobenius map")]
    NotInImage(Weight),
    #[error("no Hecke structure: {0}")]
    NoHeckeStructure(String),
    #[error(transparent)]
    Rep(#[from] RepError),
}
