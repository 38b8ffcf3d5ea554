//! Finite-dimensional U_l-modules as graded spaces with explicit generator matrices.

mod hom;
mod module;
mod relations;
mod submodule;
mod tensor;
mod weyl;

pub use hom::{find_invertible, hom_space, intertwiners};
pub use module::{GenMat, GenericAction, Generator, Mat, VertexAction, WeightModule};
pub use relations::{
    commutator_identity_residual, commutator_identity_residual_e_first, generic_commutator_residual,
    generic_divided_power, relation_check, specialize, RelationReport, RelationResult,
};
pub use submodule::{
    composition_factors, homogeneous_weight, maximal_proper_submodule, quotient, simple_module, submodule_closure,
    unit_vector, CompositionFactor, Submodule,
};
pub use tensor::{tensor_product, tensor_product_via, TensorRoute};
pub use weyl::weyl_module;

use thiserror::Error;

use crate::rootdata::{RootDataError, Weight};
use crate::scalars::ScalarError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("seed vector is not a weight vector")]
    NotHomogeneous,
    #[error("weight space of {0} has dimension above one")]
    WeightSpaceNotOneDim(Weight),
    #[error("inconsistent module: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}
