//! Finite-dimensional (O, A, a) triples: coalgebras, comodules, induction and restriction,
//! the category of O-modules with compatible A-coaction, and the adjunction between it and
//! a-comodules.

mod algebra;
mod conditions;
mod equivalence;
mod functors;
mod group;
mod simples;
mod triple;

pub use algebra::{comodule_homs, is_comodule_map, CoalgebraFD, ComoduleFD, HopfAlgebraFD, Side};
pub use conditions::{
    big_invariants, check_conditions, condition_i, condition_ii, condition_iii, exactness_witness, freeness_search,
    small_simples, verify_ideal_prop, ConditionReport, ExactnessWitness, Flatness, IdealReport,
};
pub use equivalence::{
    equivariant_reconstruct, identity_point, is_point, point_product, standard_catalog, twist_coherence,
    twist_object, verify_equivalence, AdjunctionEntry, Catalog, EquivalenceReport, EquivariantObject,
};
pub use functors::{
    adjunction_counit, adjunction_hom_dims, adjunction_unit, augmentation_image, comodule_quotient, cotensor, induce,
    induce_map, psi, CounitMap, Induced, Psi, UnitMap,
};
pub use group::{
    absolute_triple, degenerate_triple, finite_group_triple, function_algebra, ground_hopf, shrunk_triple, GroupTable,
};
pub use simples::{isomorphic, multiplicity, simple_comodules};
pub use triple::{is_object_map, object_homs, objects_isomorphic, TripleFD, TripleObject};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("axiom fails: {0}")]
    Axiom(String),
    #[error("not a comodule: {0}")]
    NotComodule(String),
    #[error("not an object of the category: {0}")]
    NotObject(String),
    #[error("invalid group table: {0}")]
    Group(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("condition violated: {0}")]
    ConditionViolated(String),
    #[error("functional is not an algebra map O -> C")]
    NotAPoint,
    #[error("incompatible equivariance data: {0}")]
    Incompatible(String),
    #[error("decomposition failed: {0}")]
    Decomposition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
