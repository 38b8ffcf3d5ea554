//! Linkage classes: the combinatorial prediction by affine Weyl group dot orbits, the
//! observed linkage through composition factors of Weyl modules, the Steinberg tensor
//! product check, and block correspondences for finite triples.

mod finite;
mod graph;
mod linkage;
mod steinberg;

pub use finite::{finite_block_bijection, BlockBijectionReport, ClauseFailure};
pub use graph::LinkageGraph;
pub use linkage::{
    chain_components, compare_linkage, linkage_partner, observed_blocks_a1, predicted_blocks, BlockComparison,
    BlockEntry, BlockTable, LinkageComparison,
};
pub use steinberg::{steinberg_verify, SteinbergReport};

use thiserror::Error;

use crate::frobenius::FrobError;
use crate::hopfcore::HopfError;
use crate::repcore::RepError;
use crate::rootdata::RootDataError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BlockError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Frob(#[from] FrobError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}
