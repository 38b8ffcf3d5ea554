//! Exact computations for quantum groups at roots of unity: cyclotomic scalars,
//! root data and linkage, explicit modules with divided powers, the quantum
//! Frobenius, finite Hopf triples and block decompositions.

pub mod blocks;
pub mod cli;
pub mod frobenius;
pub mod hopfcore;
pub mod linalg;
pub mod repcore;
pub mod rootdata;
pub mod scalars;
