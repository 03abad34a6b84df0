//! Exact arithmetic for transition matrices of cyclic vertex maps on trees.
//!
//! A tree `T` with `n + 1` labeled vertices and a cyclic permutation `f` of
//! its vertices induce a linear map on the `n`-dimensional space of signed
//! edge combinations: each edge goes to the signed path between the images
//! of its endpoints. This crate builds those matrices (oriented and
//! unoriented), computes characteristic polynomials, determinants and
//! invariant factors exactly, and checks the structural identities they
//! satisfy across whole families of instances.

pub mod algebra;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod figures;
pub mod parse;
pub mod report;
pub mod sampling;
pub mod sweep;
pub mod theorems;
pub mod tree;

pub use error::{Error, Result};
