//! Exact computation over k-sum **b**-free subsets of integer lattice boxes.
//!
//! A subset `S` of the box `[n] = [n_1] x ... x [n_d]` is *k-sum b-free* when no
//! multiset of `k` members of `S` sums coordinate-wise to the target `b`. This
//! crate provides the lattice primitives and witness search ([`lattice`]), the
//! known extremal constructions ([`constructions`]), exact solvers for the
//! maximum free-set size together with free-set counting ([`solver`]), and
//! exact-rational evaluators for the closed-form densities and bounds
//! ([`bounds`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod constructions;
mod error;
pub mod hypergraph;
pub mod lattice;
pub mod solver;

pub use error::{Error, Result};
pub use hypergraph::{enumerate_forbidden, ForbiddenHypergraph};
pub use lattice::{
    find_witness, is_free, min_max_coord, Instance, LatticeBox, LatticePoint, PointSet, Witness,
};
pub use solver::{Exactness, Method, SolveResult};
