//! Finite T0 spaces, represented as posets through their Hasse diagrams.
//!
//! The crate builds the asymmetric two-level blocks `F_k`, colored Cayley
//! graphs of finite groups, and the block-assembled space `X(G, S)` whose
//! automorphism group (equivalently, its group of homotopy classes of
//! self-homotopy equivalences, since the space is minimal) is `G`. An
//! individualization-refinement engine computes automorphism groups so every
//! claim can be checked mechanically.

#![forbid(unsafe_code)]

pub mod asym;
pub mod aut;
pub mod blocks;
pub mod cli;
pub mod digraph;
pub mod dot;
mod error;
pub mod group;
pub mod perm;
pub mod poset;

pub use asym::{build_f, family_checks, BlockSpec, FamilyReport};
pub use aut::{
    automorphisms, automorphisms_seeded, brute_force_automorphisms, hasse_automorphisms,
    hasse_digraph, refine, verify_realization, AutGroup, Refinement, VerificationReport,
};
pub use blocks::{assemble, block_replace, build_realization, BlockPlan, BlockRole, RealizationSpace};
pub use digraph::ColoredDigraph;
pub use error::{Error, Result};
pub use group::{cayley_graph, right_translation, FiniteGroup};
pub use perm::Permutation;
pub use poset::{BeatReport, Poset};
