//! Exact-arithmetic models of type-A crystals.
//!
//! The crate implements, over plain integers, the standard combinatorial
//! models for the crystals of the quantum group of `sl(n+1)`:
//!
//! * semistandard Young tableaux and their reverse variants ([`ssyt`],
//!   [`reverse`]),
//! * marginally large tableaux and reverse marginally large tableaux
//!   ([`mlt`], [`reverse`]),
//! * lattice points of the polyhedral models cut out by explicit linear
//!   inequalities ([`polyhedral`]),
//! * Gelfand-Tsetlin patterns ([`gt`]),
//!
//! together with the bijections between the models, the evacuation and
//! mirror involutions, the highest-weight embedding into the tensor with a
//! one-point crystal, and Lusztig-data extraction ([`bridges`]). A small
//! graph engine ([`graph`]) materializes crystal graphs, checks the crystal
//! axioms on them, and decides rooted color-preserving isomorphism.
//!
//! Everything is pure and immutable; no floating point is used anywhere.

pub mod bridges;
pub mod cartan;
pub mod crystal;
pub mod graph;
pub mod gt;
pub mod mlt;
pub mod polyhedral;
pub mod reverse;
pub mod ssyt;

mod error;

pub use cartan::{DominantPartition, Rank, Weight};
pub use crystal::{Crystal, ElementStats, RLambdaCrystal, RPoint, TensorCrystal};
pub use error::Error;
pub use graph::{CrystalGraph, GraphNode};
pub use gt::GtPattern;
pub use mlt::Mlt;
pub use polyhedral::PolyVector;
pub use reverse::{Rmlt, Rssyt};
pub use ssyt::{SkewTableau, Ssyt};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
