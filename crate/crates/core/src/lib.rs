//! Binary matroids over GF(2) and the splitting operation `M_{x,y}`.
//!
//! The crate covers GF(2) linear algebra, the matroid value type with
//! duality and minors, splitting of matroids and graphs, a catalog of the
//! small matroids that appear as excluded minors, forbidden-minor
//! recognition of regular, graphic and cographic matroids, and decision
//! procedures for the classes whose splittings stay graphic or cographic.

pub mod catalog;
pub mod corpus;
pub mod error;
pub mod gf2;
pub mod graph;
mod iso;
pub mod matroid;
mod realization;
pub mod recognition;
pub mod splitting;
pub mod theorems;
pub mod verify;
mod vectors;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, StandardForm};
pub use graph::{Edge, Multigraph};
pub use matroid::{BinaryMatroid, CircuitKind, ElementLabel, MinorSpec};
pub use splitting::{split, split_graph, SplitPair};
pub use recognition::{classify, has_minor, has_tilde_minor, ClassificationFlags, Limits, MinorWitness, Property};
pub use theorems::{decide_by_forbidden_minors, oracle_all_splits, verify_minimality, CaseId, DecisionReport, TheoremCase};
