//! Vertex cover and total domination on trees.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`graph`]: the immutable [`Tree`] model, vertex classifications and
//!   canonical forms;
//! * [`oracle`]: exhaustive subset-search reference implementations;
//! * [`dp`]: linear-time tree dynamic programs for the vertex cover number and
//!   the total domination number;
//! * [`ops`]: the tree-growing operations and the gap-family constructions;
//! * [`family`]: construction certificates, random generation and the
//!   certifying recognizer for trees that own a set which is at once a minimum
//!   vertex cover and a minimum total dominating set;
//! * [`enumerate`]: non-isomorphic free tree enumeration and per-tree claim
//!   checks used by the exhaustive verification harness.
#![no_std]

extern crate alloc;

pub mod dp;
pub mod enumerate;
mod error;
pub mod family;
pub mod graph;
pub mod ops;
pub mod oracle;

pub use error::{Error, Precondition, TreeViolation};
pub use graph::{Path, Tree, VertexSet};

pub type Result<T, E = Error> = core::result::Result<T, E>;
