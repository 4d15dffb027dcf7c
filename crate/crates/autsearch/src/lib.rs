//! Graph automorphism groups, canonical forms, and isomorphism testing
//! via individualization-refinement search over equitable partitions.
//!
//! The search returns exact results: a strong generating set for the
//! full automorphism group (backed by the `perm` crate's stabilizer
//! chains) and a canonical relabelling such that isomorphic graphs map
//! to identical canonical graphs.

pub mod oracle;
pub mod refine;
mod search;

pub use search::{
    are_isomorphic, automorphism_group, canonical_form, search, SearchOutcome, SearchStats,
};
