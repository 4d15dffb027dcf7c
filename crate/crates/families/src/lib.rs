//! Constructors for every graph family and sporadic graph the toolkit
//! studies: the 4-valent rose-window-style tensor family and its directed
//! form, their 3-valent splits (with merge as the inverse), the `Z_m × Z_3`
//! tensor family, the twelve sporadic graphs, and a shelf of standard
//! families (Kneser, prisms, Möbius ladders, hypercubes, circulants,
//! generalized Petersen).
//!
//! Each constructor fixes a deterministic vertex numbering and carries
//! human-readable labels, so reports and witnesses can be read off directly.

mod dw;
mod error;
mod px;
mod split;
mod sporadic;
mod standard;

pub use dw::{dw, dw_column_swap, dw_orientation};
pub use error::FamilyError;
pub use px::{px_fpr_tau, px_graphs, vec_px, PxBundle};
pub use split::{
    derive_merge_matching, merge_matching, split_action, split_orientation, split_px,
    split_px_graph, Matching, SplitPx,
};
pub use sporadic::{all_sporadics, sporadic, SporadicId};
pub use standard::{
    circulant, complete, complete_bipartite_minus_matching, complete_multipartite,
    generalized_petersen, hypercube, kneser, moebius, prism,
};
