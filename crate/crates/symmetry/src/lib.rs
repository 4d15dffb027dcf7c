//! Symmetry analysis for the vertex-transitive graph families in this
//! workspace: transitivity profiles, fixicity scans with witnesses,
//! normal quotients, family recognition, and the desk-scale verdicts
//! that mechanically check the classification statements.

mod analysis;
mod classify;
mod error;
mod fixicity;
mod profile;
mod quotient;
pub mod verdicts;

pub use analysis::{analyze, Analysis};
pub use classify::{classify_family, Classification};
pub use error::SymmetryError;
pub use fixicity::{fixicity_scan, fixicity_scan_full, FixicityReport};
pub use profile::{orientation_digraph, transitivity_profile, TransitivityProfile};
pub use quotient::{induced_on_blocks, normal_quotient, quotient_fpr_check};
pub use verdicts::{
    fixity_verdict_3valent, fixity_verdict_4valent, geometry_verdict, stabilizer_bound_check,
    FixityVerdict, GeometryVerdict, StabilizerBound, Valency,
};
