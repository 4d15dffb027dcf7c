//! Library backing the `fixity` binary: the family-spec grammar, the
//! built-in corpus, per-graph reports, and the subcommand entry points.
//! The binary is a thin clap shell over [`commands`]; keeping the logic
//! here lets integration tests drive every path in-process.

pub mod commands;
pub mod corpus;
pub mod familyspec;
pub mod report;
pub mod scan;

pub use commands::{
    cmd_analyze, cmd_fixicity, cmd_gen, cmd_iso, cmd_quotient, cmd_scan, Format, EXIT_CAPPED,
    EXIT_COUNTEREXAMPLE, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE,
};
pub use corpus::{default_corpus, default_specs, expand, read_census, CorpusEntry};
pub use familyspec::{Built, FamilySpec, SpecError};
pub use report::{report_for, GraphReport, SCHEMA};
pub use scan::{scan, ScanOutcome, ScanSummary};
