//! Permutations on `{0, .., n-1}` and permutation groups with stabiliser
//! chains (Schreier–Sims), plus the fixed-point-ratio identities used by the
//! symmetry checks downstream.
//!
//! Conventions, fixed throughout the workspace:
//! - points are `usize`, actions are on the right: `v^g = g.apply(v)`,
//!   and `compose(p, q)` means "apply `p` first, then `q`".
//! - fixed-point ratios are exact rationals (`Fpr = Ratio<u64>`).
//! - group orders are exact `BigUint`s (products of orbit lengths).

mod error;
mod group;
mod identities;
mod permutation;

pub use error::PermError;
pub use group::{ConjClass, Elements, PermGroup};
pub use identities::{lemma1_check, suborbit_fpr_identity, Lemma1Outcome};
pub use permutation::Permutation;

use num_rational::Ratio;

/// Exact fixed-point ratio. Always reduced; `Fpr::new(f, n)` panics on n = 0.
pub type Fpr = Ratio<u64>;

/// `1/3`, the threshold that all the fixed-point scans compare against.
pub fn one_third() -> Fpr {
    Fpr::new(1, 3)
}
