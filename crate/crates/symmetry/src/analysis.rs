//! One-stop analysis of a single graph: automorphism group, transitivity
//! profile, fixicity, family classification, and all verdicts, computed
//! from a single automorphism-group search.

use crate::{
    classify_family, fixicity_scan, transitivity_profile, verdicts, Classification, FixicityReport,
    FixityVerdict, GeometryVerdict, StabilizerBound, SymmetryError, TransitivityProfile, Valency,
};
use autsearch::automorphism_group;
use graphcore::Graph;
use num_bigint::BigUint;

#[derive(Debug, Clone)]
pub struct Analysis {
    pub n: usize,
    pub valency: Option<usize>,
    pub connected: bool,
    pub aut_order: BigUint,
    pub profile: TransitivityProfile,
    pub fixicity: FixicityReport,
    pub classification: Classification,
    pub verdict_4valent: FixityVerdict,
    pub verdict_3valent: FixityVerdict,
    pub geometry: GeometryVerdict,
    pub stabilizer: StabilizerBound,
}

impl Analysis {
    /// No verdict flagged a counterexample.
    pub fn conforms(&self) -> bool {
        self.verdict_4valent.conforms
            && self.verdict_3valent.conforms
            && self.geometry.conforms
            && self.stabilizer.within
    }
}

/// Full analysis with the element-enumeration cap `cap`.
pub fn analyze(g: &Graph, cap: u64) -> Result<Analysis, SymmetryError> {
    let (aut, _) = automorphism_group(g);
    let profile = transitivity_profile(g, &aut)?;
    let report = fixicity_scan(&aut, cap)?;
    let classification = classify_family(g);
    let verdict_4valent = verdicts::verdict_from_parts(g, &aut, &profile, &report, Valency::Four);
    let verdict_3valent = verdicts::verdict_from_parts(g, &aut, &profile, &report, Valency::Three);
    let geometry = verdicts::geometry_verdict_from_parts(g, &aut, &profile, cap)?;
    let stabilizer = verdicts::stabilizer_bound_from_parts(g, &aut, &profile)?;
    Ok(Analysis {
        n: g.n(),
        valency: g.regular_valency(),
        connected: g.is_connected(),
        aut_order: aut.order().clone(),
        profile,
        fixicity: report,
        classification,
        verdict_4valent,
        verdict_3valent,
        geometry,
        stabilizer,
    })
}
