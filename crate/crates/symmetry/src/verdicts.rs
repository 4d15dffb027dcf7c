//! Desk-scale verification of the classification statements: graphs of
//! valency 3 or 4 whose fixicity exceeds a third of the vertices must be
//! one of the known families, high-fpr elements fixing no edge pointwise
//! force very specific graphs, and vertex stabilizers of (2-)arc-
//! transitive graphs obey absolute bounds.

use crate::{
    classify_family, fixicity_scan, transitivity_profile, Classification, FixicityReport,
    SymmetryError, TransitivityProfile,
};
use autsearch::automorphism_group;
use families::SporadicId;
use graphcore::Graph;
use num_bigint::BigUint;
use perm::{one_third, PermGroup};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Valency {
    Three,
    Four,
}

impl Valency {
    fn as_usize(self) -> usize {
        match self {
            Valency::Three => 3,
            Valency::Four => 4,
        }
    }
}

/// Verdict of the fixity classification check at one valency.
///
/// * 4-valent form: applicable to connected vertex- and edge-transitive
///   graphs; a fixicity above n/3 must be explained by one of the six
///   4-valent sporadic graphs or an arc-transitive C(r,s) with s < 2r/3.
/// * 3-valent form: applicable to connected vertex-transitive graphs;
///   the explanation set is the six 3-valent sporadics or a split
///   S(C(r,s)) with s < 2r/3.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixityVerdict {
    pub valency: Valency,
    pub applicable: bool,
    pub n: usize,
    pub fixicity: Option<usize>,
    pub exceeds_third: bool,
    pub exactly_third: bool,
    /// Computed whenever the bound is exceeded (None = not computed).
    pub classified_as: Option<Classification>,
    pub conforms: bool,
}

/// Window parameter check `s < 2r/3`, in exact integer arithmetic.
fn below_window_threshold(r: usize, s: usize) -> bool {
    3 * s < 2 * r
}

/// Assembles a fixity verdict from precomputed parts (the group, its
/// profile on `g`, and a fixicity report over the full group).
pub fn verdict_from_parts(
    g: &Graph,
    aut: &PermGroup,
    profile: &TransitivityProfile,
    report: &FixicityReport,
    valency: Valency,
) -> FixityVerdict {
    let n = g.n();
    let applicable = g.is_connected()
        && g.is_k_regular(valency.as_usize())
        && profile.vertex_transitive
        && match valency {
            Valency::Four => profile.edge_transitive,
            Valency::Three => true,
        };
    if !applicable {
        return FixityVerdict {
            valency,
            applicable,
            n,
            fixicity: None,
            exceeds_third: false,
            exactly_third: false,
            classified_as: None,
            conforms: true,
        };
    }
    debug_assert_eq!(aut.degree(), n);

    let fixicity = report.fixicity;
    let exceeds = report.exceeds_third;
    let (classified, conforms) = if !exceeds {
        (None, true)
    } else {
        let class = classify_family(g);
        let ok = match (valency, class) {
            (Valency::Four, Classification::Sporadic(id)) => id.valency() == 4,
            (Valency::Four, Classification::Px { r, s }) => {
                below_window_threshold(r, s) && profile.arc_transitive
            }
            (Valency::Three, Classification::Sporadic(id)) => id.valency() == 3,
            (Valency::Three, Classification::SplitPx { r, s }) => below_window_threshold(r, s),
            _ => false,
        };
        (Some(class), ok)
    };
    FixityVerdict {
        valency,
        applicable,
        n,
        fixicity,
        exceeds_third: exceeds,
        exactly_third: report.exactly_third,
        classified_as: classified,
        conforms,
    }
}

/// The 4-valent fixity verdict, computing everything from scratch.
pub fn fixity_verdict_4valent(g: &Graph, cap: u64) -> Result<FixityVerdict, SymmetryError> {
    let (aut, _) = automorphism_group(g);
    let profile = transitivity_profile(g, &aut)?;
    let report = fixicity_scan(&aut, cap)?;
    Ok(verdict_from_parts(
        g,
        &aut,
        &profile,
        &report,
        Valency::Four,
    ))
}

/// The 3-valent fixity verdict, computing everything from scratch.
pub fn fixity_verdict_3valent(g: &Graph, cap: u64) -> Result<FixityVerdict, SymmetryError> {
    let (aut, _) = automorphism_group(g);
    let profile = transitivity_profile(g, &aut)?;
    let report = fixicity_scan(&aut, cap)?;
    Ok(verdict_from_parts(
        g,
        &aut,
        &profile,
        &report,
        Valency::Three,
    ))
}

/// Verdict of the no-fixed-edge geometry check: every prime-order
/// automorphism with fpr > 1/3 fixing no edge pointwise forces the graph
/// to be C(r,1) (valency 4) or K_{3,3} (valency 3). "Fixing no edge
/// pointwise" means no edge has both endpoints fixed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryVerdict {
    pub applicable: bool,
    /// Prime-order elements with fpr > 1/3 and no pointwise-fixed edge.
    pub qualifying_elements: usize,
    /// What the qualifying elements force, when any exist.
    pub forced_form: Option<Classification>,
    pub conforms: bool,
}

pub fn geometry_verdict(g: &Graph, cap: u64) -> Result<GeometryVerdict, SymmetryError> {
    let (aut, _) = automorphism_group(g);
    let profile = transitivity_profile(g, &aut)?;
    geometry_verdict_from_parts(g, &aut, &profile, cap)
}

/// As [`geometry_verdict`], with the group and profile already in hand.
pub fn geometry_verdict_from_parts(
    g: &Graph,
    aut: &PermGroup,
    profile: &TransitivityProfile,
    cap: u64,
) -> Result<GeometryVerdict, SymmetryError> {
    let valency = g.regular_valency();
    let applicable =
        g.is_connected() && matches!(valency, Some(3) | Some(4)) && profile.arc_transitive;
    if !applicable {
        return Ok(GeometryVerdict {
            applicable,
            qualifying_elements: 0,
            forced_form: None,
            conforms: true,
        });
    }
    let edges = g.edges();
    let qualifying = aut
        .prime_order_elements(cap)
        .map_err(|_| SymmetryError::Capped { cap })?
        .into_iter()
        .filter(|p| p.fpr() > one_third())
        .filter(|p| {
            !edges
                .iter()
                .any(|&(u, v)| p.apply(u) == u && p.apply(v) == v)
        })
        .count();
    if qualifying == 0 {
        return Ok(GeometryVerdict {
            applicable,
            qualifying_elements: 0,
            forced_form: None,
            conforms: true,
        });
    }
    let class = classify_family(g);
    let conforms = matches!(
        (valency, class),
        (Some(4), Classification::Px { s: 1, .. })
            | (Some(3), Classification::Sporadic(SporadicId::Lambda2))
    );
    Ok(GeometryVerdict {
        applicable,
        qualifying_elements: qualifying,
        forced_form: Some(class),
        conforms,
    })
}

/// Vertex-stabilizer bound check: 48 for 3-valent arc-transitive graphs,
/// 11664 for 4-valent 2-arc-transitive ones.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilizerBound {
    pub applicable: bool,
    /// |Aut_v| as a decimal string.
    pub stabilizer_order: String,
    pub bound: Option<u64>,
    pub within: bool,
}

pub fn stabilizer_bound_check(g: &Graph) -> Result<StabilizerBound, SymmetryError> {
    let (aut, _) = automorphism_group(g);
    let profile = transitivity_profile(g, &aut)?;
    stabilizer_bound_from_parts(g, &aut, &profile)
}

/// As [`stabilizer_bound_check`], with the group and profile in hand.
pub fn stabilizer_bound_from_parts(
    g: &Graph,
    aut: &PermGroup,
    profile: &TransitivityProfile,
) -> Result<StabilizerBound, SymmetryError> {
    if g.n() == 0 {
        return Ok(StabilizerBound {
            applicable: false,
            stabilizer_order: "1".into(),
            bound: None,
            within: true,
        });
    }
    let stab = aut.point_stabilizer(0)?;
    let stab_order = stab.order().clone();
    let bound = match g.regular_valency() {
        Some(3) if g.is_connected() && profile.arc_transitive => Some(48u64),
        Some(4) if g.is_connected() && profile.two_arc_transitive => Some(11664u64),
        _ => None,
    };
    let within = match bound {
        Some(b) => stab_order <= BigUint::from(b),
        None => true,
    };
    Ok(StabilizerBound {
        applicable: bound.is_some(),
        stabilizer_order: stab_order.to_string(),
        bound,
        within,
    })
}
