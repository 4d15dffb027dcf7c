//! Fixicity: the largest number of vertices fixed by a non-identity
//! automorphism, with a witness element.
//!
//! The scan ranges over prime-order elements only. That loses nothing:
//! if g fixes a set F and p divides ord(g), then g^(ord(g)/p) has order
//! p and fixes at least F. A full-element scan is provided for auditing
//! that argument at small orders.

use crate::SymmetryError;
use perm::{Fpr, PermGroup, Permutation};
use serde::{Deserialize, Serialize};

/// Outcome of a fixicity scan over a group of degree `n`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixicityReport {
    pub n: usize,
    /// Group order as a decimal string (orders outgrow u64 quickly).
    pub group_order: String,
    /// Largest fixed-point count of a non-identity element; `None` for
    /// the trivial group.
    pub fixicity: Option<usize>,
    /// `fixicity / n` in lowest terms.
    pub fpr_max: Option<Fpr>,
    /// First element attaining the maximum, in enumeration order.
    pub witness: Option<Permutation>,
    /// Whether fixicity * 3 > n.
    pub exceeds_third: bool,
    /// Whether fixicity * 3 == n.
    pub exactly_third: bool,
}

fn report_from_scan<I: Iterator<Item = Permutation>>(
    n: usize,
    order: String,
    elements: I,
) -> FixicityReport {
    let mut best: Option<(usize, Permutation)> = None;
    for p in elements {
        let fixed = p.num_fixed_points();
        match &best {
            Some((b, _)) if *b >= fixed => {}
            _ => best = Some((fixed, p)),
        }
    }
    let (fixicity, witness) = match best {
        Some((f, w)) => (Some(f), Some(w)),
        None => (None, None),
    };
    FixicityReport {
        n,
        group_order: order,
        fixicity,
        fpr_max: fixicity.map(|f| Fpr::new(f as u64, n as u64)),
        witness,
        exceeds_third: fixicity.is_some_and(|f| 3 * f > n),
        exactly_third: fixicity.is_some_and(|f| 3 * f == n),
    }
}

/// Prime-order scan. Errors with [`SymmetryError::Capped`] when the
/// group order exceeds `cap` before any element is generated.
pub fn fixicity_scan(group: &PermGroup, cap: u64) -> Result<FixicityReport, SymmetryError> {
    let elements = group
        .prime_order_elements(cap)
        .map_err(|_| SymmetryError::Capped { cap })?;
    Ok(report_from_scan(
        group.degree(),
        group.order().to_string(),
        elements.into_iter(),
    ))
}

/// Audit scan over every non-identity element, regardless of order.
pub fn fixicity_scan_full(group: &PermGroup, cap: u64) -> Result<FixicityReport, SymmetryError> {
    let elements = group
        .elements(cap)
        .map_err(|_| SymmetryError::Capped { cap })?;
    Ok(report_from_scan(
        group.degree(),
        group.order().to_string(),
        elements.into_iter().filter(|p| !p.is_identity()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use autsearch::automorphism_group;
    use families::{dw, split_px, sporadic, vec_px, SporadicId};

    fn scan_graph(g: &graphcore::Graph) -> FixicityReport {
        let (aut, _) = automorphism_group(g);
        fixicity_scan(&aut, 1_000_000).unwrap()
    }

    #[test]
    fn window_graph_fixicity_comes_from_tau() {
        // tau_0 fixes all but s*2^s vertices; nothing does better.
        for (r, s) in [(5, 1), (5, 2), (6, 2), (6, 4)] {
            let bundle = vec_px(r, s).unwrap();
            let report = scan_graph(&bundle.graph);
            let n = r << s;
            assert_eq!(report.fixicity, Some(n - (s << s)), "r={r} s={s}");
            if report.exceeds_third {
                // Above one third the witness must come from K; at the
                // boundary other elements may tie.
                let w = report.witness.as_ref().unwrap();
                assert!(bundle.k_group.contains(w), "witness lies in K");
            }
        }
        // Boundary: s = 2r/3 gives exactly one third.
        let boundary = scan_graph(&vec_px(6, 4).unwrap().graph);
        assert!(boundary.exactly_third);
        assert!(!boundary.exceeds_third);
    }

    #[test]
    fn sporadic_fixed_point_counts() {
        let expected = [
            (SporadicId::Psi3, 6),
            (SporadicId::Psi4, 10),
            (SporadicId::Psi5, 15),
            (SporadicId::Psi6, 30),
            (SporadicId::Lambda2, 4),
            (SporadicId::Lambda3, 4),
            (SporadicId::Lambda4, 4),
            (SporadicId::Lambda5, 6),
            (SporadicId::Lambda6, 8),
        ];
        for (id, fix) in expected {
            let report = scan_graph(&sporadic(id).unwrap());
            assert_eq!(report.fixicity, Some(fix), "{id}");
            assert!(report.exceeds_third, "{id}");
            let w = report.witness.unwrap();
            assert_eq!(w.num_fixed_points(), fix);
        }
    }

    #[test]
    fn triangle_replaced_family_meets_a_third() {
        // Away from the m = 4 coincidence with the r = 6 window graph,
        // the maximum is exactly one third.
        for m in [3usize, 5, 6, 7, 8] {
            let report = scan_graph(&dw(m).unwrap());
            assert_eq!(report.fixicity, Some(m), "m={m}");
            assert!(report.exactly_third);
        }
        let special = scan_graph(&dw(4).unwrap());
        assert_eq!(special.fixicity, Some(10));
        assert!(special.exceeds_third);
    }

    #[test]
    fn split_window_graph_fixicity() {
        // S(C(5,2)) has 40 vertices; orientation-preserving lifts keep
        // their base ratio, so tau's 12 of 20 becomes 24 of 40 = 3/5.
        let sp = split_px(5, 2).unwrap();
        let report = scan_graph(&sp.graph);
        assert_eq!(report.fixicity, Some(24));
        assert_eq!(report.fpr_max, Some(Fpr::new(3, 5)));
    }

    #[test]
    fn full_scan_agrees_with_prime_order_scan() {
        for g in [
            sporadic(SporadicId::Lambda4).unwrap(),
            sporadic(SporadicId::Lambda2).unwrap(),
            dw(5).unwrap(),
            vec_px(4, 1).unwrap().graph,
        ] {
            let (aut, _) = automorphism_group(&g);
            let prime = fixicity_scan(&aut, 100_000).unwrap();
            let full = fixicity_scan_full(&aut, 100_000).unwrap();
            assert_eq!(prime.fixicity, full.fixicity);
        }
    }

    #[test]
    fn trivial_group_has_no_fixicity() {
        let asym =
            graphcore::Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (4, 5)])
                .unwrap();
        let report = scan_graph(&asym);
        assert_eq!(report.fixicity, None);
        assert!(!report.exceeds_third);
    }

    #[test]
    fn cap_is_an_upfront_failure() {
        let bundle = vec_px(6, 1).unwrap();
        // |Aut| = 768 > 100: the scan refuses rather than truncating.
        let (aut, _) = automorphism_group(&bundle.graph);
        assert!(matches!(
            fixicity_scan(&aut, 100),
            Err(SymmetryError::Capped { cap: 100 })
        ));
    }
}
