//! Per-graph reports in the `fixicity-report/1` schema, with text, JSON,
//! and CSV renderings.

use graphcore::Graph;
use serde::Serialize;
use symmetry::{analyze, Analysis, SymmetryError, TransitivityProfile};

pub const SCHEMA: &str = "fixicity-report/1";

/// One analyzed graph. `conforms` is `None` when the element cap cut the
/// scan short (`capped = true`): such graphs are reported, not judged.
#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub schema: &'static str,
    /// Source name: family spec, census line tag, or raw graph6.
    pub graph: String,
    pub n: usize,
    pub valency: Option<usize>,
    pub aut_order: String,
    pub profile: Option<TransitivityProfile>,
    pub fixicity: Option<usize>,
    /// Maximum fixed-point ratio over non-identity automorphisms, in
    /// lowest terms, as `"p/q"`.
    pub fpr_max: Option<String>,
    /// Witness attaining `fixicity`, as an image list.
    pub witness: Option<Vec<usize>>,
    pub classified_as: String,
    pub conforms: Option<bool>,
    pub capped: bool,
}

impl GraphReport {
    pub fn from_analysis(name: &str, a: &Analysis) -> Self {
        GraphReport {
            schema: SCHEMA,
            graph: name.to_string(),
            n: a.n,
            valency: a.valency,
            aut_order: a.aut_order.to_string(),
            profile: Some(a.profile),
            fixicity: a.fixicity.fixicity,
            fpr_max: a.fixicity.fpr_max.map(|f| f.to_string()),
            witness: a.fixicity.witness.as_ref().map(|w| w.images().to_vec()),
            classified_as: a.classification.to_string(),
            conforms: Some(a.conforms()),
            capped: false,
        }
    }

    /// Report for a graph whose element scan exceeded the cap: the
    /// group-level facts are still present, the verdicts are withheld.
    pub fn capped(name: &str, g: &Graph) -> Self {
        let (aut, _) = autsearch::automorphism_group(g);
        let profile = symmetry::transitivity_profile(g, &aut).ok();
        GraphReport {
            schema: SCHEMA,
            graph: name.to_string(),
            n: g.n(),
            valency: g.regular_valency(),
            aut_order: aut.order().to_string(),
            profile,
            fixicity: None,
            fpr_max: None,
            witness: None,
            classified_as: symmetry::classify_family(g).to_string(),
            conforms: None,
            capped: true,
        }
    }

    /// One-line JSON (used by `analyze` and `--format json`).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Fixed-width text line for scan tables.
    pub fn to_text(&self) -> String {
        format!(
            "{:<18} n={:<5} val={:<4} |Aut|={:<12} fix={:<9} fpr={:<7} class={:<10} {}",
            self.graph,
            self.n,
            self.valency.map_or("-".into(), |v| v.to_string()),
            self.aut_order,
            self.fixicity.map_or("-".into(), |v| v.to_string()),
            self.fpr_max.as_deref().unwrap_or("-"),
            self.classified_as,
            match self.conforms {
                Some(true) => "conforms",
                Some(false) => "NON-CONFORMING",
                None => "capped",
            }
        )
    }

    pub const CSV_HEADER: &'static str =
        "graph,n,valency,aut_order,fixicity,fpr_max,classified_as,conforms,capped";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            csv_quote(&self.graph),
            self.n,
            self.valency.map_or(String::new(), |v| v.to_string()),
            self.aut_order,
            self.fixicity.map_or(String::new(), |v| v.to_string()),
            self.fpr_max.as_deref().unwrap_or(""),
            self.classified_as,
            self.conforms.map_or(String::new(), |c| c.to_string()),
            self.capped
        )
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Analyzes one graph, degrading to a capped report instead of failing
/// when the cap is hit. Other analysis errors propagate.
pub fn report_for(name: &str, g: &Graph, cap: u64) -> Result<GraphReport, SymmetryError> {
    match analyze(g, cap) {
        Ok(a) => Ok(GraphReport::from_analysis(name, &a)),
        Err(SymmetryError::Capped { .. }) => Ok(GraphReport::capped(name, g)),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use families::{sporadic, SporadicId};

    #[test]
    fn report_fields_round_trip_to_json() {
        let g = sporadic(SporadicId::Lambda4).unwrap();
        let report = report_for("sporadic:lambda4", &g, 1_000_000).unwrap();
        assert_eq!(report.n, 10);
        assert_eq!(report.aut_order, "120");
        assert_eq!(report.fixicity, Some(4));
        assert_eq!(report.fpr_max.as_deref(), Some("2/5"));
        assert_eq!(report.classified_as, "sporadic:lambda4");
        assert_eq!(report.conforms, Some(true));
        assert!(!report.capped);

        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["schema"], "fixicity-report/1");
        assert_eq!(v["n"], 10);
        assert_eq!(v["fpr_max"], "2/5");
        assert_eq!(v["profile"]["arc_transitive"], true);
        let w = v["witness"].as_array().unwrap();
        assert_eq!(w.len(), 10);
    }

    #[test]
    fn cap_degrades_to_reported_not_failed() {
        let g = sporadic(SporadicId::Lambda4).unwrap();
        // |Aut(Petersen)| = 120 > 10: the scan caps, the report survives.
        let report = report_for("petersen", &g, 10).unwrap();
        assert!(report.capped);
        assert_eq!(report.conforms, None);
        assert_eq!(report.aut_order, "120");
        assert_eq!(report.fixicity, None);
        assert!(report.to_text().contains("capped"));
    }

    #[test]
    fn csv_escapes_commas_in_names() {
        let g = families::complete(4).unwrap();
        let report = report_for("circ:4,1,2", &g, 1_000_000).unwrap();
        assert!(report.to_csv().starts_with("\"circ:4,1,2\","));
        assert_eq!(report.classified_as, "sporadic:lambda1");
    }
}
