//! The built-in scan corpus and external census loading.
//!
//! The default corpus expands fixed family ranges in a fixed order and
//! drops isomorphic repeats (first occurrence wins, decided by canonical
//! form), so the scan output is deterministic and duplicate-free.

use crate::familyspec::{FamilySpec, SpecError};
use autsearch::canonical_form;
use graphcore::Graph;
use std::collections::HashSet;
use std::path::Path;

/// One corpus member: the spec (or source tag) it came from plus the graph.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

/// The default family ranges, in expansion order.
pub fn default_specs() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for r in 3..=8 {
        for s in 1..r {
            specs.push(FamilySpec::Px { r, s });
        }
    }
    for r in 3..=8 {
        for s in 1..r {
            specs.push(FamilySpec::SplitPx { r, s });
        }
    }
    for m in 3..=10 {
        specs.push(FamilySpec::Dw { m });
    }
    for m in 3..=10 {
        specs.push(FamilySpec::SplitDw { m });
    }
    for (id, _) in families::all_sporadics() {
        specs.push(FamilySpec::Sporadic(id));
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Prism { n });
    }
    for n in 2..=12 {
        specs.push(FamilySpec::Moebius { n });
    }
    specs.push(FamilySpec::Kneser { n: 5, k: 2 });
    specs.push(FamilySpec::Kneser { n: 7, k: 3 });
    for d in 1..=4 {
        specs.push(FamilySpec::Cube { d });
    }
    for n in 3..=12 {
        for k in 1..=(n - 1) / 2 {
            specs.push(FamilySpec::GeneralizedPetersen { n, k });
        }
    }
    for (n, connections) in [
        (5, vec![1, 4]),
        (8, vec![1, 4, 7]),
        (9, vec![1, 3, 6, 8]),
        (10, vec![2, 5, 8]),
        (12, vec![1, 5, 7, 11]),
        (13, vec![1, 5, 8, 12]),
    ] {
        specs.push(FamilySpec::Circulant { n, connections });
    }
    specs
}

/// Expands specs into graphs, dropping isomorphic repeats (first
/// occurrence wins). Every default spec must build.
pub fn expand(specs: &[FamilySpec]) -> Result<Vec<CorpusEntry>, SpecError> {
    let mut seen: HashSet<String> = HashSet::new();
    let mut entries = Vec::new();
    for spec in specs {
        let graph = spec.build_graph()?;
        let key = canonical_form(&graph).0.to_graph6();
        if seen.insert(key) {
            entries.push(CorpusEntry {
                name: spec.to_string(),
                graph,
            });
        }
    }
    Ok(entries)
}

/// The default corpus (expanded and deduplicated).
pub fn default_corpus() -> Vec<CorpusEntry> {
    expand(&default_specs()).expect("default corpus specs all build")
}

/// Reads an external census: one graph6 string per line, blank lines and
/// `#` comments skipped. Entries are named by file line number.
pub fn read_census(path: &Path) -> Result<Vec<CorpusEntry>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_census(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses census text (see [`read_census`]).
pub fn parse_census(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let graph = Graph::from_graph6(line).map_err(|e| format!("line {}: {e}", i + 1))?;
        entries.push(CorpusEntry {
            name: format!("line {}: {line}", i + 1),
            graph,
        });
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_deduplicated_and_sized_as_documented() {
        // The ranges expand to 145 specs; 27 are isomorphic repeats of
        // earlier entries (gp:n,1 = prism:n, kneser:7,3 = psi5,
        // gp:10,3 = lambda6, cube:4 = px:4,2, dw:4 = px:6,1, ...).
        assert_eq!(default_specs().len(), 145);
        let corpus = default_corpus();
        let mut keys = HashSet::new();
        for entry in &corpus {
            assert!(
                keys.insert(canonical_form(&entry.graph).0.to_graph6()),
                "duplicate graph in corpus: {}",
                entry.name
            );
        }
        assert_eq!(corpus.len(), 118, "dedup result drifted");
    }

    #[test]
    fn first_occurrence_wins() {
        let corpus = default_corpus();
        let names: Vec<&str> = corpus.iter().map(|e| e.name.as_str()).collect();
        // Petersen enters as sporadic:lambda4; kneser:5,2 and gp:5,2 are
        // the same graph and must have been dropped.
        assert!(names.contains(&"sporadic:lambda4"));
        assert!(!names.contains(&"kneser:5,2"));
        assert!(!names.contains(&"gp:5,2"));
        // The cube enters as sporadic:lambda3 (listed before prism:4,
        // cube:3, and gp:4,1 builds of the same graph).
        assert!(names.contains(&"sporadic:lambda3"));
        assert!(!names.contains(&"cube:3"));
        assert!(!names.contains(&"prism:4"));
    }

    #[test]
    fn census_parsing_skips_comments_and_reports_bad_lines() {
        let text = "# census sample\nD?{\n\nDEw\n";
        let entries = parse_census(text).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0].graph.n(), 5);
        assert!(entries[0].name.starts_with("line 2:"));

        let err = parse_census("D?{\nnot graph6 at all\u{7f}\n").unwrap_err();
        assert!(err.contains("line 2"), "{err}");
    }
}
