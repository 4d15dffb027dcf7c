//! Subcommand implementations. Each returns the process exit code and
//! writes only to the handles it is given, so tests can drive them
//! in-process and the binary stays a thin argument-parsing shell.
//!
//! Exit codes: 0 success/conforming, 1 negative boolean answer (iso),
//! 2 usage/parse error, 3 counterexample found, 4 cap exceeded with
//! `--strict-cap`.

use crate::corpus::{self, CorpusEntry};
use crate::familyspec::{Built, FamilySpec};
use crate::report::{report_for, GraphReport};
use crate::scan::scan;
use autsearch::{are_isomorphic, automorphism_group};
use graphcore::Graph;
use perm::PermGroup;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use symmetry::{normal_quotient, Classification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;
pub const EXIT_CAPPED: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (text|json|csv)")),
        }
    }
}

/// Resolves one positional input to named graphs: family spec first,
/// then graph6 literal, then census file path.
fn resolve_input(arg: &str) -> Result<Vec<CorpusEntry>, String> {
    match arg.parse::<FamilySpec>() {
        Ok(spec) => {
            let graph = spec.build_graph().map_err(|e| e.to_string())?;
            Ok(vec![CorpusEntry {
                name: spec.to_string(),
                graph,
            }])
        }
        Err(spec_err) => {
            if let Ok(graph) = Graph::from_graph6(arg) {
                return Ok(vec![CorpusEntry {
                    name: arg.to_string(),
                    graph,
                }]);
            }
            if Path::new(arg).is_file() {
                return corpus::read_census(Path::new(arg));
            }
            // A token with `:` was meant as a spec; report that error.
            if arg.contains(':') {
                return Err(spec_err.to_string());
            }
            Err(format!(
                "`{arg}` is not a family spec, a graph6 string, or a readable file"
            ))
        }
    }
}

fn resolve_single(arg: &str) -> Result<CorpusEntry, String> {
    let mut entries = resolve_input(arg)?;
    if entries.len() != 1 {
        return Err(format!(
            "`{arg}` resolves to {} graphs; expected exactly one",
            entries.len()
        ));
    }
    Ok(entries.remove(0))
}

fn usage_error(err: &mut impl Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

/// `gen`: one graph6 (digraph6 for `vpx`) line per spec; `--labels`
/// writes one JSON label array per graph to the error stream.
pub fn cmd_gen(specs: &[String], labels: bool, out: &mut impl Write, err: &mut impl Write) -> i32 {
    for raw in specs {
        let spec = match raw.parse::<FamilySpec>() {
            Ok(s) => s,
            Err(e) => return usage_error(err, &e.to_string()),
        };
        let built = match spec.build() {
            Ok(b) => b,
            Err(e) => return usage_error(err, &e.to_string()),
        };
        match built {
            Built::Undirected(g) => {
                let _ = writeln!(out, "{}", g.to_graph6());
                if labels {
                    let table = g.labels().map(<[String]>::to_vec).unwrap_or_default();
                    let _ = writeln!(
                        err,
                        "{}",
                        serde_json::json!({ "graph": raw, "labels": table })
                    );
                }
            }
            Built::Directed(d, table) => {
                let _ = writeln!(out, "{}", d.to_digraph6());
                if labels {
                    let table = table.unwrap_or_default();
                    let _ = writeln!(
                        err,
                        "{}",
                        serde_json::json!({ "graph": raw, "labels": table })
                    );
                }
            }
        }
    }
    EXIT_OK
}

fn emit_reports(reports: &[GraphReport], format: Format, out: &mut impl Write) {
    match format {
        Format::Json => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_json());
            }
        }
        Format::Text => {
            for r in reports {
                let _ = writeln!(out, "{}", r.to_text());
            }
        }
        Format::Csv => {
            let _ = writeln!(out, "{}", GraphReport::CSV_HEADER);
            for r in reports {
                let _ = writeln!(out, "{}", r.to_csv());
            }
        }
    }
}

fn verdict_exit(reports: &[GraphReport], strict_cap: bool) -> i32 {
    if reports.iter().any(|r| r.conforms == Some(false)) {
        EXIT_COUNTEREXAMPLE
    } else if strict_cap && reports.iter().any(|r| r.capped) {
        EXIT_CAPPED
    } else {
        EXIT_OK
    }
}

/// `analyze`: one report per input graph.
pub fn cmd_analyze(
    inputs: &[String],
    cap: u64,
    format: Format,
    strict_cap: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let mut entries = Vec::new();
    for arg in inputs {
        match resolve_input(arg) {
            Ok(mut batch) => entries.append(&mut batch),
            Err(e) => return usage_error(err, &e),
        }
    }
    let mut reports = Vec::new();
    for e in &entries {
        match report_for(&e.name, &e.graph, cap) {
            Ok(r) => reports.push(r),
            Err(other) => return usage_error(err, &format!("{}: {other}", e.name)),
        }
    }
    emit_reports(&reports, format, out);
    verdict_exit(&reports, strict_cap)
}

/// `scan`: default corpus, an explicit spec list, or an external census.
pub fn cmd_scan(
    specs: &[String],
    census: Option<&Path>,
    cap: u64,
    format: Format,
    strict_cap: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let entries = if let Some(path) = census {
        match corpus::read_census(path) {
            Ok(e) => e,
            Err(msg) => return usage_error(err, &msg),
        }
    } else if specs.is_empty() {
        corpus::default_corpus()
    } else {
        let parsed: Result<Vec<FamilySpec>, _> =
            specs.iter().map(|s| s.parse::<FamilySpec>()).collect();
        match parsed.map(|p| corpus::expand(&p)) {
            Ok(Ok(e)) => e,
            Ok(Err(e)) => return usage_error(err, &e.to_string()),
            Err(e) => return usage_error(err, &e.to_string()),
        }
    };
    let outcome = match scan(&entries, cap) {
        Ok(o) => o,
        Err(e) => return usage_error(err, &e.to_string()),
    };
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema": "fixicity-scan/1",
                "reports": outcome.reports,
                "summary": outcome.summary,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            emit_reports(&outcome.reports, Format::Text, out);
            let _ = writeln!(out, "{}", outcome.summary.to_text());
        }
        Format::Csv => {
            emit_reports(&outcome.reports, Format::Csv, out);
            let _ = writeln!(err, "{}", outcome.summary.to_text());
        }
    }
    verdict_exit(&outcome.reports, strict_cap)
}

/// `iso`: prints `true` / `false`; exit 0 / 1.
pub fn cmd_iso(a: &str, b: &str, out: &mut impl Write, err: &mut impl Write) -> i32 {
    let (ga, gb) = match (resolve_single(a), resolve_single(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return usage_error(err, &e),
    };
    match are_isomorphic(&ga.graph, &gb.graph) {
        Some(_) => {
            let _ = writeln!(out, "true");
            EXIT_OK
        }
        None => {
            let _ = writeln!(out, "false");
            EXIT_NEGATIVE
        }
    }
}

/// Resolves a subgroup spec for `g`. `K`/`H+`/`H` require the graph to
/// be a recognised window graph; their presented action is transported
/// along an explicit isomorphism when `g` was not built as `px:r,s`.
fn resolve_subgroup(g: &Graph, subgroup: &str) -> Result<PermGroup, String> {
    match subgroup.to_ascii_lowercase().as_str() {
        "aut" => Ok(automorphism_group(g).0),
        "trivial" => Ok(PermGroup::trivial(g.n())),
        tag @ ("k" | "h" | "h+") => {
            let (r, s) = match symmetry::classify_family(g) {
                Classification::Px { r, s } => (r, s),
                other => {
                    return Err(format!(
                        "subgroup `{subgroup}` needs a recognised px graph; this one classifies as {other}"
                    ))
                }
            };
            let bundle = families::vec_px(r, s).map_err(|e| e.to_string())?;
            let iso = are_isomorphic(&bundle.graph, g).expect("classification implies isomorphism");
            let presented = match tag {
                "k" => &bundle.k_group,
                "h+" => &bundle.h_plus,
                _ => &bundle.h,
            };
            let gens = presented
                .generators()
                .iter()
                .map(|p| p.conjugate_by(&iso))
                .collect();
            PermGroup::from_generators(g.n(), gens).map_err(|e| e.to_string())
        }
        _ => Err(format!(
            "unknown subgroup `{subgroup}` (K, H, H+, Aut, trivial)"
        )),
    }
}

/// `quotient`: graph6 of the quotient plus a JSON block map.
pub fn cmd_quotient(
    graph_arg: &str,
    subgroup: &str,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let entry = match resolve_single(graph_arg) {
        Ok(e) => e,
        Err(e) => return usage_error(err, &e),
    };
    let group = match resolve_subgroup(&entry.graph, subgroup) {
        Ok(g) => g,
        Err(e) => return usage_error(err, &e),
    };
    match normal_quotient(&entry.graph, &group) {
        Ok((quotient, block_of)) => {
            let _ = writeln!(out, "{}", quotient.to_graph6());
            let _ = writeln!(out, "{}", serde_json::json!({ "blocks": block_of }));
            EXIT_OK
        }
        Err(e) => usage_error(err, &e.to_string()),
    }
}

/// `fixicity`: the fixed-point report for one graph.
pub fn cmd_fixicity(
    graph_arg: &str,
    cap: u64,
    full: bool,
    format: Format,
    strict_cap: bool,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let entry = match resolve_single(graph_arg) {
        Ok(e) => e,
        Err(e) => return usage_error(err, &e),
    };
    let (aut, _) = automorphism_group(&entry.graph);
    let scan = if full {
        symmetry::fixicity_scan_full(&aut, cap)
    } else {
        symmetry::fixicity_scan(&aut, cap)
    };
    match scan {
        Ok(report) => {
            match format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&report).unwrap());
                }
                _ => match report.fixicity {
                    Some(f) => {
                        let _ = writeln!(
                            out,
                            "{}: fixicity {f} of {} (fpr {}){}",
                            entry.name,
                            report.n,
                            report.fpr_max.unwrap(),
                            if report.exceeds_third {
                                ", exceeds 1/3"
                            } else if report.exactly_third {
                                ", exactly 1/3"
                            } else {
                                ""
                            }
                        );
                        let _ = writeln!(
                            out,
                            "witness: {:?}",
                            report.witness.as_ref().unwrap().images()
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{}: trivial automorphism group", entry.name);
                    }
                },
            }
            EXIT_OK
        }
        Err(symmetry::SymmetryError::Capped { cap }) => {
            let _ = writeln!(
                out,
                "{}: capped (|Aut| = {} exceeds cap {cap})",
                entry.name,
                aut.order()
            );
            if strict_cap {
                EXIT_CAPPED
            } else {
                EXIT_OK
            }
        }
        Err(e) => usage_error(err, &e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run<F: FnOnce(&mut Vec<u8>, &mut Vec<u8>) -> i32>(f: F) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = f(&mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_emits_decodable_graph6() {
        let (code, out, _) = run(|o, e| cmd_gen(&["px:3,1".into()], false, o, e));
        assert_eq!(code, EXIT_OK);
        let g = Graph::from_graph6(out.trim()).unwrap();
        assert_eq!((g.n(), g.regular_valency()), (6, Some(4)));

        let (code, out, _) = run(|o, e| cmd_gen(&["dw:3".into()], false, o, e));
        assert_eq!(code, EXIT_OK);
        let g = Graph::from_graph6(out.trim()).unwrap();
        assert_eq!((g.n(), g.regular_valency()), (9, Some(4)));

        let (code, _, err) = run(|o, e| cmd_gen(&["px:3".into()], false, o, e));
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("px"));
    }

    #[test]
    fn gen_labels_go_to_the_error_stream() {
        let (code, out, err) = run(|o, e| cmd_gen(&["dw:3".into()], true, o, e));
        assert_eq!(code, EXIT_OK);
        assert!(!out.contains("labels"));
        let table: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
        assert_eq!(table["labels"].as_array().unwrap().len(), 9);
        assert_eq!(table["labels"][0], "(0,0)");
    }

    #[test]
    fn analyze_accepts_specs_and_graph6() {
        let petersen = families::sporadic(families::SporadicId::Lambda4)
            .unwrap()
            .to_graph6();
        let (code, out, _) = run(|o, e| {
            cmd_analyze(
                &["sporadic:psi5".into(), petersen.clone()],
                1_000_000,
                Format::Json,
                false,
                o,
                e,
            )
        });
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        let psi5: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(psi5["fixicity"], 15);
        assert_eq!(psi5["conforms"], true);
        let pet: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
        assert_eq!(pet["graph"], petersen);
        assert_eq!(pet["classified_as"], "sporadic:lambda4");
    }

    #[test]
    fn iso_answers_and_exit_codes() {
        let (code, out, _) = run(|o, e| cmd_iso("kneser:5,2", "sporadic:lambda4", o, e));
        assert_eq!((code, out.trim()), (EXIT_OK, "true"));
        let (code, out, _) = run(|o, e| cmd_iso("px:3,1", "sporadic:lambda2", o, e));
        assert_eq!((code, out.trim()), (EXIT_NEGATIVE, "false"));
        let (code, _, err) = run(|o, e| cmd_iso("px:3,1", "nonsense:9", o, e));
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("nonsense"));
    }

    #[test]
    fn quotient_by_presented_normal_subgroup_gives_the_base_cycle() {
        let (code, out, _) = run(|o, e| cmd_quotient("px:5,2", "K", o, e));
        assert_eq!(code, EXIT_OK);
        let mut lines = out.lines();
        let q = Graph::from_graph6(lines.next().unwrap()).unwrap();
        assert_eq!((q.n(), q.regular_valency()), (5, Some(2)));
        let blocks: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(blocks["blocks"].as_array().unwrap().len(), 20);

        // The same graph handed over as anonymous graph6 still resolves K.
        let g6 = families::vec_px(5, 2).unwrap().graph.to_graph6();
        let (code, out2, _) = run(|o, e| cmd_quotient(&g6, "k", o, e));
        assert_eq!(code, EXIT_OK);
        let q2 = Graph::from_graph6(out2.lines().next().unwrap()).unwrap();
        assert_eq!((q2.n(), q2.regular_valency()), (5, Some(2)));

        let (code, _, err) = run(|o, e| cmd_quotient("sporadic:lambda4", "K", o, e));
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("recognised px graph"));
    }

    #[test]
    fn fixicity_command_reports_the_known_counts() {
        let (code, out, _) =
            run(|o, e| cmd_fixicity("sporadic:psi6", 1_000_000, false, Format::Text, false, o, e));
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("fixicity 30 of 70"), "{out}");
        assert!(out.contains("exceeds 1/3"), "{out}");

        let (code, out, _) =
            run(|o, e| cmd_fixicity("sporadic:psi6", 100, false, Format::Text, true, o, e));
        assert_eq!(code, EXIT_CAPPED);
        assert!(out.contains("capped"), "{out}");
    }
}
