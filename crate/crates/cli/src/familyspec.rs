//! The `family:params` grammar shared by every subcommand that accepts a
//! constructor instead of a graph6 string.
//!
//! Grammar: `px:r,s`, `vpx:r,s`, `spx:r,s`, `dw:m`, `sdw:m`,
//! `sporadic:<psi1..psi6|lambda1..lambda6>`, `kneser:n,k`, `prism:n`,
//! `moebius:n`, `cube:d`, `circ:n,a[,b,...]`, `gp:n,k`.

use families::{
    dw, dw_orientation, generalized_petersen, hypercube, kneser, moebius, prism, px_graphs,
    split_orientation, split_px_graph, sporadic, SporadicId,
};
use graphcore::{Digraph, Graph};
use std::fmt;
use std::str::FromStr;

/// A parsed family specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Px { r: usize, s: usize },
    VecPx { r: usize, s: usize },
    SplitPx { r: usize, s: usize },
    Dw { m: usize },
    SplitDw { m: usize },
    Sporadic(SporadicId),
    Kneser { n: usize, k: usize },
    Prism { n: usize },
    Moebius { n: usize },
    Cube { d: usize },
    Circulant { n: usize, connections: Vec<usize> },
    GeneralizedPetersen { n: usize, k: usize },
}

/// A built graph: every family except `vpx` yields an undirected graph.
/// The directed case carries its label table (digraphs store none).
#[derive(Debug, Clone)]
pub enum Built {
    Undirected(Graph),
    Directed(Digraph, Option<Vec<String>>),
}

/// Grammar or construction failure; the message names the offending token.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct SpecError(pub String);

fn parse_args(family: &str, args: &str, want: usize) -> Result<Vec<usize>, SpecError> {
    if args.is_empty() {
        return Err(SpecError(format!("{family}: missing parameters")));
    }
    let mut out = Vec::new();
    for tok in args.split(',') {
        let v: usize = tok
            .parse()
            .map_err(|_| SpecError(format!("{family}: bad integer token `{tok}`")))?;
        out.push(v);
    }
    if want > 0 && out.len() != want {
        return Err(SpecError(format!(
            "{family}: expected {want} parameter(s), got {}",
            out.len()
        )));
    }
    Ok(out)
}

impl FromStr for FamilySpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| SpecError(format!("not a family spec: `{s}` (missing `:`)")))?;
        match family {
            "px" | "vpx" | "spx" => {
                let v = parse_args(family, args, 2)?;
                let (r, s) = (v[0], v[1]);
                Ok(match family {
                    "px" => FamilySpec::Px { r, s },
                    "vpx" => FamilySpec::VecPx { r, s },
                    _ => FamilySpec::SplitPx { r, s },
                })
            }
            "dw" | "sdw" => {
                let v = parse_args(family, args, 1)?;
                Ok(if family == "dw" {
                    FamilySpec::Dw { m: v[0] }
                } else {
                    FamilySpec::SplitDw { m: v[0] }
                })
            }
            "sporadic" => {
                let id = SporadicId::from_str(args)
                    .map_err(|_| SpecError(format!("sporadic: unknown id `{args}`")))?;
                Ok(FamilySpec::Sporadic(id))
            }
            "kneser" => {
                let v = parse_args(family, args, 2)?;
                Ok(FamilySpec::Kneser { n: v[0], k: v[1] })
            }
            "prism" => Ok(FamilySpec::Prism {
                n: parse_args(family, args, 1)?[0],
            }),
            "moebius" => Ok(FamilySpec::Moebius {
                n: parse_args(family, args, 1)?[0],
            }),
            "cube" => Ok(FamilySpec::Cube {
                d: parse_args(family, args, 1)?[0],
            }),
            "circ" => {
                let v = parse_args(family, args, 0)?;
                if v.len() < 2 {
                    return Err(SpecError(format!("circ: expected `n,a,...`, got `{args}`")));
                }
                Ok(FamilySpec::Circulant {
                    n: v[0],
                    connections: v[1..].to_vec(),
                })
            }
            "gp" => {
                let v = parse_args(family, args, 2)?;
                Ok(FamilySpec::GeneralizedPetersen { n: v[0], k: v[1] })
            }
            other => Err(SpecError(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Px { r, s } => write!(f, "px:{r},{s}"),
            FamilySpec::VecPx { r, s } => write!(f, "vpx:{r},{s}"),
            FamilySpec::SplitPx { r, s } => write!(f, "spx:{r},{s}"),
            FamilySpec::Dw { m } => write!(f, "dw:{m}"),
            FamilySpec::SplitDw { m } => write!(f, "sdw:{m}"),
            FamilySpec::Sporadic(id) => write!(f, "sporadic:{id}"),
            FamilySpec::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            FamilySpec::Prism { n } => write!(f, "prism:{n}"),
            FamilySpec::Moebius { n } => write!(f, "moebius:{n}"),
            FamilySpec::Cube { d } => write!(f, "cube:{d}"),
            FamilySpec::Circulant { n, connections } => {
                write!(f, "circ:{n}")?;
                for c in connections {
                    write!(f, ",{c}")?;
                }
                Ok(())
            }
            FamilySpec::GeneralizedPetersen { n, k } => write!(f, "gp:{n},{k}"),
        }
    }
}

impl FamilySpec {
    /// Constructs the graph (or digraph, for `vpx`) the spec names.
    pub fn build(&self) -> Result<Built, SpecError> {
        let wrap = |e: families::FamilyError| SpecError(format!("{self}: {e}"));
        Ok(match self {
            FamilySpec::Px { r, s } => Built::Undirected(px_graphs(*r, *s).map_err(wrap)?.1),
            FamilySpec::VecPx { r, s } => {
                let (digraph, graph) = px_graphs(*r, *s).map_err(wrap)?;
                let labels = graph.labels().map(<[String]>::to_vec);
                Built::Directed(digraph, labels)
            }
            FamilySpec::SplitPx { r, s } => {
                Built::Undirected(split_px_graph(*r, *s).map_err(wrap)?)
            }
            FamilySpec::Dw { m } => Built::Undirected(dw(*m).map_err(wrap)?),
            FamilySpec::SplitDw { m } => Built::Undirected(
                split_orientation(&dw_orientation(*m).map_err(wrap)?).map_err(wrap)?,
            ),
            FamilySpec::Sporadic(id) => Built::Undirected(sporadic(*id).map_err(wrap)?),
            FamilySpec::Kneser { n, k } => Built::Undirected(kneser(*n, *k).map_err(wrap)?),
            FamilySpec::Prism { n } => Built::Undirected(prism(*n).map_err(wrap)?),
            FamilySpec::Moebius { n } => Built::Undirected(moebius(*n).map_err(wrap)?),
            FamilySpec::Cube { d } => Built::Undirected(hypercube(*d).map_err(wrap)?),
            FamilySpec::Circulant { n, connections } => {
                Built::Undirected(families::circulant(*n, connections).map_err(wrap)?)
            }
            FamilySpec::GeneralizedPetersen { n, k } => {
                Built::Undirected(generalized_petersen(*n, *k).map_err(wrap)?)
            }
        })
    }

    /// Like [`build`](Self::build) but demands an undirected graph;
    /// `vpx` is rejected with a pointer to `px`.
    pub fn build_graph(&self) -> Result<Graph, SpecError> {
        match self.build()? {
            Built::Undirected(g) => Ok(g),
            Built::Directed(..) => Err(SpecError(format!(
                "{self}: directed family not usable here (use px:{})",
                match self {
                    FamilySpec::VecPx { r, s } => format!("{r},{s}"),
                    _ => unreachable!(),
                }
            ))),
        }
    }
}
