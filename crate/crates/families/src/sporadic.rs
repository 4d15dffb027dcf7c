//! The twelve exceptional graphs that arise as the small cases of the
//! classification machinery: six 4-valent (`psi1..psi6`) and six
//! 3-valent (`lambda1..lambda6`) arc-transitive graphs.
//!
//! | id      | graph                                        | n  |
//! |---------|----------------------------------------------|----|
//! | psi1    | complete graph K5                            |  5 |
//! | psi2    | K_{5,5} minus a perfect matching             | 10 |
//! | psi3    | point/line non-incidence graph of PG(2,2)    | 14 |
//! | psi4    | point/line incidence graph of PG(2,3)        | 26 |
//! | psi5    | Kneser graph K(7,3)                          | 35 |
//! | psi6    | bipartite double cover of psi5               | 70 |
//! | lambda1 | complete graph K4                            |  4 |
//! | lambda2 | complete bipartite K_{3,3}                   |  6 |
//! | lambda3 | 3-cube Q3                                    |  8 |
//! | lambda4 | Petersen graph K(5,2)                        | 10 |
//! | lambda5 | Heawood graph (incidence graph of PG(2,2))   | 14 |
//! | lambda6 | bipartite double cover of the Petersen graph | 20 |

use crate::standard::{
    complete, complete_bipartite_minus_matching, complete_multipartite, hypercube, kneser,
};
use crate::FamilyError;
use graphcore::Graph;
use std::fmt;
use std::str::FromStr;

#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum SporadicId {
    Psi1,
    Psi2,
    Psi3,
    Psi4,
    Psi5,
    Psi6,
    Lambda1,
    Lambda2,
    Lambda3,
    Lambda4,
    Lambda5,
    Lambda6,
}

impl SporadicId {
    pub const ALL: [SporadicId; 12] = [
        SporadicId::Psi1,
        SporadicId::Psi2,
        SporadicId::Psi3,
        SporadicId::Psi4,
        SporadicId::Psi5,
        SporadicId::Psi6,
        SporadicId::Lambda1,
        SporadicId::Lambda2,
        SporadicId::Lambda3,
        SporadicId::Lambda4,
        SporadicId::Lambda5,
        SporadicId::Lambda6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SporadicId::Psi1 => "psi1",
            SporadicId::Psi2 => "psi2",
            SporadicId::Psi3 => "psi3",
            SporadicId::Psi4 => "psi4",
            SporadicId::Psi5 => "psi5",
            SporadicId::Psi6 => "psi6",
            SporadicId::Lambda1 => "lambda1",
            SporadicId::Lambda2 => "lambda2",
            SporadicId::Lambda3 => "lambda3",
            SporadicId::Lambda4 => "lambda4",
            SporadicId::Lambda5 => "lambda5",
            SporadicId::Lambda6 => "lambda6",
        }
    }

    /// Valency of the graph: 4 for the psi series, 3 for lambda.
    pub fn valency(self) -> usize {
        match self {
            SporadicId::Psi1
            | SporadicId::Psi2
            | SporadicId::Psi3
            | SporadicId::Psi4
            | SporadicId::Psi5
            | SporadicId::Psi6 => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for SporadicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SporadicId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SporadicId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| FamilyError::BadParameters(format!("unknown sporadic graph `{s}`")))
    }
}

/// Points of the projective plane over the field with `q` elements
/// (`q` in {2, 3}), as canonical vectors `(a, b, c)` whose first nonzero
/// coordinate is 1, in lexicographic order. The plane is self-dual, so
/// the same list also indexes the lines.
fn plane_points(q: u8) -> Vec<[u8; 3]> {
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                let first = v.iter().find(|&&x| x != 0);
                if first == Some(&1) {
                    pts.push(v);
                }
            }
        }
    }
    pts
}

fn incident(p: &[u8; 3], l: &[u8; 3], q: u8) -> bool {
    let dot: u32 = p
        .iter()
        .zip(l.iter())
        .map(|(&x, &y)| u32::from(x) * u32::from(y))
        .sum();
    dot.is_multiple_of(u32::from(q))
}

/// Bipartite graph on the points (first) and lines (second) of the
/// projective plane over GF(q), joined by incidence or non-incidence.
fn plane_graph(q: u8, join_incident: bool) -> Result<Graph, FamilyError> {
    let pts = plane_points(q);
    let m = pts.len();
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if incident(p, l, q) == join_incident {
                edges.push((i, m + j));
            }
        }
    }
    let mut g = Graph::from_edges(2 * m, &edges)?;
    let labels = pts
        .iter()
        .map(|v| format!("p({},{},{})", v[0], v[1], v[2]))
        .chain(pts.iter().map(|v| format!("l({},{},{})", v[0], v[1], v[2])))
        .collect();
    g.set_labels(labels)?;
    Ok(g)
}

pub fn sporadic(id: SporadicId) -> Result<Graph, FamilyError> {
    match id {
        SporadicId::Psi1 => complete(5),
        SporadicId::Psi2 => complete_bipartite_minus_matching(5),
        SporadicId::Psi3 => plane_graph(2, false),
        SporadicId::Psi4 => plane_graph(3, true),
        SporadicId::Psi5 => kneser(7, 3),
        SporadicId::Psi6 => Ok(kneser(7, 3)?.bipartite_double_cover()),
        SporadicId::Lambda1 => complete(4),
        SporadicId::Lambda2 => complete_multipartite(&[3, 3]),
        SporadicId::Lambda3 => hypercube(3),
        SporadicId::Lambda4 => kneser(5, 2),
        SporadicId::Lambda5 => plane_graph(2, true),
        SporadicId::Lambda6 => Ok(kneser(5, 2)?.bipartite_double_cover()),
    }
}

pub fn all_sporadics() -> Vec<(SporadicId, Graph)> {
    SporadicId::ALL
        .iter()
        .map(|&id| (id, sporadic(id).expect("sporadic constructions are total")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_names() {
        for id in SporadicId::ALL {
            assert_eq!(id.name().parse::<SporadicId>().unwrap(), id);
        }
        assert!("psi7".parse::<SporadicId>().is_err());
        assert!("".parse::<SporadicId>().is_err());
    }

    #[test]
    fn orders_and_valencies() {
        let expected_n = [5, 10, 14, 26, 35, 70, 4, 6, 8, 10, 14, 20];
        for (i, (id, g)) in all_sporadics().into_iter().enumerate() {
            assert_eq!(g.n(), expected_n[i], "{id}");
            assert!(g.is_k_regular(id.valency()), "{id}");
            assert!(g.is_connected(), "{id}");
        }
    }

    #[test]
    fn plane_structure() {
        // Fano plane: 7 points, 3 points per line.
        let pts2 = plane_points(2);
        assert_eq!(pts2.len(), 7);
        for l in &pts2 {
            let on = pts2.iter().filter(|p| incident(p, l, 2)).count();
            assert_eq!(on, 3);
        }
        // PG(2,3): 13 points, 4 per line, any two lines meet in one point.
        let pts3 = plane_points(3);
        assert_eq!(pts3.len(), 13);
        for l in &pts3 {
            assert_eq!(pts3.iter().filter(|p| incident(p, l, 3)).count(), 4);
        }
        for (i, l1) in pts3.iter().enumerate() {
            for l2 in pts3.iter().skip(i + 1) {
                let common = pts3
                    .iter()
                    .filter(|p| incident(p, l1, 3) && incident(p, l2, 3))
                    .count();
                assert_eq!(common, 1);
            }
        }
    }

    #[test]
    fn bipartite_members() {
        for id in [
            SporadicId::Psi2,
            SporadicId::Psi3,
            SporadicId::Psi4,
            SporadicId::Psi6,
            SporadicId::Lambda2,
            SporadicId::Lambda3,
            SporadicId::Lambda5,
            SporadicId::Lambda6,
        ] {
            assert!(sporadic(id).unwrap().bipartition().is_some(), "{id}");
        }
        // The odd-girth members are not bipartite.
        for id in [
            SporadicId::Psi1,
            SporadicId::Psi5,
            SporadicId::Lambda1,
            SporadicId::Lambda4,
        ] {
            assert!(sporadic(id).unwrap().bipartition().is_none(), "{id}");
        }
    }

    #[test]
    fn heawood_has_girth_six() {
        let h = sporadic(SporadicId::Lambda5).unwrap();
        // No 4-cycles: two points lie on at most one common line.
        for u in 0..h.n() {
            for v in (u + 1)..h.n() {
                let common = h
                    .neighbors(u)
                    .iter()
                    .filter(|w| h.neighbors(v).contains(w))
                    .count();
                assert!(common <= 1);
            }
        }
    }
}
