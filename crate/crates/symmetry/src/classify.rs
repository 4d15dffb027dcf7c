//! Recognition of a graph as a member of the built-in families, by
//! isomorphism against every candidate with matching vertex count.

use autsearch::are_isomorphic;
use families::{all_sporadics, dw, px_graphs, split_px_graph, SporadicId};
use graphcore::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    Sporadic(SporadicId),
    Px { r: usize, s: usize },
    SplitPx { r: usize, s: usize },
    Dw { m: usize },
    None,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Sporadic(id) => write!(f, "sporadic:{id}"),
            Classification::Px { r, s } => write!(f, "px:{r},{s}"),
            Classification::SplitPx { r, s } => write!(f, "spx:{r},{s}"),
            Classification::Dw { m } => write!(f, "dw:{m}"),
            Classification::None => write!(f, "none"),
        }
    }
}

impl Classification {
    pub fn is_px(&self) -> bool {
        matches!(self, Classification::Px { .. })
    }

    pub fn is_split_px(&self) -> bool {
        matches!(self, Classification::SplitPx { .. })
    }
}

/// Multiset of per-vertex BFS layer-size profiles. Equal on isomorphic
/// graphs, and cheap (`O(n(n+m))`), so it gates the canonical-form
/// comparisons: candidates with a different profile are discarded
/// without canonicalizing them.
fn distance_profile(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut profiles: Vec<Vec<u32>> = Vec::with_capacity(n);
    let mut dist: Vec<u32> = vec![u32::MAX; n];
    for v in 0..n {
        dist.fill(u32::MAX);
        dist[v] = 0;
        let mut layers: Vec<u32> = vec![1];
        let mut frontier = vec![v];
        let mut next: Vec<usize> = Vec::new();
        while !frontier.is_empty() {
            next.clear();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        next.push(w);
                    }
                }
            }
            if !next.is_empty() {
                layers.push(next.len() as u32);
            }
            std::mem::swap(&mut frontier, &mut next);
        }
        profiles.push(layers);
    }
    profiles.sort_unstable();
    profiles
}

/// Factorizations `n = r * 2^s` with `r >= 3`, `s >= 1`, ascending `s`.
fn px_factorizations(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut s = 1usize;
    while (1usize << s) * 3 <= n {
        if n.is_multiple_of(1 << s) {
            let r = n >> s;
            if r >= 3 {
                out.push((r, s));
            }
        }
        s += 1;
    }
    out
}

/// Tests `g` against each family in a fixed order: the twelve sporadic
/// graphs, then 4-valent window graphs C(r,s), then their 3-valent
/// splits, then the Z_m x Z_3 family. The first isomorphic candidate
/// wins, which makes the result deterministic for graphs lying in
/// several families (e.g. the m = 4 member of the last family is the
/// (6,1) window graph and is reported as such).
pub fn classify_family(g: &Graph) -> Classification {
    let n = g.n();
    let valency = g.regular_valency();
    if n == 0 || !g.is_connected() || valency.is_none() {
        return Classification::None;
    }
    let valency = valency.unwrap();
    let profile = distance_profile(g);
    let matches = |candidate: &Graph| -> bool {
        distance_profile(candidate) == profile && are_isomorphic(g, candidate).is_some()
    };

    if matches!(valency, 3 | 4) {
        for (id, candidate) in all_sporadics() {
            if candidate.n() == n && id.valency() == valency && matches(&candidate) {
                return Classification::Sporadic(id);
            }
        }
    }

    if valency == 4 {
        for (r, s) in px_factorizations(n) {
            if s <= r.saturating_sub(1) {
                let (_, candidate) = px_graphs(r, s).expect("validated parameters");
                if matches(&candidate) {
                    return Classification::Px { r, s };
                }
            }
        }
    }

    if valency == 3 && n.is_multiple_of(2) {
        for (r, s) in px_factorizations(n / 2) {
            if s <= r.saturating_sub(1) {
                let sp = split_px_graph(r, s).expect("validated parameters");
                if matches(&sp) {
                    return Classification::SplitPx { r, s };
                }
            }
        }
    }

    if valency == 4 && n.is_multiple_of(3) && n >= 9 {
        let m = n / 3;
        let candidate = dw(m).expect("m >= 3");
        if matches(&candidate) {
            return Classification::Dw { m };
        }
    }

    Classification::None
}

#[cfg(test)]
mod tests {
    use super::*;
    use families::{complete, prism, sporadic};

    #[test]
    fn octahedron_is_the_smallest_window_graph() {
        // K_{2,2,2} = C(3,1).
        let oct = families::complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(classify_family(&oct), Classification::Px { r: 3, s: 1 });
    }

    #[test]
    fn named_graphs_classify_as_sporadics() {
        assert_eq!(
            classify_family(&sporadic(SporadicId::Lambda5).unwrap()),
            Classification::Sporadic(SporadicId::Lambda5)
        );
        // Petersen matches the sporadic list before anything else.
        assert_eq!(
            classify_family(&families::kneser(5, 2).unwrap()),
            Classification::Sporadic(SporadicId::Lambda4)
        );
        // K4 is both complete and the smallest 3-valent sporadic.
        assert_eq!(
            classify_family(&complete(4).unwrap()),
            Classification::Sporadic(SporadicId::Lambda1)
        );
    }

    #[test]
    fn families_round_trip_through_classification() {
        assert_eq!(
            classify_family(&px_graphs(5, 2).unwrap().1),
            Classification::Px { r: 5, s: 2 }
        );
        assert_eq!(
            classify_family(&split_px_graph(5, 2).unwrap()),
            Classification::SplitPx { r: 5, s: 2 }
        );
        assert_eq!(
            classify_family(&dw(5).unwrap()),
            Classification::Dw { m: 5 }
        );
    }

    #[test]
    fn coincidences_resolve_by_match_order() {
        // The m = 4 member coincides with C(6,1); the window family is
        // tried first.
        assert_eq!(
            classify_family(&dw(4).unwrap()),
            Classification::Px { r: 6, s: 1 }
        );
        // K_{3,3} is sporadic before it is anything else.
        assert_eq!(
            classify_family(&families::complete_multipartite(&[3, 3]).unwrap()),
            Classification::Sporadic(SporadicId::Lambda2)
        );
    }

    #[test]
    fn non_members_fall_through() {
        assert_eq!(classify_family(&prism(6).unwrap()), Classification::None);
        assert_eq!(
            classify_family(&complete(5).unwrap()),
            Classification::Sporadic(SporadicId::Psi1)
        );
        assert_eq!(classify_family(&complete(6).unwrap()), Classification::None);
    }
}
