//! Transitivity profile of a group acting on a graph: single-orbit tests
//! on vertices, edges, arcs, and 2-arcs, plus the derived half-arc flag
//! and the orientation induced by a half-arc-transitive action.

use crate::SymmetryError;
use graphcore::{Digraph, Graph};
use perm::PermGroup;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityProfile {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub two_arc_transitive: bool,
    /// Vertex- and edge- but not arc-transitive.
    pub half_arc_transitive: bool,
}

/// Breadth-first orbit closure of `start` inside `universe` under the
/// generator images given by `step`; returns the orbit size.
fn orbit_size<T, F>(universe_len: usize, start: T, gens: usize, step: F) -> usize
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, usize) -> T,
{
    let mut seen: HashSet<T> = HashSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(item) = queue.pop() {
        for gi in 0..gens {
            let img = step(&item, gi);
            if seen.insert(img.clone()) {
                queue.push(img);
            }
        }
        if seen.len() == universe_len {
            break;
        }
    }
    seen.len()
}

/// Profile of `group` acting on `g`. The group must consist of
/// automorphisms of `g` (the caller usually passes the full group from
/// the search, or one of a family's presented groups).
pub fn transitivity_profile(
    g: &Graph,
    group: &PermGroup,
) -> Result<TransitivityProfile, SymmetryError> {
    if group.degree() != g.n() {
        return Err(SymmetryError::DegreeMismatch {
            group: group.degree(),
            graph: g.n(),
        });
    }
    debug_assert!(group.generators().iter().all(|p| g.is_automorphism(p)));

    let gens = group.generators();
    let vertex_transitive = group.is_transitive();

    let edges = g.edges();
    let edge_transitive = !edges.is_empty() && {
        let norm = |(u, v): (usize, usize)| if u <= v { (u, v) } else { (v, u) };
        orbit_size(edges.len(), edges[0], gens.len(), |&(u, v), gi| {
            norm((gens[gi].apply(u), gens[gi].apply(v)))
        }) == edges.len()
    };

    let arcs = g.arcs();
    let arc_transitive = !arcs.is_empty() && {
        orbit_size(arcs.len(), arcs[0], gens.len(), |&(u, v), gi| {
            (gens[gi].apply(u), gens[gi].apply(v))
        }) == arcs.len()
    };

    let two_arcs = g.two_arcs();
    let two_arc_transitive = !two_arcs.is_empty() && {
        orbit_size(two_arcs.len(), two_arcs[0], gens.len(), |&(u, v, w), gi| {
            (gens[gi].apply(u), gens[gi].apply(v), gens[gi].apply(w))
        }) == two_arcs.len()
    };

    Ok(TransitivityProfile {
        vertex_transitive,
        edge_transitive,
        arc_transitive,
        two_arc_transitive,
        half_arc_transitive: vertex_transitive && edge_transitive && !arc_transitive,
    })
}

/// The orientation induced by a half-arc-transitive action: the arc
/// orbits pair up `{(u,v), (v,u)}`-wise into exactly two orbits, and the
/// orbit of the lexicographically least arc is returned as a digraph.
///
/// Errors when the action is not half-arc-transitive on `g`.
pub fn orientation_digraph(g: &Graph, group: &PermGroup) -> Result<Digraph, SymmetryError> {
    let profile = transitivity_profile(g, group)?;
    if !profile.half_arc_transitive {
        return Err(SymmetryError::Inapplicable(
            "orientation needs a vertex- and edge- but not arc-transitive action".into(),
        ));
    }
    let arcs = g.arcs();
    let least = *arcs.iter().min().expect("edge-transitive graph has arcs");
    let gens = group.generators();

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut queue = vec![least];
    seen.insert(least);
    while let Some((u, v)) = queue.pop() {
        for p in gens {
            let img = (p.apply(u), p.apply(v));
            if seen.insert(img) {
                queue.push(img);
            }
        }
    }
    // Half-arc-transitivity: the orbit covers one arc per edge, never both.
    if seen.len() * 2 != arcs.len() || seen.iter().any(|&(u, v)| seen.contains(&(v, u))) {
        return Err(SymmetryError::Inapplicable(
            "arc orbit of the least arc is not an orientation".into(),
        ));
    }
    let mut oriented: Vec<(usize, usize)> = seen.into_iter().collect();
    oriented.sort_unstable();
    Ok(Digraph::from_arcs(g.n(), &oriented)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use autsearch::automorphism_group;
    use families::{sporadic, vec_px, SporadicId};

    #[test]
    fn petersen_is_two_arc_transitive() {
        let pet = sporadic(SporadicId::Lambda4).unwrap();
        let (aut, _) = automorphism_group(&pet);
        let p = transitivity_profile(&pet, &aut).unwrap();
        assert!(p.vertex_transitive);
        assert!(p.edge_transitive);
        assert!(p.arc_transitive);
        assert!(p.two_arc_transitive);
        assert!(!p.half_arc_transitive);
    }

    #[test]
    fn window_graph_profiles_under_presented_groups() {
        let bundle = vec_px(5, 2).unwrap();
        let (aut, _) = automorphism_group(&bundle.graph);

        // Full group: arc-transitive but not 2-arc-transitive (r != 4).
        let full = transitivity_profile(&bundle.graph, &aut).unwrap();
        assert!(full.arc_transitive);
        assert!(!full.two_arc_transitive);

        // H+ = K<rho>: vertex- and edge- but not arc-transitive; its
        // orientation recovers the defining digraph exactly.
        let half = transitivity_profile(&bundle.graph, &bundle.h_plus).unwrap();
        assert!(half.half_arc_transitive);
        let oriented = orientation_digraph(&bundle.graph, &bundle.h_plus).unwrap();
        assert_eq!(oriented, bundle.digraph);

        // K alone is not even vertex-transitive.
        let k_profile = transitivity_profile(&bundle.graph, &bundle.k_group).unwrap();
        assert!(!k_profile.vertex_transitive);
    }

    #[test]
    fn star_graph_is_edge_but_not_vertex_transitive() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (aut, _) = automorphism_group(&star);
        let p = transitivity_profile(&star, &aut).unwrap();
        assert!(!p.vertex_transitive);
        assert!(p.edge_transitive);
        assert!(!p.arc_transitive);
        assert!(!p.half_arc_transitive);
    }

    #[test]
    fn orientation_requires_half_arc_transitivity() {
        let pet = sporadic(SporadicId::Lambda4).unwrap();
        let (aut, _) = automorphism_group(&pet);
        assert!(orientation_digraph(&pet, &aut).is_err());
    }
}
