//! Vertex splitting of a 2-in 2-out orientation into a 3-valent graph, and
//! the inverse merge along a matching.
//!
//! Splitting sends vertex `v` to the pair `v₊ = 2v`, `v₋ = 2v + 1`, joins
//! each pair by an edge, and adds `{u₊, v₋}` for every arc `(u, v)`. Merging
//! contracts a perfect matching back; `derive_merge_matching` recovers the
//! canonical matching from a vertex-transitive group whose vertex
//! stabilisers have orbit pattern 2+1 on neighbourhoods.

use crate::{vec_px, FamilyError, PxBundle};
use graphcore::{Digraph, Graph};
use perm::{PermGroup, Permutation};

/// A perfect matching, stored as pairs `(min, max)` sorted by first entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
    n: usize,
}

impl Matching {
    /// Validates that the pairs partition `{0, .., n-1}`.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, FamilyError> {
        let mut seen = vec![false; n];
        let mut normalized = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b || a >= n || b >= n || seen[a] || seen[b] {
                return Err(FamilyError::NotPerfectMatching);
            }
            seen[a] = true;
            seen[b] = true;
            normalized.push((a.min(b), a.max(b)));
        }
        if seen.iter().any(|&s| !s) {
            return Err(FamilyError::NotPerfectMatching);
        }
        normalized.sort_unstable();
        Ok(Matching {
            pairs: normalized,
            n,
        })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The partner of `v`.
    pub fn partner(&self, v: usize) -> usize {
        // pairs are sorted by min endpoint; binary search on either slot.
        for &(a, b) in &self.pairs {
            if a == v {
                return b;
            }
            if b == v {
                return a;
            }
        }
        unreachable!("matching is perfect")
    }
}

/// Splits a 2-in 2-out orientation into a 3-valent graph; see module docs
/// for the vertex convention. Labels become `label+` / `label-` when the
/// caller attaches them via [`split_px`].
pub fn split_orientation(d: &Digraph) -> Result<Graph, FamilyError> {
    if !d.is_oriented() {
        return Err(FamilyError::NotOriented);
    }
    if !d.is_k_in_out_regular(2) {
        return Err(FamilyError::NotTwoInTwoOutRegular);
    }
    let mut edges = Vec::with_capacity(3 * d.n());
    for v in 0..d.n() {
        edges.push((2 * v, 2 * v + 1));
    }
    for (u, v) in d.arcs() {
        edges.push((2 * u, 2 * v + 1));
    }
    let g = Graph::from_edges(2 * d.n(), &edges)?;
    debug_assert!(g.is_k_regular(3));
    Ok(g)
}

/// Lifts a symmetry of the orientation to the split graph: an
/// orientation-preserving `g` maps `v± → (v^g)±`; an arc-reversing `g` maps
/// `v± → (v^g)∓` (the only sign choice that preserves the cross edges).
/// Anything else is rejected.
pub fn split_action(d: &Digraph, g: &Permutation) -> Result<Permutation, FamilyError> {
    let preserving = d.is_automorphism(g);
    let reversing = d.is_arc_reversing(g);
    if !preserving && !reversing {
        return Err(FamilyError::NotOrientationSymmetry);
    }
    let flip = usize::from(reversing && !preserving);
    let images: Vec<usize> = (0..2 * d.n())
        .map(|x| 2 * g.apply(x / 2) + ((x % 2) ^ flip))
        .collect();
    Ok(Permutation::from_images(images)?)
}

/// The split of `vec C(r, s)` together with its base bundle.
#[derive(Clone, Debug)]
pub struct SplitPx {
    pub bundle: PxBundle,
    pub graph: Graph,
}

impl SplitPx {
    /// The canonical lift of `g ∈ H` to the split graph (see
    /// [`split_action`]).
    pub fn lift(&self, g: &Permutation) -> Result<Permutation, FamilyError> {
        split_action(&self.bundle.digraph, g)
    }

    /// The matching of split pairs `{v₊, v₋}`.
    pub fn split_matching(&self) -> Matching {
        let pairs: Vec<(usize, usize)> = (0..self.bundle.graph.n())
            .map(|v| (2 * v, 2 * v + 1))
            .collect();
        Matching::new(self.graph.n(), &pairs).expect("split pairs form a matching")
    }
}

fn split_with_labels(digraph: &Digraph, base: &Graph) -> Result<Graph, FamilyError> {
    let mut graph = split_orientation(digraph)?;
    let base_labels = base.labels().expect("base carries labels");
    let mut labels = Vec::with_capacity(2 * base_labels.len());
    for l in base_labels {
        labels.push(format!("{l}+"));
        labels.push(format!("{l}-"));
    }
    graph.set_labels(labels)?;
    Ok(graph)
}

/// Builds `S(C(r, s))`, the split of `vec C(r, s)`, with `±`-suffixed
/// labels.
pub fn split_px(r: usize, s: usize) -> Result<SplitPx, FamilyError> {
    let bundle = vec_px(r, s)?;
    let graph = split_with_labels(&bundle.digraph, &bundle.graph)?;
    Ok(SplitPx { bundle, graph })
}

/// Just the graph of `S(C(r, s))`, skipping the subgroup closures of the
/// base bundle (see [`crate::px_graphs`]).
pub fn split_px_graph(r: usize, s: usize) -> Result<Graph, FamilyError> {
    let (digraph, base) = crate::px_graphs(r, s)?;
    split_with_labels(&digraph, &base)
}

/// Contracts a perfect matching of a 3-valent graph. Blocks are numbered by
/// the sorted order of their minimal vertices; block `b` of the quotient
/// maps from `matching.pairs()[b]`. Every matching pair must be an edge,
/// no two blocks may be joined by more than one cross edge, and the result
/// must be 4-valent.
pub fn merge_matching(g: &Graph, matching: &Matching) -> Result<(Graph, Vec<usize>), FamilyError> {
    if !g.is_k_regular(3) {
        return Err(FamilyError::NotThreeValent);
    }
    if matching.n() != g.n() {
        return Err(FamilyError::NotPerfectMatching);
    }
    let mut block_of = vec![0usize; g.n()];
    for (b, &(u, v)) in matching.pairs().iter().enumerate() {
        if !g.has_edge(u, v) {
            return Err(FamilyError::NotMatchingEdge(u, v));
        }
        block_of[u] = b;
        block_of[v] = b;
    }
    let n_blocks = matching.pairs().len();
    let mut quotient_edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (block_of[u], block_of[v]);
        if a == b {
            continue; // the matching edge itself
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(FamilyError::MultiEdgeCollapse(key.0, key.1));
        }
        quotient_edges.push(key);
    }
    let quotient = Graph::from_edges(n_blocks, &quotient_edges)?;
    if !quotient.is_k_regular(4) {
        return Err(FamilyError::NotFourValent);
    }
    Ok((quotient, block_of))
}

/// Recovers the canonical matching of a 3-valent graph from a
/// vertex-transitive `group ≤ Aut(g)`: at each vertex `w` the stabiliser
/// orbits on `Γ(w)` must split 2+1, and `w` is matched to the neighbour in
/// the singleton orbit. The orbit pattern is computed at one base vertex
/// and transported along a transversal (the pattern is
/// conjugation-covariant), then the pairing is re-validated globally.
pub fn derive_merge_matching(g: &Graph, group: &PermGroup) -> Result<Matching, FamilyError> {
    if !g.is_k_regular(3) {
        return Err(FamilyError::NotThreeValent);
    }
    if !g.is_connected() {
        return Err(FamilyError::NotConnected);
    }
    if group.degree() != g.n() {
        return Err(FamilyError::GeneratorNotAutomorphism);
    }
    if !group.generators().iter().all(|p| g.is_automorphism(p)) {
        return Err(FamilyError::GeneratorNotAutomorphism);
    }
    let transversal = group.orbit_transversal(0);
    if transversal.len() != g.n() {
        return Err(FamilyError::NotVertexTransitive);
    }

    let stab = group.point_stabilizer(0)?;
    let neighbors = g.neighbors(0).to_vec();
    // Stabiliser orbits partition Γ(0) (automorphisms fixing 0 preserve it).
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut remaining = neighbors.clone();
    while let Some(&nb) = remaining.first() {
        let orbit = stab.orbit_of(nb);
        debug_assert!(orbit.iter().all(|v| neighbors.contains(v)));
        remaining.retain(|v| !orbit.contains(v));
        parts.push(orbit);
    }
    parts.sort_by_key(|p| p.len());
    let sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
    if sizes != [1, 2] {
        return Err(FamilyError::OrbitStructure { sizes });
    }
    let base_partner = parts[0][0];

    let mut partner = vec![usize::MAX; g.n()];
    for (w, t) in &transversal {
        partner[*w] = t.apply(base_partner);
    }
    let mut pairs = Vec::with_capacity(g.n() / 2);
    for w in 0..g.n() {
        let p = partner[w];
        if partner[p] != w {
            return Err(FamilyError::NotInvolutive(w));
        }
        if w < p {
            pairs.push((w, p));
        }
    }
    Matching::new(g.n(), &pairs)
}
