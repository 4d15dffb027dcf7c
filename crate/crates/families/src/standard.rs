//! Stock graph constructors: complete and multipartite graphs, Kneser
//! graphs, prisms, Möbius ladders, hypercubes, circulants, and
//! generalized Petersen graphs.
//!
//! Every constructor numbers vertices deterministically so repeated calls
//! are bitwise identical.

use crate::FamilyError;
use graphcore::Graph;

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameters("need n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Complete multipartite graph with the given part sizes. Vertices are
/// numbered part by part in the order given.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, FamilyError> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(FamilyError::BadParameters(
            "need at least two nonempty parts".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (idx, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(idx, p));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// `K_{n,n}` minus a perfect matching: sides `{0..n}` and `{n..2n}`,
/// with `u ~ n + v` for all `u != v`. Connected and (n-1)-valent for
/// `n >= 3`.
pub fn complete_bipartite_minus_matching(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParameters("need n >= 2".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                edges.push((u, n + v));
            }
        }
    }
    Ok(Graph::from_edges(2 * n, &edges)?)
}

/// Lexicographically ordered `k`-subsets of `{0..n}`.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Kneser graph `K(n, k)`: vertices are the `k`-subsets of an `n`-set in
/// lexicographic order, adjacent when disjoint. Requires `n >= 2k` so the
/// graph has edges.
pub fn kneser(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if k == 0 || n < 2 * k {
        return Err(FamilyError::BadParameters(format!(
            "kneser needs 1 <= k <= n/2, got n={n} k={k}"
        )));
    }
    let subsets = k_subsets(n, k);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | (1 << x)))
        .collect();
    let mut edges = Vec::new();
    for i in 0..masks.len() {
        for j in (i + 1)..masks.len() {
            if masks[i] & masks[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::from_edges(masks.len(), &edges)?;
    let labels = subsets
        .iter()
        .map(|s| {
            let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    g.set_labels(labels)?;
    Ok(g)
}

/// Prism (circular ladder) on `2n` vertices: two `n`-cycles `2x` and
/// `2x + 1` joined by rungs `{2x, 2x+1}`. 3-valent for `n >= 3`.
pub fn prism(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParameters("need n >= 3".into()));
    }
    let mut edges = Vec::new();
    for x in 0..n {
        let y = (x + 1) % n;
        edges.push((2 * x, 2 * y));
        edges.push((2 * x + 1, 2 * y + 1));
        edges.push((2 * x, 2 * x + 1));
    }
    Ok(Graph::from_edges(2 * n, &edges)?)
}

/// Möbius ladder on `2n` vertices: the cycle `0, 1, ..., 2n-1` plus all
/// antipodal chords `{x, x+n}`. Equivalently `Cay(Z_{2n}, {1, -1, n})`;
/// `n = 2` degenerates to `K_4`.
pub fn moebius(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(FamilyError::BadParameters("need n >= 2".into()));
    }
    circulant(2 * n, &[1, n])
}

/// `d`-dimensional hypercube: vertices are bitmasks `0..2^d`, adjacent
/// when they differ in exactly one bit.
pub fn hypercube(d: usize) -> Result<Graph, FamilyError> {
    if d == 0 || d > 20 {
        return Err(FamilyError::BadParameters("need 1 <= d <= 20".into()));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for b in 0..d {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Circulant graph `Cay(Z_n, S ∪ -S)` for a connection set given by
/// residues in `1..n`. The set is symmetrized automatically; `0` and
/// repeated residues are rejected.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph, FamilyError> {
    if n < 3 || connections.is_empty() {
        return Err(FamilyError::BadParameters(
            "need n >= 3 and a nonempty connection set".into(),
        ));
    }
    let mut set = std::collections::BTreeSet::new();
    for &c in connections {
        let c = c % n;
        if c == 0 {
            return Err(FamilyError::BadParameters(
                "connection 0 (mod n) is a loop".into(),
            ));
        }
        set.insert(c);
        set.insert(n - c);
    }
    let mut edges = Vec::new();
    for x in 0..n {
        for &c in &set {
            let y = (x + c) % n;
            if x < y {
                edges.push((x, y));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Generalized Petersen graph `GP(n, k)`: outer cycle `2x`, inner
/// vertices `2x + 1` with spokes `{2x, 2x+1}` and inner edges
/// `{2x+1, 2(x+k)+1}`. Requires `n >= 3` and `1 <= k < n/2`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(FamilyError::BadParameters(format!(
            "generalized Petersen needs n >= 3 and 1 <= k < n/2, got n={n} k={k}"
        )));
    }
    let mut edges = Vec::new();
    for x in 0..n {
        edges.push((2 * x, 2 * ((x + 1) % n)));
        edges.push((2 * x, 2 * x + 1));
        edges.push((2 * x + 1, 2 * ((x + k) % n) + 1));
    }
    Ok(Graph::from_edges(2 * n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_multipartite() {
        let k5 = complete(5).unwrap();
        assert_eq!(k5.n(), 5);
        assert!(k5.is_k_regular(4));
        assert_eq!(k5.edges().len(), 10);

        let k33 = complete_multipartite(&[3, 3]).unwrap();
        assert!(k33.is_k_regular(3));
        assert_eq!(k33.edges().len(), 9);
        assert!(k33.bipartition().is_some());

        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert!(k222.is_k_regular(4));
        assert_eq!(k222.edges().len(), 12);
    }

    #[test]
    fn bipartite_minus_matching() {
        let g = complete_bipartite_minus_matching(5).unwrap();
        assert_eq!(g.n(), 10);
        assert!(g.is_k_regular(4));
        assert!(g.is_connected());
        assert!(g.bipartition().is_some());
        // The removed matching pairs u with n + u.
        for u in 0..5 {
            assert!(!g.has_edge(u, 5 + u));
        }
    }

    #[test]
    fn kneser_graphs() {
        // K(5,2) is the Petersen graph.
        let pet = kneser(5, 2).unwrap();
        assert_eq!(pet.n(), 10);
        assert!(pet.is_k_regular(3));
        assert!(pet.is_connected());
        assert_eq!(pet.labels().unwrap()[0], "{0,1}");

        // K(7,3): 35 vertices, valency C(4,3) = 4.
        let k73 = kneser(7, 3).unwrap();
        assert_eq!(k73.n(), 35);
        assert!(k73.is_k_regular(4));
        assert!(k73.is_connected());

        assert!(kneser(4, 2).is_err() || kneser(4, 2).unwrap().n() == 6);
    }

    #[test]
    fn prisms_and_moebius() {
        for n in 3..=8 {
            let p = prism(n).unwrap();
            assert_eq!(p.n(), 2 * n);
            assert!(p.is_k_regular(3));
            assert!(p.is_connected());

            let m = moebius(n).unwrap();
            assert_eq!(m.n(), 2 * n);
            assert!(m.is_k_regular(3));
            assert!(m.is_connected());
        }
        // The 3-prism is K_3 x K_2; the Möbius ladder M_3 = Cay(Z_6,{1,5,3})
        // is K_{3,3} (odd cycle positions vs even).
        let m3 = moebius(3).unwrap();
        assert!(m3.bipartition().is_some());
    }

    #[test]
    fn hypercubes() {
        for d in 1..=5 {
            let q = hypercube(d).unwrap();
            assert_eq!(q.n(), 1 << d);
            assert!(q.is_k_regular(d));
            assert!(q.is_connected());
            assert!(q.bipartition().is_some());
        }
        // Q3 is also the 4-prism.
        assert_eq!(hypercube(3).unwrap().n(), prism(4).unwrap().n());
    }

    #[test]
    fn circulants() {
        let c = circulant(13, &[1, 5]).unwrap();
        assert!(c.is_k_regular(4));
        assert!(c.is_connected());
        // Symmetrization: passing {1,12} gives the plain 13-cycle.
        let cy = circulant(13, &[1, 12]).unwrap();
        assert!(cy.is_k_regular(2));
        assert!(circulant(6, &[6]).is_err());
        assert!(circulant(6, &[3]).unwrap().is_k_regular(1));
    }

    #[test]
    fn petersen_family() {
        let gp = generalized_petersen(5, 2).unwrap();
        assert_eq!(gp.n(), 10);
        assert!(gp.is_k_regular(3));
        // GP(5,2) is the Petersen graph: girth 5, so no 4-cycles through
        // any spoke; cheap sanity check via triangle-freeness.
        for (u, v) in gp.edges() {
            for w in gp.neighbors(u) {
                assert!(!(gp.has_edge(*w, v) && *w != v));
            }
        }
        assert!(generalized_petersen(6, 3).is_err());
        let desargues = generalized_petersen(10, 3).unwrap();
        assert!(desargues.bipartition().is_some());
    }
}
