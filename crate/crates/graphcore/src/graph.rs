use crate::GraphError;
use perm::Permutation;
use serde::{Deserialize, Serialize};

/// A finite simple undirected graph. Neighbour lists are sorted; vertex
/// labels are optional strings carried through relabellings and covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds from an edge list; duplicate edges collapse, loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All arcs (ordered edge endpoints), lexicographically sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                out.push((u, v));
            }
        }
        out
    }

    /// All 2-arcs `(u, v, w)` with `u ~ v ~ w` and `u ≠ w`, sorted.
    pub fn two_arcs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                for &w in &self.adj[v] {
                    if w != u {
                        out.push((u, v, w));
                    }
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    /// `Some(k)` when the graph is regular of valency `k`.
    pub fn regular_valency(&self) -> Option<usize> {
        let k = self.adj.first()?.len();
        self.is_k_regular(k).then_some(k)
    }

    /// Two-colouring by BFS: `Some(colours)` iff bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut colour: Vec<Option<u8>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(0);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in &self.adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(1 - cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The bipartite double cover: vertices `(v, i)` numbered `2v + i`,
    /// with `(u, 0) ~ (v, 1)` for every edge `{u, v}`. Connected exactly
    /// when the base is connected and non-bipartite. Labels, when present,
    /// become `label|0` and `label|1`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::with_capacity(2 * self.edge_count());
        for (u, v) in self.edges() {
            edges.push((2 * u, 2 * v + 1));
            edges.push((2 * v, 2 * u + 1));
        }
        let mut cover = Graph::from_edges(2 * n, &edges).expect("cover edges are valid");
        if let Some(labels) = &self.labels {
            let mut new_labels = Vec::with_capacity(2 * n);
            for l in labels {
                new_labels.push(format!("{l}|0"));
                new_labels.push(format!("{l}|1"));
            }
            cover.labels = Some(new_labels);
        }
        cover
    }

    /// Whether `p` maps edges to edges. Bijectivity plus edge preservation
    /// is enough on a finite simple graph.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n() {
            return false;
        }
        self.adj.iter().enumerate().all(|(u, list)| {
            let pu = p.apply(u);
            list.iter().all(|&v| self.has_edge(pu, p.apply(v)))
        })
    }

    /// Relabels by `p`: vertex `v` becomes `p(v)`; labels follow.
    pub fn apply_perm(&self, p: &Permutation) -> Result<Graph, GraphError> {
        if p.degree() != self.n() {
            return Err(GraphError::PermDegreeMismatch {
                got: p.degree(),
                expected: self.n(),
            });
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        let mut out = Graph::from_edges(self.n(), &edges)?;
        if let Some(labels) = &self.labels {
            let mut new_labels = vec![String::new(); self.n()];
            for (v, l) in labels.iter().enumerate() {
                new_labels[p.apply(v)] = l.clone();
            }
            out.labels = Some(new_labels);
        }
        Ok(out)
    }

    /// Pairs `u < v` with identical open neighbourhoods (necessarily
    /// non-adjacent in a simple graph), lexicographically sorted.
    pub fn twin_vertices(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in (u + 1)..self.n() {
                if self.adj[u] == self.adj[v] {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCountMismatch {
                got: labels.len(),
                expected: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    /// Adjacency rows as 64-bit-packed bitsets (used by the refinement and
    /// canonical-form code; contract is identical to `neighbors`).
    pub fn adjacency_bitrows(&self) -> Vec<Vec<u64>> {
        let words = self.n().div_ceil(64);
        let mut rows = vec![vec![0u64; words]; self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                rows[u][v / 64] |= 1 << (v % 64);
            }
        }
        rows
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson {
            n: self.n(),
            edges: self.edges(),
            labels: self.labels.clone(),
        })
        .expect("graph serialises")
    }

    pub fn from_json(s: &str) -> Result<Self, GraphError> {
        let parsed: GraphJson = serde_json::from_str(s).map_err(|_| GraphError::EmptyInput)?;
        let mut g = Graph::from_edges(parsed.n, &parsed.edges)?;
        if let Some(labels) = parsed.labels {
            g.set_labels(labels)?;
        }
        Ok(g)
    }
}
