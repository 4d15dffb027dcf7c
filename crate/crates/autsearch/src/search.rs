//! Backtracking search over individualization-refinement trees, yielding
//! the automorphism group and a canonical form in one pass.
//!
//! Every node carries an equitable ordered partition; branching picks the
//! first smallest non-singleton cell and individualizes each of its
//! vertices in turn. A discrete partition reads off a relabelling, whose
//! relabelled adjacency matrix is the leaf certificate.
//!
//! Two reference leaves steer the pruning, in the usual style:
//!
//! * the *first* leaf: any later leaf with the same node-invariant path
//!   and equal certificate yields an automorphism;
//! * the *best* leaf: the leaf minimizing (invariant path, certificate)
//!   lexicographically defines the canonical labelling. Both components
//!   are relabelling-invariant, so isomorphic graphs agree on the result.
//!
//! A branch is cut when its invariant path has diverged from the first
//! leaf's and is already lexicographically above the best leaf's. At
//! every node, candidates lying in the orbit of an already-explored
//! sibling are skipped, where the orbits are those of the subgroup
//! generated by the recorded automorphisms that fix the node's
//! individualized prefix pointwise (minimum-cell-representatives
//! pruning). Such a sibling's subtree replays an explored subtree up to
//! an automorphism, so it can add neither new generators beyond the
//! recorded conjugates nor a better canonical leaf.

use crate::refine::{self, Cells};
use graphcore::Graph;
use perm::{PermGroup, Permutation};
use std::cmp::Ordering;
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Search-tree nodes visited (root included).
    pub nodes: u64,
    /// Discrete partitions reached.
    pub leaves: u64,
    /// Automorphisms recorded as generators.
    pub generators_found: u64,
    /// Branches skipped by orbit pruning.
    pub orbit_prunes: u64,
    /// Branches cut by the invariant-path comparison.
    pub invariant_prunes: u64,
}

/// Result of a full search: the automorphism group, the canonical
/// relabelling (vertex `v` of the input becomes `labelling(v)`), the
/// relabelled graph itself (labels dropped), and search statistics.
pub struct SearchOutcome {
    pub group: PermGroup,
    pub canonical_labelling: Permutation,
    pub canonical: Graph,
    pub stats: SearchStats,
}

/// Tracks how the current path compares to the best leaf's path.
#[derive(Clone, Copy, PartialEq, Eq)]
enum BestCmp {
    /// Prefix equal to (or currently defining) the best path.
    Track,
    /// Strictly above the best path; useless for canonicity.
    Above,
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    words_per_row: usize,

    first_path: Vec<u64>,
    first_cert: Option<Vec<u64>>,
    first_lambda: Option<Permutation>,

    best_path: Vec<u64>,
    best_cert: Option<Vec<u64>>,
    best_lambda: Option<Permutation>,

    gens: Vec<Permutation>,
    seen: HashSet<Vec<usize>>,
    /// Individualized vertices on the path to the current node.
    path: Vec<usize>,

    stats: SearchStats,
}

/// Union-find over the vertex set under the recorded generators that fix
/// a given prefix pointwise; rebuilt lazily as generators accumulate.
struct OrbitPruner {
    parent: Vec<usize>,
    synced_gens: usize,
}

impl OrbitPruner {
    fn new(n: usize) -> Self {
        OrbitPruner {
            parent: (0..n).collect(),
            synced_gens: usize::MAX,
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Rebuilds if generators arrived since the last sync. Only the
    /// generators fixing `prefix` pointwise act; they generate a
    /// subgroup of the full prefix stabilizer, so the resulting orbits
    /// are (possibly finer than) the true ones — safe for pruning.
    fn sync(&mut self, gens: &[Permutation], prefix: &[usize]) {
        if self.synced_gens == gens.len() {
            return;
        }
        self.synced_gens = gens.len();
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i;
        }
        for g in gens {
            if prefix.iter().any(|&v| g.apply(v) != v) {
                continue;
            }
            for v in 0..self.parent.len() {
                let (rv, ri) = (self.find(v), self.find(g.apply(v)));
                if rv != ri {
                    self.parent[rv] = ri;
                }
            }
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Search {
            g,
            n,
            words_per_row: n.div_ceil(64).max(1),
            first_path: Vec::new(),
            first_cert: None,
            first_lambda: None,
            best_path: Vec::new(),
            best_cert: None,
            best_lambda: None,
            gens: Vec::new(),
            seen: HashSet::new(),
            path: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    fn record_generator(&mut self, a: Permutation) {
        debug_assert!(self.g.is_automorphism(&a));
        if !self.seen.insert(a.images().to_vec()) {
            return;
        }
        self.stats.generators_found += 1;
        self.gens.push(a);
    }

    /// Row-major adjacency bitmap of the graph relabelled by `lambda`
    /// (as images): vertex `v` becomes `lambda[v]`.
    fn certificate(&self, lambda: &[usize]) -> Vec<u64> {
        let mut cert = vec![0u64; self.n * self.words_per_row];
        for u in 0..self.n {
            let lu = lambda[u];
            for &w in self.g.neighbors(u) {
                let lw = lambda[w];
                cert[lu * self.words_per_row + lw / 64] |= 1 << (lw % 64);
            }
        }
        cert
    }

    fn lambda_of(&self, cells: &Cells) -> Vec<usize> {
        let mut lambda = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            lambda[cell[0]] = pos;
        }
        lambda
    }

    fn handle_leaf(&mut self, cells: &Cells, first_eq: bool, best: BestCmp) {
        self.stats.leaves += 1;
        let lambda = self.lambda_of(cells);
        let cert = self.certificate(&lambda);
        let perm = Permutation::from_images(lambda).expect("discrete partition is a bijection");

        if self.first_cert.is_none() {
            self.first_cert = Some(cert.clone());
            self.first_lambda = Some(perm.clone());
            self.best_cert = Some(cert);
            self.best_lambda = Some(perm);
            return;
        }

        if first_eq && self.first_cert.as_deref() == Some(cert.as_slice()) {
            let a = perm.compose(&self.first_lambda.as_ref().unwrap().inverse());
            self.record_generator(a);
        }

        if best == BestCmp::Track {
            match &self.best_cert {
                None => {
                    self.best_cert = Some(cert);
                    self.best_lambda = Some(perm);
                }
                Some(bc) => match cert.cmp(bc) {
                    Ordering::Less => {
                        self.best_cert = Some(cert);
                        self.best_lambda = Some(perm);
                    }
                    Ordering::Equal => {
                        let a = perm.compose(&self.best_lambda.as_ref().unwrap().inverse());
                        self.record_generator(a);
                    }
                    Ordering::Greater => {}
                },
            }
        }
    }

    fn recurse(&mut self, cells: Cells, depth: usize, first_eq_in: bool, best_in: BestCmp) {
        self.stats.nodes += 1;
        let zeta = refine::invariant(self.g, &cells);

        let first_eq = if self.first_cert.is_none() {
            // Leftmost spine: defines the first reference path.
            self.first_path.push(zeta);
            true
        } else {
            first_eq_in && depth < self.first_path.len() && self.first_path[depth] == zeta
        };

        let best = match best_in {
            BestCmp::Above => BestCmp::Above,
            BestCmp::Track => {
                if self.best_path.len() <= depth {
                    self.best_path.push(zeta);
                    BestCmp::Track
                } else {
                    match zeta.cmp(&self.best_path[depth]) {
                        Ordering::Less => {
                            // Strictly better prefix: it supersedes the
                            // recorded best path and leaf outright.
                            self.best_path.truncate(depth);
                            self.best_path.push(zeta);
                            self.best_cert = None;
                            self.best_lambda = None;
                            BestCmp::Track
                        }
                        Ordering::Equal => BestCmp::Track,
                        Ordering::Greater => BestCmp::Above,
                    }
                }
            }
        };

        if !first_eq && best == BestCmp::Above {
            self.stats.invariant_prunes += 1;
            return;
        }

        if refine::is_discrete(&cells) {
            self.handle_leaf(&cells, first_eq, best);
            return;
        }

        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a splittable cell");
        let candidates = cells[target].clone();

        let mut pruner = OrbitPruner::new(self.n);
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            // Generators found in deeper subtrees widen the orbits as the
            // loop advances, so re-sync before every candidate.
            pruner.sync(&self.gens, &self.path);
            if explored.iter().any(|&w| pruner.same(w, v)) {
                self.stats.orbit_prunes += 1;
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let pos = refine::individualize(&mut child, v);
            refine::refine(self.g, &mut child, &[pos]);
            self.path.push(v);
            self.recurse(child, depth + 1, first_eq, best);
            self.path.pop();
        }
    }

    /// Raw search pass: canonical labelling plus the generator list,
    /// without the group closure (which costs more than the search for
    /// groups with long bases).
    fn run_raw(mut self) -> (Permutation, Graph, Vec<Permutation>, SearchStats) {
        if self.n == 0 {
            return (
                Permutation::identity(0),
                self.g.clone(),
                Vec::new(),
                self.stats,
            );
        }
        let mut cells: Cells = vec![(0..self.n).collect()];
        refine::refine(self.g, &mut cells, &[0]);
        self.recurse(cells, 0, true, BestCmp::Track);

        let lambda = self.best_lambda.take().expect("search reaches a leaf");
        let mut canonical = self
            .g
            .apply_perm(&lambda)
            .expect("labelling degree matches");
        canonical.clear_labels();
        (
            lambda,
            canonical,
            std::mem::take(&mut self.gens),
            self.stats,
        )
    }

    fn run(self) -> SearchOutcome {
        let n = self.n;
        let (lambda, canonical, gens, stats) = self.run_raw();
        let group = PermGroup::from_generators(n, gens).expect("automorphism generators are valid");
        SearchOutcome {
            group,
            canonical_labelling: lambda,
            canonical,
            stats,
        }
    }
}

/// Full search on `g`.
pub fn search(g: &Graph) -> SearchOutcome {
    Search::new(g).run()
}

/// Automorphism group of `g` with the statistics of the run.
pub fn automorphism_group(g: &Graph) -> (PermGroup, SearchStats) {
    let out = search(g);
    (out.group, out.stats)
}

/// Canonically relabelled copy of `g` (labels dropped) and the
/// relabelling that produced it. Isomorphic graphs yield identical
/// canonical graphs.
pub fn canonical_form(g: &Graph) -> (Graph, Permutation) {
    let (lambda, canonical, _, _) = Search::new(g).run_raw();
    (canonical, lambda)
}

/// An isomorphism `a -> b` (vertex `v` of `a` maps to `iso(v)` of `b`),
/// or `None` when the graphs are not isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ca, la) = canonical_form(a);
    let (cb, lb) = canonical_form(b);
    if ca != cb {
        return None;
    }
    let iso = la.compose(&lb.inverse());
    debug_assert!({
        let moved = a.apply_perm(&iso).expect("degree matches");
        moved.edges() == b.edges()
    });
    Some(iso)
}
