use crate::{Graph, GraphError};
use perm::Permutation;

/// A loop-free digraph on `{0, .., n-1}` with sorted out- and in-neighbour
/// lists. A pair of opposite arcs is allowed in general, but the orientation
/// workflows check [`is_oriented`](Self::is_oriented) first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
    ins: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut out = vec![Vec::new(); n];
        let mut ins = vec![Vec::new(); n];
        for &(u, v) in arcs {
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
            out[u].push(v);
            ins[v].push(u);
        }
        for list in out.iter_mut().chain(ins.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Digraph { out, ins })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|l| l.len()).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.ins[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.ins[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Arcs `(u, v)`, lexicographically sorted.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for (u, list) in self.out.iter().enumerate() {
            for &v in list {
                arcs.push((u, v));
            }
        }
        arcs
    }

    /// No digons: at most one of `(u,v)`, `(v,u)` present, i.e. the digraph
    /// is an orientation of its underlying graph.
    pub fn is_oriented(&self) -> bool {
        self.arcs().iter().all(|&(u, v)| !self.has_arc(v, u))
    }

    pub fn is_k_in_out_regular(&self, k: usize) -> bool {
        (0..self.n()).all(|v| self.out_degree(v) == k && self.in_degree(v) == k)
    }

    /// Forgets orientation; opposite arc pairs collapse to one edge.
    pub fn underlying_graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.arcs()).expect("arcs are valid edges")
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            out: self.ins.clone(),
            ins: self.out.clone(),
        }
    }

    /// Weak connectivity (of the underlying graph).
    pub fn is_connected(&self) -> bool {
        self.underlying_graph().is_connected()
    }

    /// Whether `p` maps arcs to arcs.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.n() {
            return false;
        }
        self.out.iter().enumerate().all(|(u, list)| {
            let pu = p.apply(u);
            list.iter().all(|&v| self.has_arc(pu, p.apply(v)))
        })
    }

    /// Whether `p` maps every arc to a reversed arc (an anti-automorphism).
    pub fn is_arc_reversing(&self, p: &Permutation) -> bool {
        if p.degree() != self.n() {
            return false;
        }
        self.out.iter().enumerate().all(|(u, list)| {
            let pu = p.apply(u);
            list.iter().all(|&v| self.has_arc(p.apply(v), pu))
        })
    }

    /// Relabels by `p`: vertex `v` becomes `p(v)`.
    pub fn apply_perm(&self, p: &Permutation) -> Result<Digraph, GraphError> {
        if p.degree() != self.n() {
            return Err(GraphError::PermDegreeMismatch {
                got: p.degree(),
                expected: self.n(),
            });
        }
        let arcs: Vec<(usize, usize)> = self
            .arcs()
            .into_iter()
            .map(|(u, v)| (p.apply(u), p.apply(v)))
            .collect();
        Digraph::from_arcs(self.n(), &arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn construction_and_degrees() {
        let d = directed_cycle(4);
        assert_eq!(d.arc_count(), 4);
        assert!(d.is_k_in_out_regular(1));
        assert!(d.is_oriented());
        assert!(d.has_arc(0, 1));
        assert!(!d.has_arc(1, 0));
        assert!(Digraph::from_arcs(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn digon_is_not_oriented() {
        let d = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(!d.is_oriented());
        assert_eq!(d.underlying_graph().edge_count(), 1);
    }

    #[test]
    fn reverse_swaps_neighbourhoods() {
        let d = directed_cycle(5);
        let r = d.reverse();
        assert!(r.has_arc(1, 0));
        assert_eq!(r.reverse(), d);
        assert_eq!(d.underlying_graph(), r.underlying_graph());
    }

    #[test]
    fn automorphisms_respect_orientation() {
        let d = directed_cycle(4);
        let rot = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let flip = Permutation::from_cycles(4, &[vec![1, 3]]).unwrap();
        assert!(d.is_automorphism(&rot));
        assert!(!d.is_automorphism(&flip));
        assert!(d.is_arc_reversing(&flip));
        assert!(!d.is_arc_reversing(&rot));
        assert_eq!(d.apply_perm(&rot).unwrap(), d);
    }
}
