//! Exhaustive reference implementations for cross-checking the search.
//! Only usable at toy sizes; the hard cap keeps accidental misuse from
//! hanging a test run.

use graphcore::Graph;
use perm::Permutation;

const MAX_N: usize = 9;

/// Every automorphism of `g`, found by filtering all `n!` permutations.
/// Sorted by image vector for determinism. Panics above 9 vertices.
pub fn automorphisms_by_enumeration(g: &Graph) -> Vec<Permutation> {
    let n = g.n();
    assert!(
        n <= MAX_N,
        "exhaustive enumeration is capped at {MAX_N} vertices"
    );
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation::from_images(images.clone()).expect("valid by construction");
        if g.is_automorphism(&p) {
            out.push(p);
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    out
}

/// Lexicographic successor in place; false when `v` was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Isomorphism test by trying every bijection. Panics above 9 vertices.
pub fn isomorphic_by_enumeration(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    assert!(
        n <= MAX_N,
        "exhaustive enumeration is capped at {MAX_N} vertices"
    );
    if n == 0 {
        return true;
    }
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        let p = Permutation::from_images(images.clone()).expect("valid by construction");
        if a.apply_perm(&p).expect("degree matches").edges() == b.edges() {
            return true;
        }
        if !next_permutation(&mut images) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successor_walks_all_orderings() {
        let mut v = vec![0, 1, 2];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 1, 0]);
    }

    #[test]
    fn square_has_eight_automorphisms() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(automorphisms_by_enumeration(&c4).len(), 8);
    }
}
