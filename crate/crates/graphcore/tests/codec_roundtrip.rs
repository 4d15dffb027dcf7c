//! Randomised round-trip and invariance checks for the codecs and the
//! structural operations.

use graphcore::{Digraph, Graph};
use perm::Permutation;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p_num: u32, p_den: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_ratio(p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn graph6_round_trip_over_seeded_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6ca7);
    for _ in 0..500 {
        let n = rng.gen_range(0..40);
        let g = random_graph(&mut rng, n, 1, 2);
        let s = g.to_graph6();
        let back = Graph::from_graph6(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_graph6(), s, "re-encode must be byte-identical");
    }
}

#[test]
fn digraph6_round_trip_over_seeded_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd16a);
    for _ in 0..300 {
        let n = rng.gen_range(1..25);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.gen_ratio(1, 3) {
                    arcs.push((u, v));
                }
            }
        }
        let d = Digraph::from_arcs(n, &arcs).unwrap();
        let s = d.to_digraph6();
        assert_eq!(Digraph::from_digraph6(&s).unwrap(), d);
    }
}

#[test]
fn double_cover_is_bipartite_and_degree_doubling_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    for _ in 0..100 {
        let n = rng.gen_range(1..15);
        let g = random_graph(&mut rng, n, 1, 2);
        let cover = g.bipartite_double_cover();
        assert_eq!(cover.n(), 2 * g.n());
        assert_eq!(cover.edge_count(), 2 * g.edge_count());
        assert!(cover.is_bipartite());
        for v in 0..g.n() {
            assert_eq!(cover.degree(2 * v), g.degree(v));
            assert_eq!(cover.degree(2 * v + 1), g.degree(v));
        }
        // The deck swap (v,0) ↔ (v,1) is always an automorphism.
        let swap =
            Permutation::from_images((0..2 * g.n()).map(|x| x ^ 1).collect::<Vec<_>>()).unwrap();
        assert!(cover.is_automorphism(&swap));
    }
}

proptest! {
    #[test]
    fn relabelling_preserves_automorphism_status(
        seed in 0u64..1000,
        n in 2usize..10,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 1, 2);
        // A random relabelling conjugates the edge set consistently.
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        let p = Permutation::from_images(images).unwrap();
        let h = g.apply_perm(&p).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(p.apply(u), p.apply(v)));
        }
    }

    #[test]
    fn twins_share_neighbourhoods(seed in 0u64..500, n in 2usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, 1, 3);
        for (u, v) in g.twin_vertices() {
            prop_assert_eq!(g.neighbors(u), g.neighbors(v));
            prop_assert!(!g.has_edge(u, v));
            // Swapping a twin pair is an automorphism.
            let swap = Permutation::from_cycles(n, &[vec![u, v]]).unwrap();
            prop_assert!(g.is_automorphism(&swap));
        }
    }
}
