//! The 4-valent family `C(r, s)` and its directed form `vec C(r, s)`.
//!
//! `vec C(r, 1)` has vertices `(x, i) ∈ Z_r × Z_2` with arcs
//! `(x, i) → (x+1, j)`; for `s ≥ 2` the vertices of `vec C(r, s)` are the
//! directed paths on `s` vertices of `vec C(r, 1)` ("windows"), and each arc
//! slides a window forward by one step. A window is recorded as its start
//! column `x` plus the sign vector `(i_0, .., i_{s-1})`.
//!
//! Vertex numbering: windows sort lexicographically by their sequence of
//! `C(r, 1)` vertex indices, where `(x, i)` has index `2x + i`.

use crate::FamilyError;
use graphcore::{Digraph, Graph};
use perm::{Fpr, PermGroup, Permutation};
use std::collections::HashMap;

/// `C(r, s)` with its directed form and the distinguished automorphisms and
/// subgroups: the sign-flip generators `tau[i]`, the rotation `rho`, the
/// reflection `sigma`, and the groups `K = ⟨τ_i⟩`, `H⁺ = K⟨ρ⟩`,
/// `H = K⟨ρ, σ⟩`.
#[derive(Clone, Debug)]
pub struct PxBundle {
    pub r: usize,
    pub s: usize,
    pub digraph: Digraph,
    pub graph: Graph,
    pub tau: Vec<Permutation>,
    pub rho: Permutation,
    pub sigma: Permutation,
    pub k_group: PermGroup,
    pub h_plus: PermGroup,
    pub h: PermGroup,
}

/// Window: start column plus sign bits (bit `j` is the sign at column
/// `x + j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Window {
    x: usize,
    signs: u32,
}

struct Layout {
    r: usize,
    s: usize,
    windows: Vec<Window>,
    index: HashMap<Window, usize>,
}

impl Layout {
    fn new(r: usize, s: usize) -> Self {
        let key = |w: &Window| -> Vec<usize> {
            (0..s)
                .map(|j| 2 * ((w.x + j) % r) + ((w.signs >> j) & 1) as usize)
                .collect()
        };
        let mut windows = Vec::with_capacity(r << s);
        for x in 0..r {
            for signs in 0..(1u32 << s) {
                windows.push(Window { x, signs });
            }
        }
        windows.sort_by_key(key);
        let index = windows.iter().enumerate().map(|(i, w)| (*w, i)).collect();
        Layout {
            r,
            s,
            windows,
            index,
        }
    }

    fn perm_from_map(&self, f: impl Fn(Window) -> Window) -> Permutation {
        let images: Vec<usize> = self.windows.iter().map(|&w| self.index[&f(w)]).collect();
        Permutation::from_images(images).expect("window maps are bijections")
    }

    fn label(&self, w: &Window) -> String {
        (0..self.s)
            .map(|j| format!("({},{})", (w.x + j) % self.r, (w.signs >> j) & 1))
            .collect()
    }
}

fn layout_for(r: usize, s: usize) -> Result<Layout, FamilyError> {
    if r < 3 || s == 0 || s > r - 1 {
        return Err(FamilyError::BadParameters(format!(
            "need r >= 3 and 1 <= s <= r-1, got r={r}, s={s}"
        )));
    }
    if s >= 31 {
        return Err(FamilyError::BadParameters(format!(
            "s={s} exceeds the supported window width"
        )));
    }
    Ok(Layout::new(r, s))
}

fn graphs_from_layout(layout: &Layout) -> Result<(Digraph, Graph), FamilyError> {
    let n = layout.windows.len();
    let (r, s) = (layout.r, layout.s);
    let mut arcs = Vec::with_capacity(2 * n);
    for (v, w) in layout.windows.iter().enumerate() {
        for j in 0..2u32 {
            let next = Window {
                x: (w.x + 1) % r,
                signs: (w.signs >> 1) | (j << (s - 1)),
            };
            arcs.push((v, layout.index[&next]));
        }
    }
    let digraph = Digraph::from_arcs(n, &arcs)?;
    let mut graph = digraph.underlying_graph();
    graph.set_labels(layout.windows.iter().map(|w| layout.label(w)).collect())?;
    Ok((digraph, graph))
}

/// Just the directed and undirected graphs of `vec C(r, s)`, skipping the
/// distinguished subgroups. The subgroup closures in [`vec_px`] cost far
/// more than the graphs for large `r`, so recognition and generation go
/// through this entry point.
pub fn px_graphs(r: usize, s: usize) -> Result<(Digraph, Graph), FamilyError> {
    graphs_from_layout(&layout_for(r, s)?)
}

/// Builds the full bundle for `vec C(r, s)` / `C(r, s)`.
/// Requires `r ≥ 3` and `1 ≤ s ≤ r - 1`.
pub fn vec_px(r: usize, s: usize) -> Result<PxBundle, FamilyError> {
    let layout = layout_for(r, s)?;
    let n = layout.windows.len();
    let (digraph, graph) = graphs_from_layout(&layout)?;

    let tau: Vec<Permutation> = (0..r)
        .map(|i| {
            layout.perm_from_map(|w| {
                let mut signs = w.signs;
                for j in 0..s {
                    if (w.x + j) % r == i {
                        signs ^= 1 << j;
                    }
                }
                Window { x: w.x, signs }
            })
        })
        .collect();
    let rho = layout.perm_from_map(|w| Window {
        x: (w.x + 1) % r,
        signs: w.signs,
    });
    let sigma = layout.perm_from_map(|w| {
        // Negate columns coordinatewise, then reverse the window so it runs
        // forward again: start column -(x+s-1), sign vector reversed.
        let x = (r - (w.x + s - 1) % r) % r;
        let signs = (0..s)
            .map(|j| ((w.signs >> (s - 1 - j)) & 1) << j)
            .fold(0, |a, b| a | b);
        Window { x, signs }
    });

    for t in &tau {
        debug_assert!(digraph.is_automorphism(t));
    }
    debug_assert!(digraph.is_automorphism(&rho));
    debug_assert!(graph.is_automorphism(&sigma) && !digraph.is_automorphism(&sigma));

    let k_group = PermGroup::from_generators(n, tau.clone())?;
    let mut with_rho = tau.clone();
    with_rho.push(rho.clone());
    let h_plus = PermGroup::from_generators(n, with_rho.clone())?;
    let mut with_sigma = with_rho;
    with_sigma.push(sigma.clone());
    let h = PermGroup::from_generators(n, with_sigma)?;

    Ok(PxBundle {
        r,
        s,
        digraph,
        graph,
        tau,
        rho,
        sigma,
        k_group,
        h_plus,
        h,
    })
}

/// The exact fixed-point ratio of each sign-flip generator `τ_i` on the
/// vertices of `C(r, s)`: `(r - s)/r`, since `τ_i` moves precisely the
/// `s·2^s` windows that meet column `i`.
pub fn px_fpr_tau(r: usize, s: usize) -> Result<Fpr, FamilyError> {
    if r < 3 || s == 0 || s > r - 1 {
        return Err(FamilyError::BadParameters(format!(
            "need r >= 3 and 1 <= s <= r-1, got r={r}, s={s}"
        )));
    }
    Ok(Fpr::new((r - s) as u64, r as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn parameter_validation() {
        assert!(vec_px(2, 1).is_err());
        assert!(vec_px(3, 0).is_err());
        assert!(vec_px(3, 3).is_err());
        assert!(vec_px(3, 1).is_ok());
    }

    #[test]
    fn vertex_counts_and_valency() {
        for (r, s) in [(3, 1), (3, 2), (5, 2), (6, 3)] {
            let b = vec_px(r, s).unwrap();
            assert_eq!(b.graph.n(), r << s);
            assert!(b.graph.is_k_regular(4), "C({r},{s}) must be 4-valent");
            assert!(b.digraph.is_k_in_out_regular(2));
            assert!(b.graph.is_connected());
            assert!(b.digraph.is_oriented());
        }
    }

    #[test]
    fn base_case_layout_is_column_major() {
        // s = 1: vertex (x, i) must sit at index 2x + i.
        let b = vec_px(4, 1).unwrap();
        let labels = b.graph.labels().unwrap();
        assert_eq!(labels[0], "(0,0)");
        assert_eq!(labels[1], "(0,1)");
        assert_eq!(labels[6], "(3,0)");
        assert!(b.digraph.has_arc(0, 2) && b.digraph.has_arc(0, 3));
        assert!(b.digraph.has_arc(6, 0) && b.digraph.has_arc(6, 1));
    }

    #[test]
    fn group_orders_match_presentations() {
        for (r, s) in [(3, 1), (4, 2), (5, 1), (5, 2), (5, 4), (6, 3)] {
            let b = vec_px(r, s).unwrap();
            assert_eq!(
                b.k_group.order(),
                &(BigUint::from(1u32) << r),
                "K for ({r},{s})"
            );
            assert_eq!(
                b.h_plus.order(),
                &(BigUint::from(r as u32) * (BigUint::from(1u32) << r)),
                "H+ for ({r},{s})"
            );
            assert_eq!(
                b.h.order(),
                &(BigUint::from(r as u32) * (BigUint::from(1u32) << (r + 1))),
                "H for ({r},{s})"
            );
        }
    }

    #[test]
    fn sigma_relations() {
        let b = vec_px(5, 2).unwrap();
        assert!(b.sigma.compose(&b.sigma).is_identity());
        // σρσ = ρ⁻¹.
        let conj = b.rho.conjugate_by(&b.sigma);
        assert_eq!(conj, b.rho.inverse());
        // σ reverses every arc.
        assert!(b.digraph.is_arc_reversing(&b.sigma));
        assert!(!b.h_plus.contains(&b.sigma));
        assert!(b.h.contains(&b.sigma));
    }

    #[test]
    fn tau_fixed_points_follow_the_formula() {
        for (r, s) in [(3, 1), (4, 1), (5, 2), (6, 2), (6, 4), (7, 3), (8, 5)] {
            let b = vec_px(r, s).unwrap();
            let expected = px_fpr_tau(r, s).unwrap();
            for (i, t) in b.tau.iter().enumerate() {
                assert_eq!(t.fpr(), expected, "tau_{i} on C({r},{s})");
                // τ_i moves exactly the s·2^s windows that meet column i.
                assert_eq!(b.graph.n() - t.num_fixed_points(), s << s);
            }
        }
    }

    #[test]
    fn k_orbits_are_the_column_blocks() {
        let b = vec_px(5, 2).unwrap();
        let orbits = b.k_group.orbits();
        assert_eq!(orbits.len(), 5);
        assert!(orbits.iter().all(|o| o.len() == 4));
        // ρ permutes the blocks cyclically: the block of window x maps into
        // the block of window x+1.
        let block_of = |v: usize| orbits.iter().position(|o| o.contains(&v)).unwrap();
        for o in &orbits {
            let images: Vec<usize> = o.iter().map(|&v| block_of(b.rho.apply(v))).collect();
            assert!(images.windows(2).all(|w| w[0] == w[1]));
        }
    }

    #[test]
    fn stabilizer_generated_subgroup_of_h_plus_is_k() {
        // The subgroup generated by all vertex stabilisers of H⁺ is exactly K.
        for (r, s) in [(3, 1), (4, 2), (5, 2)] {
            let b = vec_px(r, s).unwrap();
            let mut gens: Vec<Permutation> = Vec::new();
            for v in 0..b.graph.n() {
                gens.extend(
                    b.h_plus
                        .point_stabilizer(v)
                        .unwrap()
                        .generators()
                        .iter()
                        .cloned(),
                );
            }
            let generated = PermGroup::from_generators(b.graph.n(), gens).unwrap();
            assert_eq!(generated.order(), b.k_group.order());
            assert!(generated.is_subgroup_of(&b.k_group));
        }
    }

    #[test]
    fn fpr_formula_rejects_bad_parameters() {
        assert!(px_fpr_tau(4, 0).is_err());
        assert!(px_fpr_tau(4, 4).is_err());
        assert_eq!(px_fpr_tau(5, 2).unwrap(), Fpr::new(3, 5));
        assert_eq!(px_fpr_tau(6, 4).unwrap(), Fpr::new(1, 3));
    }
}
