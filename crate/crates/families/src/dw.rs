//! The 4-valent family on `Z_m × Z_3`: `(x, i) ~ (x+1, j)` exactly when
//! `i ≠ j`. Vertex `(x, i)` is numbered `3x + i`. The rightward arcs
//! `(x, i) → (x+1, j)` form the natural 2-in 2-out orientation.

use crate::FamilyError;
use graphcore::{Digraph, Graph};
use perm::Permutation;

fn check_m(m: usize) -> Result<(), FamilyError> {
    if m < 3 {
        return Err(FamilyError::BadParameters(format!(
            "need m >= 3, got m={m}"
        )));
    }
    Ok(())
}

pub fn dw(m: usize) -> Result<Graph, FamilyError> {
    check_m(m)?;
    let mut g = dw_orientation(m)?.underlying_graph();
    let labels = (0..3 * m)
        .map(|v| format!("({},{})", v / 3, v % 3))
        .collect();
    g.set_labels(labels)?;
    debug_assert!(g.is_k_regular(4));
    Ok(g)
}

pub fn dw_orientation(m: usize) -> Result<Digraph, FamilyError> {
    check_m(m)?;
    let mut arcs = Vec::with_capacity(6 * m);
    for x in 0..m {
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    arcs.push((3 * x + i, 3 * ((x + 1) % m) + j));
                }
            }
        }
    }
    Ok(Digraph::from_arcs(3 * m, &arcs)?)
}

/// The involution that fixes every `(x, 0)` and swaps `(x, 1) ↔ (x, 2)`;
/// it fixes exactly `m` of the `3m` vertices (ratio exactly 1/3).
pub fn dw_column_swap(m: usize) -> Result<Permutation, FamilyError> {
    check_m(m)?;
    let images: Vec<usize> = (0..3 * m)
        .map(|v| match v % 3 {
            1 => v + 1,
            2 => v - 1,
            _ => v,
        })
        .collect();
    Ok(Permutation::from_images(images)?)
}
