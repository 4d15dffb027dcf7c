//! Normal quotients: contract the orbits of a subgroup of automorphisms
//! to single vertices, joining two orbits when any edge crosses them.

use crate::SymmetryError;
use graphcore::Graph;
use perm::{Fpr, PermGroup, Permutation};

/// The quotient graph of `g` by the orbits of `n_group`, plus the block
/// map (vertex -> block index). Blocks are numbered by ascending minimum
/// element, so the output is independent of generator order. Loops and
/// multiplicities are dropped: the quotient is simple.
pub fn normal_quotient(
    g: &Graph,
    n_group: &PermGroup,
) -> Result<(Graph, Vec<usize>), SymmetryError> {
    if n_group.degree() != g.n() {
        return Err(SymmetryError::DegreeMismatch {
            group: n_group.degree(),
            graph: g.n(),
        });
    }
    debug_assert!(n_group.generators().iter().all(|p| g.is_automorphism(p)));

    let orbits = n_group.orbits(); // sorted by minimum element
    let mut block_of = vec![usize::MAX; g.n()];
    for (b, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            block_of[v] = b;
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let (bu, bv) = (block_of[u], block_of[v]);
            if bu == bv {
                None
            } else {
                Some((bu.min(bv), bu.max(bv)))
            }
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let quotient = Graph::from_edges(orbits.len(), &edges)?;
    Ok((quotient, block_of))
}

/// Induced permutation of `x` on the blocks of `block_of`. Well-defined
/// when `x` normalizes the block system (e.g. when the block group is
/// normal in a group containing `x`).
pub fn induced_on_blocks(
    x: &Permutation,
    block_of: &[usize],
    num_blocks: usize,
) -> Result<Permutation, SymmetryError> {
    let mut images = vec![usize::MAX; num_blocks];
    for (v, &b) in block_of.iter().enumerate() {
        let ib = block_of[x.apply(v)];
        if images[b] == usize::MAX {
            images[b] = ib;
        } else if images[b] != ib {
            return Err(SymmetryError::Inapplicable(
                "element does not permute the blocks".into(),
            ));
        }
    }
    Ok(Permutation::from_images(images)?)
}

/// The monotonicity of fixed-point ratios under normal quotients:
/// `fpr(x on vertices) <= fpr(induced x on blocks)`. Returns the pair
/// `(fpr_top, fpr_quot)`; callers assert the inequality.
pub fn quotient_fpr_check(
    g: &Graph,
    n_group: &PermGroup,
    x: &Permutation,
) -> Result<(Fpr, Fpr), SymmetryError> {
    let (quotient, block_of) = normal_quotient(g, n_group)?;
    let induced = induced_on_blocks(x, &block_of, quotient.n())?;
    Ok((x.fpr(), induced.fpr()))
}
