//! Equitable partition refinement (1-dimensional colour refinement).
//!
//! A partition of the vertex set is *equitable* when every vertex in a
//! cell has the same number of neighbours in every cell. Refinement
//! splits cells by neighbour counts against a worklist of splitter cells
//! until no split is possible. The cell order produced is a function of
//! the partition structure alone, never of vertex numbering, which is
//! what makes the search-tree invariants isomorphism-invariant.

use graphcore::Graph;

/// Ordered partition: cells in order, each cell ascending. Kept as plain
/// data; the refiner below owns the slab bookkeeping.
pub type Cells = Vec<Vec<usize>>;

/// Splits the cell containing `v` into `[{v}, rest]` and returns the
/// position of the new singleton. `v`'s cell must not be a singleton.
pub fn individualize(cells: &mut Cells, v: usize) -> usize {
    let pos = cells
        .iter()
        .position(|c| c.binary_search(&v).is_ok())
        .expect("vertex belongs to some cell");
    debug_assert!(cells[pos].len() > 1, "individualizing a singleton");
    let mut rest = std::mem::take(&mut cells[pos]);
    rest.retain(|&w| w != v);
    cells[pos] = vec![v];
    cells.insert(pos + 1, rest);
    pos
}

/// Refines `cells` to the coarsest equitable partition below it, seeding
/// the splitter worklist with the cells at positions `active`.
///
/// Worklist discipline: when a cell splits, all fragments are queued
/// except one largest fragment of a cell that was not itself queued.
/// Internally the partition is flat: one array of vertices with each
/// cell a contiguous segment named by its start index. A split
/// subdivides the segment in place, so cell order is inherited
/// positionally and depends only on the partition structure, never on
/// vertex numbering. Only cells touched by a splitter's neighbourhood
/// are examined, so a pass costs O(deg) per splitter plus sorting the
/// touched cells.
pub fn refine(g: &Graph, cells: &mut Cells, active: &[usize]) {
    let n = g.n();
    let mut elements: Vec<usize> = Vec::with_capacity(n);
    let mut start_of = vec![0usize; n]; // vertex -> start of its segment
    let mut len_of = vec![0usize; n]; // start -> segment length
    let mut in_queue = vec![false; n];
    let mut affected_flag = vec![false; n];
    let mut starts_by_pos: Vec<usize> = Vec::with_capacity(cells.len());
    for cell in cells.drain(..) {
        let s = elements.len();
        starts_by_pos.push(s);
        len_of[s] = cell.len();
        for &v in &cell {
            start_of[v] = s;
        }
        elements.extend(cell);
    }
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for &pos in active {
        let s = starts_by_pos[pos];
        if !in_queue[s] {
            in_queue[s] = true;
            queue.push_back(s);
        }
    }

    let mut counts = vec![0usize; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut affected: Vec<usize> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    while let Some(s) = queue.pop_front() {
        in_queue[s] = false;
        // When a queued parent splits, its start keeps denoting the first
        // fragment and the rest are queued separately, so the queued
        // segments still cover the parent.
        let splitter = elements[s..s + len_of[s]].to_vec();

        touched.clear();
        for &u in &splitter {
            for &w in g.neighbors(u) {
                if counts[w] == 0 {
                    touched.push(w);
                }
                counts[w] += 1;
            }
        }

        // Cells holding a touched vertex, in partition (= start) order.
        affected.clear();
        for &w in &touched {
            let c = start_of[w];
            if len_of[c] > 1 && !affected_flag[c] {
                affected_flag[c] = true;
                affected.push(c);
            }
        }
        affected.sort_unstable();

        for &cs in &affected {
            affected_flag[cs] = false;
            pairs.clear();
            pairs.extend(
                elements[cs..cs + len_of[cs]]
                    .iter()
                    .map(|&v| (counts[v], v)),
            );
            pairs.sort_unstable();
            if pairs[0].0 == pairs[pairs.len() - 1].0 {
                continue; // uniform counts: no split
            }
            let was_queued = in_queue[cs];
            // Fragment boundaries as offsets into `pairs`, ascending count.
            let mut bounds: Vec<usize> = vec![0];
            for i in 1..pairs.len() {
                if pairs[i].0 != pairs[i - 1].0 {
                    bounds.push(i);
                }
            }
            bounds.push(pairs.len());
            let largest = (0..bounds.len() - 1)
                .max_by_key(|&k| (bounds[k + 1] - bounds[k], usize::MAX - k))
                .expect("split produced fragments");
            for (i, &(_, v)) in pairs.iter().enumerate() {
                elements[cs + i] = v;
            }
            for k in 0..bounds.len() - 1 {
                let fs = cs + bounds[k];
                len_of[fs] = bounds[k + 1] - bounds[k];
                for i in 0..len_of[fs] {
                    start_of[elements[fs + i]] = fs;
                }
                // First fragment inherits the parent's start and with it
                // any pending queue entry.
                let queue_it = if k == 0 {
                    !was_queued && largest != 0
                } else {
                    was_queued || k != largest
                };
                if queue_it {
                    in_queue[fs] = true;
                    queue.push_back(fs);
                }
            }
        }

        for &v in &touched {
            counts[v] = 0;
        }
    }

    let mut i = 0;
    while i < n {
        let l = len_of[i];
        cells.push(elements[i..i + l].to_vec());
        i += l;
    }
}

/// Position of each vertex's cell.
pub fn cell_of(cells: &Cells, n: usize) -> Vec<usize> {
    let mut out = vec![usize::MAX; n];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            out[v] = i;
        }
    }
    out
}

/// FNV-1a over the quotient structure of an equitable partition: the
/// cell sizes in order plus, for each cell, the sparse row of (cell
/// position, neighbour count) pairs of a representative. Depends only on
/// the partition structure, so it is invariant under relabelling.
pub fn invariant(g: &Graph, cells: &Cells) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let mut mix = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(PRIME);
    };
    let positions = cell_of(cells, g.n());
    mix(cells.len() as u64);
    let mut row: Vec<usize> = Vec::new();
    for cell in cells {
        mix(cell.len() as u64);
        row.clear();
        row.extend(g.neighbors(cell[0]).iter().map(|&w| positions[w]));
        row.sort_unstable();
        let mut i = 0;
        while i < row.len() {
            let run = row[i..].iter().take_while(|&&p| p == row[i]).count();
            mix(row[i] as u64);
            mix(run as u64);
            i += run;
        }
    }
    h
}

pub fn is_discrete(cells: &Cells) -> bool {
    cells.iter().all(|c| c.len() == 1)
}

/// Checks the defining property directly; test support.
#[cfg(test)]
pub fn is_equitable(g: &Graph, cells: &Cells) -> bool {
    let positions = cell_of(cells, g.n());
    for cell in cells {
        for target in 0..cells.len() {
            let mut expected = None;
            for &v in cell {
                let c = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| positions[w] == target)
                    .count();
                match expected {
                    None => expected = Some(c),
                    Some(e) if e != c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn unit_partition_of_regular_graph_stays_whole() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let mut cells = vec![(0..5).collect::<Vec<_>>()];
        refine(&g, &mut cells, &[0]);
        assert_eq!(cells, vec![vec![0, 1, 2, 3, 4]]);
        assert!(is_equitable(&g, &cells));
    }

    #[test]
    fn path_graph_splits_by_ends() {
        // P4: ends {0,3} have degree 1, middles {1,2} degree 2. Degree
        // refinement alone already separates them; the refined partition
        // must be equitable.
        let g = path(4);
        let mut cells = vec![vec![0, 1, 2, 3]];
        refine(&g, &mut cells, &[0]);
        assert!(is_equitable(&g, &cells));
        assert!(cells.contains(&vec![0, 3]));
        assert!(cells.contains(&vec![1, 2]));
    }

    #[test]
    fn individualization_cascades() {
        // C6: fixing one vertex splits the rest by distance.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let mut cells = vec![(0..6).collect::<Vec<_>>()];
        refine(&g, &mut cells, &[0]);
        let pos = individualize(&mut cells, 0);
        assert_eq!(cells[pos], vec![0]);
        refine(&g, &mut cells, &[pos]);
        assert!(is_equitable(&g, &cells));
        // Distance classes from 0: {0}, {1,5}, {2,4}, {3}.
        assert!(cells.contains(&vec![0]));
        assert!(cells.contains(&vec![1, 5]));
        assert!(cells.contains(&vec![2, 4]));
        assert!(cells.contains(&vec![3]));
    }

    #[test]
    fn invariant_is_stable_under_relabelling() {
        use perm::Permutation;
        let g = path(6);
        let p = Permutation::from_images(vec![3, 0, 5, 1, 4, 2]).unwrap();
        let h = g.apply_perm(&p).unwrap();

        let mut cg = vec![(0..6).collect::<Vec<_>>()];
        refine(&g, &mut cg, &[0]);
        let mut ch = vec![(0..6).collect::<Vec<_>>()];
        refine(&h, &mut ch, &[0]);
        assert_eq!(invariant(&g, &cg), invariant(&h, &ch));

        let sizes_g: Vec<usize> = cg.iter().map(|c| c.len()).collect();
        let sizes_h: Vec<usize> = ch.iter().map(|c| c.len()).collect();
        assert_eq!(sizes_g, sizes_h);
    }
}
