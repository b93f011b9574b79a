//! Isomorphism testing by canonical labeling.
//!
//! The canonical form is the lexicographically smallest relabeled adjacency
//! over the leaves of an individualization/refinement search tree. Color
//! refinement starts from vertex degrees, so neighbor-degree multisets are
//! used for pruning from the first round on. Interchangeable twins inside a
//! cell are tried once.

use alloc::vec::Vec;

use crate::graph::{Bits, Graph};

/// Whether an edge-preserving bijection between the two graphs exists.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

/// Representative of the isomorphism class of `g`: isomorphic graphs map to
/// the same (labeled) graph.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n <= 1 {
        return g.clone();
    }
    let colors = refine(g, (0..n).map(|v| g.degree(v) as u32).collect());
    let mut best: Option<Vec<u64>> = None;
    search(g, colors, &mut best);
    let rows = best.expect("search visits at least one leaf");
    let mut out = Graph::empty(n);
    for (u, row) in rows.iter().enumerate() {
        for v in Bits(*row) {
            if u < v {
                out.link(u, v);
            }
        }
    }
    out
}

fn search(g: &Graph, colors: Vec<u32>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    let mut counts = alloc::vec![0usize; n];
    for &c in &colors {
        counts[c as usize] += 1;
    }
    let Some(target) = (0..n).find(|&c| counts[c] > 1) else {
        let code = relabeled_rows(g, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<u32> = (0..n)
            .map(|w| 2 * colors[w] + u32::from(w != v))
            .collect();
        search(g, refine(g, split), best);
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    g.row(u) & mask == g.row(v) & mask
}

fn relabeled_rows(g: &Graph, position: &[u32]) -> Vec<u64> {
    let mut rows = alloc::vec![0u64; g.n()];
    for (u, v) in g.edges() {
        let (pu, pv) = (position[u] as usize, position[v] as usize);
        rows[pu] |= 1 << pv;
        rows[pv] |= 1 << pu;
    }
    rows
}

/// Refines an ordered coloring until it is equitable. Colors are renumbered
/// densely from 0 by sorting signatures, which keeps the result independent
/// of vertex labels.
fn refine(g: &Graph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.n();
    let mut classes = rank(&mut colors);
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("signature present") as u32)
            .collect();
        let count = sorted.len();
        sigs.clear();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

/// Renumbers colors densely preserving order; returns the class count.
fn rank(colors: &mut [u32]) -> usize {
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).expect("color present") as u32;
    }
    distinct.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_c3() {
        assert!(are_isomorphic(&Graph::complete(3), &Graph::cycle(3)));
    }

    #[test]
    fn path_is_not_claw() {
        assert!(!are_isomorphic(&Graph::path(4), &Graph::star(3)));
    }

    #[test]
    fn hexagon_is_not_two_triangles() {
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3)).unwrap();
        assert!(!are_isomorphic(&Graph::cycle(6), &two));
    }

    #[test]
    fn relabeled_graphs_share_a_canonical_form() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn regular_graphs_are_separated() {
        // Both 3-regular on 6 vertices: the prism and K_{3,3}.
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(!are_isomorphic(&prism, &k33));
        assert!(are_isomorphic(&prism, &prism.relabel(&[2, 4, 0, 1, 5, 3])));
    }

    #[test]
    fn large_symmetric_graphs_stay_cheap() {
        assert!(are_isomorphic(&Graph::empty(30), &Graph::empty(30)));
        assert!(are_isomorphic(&Graph::complete(20), &Graph::complete(20)));
        assert!(are_isomorphic(&Graph::cycle(12), &Graph::cycle(12).relabel(&[3, 1, 4, 0, 5, 9, 2, 6, 8, 7, 11, 10])));
    }
}
