//! The graph transformations `co`, `L`, `R` and `K`, with the inverses used
//! to recognize their images.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::classes::{self, ClassId};
use crate::error::{Error, Result};
use crate::graph::{pairs, Bits, Graph, VertexSet};
use crate::iso::are_isomorphic;
use crate::weighted::{Weight, WeightedGraph};

/// Largest connected component [`line_root`] will search roots for.
pub const ROOT_SEARCH_BOUND: usize = 14;

/// Same vertices; `u ~ v` iff they are non-adjacent in `g`.
pub fn complement(g: &Graph) -> Graph {
    let mut out = Graph::empty(g.n());
    for (u, v) in pairs(g.n()) {
        if !g.has_edge(u, v) {
            out.link(u, v);
        }
    }
    out
}

/// Line graph together with the edge of the source graph behind each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[x]` is the edge `(u, v)`, `u < v`, that became vertex `x`.
    pub edges: Vec<(usize, usize)>,
}

/// Vertices are the edges of `g` in lexicographic order, adjacent iff the
/// edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { n: edges.len(), max: crate::graph::MAX_VERTICES });
    }
    let mut lg = Graph::empty(edges.len());
    for (a, b) in pairs(edges.len()) {
        let (e, f) = (edges[a], edges[b]);
        if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
            lg.link(a, b);
        }
    }
    Ok(LineGraph { graph: lg, edges })
}

/// Finds `h` in `root_class` with `L(h)` isomorphic to `g`, searching each
/// connected component of `g` against the class's connected members with the
/// matching edge count. Isolated root vertices are never produced.
pub fn line_root(g: &Graph, root_class: ClassId) -> Result<Option<Graph>> {
    let mut root = Graph::empty(0);
    for comp in g.components() {
        let size = comp.len();
        if size > ROOT_SEARCH_BOUND {
            return Err(Error::RootSearchBound { size, bound: ROOT_SEARCH_BOUND });
        }
        let part = g.induced_unchecked(comp);
        let found = classes::connected_roots(root_class, size)?
            .into_iter()
            .find(|cand| line_graph(cand).is_ok_and(|lg| are_isomorphic(&lg.graph, &part)));
        match found {
            Some(h) => root = root.disjoint_union(&h)?,
            None => return Ok(None),
        }
    }
    Ok(Some(root))
}

/// Replaces every degree-3 vertex by a triangle, the three former edges
/// attaching to distinct triangle corners.
///
/// A cubic vertex `v` keeps its id for the corner that takes the edge to its
/// smallest neighbor; the corners for the second and third neighbors are
/// appended after the original vertices, in order of `v`.
pub fn r_expand(g: &Graph) -> Result<Graph> {
    let n = g.n();
    for v in 0..n {
        if g.degree(v) > 3 {
            return Err(Error::NotSubcubic { vertex: v, degree: g.degree(v) });
        }
    }
    let cubic: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 3).collect();
    let total = n + 2 * cubic.len();
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { n: total, max: crate::graph::MAX_VERTICES });
    }
    // corners[v] = [v, extra1, extra2] for cubic v
    let mut corners = alloc::vec![[0usize; 3]; n];
    for (i, &v) in cubic.iter().enumerate() {
        corners[v] = [v, n + 2 * i, n + 2 * i + 1];
    }
    let port = |v: usize, w: usize| -> usize {
        if g.degree(v) == 3 {
            let rank = (g.row(v) & ((1u64 << w) - 1)).count_ones() as usize;
            corners[v][rank]
        } else {
            v
        }
    };
    let mut out = Graph::empty(total);
    for (u, w) in g.edges() {
        out.link(port(u, w), port(w, u));
    }
    for &v in &cubic {
        let [a, b, c] = corners[v];
        out.link(a, b);
        out.link(b, c);
        out.link(a, c);
    }
    Ok(out)
}

/// Contracts every triangle to a single vertex. Returns the contraction only
/// when the triangles are vertex-disjoint, the result is simple and
/// `r_expand` of it is isomorphic to `g`.
///
/// Each contracted triangle takes the place of its smallest corner; vertex
/// ids of the result follow that order.
pub fn r_contract(g: &Graph) -> Option<Graph> {
    let (_, h) = contract_triangles(g)?;
    if h.max_degree() > 3 {
        return None;
    }
    let expanded = r_expand(&h).ok()?;
    are_isomorphic(&expanded, g).then_some(h)
}

/// All triangles `[a, b, c]`, `a < b < c`.
pub(crate) fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        let common = g.row(a) & g.row(b) & !crate::graph::low_mask(b + 1);
        for c in Bits(common) {
            out.push([a, b, c]);
        }
    }
    out
}

/// Contracts vertex-disjoint triangles. Returns the representative of every
/// original vertex (as a vertex of the contraction) and the contraction, or
/// `None` when triangles overlap or contraction creates a multi-edge.
pub(crate) fn contract_triangles(g: &Graph) -> Option<(Vec<usize>, Graph)> {
    let n = g.n();
    let mut leader: Vec<usize> = (0..n).collect();
    let mut covered = VertexSet::EMPTY;
    for [a, b, c] in triangles(g) {
        for v in [a, b, c] {
            if covered.contains(v) {
                return None;
            }
            covered.insert(v);
        }
        leader[b] = a;
        leader[c] = a;
    }
    let kept: Vec<usize> = (0..n).filter(|&v| leader[v] == v).collect();
    let mut index = alloc::vec![0usize; n];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let rep: Vec<usize> = (0..n).map(|v| index[leader[v]]).collect();
    let mut h = Graph::empty(kept.len());
    for (u, v) in g.edges() {
        let (x, y) = (rep[u], rep[v]);
        if x == y {
            continue;
        }
        if h.has_edge(x, y) {
            return None;
        }
        h.link(x, y);
    }
    Some((rep, h))
}

/// Complete weighted graph with weight 0 on the edges of `g` and 1 elsewhere.
pub fn k_complete(g: &Graph) -> WeightedGraph {
    WeightedGraph::from_fn(g.n(), |u, v| if g.has_edge(u, v) { Weight::zero() } else { Weight::one() })
}

/// Inverse of [`k_complete`]: the graph of weight-0 pairs.
pub fn k_extract(w: &WeightedGraph) -> Result<Graph> {
    let mut g = Graph::empty(w.n());
    for (u, v, weight) in w.triples() {
        if weight.is_zero() {
            g.link(u, v);
        } else if !weight.is_one() {
            return Err(Error::NotKImage { u, v, weight: alloc::format!("{weight}") });
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{gen_spider, SpiderSpec};

    fn net() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn complement_of_claw_is_triangle_plus_vertex() {
        let co = complement(&Graph::star(3));
        assert_eq!(co, Graph::from_edges(4, [(1, 2), (1, 3), (2, 3)]).unwrap());
        assert_eq!(complement(&Graph::empty(5)), Graph::complete(5));
        assert_eq!(complement(&complement(&Graph::cycle(5))), Graph::cycle(5));
    }

    #[test]
    fn line_graph_examples() {
        let t222 = gen_spider(SpiderSpec::new(2, 2, 2));
        let lg = line_graph(&t222).unwrap();
        assert_eq!(lg.graph.n(), 6);
        assert!(are_isomorphic(&lg.graph, &net()));
        assert_eq!(line_graph(&Graph::path(4)).unwrap().graph, Graph::path(3));
        assert!(are_isomorphic(&line_graph(&Graph::complete(3)).unwrap().graph, &Graph::complete(3)));
        assert_eq!(line_graph(&Graph::path(3)).unwrap().edges, alloc::vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn line_roots_in_t() {
        let k13 = line_root(&Graph::complete(3), ClassId::T).unwrap().unwrap();
        assert!(are_isomorphic(&k13, &Graph::star(3)));
        let p4 = line_root(&Graph::path(3), ClassId::T).unwrap().unwrap();
        assert!(are_isomorphic(&p4, &Graph::path(4)));
        assert_eq!(line_root(&Graph::cycle(4), ClassId::T).unwrap(), None);
        assert_eq!(line_root(&Graph::empty(0), ClassId::T).unwrap(), Some(Graph::empty(0)));
        assert!(matches!(
            line_root(&Graph::path(15), ClassId::T),
            Err(Error::RootSearchBound { size: 15, .. })
        ));
        assert!(matches!(line_root(&Graph::path(3), ClassId::CoT), Err(Error::NoRootGenerator(_))));
    }

    #[test]
    fn r_expand_claw_is_net() {
        let r = r_expand(&Graph::star(3)).unwrap();
        assert_eq!(r.n(), 6);
        assert!(are_isomorphic(&r, &net()));
        assert_eq!(r_expand(&Graph::path(5)).unwrap(), Graph::path(5));
        assert!(matches!(r_expand(&Graph::star(4)), Err(Error::NotSubcubic { vertex: 0, degree: 4 })));
    }

    #[test]
    fn r_expand_h_tree() {
        // two adjacent cubic vertices, each with two leaves
        let h = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let r = r_expand(&h).unwrap();
        let expected = Graph::from_edges(
            10,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 6), (2, 7), (4, 8), (5, 9)],
        )
        .unwrap();
        assert_eq!(r.n(), 10);
        assert!(are_isomorphic(&r, &expected));
    }

    #[test]
    fn r_contract_examples() {
        assert!(are_isomorphic(&r_contract(&net()).unwrap(), &Graph::star(3)));
        assert_eq!(r_contract(&Graph::path(5)), Some(Graph::path(5)));
        assert_eq!(r_contract(&Graph::complete(4)), None);
        // lone triangle contracts to a vertex that R would not expand
        assert_eq!(r_contract(&Graph::complete(3)), None);
    }

    #[test]
    fn k_round_trip() {
        let c5 = Graph::cycle(5);
        let k = k_complete(&c5);
        assert_eq!(k.weight(0, 1), Weight::zero());
        assert_eq!(k.weight(0, 2), Weight::one());
        assert_eq!(k_extract(&k).unwrap(), c5);
        assert!(k_complete(&Graph::complete(4)).triples().all(|(_, _, w)| w.is_zero()));
        assert!(k_complete(&Graph::empty(3)).triples().all(|(_, _, w)| w.is_one()));
        let half = WeightedGraph::from_fn(5, |u, v| if (u, v) == (1, 3) { Weight::new(1, 2) } else { Weight::zero() });
        assert!(matches!(k_extract(&half), Err(Error::NotKImage { u: 1, v: 3, .. })));
        assert_eq!(k_extract(&WeightedGraph::from_fn(5, |_, _| Weight::zero())).unwrap(), Graph::complete(5));
    }
}
