//! Class recognizers against constructions that build the class directly.

use std::collections::{BTreeSet, HashSet};

use bredux_core::classes::*;
use bredux_core::enumerate::all_small_graphs;
use bredux_core::iso::{are_isomorphic, canonical_form};
use bredux_core::transforms::{complement, k_complete, line_graph, r_expand};
use bredux_core::{AnyGraph, ClassId, Error, Graph, VertexSet, Weight, WeightedGraph};

fn corpus() -> Vec<Graph> {
    let mut gs = vec![Graph::empty(0)];
    gs.extend(all_small_graphs(6));
    gs
}

fn member(c: ClassId, g: &Graph) -> bool {
    is_member(c, &AnyGraph::Plain(g.clone())).unwrap()
}

/// Canonical forms of the components of `g`.
fn component_forms(g: &Graph) -> Vec<Graph> {
    g.components().into_iter().map(|c| canonical_form(&g.induced_subgraph(c).unwrap())).collect()
}

/// Every multiset of connected pieces (by index, non-decreasing) with total
/// size `n`, as disjoint unions.
fn unions_of(pieces: &[Graph], n: usize) -> Vec<Graph> {
    fn go(pieces: &[Graph], from: usize, left: usize, acc: Graph, out: &mut Vec<Graph>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for (i, p) in pieces.iter().enumerate().skip(from) {
            if p.n() <= left {
                go(pieces, i, left - p.n(), acc.disjoint_union(p).unwrap(), out);
            }
        }
    }
    let mut out = Vec::new();
    go(pieces, 0, n, Graph::empty(0), &mut out);
    out
}

fn spiders_up_to(vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for i in 0..vertices {
        for j in 0..=i {
            for k in 0..=j {
                if 1 + i + j + k <= vertices {
                    out.push(gen_spider(SpiderSpec::new(i, j, k)));
                }
            }
        }
    }
    out
}

/// All hair sequences with at most `vertices` vertices in total.
fn caterpillars_up_to(vertices: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(hairs) = stack.pop() {
        let used = hairs.len() + hairs.iter().sum::<usize>();
        if !hairs.is_empty() {
            out.push(gen_caterpillar(&CaterpillarSpec::new(hairs.clone())).unwrap());
        }
        for h in 0..vertices.saturating_sub(used) {
            let mut next = hairs.clone();
            next.push(h);
            stack.push(next);
        }
    }
    out
}

#[test]
fn t_is_exactly_the_spider_forests() {
    let spiders = spiders_up_to(6);
    for g in corpus() {
        let oracle = unions_of(&spiders, g.n()).iter().any(|u| are_isomorphic(u, &g));
        assert_eq!(member(ClassId::T, &g), oracle, "{g}");
    }
}

#[test]
fn q_is_exactly_the_caterpillar_forests() {
    let cats = caterpillars_up_to(6);
    for g in corpus() {
        let oracle = unions_of(&cats, g.n()).iter().any(|u| are_isomorphic(u, &g));
        assert_eq!(member(ClassId::Q, &g), oracle, "{g}");
    }
}

#[test]
fn t_inside_q() {
    for g in corpus() {
        if member(ClassId::T, &g) {
            assert!(member(ClassId::Q, &g), "{g}");
        }
    }
}

#[test]
fn lt_is_exactly_unions_of_spider_line_graphs() {
    let pieces: HashSet<Graph> = (1..=6)
        .flat_map(|e| connected_roots(ClassId::T, e).unwrap())
        .map(|s| canonical_form(&line_graph(&s).unwrap().graph))
        .collect();
    for g in corpus() {
        let oracle = component_forms(&g).iter().all(|c| pieces.contains(c));
        assert_eq!(member(ClassId::LT, &g), oracle, "{g}");
        assert_eq!(member(ClassId::CoLT, &complement(&g)), oracle, "co {g}");
    }
}

/// Connected vertex sets of size at most `max` in `g`.
fn connected_sets(g: &Graph, max: usize) -> HashSet<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut frontier: Vec<u64> = (0..g.n()).map(|v| 1u64 << v).collect();
    while let Some(s) = frontier.pop() {
        if !seen.insert(s) || s.count_ones() as usize == max {
            continue;
        }
        for v in VertexSet(s).iter() {
            for w in g.neighbors(v).iter() {
                let t = s | 1 << w;
                if t != s && !seen.contains(&t) {
                    frontier.push(t);
                }
            }
        }
    }
    seen
}

#[test]
fn rq_is_exactly_the_deletion_closure_of_r_images() {
    // a connected induced subgraph on <= 6 vertices of R(h) only sees a
    // subtree of h with <= 6 vertices plus its neighbors, so caterpillars
    // with <= 14 vertices cover every case
    let mut pieces: HashSet<Graph> = HashSet::new();
    for edges in 0..14 {
        for q in connected_roots(ClassId::Q, edges).unwrap() {
            let r = r_expand(&q).unwrap();
            for s in connected_sets(&r, 6) {
                pieces.insert(canonical_form(&r.induced_subgraph(VertexSet(s)).unwrap()));
            }
        }
    }
    let mut accepted = 0;
    for g in corpus() {
        let oracle = component_forms(&g).iter().all(|c| pieces.contains(c));
        assert_eq!(member(ClassId::RQ, &g), oracle, "{g}");
        accepted += usize::from(oracle);
    }
    assert!(accepted >= 40, "oracle accepted only {accepted} graphs");
}

#[test]
fn strict_r_images_are_members() {
    for g in caterpillars_up_to(10) {
        let r = r_expand(&g).unwrap();
        assert!(is_r_image_of_q(&r), "{r}");
        assert!(member(ClassId::RQ, &r), "{r}");
    }
    // the net minus a leaf is not an R-image but stays in the class
    let net = r_expand(&Graph::star(3)).unwrap();
    let trimmed = net.delete_vertex(1).unwrap();
    assert!(!is_r_image_of_q(&trimmed));
    assert!(member(ClassId::RQ, &trimmed));
}

#[test]
fn generators_are_sound() {
    for i in 0..=12 {
        for j in 0..=12 - i {
            for k in 0..=12 - i - j {
                let s = gen_spider(SpiderSpec::new(i, j, k));
                assert_eq!(s.n(), 1 + i + j + k);
                assert!(member(ClassId::T, &s), "{s}");
                assert!(member(ClassId::CoT, &complement(&s)), "{s}");
                if (1..=10).contains(&(i + j + k)) {
                    let lg = line_graph(&s).unwrap().graph;
                    assert!(member(ClassId::LT, &lg), "{s}");
                    assert!(member(ClassId::CoLT, &complement(&lg)), "{s}");
                }
            }
        }
    }
    for c in caterpillars_up_to(11) {
        assert!(member(ClassId::Q, &c), "{c}");
        assert!(c.is_connected() && c.is_forest() && c.max_degree() <= 3);
        let k = AnyGraph::Weighted(k_complete(&c));
        assert!(is_member(ClassId::KQ, &k).unwrap(), "{c}");
        let r = r_expand(&c).unwrap();
        assert!(is_member(ClassId::KRQ, &AnyGraph::Weighted(k_complete(&r))).unwrap(), "{c}");
    }
}

#[test]
fn spec_membership_examples() {
    assert!(!member(ClassId::T, &Graph::star(4)));
    assert!(member(ClassId::Q, &gen_spider(SpiderSpec::new(2, 2, 2))));
    // K_{1,3} with two extra leaves on each leaf: four cubic vertices
    let bushy = Graph::from_edges(10, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)]).unwrap();
    assert!(!member(ClassId::Q, &bushy));
    let tri = Graph::from_edges(4, [(1, 2), (1, 3), (2, 3)]).unwrap();
    assert!(member(ClassId::CoT, &tri));
    assert!(is_member(ClassId::KQ, &AnyGraph::Weighted(k_complete(&Graph::path(4)))).unwrap());
    assert!(member(ClassId::T, &Graph::empty(0)) && member(ClassId::Q, &Graph::empty(1)));
}

#[test]
fn caterpillar_examples() {
    let p4 = gen_caterpillar(&CaterpillarSpec::new(vec![0, 0, 0, 0])).unwrap();
    assert_eq!(p4, Graph::path(4));
    assert!(are_isomorphic(&gen_caterpillar(&CaterpillarSpec::new(vec![1])).unwrap(), &Graph::path(2)));
    assert!(gen_caterpillar(&CaterpillarSpec::new(vec![])).is_err());
}

#[test]
fn weighted_membership_rules() {
    let g = AnyGraph::Plain(Graph::path(3));
    assert!(matches!(is_member(ClassId::KQ, &g), Err(Error::ClassTypeMismatch { .. })));
    let w = AnyGraph::Weighted(k_complete(&Graph::path(3)));
    assert!(matches!(is_member(ClassId::Q, &w), Err(Error::ClassTypeMismatch { .. })));
    let half = WeightedGraph::from_fn(3, |u, v| if (u, v) == (0, 1) { Weight::new(1, 2) } else { Weight::from_integer(0) });
    assert!(!is_member(ClassId::KQ, &AnyGraph::Weighted(half)).unwrap());
    // K(C3): the triangle is not a tree
    assert!(!is_member(ClassId::KQ, &AnyGraph::Weighted(k_complete(&Graph::cycle(3)))).unwrap());
    assert!(is_member(ClassId::KRQ, &AnyGraph::Weighted(k_complete(&Graph::cycle(3)))).unwrap());
}

#[test]
fn closure_holds_at_small_budgets() {
    for c in ClassId::ALL {
        let report = check_hereditary_closure(c, 8, 7);
        assert!(report.members > 0, "{c}");
        assert!(report.violations.is_empty(), "{c}: {:?}", report.violations.first());
    }
}

#[test]
fn member_lists_are_deterministic_and_within_budget() {
    for c in ClassId::ALL {
        let a = members(c, 9, 3);
        assert_eq!(a, members(c, 9, 3));
        assert!(a.iter().all(|x| x.n() <= 9), "{c}");
        let distinct: BTreeSet<String> = a.iter().map(|x| x.to_string()).collect();
        assert!(distinct.len() > 1, "{c}");
    }
}
