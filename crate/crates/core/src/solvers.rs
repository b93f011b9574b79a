//! Exact exponential-time solvers for the ten problems.
//!
//! Cardinality problems use threshold semantics: independent set and clique
//! accept `⟨G, k⟩` when the optimum is at least `k`, vertex cover when it is
//! at most `k`. The exact optimum is always returned alongside the decision.
//! Cycles (Hamiltonian cycle, TSP tours) need at least three vertices.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{low_mask, Bits, Graph};
use crate::transforms::complement;
use crate::weighted::{Weight, WeightedGraph};

pub const MIS_CAP: usize = 20;
pub const HAMILTON_CAP: usize = 18;
pub const COLORING_CAP: usize = 14;
pub const SUBGRAPH_CAP: usize = 14;
pub const TSP_CAP: usize = 14;
pub const SPANNING_TREE_CAP: usize = 12;

/// A problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    /// `⟨G⟩`
    Graph(Graph),
    /// `⟨G, k⟩`
    GraphInt(Graph, usize),
    /// `⟨G, H⟩`
    GraphPair(Graph, Graph),
    /// `⟨W, k⟩` with rational budget `k`
    WeightedBudget(WeightedGraph, Weight),
}

/// Canonical one-line serialization, used to sort and key violations.
impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Graph(g) => write!(f, "<{g}>"),
            Instance::GraphInt(g, k) => write!(f, "<{g}; k={k}>"),
            Instance::GraphPair(g, h) => write!(f, "<{g}; H={h}>"),
            Instance::WeightedBudget(w, k) => write!(f, "<{w}; k={k}>"),
        }
    }
}

/// Optimum value of a solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Optimum {
    Count(usize),
    Cost(Weight),
}

impl fmt::Display for Optimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimum::Count(c) => write!(f, "{c}"),
            Optimum::Cost(w) => write!(f, "{w}"),
        }
    }
}

/// Witness backing a decision or an optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Independent set, vertex cover or clique.
    Vertices(Vec<usize>),
    /// Color of every vertex.
    Coloring(Vec<usize>),
    /// Partition of the vertices into cliques.
    Cliques(Vec<Vec<usize>>),
    /// Hamiltonian path, or cycle closing back to the first vertex.
    Order(Vec<usize>),
    /// Spanning tree edges.
    Tree(Vec<(usize, usize)>),
    /// Image in `G` of each pattern vertex.
    Embedding(Vec<usize>),
    /// Tour visiting every vertex once, closing back to the first.
    Tour(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub decision: bool,
    pub optimum: Option<Optimum>,
    pub certificate: Option<Certificate>,
}

impl SolveResult {
    fn optimal(decision: bool, optimum: usize, certificate: Certificate) -> Self {
        SolveResult { decision, optimum: Some(Optimum::Count(optimum)), certificate: Some(certificate) }
    }

    fn decided(decision: bool, certificate: Option<Certificate>) -> Self {
        SolveResult { decision, optimum: None, certificate }
    }
}

/// The ten decision problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Problem {
    IndependentSet,
    VertexColoring,
    HamiltonianPath,
    HamiltonianCycle,
    Clique,
    VertexCover,
    BoundedDegreeSpanningTree,
    CliqueCover,
    SubgraphIsomorphism,
    TravellingSalesperson,
}

impl Problem {
    pub const ALL: [Problem; 10] = [
        Problem::IndependentSet,
        Problem::VertexColoring,
        Problem::HamiltonianPath,
        Problem::HamiltonianCycle,
        Problem::Clique,
        Problem::VertexCover,
        Problem::BoundedDegreeSpanningTree,
        Problem::CliqueCover,
        Problem::SubgraphIsomorphism,
        Problem::TravellingSalesperson,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Problem::IndependentSet => "independent-set",
            Problem::VertexColoring => "vertex-coloring",
            Problem::HamiltonianPath => "hamiltonian-path",
            Problem::HamiltonianCycle => "hamiltonian-cycle",
            Problem::Clique => "clique",
            Problem::VertexCover => "vertex-cover",
            Problem::BoundedDegreeSpanningTree => "bounded-degree-spanning-tree",
            Problem::CliqueCover => "clique-cover",
            Problem::SubgraphIsomorphism => "subgraph-isomorphism",
            Problem::TravellingSalesperson => "travelling-salesperson",
        }
    }

    /// Decides `instance`, rejecting instances of the wrong shape.
    pub fn solve(self, instance: &Instance) -> Result<SolveResult> {
        use Instance as I;
        match (self, instance) {
            (Problem::IndependentSet, I::GraphInt(g, k)) => {
                independence_number(g).map(|r| threshold(r, |opt| opt >= *k))
            }
            (Problem::VertexCover, I::GraphInt(g, k)) => vertex_cover_number(g).map(|r| threshold(r, |opt| opt <= *k)),
            (Problem::Clique, I::GraphInt(g, k)) => clique_number(g).map(|r| threshold(r, |opt| opt >= *k)),
            (Problem::VertexColoring, I::GraphInt(g, k)) => chromatic_number(g).map(|r| threshold(r, |opt| opt <= *k)),
            (Problem::CliqueCover, I::GraphInt(g, k)) => clique_cover_number(g).map(|r| threshold(r, |opt| opt <= *k)),
            (Problem::HamiltonianPath, I::Graph(g)) => has_hamiltonian_path(g),
            (Problem::HamiltonianCycle, I::Graph(g)) => has_hamiltonian_cycle(g),
            (Problem::BoundedDegreeSpanningTree, I::GraphInt(g, k)) => has_bounded_degree_spanning_tree(g, *k),
            (Problem::SubgraphIsomorphism, I::GraphPair(g, h)) => subgraph_isomorphic(g, h),
            (Problem::TravellingSalesperson, I::WeightedBudget(w, k)) => tsp_decision(w, *k),
            (p, _) => Err(Error::InstanceShape(p.shape())),
        }
    }

    /// Expected instance shape, for error messages.
    pub fn shape(self) -> &'static str {
        match self {
            Problem::HamiltonianPath | Problem::HamiltonianCycle => "<G>",
            Problem::SubgraphIsomorphism => "<G, H>",
            Problem::TravellingSalesperson => "<W, k> with W a weighted complete graph",
            _ => "<G, k>",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        let s = s.to_ascii_lowercase();
        let alias = match s.as_str() {
            "tsp" | "traveling-salesperson" => "travelling-salesperson",
            "is" => "independent-set",
            "vc" => "vertex-cover",
            "coloring" => "vertex-coloring",
            "bdst" => "bounded-degree-spanning-tree",
            "si" => "subgraph-isomorphism",
            other => other,
        };
        Problem::ALL
            .into_iter()
            .find(|p| p.token() == alias)
            .ok_or_else(|| alloc::format!("unknown problem '{s}'"))
    }
}

fn threshold(mut r: SolveResult, accept: impl Fn(usize) -> bool) -> SolveResult {
    if let Some(Optimum::Count(opt)) = r.optimum {
        r.decision = accept(opt);
    }
    r
}

fn cap(solver: &'static str, g: &Graph, limit: usize) -> Result<()> {
    if g.n() > limit {
        return Err(Error::SizeCap { solver, cap: limit, n: g.n() });
    }
    Ok(())
}

/// `α(G)` by branch and bound; the certificate is a maximum independent set.
pub fn independence_number(g: &Graph) -> Result<SolveResult> {
    cap("independence_number", g, MIS_CAP)?;
    let mut best = 0u64;
    mis(g, g.vertices().0, 0, &mut best);
    let set: Vec<usize> = Bits(best).collect();
    Ok(SolveResult::optimal(true, set.len(), Certificate::Vertices(set)))
}

fn mis(g: &Graph, cand: u64, chosen: u64, best: &mut u64) {
    if (chosen | cand).count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = chosen;
        return;
    }
    let deg = |v: usize| (g.row(v) & cand).count_ones();
    let low = Bits(cand).min_by_key(|&v| deg(v)).expect("non-empty");
    if deg(low) <= 1 {
        // some maximum independent set contains a vertex of degree <= 1
        mis(g, cand & !g.row(low) & !(1 << low), chosen | 1 << low, best);
        return;
    }
    let v = Bits(cand).max_by_key(|&v| deg(v)).expect("non-empty");
    mis(g, cand & !g.row(v) & !(1 << v), chosen | 1 << v, best);
    mis(g, cand & !(1 << v), chosen, best);
}

/// `β(G)` by branching on a vertex or its whole neighborhood.
pub fn vertex_cover_number(g: &Graph) -> Result<SolveResult> {
    cap("vertex_cover_number", g, MIS_CAP)?;
    let mut best = g.vertices().0;
    cover(g, g.vertices().0, 0, &mut best);
    let set: Vec<usize> = Bits(best).collect();
    Ok(SolveResult::optimal(true, set.len(), Certificate::Vertices(set)))
}

fn cover(g: &Graph, alive: u64, taken: u64, best: &mut u64) {
    let deg = |v: usize| (g.row(v) & alive).count_ones();
    let Some(v) = Bits(alive).filter(|&v| deg(v) > 0).max_by_key(|&v| deg(v)) else {
        if taken.count_ones() < best.count_ones() {
            *best = taken;
        }
        return;
    };
    // a matching of the remaining edges bounds the cover from below
    let mut matched = 0;
    let mut free = alive;
    for u in Bits(alive) {
        if free >> u & 1 == 1 {
            if let Some(w) = Bits(g.row(u) & free & !(1 << u)).next() {
                free &= !(1 << u | 1 << w);
                matched += 1;
            }
        }
    }
    if taken.count_ones() + matched >= best.count_ones() {
        return;
    }
    let nb = g.row(v) & alive;
    cover(g, alive & !(1 << v), taken | 1 << v, best);
    if nb.count_ones() > 1 {
        cover(g, alive & !(1 << v) & !nb, taken | nb, best);
    }
}

/// `ω(G)`; the certificate is a maximum clique.
pub fn clique_number(g: &Graph) -> Result<SolveResult> {
    cap("clique_number", g, MIS_CAP)?;
    let mut best = 0u64;
    grow_clique(g, 0, g.vertices().0, &mut best);
    let set: Vec<usize> = Bits(best).collect();
    Ok(SolveResult::optimal(true, set.len(), Certificate::Vertices(set)))
}

fn grow_clique(g: &Graph, clique: u64, mut cand: u64, best: &mut u64) {
    if cand == 0 {
        if clique.count_ones() > best.count_ones() {
            *best = clique;
        }
        return;
    }
    while cand != 0 {
        if clique.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        grow_clique(g, clique | 1 << v, cand & g.row(v), best);
        cand &= !(1 << v);
    }
    if clique.count_ones() > best.count_ones() {
        *best = clique;
    }
}

/// `χ(G)` by iterative deepening over the number of colors.
pub fn chromatic_number(g: &Graph) -> Result<SolveResult> {
    cap("chromatic_number", g, COLORING_CAP)?;
    let coloring = min_coloring(g);
    let k = coloring.iter().map(|c| c + 1).max().unwrap_or(0);
    Ok(SolveResult::optimal(true, k, Certificate::Coloring(coloring)))
}

fn min_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| core::cmp::Reverse(g.degree(v)));
    let start = if n == 0 { 0 } else if g.edge_count() == 0 { 1 } else { 2 };
    for k in start..=n {
        let mut colors = alloc::vec![usize::MAX; n];
        if color_from(g, &order, 0, k, 0, &mut colors) {
            return colors;
        }
    }
    unreachable!("n colors always suffice")
}

fn color_from(g: &Graph, order: &[usize], at: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    let Some(&v) = order.get(at) else {
        return true;
    };
    // new colors are introduced in order, so only one fresh color is tried
    for c in 0..k.min(used + 1) {
        if Bits(g.row(v)).any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_from(g, order, at + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Minimum number of cliques covering the vertices, as `χ(co(G))`.
pub fn clique_cover_number(g: &Graph) -> Result<SolveResult> {
    cap("clique_cover_number", g, COLORING_CAP)?;
    let coloring = min_coloring(&complement(g));
    let k = coloring.iter().map(|c| c + 1).max().unwrap_or(0);
    let mut cliques = alloc::vec![Vec::new(); k];
    for (v, &c) in coloring.iter().enumerate() {
        cliques[c].push(v);
    }
    Ok(SolveResult::optimal(true, k, Certificate::Cliques(cliques)))
}

/// `reach[mask]` holds the endpoints `v` of paths covering exactly `mask`.
fn path_table(g: &Graph, start: Option<usize>) -> Vec<u32> {
    let n = g.n();
    let mut reach = alloc::vec![0u32; 1 << n];
    match start {
        Some(s) => reach[1 << s] = 1 << s,
        None => (0..n).for_each(|v| reach[1 << v] = 1 << v),
    }
    for mask in 1..(1usize << n) {
        let ends = reach[mask];
        for v in Bits(ends as u64) {
            for w in Bits(g.row(v) & !(mask as u64)) {
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    reach
}

/// Walks `path_table` back from `end` over the full mask.
fn trace_path(g: &Graph, reach: &[u32], mut end: usize) -> Vec<usize> {
    let mut mask = (1usize << g.n()) - 1;
    let mut order = alloc::vec![end];
    while mask.count_ones() > 1 {
        mask &= !(1 << end);
        end = Bits(reach[mask] as u64 & g.row(end)).next().expect("table is consistent");
        order.push(end);
    }
    order.reverse();
    order
}

/// Hamiltonian path by subset dynamic programming over (subset, endpoint).
pub fn has_hamiltonian_path(g: &Graph) -> Result<SolveResult> {
    cap("has_hamiltonian_path", g, HAMILTON_CAP)?;
    if g.n() == 0 {
        return Ok(SolveResult::decided(false, None));
    }
    let reach = path_table(g, None);
    let full = (1usize << g.n()) - 1;
    Ok(match Bits(reach[full] as u64).next() {
        Some(end) => SolveResult::decided(true, Some(Certificate::Order(trace_path(g, &reach, end)))),
        None => SolveResult::decided(false, None),
    })
}

/// Hamiltonian cycle: a Hamiltonian path from vertex 0 ending next to 0.
pub fn has_hamiltonian_cycle(g: &Graph) -> Result<SolveResult> {
    cap("has_hamiltonian_cycle", g, HAMILTON_CAP)?;
    if g.n() < 3 {
        return Ok(SolveResult::decided(false, None));
    }
    let reach = path_table(g, Some(0));
    let full = (1usize << g.n()) - 1;
    Ok(match Bits(reach[full] as u64 & g.row(0)).next() {
        Some(end) => SolveResult::decided(true, Some(Certificate::Order(trace_path(g, &reach, end)))),
        None => SolveResult::decided(false, None),
    })
}

/// Spanning tree with maximum degree at most `k`, by include/exclude
/// backtracking over the edges with a reachability bound.
pub fn has_bounded_degree_spanning_tree(g: &Graph, k: usize) -> Result<SolveResult> {
    cap("has_bounded_degree_spanning_tree", g, SPANNING_TREE_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(SolveResult::decided(false, None));
    }
    if n == 1 {
        return Ok(SolveResult::decided(true, Some(Certificate::Tree(Vec::new()))));
    }
    if k == 0 || !g.is_connected() {
        return Ok(SolveResult::decided(false, None));
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut search = TreeSearch { n, k, edges: &edges, degree: alloc::vec![0; n], comp: (0..n).collect(), chosen: Vec::new() };
    Ok(if search.extend(0) {
        SolveResult::decided(true, Some(Certificate::Tree(search.chosen)))
    } else {
        SolveResult::decided(false, None)
    })
}

struct TreeSearch<'a> {
    n: usize,
    k: usize,
    edges: &'a [(usize, usize)],
    degree: Vec<usize>,
    /// component label of each vertex in the chosen forest
    comp: Vec<usize>,
    chosen: Vec<(usize, usize)>,
}

impl TreeSearch<'_> {
    fn extend(&mut self, at: usize) -> bool {
        if self.chosen.len() == self.n - 1 {
            return true;
        }
        if at == self.edges.len() || !self.can_finish(at) {
            return false;
        }
        let (u, v) = self.edges[at];
        if self.degree[u] < self.k && self.degree[v] < self.k && self.comp[u] != self.comp[v] {
            let saved = self.comp.clone();
            let (from, to) = (self.comp[v], self.comp[u]);
            self.comp.iter_mut().filter(|c| **c == from).for_each(|c| *c = to);
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen.push((u, v));
            if self.extend(at + 1) {
                return true;
            }
            self.chosen.pop();
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            self.comp = saved;
        }
        self.extend(at + 1)
    }

    /// Whether the forest can still be joined into one tree using undecided
    /// edges whose endpoints have spare degree.
    fn can_finish(&self, at: usize) -> bool {
        let mut label = self.comp.clone();
        let spare = |v: usize| self.degree[v] < self.k;
        for &(u, v) in &self.edges[at..] {
            if spare(u) && spare(v) && label[u] != label[v] {
                let (from, to) = (label[v], label[u]);
                label.iter_mut().filter(|c| **c == from).for_each(|c| *c = to);
            }
        }
        label.iter().all(|&c| c == label[0])
    }
}

/// Injective map from the pattern `h` into `g` carrying every edge of `h`
/// onto an edge of `g` (not necessarily induced).
pub fn subgraph_isomorphic(g: &Graph, h: &Graph) -> Result<SolveResult> {
    cap("subgraph_isomorphic", g, SUBGRAPH_CAP)?;
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(SolveResult::decided(false, None));
    }
    let order = pattern_order(h);
    let mut map = alloc::vec![usize::MAX; h.n()];
    Ok(if embed(g, h, &order, 0, 0, &mut map) {
        SolveResult::decided(true, Some(Certificate::Embedding(map)))
    } else {
        SolveResult::decided(false, None)
    })
}

/// Pattern vertices ordered so each one has as many placed neighbors as
/// possible, ties broken by degree.
fn pattern_order(h: &Graph) -> Vec<usize> {
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(h.n());
    while order.len() < h.n() {
        let v = Bits(h.vertices().0 & !placed)
            .max_by_key(|&v| ((h.row(v) & placed).count_ones(), h.degree(v), core::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

fn embed(g: &Graph, h: &Graph, order: &[usize], at: usize, used: u64, map: &mut [usize]) -> bool {
    let Some(&u) = order.get(at) else {
        return true;
    };
    let mut cand = g.vertices().0 & !used;
    for x in Bits(h.row(u)) {
        if map[x] != usize::MAX {
            cand &= g.row(map[x]);
        }
    }
    for w in Bits(cand) {
        if g.degree(w) < h.degree(u) {
            continue;
        }
        map[u] = w;
        if embed(g, h, order, at + 1, used | 1 << w, map) {
            return true;
        }
    }
    map[u] = usize::MAX;
    false
}

/// Minimum Hamiltonian tour weight by Held-Karp; accepts when it is at most
/// `budget`. No tour exists below three vertices.
pub fn tsp_decision(w: &WeightedGraph, budget: Weight) -> Result<SolveResult> {
    let n = w.n();
    if n > TSP_CAP {
        return Err(Error::SizeCap { solver: "tsp_decision", cap: TSP_CAP, n });
    }
    if n < 3 {
        return Ok(SolveResult::decided(false, None));
    }
    // best[mask][v]: cheapest path 0 -> v through {0} ∪ mask, mask over 1..n
    let m = n - 1;
    let mut best: Vec<Option<Weight>> = alloc::vec![None; (1 << m) * n];
    let idx = |mask: usize, v: usize| mask * n + v;
    for v in 1..n {
        best[idx(1 << (v - 1), v)] = Some(w.weight(0, v));
    }
    for mask in 1usize..(1 << m) {
        for v in Bits(mask as u64).map(|b| b + 1) {
            let Some(cost) = best[idx(mask, v)] else { continue };
            for x in Bits(low_mask(m) & !(mask as u64)).map(|b| b + 1) {
                let next = cost + w.weight(v, x);
                let slot = &mut best[idx(mask | 1 << (x - 1), x)];
                if slot.is_none_or(|c| next < c) {
                    *slot = Some(next);
                }
            }
        }
    }
    let full = (1usize << m) - 1;
    let (end, cost) = (1..n)
        .map(|v| (v, best[idx(full, v)].expect("complete graph") + w.weight(v, 0)))
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("n >= 3");
    // walk back through the table
    let mut tour = alloc::vec![end];
    let (mut mask, mut v) = (full, end);
    while mask.count_ones() > 1 {
        let here = best[idx(mask, v)].expect("reached");
        let prev_mask = mask & !(1 << (v - 1));
        let prev = Bits(prev_mask as u64)
            .map(|b| b + 1)
            .find(|&u| best[idx(prev_mask, u)].is_some_and(|c| c + w.weight(u, v) == here))
            .expect("predecessor exists");
        tour.push(prev);
        mask = prev_mask;
        v = prev;
    }
    tour.push(0);
    tour.reverse();
    Ok(SolveResult { decision: cost <= budget, optimum: Some(Optimum::Cost(cost)), certificate: Some(Certificate::Tour(tour)) })
}

/// Re-validates a solver's certificate against its instance, independently
/// of the solver: sets, colorings, orders, trees, embeddings and tours are
/// checked structurally and against the claimed optimum and decision.
pub fn certificate_is_valid(problem: Problem, instance: &Instance, result: &SolveResult) -> bool {
    let count = match result.optimum {
        Some(Optimum::Count(c)) => Some(c),
        _ => None,
    };
    match (problem, instance, &result.certificate) {
        (Problem::IndependentSet, Instance::GraphInt(g, _), Some(Certificate::Vertices(s))) => {
            distinct_in(g, s) && s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v))) && count == Some(s.len())
        }
        (Problem::Clique, Instance::GraphInt(g, _), Some(Certificate::Vertices(s))) => {
            distinct_in(g, s) && s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v))) && count == Some(s.len())
        }
        (Problem::VertexCover, Instance::GraphInt(g, _), Some(Certificate::Vertices(s))) => {
            distinct_in(g, s) && g.edges().all(|(u, v)| s.contains(&u) || s.contains(&v)) && count == Some(s.len())
        }
        (Problem::VertexColoring, Instance::GraphInt(g, _), Some(Certificate::Coloring(c))) => {
            c.len() == g.n()
                && g.edges().all(|(u, v)| c[u] != c[v])
                && count == Some(c.iter().collect::<alloc::collections::BTreeSet<_>>().len())
        }
        (Problem::CliqueCover, Instance::GraphInt(g, _), Some(Certificate::Cliques(parts))) => {
            let all: Vec<usize> = parts.iter().flatten().copied().collect();
            all.len() == g.n()
                && distinct_in(g, &all)
                && parts.iter().all(|p| !p.is_empty() && p.iter().all(|&u| p.iter().all(|&v| u == v || g.has_edge(u, v))))
                && count == Some(parts.len())
        }
        (Problem::HamiltonianPath, Instance::Graph(g), Some(Certificate::Order(o))) => {
            result.decision && o.len() == g.n() && distinct_in(g, o) && o.windows(2).all(|p| g.has_edge(p[0], p[1]))
        }
        (Problem::HamiltonianCycle, Instance::Graph(g), Some(Certificate::Order(o))) => {
            result.decision
                && g.n() >= 3
                && o.len() == g.n()
                && distinct_in(g, o)
                && o.windows(2).all(|p| g.has_edge(p[0], p[1]))
                && g.has_edge(o[0], o[o.len() - 1])
        }
        (Problem::BoundedDegreeSpanningTree, Instance::GraphInt(g, k), Some(Certificate::Tree(t))) => {
            let Ok(tree) = Graph::from_edges(g.n(), t.iter().copied()) else {
                return false;
            };
            result.decision
                && t.len() + 1 == g.n()
                && tree.is_connected()
                && tree.max_degree() <= *k
                && t.iter().all(|&(u, v)| g.has_edge(u, v))
        }
        (Problem::SubgraphIsomorphism, Instance::GraphPair(g, h), Some(Certificate::Embedding(m))) => {
            result.decision && m.len() == h.n() && distinct_in(g, m) && h.edges().all(|(u, v)| g.has_edge(m[u], m[v]))
        }
        (Problem::TravellingSalesperson, Instance::WeightedBudget(w, k), Some(Certificate::Tour(t))) => {
            let n = w.n();
            let distinct = t.len() == n && t.iter().collect::<alloc::collections::BTreeSet<_>>().len() == n;
            if !distinct || t.iter().any(|&v| v >= n) {
                return false;
            }
            let cost = (0..n).fold(Weight::zero(), |acc, i| acc + w.weight(t[i], t[(i + 1) % n]));
            result.optimum == Some(Optimum::Cost(cost)) && result.decision == (cost <= *k)
        }
        // negative answers without a witness
        (_, _, None) => !result.decision,
        _ => false,
    }
}

fn distinct_in(g: &Graph, vs: &[usize]) -> bool {
    let mask = vs.iter().fold(0u64, |m, &v| m | 1u64.checked_shl(v as u32).unwrap_or(0));
    vs.iter().all(|&v| v < g.n()) && mask.count_ones() as usize == vs.len()
}
