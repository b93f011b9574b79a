//! Boundary classes `T`, `Q` and their images under `co`, `L`, `R`, `K`:
//! generators, membership recognizers and the deletion-closure check.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::iso::canonical_form;
use crate::transforms::{complement, contract_triangles, k_complete, k_extract, line_graph, line_root, r_contract, r_expand, triangles};
use crate::weighted::WeightedGraph;

/// The classes this crate can generate and recognize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassId {
    /// Forests whose components are spiders `T_{i,j,k}`.
    T,
    /// Forests whose components are caterpillars with hairs.
    Q,
    CoT,
    LT,
    CoLT,
    /// Graphs whose components are induced subgraphs of `R(H)`, `H` in `Q`.
    RQ,
    KQ,
    KRQ,
}

impl ClassId {
    pub const ALL: [ClassId; 8] =
        [ClassId::T, ClassId::Q, ClassId::CoT, ClassId::LT, ClassId::CoLT, ClassId::RQ, ClassId::KQ, ClassId::KRQ];

    /// Lowercase CLI token.
    pub fn token(self) -> &'static str {
        match self {
            ClassId::T => "t",
            ClassId::Q => "q",
            ClassId::CoT => "cot",
            ClassId::LT => "lt",
            ClassId::CoLT => "colt",
            ClassId::RQ => "rq",
            ClassId::KQ => "kq",
            ClassId::KRQ => "krq",
        }
    }

    /// Human-readable name, e.g. `co(L(T))`.
    pub fn name(self) -> &'static str {
        match self {
            ClassId::T => "T",
            ClassId::Q => "Q",
            ClassId::CoT => "co(T)",
            ClassId::LT => "L(T)",
            ClassId::CoLT => "co(L(T))",
            ClassId::RQ => "R(Q)",
            ClassId::KQ => "K(Q)",
            ClassId::KRQ => "K(R(Q))",
        }
    }

    /// Members are weighted complete graphs.
    pub fn is_weighted(self) -> bool {
        matches!(self, ClassId::KQ | ClassId::KRQ)
    }

    /// Closure budget (member vertex count) used by default sweeps.
    pub fn default_budget(self) -> usize {
        if self.is_weighted() {
            10
        } else {
            12
        }
    }

    /// Membership of an unweighted graph.
    pub fn contains(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            ClassId::T => is_spider_forest(g),
            ClassId::Q => is_caterpillar_forest(g),
            ClassId::CoT => is_spider_forest(&complement(g)),
            ClassId::LT => line_root(g, ClassId::T)?.is_some(),
            ClassId::CoLT => line_root(&complement(g), ClassId::T)?.is_some(),
            ClassId::RQ => is_rq(g),
            ClassId::KQ | ClassId::KRQ => {
                return Err(Error::ClassTypeMismatch { class: self, expected: "weighted" })
            }
        })
    }

    /// Membership of a weighted graph.
    pub fn contains_weighted(self, w: &WeightedGraph) -> Result<bool> {
        let base = match self {
            ClassId::KQ => ClassId::Q,
            ClassId::KRQ => ClassId::RQ,
            _ => return Err(Error::ClassTypeMismatch { class: self, expected: "unweighted" }),
        };
        if !w.is_binary() {
            return Ok(false);
        }
        base.contains(&k_extract(w)?)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| alloc::format!("unknown class '{s}' (expected one of t, q, cot, lt, colt, rq, kq, krq)"))
    }
}

/// A plain or weighted graph, for operations spanning both kinds of class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Plain(Graph),
    Weighted(WeightedGraph),
}

impl AnyGraph {
    pub fn n(&self) -> usize {
        match self {
            AnyGraph::Plain(g) => g.n(),
            AnyGraph::Weighted(w) => w.n(),
        }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<AnyGraph> {
        Ok(match self {
            AnyGraph::Plain(g) => AnyGraph::Plain(g.delete_vertex(v)?),
            AnyGraph::Weighted(w) => AnyGraph::Weighted(w.delete_vertex(v)?),
        })
    }
}

impl fmt::Display for AnyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyGraph::Plain(g) => g.fmt(f),
            AnyGraph::Weighted(w) => w.fmt(f),
        }
    }
}

/// Class membership; errors when the graph kind does not match the class.
pub fn is_member(c: ClassId, x: &AnyGraph) -> Result<bool> {
    match x {
        AnyGraph::Plain(g) => c.contains(g),
        AnyGraph::Weighted(w) => c.contains_weighted(w),
    }
}

/// Leg lengths of a spider `T_{i,j,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpiderSpec {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl SpiderSpec {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        SpiderSpec { i, j, k }
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.i + self.j + self.k
    }
}

/// Center 0 with paths of `i`, `j` and `k` further vertices, numbered leg by leg
/// outward from the center.
pub fn gen_spider(spec: SpiderSpec) -> Graph {
    let mut g = Graph::empty(spec.vertex_count());
    let mut next = 1;
    for len in [spec.i, spec.j, spec.k] {
        let mut prev = 0;
        for _ in 0..len {
            g.link(prev, next);
            prev = next;
            next += 1;
        }
    }
    g
}

/// Hair lengths along the spine of a caterpillar.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaterpillarSpec {
    pub hairs: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(hairs: Vec<usize>) -> Self {
        CaterpillarSpec { hairs }
    }

    pub fn vertex_count(&self) -> usize {
        self.hairs.len() + self.hairs.iter().sum::<usize>()
    }
}

/// Spine `0..n` followed by each hair in spine order.
pub fn gen_caterpillar(spec: &CaterpillarSpec) -> Result<Graph> {
    let spine = spec.hairs.len();
    if spine == 0 {
        return Err(Error::InstanceShape("a caterpillar with at least one spine vertex"));
    }
    let total = spec.vertex_count();
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { n: total, max: crate::graph::MAX_VERTICES });
    }
    let mut g = Graph::path(spine);
    g = g.disjoint_union(&Graph::empty(total - spine))?;
    let mut next = spine;
    for (s, &len) in spec.hairs.iter().enumerate() {
        let mut prev = s;
        for _ in 0..len {
            g.link(prev, next);
            prev = next;
            next += 1;
        }
    }
    debug_assert!(g.max_degree() <= 3);
    Ok(g)
}

/// Every component is a tree with maximum degree 3 and at most one vertex of
/// degree 3.
fn is_spider_forest(g: &Graph) -> bool {
    g.is_forest() && g.max_degree() <= 3 && g.components().iter().all(|c| cubic_in(g, *c).len() <= 1)
}

/// Every component is a subcubic tree whose cubic vertices lie on one path.
fn is_caterpillar_forest(g: &Graph) -> bool {
    g.is_forest() && g.max_degree() <= 3 && g.components().iter().all(|c| on_one_path(g, cubic_in(g, *c)))
}

fn cubic_in(g: &Graph, comp: VertexSet) -> VertexSet {
    VertexSet::from_vertices(comp.iter().filter(|&v| g.degree(v) == 3))
}

/// Inside one tree component: do the `marked` vertices lie on a single path?
/// Checked against the path between the two marked vertices farthest apart.
fn on_one_path(tree: &Graph, marked: VertexSet) -> bool {
    if marked.len() <= 2 {
        return true;
    }
    let dist: Vec<(usize, Vec<usize>)> = marked.iter().map(|v| (v, tree.distances(v))).collect();
    let mut far = (0, 0, 0);
    for (a, da) in &dist {
        for b in marked.iter() {
            if da[b] > far.2 {
                far = (*a, b, da[b]);
            }
        }
    }
    let (a, b, d) = far;
    let da = &dist.iter().find(|(v, _)| *v == a).expect("marked").1;
    let db = &dist.iter().find(|(v, _)| *v == b).expect("marked").1;
    marked.iter().all(|c| da[c] + db[c] == d)
}

/// Strict image test: `g = R(h)` for some `h` in `Q`.
pub fn is_r_image_of_q(g: &Graph) -> bool {
    r_contract(g).is_some_and(|h| is_caterpillar_forest(&h))
}

/// Every component of `g` is an induced subgraph of `R(h)` for a caterpillar
/// `h`. Holds iff triangles are vertex-disjoint, each triangle corner has at
/// most one neighbor outside its triangle, every other vertex has degree at
/// most 2, contracting the triangles gives a forest, and in each of its trees
/// the contracted triangles lie on one path.
fn is_rq(g: &Graph) -> bool {
    let tris = triangles(g);
    let mut corner = VertexSet::EMPTY;
    for t in &tris {
        for &v in t {
            if corner.contains(v) {
                return false;
            }
            corner.insert(v);
        }
    }
    for v in 0..g.n() {
        let limit = if corner.contains(v) { 3 } else { 2 };
        if g.degree(v) > limit {
            return false;
        }
    }
    let Some((rep, h)) = contract_triangles(g) else {
        return false;
    };
    if !h.is_forest() {
        return false;
    }
    let marked = VertexSet::from_vertices(tris.iter().map(|t| rep[t[0]]));
    h.components().iter().all(|c| on_one_path(&h, VertexSet(c.0 & marked.0)))
}

/// Connected members of `c` with exactly `edges` edges, one per isomorphism
/// class; the candidate roots searched by [`line_root`].
pub fn connected_roots(c: ClassId, edges: usize) -> Result<Vec<Graph>> {
    match c {
        ClassId::T => Ok(spiders_with_edges(edges).into_iter().map(gen_spider).collect()),
        ClassId::Q => Ok(dedup(caterpillar_specs(edges + 1).filter_map(|s| gen_caterpillar(&s).ok()))),
        other => Err(Error::NoRootGenerator(other)),
    }
}

/// Spider specs `i >= j >= k` with `i + j + k = edges`.
fn spiders_with_edges(edges: usize) -> Vec<SpiderSpec> {
    let mut out = Vec::new();
    for i in 0..=edges {
        for j in 0..=i.min(edges - i) {
            let k = edges - i - j;
            if k <= j {
                out.push(SpiderSpec::new(i, j, k));
            }
        }
    }
    out
}

/// All hair sequences whose caterpillar has exactly `vertices` vertices.
fn caterpillar_specs(vertices: usize) -> impl Iterator<Item = CaterpillarSpec> {
    // compositions of `vertices` into (1 + hair) parts
    let count = if vertices == 0 { 0 } else { 1u64 << (vertices - 1) };
    (0..count).map(move |cuts| {
        let mut hairs = Vec::new();
        let mut part = 1;
        for b in 0..vertices - 1 {
            if cuts >> b & 1 == 1 {
                hairs.push(part - 1);
                part = 1;
            } else {
                part += 1;
            }
        }
        hairs.push(part - 1);
        CaterpillarSpec::new(hairs)
    })
}

fn dedup<I: IntoIterator<Item = Graph>>(graphs: I) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    graphs.into_iter().filter(|g| seen.insert(canonical_form(g))).collect()
}

/// Connected generated members of an unweighted class with at most `budget`
/// vertices, one per isomorphism class.
fn connected_members(c: ClassId, budget: usize) -> Vec<Graph> {
    match c {
        ClassId::T => dedup((0..budget).flat_map(spiders_with_edges).map(gen_spider)),
        ClassId::Q => dedup((1..=budget).flat_map(caterpillar_specs).filter_map(|s| gen_caterpillar(&s).ok())),
        ClassId::LT => dedup(
            (1..=budget)
                .flat_map(spiders_with_edges)
                .filter_map(|s| line_graph(&gen_spider(s)).ok().map(|lg| lg.graph)),
        ),
        ClassId::RQ => dedup(
            connected_members(ClassId::Q, budget)
                .iter()
                .filter_map(|q| r_expand(q).ok())
                .filter(|r| r.n() <= budget),
        ),
        _ => Vec::new(),
    }
}

/// Number of seeded random three-component unions added to every member list.
const SAMPLED_UNIONS: usize = 100;

/// Connected members plus every two-component union within budget and a
/// seeded sample of three-component unions.
fn forests(connected: &[Graph], budget: usize, seed: u64) -> Vec<Graph> {
    let mut out: Vec<Graph> = connected.to_vec();
    for (a, ga) in connected.iter().enumerate() {
        for gb in &connected[a..] {
            if ga.n() + gb.n() <= budget {
                out.push(ga.disjoint_union(gb).expect("within budget"));
            }
        }
    }
    let small: Vec<&Graph> = connected.iter().filter(|g| 3 * g.n() <= budget).collect();
    if !small.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut added = 0;
        for _ in 0..SAMPLED_UNIONS * 20 {
            if added == SAMPLED_UNIONS {
                break;
            }
            let parts: Vec<&Graph> = (0..3).map(|_| small[rng.gen_range(0..small.len())]).collect();
            if parts.iter().map(|g| g.n()).sum::<usize>() <= budget {
                let union = parts[0]
                    .disjoint_union(parts[1])
                    .and_then(|g| g.disjoint_union(parts[2]))
                    .expect("within budget");
                out.push(union);
                added += 1;
            }
        }
    }
    out
}

/// Generated members of `c` with at most `budget` vertices. Image classes
/// are produced by transforming generated members of the underlying class;
/// `seed` drives the sampled multi-component unions.
pub fn members(c: ClassId, budget: usize, seed: u64) -> Vec<AnyGraph> {
    let plain = |base: ClassId| forests(&connected_members(base, budget), budget, seed);
    match c {
        ClassId::T | ClassId::Q | ClassId::LT | ClassId::RQ => plain(c).into_iter().map(AnyGraph::Plain).collect(),
        ClassId::CoT => plain(ClassId::T).iter().map(|g| AnyGraph::Plain(complement(g))).collect(),
        ClassId::CoLT => plain(ClassId::LT).iter().map(|g| AnyGraph::Plain(complement(g))).collect(),
        ClassId::KQ => plain(ClassId::Q).iter().map(|g| AnyGraph::Weighted(k_complete(g))).collect(),
        ClassId::KRQ => plain(ClassId::RQ).iter().map(|g| AnyGraph::Weighted(k_complete(g))).collect(),
    }
}

/// A member whose vertex-deleted subgraph left the class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClosureViolation {
    pub member: String,
    pub deleted: usize,
    /// Recognizer error, when the check failed rather than answered `false`.
    pub error: Option<String>,
}

/// Outcome of [`check_hereditary_closure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub class: ClassId,
    pub budget: usize,
    pub members: usize,
    pub deletions: usize,
    pub violations: Vec<ClosureViolation>,
}

/// Deletes every vertex of every generated member of `c` up to `budget`
/// vertices and checks the result is still recognized as a member.
pub fn check_hereditary_closure(c: ClassId, budget: usize, seed: u64) -> ClosureReport {
    let members = members(c, budget, seed);
    let mut report = ClosureReport { class: c, budget, members: members.len(), deletions: 0, violations: Vec::new() };
    for x in &members {
        for v in 0..x.n() {
            report.deletions += 1;
            let verdict = x.delete_vertex(v).and_then(|y| is_member(c, &y));
            let error = match verdict {
                Ok(true) => continue,
                Ok(false) => None,
                Err(e) => Some(e.to_string()),
            };
            report.violations.push(ClosureViolation { member: x.to_string(), deleted: v, error });
        }
    }
    report.violations.sort();
    report
}
