//! Bi-reductions between graph problems and their finite verification.
//!
//! A [`Reduction`] is a bijection between well-formed instance spaces:
//! `apply` and `invert` are mutually inverse there, and answer preservation
//! is checked against the exact solvers. The graph part `f_G` maps each
//! registered source class into its image class, and each image class is
//! checked for closure under vertex deletion.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{check_hereditary_closure, is_member, members, AnyGraph, ClassId, ClosureReport};
use crate::enumerate::{all_small_graphs, sample_with, MAX_EXHAUSTIVE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{Instance, Problem};
use crate::transforms::{complement, k_complete, k_extract};
use crate::weighted::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionId {
    /// `⟨G, k⟩ ↦ ⟨G, |V| − k⟩`
    Is2Vc,
    /// `⟨G, k⟩ ↦ ⟨co(G), k⟩`
    Is2Clique,
    /// `⟨G, n⟩ ↦ ⟨G, K_n⟩`
    Clique2Si,
    /// `⟨G⟩ ↦ ⟨K(G), 0⟩`
    Hc2Tsp,
    /// `⟨G, k⟩ ↦ ⟨co(G), k⟩`
    Vcol2Cc,
    /// `⟨G⟩ ↦ ⟨G, 2⟩`
    Hp2Bdst,
}

impl ReductionId {
    pub const ALL: [ReductionId; 6] = [
        ReductionId::Is2Vc,
        ReductionId::Is2Clique,
        ReductionId::Clique2Si,
        ReductionId::Hc2Tsp,
        ReductionId::Vcol2Cc,
        ReductionId::Hp2Bdst,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ReductionId::Is2Vc => "is2vc",
            ReductionId::Is2Clique => "is2clique",
            ReductionId::Clique2Si => "clique2si",
            ReductionId::Hc2Tsp => "hc2tsp",
            ReductionId::Vcol2Cc => "vcol2cc",
            ReductionId::Hp2Bdst => "hp2bdst",
        }
    }

    pub fn reduction(self) -> Reduction {
        Reduction::new(self)
    }
}

impl fmt::Display for ReductionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ReductionId {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        ReductionId::ALL
            .into_iter()
            .find(|r| r.token().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                alloc::format!("unknown reduction '{s}' (expected one of is2vc, is2clique, clique2si, hc2tsp, vcol2cc, hp2bdst)")
            })
    }
}

/// A bi-reduction with its source/target problems and the class pairs
/// `(X, f_G(X))` it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub id: ReductionId,
    pub source: Problem,
    pub target: Problem,
    pub class_pairs: &'static [(ClassId, ClassId)],
}

impl Reduction {
    pub fn new(id: ReductionId) -> Self {
        use ClassId as C;
        use Problem as P;
        let (source, target, class_pairs): (_, _, &'static [(ClassId, ClassId)]) = match id {
            ReductionId::Is2Vc => (P::IndependentSet, P::VertexCover, &[(C::T, C::T)]),
            ReductionId::Is2Clique => (P::IndependentSet, P::Clique, &[(C::T, C::CoT)]),
            ReductionId::Clique2Si => (P::Clique, P::SubgraphIsomorphism, &[(C::CoT, C::CoT)]),
            ReductionId::Hc2Tsp => (P::HamiltonianCycle, P::TravellingSalesperson, &[(C::Q, C::KQ), (C::RQ, C::KRQ)]),
            ReductionId::Vcol2Cc => (P::VertexColoring, P::CliqueCover, &[(C::CoLT, C::LT)]),
            ReductionId::Hp2Bdst => (P::HamiltonianPath, P::BoundedDegreeSpanningTree, &[(C::Q, C::Q)]),
        };
        Reduction { id, source, target, class_pairs }
    }

    /// The graph part `f_G`.
    pub fn graph_map(&self, g: &Graph) -> AnyGraph {
        match self.id {
            ReductionId::Is2Vc | ReductionId::Clique2Si | ReductionId::Hp2Bdst => AnyGraph::Plain(g.clone()),
            ReductionId::Is2Clique | ReductionId::Vcol2Cc => AnyGraph::Plain(complement(g)),
            ReductionId::Hc2Tsp => AnyGraph::Weighted(k_complete(g)),
        }
    }

    /// Maps a source instance to its target instance.
    pub fn apply(&self, w: &Instance) -> Result<Instance> {
        use Instance as I;
        Ok(match (self.id, w) {
            (ReductionId::Is2Vc, I::GraphInt(g, k)) => {
                if *k > g.n() {
                    return Err(Error::InstanceShape("<G, k> with k <= |V(G)>"));
                }
                I::GraphInt(g.clone(), g.n() - k)
            }
            (ReductionId::Is2Clique | ReductionId::Vcol2Cc, I::GraphInt(g, k)) => I::GraphInt(complement(g), *k),
            (ReductionId::Clique2Si, I::GraphInt(g, k)) => {
                if *k > crate::graph::MAX_VERTICES {
                    return Err(Error::TooLarge { n: *k, max: crate::graph::MAX_VERTICES });
                }
                I::GraphPair(g.clone(), Graph::complete(*k))
            }
            (ReductionId::Hc2Tsp, I::Graph(g)) => I::WeightedBudget(k_complete(g), Weight::zero()),
            (ReductionId::Hp2Bdst, I::Graph(g)) => I::GraphInt(g.clone(), 2),
            _ => return Err(Error::InstanceShape(self.source.shape())),
        })
    }

    /// The unique source instance that `apply` sends to `y`.
    pub fn invert(&self, y: &Instance) -> Result<Instance> {
        use Instance as I;
        Ok(match (self.id, y) {
            (ReductionId::Is2Vc, I::GraphInt(g, k)) => {
                if *k > g.n() {
                    return Err(Error::NotInImage("vertex-cover budget exceeds |V(G)|"));
                }
                I::GraphInt(g.clone(), g.n() - k)
            }
            (ReductionId::Is2Clique | ReductionId::Vcol2Cc, I::GraphInt(g, k)) => I::GraphInt(complement(g), *k),
            (ReductionId::Clique2Si, I::GraphPair(g, h)) => {
                if *h != Graph::complete(h.n()) {
                    return Err(Error::NotInImage("pattern is not a complete graph"));
                }
                I::GraphInt(g.clone(), h.n())
            }
            (ReductionId::Hc2Tsp, I::WeightedBudget(w, k)) => {
                if !k.is_zero() {
                    return Err(Error::NotInImage("budget must be 0"));
                }
                if !w.is_binary() {
                    return Err(Error::NotInImage("weights must be 0 or 1"));
                }
                I::Graph(k_extract(w)?)
            }
            (ReductionId::Hp2Bdst, I::GraphInt(g, k)) => {
                if *k != 2 {
                    return Err(Error::NotInImage("degree bound must be 2"));
                }
                I::Graph(g.clone())
            }
            _ => return Err(Error::InstanceShape(self.target.shape())),
        })
    }

    /// Solves `w` and its image; also checks `invert ∘ apply` and
    /// `apply ∘ invert` on this instance.
    pub fn check_instance(&self, w: &Instance) -> Result<InstanceOutcome> {
        let y = self.apply(w)?;
        let back = self.invert(&y)?;
        let round_trip = back == *w && self.apply(&back)? == y;
        let source_decision = self.source.solve(w)?.decision;
        let target_decision = self.target.solve(&y)?.decision;
        Ok(InstanceOutcome { source_decision, target_decision, round_trip })
    }

    /// Whether the answer is preserved and the round trip is exact.
    pub fn verify_instance(&self, w: &Instance) -> Result<bool> {
        let o = self.check_instance(w)?;
        Ok(o.source_decision == o.target_decision && o.round_trip)
    }

    /// `f_G(g)` for a member `g` of the registered source class `c`,
    /// asserting the result lies in the paired image class.
    pub fn class_image(&self, c: ClassId, g: &Graph) -> Result<AnyGraph> {
        let &(_, image) = self.class_pairs.iter().find(|(x, _)| *x == c).ok_or(Error::UnregisteredClass(c))?;
        if !c.contains(g)? {
            return Err(Error::NotMember(c));
        }
        let out = self.graph_map(g);
        if !is_member(image, &out)? {
            return Err(Error::ImageContainment(image));
        }
        Ok(out)
    }

    /// Every dedup-enumerated graph with at most `min(max_n, 6)` vertices,
    /// with every parameter `0 <= k <= n` for parameterized sources.
    pub fn exhaustive_instances(&self, max_n: usize) -> Vec<Instance> {
        let mut out = Vec::new();
        for g in all_small_graphs(max_n.min(MAX_EXHAUSTIVE)) {
            if self.source == Problem::HamiltonianCycle || self.source == Problem::HamiltonianPath {
                out.push(Instance::Graph(g));
            } else {
                out.extend((0..=g.n()).map(|k| Instance::GraphInt(g.clone(), k)));
            }
        }
        out
    }

    /// `samples` seeded random instances. Vertex counts are uniform in
    /// `7..=max_n` (or `1..=max_n` when `max_n < 7`), edge probabilities
    /// uniform in `[0.15, 0.85]` and parameters uniform in `0..=n`.
    pub fn sampled_instances(&self, max_n: usize, samples: usize, seed: u64) -> Vec<Instance> {
        if max_n == 0 {
            return Vec::new();
        }
        let low = if max_n > MAX_EXHAUSTIVE { MAX_EXHAUSTIVE + 1 } else { 1 };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples)
            .map(|_| {
                let n = rng.gen_range(low..=max_n);
                let p = rng.gen_range(0.15..=0.85);
                let g = sample_with(&mut rng, n, p).expect("valid probability");
                match self.source {
                    Problem::HamiltonianCycle | Problem::HamiltonianPath => Instance::Graph(g),
                    _ => {
                        let k = rng.gen_range(0..=n);
                        Instance::GraphInt(g, k)
                    }
                }
            })
            .collect()
    }

    /// Checks one instance, turning a failure into a [`Violation`].
    pub fn violation(&self, w: &Instance) -> Option<Violation> {
        let instance = w.to_string();
        match self.check_instance(w) {
            Ok(o) if o.source_decision != o.target_decision => Some(Violation {
                instance,
                source_decision: Some(o.source_decision),
                target_decision: Some(o.target_decision),
                reason: ViolationKind::AnswerMismatch,
            }),
            Ok(o) if !o.round_trip => Some(Violation {
                instance,
                source_decision: Some(o.source_decision),
                target_decision: Some(o.target_decision),
                reason: ViolationKind::RoundTrip,
            }),
            Ok(_) => None,
            Err(e) => Some(Violation {
                instance,
                source_decision: None,
                target_decision: None,
                reason: ViolationKind::Error(e.to_string()),
            }),
        }
    }

    /// Source and image classes whose deletion closure a sweep checks, each
    /// once, in registration order.
    pub fn closure_classes(&self) -> Vec<ClassId> {
        let mut out: Vec<ClassId> = Vec::new();
        for &(x, y) in self.class_pairs {
            for c in [x, y] {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Applies `f_G` to every generated member of `pair.0` within the image
    /// class's budget and counts results outside `pair.1`.
    pub fn check_containment(&self, pair: (ClassId, ClassId), budget: usize, seed: u64) -> ContainmentReport {
        let (source, image) = pair;
        let mut report = ContainmentReport { source, image, budget, members: 0, violations: Vec::new() };
        for x in members(source, budget, seed) {
            let AnyGraph::Plain(g) = x else { continue };
            report.members += 1;
            if let Err(e) = self.class_image(source, &g) {
                report.violations.push(alloc::format!("{g}: {e}"));
            }
        }
        report.violations.sort();
        report
    }

    /// Everything a sweep runs, as independent units of work.
    pub fn plan(&self, config: &SweepConfig) -> SweepPlan {
        let budget = |c: ClassId| config.closure_budget.unwrap_or_else(|| c.default_budget());
        SweepPlan {
            exhaustive: self.exhaustive_instances(config.max_n),
            sampled: self.sampled_instances(config.max_n, config.samples, config.seed),
            closure: self.closure_classes().into_iter().map(|c| (c, budget(c))).collect(),
            containment: self.class_pairs.iter().map(|&(x, y)| ((x, y), budget(x).min(budget(y)))).collect(),
        }
    }
}

/// Outcome of [`Reduction::check_instance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub source_decision: bool,
    pub target_decision: bool,
    pub round_trip: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    AnswerMismatch,
    RoundTrip,
    Error(String),
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::AnswerMismatch => f.write_str("answer-mismatch"),
            ViolationKind::RoundTrip => f.write_str("round-trip"),
            ViolationKind::Error(e) => write!(f, "error: {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub instance: String,
    pub source_decision: Option<bool>,
    pub target_decision: Option<bool>,
    pub reason: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub source: ClassId,
    pub image: ClassId,
    pub budget: usize,
    pub members: usize,
    pub violations: Vec<String>,
}

/// Sweep parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Overrides every class's default closure budget.
    pub closure_budget: Option<usize>,
}

impl SweepConfig {
    /// Default sweep for `id`: samples up to 12 vertices for the
    /// independent-set reductions and 10 otherwise, 200 samples, seed 42.
    pub fn for_reduction(id: ReductionId) -> Self {
        let max_n = match id {
            ReductionId::Is2Vc | ReductionId::Is2Clique => 12,
            _ => 10,
        };
        SweepConfig { max_n, samples: 200, seed: 42, closure_budget: None }
    }
}

/// Independent work items of one sweep.
#[derive(Debug, Clone)]
pub struct SweepPlan {
    pub exhaustive: Vec<Instance>,
    pub sampled: Vec<Instance>,
    pub closure: Vec<(ClassId, usize)>,
    pub containment: Vec<((ClassId, ClassId), usize)>,
}

/// Result of a verification sweep. Violations are sorted, so the report is
/// independent of the order in which work items ran.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub reduction: ReductionId,
    pub exhaustive_count: usize,
    pub sampled_count: usize,
    pub violations: Vec<Violation>,
    pub closure: Vec<ClosureReport>,
    pub containment: Vec<ContainmentReport>,
    pub seed: u64,
}

impl VerificationReport {
    pub fn assemble(
        reduction: ReductionId,
        seed: u64,
        plan: &SweepPlan,
        mut violations: Vec<Violation>,
        closure: Vec<ClosureReport>,
        containment: Vec<ContainmentReport>,
    ) -> Self {
        violations.sort();
        VerificationReport {
            reduction,
            exhaustive_count: plan.exhaustive.len(),
            sampled_count: plan.sampled.len(),
            violations,
            closure,
            containment,
            seed,
        }
    }

    /// Instance violations plus closure and containment violations.
    pub fn total_violations(&self) -> usize {
        self.violations.len()
            + self.closure.iter().map(|c| c.violations.len()).sum::<usize>()
            + self.containment.iter().map(|c| c.violations.len()).sum::<usize>()
    }

    pub fn is_clean(&self) -> bool {
        self.total_violations() == 0
    }
}

/// Runs a whole sweep on the current thread.
pub fn verify_sweep(r: &Reduction, config: &SweepConfig) -> VerificationReport {
    let plan = r.plan(config);
    let violations = plan.exhaustive.iter().chain(&plan.sampled).filter_map(|w| r.violation(w)).collect();
    let closure = plan.closure.iter().map(|&(c, b)| check_hereditary_closure(c, b, config.seed)).collect();
    let containment = plan.containment.iter().map(|&(p, b)| r.check_containment(p, b, config.seed)).collect();
    VerificationReport::assemble(r.id, config.seed, &plan, violations, closure, containment)
}
