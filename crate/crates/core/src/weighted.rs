//! Complete graphs with exact rational edge weights.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{pairs, MAX_VERTICES};

/// Exact edge weight.
pub type Weight = Rational64;

/// Complete graph on `n` vertices with a weight on every unordered pair.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    n: usize,
    weights: Vec<Weight>,
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // pairs before row u, then offset within the row
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

impl WeightedGraph {
    /// Weighted graph with `weight(u, v)` computed for every pair `u < v`.
    pub fn from_fn<F: FnMut(usize, usize) -> Weight>(n: usize, mut weight: F) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large: {n} vertices");
        WeightedGraph { n, weights: pairs(n).map(|(u, v)| weight(u, v)).collect() }
    }

    /// Builds from explicit `(u, v, weight)` triples, which must cover every
    /// pair exactly once with non-negative weights.
    pub fn from_weights<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Weight)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut slots: Vec<Option<Weight>> = alloc::vec![None; n * n.saturating_sub(1) / 2];
        for (u, v, w) in triples {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexNotInGraph { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if w.is_negative() {
                return Err(Error::NegativeWeight { u, v, weight: alloc::format!("{w}") });
            }
            let slot = &mut slots[pair_index(n, u, v)];
            if slot.is_some() {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            *slot = Some(w);
        }
        let mut weights = Vec::with_capacity(slots.len());
        for ((u, v), w) in pairs(n).zip(slots) {
            weights.push(w.ok_or(Error::IncompleteWeights(u, v))?);
        }
        Ok(WeightedGraph { n, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, u: usize, v: usize) -> Weight {
        assert!(u != v && u < self.n && v < self.n, "no pair {u}-{v}");
        self.weights[pair_index(self.n, u, v)]
    }

    /// `(u, v, weight)` for every pair `u < v`, lexicographically.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, Weight)> + '_ {
        pairs(self.n).zip(self.weights.iter().copied()).map(|((u, v), w)| (u, v, w))
    }

    /// Whether every weight is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero() || *w == Weight::from_integer(1))
    }

    /// Removes `v` and relabels the rest order-preservingly.
    pub fn delete_vertex(&self, v: usize) -> Result<WeightedGraph> {
        if v >= self.n {
            return Err(Error::VertexNotInGraph { vertex: v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        Ok(WeightedGraph::from_fn(self.n - 1, |a, b| self.weight(keep[a], keep[b])))
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedGraph({})", self)
    }
}

/// One-line form `n:u-v=w,...` listing every pair.
impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, (u, v, w)) in self.triples().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}={w}")?;
        }
        Ok(())
    }
}
