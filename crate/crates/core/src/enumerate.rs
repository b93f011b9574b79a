//! Exhaustive small-graph enumeration and seeded random sampling.

use alloc::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{pairs, Graph};
use crate::iso::canonical_form;

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_EXHAUSTIVE: usize = 6;

/// Every labeled graph on `n` vertices, or one representative per
/// isomorphism class when `dedup` is set. Representatives are the first
/// labeled graph of their class in edge-mask order.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<Graphs> {
    if n == 0 || n > MAX_EXHAUSTIVE {
        return Err(Error::EnumerationBound(n));
    }
    let pair_count = n * (n - 1) / 2;
    Ok(Graphs {
        n,
        next: 0,
        end: 1u64 << pair_count,
        seen: dedup.then(BTreeSet::new),
    })
}

/// Iterator returned by [`enumerate_graphs`].
#[derive(Debug)]
pub struct Graphs {
    n: usize,
    next: u64,
    end: u64,
    seen: Option<BTreeSet<Graph>>,
}

impl Iterator for Graphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let g = Graph::from_pair_mask(self.n, self.next);
            self.next += 1;
            match &mut self.seen {
                None => return Some(g),
                Some(seen) => {
                    if seen.insert(canonical_form(&g)) {
                        return Some(g);
                    }
                }
            }
        }
        None
    }
}

/// Dedup-enumerated graphs for every `n` in `1..=max_n` (capped at
/// [`MAX_EXHAUSTIVE`]), smallest first.
pub fn all_small_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n.min(MAX_EXHAUSTIVE))
        .flat_map(|n| enumerate_graphs(n, true).expect("n within exhaustive range"))
}

/// Random labeled graph where each pair is an edge with probability
/// `edge_probability`; deterministic in `(n, edge_probability, seed)`.
pub fn sample_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(&mut rng, n, edge_probability)
}

pub(crate) fn sample_with<R: Rng>(rng: &mut R, n: usize, edge_probability: f64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::InvalidProbability(edge_probability));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge { n, max: crate::graph::MAX_VERTICES });
    }
    let mut g = Graph::empty(n);
    for (u, v) in pairs(n) {
        if rng.gen::<f64>() < edge_probability {
            g.link(u, v);
        }
    }
    Ok(g)
}
