//! Parallel verification sweeps.

use bredux_core::classes::check_hereditary_closure;
use bredux_core::reductions::{Reduction, SweepConfig, VerificationReport};
use rayon::prelude::*;

/// Worker count: `--jobs`, else `BREDUX_JOBS`, else rayon's default.
pub fn resolve_jobs(flag: Option<usize>) -> Result<usize, String> {
    if let Some(j) = flag {
        return if j == 0 { Err("--jobs must be at least 1".into()) } else { Ok(j) };
    }
    match std::env::var("BREDUX_JOBS") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(j) if j > 0 => Ok(j),
            _ => Err(format!("BREDUX_JOBS must be a positive integer, got '{s}'")),
        },
        Err(_) => Ok(0),
    }
}

/// Builds a pool with `jobs` threads (0 = rayon default).
pub fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool")
}

/// Same result as [`bredux_core::reductions::verify_sweep`], computed on
/// `pool`.
pub fn parallel_sweep(pool: &rayon::ThreadPool, r: &Reduction, config: &SweepConfig) -> VerificationReport {
    pool.install(|| {
        let plan = r.plan(config);
        let violations = plan.exhaustive.par_iter().chain(plan.sampled.par_iter()).filter_map(|w| r.violation(w)).collect();
        let closure = plan.closure.par_iter().map(|&(c, b)| check_hereditary_closure(c, b, config.seed)).collect();
        let containment = plan.containment.par_iter().map(|&(p, b)| r.check_containment(p, b, config.seed)).collect();
        VerificationReport::assemble(r.id, config.seed, &plan, violations, closure, containment)
    })
}
