//! Multi-threaded versions of the expensive enumerations. Results are
//! identical to the sequential ones for every thread count.

use rayon::prelude::*;

use toric_gauss_core::gauss::{GaussEnumerator, GaussPart, SubsetBudget};
use toric_gauss_core::graphs::{self, ScanRow};
use toric_gauss_core::{Error, GaussResult, MonomialAlgebra, Result};

fn pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("cannot start worker threads: {}", e)))
}

/// [`toric_gauss_core::gauss::gauss_generators`] with the subset space split
/// by largest index across `threads` workers sharing one budget.
pub fn gauss_generators(alg: &MonomialAlgebra, limit: Option<u64>, threads: usize) -> Result<GaussResult> {
    let walk = GaussEnumerator::new(alg)?;
    let budget = SubsetBudget::new(limit);
    if threads <= 1 {
        let part = walk.run(walk.tops(), &budget)?;
        return Ok(walk.finish(part));
    }
    // large tops carry the most subsets, so they are scheduled first
    let parts: Vec<GaussPart> = pool(threads)?.install(|| {
        walk.tops()
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|t| walk.run(t..t + 1, &budget))
            .collect::<Result<_>>()
    })?;
    let mut all = GaussPart::default();
    for p in parts {
        all.merge(p);
    }
    Ok(walk.finish(all))
}

/// [`graphs::conjecture_scan`] with one task per graph and loop placement.
pub fn conjecture_scan(max_d: usize, threads: usize) -> Result<Vec<ScanRow>> {
    let instances = graphs::scan_instances(max_d)?;
    pool(threads)?.install(|| instances.par_iter().map(graphs::scan_instance).collect())
}
