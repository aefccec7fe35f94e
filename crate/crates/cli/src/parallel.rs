//! Worker pool over the core search's partition API.
//!
//! The subtree jobs come from a deterministic prefix split; each worker pops
//! jobs from a shared counter and results are merged in prefix order, so the
//! outcome is byte-identical for any worker count (the sequential path is
//! the same exploration without the split).

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use ringshift_core::domain::Domain;
use ringshift_core::pattern::PatternSpec;
use ringshift_core::search::{
    self, compile, DomainKind, EngineRun, RadoOutcome, SearchError, SearchOutcome,
};

/// Aim for plenty of jobs per worker so stragglers even out.
const JOBS_PER_WORKER: usize = 64;

fn run_partitioned(
    cs: &search::CompiledSearch,
    cap: usize,
    workers: usize,
) -> EngineRun {
    let depth = search::partition_depth(cs.r(), cap, workers * JOBS_PER_WORKER);
    let (jobs, phase) = search::prefixes(cs, cap, depth);
    let results: Mutex<Vec<Option<EngineRun>>> = Mutex::new(vec![None; jobs.len()]);
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(prefix) = jobs.get(i) else { break };
                let run = search::explore_prefix(cs, cap, prefix);
                results.lock().unwrap()[i] = Some(run);
            });
        }
    });
    let parts = results.into_inner().unwrap().into_iter().map(|r| r.expect("worker finished"));
    search::merge_runs(phase, parts)
}

pub fn decide_with_workers(
    pattern: &PatternSpec,
    r: u32,
    domain: &Domain,
    workers: usize,
) -> Result<SearchOutcome, SearchError> {
    if workers <= 1 {
        return search::decide(pattern, r, domain);
    }
    let cs = compile(pattern, r, domain)?;
    let run = run_partitioned(&cs, domain.len(), workers);
    match run.full {
        Some(colors) => Ok(SearchOutcome::Avoidable(
            ringshift_core::domain::Coloring::new(*domain, r, colors)
                .map_err(SearchError::Domain)?,
        )),
        None => Ok(SearchOutcome::Unavoidable(search::SearchStats {
            nodes: run.nodes,
            max_depth: run.max_depth as u32,
        })),
    }
}

pub fn rado_with_workers(
    pattern: &PatternSpec,
    r: u32,
    n_max: i64,
    kind: DomainKind,
    workers: usize,
) -> Result<RadoOutcome, SearchError> {
    if workers <= 1 {
        return search::rado_number(pattern, r, n_max, kind);
    }
    if n_max < 1 {
        return Err(SearchError::BadBound { n_max });
    }
    let domain = kind.domain(n_max).map_err(SearchError::Domain)?;
    let cs = compile(pattern, r, &domain)?;
    let run = run_partitioned(&cs, domain.len(), workers);
    search::rado_outcome(run, &cs, r, n_max, kind)
}
