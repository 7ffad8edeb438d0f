//! Apex sweep driver.
//!
//! Per-apex records are independent, so the sweep fans out over a scoped
//! thread pool. Records are assembled in apex-index order afterwards, which
//! keeps reports byte-identical no matter how many threads ran.

use conecheck_core::{ApexRecord, PartnerContext, Scenario, TheoremReport};

/// Environment variable naming the worker thread count.
pub const THREADS_ENV: &str = "CONECHECK_THREADS";

pub fn thread_count() -> usize {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.clamp(1, 64);
        }
    }
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(8)
}

/// Run every apex record, optionally in parallel; output order is by index.
pub fn sweep_records(ctx: &PartnerContext<'_>, threads: usize) -> Vec<ApexRecord> {
    let n = ctx.apexes.len();
    if threads <= 1 || n < 2 {
        return (0..n).map(|i| ctx.apex_record(i)).collect();
    }
    let mut slots: Vec<Option<ApexRecord>> = vec![None; n];
    let chunk = n.div_ceil(threads.min(n));
    std::thread::scope(|scope| {
        for (c, piece) in slots.chunks_mut(chunk).enumerate() {
            let base = c * chunk;
            scope.spawn(move || {
                for (k, slot) in piece.iter_mut().enumerate() {
                    *slot = Some(ctx.apex_record(base + k));
                }
            });
        }
    });
    slots.into_iter().map(|r| r.expect("every apex slot filled")).collect()
}

/// Full pipeline with the parallel sweep.
pub fn check_theorem(scenario: &Scenario, threads: usize) -> Result<TheoremReport, String> {
    let ctx = PartnerContext::build(scenario).map_err(|e| e.to_string())?;
    let records = sweep_records(&ctx, threads);
    conecheck_core::verify_conclusion(scenario, records).map_err(|e| e.to_string())
}
