//! Multi-threaded driver for [`ScanProblem`]s.
//!
//! The `α` range is cut into contiguous chunks handed out in ascending order.
//! A chunk is skipped once a lower chunk has produced a witness, and the
//! merge walks chunks in order, so the reported witness is the one a single
//! thread would find.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use ringlab_core::verdict::{plan_check, CheckConfig, ScanOutcome, ScanProblem};
use ringlab_core::{FiniteRing, Monoid, MonoidFragment, Variant, Verdict};

/// Chunks per worker; more chunks smooth out early exits.
const CHUNKS_PER_JOB: u64 = 16;

pub fn scan_parallel(p: &ScanProblem, limit: u128, jobs: usize) -> ScanOutcome {
    let space = p.space();
    // rows starting at or past the limit are never scanned
    let rows = (limit / space.max(1) as u128 + 1).min(space as u128) as u64;
    if jobs <= 1 || rows < 2 {
        return p.scan(0..space, limit);
    }
    let chunks = (jobs as u64 * CHUNKS_PER_JOB).min(rows);
    let bounds: Vec<u64> = (0..=chunks)
        .map(|c| (rows as u128 * c as u128 / chunks as u128) as u64)
        .collect();
    let next = AtomicUsize::new(0);
    let best = AtomicUsize::new(usize::MAX);
    let results: Mutex<Vec<Option<ScanOutcome>>> = Mutex::new(vec![None; chunks as usize]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let c = next.fetch_add(1, Ordering::SeqCst);
                if c >= chunks as usize || c > best.load(Ordering::SeqCst) {
                    break;
                }
                let mut end = bounds[c + 1];
                if c + 1 == chunks as usize {
                    end = space;
                }
                let out = p.scan(bounds[c]..end, limit);
                if out.witness.is_some() {
                    best.fetch_min(c, Ordering::SeqCst);
                }
                results.lock().expect("scan results lock")[c] = Some(out);
            });
        }
    });
    let results = results.into_inner().expect("scan results lock");
    // chunks after the first witness may be missing; the merge stops before them
    let mut parts = Vec::with_capacity(results.len());
    for r in results {
        match r {
            Some(o) => {
                let stop = o.witness.is_some();
                parts.push(o);
                if stop {
                    break;
                }
            }
            None => break,
        }
    }
    ScanOutcome::merge(parts)
}

/// `check_armendariz_with` using `jobs` threads per scan.
pub fn check(
    r: &FiniteRing,
    m: &Monoid,
    fragment: &MonoidFragment,
    variant: Variant,
    config: &CheckConfig,
    jobs: usize,
) -> ringlab_core::Result<Verdict> {
    plan_check(r, m, fragment, variant, config)?.execute(&|p, limit| scan_parallel(p, limit, jobs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{monoid, ring};

    #[test]
    fn parallel_matches_serial() {
        for (rn, mn) in [
            ("z4", "c2"),
            ("z2", "matrix-units"),
            ("z12", "lz2"),
            ("z4", "nat"),
        ] {
            let r = ring(rn).unwrap();
            let m = monoid(mn).unwrap();
            let f = m.fragment(2).unwrap();
            for v in Variant::ALL {
                let cfg = CheckConfig::default();
                let serial = check(&r, &m, &f, v, &cfg, 1).unwrap();
                for jobs in [2, 3, 8] {
                    assert_eq!(
                        check(&r, &m, &f, v, &cfg, jobs).unwrap(),
                        serial,
                        "{rn} {mn} {v:?} jobs={jobs}"
                    );
                }
            }
        }
    }

    #[test]
    fn limits_agree() {
        let r = ring("z4").unwrap();
        let m = monoid("nat").unwrap();
        let f = m.fragment(2).unwrap();
        let plan = plan_check(&r, &m, &f, Variant::Nil, &CheckConfig::default()).unwrap();
        let p = &plan.stages[0].problem;
        for limit in [0u128, 1, 63, 64, 65, 1000, 4095, 4096, 4097] {
            assert_eq!(
                scan_parallel(p, limit, 4),
                p.scan(0..p.space(), limit),
                "limit {limit}"
            );
        }
    }
}
