//! Thread-pool driver for the exact solvers and the generator.
//!
//! Jobs are claimed by an atomic cursor and results land in per-job slots,
//! then merge in job order; the outcome is identical for any worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use sintur_core::gen::{gen_jobs, run_gen_job, GenOptions, GenStats};
use sintur_core::pattern::PatternGraph;
use sintur_core::solve::{
    merge_outcomes, run_solve_job, solve_jobs, ExactResult, Problem, SolveOptions,
};
use sintur_core::SolveError;

pub fn solve_parallel(
    problem: Problem,
    n: usize,
    pattern: &PatternGraph,
    opts: &SolveOptions,
    workers: usize,
) -> Result<(ExactResult, Duration), SolveError> {
    let start = Instant::now();
    let jobs = solve_jobs(problem, n, pattern, opts)?;
    let outcomes = if workers <= 1 {
        jobs.iter()
            .map(|j| run_solve_job(problem, j, n, pattern, opts))
            .collect()
    } else {
        let next = AtomicUsize::new(0);
        let slots = Mutex::new(vec![None; jobs.len()]);
        std::thread::scope(|scope| {
            for _ in 0..workers.min(jobs.len().max(1)) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= jobs.len() {
                        break;
                    }
                    let out = run_solve_job(problem, &jobs[i], n, pattern, opts);
                    slots.lock().expect("no poisoning")[i] = Some(out);
                });
            }
        });
        slots
            .into_inner()
            .expect("no poisoning")
            .into_iter()
            .map(|o| o.expect("every job ran"))
            .collect()
    };
    let result = merge_outcomes(problem, n, pattern, outcomes);
    if result.extremal.is_empty() && opts.min_edges_hint.is_some() {
        return solve_parallel(problem, n, pattern, &SolveOptions::default(), workers);
    }
    Ok((result, start.elapsed()))
}

/// Count generated graphs across workers; used to confirm scheduling cannot
/// change enumeration results.
pub fn count_parallel(
    n: usize,
    opts: &GenOptions,
    workers: usize,
) -> Result<(u64, GenStats), SolveError> {
    let jobs = gen_jobs(n, opts)?;
    if workers <= 1 {
        let mut total = 0u64;
        let mut stats = GenStats::default();
        for job in &jobs {
            let s = run_gen_job(job, n, opts, &mut |_| total += 1);
            stats.absorb(&s);
        }
        return Ok((total, stats));
    }
    let next = AtomicUsize::new(0);
    let slots = Mutex::new(vec![None; jobs.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers.min(jobs.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= jobs.len() {
                    break;
                }
                let mut count = 0u64;
                let s = run_gen_job(&jobs[i], n, opts, &mut |_| count += 1);
                slots.lock().expect("no poisoning")[i] = Some((count, s));
            });
        }
    });
    let mut total = 0u64;
    let mut stats = GenStats::default();
    for slot in slots.into_inner().expect("no poisoning") {
        let (count, s) = slot.expect("every job ran");
        total += count;
        stats.absorb(&s);
    }
    Ok((total, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worker_counts_agree() {
        let pat = PatternGraph::by_name("K3").unwrap();
        let opts = SolveOptions::default();
        let (r1, _) = solve_parallel(Problem::Ts, 7, &pat, &opts, 1).unwrap();
        let (r2, _) = solve_parallel(Problem::Ts, 7, &pat, &opts, 2).unwrap();
        let (r8, _) = solve_parallel(Problem::Ts, 7, &pat, &opts, 8).unwrap();
        assert_eq!(r1.value, 16);
        assert_eq!(r1.value, r2.value);
        assert_eq!(r1.value, r8.value);
        assert_eq!(r1.extremal, r2.extremal);
        assert_eq!(r1.extremal, r8.extremal);
        assert_eq!(r1.stats, r2.stats);
        assert_eq!(r1.stats, r8.stats);
    }

    #[test]
    fn parallel_counts_match() {
        let opts = GenOptions::default();
        let (c1, _) = count_parallel(7, &opts, 1).unwrap();
        let (c4, _) = count_parallel(7, &opts, 4).unwrap();
        assert_eq!(c1, 1044);
        assert_eq!(c4, 1044);
    }
}
