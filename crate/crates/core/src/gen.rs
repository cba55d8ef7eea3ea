//! Exhaustive graph generation: one representative per isomorphism class by
//! canonical augmentation, or the full labeled stream at tiny n.
//!
//! Augmentation acceptance: a child extended by vertex v is kept iff some
//! automorphism maps v to the canonical deletion vertex (the vertex in the
//! last canonical position), tested by comparing vertex-marked canonical
//! codes. Duplicate child classes under one parent are collapsed with a
//! small per-parent code set, so memory stays bounded by the branch width.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::canon::{canonical_code_marked, canonical_form};
use crate::error::SolveError;
use crate::graph::Graph;

pub const MAX_ISOMORPH_FREE_N: usize = 12;
pub const MAX_LABELED_N: usize = 7;

/// Subtrees are split off at this level for parallel execution.
const JOB_LEVEL: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenMode {
    IsomorphFree,
    Labeled,
}

#[derive(Clone, Debug)]
pub struct GenOptions {
    pub mode: GenMode,
    /// Emit only graphs with at least this many edges; subtrees that cannot
    /// reach it are pruned (deterministically).
    pub min_edges: Option<usize>,
    /// Emit only graphs with at most this many edges; parents already above
    /// it are pruned.
    pub max_edges: Option<usize>,
}

impl Default for GenOptions {
    fn default() -> Self {
        GenOptions {
            mode: GenMode::IsomorphFree,
            min_edges: None,
            max_edges: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenStats {
    /// Children built and canonicalized (isomorph-free mode).
    pub children_examined: u64,
    /// Subtrees cut by the edge-count window.
    pub pruned: u64,
    /// Graphs handed to the sink.
    pub emitted: u64,
}

impl GenStats {
    pub fn absorb(&mut self, other: &GenStats) {
        self.children_examined += other.children_examined;
        self.pruned += other.pruned;
        self.emitted += other.emitted;
    }
}

/// An independent unit of generation work.
#[derive(Clone, Debug)]
pub enum GenJob {
    /// Expand every descendant of this representative up to the target size.
    Subtree(Graph),
    /// Labeled mode: edge masks in `start..end`.
    MaskRange { start: u64, end: u64 },
}

fn guard(n: usize, opts: &GenOptions) -> Result<(), SolveError> {
    match opts.mode {
        GenMode::IsomorphFree => {
            if n == 0 || n > MAX_ISOMORPH_FREE_N {
                return Err(SolveError::CostGuard(format!(
                    "isomorph-free generation supports 1 <= n <= {MAX_ISOMORPH_FREE_N}, got {n}; \
                     use a smaller n or the labeled mode for n <= {MAX_LABELED_N}"
                )));
            }
        }
        GenMode::Labeled => {
            if n == 0 || n > MAX_LABELED_N {
                return Err(SolveError::CostGuard(format!(
                    "labeled generation supports 1 <= n <= {MAX_LABELED_N}, got {n}"
                )));
            }
        }
    }
    Ok(())
}

/// Stream every graph on n vertices into `sink`, per `opts.mode`.
pub fn enumerate_graphs(
    n: usize,
    opts: &GenOptions,
    sink: &mut dyn FnMut(&Graph),
) -> Result<GenStats, SolveError> {
    let jobs = gen_jobs(n, opts)?;
    let mut stats = GenStats::default();
    for job in &jobs {
        let s = run_gen_job(job, n, opts, sink);
        stats.absorb(&s);
    }
    Ok(stats)
}

/// Split generation into independent jobs; running them in any order and
/// merging per-job results in job order reproduces the sequential outcome.
pub fn gen_jobs(n: usize, opts: &GenOptions) -> Result<Vec<GenJob>, SolveError> {
    guard(n, opts)?;
    match opts.mode {
        GenMode::IsomorphFree => {
            let level = JOB_LEVEL.min(n.saturating_sub(1)).max(1);
            if level >= n {
                return Ok(alloc::vec![GenJob::Subtree(Graph::empty(1))]);
            }
            let mut reps = Vec::new();
            let mut stats = GenStats::default();
            let prefix_opts = GenOptions {
                min_edges: None,
                ..opts.clone()
            };
            expand(
                &Graph::empty(1),
                1,
                level,
                &prefix_opts,
                &mut stats,
                &mut |g| reps.push(g.clone()),
            );
            Ok(reps.into_iter().map(GenJob::Subtree).collect())
        }
        GenMode::Labeled => {
            let m = n * (n - 1) / 2;
            let total: u64 = 1u64 << m;
            let chunks = 64u64.min(total);
            let step = total / chunks;
            let mut jobs = Vec::new();
            let mut start = 0u64;
            for i in 0..chunks {
                let end = if i == chunks - 1 { total } else { start + step };
                jobs.push(GenJob::MaskRange { start, end });
                start = end;
            }
            Ok(jobs)
        }
    }
}

pub fn run_gen_job(
    job: &GenJob,
    n: usize,
    opts: &GenOptions,
    sink: &mut dyn FnMut(&Graph),
) -> GenStats {
    let mut stats = GenStats::default();
    match job {
        GenJob::Subtree(rep) => {
            expand(rep, rep.n(), n, opts, &mut stats, sink);
        }
        GenJob::MaskRange { start, end } => {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in *start..*end {
                let mut g = Graph::empty(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if (mask >> i) & 1 == 1 {
                        g.set_edge(u, v);
                    }
                }
                emit(&g, opts, &mut stats, sink);
            }
        }
    }
    stats
}

fn emit(g: &Graph, opts: &GenOptions, stats: &mut GenStats, sink: &mut dyn FnMut(&Graph)) {
    let e = g.edge_count();
    if opts.min_edges.map_or(false, |m| e < m) || opts.max_edges.map_or(false, |m| e > m) {
        return;
    }
    stats.emitted += 1;
    sink(g);
}

fn expand(
    parent: &Graph,
    level: usize,
    target: usize,
    opts: &GenOptions,
    stats: &mut GenStats,
    sink: &mut dyn FnMut(&Graph),
) {
    if level == target {
        emit(parent, opts, stats, sink);
        return;
    }
    let e = parent.edge_count();
    if let Some(maxe) = opts.max_edges {
        if e > maxe {
            stats.pruned += 1;
            return;
        }
    }
    if let Some(mine) = opts.min_edges {
        let headroom = target * (target - 1) / 2 - level * (level.saturating_sub(1)) / 2;
        if e + headroom < mine {
            stats.pruned += 1;
            return;
        }
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    for mask in 0..(1u64 << level) {
        let child = parent.extend_with_vertex(mask);
        stats.children_examined += 1;
        if let Some(code) = accept(&child, level) {
            if seen.insert(code) {
                expand(&child, level + 1, target, opts, stats, sink);
            }
        }
    }
}

/// Canonical-augmentation acceptance; returns the child's code when the new
/// vertex lies in the canonical deletion orbit.
fn accept(child: &Graph, new_vertex: usize) -> Option<Vec<u8>> {
    let form = canonical_form(child).expect("generation stays within the word limit");
    let last = child.n() - 1;
    let vstar = form
        .labeling
        .iter()
        .position(|&p| p == last)
        .expect("labeling is a bijection");
    if vstar == new_vertex {
        return Some(form.code);
    }
    if child.degree(vstar) != child.degree(new_vertex) {
        return None;
    }
    let a = canonical_code_marked(child, new_vertex).expect("within word limit");
    let b = canonical_code_marked(child, vstar).expect("within word limit");
    if a == b {
        Some(form.code)
    } else {
        None
    }
}
