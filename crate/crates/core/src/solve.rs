//! Exact small-n ground truth: maximize edges subject to a problem predicate
//! over the exhaustive isomorph-free stream.
//!
//! Singular-freeness is not monotone under edge addition, so nothing is
//! pruned by the predicate: every class is tested. Work splits into
//! independent generation subtrees whose outcomes merge by max-reduction
//! plus witness union, so worker scheduling cannot change any result.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::canon::canonical_code;
use crate::error::SolveError;
use crate::gen::{gen_jobs, run_gen_job, GenJob, GenMode, GenOptions};
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use crate::singular::is_singular_free;
use crate::subgraph::contains_copy;
use crate::worm::find_worm_coloring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// Max edges with no singular copy of the pattern.
    Ts,
    /// Max edges admitting a pattern-WORM coloring.
    Wex,
    /// Max edges with no copy of the pattern at all.
    Ex,
    /// Max edges over regular pattern-free graphs.
    Rex,
}

impl Problem {
    pub fn tag(&self) -> &'static str {
        match self {
            Problem::Ts => "ts",
            Problem::Wex => "wex",
            Problem::Ex => "ex",
            Problem::Rex => "rex",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "ts" => Some(Problem::Ts),
            "wex" => Some(Problem::Wex),
            "ex" => Some(Problem::Ex),
            "rex" => Some(Problem::Rex),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Certified lower bound: restrict the search to graphs with at least
    /// this many edges. If nothing qualifies the solver falls back to the
    /// unrestricted search, so a wrong hint costs time, not correctness.
    pub min_edges_hint: Option<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Graphs the problem predicate was evaluated on.
    pub examined: u64,
    /// Extension candidates built by the generator.
    pub children: u64,
    /// Subtrees cut by the edge-count window.
    pub pruned: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.examined += other.examined;
        self.children += other.children;
        self.pruned += other.pruned;
    }
}

/// Output of one exact run: the optimum, every extremal class, and counters.
#[derive(Clone, Debug)]
pub struct ExactResult {
    pub problem: Problem,
    pub n: usize,
    pub pattern: String,
    pub value: usize,
    pub extremal: Vec<Graph>,
    pub stats: SearchStats,
}

/// Per-subtree partial result; merging is associative and commutative.
#[derive(Clone, Debug)]
pub struct JobOutcome {
    best: Option<usize>,
    witnesses: Vec<Graph>,
    collected: Vec<Graph>,
    stats: SearchStats,
}

pub fn check_guards(problem: Problem, n: usize, pattern: &PatternGraph) -> Result<(), SolveError> {
    let order = pattern.order();
    match problem {
        Problem::Ts => {
            if order < 2 {
                return Err(crate::error::PatternError::TooFewVertices {
                    required: 2,
                    got: order,
                }
                .into());
            }
            let is_k3 = order == 3 && pattern.is_complete();
            let limit = if is_k3 || pattern.is_path3() { 10 } else { 9 };
            if n > limit {
                return Err(SolveError::CostGuard(format!(
                    "exact ts supports n <= {limit} for this pattern, got n={n}"
                )));
            }
        }
        Problem::Wex => {
            if order < 3 {
                return Err(crate::error::PatternError::TooFewVertices {
                    required: 3,
                    got: order,
                }
                .into());
            }
            if n > 8 {
                return Err(SolveError::CostGuard(format!(
                    "exact wex enumerates set-partitions per graph and supports n <= 8, got n={n}"
                )));
            }
        }
        Problem::Ex | Problem::Rex => {
            if n > 10 {
                return Err(SolveError::CostGuard(format!(
                    "exact {} supports n <= 10, got n={n}",
                    problem.tag()
                )));
            }
        }
    }
    if n == 0 {
        return Err(SolveError::CostGuard(String::from("n must be at least 1")));
    }
    Ok(())
}

fn predicate(problem: Problem, g: &Graph, pattern: &PatternGraph) -> bool {
    match problem {
        Problem::Ts => is_singular_free(g, pattern).expect("guarded"),
        Problem::Wex => find_worm_coloring(g, pattern, None)
            .expect("guarded")
            .is_some(),
        Problem::Ex => !contains_copy(g, pattern),
        Problem::Rex => g.is_regular().is_some() && !contains_copy(g, pattern),
    }
}

fn gen_options(problem: Problem, opts: &SolveOptions) -> GenOptions {
    GenOptions {
        mode: GenMode::IsomorphFree,
        min_edges: match problem {
            Problem::Wex => None,
            _ => opts.min_edges_hint,
        },
        max_edges: None,
    }
}

/// Independent work units for one solve call.
pub fn solve_jobs(
    problem: Problem,
    n: usize,
    pattern: &PatternGraph,
    opts: &SolveOptions,
) -> Result<Vec<GenJob>, SolveError> {
    check_guards(problem, n, pattern)?;
    gen_jobs(n, &gen_options(problem, opts))
}

pub fn run_solve_job(
    problem: Problem,
    job: &GenJob,
    n: usize,
    pattern: &PatternGraph,
    opts: &SolveOptions,
) -> JobOutcome {
    let gopts = gen_options(problem, opts);
    let mut best: Option<usize> = None;
    let mut witnesses: Vec<Graph> = Vec::new();
    let mut collected: Vec<Graph> = Vec::new();
    let mut examined = 0u64;
    let gen_stats = run_gen_job(job, n, &gopts, &mut |g| {
        if problem == Problem::Wex {
            collected.push(g.clone());
            return;
        }
        examined += 1;
        if predicate(problem, g, pattern) {
            let e = g.edge_count();
            if best.map_or(true, |b| e > b) {
                best = Some(e);
                witnesses.clear();
            }
            if best == Some(e) {
                witnesses.push(g.clone());
            }
        }
    });
    JobOutcome {
        best,
        witnesses,
        collected,
        stats: SearchStats {
            examined,
            children: gen_stats.children_examined,
            pruned: gen_stats.pruned,
        },
    }
}

/// Deterministic merge of per-job outcomes, in job order.
pub fn merge_outcomes(
    problem: Problem,
    n: usize,
    pattern: &PatternGraph,
    outcomes: Vec<JobOutcome>,
) -> ExactResult {
    let mut stats = SearchStats::default();
    let result = match problem {
        Problem::Wex => {
            let mut all: Vec<Graph> = Vec::new();
            for o in outcomes {
                stats.absorb(&o.stats);
                all.extend(o.collected);
            }
            // scan edge counts downward; the first feasible level is optimal
            let max_e = all.iter().map(|g| g.edge_count()).max().unwrap_or(0);
            let mut value = 0;
            let mut extremal = Vec::new();
            'scan: for e in (0..=max_e).rev() {
                let mut found = Vec::new();
                for g in all.iter().filter(|g| g.edge_count() == e) {
                    stats.examined += 1;
                    if predicate(Problem::Wex, g, pattern) {
                        found.push(g.clone());
                    }
                }
                if !found.is_empty() {
                    value = e;
                    extremal = found;
                    break 'scan;
                }
            }
            (value, extremal)
        }
        _ => {
            let mut value: Option<usize> = None;
            let mut extremal: Vec<Graph> = Vec::new();
            for o in outcomes {
                stats.absorb(&o.stats);
                match (value, o.best) {
                    (_, None) => {}
                    (None, Some(b)) => {
                        value = Some(b);
                        extremal = o.witnesses;
                    }
                    (Some(v), Some(b)) => {
                        if b > v {
                            value = Some(b);
                            extremal = o.witnesses;
                        } else if b == v {
                            extremal.extend(o.witnesses);
                        }
                    }
                }
            }
            (value.unwrap_or(0), extremal)
        }
    };
    let (value, mut extremal) = result;
    extremal.sort_by_cached_key(|g| canonical_code(g).expect("within word limit"));
    ExactResult {
        problem,
        n,
        pattern: pattern.display_name(),
        value,
        extremal,
        stats,
    }
}

/// Sequential exact solve; identical outcome to any parallel job schedule.
pub fn solve(
    problem: Problem,
    n: usize,
    pattern: &PatternGraph,
    opts: &SolveOptions,
) -> Result<ExactResult, SolveError> {
    let jobs = solve_jobs(problem, n, pattern, opts)?;
    let outcomes: Vec<JobOutcome> = jobs
        .iter()
        .map(|j| run_solve_job(problem, j, n, pattern, opts))
        .collect();
    let result = merge_outcomes(problem, n, pattern, outcomes);
    if result.extremal.is_empty() && opts.min_edges_hint.is_some() {
        // wrong hint: nothing qualified above it, redo unrestricted
        return solve(problem, n, pattern, &SolveOptions::default());
    }
    Ok(result)
}
