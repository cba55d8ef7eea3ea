//! WORM colorings: vertex colorings with no monochromatic and no rainbow
//! copy of a pattern, and the set-partition search for one.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::PatternError;
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use crate::subgraph::copy_vertex_sets;

/// Total assignment of small integer colors to the vertices of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_count(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Rename colors through `perm` (indexed by old color id).
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        Coloring::new(self.colors.iter().map(|&c| perm[c]).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WormViolationKind {
    Monochromatic,
    Rainbow,
}

/// The first offending copy found, in lexicographic vertex-set order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WormViolation {
    pub kind: WormViolationKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WormCheck {
    Valid,
    Violation(WormViolation),
}

impl WormCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, WormCheck::Valid)
    }
}

fn guard(pat: &PatternGraph, g: &Graph, coloring: Option<&Coloring>) -> Result<(), PatternError> {
    let k = pat.order();
    if k < 3 {
        return Err(PatternError::TooFewVertices {
            required: 3,
            got: k,
        });
    }
    if let Some(c) = coloring {
        if c.len() != g.n() {
            return Err(PatternError::ColoringSizeMismatch {
                expected: g.n(),
                got: c.len(),
            });
        }
    }
    Ok(())
}

/// Valid iff every copy of `pat` sees at least 2 and at most order-1 colors.
pub fn check_worm(
    g: &Graph,
    pat: &PatternGraph,
    coloring: &Coloring,
) -> Result<WormCheck, PatternError> {
    guard(pat, g, Some(coloring))?;
    let k = pat.order();
    for verts in copy_vertex_sets(g, pat) {
        let distinct = distinct_colors(&verts, coloring);
        if distinct == 1 {
            return Ok(WormCheck::Violation(WormViolation {
                kind: WormViolationKind::Monochromatic,
                vertices: verts,
            }));
        }
        if distinct == k {
            return Ok(WormCheck::Violation(WormViolation {
                kind: WormViolationKind::Rainbow,
                vertices: verts,
            }));
        }
    }
    Ok(WormCheck::Valid)
}

fn distinct_colors(verts: &[usize], coloring: &Coloring) -> usize {
    let mut seen: Vec<usize> = verts.iter().map(|&v| coloring.color_of(v)).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Canonically least WORM coloring within the color budget (default n),
/// searching vertex set-partitions as restricted-growth strings and pruning
/// any partial partition with a fully colored mono or rainbow copy.
pub fn find_worm_coloring(
    g: &Graph,
    pat: &PatternGraph,
    max_colors: Option<usize>,
) -> Result<Option<Coloring>, PatternError> {
    guard(pat, g, None)?;
    let n = g.n();
    if n == 0 {
        return Ok(Some(Coloring::new(Vec::new())));
    }
    let budget = max_colors.unwrap_or(n).max(1);
    let k = pat.order();

    // copies indexed by their largest vertex: checkable as soon as that
    // vertex receives a color
    let mut by_max: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for verts in copy_vertex_sets(g, pat) {
        let m = *verts.last().expect("nonempty copy");
        by_max[m].push(verts);
    }

    // vertex 0 takes color 0 in every restricted-growth string; copies need
    // at least 3 vertices, so nothing is checkable before vertex 1
    let mut colors = vec![0usize; n];
    if search(&by_max, &mut colors, 1, 1, budget, k) {
        return Ok(Some(Coloring::new(colors)));
    }
    Ok(None)
}

fn search(
    by_max: &[Vec<Vec<usize>>],
    colors: &mut [usize],
    v: usize,
    used: usize,
    budget: usize,
    k: usize,
) -> bool {
    if v == colors.len() {
        return true;
    }
    let top = (used + 1).min(budget);
    for c in 0..top {
        colors[v] = c;
        if copies_ok_at(by_max, colors, v, k) {
            let nused = used.max(c + 1);
            if search(by_max, colors, v + 1, nused, budget, k) {
                return true;
            }
        }
    }
    false
}

fn copies_ok_at(by_max: &[Vec<Vec<usize>>], colors: &[usize], v: usize, k: usize) -> bool {
    for verts in &by_max[v] {
        let mut seen: Vec<usize> = verts.iter().map(|&u| colors[u]).collect();
        seen.sort_unstable();
        seen.dedup();
        let distinct = seen.len();
        if distinct == 1 || distinct == k {
            return false;
        }
    }
    true
}
