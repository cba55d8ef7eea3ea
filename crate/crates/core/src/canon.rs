//! Canonical labeling by iterated degree refinement with
//! individualization and orbit-pruned backtracking.
//!
//! Equal codes iff isomorphic. Single-word bitset range only (n <= 64);
//! the exhaustive oracle lives far below that.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::CanonError;
use crate::graph::Graph;

const LIMIT: usize = 64;
const GEN_CAP: usize = 48;

/// Canonical code plus one labeling that achieves it
/// (`labeling[v]` = canonical position of vertex v).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: Vec<u8>,
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonError> {
    canonical_form_with_cells(g, None)
}

pub fn canonical_code(g: &Graph) -> Result<Vec<u8>, CanonError> {
    Ok(canonical_form(g)?.code)
}

/// Canonical code of the vertex-marked graph: `marked` is individualized up
/// front, so two marked codes agree iff some automorphism maps one mark to
/// the other.
pub fn canonical_code_marked(g: &Graph, marked: usize) -> Result<Vec<u8>, CanonError> {
    debug_assert!(marked < g.n());
    Ok(canonical_form_with_cells(g, Some(marked))?.code)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, CanonError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

fn canonical_form_with_cells(
    g: &Graph,
    marked: Option<usize>,
) -> Result<CanonicalForm, CanonError> {
    let n = g.n();
    if n > LIMIT {
        return Err(CanonError::TooManyVertices { n, limit: LIMIT });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            code: vec![0],
            labeling: Vec::new(),
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let cells = match marked {
        Some(m) if n > 1 => vec![1u64 << m, full & !(1u64 << m)],
        _ => vec![full],
    };
    let mut s = Searcher {
        rows,
        n,
        best: None,
        gens: Vec::new(),
        path: Vec::new(),
    };
    s.search(cells);
    let (code, labeling) = s.best.expect("search always reaches a leaf");
    Ok(CanonicalForm { code, labeling })
}

struct Searcher {
    rows: Vec<u64>,
    n: usize,
    best: Option<(Vec<u8>, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Searcher {
    fn search(&mut self, mut cells: Vec<u64>) {
        refine(&mut cells, &self.rows);

        let mut target = usize::MAX;
        let mut best_size = u32::MAX;
        for (i, c) in cells.iter().enumerate() {
            let s = c.count_ones();
            if s > 1 && s < best_size {
                best_size = s;
                target = i;
            }
        }

        if target == usize::MAX {
            self.leaf(&cells);
            return;
        }

        let cand = cells[target];
        let mut done: u64 = 0;
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if (done >> v) & 1 == 1 {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cand & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            self.path.push(v);
            self.search(child);
            self.path.pop();
            done |= self.orbit_mask(v);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.n;
        let mut labeling = vec![0usize; n];
        for (pos, c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let code = pack_code(&self.rows, &labeling, n);
        match &self.best {
            None => self.best = Some((code, labeling)),
            Some((best_code, best_labeling)) => {
                if code < *best_code {
                    self.best = Some((code, labeling));
                } else if code == *best_code {
                    self.record_automorphism(best_labeling.clone(), &labeling);
                }
            }
        }
    }

    /// Two labelings reaching the same code compose to an automorphism.
    fn record_automorphism(&mut self, best_labeling: Vec<usize>, cur: &[usize]) {
        if self.gens.len() >= GEN_CAP {
            return;
        }
        let n = self.n;
        let mut vert_at_best = vec![0usize; n];
        for v in 0..n {
            vert_at_best[best_labeling[v]] = v;
        }
        let mut sigma = vec![0usize; n];
        let mut identity = true;
        for x in 0..n {
            sigma[x] = vert_at_best[cur[x]];
            if sigma[x] != x {
                identity = false;
            }
        }
        if identity || self.gens.iter().any(|g| *g == sigma) {
            return;
        }
        debug_assert!(is_automorphism(&self.rows, &sigma));
        self.gens.push(sigma);
    }

    /// Orbit of v under the recorded generators that fix the current
    /// individualization prefix pointwise. Sound (possibly incomplete)
    /// pruning of equivalent branch candidates.
    fn orbit_mask(&self, v: usize) -> u64 {
        let mut orbit = 1u64 << v;
        let mut frontier = vec![v];
        let fixing: Vec<&Vec<usize>> = self
            .gens
            .iter()
            .filter(|g| self.path.iter().all(|&p| g[p] == p))
            .collect();
        if fixing.is_empty() {
            return orbit;
        }
        while let Some(x) = frontier.pop() {
            for g in &fixing {
                let y = g[x];
                if (orbit >> y) & 1 == 0 {
                    orbit |= 1u64 << y;
                    frontier.push(y);
                }
            }
        }
        orbit
    }
}

/// Equitable refinement: split every cell by neighbor counts into every
/// splitter cell, subcells ordered by count ascending, until stable.
fn refine(cells: &mut Vec<u64>, rows: &[u64]) {
    let mut pairs: Vec<(u32, u64)> = Vec::with_capacity(8);
    loop {
        let splitters: Vec<u64> = cells.clone();
        let mut changed = false;
        for &splitter in &splitters {
            let mut ci = 0;
            while ci < cells.len() {
                let cell = cells[ci];
                if cell.count_ones() <= 1 {
                    ci += 1;
                    continue;
                }
                pairs.clear();
                let mut m = cell;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    let cnt = (rows[v] & splitter).count_ones();
                    match pairs.iter_mut().find(|p| p.0 == cnt) {
                        Some(p) => p.1 |= 1u64 << v,
                        None => pairs.push((cnt, 1u64 << v)),
                    }
                }
                if pairs.len() > 1 {
                    pairs.sort_unstable_by_key(|p| p.0);
                    cells.splice(ci..=ci, pairs.iter().map(|p| p.1));
                    changed = true;
                    ci += pairs.len();
                } else {
                    ci += 1;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

/// Code bytes: vertex count, then the upper triangle of the relabeled
/// adjacency matrix packed row-major, MSB first.
fn pack_code(rows: &[u64], labeling: &[usize], n: usize) -> Vec<u8> {
    let mut vert_at = vec![0usize; n];
    for v in 0..n {
        vert_at[labeling[v]] = v;
    }
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + (nbits + 7) / 8);
    out.push(n as u8);
    let mut acc: u8 = 0;
    let mut fill: u8 = 0;
    for p in 0..n {
        let up = vert_at[p];
        for q in (p + 1)..n {
            let bit = ((rows[up] >> vert_at[q]) & 1) as u8;
            acc = (acc << 1) | bit;
            fill += 1;
            if fill == 8 {
                out.push(acc);
                acc = 0;
                fill = 0;
            }
        }
    }
    if fill > 0 {
        out.push(acc << (8 - fill));
    }
    out
}

fn is_automorphism(rows: &[u64], sigma: &[usize]) -> bool {
    let n = rows.len();
    for u in 0..n {
        for v in (u + 1)..n {
            let a = (rows[u] >> v) & 1;
            let b = (rows[sigma[u]] >> sigma[v]) & 1;
            if a != b {
                return false;
            }
        }
    }
    true
}
