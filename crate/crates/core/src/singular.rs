//! Singular copies: copies of a pattern whose vertices all share one host
//! degree or have pairwise distinct host degrees.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::PatternError;
use crate::graph::Graph;
use crate::pattern::PatternGraph;
use crate::subgraph::spans_copy;
use crate::worm::Coloring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingularMode {
    AllEqual,
    AllDistinct,
}

/// A vertex set spanning a copy of the pattern with singular host degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWitness {
    pub vertices: Vec<usize>,
    pub mode: SingularMode,
    pub degrees: Vec<usize>,
}

fn degree_mode(degs: &[usize]) -> Option<SingularMode> {
    let first = degs[0];
    if degs.iter().all(|&d| d == first) {
        return Some(SingularMode::AllEqual);
    }
    for (i, &a) in degs.iter().enumerate() {
        for &b in &degs[i + 1..] {
            if a == b {
                return None;
            }
        }
    }
    Some(SingularMode::AllDistinct)
}

/// Lexicographically least singular copy of `pat` in `g`, if any.
pub fn find_singular_copy(
    g: &Graph,
    pat: &PatternGraph,
) -> Result<Option<SingularWitness>, PatternError> {
    let k = pat.order();
    if k < 2 {
        return Err(PatternError::TooFewVertices {
            required: 2,
            got: k,
        });
    }
    if k > g.n() {
        return Ok(None);
    }
    let degs = g.degrees();
    if pat.is_complete() && g.words() == 1 {
        return Ok(find_singular_clique(g, k, &degs));
    }
    Ok(find_singular_general(g, pat, &degs))
}

/// True iff `g` has no singular copy of `pat`.
pub fn is_singular_free(g: &Graph, pat: &PatternGraph) -> Result<bool, PatternError> {
    Ok(!has_singular_copy(g, pat)?)
}

/// Fast existence check; equivalent to `find_singular_copy(..).is_some()`.
pub fn has_singular_copy(g: &Graph, pat: &PatternGraph) -> Result<bool, PatternError> {
    let k = pat.order();
    if k < 2 {
        return Err(PatternError::TooFewVertices {
            required: 2,
            got: k,
        });
    }
    if k > g.n() {
        return Ok(false);
    }
    let degs = g.degrees();
    if g.words() == 1 {
        if pat.is_complete() && k == 3 {
            return Ok(has_singular_triangle(g, &degs));
        }
        if pat.is_complete() {
            return Ok(has_singular_clique(g, k, &degs));
        }
        if pat.is_path3() {
            return Ok(has_singular_cherry(g, &degs));
        }
    }
    Ok(find_singular_general(g, pat, &degs).is_some())
}

/// Color each vertex by its degree; classes numbered by increasing degree.
pub fn degree_coloring(g: &Graph) -> Coloring {
    let degs = g.degrees();
    let mut values: Vec<usize> = degs.clone();
    values.sort_unstable();
    values.dedup();
    let colors = degs
        .iter()
        .map(|d| values.binary_search(d).expect("degree present"))
        .collect();
    Coloring::new(colors)
}

fn witness(vertices: Vec<usize>, mode: SingularMode, degs: &[usize]) -> SingularWitness {
    let degrees = vertices.iter().map(|&v| degs[v]).collect();
    SingularWitness {
        vertices,
        mode,
        degrees,
    }
}

/// O(edges) scan for a singular triangle using degree-class masks.
fn has_singular_triangle(g: &Graph, degs: &[usize]) -> bool {
    let n = g.n();
    let mut class_mask = vec![0u64; n];
    for v in 0..n {
        class_mask[degs[v]] |= 1u64 << v;
    }
    for u in 0..n {
        let row_u = g.row_word(u);
        let mut m = row_u >> (u + 1) << (u + 1);
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let common = row_u & g.row_word(v);
            if common == 0 {
                continue;
            }
            if degs[u] == degs[v] {
                if common & class_mask[degs[u]] != 0 {
                    return true;
                }
            } else if common & !(class_mask[degs[u]] | class_mask[degs[v]]) != 0 {
                return true;
            }
        }
    }
    false
}

/// Linear cherry scan: a center with two same-degree-as-center neighbors, or
/// two neighbors of distinct degrees both different from the center's.
fn has_singular_cherry(g: &Graph, degs: &[usize]) -> bool {
    for y in 0..g.n() {
        let dy = degs[y];
        let mut same = 0usize;
        let mut other = usize::MAX;
        for x in g.neighbors(y) {
            let dx = degs[x];
            if dx == dy {
                same += 1;
                if same >= 2 {
                    return true;
                }
            } else if other == usize::MAX {
                other = dx;
            } else if dx != other {
                return true;
            }
        }
    }
    false
}

fn has_singular_clique(g: &Graph, k: usize, degs: &[usize]) -> bool {
    let n = g.n();
    // all-equal: a k-clique inside one degree class
    let mut checked = vec![false; n];
    for v in 0..n {
        let d = degs[v];
        if checked[d] {
            continue;
        }
        checked[d] = true;
        let mut mask = 0u64;
        for u in 0..n {
            if degs[u] == d {
                mask |= 1u64 << u;
            }
        }
        if (mask.count_ones() as usize) >= k && clique_in_mask(g, k, mask, 0, &mut Vec::new()) {
            return true;
        }
    }
    // all-distinct: a k-clique with pairwise different degrees
    rainbow_clique(g, k, degs, 0, &mut Vec::new(), &mut 0u64).is_some()
}

fn find_singular_clique(g: &Graph, k: usize, degs: &[usize]) -> Option<SingularWitness> {
    let n = g.n();
    // lex-least all-equal witness: least clique within each class, then min
    let mut best_equal: Option<Vec<usize>> = None;
    let mut checked = vec![false; n];
    for v in 0..n {
        let d = degs[v];
        if checked[d] {
            continue;
        }
        checked[d] = true;
        let mut mask = 0u64;
        for u in 0..n {
            if degs[u] == d {
                mask |= 1u64 << u;
            }
        }
        let mut prefix = Vec::new();
        if (mask.count_ones() as usize) >= k && clique_in_mask(g, k, mask, 0, &mut prefix) {
            if best_equal.as_ref().map_or(true, |b| prefix < *b) {
                best_equal = Some(prefix);
            }
        }
    }
    let mut prefix = Vec::new();
    let best_distinct = rainbow_clique(g, k, degs, 0, &mut prefix, &mut 0u64);
    match (best_equal, best_distinct) {
        (Some(e), Some(d)) => {
            if e < d {
                Some(witness(e, SingularMode::AllEqual, degs))
            } else {
                Some(witness(d, SingularMode::AllDistinct, degs))
            }
        }
        (Some(e), None) => Some(witness(e, SingularMode::AllEqual, degs)),
        (None, Some(d)) => Some(witness(d, SingularMode::AllDistinct, degs)),
        (None, None) => None,
    }
}

/// Lex-first k-clique whose vertices all lie in `mask`; fills `prefix`.
fn clique_in_mask(g: &Graph, k: usize, mask: u64, from: usize, prefix: &mut Vec<usize>) -> bool {
    if prefix.len() == k {
        return true;
    }
    let mut m = mask >> from << from;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if prefix.iter().all(|&u| g.has_edge(u, v)) {
            prefix.push(v);
            if clique_in_mask(g, k, mask, v + 1, prefix) {
                return true;
            }
            prefix.pop();
        }
    }
    false
}

/// Lex-first k-clique with pairwise distinct degrees.
fn rainbow_clique(
    g: &Graph,
    k: usize,
    degs: &[usize],
    from: usize,
    prefix: &mut Vec<usize>,
    used_degrees: &mut u64,
) -> Option<Vec<usize>> {
    if prefix.len() == k {
        return Some(prefix.clone());
    }
    for v in from..g.n() {
        let dbit = 1u64 << degs[v];
        if *used_degrees & dbit != 0 {
            continue;
        }
        if prefix.iter().all(|&u| g.has_edge(u, v)) {
            prefix.push(v);
            *used_degrees |= dbit;
            if let Some(w) = rainbow_clique(g, k, degs, v + 1, prefix, used_degrees) {
                return Some(w);
            }
            *used_degrees &= !dbit;
            prefix.pop();
        }
    }
    None
}

/// General path: lex subset scan filtered by the degree predicate and a
/// spanning-copy test.
fn find_singular_general(g: &Graph, pat: &PatternGraph, degs: &[usize]) -> Option<SingularWitness> {
    let k = pat.order();
    let mut subset = Vec::with_capacity(k);
    find_general_rec(g, pat, degs, 0, k, &mut subset)
}

fn find_general_rec(
    g: &Graph,
    pat: &PatternGraph,
    degs: &[usize],
    from: usize,
    k: usize,
    subset: &mut Vec<usize>,
) -> Option<SingularWitness> {
    if subset.len() == k {
        let sub_degs: Vec<usize> = subset.iter().map(|&v| degs[v]).collect();
        if let Some(mode) = degree_mode(&sub_degs) {
            if spans_copy(g, subset, pat) {
                return Some(witness(subset.clone(), mode, degs));
            }
        }
        return None;
    }
    let need = k - subset.len();
    for v in from..=(g.n() - need) {
        subset.push(v);
        if let Some(w) = find_general_rec(g, pat, degs, v + 1, k, subset) {
            return Some(w);
        }
        subset.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartSizes;

    fn pat(name: &str) -> PatternGraph {
        PatternGraph::by_name(name).unwrap()
    }

    #[test]
    fn k4_has_all_equal_triangle() {
        let w = find_singular_copy(&Graph::complete(4), &pat("K3"))
            .unwrap()
            .unwrap();
        assert_eq!(w.mode, SingularMode::AllEqual);
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert_eq!(w.degrees, vec![3, 3, 3]);
    }

    #[test]
    fn two_edge_path_has_no_singular_path() {
        // degrees 1,2,1: neither all equal nor pairwise distinct
        let g = Graph::path(3);
        assert!(find_singular_copy(&g, &pat("P3")).unwrap().is_none());
    }

    #[test]
    fn four_partite_1133_is_singular_triangle_free() {
        let parts = PartSizes::new(vec![1, 1, 3, 3]).unwrap();
        let g = Graph::complete_multipartite(&parts);
        assert!(is_singular_free(&g, &pat("K3")).unwrap());
    }

    #[test]
    fn turan_6_4_is_singular_triangle_free_but_k5_is_not() {
        assert!(is_singular_free(&Graph::turan(6, 4).unwrap(), &pat("K3")).unwrap());
        assert!(!is_singular_free(&Graph::complete(5), &pat("K3")).unwrap());
    }

    #[test]
    fn pattern_too_small_is_rejected() {
        let g = Graph::complete(3);
        let single = PatternGraph::new(Graph::empty(1)).unwrap();
        assert!(matches!(
            find_singular_copy(&g, &single),
            Err(PatternError::TooFewVertices { .. })
        ));
    }

    #[test]
    fn single_edge_pattern_forbids_every_edge() {
        let k2 = pat("K2");
        assert!(is_singular_free(&Graph::empty(5), &k2).unwrap());
        assert!(!is_singular_free(&Graph::path(2), &k2).unwrap());
    }

    #[test]
    fn degree_coloring_classes() {
        let c4 = Graph::cycle(4);
        assert_eq!(degree_coloring(&c4).colors(), &[0, 0, 0, 0]);
        let star = Graph::star(3);
        assert_eq!(degree_coloring(&star).colors(), &[1, 0, 0, 0]);
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // K5 has singular triangles everywhere; least is {0,1,2}
        let w = find_singular_copy(&Graph::complete(5), &pat("K3"))
            .unwrap()
            .unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
    }

    #[test]
    fn fast_paths_agree_with_general_scan_exhaustively() {
        // all graphs on 5 vertices, patterns K3 and P3
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let k3 = pat("K3");
        let p3 = pat("P3");
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (mask >> i) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let degs = g.degrees();
            for p in [&k3, &p3] {
                let fast = has_singular_copy(&g, p).unwrap();
                let general = find_singular_general(&g, p, &degs).is_some();
                assert_eq!(fast, general, "mask {mask} pattern {:?}", p.name());
                let witness = find_singular_copy(&g, p).unwrap();
                assert_eq!(witness.is_some(), general);
            }
        }
    }
}
