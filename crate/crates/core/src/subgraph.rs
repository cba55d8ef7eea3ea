//! Non-induced subgraph copies of a small pattern in a host graph.
//!
//! A copy is an image (vertex set, edge set) of the pattern; copies are
//! deduplicated by image edge set, so counts match injective homomorphisms
//! divided by the pattern's automorphisms.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::pattern::PatternGraph;

/// One copy: its image vertices (sorted) and image edges (sorted pairs).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CopyImage {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// All copies of `pat` in `g`, lexicographic by (vertex set, edge set).
pub fn enumerate_copies(g: &Graph, pat: &PatternGraph) -> Vec<CopyImage> {
    let k = pat.order();
    let mut out = Vec::new();
    if k == 0 || k > g.n() {
        return out;
    }
    let mut subset = Vec::with_capacity(k);
    subsets_rec(g.n(), k, 0, &mut subset, &mut |verts| {
        let images = edge_images_onto(g, verts, pat);
        for edges in images {
            out.push(CopyImage {
                vertices: verts.to_vec(),
                edges,
            });
        }
    });
    out
}

/// Distinct vertex sets spanning at least one copy of `pat`, lexicographic.
pub fn copy_vertex_sets(g: &Graph, pat: &PatternGraph) -> Vec<Vec<usize>> {
    let k = pat.order();
    let mut out = Vec::new();
    if k == 0 || k > g.n() {
        return out;
    }
    let mut subset = Vec::with_capacity(k);
    subsets_rec(g.n(), k, 0, &mut subset, &mut |verts| {
        if spans_copy(g, verts, pat) {
            out.push(verts.to_vec());
        }
    });
    out
}

pub fn count_copies(g: &Graph, pat: &PatternGraph) -> u64 {
    enumerate_copies(g, pat).len() as u64
}

/// True iff `g` contains any copy of `pat`.
pub fn contains_copy(g: &Graph, pat: &PatternGraph) -> bool {
    let k = pat.order();
    if k > g.n() {
        return false;
    }
    if k == 0 {
        return true;
    }
    let order = embed_order(pat);
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    embed_rec(g, pat, &order, 0, &mut assign, &mut used)
}

/// True iff `pat` embeds onto exactly the vertex set `verts`.
pub fn spans_copy(g: &Graph, verts: &[usize], pat: &PatternGraph) -> bool {
    debug_assert_eq!(verts.len(), pat.order());
    let order = embed_order(pat);
    let k = pat.order();
    let mut assign = vec![usize::MAX; k];
    let mut used = vec![false; k];
    spans_rec(g, verts, pat, &order, 0, &mut assign, &mut used)
}

fn subsets_rec(
    n: usize,
    k: usize,
    from: usize,
    subset: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if subset.len() == k {
        f(subset);
        return;
    }
    let need = k - subset.len();
    for v in from..=(n - need) {
        subset.push(v);
        subsets_rec(n, k, v + 1, subset, f);
        subset.pop();
    }
}

/// Pattern vertex order maximizing back-edges for early pruning.
fn embed_order(pat: &PatternGraph) -> Vec<usize> {
    let k = pat.order();
    let pg = pat.graph();
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    for _ in 0..k {
        let mut best = usize::MAX;
        let mut best_key = (0usize, 0usize);
        for v in 0..k {
            if placed[v] {
                continue;
            }
            let back = order.iter().filter(|&&u| pg.has_edge(u, v)).count();
            let key = (back, pg.degree(v));
            if best == usize::MAX || key > best_key {
                best = v;
                best_key = key;
            }
        }
        placed[best] = true;
        order.push(best);
    }
    order
}

fn embed_rec(
    g: &Graph,
    pat: &PatternGraph,
    order: &[usize],
    at: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if at == order.len() {
        return true;
    }
    let pv = order[at];
    let pg = pat.graph();
    for hv in 0..g.n() {
        if used[hv] {
            continue;
        }
        let ok = order[..at]
            .iter()
            .all(|&pu| !pg.has_edge(pu, pv) || g.has_edge(assign[pu], hv));
        if ok {
            assign[pv] = hv;
            used[hv] = true;
            if embed_rec(g, pat, order, at + 1, assign, used) {
                return true;
            }
            used[hv] = false;
            assign[pv] = usize::MAX;
        }
    }
    false
}

fn spans_rec(
    g: &Graph,
    verts: &[usize],
    pat: &PatternGraph,
    order: &[usize],
    at: usize,
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if at == order.len() {
        return true;
    }
    let pv = order[at];
    let pg = pat.graph();
    for (i, &hv) in verts.iter().enumerate() {
        if used[i] {
            continue;
        }
        let ok = order[..at]
            .iter()
            .all(|&pu| !pg.has_edge(pu, pv) || g.has_edge(verts[assign[pu]], hv));
        if ok {
            assign[pv] = i;
            used[i] = true;
            if spans_rec(g, verts, pat, order, at + 1, assign, used) {
                return true;
            }
            used[i] = false;
            assign[pv] = usize::MAX;
        }
    }
    false
}

/// Distinct image edge sets of `pat` onto exactly `verts`, sorted.
fn edge_images_onto(g: &Graph, verts: &[usize], pat: &PatternGraph) -> Vec<Vec<(usize, usize)>> {
    let k = verts.len();
    debug_assert_eq!(k, pat.order());
    let pg = pat.graph();
    let mut images: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut perm: Vec<usize> = (0..k).collect();
    permute_images(g, verts, pg, &mut perm, 0, &mut images);
    images.into_iter().collect()
}

fn permute_images(
    g: &Graph,
    verts: &[usize],
    pg: &Graph,
    perm: &mut Vec<usize>,
    at: usize,
    images: &mut BTreeSet<Vec<(usize, usize)>>,
) {
    let k = verts.len();
    if at == k {
        let mut edges: Vec<(usize, usize)> = pg
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (verts[perm[a]], verts[perm[b]]);
                if x < y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        edges.sort_unstable();
        images.insert(edges);
        return;
    }
    for i in at..k {
        perm.swap(at, i);
        // pattern edges among placed vertices must land on host edges
        let v = at;
        let ok = (0..v).all(|u| !pg.has_edge(u, v) || g.has_edge(verts[perm[u]], verts[perm[v]]));
        if ok {
            permute_images(g, verts, pg, perm, at + 1, images);
        }
        perm.swap(at, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternGraph;

    #[test]
    fn path_in_path_is_unique() {
        let g = Graph::path(3);
        let p3 = PatternGraph::by_name("P3").unwrap();
        assert_eq!(count_copies(&g, &p3), 1);
    }

    #[test]
    fn three_paths_in_triangle() {
        let g = Graph::complete(3);
        let p3 = PatternGraph::by_name("P3").unwrap();
        assert_eq!(count_copies(&g, &p3), 3);
    }

    #[test]
    fn triangles_in_k4_match_cliques() {
        let g = Graph::complete(4);
        let k3 = PatternGraph::by_name("K3").unwrap();
        assert_eq!(count_copies(&g, &k3), 4);
    }

    #[test]
    fn contains_copy_early_exit_agrees() {
        let c5 = Graph::cycle(5);
        let k3 = PatternGraph::by_name("K3").unwrap();
        let c4 = PatternGraph::by_name("C4").unwrap();
        let p4 = PatternGraph::by_name("P4").unwrap();
        assert!(!contains_copy(&c5, &k3));
        assert!(!contains_copy(&c5, &c4));
        assert!(contains_copy(&c5, &p4));
    }

    #[test]
    fn copies_equal_injections_over_automorphisms() {
        // exhaustive cross-check on all graphs with up to 6 vertices
        for n in 3..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let pats = ["K3", "P3", "P4", "C4"].map(|s| PatternGraph::by_name(s).unwrap());
            for mask in 0u64..(1u64 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| (mask >> i) & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                for pat in &pats {
                    if pat.order() > n {
                        continue;
                    }
                    let inj = count_injective_homomorphisms(&g, pat);
                    let copies = count_copies(&g, pat);
                    assert_eq!(copies * pat.automorphism_count(), inj, "n={n}");
                }
            }
        }
    }

    fn count_injective_homomorphisms(g: &Graph, pat: &PatternGraph) -> u64 {
        let k = pat.order();
        let n = g.n();
        let mut count = 0u64;
        let mut assign = vec![usize::MAX; k];
        let mut used = vec![false; n];
        fn rec(
            g: &Graph,
            pg: &Graph,
            at: usize,
            assign: &mut Vec<usize>,
            used: &mut Vec<bool>,
            count: &mut u64,
        ) {
            if at == assign.len() {
                *count += 1;
                return;
            }
            for hv in 0..g.n() {
                if used[hv] {
                    continue;
                }
                let ok = (0..at).all(|pu| !pg.has_edge(pu, at) || g.has_edge(assign[pu], hv));
                if ok {
                    assign[at] = hv;
                    used[hv] = true;
                    rec(g, pg, at + 1, assign, used, count);
                    used[hv] = false;
                }
            }
        }
        rec(g, pat.graph(), 0, &mut assign, &mut used, &mut count);
        count
    }
}
