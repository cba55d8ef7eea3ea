//! Parameterized extremal and lower-bound constructions, each paired with
//! its own predicted edge count.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::ConstructionError;
use crate::graph::{Graph, PartSizes};
use crate::pattern::PatternGraph;
use crate::worm::Coloring;

type Result<T> = core::result::Result<T, ConstructionError>;

/// A built graph with the edge count its construction promises, plus the
/// certifying coloring where one exists.
#[derive(Clone, Debug)]
pub struct Construction {
    pub graph: Graph,
    pub predicted_edges: usize,
    pub coloring: Option<Coloring>,
}

impl Construction {
    fn bare(graph: Graph, predicted_edges: usize) -> Self {
        Construction {
            graph,
            predicted_edges,
            coloring: None,
        }
    }
}

fn invalid(msg: alloc::string::String) -> ConstructionError {
    ConstructionError::InvalidArgument(msg)
}

fn domain(msg: alloc::string::String) -> ConstructionError {
    ConstructionError::Domain(msg)
}

/// Singular-triangle-free graphs for every n >= 4, by residue class mod 4:
/// complete 4-partite graphs with the unbalanced parts, two of them with an
/// extra vertex joined to two classes.
pub fn caro_tuza_k3(n: usize) -> Result<Construction> {
    if n < 4 {
        return Err(invalid(format!("n must be at least 4, got {n}")));
    }
    match n % 4 {
        0 => {
            let k = n / 4;
            if k == 1 {
                // the 4-partite family degenerates at n=4; K4 minus an edge
                // is extremal with 5 edges
                let mut g = Graph::complete(4);
                g.clear_edge(2, 3);
                return Ok(Construction::bare(g, 5));
            }
            let parts = PartSizes::new(vec![k - 1, k - 1, k + 1, k + 1]).expect("positive");
            let g = Graph::complete_multipartite(&parts);
            Ok(Construction::bare(g, 6 * k * k - 2))
        }
        1 => {
            let k = n / 4;
            let parts = PartSizes::new(vec![k; 4]).expect("positive");
            let mut g = grow_by_one(&Graph::complete_multipartite(&parts));
            // new vertex joined to the first two classes
            for v in 0..2 * k {
                g.set_edge(n - 1, v);
            }
            Ok(Construction::bare(g, 6 * k * k + 2 * k))
        }
        2 => {
            let g = Graph::turan(n, 4).expect("n >= 4");
            let predicted = g.edge_count();
            Ok(Construction::bare(g, predicted))
        }
        _ => {
            let k = n / 4;
            let parts = PartSizes::new(vec![k, k, k + 1, k + 1]).expect("positive");
            let mut g = grow_by_one(&Graph::complete_multipartite(&parts));
            // new vertex joined to the 2k vertices of the two smaller parts
            for v in 0..2 * k {
                g.set_edge(n - 1, v);
            }
            Ok(Construction::bare(g, 6 * k * k + 8 * k + 1))
        }
    }
}

fn grow_by_one(g: &Graph) -> Graph {
    let edges = g.edges();
    Graph::from_edges(g.n() + 1, &edges).expect("relabel-free growth")
}

/// The unique edge-maximizing partition of n/r into r distinct parts with
/// spread at most r: a consecutive run with the top `(n/r) mod r`-ish values
/// shifted up by one.
pub fn property_r_partition(n: usize, r: usize) -> Result<Vec<usize>> {
    if r < 2 {
        return Err(invalid(format!("r must be at least 2, got {r}")));
    }
    if n % r != 0 || n < r * r * (r + 1) / 2 {
        return Err(domain(format!(
            "a complete r^2-partite graph with r distinct part sizes each used r times \
             exists iff r divides n and n >= r^2(r+1)/2; got n={n}, r={r}"
        )));
    }
    let k = n / r;
    let base = r * (r - 1) / 2;
    let j = (k - base) % r;
    let c = (k - base - j) / r;
    debug_assert!(c >= 1);
    let mut parts: Vec<usize> = (0..r).map(|i| c + i).collect();
    for i in (r - j)..r {
        parts[i] += 1;
    }
    debug_assert_eq!(parts.iter().sum::<usize>(), k);
    debug_assert!(parts.last().unwrap() - parts[0] <= r);
    Ok(parts)
}

/// Complete r^2-partite graph with each block size used exactly r times;
/// its edge count realizes the maximum over such graphs.
pub fn property_r_graph(n: usize, r: usize) -> Result<Construction> {
    let distinct = property_r_partition(n, r)?;
    let mut sizes = Vec::with_capacity(r * r);
    for &l in &distinct {
        sizes.extend(core::iter::repeat(l).take(r));
    }
    let parts = PartSizes::new(sizes).expect("positive");
    let g = Graph::complete_multipartite(&parts);
    let predicted = n * (n - 1) / 2 - r * distinct.iter().map(|&l| l * (l - 1) / 2).sum::<usize>();
    Ok(Construction::bare(g, predicted))
}

/// Property-R graph on n-m vertices plus m mutually adjacent vertices joined
/// to all parts of the r-1 smallest sizes.
pub fn clique_extension_graph(n: usize, r: usize) -> Result<Construction> {
    if r < 2 {
        return Err(invalid(format!("r must be at least 2, got {r}")));
    }
    let m = n % r;
    if m == 0 {
        return Err(invalid(format!(
            "r divides n={n}; use the property-R graph directly"
        )));
    }
    let base_n = n - m;
    let distinct = property_r_partition(base_n, r)?;
    let base = property_r_graph(base_n, r)?;
    let k = base_n / r;
    let small_total = r * (k - distinct[r - 1]);
    let mut edges = base.graph.edges();
    for i in 0..m {
        let v = base_n + i;
        for j in (i + 1)..m {
            edges.push((v, base_n + j));
        }
        // the smallest-size parts occupy the first vertices
        for u in 0..small_total {
            edges.push((v, u));
        }
    }
    let g = Graph::from_edges(n, &edges).expect("in range");
    let predicted = base.predicted_edges + m * (m - 1) / 2 + m * small_total;
    Ok(Construction::bare(g, predicted))
}

/// Shrink r-m parts of one odd size in the property-R graph on r(k+1)
/// vertices by one vertex each, then delete a perfect cross-part matching on
/// the shrunken parts; every degree drops by exactly r-m.
pub fn matching_removal_graph(n: usize, r: usize) -> Result<Construction> {
    if r < 3 {
        return Err(invalid(format!("r must be at least 3, got {r}")));
    }
    let m = n % r;
    if m == 0 || m > r - 2 {
        return Err(invalid(format!(
            "n mod r must lie in 1..=r-2; got n={n}, r={r}, m={m}"
        )));
    }
    let n_big = n + (r - m);
    debug_assert_eq!(n_big % r, 0);
    let distinct = property_r_partition(n_big, r)?;
    let base = property_r_graph(n_big, r)?;
    let s = *distinct
        .iter()
        .filter(|&&l| l % 2 == 1)
        .max()
        .ok_or_else(|| domain(format!("no odd block size in {distinct:?}")))?;

    // blocks of size s occupy a consecutive run; shrink the first r-m of
    // them by dropping each block's last vertex
    let sizes: Vec<usize> = distinct
        .iter()
        .flat_map(|&l| core::iter::repeat(l).take(r))
        .collect();
    let parts = PartSizes::new(sizes.clone()).expect("positive");
    let offs = parts.offsets();
    let t = r - m;
    let first_s_block = sizes.iter().position(|&l| l == s).expect("present");
    let removed: Vec<usize> = (0..t).map(|i| offs[first_s_block + i + 1] - 1).collect();

    // survivors keep their relative order
    let mut rename = vec![usize::MAX; n_big];
    let mut next = 0;
    for v in 0..n_big {
        if !removed.contains(&v) {
            rename[v] = next;
            next += 1;
        }
    }
    let mut edges: Vec<(usize, usize)> = base
        .graph
        .edges()
        .into_iter()
        .filter(|&(u, v)| rename[u] != usize::MAX && rename[v] != usize::MAX)
        .map(|(u, v)| (rename[u], rename[v]))
        .collect();

    // perfect matching across the shrunken parts (each now has even size s-1)
    let half = (s - 1) / 2;
    let shrunk: Vec<Vec<usize>> = (0..t)
        .map(|i| {
            let b = first_s_block + i;
            (offs[b]..offs[b + 1] - 1).map(|v| rename[v]).collect()
        })
        .collect();
    let mut matching: Vec<(usize, usize)> = Vec::new();
    if s > 1 {
        if t % 2 == 0 {
            for pair in shrunk.chunks(2) {
                for i in 0..(s - 1) {
                    matching.push((pair[0][i], pair[1][i]));
                }
            }
        } else {
            // cycle the parts, pairing half of each with each neighbor
            for i in 0..t {
                let j = (i + 1) % t;
                for x in 0..half {
                    matching.push((shrunk[i][half + x], shrunk[j][x]));
                }
            }
        }
    }
    debug_assert_eq!(matching.len(), t * (s - 1) / 2);
    let match_set: alloc::collections::BTreeSet<(usize, usize)> = matching
        .into_iter()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    edges.retain(|e| !match_set.contains(e));

    let g = Graph::from_edges(n, &edges).expect("in range");
    let predicted = base.predicted_edges - (t * (n_big - s) - t * (t - 1) / 2) - t * (s - 1) / 2;
    Ok(Construction::bare(g, predicted))
}

/// Balanced complete r-partite graph on n-1 vertices plus an apex joined to
/// all but the two smallest classes, reattached to one vertex of the first
/// and a set A of the second, with the edges between them removed.
pub fn hanson_toft_graph(n: usize, r: usize, a_size: usize) -> Result<Construction> {
    if r < 2 {
        return Err(invalid(format!("r must be at least 2, got {r}")));
    }
    if a_size < 1 {
        return Err(invalid(alloc::string::String::from(
            "a_size must be at least 1",
        )));
    }
    if n < 2 {
        return Err(invalid(format!("n too small: {n}")));
    }
    let parts = PartSizes::balanced(n - 1, r).map_err(|e| invalid(format!("{e}")))?;
    if parts.count() < r {
        return Err(invalid(format!(
            "n-1 = {} cannot host {r} nonempty classes",
            n - 1
        )));
    }
    let offs = parts.offsets();
    let s1 = parts.sizes()[0];
    let s2 = parts.sizes()[1];
    // both touched classes must keep an unpicked vertex
    if s1 < 2 {
        return Err(invalid(format!(
            "the class providing u needs at least 2 vertices, has {s1}"
        )));
    }
    if s2 < a_size + 1 {
        return Err(invalid(format!(
            "the class providing A needs more than |A|={a_size} vertices, has {s2}"
        )));
    }
    let base = Graph::complete_multipartite(&parts);
    let mut g = grow_by_one(&base);
    let apex = n - 1;
    let u = offs[0];
    let a_verts: Vec<usize> = (offs[1]..offs[1] + a_size).collect();
    for v in offs[2]..offs[parts.count()] {
        g.set_edge(apex, v);
    }
    g.set_edge(apex, u);
    for &a in &a_verts {
        g.set_edge(apex, a);
        g.clear_edge(u, a);
    }
    let predicted = base.edge_count() + (n - 1 - s1 - s2) + 1;
    Ok(Construction::bare(g, predicted))
}

/// How a bipartite block is supplemented for the singular-path-free family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum P3Kind {
    Plain,
    MatchedOneSide,
    MatchedBothSides,
}

/// Singular-path-free graphs with the most edges this family provides:
/// a complete bipartite graph with perfect matchings added only to sides
/// that can be fully matched, keeping each degree class homogeneous.
pub fn p3_extremal(n: usize) -> Result<Construction> {
    if n < 5 {
        return Err(invalid(format!("n must be at least 5, got {n}")));
    }
    let mut best: Option<(usize, usize, usize, P3Kind)> = None; // (edges, |p-q|, p, kind)
    let mut consider = |edges: usize, p: usize, q: usize, kind: P3Kind| {
        let diff = p.abs_diff(q);
        let better = match &best {
            None => true,
            Some((be, bd, bp, _)) => {
                (edges, core::cmp::Reverse(diff), core::cmp::Reverse(p))
                    > (*be, core::cmp::Reverse(*bd), core::cmp::Reverse(*bp))
            }
        };
        if better {
            best = Some((edges, diff, p, kind));
        }
    };
    for p in 1..n {
        let q = n - p;
        // degrees must separate the two sides into distinct classes
        if p != q {
            consider(p * q, p, q, P3Kind::Plain);
        }
        if p % 2 == 0 && q + 1 != p {
            consider(p * q + p / 2, p, q, P3Kind::MatchedOneSide);
        }
        if p % 2 == 0 && q % 2 == 0 && p != q && p < q {
            consider(p * q + n / 2, p, q, P3Kind::MatchedBothSides);
        }
    }
    let (edges, _, p, kind) = best.expect("n >= 5 always admits a plain split");
    let q = n - p;
    let mut g = Graph::complete_bipartite(p, q);
    match kind {
        P3Kind::Plain => {}
        P3Kind::MatchedOneSide => {
            for i in (0..p).step_by(2) {
                g.set_edge(i, i + 1);
            }
        }
        P3Kind::MatchedBothSides => {
            for i in (0..p).step_by(2) {
                g.set_edge(i, i + 1);
            }
            for i in (p..n).step_by(2) {
                g.set_edge(i, i + 1);
            }
        }
    }
    debug_assert_eq!(g.edge_count(), edges);
    Ok(Construction::bare(g, edges))
}

/// Intra-part supplement for the WORM-coloring construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntraStrategy {
    /// Leave each part independent.
    None,
    /// Pack disjoint cliques of this size into each part (trees on k+1
    /// vertices cannot fit inside components of k vertices).
    DisjointCliques(usize),
    /// A d-regular circulant in each part (stars with more than d leaves
    /// cannot appear).
    Regular(usize),
}

/// Balanced complete (|V(F)|-1)-partite graph with a pattern-free graph in
/// each part, colored by part index; the coloring is WORM by construction
/// and is returned alongside.
pub fn worm_turan_graph(
    n: usize,
    pattern: &PatternGraph,
    intra: IntraStrategy,
) -> Result<Construction> {
    let order = pattern.order();
    if order < 3 {
        return Err(invalid(format!(
            "pattern must have at least 3 vertices, got {order}"
        )));
    }
    let r = order - 1;
    if n < r {
        return Err(domain(format!("n={n} is below the part count r={r}")));
    }
    let parts = PartSizes::balanced(n, r).map_err(|e| invalid(format!("{e}")))?;
    let mut g = Graph::complete_multipartite(&parts);
    let offs = parts.offsets();
    let mut added = 0usize;
    match intra {
        IntraStrategy::None => {}
        IntraStrategy::DisjointCliques(k) => {
            if k < 2 {
                return Err(invalid(format!("clique size must be at least 2, got {k}")));
            }
            if n % (k * k) != 0 || r != k {
                return Err(domain(format!(
                    "disjoint K_{k} packing needs r = k and k^2 | n; got n={n}, r={r}"
                )));
            }
            for b in 0..parts.count() {
                let lo = offs[b];
                let size = offs[b + 1] - lo;
                debug_assert_eq!(size % k, 0);
                for c in 0..(size / k) {
                    let start = lo + c * k;
                    for i in 0..k {
                        for j in (i + 1)..k {
                            g.set_edge(start + i, start + j);
                            added += 1;
                        }
                    }
                }
            }
        }
        IntraStrategy::Regular(d) => {
            for b in 0..parts.count() {
                let lo = offs[b];
                let size = offs[b + 1] - lo;
                if d >= size || (d * size) % 2 != 0 {
                    return Err(domain(format!(
                        "no {d}-regular graph on a part of {size} vertices"
                    )));
                }
                // circulant: offsets 1..=d/2, plus the antipode when d is odd
                for step in 1..=(d / 2) {
                    for i in 0..size {
                        let j = (i + step) % size;
                        g.set_edge(lo + i, lo + j);
                    }
                    added += size;
                }
                if d % 2 == 1 {
                    for i in 0..size / 2 {
                        g.set_edge(lo + i, lo + i + size / 2);
                    }
                    added += size / 2;
                }
            }
        }
    }
    let turan_edges = Graph::complete_multipartite(&parts).edge_count();
    let predicted = turan_edges + added;
    let mut colors = vec![0usize; n];
    for (b, _) in parts.sizes().iter().enumerate() {
        for v in offs[b]..offs[b + 1] {
            colors[v] = b;
        }
    }
    let coloring = Coloring::new(colors);
    match crate::worm::check_worm(&g, pattern, &coloring) {
        Ok(check) if check.is_valid() => {}
        Ok(_) => {
            return Err(domain(format!(
                "the chosen intra strategy leaves a monochromatic copy of {}",
                pattern.display_name()
            )))
        }
        Err(e) => return Err(invalid(format!("{e}"))),
    }
    Ok(Construction {
        graph: g,
        predicted_edges: predicted,
        coloring: Some(coloring),
    })
}

/// Complete r-partite graph, as balanced as possible subject to all part
/// sizes distinct; every degree value occurs in exactly one part.
pub fn distinct_parts_turan(n: usize, r: usize) -> Result<Construction> {
    if r < 1 {
        return Err(invalid(alloc::string::String::from("r must be at least 1")));
    }
    if n < r * (r + 1) / 2 {
        return Err(domain(format!(
            "distinct positive parts need n >= r(r+1)/2; got n={n}, r={r}"
        )));
    }
    let base = r * (r - 1) / 2;
    let j = (n - base) % r;
    let c = (n - base - j) / r;
    let mut sizes: Vec<usize> = (0..r).map(|i| c + i).collect();
    for i in (r - j)..r {
        sizes[i] += 1;
    }
    debug_assert_eq!(sizes.iter().sum::<usize>(), n);
    let parts = PartSizes::new(sizes.clone()).expect("positive");
    let g = Graph::complete_multipartite(&parts);
    let predicted = n * (n - 1) / 2 - sizes.iter().map(|&s| s * (s - 1) / 2).sum::<usize>();
    Ok(Construction::bare(g, predicted))
}

/// Regular graph with odd girth above g: the balanced complete bipartite
/// graph for even n; for odd n, a bipartite component (a complete balanced
/// bipartite graph minus cyclic perfect matchings) plus an odd-cycle blow-up.
pub fn regular_odd_girth_graph(n: usize, g: usize) -> Result<Construction> {
    if g < 3 || g % 2 == 0 {
        return Err(invalid(format!(
            "odd girth bound must be odd and >= 3, got {g}"
        )));
    }
    if n % 2 == 0 {
        if n < 2 {
            return Err(domain(format!("n too small: {n}")));
        }
        let graph = Graph::complete_bipartite(n / 2, n / 2);
        let predicted = n * n / 4;
        return Ok(Construction::bare(graph, predicted));
    }
    let period = g + 6;
    if n < period {
        return Err(domain(format!(
            "odd n must satisfy n >= g+6 = {period} to split as (g+6)q + 2r, got {n}"
        )));
    }
    let mut q = n / period;
    if q % 2 == 0 {
        q -= 1;
    }
    debug_assert!(q >= 1);
    let r = (n - period * q) / 2;
    debug_assert!(r <= g + 5);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // component 1: K_{m,m} minus r cyclic perfect matchings, m = 2q + r
    let m = 2 * q + r;
    for i in 0..m {
        for shift in r..m {
            edges.push((i, m + (i + shift) % m));
        }
    }
    // component 2: cycle of length g+2 blown up by independent sets of size q
    let base = 2 * m;
    let len = g + 2;
    for b in 0..len {
        let c = (b + 1) % len;
        for i in 0..q {
            for j in 0..q {
                edges.push((base + b * q + i, base + c * q + j));
            }
        }
    }
    debug_assert_eq!(base + len * q, n);
    let graph = Graph::from_edges(n, &edges).expect("in range");
    let predicted = n * q;
    Ok(Construction::bare(graph, predicted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PatternGraph;
    use crate::singular::is_singular_free;
    use crate::worm::check_worm;

    fn pat(name: &str) -> PatternGraph {
        PatternGraph::by_name(name).unwrap()
    }

    fn assert_built(c: &Construction) {
        assert_eq!(
            c.graph.edge_count(),
            c.predicted_edges,
            "prediction mismatch"
        );
    }

    #[test]
    fn caro_tuza_examples() {
        for (n, edges) in [(4, 5), (5, 8), (6, 13), (7, 15), (8, 22), (9, 28)] {
            let c = caro_tuza_k3(n).unwrap();
            assert_built(&c);
            assert_eq!(c.predicted_edges, edges, "n={n}");
            assert!(is_singular_free(&c.graph, &pat("K3")).unwrap(), "n={n}");
        }
        assert!(caro_tuza_k3(3).is_err());
    }

    #[test]
    fn property_r_partitions() {
        assert_eq!(property_r_partition(18, 3).unwrap(), vec![1, 2, 3]);
        assert_eq!(property_r_partition(24, 3).unwrap(), vec![1, 3, 4]);
        assert_eq!(property_r_partition(27, 3).unwrap(), vec![2, 3, 4]);
        assert!(property_r_partition(20, 3).is_err());
        assert!(property_r_partition(15, 3).is_err());
    }

    #[test]
    fn property_r_partition_matches_exhaustive_search() {
        // independent oracle: scan all distinct r-part partitions of n/r,
        // maximize edges, confirm the unique optimum
        for (n, r) in [
            (18usize, 3usize),
            (21, 3),
            (24, 3),
            (27, 3),
            (30, 3),
            (40, 4),
            (44, 4),
        ] {
            let k = n / r;
            let mut best: Option<(usize, Vec<usize>)> = None;
            let mut unique = true;
            let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(k, 1, Vec::new())];
            while let Some((left, min, cur)) = stack.pop() {
                if cur.len() == r {
                    if left == 0 {
                        let cost: usize = cur.iter().map(|&l| l * (l - 1) / 2).sum();
                        let edges = n * (n - 1) / 2 - r * cost;
                        match &best {
                            None => best = Some((edges, cur.clone())),
                            Some((be, _)) if edges > *be => {
                                best = Some((edges, cur.clone()));
                                unique = true;
                            }
                            Some((be, _)) if edges == *be => unique = false,
                            _ => {}
                        }
                    }
                    continue;
                }
                for next in min..=left {
                    let mut c = cur.clone();
                    c.push(next);
                    stack.push((left - next, next + 1, c));
                }
            }
            let (_, parts) = best.expect("feasible");
            assert!(unique, "optimum not unique for n={n}, r={r}");
            assert_eq!(property_r_partition(n, r).unwrap(), parts, "n={n}, r={r}");
        }
    }

    #[test]
    fn property_r_graphs() {
        let c = property_r_graph(18, 3).unwrap();
        assert_built(&c);
        assert_eq!(c.predicted_edges, 141);
        assert!(is_singular_free(&c.graph, &pat("K4")).unwrap());
        assert_eq!(property_r_graph(27, 3).unwrap().predicted_edges, 321);
    }

    #[test]
    fn clique_extension_examples() {
        let c20 = clique_extension_graph(20, 3).unwrap();
        assert_built(&c20);
        assert_eq!(c20.predicted_edges, 160);
        let mut degs = c20.graph.degrees();
        degs.sort_unstable();
        degs.dedup();
        assert_eq!(degs, vec![10, 15, 18, 19]);
        assert!(is_singular_free(&c20.graph, &pat("K4")).unwrap());

        assert_eq!(clique_extension_graph(19, 3).unwrap().predicted_edges, 150);
        assert!(clique_extension_graph(18, 3).is_err());
    }

    #[test]
    fn matching_removal_examples() {
        let c19 = matching_removal_graph(19, 3).unwrap();
        assert_built(&c19);
        assert_eq!(c19.predicted_edges, 150);
        let mut degs = c19.graph.degrees();
        degs.sort_unstable();
        degs.dedup();
        assert_eq!(degs, vec![15, 17, 18]);
        assert!(is_singular_free(&c19.graph, &pat("K4")).unwrap());

        let c22 = matching_removal_graph(22, 3).unwrap();
        assert_built(&c22);
        assert_eq!(c22.predicted_edges, 206);
        assert!(is_singular_free(&c22.graph, &pat("K4")).unwrap());

        // degrees drop uniformly by r - m relative to the base graph
        let base = property_r_graph(24, 3).unwrap();
        let base_max = *base.graph.degrees().iter().max().unwrap();
        let out_max = *c22.graph.degrees().iter().max().unwrap();
        assert_eq!(base_max - out_max, 2);
    }

    #[test]
    fn hanson_toft_examples() {
        let c9 = hanson_toft_graph(9, 4, 1).unwrap();
        assert_built(&c9);
        assert_eq!(c9.predicted_edges, 29);
        assert!(!c9.graph.has_clique(5));
        assert_eq!(c9.graph.chromatic_number(), 5);

        let c13 = hanson_toft_graph(13, 4, 1).unwrap();
        assert_built(&c13);
        assert_eq!(c13.predicted_edges, 61);
        assert!(!c13.graph.has_clique(5));

        // classes too small to pick u and A
        assert!(hanson_toft_graph(6, 4, 1).is_err());
    }

    #[test]
    fn p3_extremal_family() {
        let expected = [
            (5, 7),
            (6, 11),
            (7, 12),
            (8, 18),
            (9, 22),
            (10, 29),
            (11, 30),
            (12, 39),
            (13, 45),
            (14, 55),
        ];
        for (n, edges) in expected {
            let c = p3_extremal(n).unwrap();
            assert_built(&c);
            assert_eq!(c.predicted_edges, edges, "n={n}");
            assert!(is_singular_free(&c.graph, &pat("P3")).unwrap(), "n={n}");
        }
        assert!(p3_extremal(4).is_err());
    }

    #[test]
    fn worm_turan_star_and_tree() {
        // star with 3 leaves, n=9: 2-regular circulants inside each part
        let s3 = pat("S3");
        let c = worm_turan_graph(9, &s3, IntraStrategy::Regular(2)).unwrap();
        assert_built(&c);
        assert_eq!(c.predicted_edges, 36);
        let col = c.coloring.as_ref().unwrap();
        assert!(check_worm(&c.graph, &s3, col).unwrap().is_valid());

        // 3-vertex path as a tree on k+1=3 vertices: k=2, disjoint K2s
        let p3 = pat("P3");
        let c = worm_turan_graph(16, &p3, IntraStrategy::DisjointCliques(2)).unwrap();
        assert_built(&c);
        assert_eq!(c.predicted_edges, 72);
        assert!(check_worm(&c.graph, &p3, c.coloring.as_ref().unwrap())
            .unwrap()
            .is_valid());

        assert!(worm_turan_graph(15, &p3, IntraStrategy::DisjointCliques(2)).is_err());
    }

    #[test]
    fn worm_turan_rejects_bad_intra() {
        // a 3-regular graph inside parts of 4 contains stars with 3 leaves
        let s3 = pat("S3");
        assert!(worm_turan_graph(12, &s3, IntraStrategy::Regular(3)).is_err());
    }

    #[test]
    fn distinct_parts_examples() {
        let c6 = distinct_parts_turan(6, 3).unwrap();
        assert_built(&c6);
        assert_eq!(c6.predicted_edges, 11);
        let c9 = distinct_parts_turan(9, 3).unwrap();
        assert_eq!(c9.predicted_edges, 26);
        let mut degs = c9.graph.degrees();
        degs.sort_unstable();
        degs.dedup();
        assert_eq!(degs.len(), 3);
        assert!(distinct_parts_turan(5, 3).is_err());
    }

    #[test]
    fn distinct_parts_matches_exhaustive_search() {
        fn scan(left: usize, min: usize, slots: usize, cost: usize, best: &mut usize, n: usize) {
            if slots == 0 {
                if left == 0 {
                    let edges = n * (n - 1) / 2 - cost;
                    if edges > *best {
                        *best = edges;
                    }
                }
                return;
            }
            for next in min..=left {
                scan(
                    left - next,
                    next + 1,
                    slots - 1,
                    cost + next * (next - 1) / 2,
                    best,
                    n,
                );
            }
        }
        for (n, r) in [(6usize, 3usize), (9, 3), (12, 3), (14, 4), (20, 4)] {
            let mut best = 0usize;
            scan(n, 1, r, 0, &mut best, n);
            assert_eq!(
                distinct_parts_turan(n, r).unwrap().predicted_edges,
                best,
                "n={n} r={r}"
            );
        }
    }

    #[test]
    fn regular_odd_girth_examples() {
        let c23 = regular_odd_girth_graph(23, 3).unwrap();
        assert_built(&c23);
        assert_eq!(c23.predicted_edges, 23);
        assert_eq!(c23.graph.is_regular(), Some(2));
        assert_eq!(c23.graph.odd_girth(), Some(5));

        let c33 = regular_odd_girth_graph(33, 5).unwrap();
        assert_built(&c33);
        assert_eq!(c33.predicted_edges, 99);
        assert_eq!(c33.graph.is_regular(), Some(6));
        assert_eq!(c33.graph.odd_girth(), Some(7));

        let c12 = regular_odd_girth_graph(12, 3).unwrap();
        assert_eq!(c12.predicted_edges, 36);
        assert!(c12.graph.is_bipartite());

        assert!(regular_odd_girth_graph(7, 3).is_err());
        assert!(regular_odd_girth_graph(10, 4).is_err());
    }
}
