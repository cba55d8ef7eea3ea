//! Simple undirected graphs as symmetric row bitsets.
//!
//! Rows are one 64-bit word up to 64 vertices and spill into multiple words
//! past that, so the big parameterized constructions still work while the
//! enumeration kernels stay on the single-word fast path.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GraphError;

const WORD: usize = 64;

/// Ordered list of positive part sizes, kept ascending; defines a complete
/// multipartite graph on consecutive vertex blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSizes {
    sizes: Vec<usize>,
}

impl PartSizes {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::EmptyParts);
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(GraphError::ZeroPartSize);
        }
        sizes.sort_unstable();
        Ok(PartSizes { sizes })
    }

    /// Balanced partition of `n` into `q` parts (smaller parts first).
    /// With `q >= n` this degenerates to `n` singleton parts.
    pub fn balanced(n: usize, q: usize) -> Result<Self, GraphError> {
        if q == 0 {
            return Err(GraphError::EmptyParts);
        }
        let q = q.min(n).max(1);
        if n == 0 {
            return Err(GraphError::ZeroPartSize);
        }
        let small = n / q;
        let big_count = n % q;
        let mut sizes = vec![small; q - big_count];
        sizes.extend(vec![small + 1; big_count]);
        PartSizes::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Start offset of each consecutive block, plus a trailing total.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &s in &self.sizes {
            acc += s;
            out.push(acc);
        }
        out
    }

    /// Block index containing vertex `v` under the consecutive layout.
    pub fn part_of(&self, v: usize) -> usize {
        let mut acc = 0;
        for (i, &s) in self.sizes.iter().enumerate() {
            acc += s;
            if v < acc {
                return i;
            }
        }
        self.sizes.len()
    }
}

/// Simple undirected graph; no loops, adjacency kept symmetric by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = if n == 0 { 1 } else { (n + WORD - 1) / WORD };
        Graph {
            n,
            words,
            bits: vec![0; n.max(1) * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complete multipartite graph on consecutive blocks: u ~ v iff they lie
    /// in different parts.
    pub fn complete_multipartite(parts: &PartSizes) -> Self {
        let n = parts.total();
        let mut g = Graph::empty(n);
        let offs = parts.offsets();
        for b in 0..parts.count() {
            for c in (b + 1)..parts.count() {
                for u in offs[b]..offs[b + 1] {
                    for v in offs[c]..offs[c + 1] {
                        g.set_edge(u, v);
                    }
                }
            }
        }
        g
    }

    /// Balanced complete q-partite Turán graph on n vertices.
    pub fn turan(n: usize, q: usize) -> Result<Self, GraphError> {
        Ok(Graph::complete_multipartite(&PartSizes::balanced(n, q)?))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.set_edge(v, (v + 1) % n);
            }
        } else if n == 2 {
            g.set_edge(0, 1);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    /// Star with `leaves` leaves: vertex 0 is the center.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        self.bits[u * w + v / WORD] |= 1u64 << (v % WORD);
        self.bits[v * w + u / WORD] |= 1u64 << (u % WORD);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words;
        self.bits[u * w + v / WORD] &= !(1u64 << (v % WORD));
        self.bits[v * w + u / WORD] &= !(1u64 << (u % WORD));
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// First row word; the whole neighborhood when n <= 64.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        self.bits[v * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.bits[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = self.bits.iter().map(|w| w.count_ones() as usize).sum();
        total / 2
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> NeighborIter<'_> {
        NeighborIter {
            words: self.row(v),
            idx: 0,
            cur: self.row(v)[0],
        }
    }

    /// Some(d) iff every vertex has degree d.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        for v in 1..self.n {
            if self.degree(v) != d {
                return None;
            }
        }
        Some(d)
    }

    /// New graph on the same vertices keeping exactly the cross-part
    /// non-edges: u ~ v iff different parts and not adjacent here.
    pub fn complement_within_partition(&self, parts: &PartSizes) -> Graph {
        debug_assert_eq!(parts.total(), self.n);
        let mut g = Graph::empty(self.n);
        let offs = parts.offsets();
        for b in 0..parts.count() {
            for c in (b + 1)..parts.count() {
                for u in offs[b]..offs[b + 1] {
                    for v in offs[c]..offs[c + 1] {
                        if !self.has_edge(u, v) {
                            g.set_edge(u, v);
                        }
                    }
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts` (relabeled 0..verts.len() in the given order).
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Parent plus one new vertex whose neighborhood is `mask` over the old
    /// vertices. Single-word graphs only; this is the generator's hot path.
    pub fn extend_with_vertex(&self, mask: u64) -> Graph {
        debug_assert!(self.words == 1 && self.n < WORD);
        let n = self.n + 1;
        let mut bits = Vec::with_capacity(n);
        for v in 0..self.n {
            let mut row = self.bits[v];
            if (mask >> v) & 1 == 1 {
                row |= 1u64 << self.n;
            }
            bits.push(row);
        }
        bits.push(mask);
        Graph { n, words: 1, bits }
    }

    /// Length of the shortest odd cycle; None iff bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        let n = self.n;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if best == Some(3) {
                break;
            }
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    } else if dist[v] == dist[u] {
                        let len = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth().is_none()
    }

    /// Exact chromatic number by branch and bound; intended for small graphs.
    pub fn chromatic_number(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        if self.edge_count() == 0 {
            return 1;
        }
        if self.is_bipartite() {
            return 2;
        }
        let mut k = 3;
        loop {
            if self.colorable_with(k) {
                return k;
            }
            k += 1;
        }
    }

    fn colorable_with(&self, k: usize) -> bool {
        let mut colors = vec![usize::MAX; self.n];
        self.color_rec(0, 0, k, &mut colors)
    }

    fn color_rec(&self, v: usize, used: usize, k: usize, colors: &mut [usize]) -> bool {
        if v == self.n {
            return true;
        }
        // allowing one fresh color kills color-permutation symmetry
        let limit = (used + 1).min(k);
        for c in 0..limit {
            let clash = self.neighbors(v).any(|u| colors[u] == c);
            if !clash {
                colors[v] = c;
                if self.color_rec(v + 1, used.max(c + 1), k, colors) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }

    /// Every k-subset inducing a complete subgraph, in lexicographic order of
    /// the sorted vertex lists.
    pub fn cliques(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k == 0 || k > self.n {
            return out;
        }
        let mut prefix = Vec::with_capacity(k);
        self.clique_rec(0, k, &mut prefix, &mut out);
        out
    }

    fn clique_rec(
        &self,
        from: usize,
        k: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        // not enough vertices left
        if self.n - from < k - prefix.len() {
            return;
        }
        for v in from..self.n {
            if prefix.iter().all(|&u| self.has_edge(u, v)) {
                prefix.push(v);
                self.clique_rec(v + 1, k, prefix, out);
                prefix.pop();
            }
        }
    }

    /// True iff some k vertices are pairwise adjacent.
    pub fn has_clique(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if k > self.n {
            return false;
        }
        let mut prefix = Vec::with_capacity(k);
        self.has_clique_rec(0, k, &mut prefix)
    }

    fn has_clique_rec(&self, from: usize, k: usize, prefix: &mut Vec<usize>) -> bool {
        if prefix.len() == k {
            return true;
        }
        if self.n - from < k - prefix.len() {
            return false;
        }
        for v in from..self.n {
            if prefix.iter().all(|&u| self.has_edge(u, v)) {
                prefix.push(v);
                if self.has_clique_rec(v + 1, k, prefix) {
                    return true;
                }
                prefix.pop();
            }
        }
        false
    }
}

pub struct NeighborIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Iterator for NeighborIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
