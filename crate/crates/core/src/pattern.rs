//! Pattern graphs: a small graph plus cached derived data, and the
//! built-in registry of named patterns.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::PatternError;
use crate::graph::Graph;

/// Automorphism counting is brute force over permutations.
const AUT_LIMIT: usize = 9;

/// A pattern graph with cached vertex count, chromatic number, odd girth
/// (absent iff bipartite) and automorphism count.
#[derive(Clone, Debug)]
pub struct PatternGraph {
    graph: Graph,
    name: Option<String>,
    chromatic: usize,
    odd_girth: Option<usize>,
    aut_count: u64,
}

impl PatternGraph {
    pub fn new(graph: Graph) -> Result<Self, PatternError> {
        let n = graph.n();
        if n > AUT_LIMIT {
            return Err(PatternError::PatternTooLarge {
                n,
                limit: AUT_LIMIT,
            });
        }
        let chromatic = graph.chromatic_number();
        let odd_girth = graph.odd_girth();
        let aut_count = count_automorphisms(&graph);
        Ok(PatternGraph {
            graph,
            name: None,
            chromatic,
            odd_girth,
            aut_count,
        })
    }

    fn named(graph: Graph, name: &str) -> Self {
        let mut p = PatternGraph::new(graph).expect("registry patterns are small");
        p.name = Some(String::from(name));
        p
    }

    /// Built-in registry: K2..K8 cliques, P3..P8 paths, C3..C8 cycles,
    /// S2..S6 stars (Sk has k leaves). Case-insensitive.
    pub fn by_name(name: &str) -> Option<Self> {
        let up = name.to_ascii_uppercase();
        let (kind, num) = up.split_at(1);
        let k: usize = num.parse().ok()?;
        let graph = match kind {
            "K" if (2..=8).contains(&k) => Graph::complete(k),
            "P" if (3..=8).contains(&k) => Graph::path(k),
            "C" if (3..=8).contains(&k) => Graph::cycle(k),
            "S" if (2..=6).contains(&k) => Graph::star(k),
            _ => return None,
        };
        Some(PatternGraph::named(graph, &up))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Display name: the registry name, or a description for ad-hoc patterns.
    pub fn display_name(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => format!(
                "pattern(n={},m={})",
                self.graph.n(),
                self.graph.edge_count()
            ),
        }
    }

    pub fn chromatic_number(&self) -> usize {
        self.chromatic
    }

    pub fn odd_girth(&self) -> Option<usize> {
        self.odd_girth
    }

    pub fn is_bipartite(&self) -> bool {
        self.odd_girth.is_none()
    }

    pub fn automorphism_count(&self) -> u64 {
        self.aut_count
    }

    pub fn is_complete(&self) -> bool {
        let n = self.graph.n();
        self.graph.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Any 3-vertex pattern with exactly two edges is the 3-vertex path.
    pub fn is_path3(&self) -> bool {
        self.graph.n() == 3 && self.graph.edge_count() == 2
    }
}

fn count_automorphisms(g: &Graph) -> u64 {
    let n = g.n();
    if n == 0 {
        return 1;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    permute_count(g, &mut perm, 0, &mut count);
    count
}

fn permute_count(g: &Graph, perm: &mut Vec<usize>, at: usize, count: &mut u64) {
    let n = g.n();
    if at == n {
        *count += 1;
        return;
    }
    for i in at..n {
        perm.swap(at, i);
        // partial pruning: edges among the placed prefix must be preserved
        let v = at;
        let ok = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u], perm[v]));
        if ok {
            permute_count(g, perm, at + 1, count);
        }
        perm.swap(at, i);
    }
}
