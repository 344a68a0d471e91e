//! Immutable simple undirected graphs.
//!
//! Vertices are `0..n`; the numbering is the canonical order used by every
//! greedy and lexicographic step in the crate. The text formats in [`crate::io`]
//! are one-based and shift by one on the way in and out.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Length of a shortest cycle, or `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// are merged; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Ok(Graph { adj, m: twice_m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self::from_edges(n, &edges).expect("valid clique")
    }

    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid star")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().chain(std::iter::once(v)).collect()
    }

    /// Checks that every member of `set` is a vertex of this graph.
    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.max() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange { vertex: v, n: self.n() }),
            _ => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Number of edges of the subgraph induced by `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|a| self.adj[a].iter().filter(|&&b| b > a && set.contains(b)).count())
            .sum()
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.induced_edge_count(set) == 0
    }

    /// Shortest cycle length by a breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(a) = queue.pop_front() {
                // Nothing shorter can close through vertices this deep.
                if 2 * dist[a] >= best {
                    break;
                }
                for &b in &self.adj[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        parent[b] = a;
                        queue.push_back(b);
                    } else if parent[a] != b {
                        best = best.min(dist[a] + dist[b] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// An induced claw `[center, a, b, c]`, if any.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        for c in 0..self.n() {
            let nb = &self.adj[c];
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some([c, a, b, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// An induced diamond `[a, b, c, d]` where `ab` is the shared edge of its
    /// two triangles and `c`, `d` are non-adjacent.
    pub fn find_diamond(&self) -> Option<[usize; 4]> {
        for (a, b) in self.edges() {
            let common: Vec<usize> = self.adj[a]
                .iter()
                .copied()
                .filter(|&c| self.has_edge(b, c))
                .collect();
            for (i, &c) in common.iter().enumerate() {
                if let Some(&d) = common[i + 1..].iter().find(|&&d| !self.has_edge(c, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
