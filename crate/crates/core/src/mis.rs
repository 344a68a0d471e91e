//! Maximal independent sets in lexicographic order.
//!
//! Queue-based successor scheme: a set `S` popped from the queue spawns, for
//! every `j ∉ S` that has a smaller neighbor in `S`, the candidate obtained by
//! keeping `S ∩ {0..j-1}` minus the neighbors of `j`, adding `j`, and
//! completing greedily, provided the kept part plus `j` is already maximal
//! among the vertices `0..=j`. Every candidate is lexicographically larger
//! than `S`, so popping the minimum yields a strictly increasing stream.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// First maximal independent set in lexicographic order: the greedy one.
pub fn first_mis(graph: &Graph) -> VertexSet {
    complete_greedily(graph, Vec::new(), 0, &mut 0)
}

/// Streams every maximal independent set once, in increasing order.
///
/// The enumerator is its own cursor: cloning it snapshots the position and
/// the clone resumes from there independently.
#[derive(Debug, Clone)]
pub struct MisEnumerator<'g> {
    graph: &'g Graph,
    queue: BTreeSet<VertexSet>,
    emitted: usize,
    work: u64,
}

impl<'g> MisEnumerator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let mut queue = BTreeSet::new();
        queue.insert(first_mis(graph));
        MisEnumerator { graph, queue, emitted: 0, work: 0 }
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Elementary steps spent so far: vertex and adjacency visits, plus
    /// `n · ⌈log2(|queue|+1)⌉` per queue insertion.
    pub fn work(&self) -> u64 {
        self.work
    }

    pub fn pending(&self) -> usize {
        self.queue.len()
    }

    fn successors(&mut self, current: &VertexSet) {
        let graph = self.graph;
        let n = graph.n();
        let member = current.mask(n);
        let mut work = n as u64;
        for j in 0..n {
            if member[j] {
                continue;
            }
            let nb = graph.neighbors(j);
            work += nb.len() as u64 + 1;
            if !nb.iter().any(|&w| w < j && member[w]) {
                continue;
            }
            // kept = (S ∩ {0..j-1}) \ N(j), then j
            let mut kept: Vec<usize> = current
                .iter()
                .take_while(|&w| w < j)
                .filter(|&w| !graph.has_edge(j, w))
                .collect();
            work += kept.len() as u64 + nb.len() as u64;
            kept.push(j);
            if !maximal_below(graph, &kept, j, &mut work) {
                continue;
            }
            let candidate = complete_greedily(graph, kept, j + 1, &mut work);
            work += (n as u64) * (usize::BITS - self.queue.len().leading_zeros()) as u64;
            self.queue.insert(candidate);
        }
        self.work += work;
    }
}

impl Iterator for MisEnumerator<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.queue.pop_first()?;
        self.successors(&current);
        self.emitted += 1;
        Some(current)
    }
}

/// Whether the independent set `kept` (all `≤ j`) dominates every vertex `≤ j`.
fn maximal_below(graph: &Graph, kept: &[usize], j: usize, work: &mut u64) -> bool {
    let mut covered = vec![false; j + 1];
    for &a in kept {
        covered[a] = true;
        for &b in graph.neighbors(a) {
            if b <= j {
                covered[b] = true;
            }
        }
        *work += graph.degree(a) as u64 + 1;
    }
    *work += j as u64 + 1;
    covered.into_iter().all(|c| c)
}

/// Extends the independent set `kept` with every vertex `≥ from`, in order,
/// that has no neighbor chosen so far.
fn complete_greedily(graph: &Graph, mut kept: Vec<usize>, from: usize, work: &mut u64) -> VertexSet {
    let n = graph.n();
    let mut blocked = vec![false; n];
    for &a in &kept {
        for &b in graph.neighbors(a) {
            blocked[b] = true;
        }
        *work += graph.degree(a) as u64;
    }
    for v in from..n {
        *work += 1;
        if !blocked[v] {
            kept.push(v);
            for &b in graph.neighbors(v) {
                blocked[b] = true;
            }
            *work += graph.degree(v) as u64;
        }
    }
    VertexSet::from_sorted(kept)
}
