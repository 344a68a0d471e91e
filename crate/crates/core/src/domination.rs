//! Domination primitives: private vertices, minimality, greedy removal and
//! greedy maximal independent subsets.
//!
//! The public functions validate their arguments; the `pub(crate)` helpers
//! assume valid input and are what the generators call on their hot paths.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `counts[w] = |N[w] ∩ D|` for a vertex set `D`.
#[derive(Debug, Clone)]
pub(crate) struct Coverage {
    counts: Vec<u32>,
}

impl Coverage {
    pub(crate) fn new(graph: &Graph, set: &VertexSet) -> Self {
        let mut cov = Coverage { counts: vec![0; graph.n()] };
        for v in set {
            cov.add(graph, v);
        }
        cov
    }

    pub(crate) fn add(&mut self, graph: &Graph, v: usize) {
        self.counts[v] += 1;
        for &w in graph.neighbors(v) {
            self.counts[w] += 1;
        }
    }

    pub(crate) fn remove(&mut self, graph: &Graph, v: usize) {
        self.counts[v] -= 1;
        for &w in graph.neighbors(v) {
            self.counts[w] -= 1;
        }
    }

    pub(crate) fn get(&self, w: usize) -> u32 {
        self.counts[w]
    }

    pub(crate) fn dominates_all(&self) -> bool {
        self.counts.iter().all(|&c| c > 0)
    }

    /// Whether member `v` still dominates some vertex nobody else does.
    pub(crate) fn has_private(&self, graph: &Graph, v: usize) -> bool {
        self.counts[v] == 1 || graph.neighbors(v).iter().any(|&w| self.counts[w] == 1)
    }
}

pub(crate) fn dominates(graph: &Graph, set: &VertexSet) -> bool {
    Coverage::new(graph, set).dominates_all()
}

/// `P_D[v] = N[v] \ N[D \ {v}]`, for `v ∈ D`.
pub(crate) fn privates_closed(graph: &Graph, set: &VertexSet, v: usize) -> VertexSet {
    privates_with(graph, &Coverage::new(graph, set), v, true)
}

/// `P_D(v) = N(v) ∩ P_D[v]`, for `v ∈ D`.
pub(crate) fn privates_open(graph: &Graph, set: &VertexSet, v: usize) -> VertexSet {
    privates_with(graph, &Coverage::new(graph, set), v, false)
}

pub(crate) fn privates_with(graph: &Graph, cov: &Coverage, v: usize, closed: bool) -> VertexSet {
    let mut out: Vec<usize> = graph
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| cov.get(w) == 1)
        .collect();
    if closed && cov.get(v) == 1 {
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
    }
    VertexSet::from_sorted(out)
}

pub(crate) fn minimal_dominating(graph: &Graph, set: &VertexSet) -> bool {
    let cov = Coverage::new(graph, set);
    cov.dominates_all() && set.iter().all(|v| cov.has_private(graph, v))
}

/// Removes, as long as possible, the smallest-index vertex whose removal
/// keeps the set dominating.
///
/// Removals only lower coverage counts, so a vertex that cannot be removed
/// never becomes removable later and the smallest removable vertex after a
/// removal always has a larger index. One ascending pass therefore performs
/// exactly the repeated smallest-index rule.
pub(crate) fn greedy_removal_unchecked(graph: &Graph, set: &VertexSet) -> VertexSet {
    let mut cov = Coverage::new(graph, set);
    let mut kept = Vec::with_capacity(set.len());
    for v in set {
        if cov.has_private(graph, v) {
            kept.push(v);
        } else {
            cov.remove(graph, v);
        }
    }
    VertexSet::from_sorted(kept)
}

/// Lexicographically first maximal independent subset of `G[S]`.
pub(crate) fn greedy_independent_unchecked(graph: &Graph, candidates: &VertexSet) -> VertexSet {
    let mut blocked = vec![false; graph.n()];
    let mut chosen = Vec::new();
    for v in candidates {
        if !blocked[v] {
            chosen.push(v);
            for &w in graph.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    VertexSet::from_sorted(chosen)
}

pub fn is_dominating(graph: &Graph, set: &VertexSet) -> Result<bool> {
    graph.check_set(set)?;
    Ok(dominates(graph, set))
}

/// The closed private set `P_D[v]`. The open set `P_D(v)` is this minus `v`.
pub fn private_closed(graph: &Graph, set: &VertexSet, v: usize) -> Result<VertexSet> {
    graph.check_set(set)?;
    if !set.contains(v) {
        return Err(Error::Contract(format!("vertex {v} is not a member of {set:?}")));
    }
    Ok(privates_closed(graph, set, v))
}

pub fn is_minimal_dominating(graph: &Graph, set: &VertexSet) -> Result<bool> {
    graph.check_set(set)?;
    Ok(minimal_dominating(graph, set))
}

pub fn greedy_removal(graph: &Graph, set: &VertexSet) -> Result<VertexSet> {
    graph.check_set(set)?;
    if !dominates(graph, set) {
        return Err(Error::Contract(format!("{set:?} is not a dominating set")));
    }
    Ok(greedy_removal_unchecked(graph, set))
}

pub fn greedy_max_independent(graph: &Graph, candidates: &VertexSet) -> Result<VertexSet> {
    graph.check_set(candidates)?;
    Ok(greedy_independent_unchecked(graph, candidates))
}
