use crate::domination::Coverage;
use crate::flip::cursor::{EmptyReason, FlipCase};
use crate::flip::FlipPair;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Data shared by the line-graph generators for one flip `(D*, u, v)`.
pub(crate) struct FlipSetup {
    pub u: usize,
    /// `D* \ {v}`
    pub rest: VertexSet,
    /// `(D* \ {v}) ∪ {u}`
    pub base: VertexSet,
    /// `P_{D*}(v) \ N[u]`, ascending.
    pub xs: Vec<usize>,
    /// Membership mask of `U = N[u] ∪ ⋃ ((N[x_i] \ N[v]) ∪ {x_i})`.
    pub region: Vec<bool>,
    /// Domination counts of `rest`.
    pub rest_cov: Coverage,
    pub u_touches_rest: bool,
}

impl FlipSetup {
    pub fn new(graph: &Graph, parent: &VertexSet, pair: FlipPair) -> Self {
        let FlipPair { u, v } = pair;
        debug_assert!(parent.contains(v) && graph.has_edge(u, v));
        let rest = parent.without(v);
        let rest_cov = Coverage::new(graph, &rest);
        // v is isolated in G[D*], so its private neighbors are the neighbors
        // nothing else in D* reaches.
        let xs: Vec<usize> = graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| rest_cov.get(w) == 0 && w != u && !graph.has_edge(u, w))
            .collect();

        let mut region = vec![false; graph.n()];
        region[u] = true;
        for &w in graph.neighbors(u) {
            region[w] = true;
        }
        for &x in &xs {
            region[x] = true;
            for &w in graph.neighbors(x) {
                if w != v && !graph.has_edge(v, w) {
                    region[w] = true;
                }
            }
        }
        let u_touches_rest = graph.neighbors(u).iter().any(|&w| rest.contains(w));
        FlipSetup { u, base: rest.with(u), rest, xs, region, rest_cov, u_touches_rest }
    }

    pub fn region_set(&self) -> VertexSet {
        VertexSet::from_mask(&self.region)
    }

    /// A member `x` of `D* \ {v}` with `N[x] ⊆ N[D* \ {v, x}] ∪ U`.
    pub fn redundant_member(&self, graph: &Graph) -> Option<usize> {
        self.rest.iter().find(|&x| {
            std::iter::once(x)
                .chain(graph.neighbors(x).iter().copied())
                .all(|w| self.rest_cov.get(w) >= 2 || self.region[w])
        })
    }

    /// Case split once the candidate lists are known. The redundancy
    /// condition is expected to have been checked already.
    pub fn classify(&self, graph: &Graph, lists: &[Vec<usize>]) -> FlipCase {
        if let Some(i) = lists.iter().position(Vec::is_empty) {
            return FlipCase::Empty(EmptyReason::NoCandidates(i));
        }
        if self.u_touches_rest {
            return FlipCase::Free;
        }
        let near = |z: &usize| graph.has_edge(self.u, *z);
        let Some(first) = lists.iter().position(|l| l.iter().any(near)) else {
            return FlipCase::Empty(EmptyReason::Unanchored);
        };
        let last = (first..lists.len())
            .find(|&i| lists[i].iter().all(near))
            .unwrap_or(lists.len() - 1);
        FlipCase::Anchored { first, last }
    }
}

/// Per candidate, whether it is adjacent to `u`.
pub(crate) fn near_u(graph: &Graph, u: usize, lists: &[Vec<usize>]) -> Vec<Vec<bool>> {
    lists
        .iter()
        .map(|l| l.iter().map(|&z| graph.has_edge(u, z)).collect())
        .collect()
}
