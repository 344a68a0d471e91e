//! The flipping framework.
//!
//! A minimal dominating set `D` whose induced subgraph has an edge at `u`
//! has, for every private neighbor `v` of `u`, a unique parent `D*` in which
//! `v` is isolated and fewer edges are induced. Flipping `v` back to `u`
//! recovers the children of a set; [`Enumerator`] walks this relation
//! depth-first from the maximal independent sets.

pub mod cursor;
mod driver;

pub use cursor::{GeneratorCursor, Odometer};
pub use driver::{DelayStats, Enumerator};

use crate::domination::{
    greedy_independent_unchecked, greedy_removal_unchecked, minimal_dominating, privates_open,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Replace the isolated vertex `v` of a parent by its neighbor `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlipPair {
    pub u: usize,
    pub v: usize,
}

impl FlipPair {
    pub fn new(u: usize, v: usize) -> Self {
        FlipPair { u, v }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParentResult {
    /// `D* = ((D \ {u}) ∪ X ∪ {v}) \ Z`
    pub parent: VertexSet,
    /// Greedy maximal independent subset of `P_D(u) \ N[v]`.
    pub x_set: VertexSet,
    /// Vertices dropped by greedy removal.
    pub z_set: VertexSet,
}

/// Graph classes with extra structure the parent construction must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    General,
    /// Line graphs, including line graphs of bipartite graphs: `X` is empty.
    Line,
    /// Girth at least 7: `X = P_D(u) \ {v}`.
    LargeGirth,
}

/// A source of candidate children for the driver.
///
/// For a minimal dominating set `parent`, an isolated vertex `pair.v` of the
/// induced subgraph and a neighbor `pair.u`, the stream must yield minimal
/// dominating sets and must include every child of `parent` with respect to
/// flipping `u` and `v`. Extra sets and repeats are allowed; the driver drops
/// anything it has already emitted.
pub trait ChildGenerator {
    type Children: Iterator<Item = VertexSet>;

    fn children(&self, parent: &VertexSet, pair: FlipPair) -> Self::Children;
}

/// Computes the parent of `set` with respect to flipping `pair.u` and `pair.v`.
pub fn compute_parent(graph: &Graph, set: &VertexSet, pair: FlipPair) -> Result<ParentResult> {
    let FlipPair { u, v } = pair;
    graph.check_set(set)?;
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    if !minimal_dominating(graph, set) {
        return Err(Error::Contract(format!("{set:?} is not a minimal dominating set")));
    }
    if !set.contains(u) || !graph.neighbors(u).iter().any(|&w| set.contains(w)) {
        return Err(Error::Contract(format!(
            "vertex {u} must be a member of {set:?} with a neighbor inside it"
        )));
    }
    let private_u = privates_open(graph, set, u);
    if !private_u.contains(v) {
        return Err(Error::Contract(format!("vertex {v} is not a private neighbor of {u}")));
    }
    Ok(parent_unchecked(graph, set, &private_u, pair))
}

fn parent_unchecked(
    graph: &Graph,
    set: &VertexSet,
    private_u: &VertexSet,
    pair: FlipPair,
) -> ParentResult {
    let FlipPair { u, v } = pair;
    let closed_v = graph.closed_neighborhood(v);
    let x_set = greedy_independent_unchecked(graph, &private_u.difference(&closed_v));
    let widened = set.without(u).union(&x_set).with(v);
    let parent = greedy_removal_unchecked(graph, &widened);
    let z_set = widened.difference(&parent);
    ParentResult { parent, x_set, z_set }
}

/// [`compute_parent`] plus the structural guarantee `class` provides for `X`.
pub fn compute_parent_in(
    graph: &Graph,
    set: &VertexSet,
    pair: FlipPair,
    class: GraphClass,
) -> Result<ParentResult> {
    let result = compute_parent(graph, set, pair)?;
    match class {
        GraphClass::General => {}
        GraphClass::Line => {
            if !result.x_set.is_empty() {
                return Err(Error::Invariant(format!(
                    "line graph parent of {set:?} via {pair:?} has X = {:?}",
                    result.x_set
                )));
            }
        }
        GraphClass::LargeGirth => {
            let expected = privates_open(graph, set, pair.u).without(pair.v);
            if result.x_set != expected {
                return Err(Error::Invariant(format!(
                    "girth >= 7 parent of {set:?} via {pair:?} has X = {:?}, expected {expected:?}",
                    result.x_set
                )));
            }
        }
    }
    Ok(result)
}

/// Every `(u, v)` with `v` isolated in `G[D*]` and `u ∈ N(v)`, ascending by
/// `v` and then by `u`.
pub fn flip_pairs(graph: &Graph, parent: &VertexSet) -> Vec<FlipPair> {
    let mut pairs = Vec::new();
    for v in parent {
        let nb = graph.neighbors(v);
        if nb.iter().any(|&w| parent.contains(w)) {
            continue;
        }
        pairs.extend(nb.iter().map(|&u| FlipPair { u, v }));
    }
    pairs
}

/// Every valid flip of a minimal dominating set: `u ∈ D` with a neighbor in
/// `D`, and `v ∈ P_D(u)`. These are the pairs for which `D` has a parent.
pub fn parent_pairs(graph: &Graph, set: &VertexSet) -> Vec<FlipPair> {
    let mut pairs = Vec::new();
    for u in set {
        if !graph.neighbors(u).iter().any(|&w| set.contains(w)) {
            continue;
        }
        pairs.extend(privates_open(graph, set, u).iter().map(|v| FlipPair { u, v }));
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn parent_examples_on_c4() {
        let c4 = Graph::cycle(4);
        // one-based: D={1,2}, u=1, v=4
        let r = compute_parent(&c4, &s(&[0, 1]), FlipPair::new(0, 3)).unwrap();
        assert_eq!(r.parent, s(&[1, 3]));
        assert!(r.x_set.is_empty() && r.z_set.is_empty());
        // one-based: D={2,3}, u=2, v=1
        let r = compute_parent(&c4, &s(&[1, 2]), FlipPair::new(1, 0)).unwrap();
        assert_eq!(r.parent, s(&[0, 2]));
        assert!(r.x_set.is_empty() && r.z_set.is_empty());
    }

    #[test]
    fn parent_rejects_edgeless_sets() {
        let c4 = Graph::cycle(4);
        for pair in [FlipPair::new(0, 1), FlipPair::new(0, 3), FlipPair::new(2, 1)] {
            assert!(matches!(
                compute_parent(&c4, &s(&[0, 2]), pair),
                Err(Error::Contract(_))
            ));
        }
        // not minimal
        assert!(matches!(
            compute_parent(&c4, &s(&[0, 1, 2]), FlipPair::new(0, 3)),
            Err(Error::Contract(_))
        ));
        // v not private for u
        assert!(matches!(
            compute_parent(&c4, &s(&[0, 1]), FlipPair::new(0, 1)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn parent_properties_on_a_dense_example() {
        // P6 with the chord 1-4, every minimal dominating set and every flip
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        for mask in 0u32..64 {
            let d = VertexSet::from_mask(&(0..6).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>());
            if !minimal_dominating(&g, &d) {
                continue;
            }
            for pair in parent_pairs(&g, &d) {
                let r = compute_parent(&g, &d, pair).unwrap();
                assert!(minimal_dominating(&g, &r.parent));
                assert!(r.x_set.with(pair.v).is_subset(&r.parent));
                assert!(g.induced_edge_count(&r.parent) < g.induced_edge_count(&d));
                assert!(flip_pairs(&g, &r.parent).contains(&pair));
                assert_eq!(r, compute_parent(&g, &d, pair).unwrap());
            }
        }
    }

    #[test]
    fn flip_pair_examples() {
        let c4 = Graph::cycle(4);
        // one-based D*={2,4}: v=2 with u in {1,3}, then v=4 with u in {1,3}
        assert_eq!(
            flip_pairs(&c4, &s(&[1, 3])),
            vec![FlipPair::new(0, 1), FlipPair::new(2, 1), FlipPair::new(0, 3), FlipPair::new(2, 3)]
        );
        assert_eq!(
            flip_pairs(&Graph::path(3), &s(&[1])),
            vec![FlipPair::new(0, 1), FlipPair::new(2, 1)]
        );
        assert!(flip_pairs(&c4, &s(&[0, 1])).is_empty());
    }
}
