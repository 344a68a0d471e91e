//! Child generator for graphs of girth at least 7.
//!
//! Each candidate is `(D* \ {v}) ∪ {u} ∪ Z`, one `z_i` per private `y_i` of
//! `v` away from `u`, minus the members of `N(u)` that lose their purpose,
//! plus one replacement per private vertex those members leave behind. Every
//! candidate is minimized by greedy removal.

use crate::domination::{greedy_removal_unchecked, privates_with, Coverage};
use crate::error::{Result, Unsupported};
use crate::flip::cursor::Odometer;
use crate::flip::{ChildGenerator, FlipPair};
use crate::graph::{Girth, Graph};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GirthCase {
    /// Some `y_i` has no neighbor besides `v`.
    Empty { slot: usize },
    /// `X2` is empty: only `X0` is dropped.
    NoReplacement,
    /// Subsets of `X2` are dropped and their privates re-dominated.
    Replacement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthFlipContext {
    /// `(D* \ {v}) ∪ {u}`
    pub base: VertexSet,
    /// `P_{D*}(v) \ N[u]`, ascending.
    pub ys: Vec<usize>,
    /// `Z_i = N(y_i) \ {v}`.
    pub z_lists: Vec<Vec<usize>>,
    /// Isolated vertices of `G[D* \ {v}]` inside `N(u)`.
    pub w_set: VertexSet,
    /// Members of `W` without private neighbors.
    pub x0: VertexSet,
    /// Members of `W` with a private leaf.
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub case: GirthCase,
}

#[derive(Debug, Clone, Copy)]
pub struct GirthGenerator<'g> {
    graph: &'g Graph,
}

impl<'g> GirthGenerator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        match graph.girth() {
            Girth::Finite(g) if g < 7 => Err(Unsupported::Girth { girth: g }.into()),
            _ => Ok(GirthGenerator { graph }),
        }
    }

    pub fn context(&self, parent: &VertexSet, pair: FlipPair) -> GirthFlipContext {
        build_girth_context(self.graph, parent, pair)
    }
}

fn build_girth_context(graph: &Graph, parent: &VertexSet, pair: FlipPair) -> GirthFlipContext {
    let FlipPair { u, v } = pair;
    debug_assert!(parent.contains(v) && graph.has_edge(u, v));
    let cov = Coverage::new(graph, parent);
    let ys: Vec<usize> = privates_with(graph, &cov, v, false)
        .iter()
        .filter(|&y| y != u && !graph.has_edge(u, y))
        .collect();
    let z_lists: Vec<Vec<usize>> = ys
        .iter()
        .map(|&y| graph.neighbors(y).iter().copied().filter(|&z| z != v).collect())
        .collect();

    let rest = parent.without(v);
    let w_set: VertexSet = graph
        .neighbors(u)
        .iter()
        .copied()
        .filter(|&x| rest.contains(x) && !graph.neighbors(x).iter().any(|&w| rest.contains(w)))
        .collect();
    let (mut x0, mut x1, mut x2) = (Vec::new(), Vec::new(), Vec::new());
    for x in w_set.iter() {
        let privates = privates_with(graph, &cov, x, false);
        if privates.is_empty() {
            x0.push(x);
        } else if privates.iter().any(|w| graph.degree(w) == 1) {
            x1.push(x);
        } else {
            x2.push(x);
        }
    }

    let case = match z_lists.iter().position(Vec::is_empty) {
        Some(slot) => GirthCase::Empty { slot },
        None if x2.is_empty() => GirthCase::NoReplacement,
        None => GirthCase::Replacement,
    };
    GirthFlipContext {
        base: rest.with(u),
        ys,
        z_lists,
        w_set,
        x0: VertexSet::from_sorted(x0),
        x1: VertexSet::from_sorted(x1),
        x2: VertexSet::from_sorted(x2),
        case,
    }
}

/// Position of a [`GirthChildren`] stream: the `Z` odometer outermost, then
/// the subset of `X2` (ascending bitmask), then the `R` odometer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthCursor {
    pub z: Odometer,
    /// One binary slot per member of `X2`, the largest member first, so the
    /// odometer counts through the bitmasks in ascending order.
    pub x: Option<Odometer>,
    pub r: Option<Odometer>,
}

/// Per chosen `Z`: `D' \ X0` and, for each member of `X2`, the replacement
/// sets of its private neighbors in `D'`.
#[derive(Debug, Clone)]
struct ZState {
    trimmed: VertexSet,
    replacements: Vec<Vec<Vec<usize>>>,
    /// Replacement lists of the current `X`, flattened.
    r_lists: Vec<Vec<usize>>,
    dropped: VertexSet,
}

#[derive(Debug, Clone)]
pub struct GirthChildren<'g> {
    graph: &'g Graph,
    ctx: GirthFlipContext,
    cursor: GirthCursor,
    state: Option<ZState>,
}

impl GirthChildren<'_> {
    pub fn context(&self) -> &GirthFlipContext {
        &self.ctx
    }

    pub fn cursor(&self) -> &GirthCursor {
        &self.cursor
    }

    fn enter_z(&mut self, digits: &[usize]) -> ZState {
        let graph = self.graph;
        let z: VertexSet = digits.iter().enumerate().map(|(i, &d)| self.ctx.z_lists[i][d]).collect();
        let dprime = self.ctx.base.union(&z);
        let cov = Coverage::new(graph, &dprime);
        let replacements: Vec<Vec<Vec<usize>>> = self
            .ctx
            .x2
            .iter()
            .map(|x| {
                privates_with(graph, &cov, x, false)
                    .iter()
                    .map(|p| graph.neighbors(p).iter().copied().filter(|&w| w != x).collect())
                    .collect()
            })
            .collect();
        if cfg!(debug_assertions) {
            let mut seen = vec![false; graph.n()];
            for w in self.ctx.z_lists.iter().flatten() {
                seen[*w] = true;
            }
            for r in replacements.iter().flatten() {
                for &w in r {
                    assert!(!seen[w], "replacement sets overlap at {w} for {:?}", self.ctx);
                }
                for &w in r {
                    seen[w] = true;
                }
            }
        }
        ZState {
            trimmed: dprime.difference(&self.ctx.x0),
            replacements,
            r_lists: Vec::new(),
            dropped: VertexSet::new(),
        }
    }

    /// Sets up the `R` product for the subset of `X2` the `x` odometer reads.
    /// Returns false when some private vertex has no replacement.
    fn enter_x(&mut self, digits: &[usize]) -> bool {
        let state = self.state.as_mut().expect("Z chosen before X");
        let p = self.ctx.x2.len();
        let mut dropped = Vec::new();
        let mut lists = Vec::new();
        for (j, x) in self.ctx.x2.iter().enumerate() {
            if digits[p - 1 - j] == 1 {
                dropped.push(x);
                lists.extend(state.replacements[j].iter().cloned());
            }
        }
        if lists.iter().any(Vec::is_empty) {
            return false;
        }
        self.cursor.r = Some(Odometer::new(lists.iter().map(Vec::len).collect()));
        state.r_lists = lists;
        state.dropped = VertexSet::from_sorted(dropped);
        true
    }
}

impl Iterator for GirthChildren<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if let GirthCase::Empty { .. } = self.ctx.case {
            return None;
        }
        loop {
            if let (Some(state), Some(r)) = (self.state.as_ref(), self.cursor.r.as_mut()) {
                if let Some(digits) = r.current() {
                    let chosen: VertexSet =
                        digits.iter().enumerate().map(|(i, &d)| state.r_lists[i][d]).collect();
                    r.advance();
                    let candidate = state.trimmed.difference(&state.dropped).union(&chosen);
                    return Some(greedy_removal_unchecked(self.graph, &candidate));
                }
                self.cursor.r = None;
            }
            if let Some(x) = self.cursor.x.as_mut() {
                if let Some(digits) = x.current() {
                    let digits = digits.to_vec();
                    x.advance();
                    self.enter_x(&digits);
                    continue;
                }
                self.cursor.x = None;
                self.state = None;
            }
            let digits = self.cursor.z.current()?.to_vec();
            self.cursor.z.advance();
            self.state = Some(self.enter_z(&digits));
            self.cursor.x = Some(Odometer::new(vec![2; self.ctx.x2.len()]));
        }
    }
}

impl<'g> ChildGenerator for GirthGenerator<'g> {
    type Children = GirthChildren<'g>;

    fn children(&self, parent: &VertexSet, pair: FlipPair) -> GirthChildren<'g> {
        let ctx = self.context(parent, pair);
        let z = Odometer::new(ctx.z_lists.iter().map(Vec::len).collect());
        GirthChildren { graph: self.graph, ctx, cursor: GirthCursor { z, x: None, r: None }, state: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::minimal_dominating;
    use crate::flip::{compute_parent, parent_pairs, Enumerator};
    use crate::oracle::brute_mds;

    fn s(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn assert_covers_children(g: &Graph, parent: &VertexSet, pair: FlipPair) {
        let gen = GirthGenerator::new(g).unwrap();
        let out: Vec<_> = gen.children(parent, pair).collect();
        for d in &out {
            assert!(minimal_dominating(g, d), "{d:?}");
        }
        for d in brute_mds(g).unwrap() {
            if parent_pairs(g, &d).contains(&pair) && compute_parent(g, &d, pair).unwrap().parent == *parent {
                assert!(out.contains(&d), "{d:?} missing from {parent:?} via {pair:?}");
            }
        }
    }

    #[test]
    fn star_has_no_children() {
        let g = Graph::star(4);
        let gen = GirthGenerator::new(&g).unwrap();
        let ctx = gen.context(&s(&[0]), FlipPair::new(1, 0));
        assert_eq!(ctx.ys, vec![2, 3, 4]);
        assert_eq!(ctx.case, GirthCase::Empty { slot: 0 });
        assert_eq!(gen.children(&s(&[0]), FlipPair::new(1, 0)).count(), 0);
    }

    #[test]
    fn claw_center_flip() {
        let g = Graph::star(3);
        let gen = GirthGenerator::new(&g).unwrap();
        let ctx = gen.context(&s(&[0]), FlipPair::new(1, 0));
        assert!(ctx.w_set.is_empty());
        assert_eq!(ctx.ys.len(), 2);
        assert_covers_children(&g, &s(&[0]), FlipPair::new(1, 0));
    }

    #[test]
    fn path_seven() {
        let g = Graph::path(7);
        // one-based D*={2,5,7}, v=2, u=1; {2,5} alone misses vertex 7
        assert!(!minimal_dominating(&g, &s(&[1, 4])));
        let parent = s(&[1, 4, 6]);
        assert!(minimal_dominating(&g, &parent));
        let gen = GirthGenerator::new(&g).unwrap();
        let ctx = gen.context(&parent, FlipPair::new(0, 1));
        assert_eq!(ctx.ys, vec![2]);
        assert_eq!(ctx.z_lists, vec![vec![3]]);
        assert_eq!(ctx.case, GirthCase::NoReplacement);
        for pair in crate::flip::flip_pairs(&g, &parent) {
            assert_covers_children(&g, &parent, pair);
        }
    }

    #[test]
    fn replacement_case_on_a_spider() {
        // three legs of length 4, 4 and 3 around the center 0
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6), (6, 7), (7, 8), (0, 9), (9, 10), (10, 11)];
        let g = Graph::from_edges(12, &edges).unwrap();
        let all = brute_mds(&g).unwrap();
        let gen = GirthGenerator::new(&g).unwrap();
        let mut hit = false;
        for parent in &all {
            for pair in crate::flip::flip_pairs(&g, parent) {
                hit |= gen.context(parent, pair).case == GirthCase::Replacement;
                assert_covers_children(&g, parent, pair);
            }
        }
        assert!(hit);
    }

    #[test]
    fn rejects_short_cycles() {
        assert!(matches!(
            GirthGenerator::new(&Graph::cycle(6)),
            Err(crate::Error::Unsupported(Unsupported::Girth { girth: 6 }))
        ));
        assert!(GirthGenerator::new(&Graph::cycle(7)).is_ok());
    }

    #[test]
    fn small_examples_match_brute_force() {
        for g in [Graph::path(7), Graph::cycle(7), Graph::cycle(9), Graph::star(4), Graph::path(2), Graph::empty(3)] {
            let gen = GirthGenerator::new(&g).unwrap();
            let mut got: Vec<_> = Enumerator::new(&g, gen).collect();
            got.sort();
            assert_eq!(got, brute_mds(&g).unwrap(), "{g:?}");
        }
    }
}
