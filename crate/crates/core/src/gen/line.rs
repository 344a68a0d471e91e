//! Child generator for line graphs.
//!
//! Every child of `D*` with respect to `(u, v)` adds to `(D* \ {v}) ∪ {u}`
//! exactly one new neighbor `z_i` for each private neighbor `x_i` of `v` that
//! `u` misses. The generator enumerates all admissible choices and minimizes
//! each by greedy removal. Emitted sets may include non-children, but every
//! emission induces strictly more edges than `D*`.

use super::common::{near_u, FlipSetup};
use crate::domination::greedy_removal_unchecked;
use crate::error::{Result, Unsupported};
use crate::flip::cursor::{CandidateProduct, EmptyReason, FlipCase};
use crate::flip::{ChildGenerator, FlipPair};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineFlipContext {
    pub base: VertexSet,
    pub xs: Vec<usize>,
    pub region: VertexSet,
    /// Union of the forbidden sets `R_j`.
    pub forbidden: VertexSet,
    /// Candidate list `Z_i` for each `x_i`.
    pub candidates: Vec<Vec<usize>>,
    pub case: FlipCase,
}

/// Generator for claw-free inputs; the claw check runs once, here.
#[derive(Debug, Clone, Copy)]
pub struct LineGenerator<'g> {
    graph: &'g Graph,
}

impl<'g> LineGenerator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        match graph.find_claw() {
            Some(claw) => Err(Unsupported::Claw(claw).into()),
            None => Ok(LineGenerator { graph }),
        }
    }

    pub fn context(&self, parent: &VertexSet, pair: FlipPair) -> LineFlipContext {
        build_line_context(self.graph, parent, pair)
    }
}

fn build_line_context(graph: &Graph, parent: &VertexSet, pair: FlipPair) -> LineFlipContext {
    let setup = FlipSetup::new(graph, parent, pair);
    let mut ctx = LineFlipContext {
        base: setup.base.clone(),
        xs: setup.xs.clone(),
        region: setup.region_set(),
        forbidden: VertexSet::new(),
        candidates: Vec::new(),
        case: FlipCase::Free,
    };
    if let Some(x) = setup.redundant_member(graph) {
        ctx.case = FlipCase::Empty(EmptyReason::Redundant(x));
        return ctx;
    }

    let n = graph.n();
    let FlipPair { u, v } = pair;
    let mut forbidden = vec![false; n];
    for vj in setup.rest.iter() {
        // the anchor: first neighbor inside D*, else u
        let anchor = graph
            .neighbors(vj)
            .iter()
            .copied()
            .find(|&w| setup.rest.contains(w))
            .or_else(|| graph.has_edge(vj, u).then_some(u));
        if let Some(s) = anchor {
            for &w in graph.neighbors(vj) {
                if w != s && !graph.has_edge(s, w) {
                    forbidden[w] = true;
                }
            }
        }
    }

    let mut is_x = vec![false; n];
    for &x in &setup.xs {
        is_x[x] = true;
    }
    let candidates: Vec<Vec<usize>> = setup
        .xs
        .iter()
        .map(|&x| {
            graph
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&z| {
                    z != v
                        && !graph.has_edge(v, z)
                        && !forbidden[z]
                        && setup.rest_cov.get(z) > 0
                        && !setup.rest.contains(z)
                        && graph.neighbors(z).iter().filter(|&&w| is_x[w]).count() == 1
                })
                .collect()
        })
        .collect();

    ctx.case = setup.classify(graph, &candidates);
    ctx.forbidden = VertexSet::from_mask(&forbidden);
    ctx.candidates = candidates;
    ctx
}

/// Stream of minimal dominating sets for one flip.
#[derive(Debug, Clone)]
pub struct LineChildren<'g> {
    graph: &'g Graph,
    base: VertexSet,
    product: CandidateProduct,
}

impl LineChildren<'_> {
    pub fn product(&self) -> &CandidateProduct {
        &self.product
    }
}

impl Iterator for LineChildren<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let choice = self.product.next()?;
        let widened = self.base.union(&choice.into_iter().collect());
        Some(greedy_removal_unchecked(self.graph, &widened))
    }
}

impl<'g> ChildGenerator for LineGenerator<'g> {
    type Children = LineChildren<'g>;

    fn children(&self, parent: &VertexSet, pair: FlipPair) -> LineChildren<'g> {
        let ctx = self.context(parent, pair);
        let near = near_u(self.graph, pair.u, &ctx.candidates);
        LineChildren {
            graph: self.graph,
            product: CandidateProduct::new(&ctx.case, ctx.candidates, near),
            base: ctx.base,
        }
    }
}
