//! Child generator for line graphs of bipartite graphs.
//!
//! Same product structure as the line-graph generator, but the candidate
//! lists are pruned with two families of forbidden sets so that every choice
//! is already a minimal dominating set and a genuine child of `D*`. No
//! greedy removal is needed and nothing is emitted twice.

use super::common::{near_u, FlipSetup};
use crate::domination::{privates_with, Coverage};
use crate::error::{Result, Unsupported};
use crate::flip::cursor::{CandidateProduct, EmptyReason, FlipCase};
use crate::flip::{ChildGenerator, FlipPair};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipFlipContext {
    pub base: VertexSet,
    pub xs: Vec<usize>,
    pub region: VertexSet,
    /// `(v_j, R_j)` for members of `D* \ {v}` with a non-empty `R_j`.
    pub minimality_guards: Vec<(usize, VertexSet)>,
    /// `(v_j, S_j)` for members of `D* \ {v}` with a non-empty `S_j`.
    pub parentage_guards: Vec<(usize, VertexSet)>,
    pub candidates: Vec<Vec<usize>>,
    pub case: FlipCase,
}

/// Generator for line graphs of bipartite graphs. Construction checks the
/// claw-free and diamond-free guards; full recognition is not attempted.
#[derive(Debug, Clone, Copy)]
pub struct BipartiteLineGenerator<'g> {
    graph: &'g Graph,
}

impl<'g> BipartiteLineGenerator<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if let Some(claw) = graph.find_claw() {
            return Err(Unsupported::Claw(claw).into());
        }
        if let Some(diamond) = graph.find_diamond() {
            return Err(Unsupported::Diamond(diamond).into());
        }
        Ok(BipartiteLineGenerator { graph })
    }

    pub fn context(&self, parent: &VertexSet, pair: FlipPair) -> BipFlipContext {
        build_bip_context(self.graph, parent, pair)
    }
}

/// Splits `N(x)` into its (at most two) cliques: the clique of the smallest
/// neighbor and everything else.
fn neighborhood_cliques(graph: &Graph, x: usize) -> (VertexSet, VertexSet) {
    let nb = graph.neighbors(x);
    let Some(&first) = nb.first() else {
        return (VertexSet::new(), VertexSet::new());
    };
    let (a, b): (Vec<usize>, Vec<usize>) =
        nb.iter().partition(|&&w| w == first || graph.has_edge(first, w));
    (VertexSet::from_sorted(a), VertexSet::from_sorted(b))
}

fn build_bip_context(graph: &Graph, parent: &VertexSet, pair: FlipPair) -> BipFlipContext {
    let setup = FlipSetup::new(graph, parent, pair);
    let FlipPair { u, v } = pair;
    let mut ctx = BipFlipContext {
        base: setup.base.clone(),
        xs: setup.xs.clone(),
        region: setup.region_set(),
        minimality_guards: Vec::new(),
        parentage_guards: Vec::new(),
        candidates: Vec::new(),
        case: FlipCase::Free,
    };
    if let Some(x) = setup.redundant_member(graph) {
        ctx.case = FlipCase::Empty(EmptyReason::Redundant(x));
        return ctx;
    }

    let n = graph.n();
    let region = &setup.region;
    let parent_cov = Coverage::new(graph, parent);
    // N(v) \ N[u]
    let beside_v = |w: usize| w != u && graph.has_edge(v, w) && !graph.has_edge(u, w);
    let mut blocked = vec![false; n];

    for vj in setup.rest.iter() {
        let private_closed = privates_with(graph, &parent_cov, vj, true);
        let outside: VertexSet = private_closed.iter().filter(|&w| !region[w]).collect();
        let shared: Vec<usize> = graph.neighbors(vj).iter().copied().filter(|&w| beside_v(w)).collect();

        let guard = if outside.as_slice() == [vj] {
            shared.is_empty().then(|| VertexSet::from_sorted(graph.neighbors(vj).to_vec()))
        } else if shared.iter().all(|&x| setup.rest_cov.get(x) >= 2) {
            let target = outside.without(vj);
            let (first, second) = neighborhood_cliques(graph, vj);
            match (target.is_subset(&first), target.is_subset(&second)) {
                (true, _) => Some(first),
                (false, true) => Some(second),
                (false, false) => None,
            }
        } else {
            None
        };
        if let Some(r) = guard.filter(|r| !r.is_empty()) {
            for w in r.iter() {
                blocked[w] = true;
            }
            ctx.minimality_guards.push((vj, r));
        }

        let anchors_alone = shared.iter().any(|&x| {
            setup.rest_cov.get(x) == 1
                && private_closed
                    .iter()
                    .all(|w| w == vj || !graph.has_edge(x, w) || region[w])
        });
        if anchors_alone {
            let later: VertexSet = graph.neighbors(vj).iter().copied().filter(|&w| w > vj).collect();
            if !later.is_empty() {
                for w in later.iter() {
                    blocked[w] = true;
                }
                ctx.parentage_guards.push((vj, later));
            }
        }
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
                    z != v && !graph.has_edge(v, z) && setup.rest_cov.get(z) > 0 && !blocked[z]
                })
                .collect()
        })
        .collect();
    ctx.case = setup.classify(graph, &candidates);
    ctx.candidates = candidates;
    ctx
}

/// Stream of children for one flip.
#[derive(Debug, Clone)]
pub struct BipChildren {
    base: VertexSet,
    product: CandidateProduct,
}

impl BipChildren {
    pub fn product(&self) -> &CandidateProduct {
        &self.product
    }
}

impl Iterator for BipChildren {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let choice = self.product.next()?;
        Some(self.base.union(&choice.into_iter().collect()))
    }
}

impl ChildGenerator for BipartiteLineGenerator<'_> {
    type Children = BipChildren;

    fn children(&self, parent: &VertexSet, pair: FlipPair) -> BipChildren {
        let ctx = self.context(parent, pair);
        let near = near_u(self.graph, pair.u, &ctx.candidates);
        BipChildren {
            product: CandidateProduct::new(&ctx.case, ctx.candidates, near),
            base: ctx.base,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flip::{compute_parent, parent_pairs, Enumerator};
    use crate::oracle::brute_mds;

    fn s(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_contexts() {
        // L(P4) = P3
        let p3 = Graph::path(3);
        let gen = BipartiteLineGenerator::new(&p3).unwrap();
        // one-based D*={2}, u=1, v=2: vertex 3 needs a dominator other than v
        let ctx = gen.context(&s(&[1]), FlipPair::new(0, 1));
        assert_eq!(ctx.case, FlipCase::Empty(EmptyReason::NoCandidates(0)));
        // one-based D*={1,3}, u=2, v=1: {2,3} is not minimal, vertex 3 is
        // redundant next to u
        let ctx = gen.context(&s(&[0, 2]), FlipPair::new(1, 0));
        assert!(ctx.xs.is_empty());
        assert_eq!(ctx.case, FlipCase::Empty(EmptyReason::Redundant(2)));
        assert_eq!(gen.children(&s(&[0, 2]), FlipPair::new(1, 0)).count(), 0);

        let k2 = Graph::path(2);
        let gen = BipartiteLineGenerator::new(&k2).unwrap();
        let ctx = gen.context(&s(&[0]), FlipPair::new(1, 0));
        assert!(ctx.xs.is_empty());
        assert_eq!(ctx.case, FlipCase::Empty(EmptyReason::Unanchored));
    }

    #[test]
    fn rejects_diamonds_and_claws() {
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            BipartiteLineGenerator::new(&diamond),
            Err(crate::Error::Unsupported(Unsupported::Diamond(_)))
        ));
        assert!(matches!(
            BipartiteLineGenerator::new(&Graph::star(3)),
            Err(crate::Error::Unsupported(Unsupported::Claw(_)))
        ));
    }

    #[test]
    fn c6_children_are_exact() {
        // C6 is the line graph of C6
        let g = Graph::cycle(6);
        let gen = BipartiteLineGenerator::new(&g).unwrap();
        let all = brute_mds(&g).unwrap();
        // one-based D*={1,4}, v=1, u=2
        let parent = s(&[0, 3]);
        let pair = FlipPair::new(1, 0);
        let mut expected: Vec<VertexSet> = all
            .iter()
            .filter(|d| {
                parent_pairs(&g, d).contains(&pair)
                    && compute_parent(&g, d, pair).unwrap().parent == parent
            })
            .cloned()
            .collect();
        expected.sort();
        let mut got: Vec<_> = gen.children(&parent, pair).collect();
        got.sort();
        assert_eq!(got, expected);

        let mut listed: Vec<_> = Enumerator::new(&g, gen).collect();
        listed.sort();
        assert_eq!(listed, all);
    }
}
