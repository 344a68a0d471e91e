use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use super::{flip_pairs, ChildGenerator, FlipPair};
use crate::domination::minimal_dominating;
use crate::graph::Graph;
use crate::mis::MisEnumerator;
use crate::vertex_set::VertexSet;

/// Counters collected while enumerating.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DelayStats {
    pub emitted: usize,
    /// Sets produced by the seed layer and the generator, repeats included.
    pub generated: usize,
    pub duplicates: usize,
    /// Largest number of set records on the stack (the root excluded).
    pub max_stack_depth: usize,
    pub ledger_size: usize,
    /// Longest time spent inside one call that produced a set.
    pub max_delay: Duration,
    /// Time spent inside the enumerator, summed over all calls.
    pub total_delay: Duration,
}

impl DelayStats {
    pub fn mean_delay(&self) -> Duration {
        if self.emitted == 0 {
            Duration::ZERO
        } else {
            self.total_delay / self.emitted as u32
        }
    }
}

struct Record<C> {
    set: VertexSet,
    pairs: Vec<FlipPair>,
    next_pair: usize,
    children: Option<C>,
}

/// Depth-first search over the parent/child relation, rooted at the
/// maximal independent sets.
///
/// Each set is yielded the moment it enters the ledger. A generator that
/// hands back a set which is not a minimal dominating set is a bug; the
/// enumerator panics with the offending set rather than filter it.
pub struct Enumerator<'g, G: ChildGenerator> {
    graph: &'g Graph,
    generator: G,
    roots: MisEnumerator<'g>,
    ledger: BTreeSet<VertexSet>,
    stack: Vec<Record<G::Children>>,
    stats: DelayStats,
}

impl<'g, G: ChildGenerator> Enumerator<'g, G> {
    pub fn new(graph: &'g Graph, generator: G) -> Self {
        Enumerator {
            graph,
            generator,
            roots: MisEnumerator::new(graph),
            ledger: BTreeSet::new(),
            stack: Vec::new(),
            stats: DelayStats::default(),
        }
    }

    pub fn stats(&self) -> &DelayStats {
        &self.stats
    }

    pub fn ledger(&self) -> &BTreeSet<VertexSet> {
        &self.ledger
    }

    pub fn stack_depth(&self) -> usize {
        self.stack.len()
    }

    /// Next candidate from the top of the stack, or `None` when the search
    /// is over.
    fn next_candidate(&mut self) -> Option<VertexSet> {
        loop {
            let Some(top) = self.stack.last_mut() else {
                return self.roots.next();
            };
            if let Some(children) = top.children.as_mut() {
                if let Some(set) = children.next() {
                    return Some(set);
                }
                top.children = None;
            }
            if top.next_pair < top.pairs.len() {
                let pair = top.pairs[top.next_pair];
                top.next_pair += 1;
                top.children = Some(self.generator.children(&top.set, pair));
            } else {
                self.stack.pop();
            }
        }
    }
}

impl<G: ChildGenerator> Iterator for Enumerator<'_, G> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let started = Instant::now();
        loop {
            let Some(set) = self.next_candidate() else {
                self.stats.total_delay += started.elapsed();
                return None;
            };
            self.stats.generated += 1;
            assert!(
                minimal_dominating(self.graph, &set),
                "generator produced {set:?}, which is not a minimal dominating set of {:?}",
                self.graph
            );
            if self.ledger.contains(&set) {
                self.stats.duplicates += 1;
                continue;
            }
            self.ledger.insert(set.clone());
            let pairs = flip_pairs(self.graph, &set);
            self.stack.push(Record { set: set.clone(), pairs, next_pair: 0, children: None });

            let now = Instant::now();
            self.stats.emitted += 1;
            self.stats.ledger_size = self.ledger.len();
            self.stats.max_stack_depth = self.stats.max_stack_depth.max(self.stack.len());
            self.stats.max_delay = self.stats.max_delay.max(now - started);
            self.stats.total_delay += now - started;
            return Some(set);
        }
    }
}
