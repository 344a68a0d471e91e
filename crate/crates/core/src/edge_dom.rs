//! Minimal edge dominating sets through the line graph.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Result, Unsupported};
use crate::flip::{DelayStats, Enumerator};
use crate::gen::{BipartiteLineGenerator, LineGenerator};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A root graph, its line graph, and the bijection between root edges and
/// line-graph vertices. Line-graph vertex `i` is the `i`-th root edge in
/// `(min, max)` order.
#[derive(Debug, Clone)]
pub struct LineGraphMap {
    pub root: Graph,
    pub line: Graph,
    pub edge_of_vertex: Vec<(usize, usize)>,
    pub vertex_of_edge: BTreeMap<(usize, usize), usize>,
}

impl LineGraphMap {
    pub fn edges_of(&self, set: &VertexSet) -> Vec<(usize, usize)> {
        set.iter().map(|i| self.edge_of_vertex[i]).collect()
    }

    /// Line-graph vertices of a set of root edges; endpoints may come in
    /// either order. `None` if some pair is not an edge of the root.
    pub fn vertices_of(&self, edges: &[(usize, usize)]) -> Option<VertexSet> {
        edges
            .iter()
            .map(|&(a, b)| self.vertex_of_edge.get(&(a.min(b), a.max(b))).copied())
            .collect()
    }
}

pub fn line_graph(root: &Graph) -> Result<LineGraphMap> {
    let edge_of_vertex: Vec<(usize, usize)> = root.edges().collect();
    if edge_of_vertex.is_empty() {
        return Err(Unsupported::Edgeless.into());
    }
    let vertex_of_edge: BTreeMap<(usize, usize), usize> =
        edge_of_vertex.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // edges meeting at each root vertex, as line-graph vertices
    let mut at = vec![Vec::new(); root.n()];
    for (i, &(a, b)) in edge_of_vertex.iter().enumerate() {
        at[a].push(i);
        at[b].push(i);
    }
    let mut pairs = Vec::new();
    for group in &at {
        for (k, &e) in group.iter().enumerate() {
            pairs.extend(group[k + 1..].iter().map(|&f| (e, f)));
        }
    }
    let line = Graph::from_edges(edge_of_vertex.len(), &pairs)?;
    Ok(LineGraphMap { root: root.clone(), line, edge_of_vertex, vertex_of_edge })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `side[v]` is 0 or 1 and every edge joins the two sides.
    Coloring(Vec<u8>),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// BFS 2-coloring, component by component.
pub fn is_bipartite(graph: &Graph) -> Bipartition {
    let n = graph.n();
    let mut side: Vec<Option<u8>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            for &b in graph.neighbors(a) {
                match side[b] {
                    None => {
                        side[b] = Some(1 - side[a].unwrap());
                        parent[b] = a;
                        depth[b] = depth[a] + 1;
                        queue.push_back(b);
                    }
                    Some(s) if Some(s) == side[a] => {
                        return Bipartition::OddCycle(odd_cycle(&parent, &depth, a, b));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartition::Coloring(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Closes the BFS tree paths from `a` and `b` to their common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let (mut left, mut right) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// Which generator an edge-domination run uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdsRoute {
    Bipartite,
    General,
}

enum Inner<'g> {
    Bipartite(Enumerator<'g, BipartiteLineGenerator<'g>>),
    General(Enumerator<'g, LineGenerator<'g>>),
}

/// Streams the minimal edge dominating sets of `map.root`, each as an edge
/// list in `(min, max)` order.
pub struct EdsEnumerator<'g> {
    map: &'g LineGraphMap,
    inner: Inner<'g>,
}

impl<'g> EdsEnumerator<'g> {
    pub fn route(&self) -> EdsRoute {
        match self.inner {
            Inner::Bipartite(_) => EdsRoute::Bipartite,
            Inner::General(_) => EdsRoute::General,
        }
    }

    pub fn stats(&self) -> &DelayStats {
        match &self.inner {
            Inner::Bipartite(e) => e.stats(),
            Inner::General(e) => e.stats(),
        }
    }
}

impl Iterator for EdsEnumerator<'_> {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        let set = match &mut self.inner {
            Inner::Bipartite(e) => e.next(),
            Inner::General(e) => e.next(),
        }?;
        Some(self.map.edges_of(&set))
    }
}

/// Uses the bipartite generator when the root is bipartite, unless
/// `force_general` is set.
pub fn enumerate_min_eds(map: &LineGraphMap, force_general: bool) -> Result<EdsEnumerator<'_>> {
    let inner = if !force_general && is_bipartite(&map.root).is_bipartite() {
        Inner::Bipartite(Enumerator::new(&map.line, BipartiteLineGenerator::new(&map.line)?))
    } else {
        Inner::General(Enumerator::new(&map.line, LineGenerator::new(&map.line)?))
    };
    Ok(EdsEnumerator { map, inner })
}
