//! Brute-force reference enumerations for small instances.
//!
//! Subsets are scanned in Gray-code order so each step toggles a single
//! element and the domination counters are updated incrementally. The code
//! deliberately shares nothing with the enumerators beyond the graph type.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const MAX_ORACLE_VERTICES: usize = 24;
pub const MAX_ORACLE_EDGES: usize = 20;

/// Calls `visit(toggled, member)` for every subset of `0..size`, each exactly
/// once; `toggled` is the element that changed since the previous call.
fn gray_scan(size: usize, mut visit: impl FnMut(Option<usize>, &[bool])) {
    let mut member = vec![false; size];
    visit(None, &member);
    for step in 1u64..(1u64 << size) {
        let bit = step.trailing_zeros() as usize;
        member[bit] = !member[bit];
        visit(Some(bit), &member);
    }
}

fn mask_to_set(member: &[bool]) -> VertexSet {
    member.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Scans vertex subsets keeping `count[w] = |N[w] ∩ S|` and the number of
/// undominated vertices, and collects the dominating ones accepted by `keep`.
fn scan_vertex_subsets(
    graph: &Graph,
    keep: impl Fn(&Graph, &[bool], &[u32]) -> bool,
) -> Result<Vec<VertexSet>> {
    let n = graph.n();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::OracleCap { size: n, cap: MAX_ORACLE_VERTICES });
    }
    let mut count = vec![0u32; n];
    let mut undominated = n;
    let mut found = Vec::new();
    gray_scan(n, |toggled, member| {
        if let Some(v) = toggled {
            for w in std::iter::once(v).chain(graph.neighbors(v).iter().copied()) {
                if member[v] {
                    if count[w] == 0 {
                        undominated -= 1;
                    }
                    count[w] += 1;
                } else {
                    count[w] -= 1;
                    if count[w] == 0 {
                        undominated += 1;
                    }
                }
            }
        }
        if undominated == 0 && keep(graph, member, &count) {
            found.push(mask_to_set(member));
        }
    });
    found.sort();
    Ok(found)
}

/// Every minimal dominating set, sorted.
pub fn brute_mds(graph: &Graph) -> Result<Vec<VertexSet>> {
    scan_vertex_subsets(graph, |g, member, count| {
        (0..g.n()).filter(|&v| member[v]).all(|v| {
            count[v] == 1 || g.neighbors(v).iter().any(|&w| count[w] == 1)
        })
    })
}

/// Every maximal independent set, sorted. These are exactly the dominating
/// independent sets.
pub fn brute_mis(graph: &Graph) -> Result<Vec<VertexSet>> {
    scan_vertex_subsets(graph, |g, member, _| {
        (0..g.n()).filter(|&v| member[v]).all(|v| g.neighbors(v).iter().all(|&w| !member[w]))
    })
}

/// Every minimal edge dominating set, as edge lists sorted by `(min, max)`;
/// the list of sets is sorted lexicographically.
pub fn brute_eds(root: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    let edges: Vec<(usize, usize)> = root.edges().collect();
    let m = edges.len();
    if m > MAX_ORACLE_EDGES {
        return Err(Error::OracleCap { size: m, cap: MAX_ORACLE_EDGES });
    }
    // incident[x] = number of chosen edges at x
    let mut incident = vec![0u32; root.n()];
    let touches = |e: (usize, usize), f: (usize, usize)| e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
    let mut found = Vec::new();
    gray_scan(m, |toggled, member| {
        if let Some(i) = toggled {
            let (a, b) = edges[i];
            if member[i] {
                incident[a] += 1;
                incident[b] += 1;
            } else {
                incident[a] -= 1;
                incident[b] -= 1;
            }
        }
        if !edges.iter().all(|&(a, b)| incident[a] > 0 || incident[b] > 0) {
            return;
        }
        let chosen: Vec<(usize, usize)> =
            edges.iter().zip(member).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
        let minimal = chosen.iter().all(|&f| {
            edges.iter().any(|&e| touches(e, f) && chosen.iter().filter(|&&g| touches(e, g)).count() == 1)
        });
        if minimal {
            found.push(chosen);
        }
    });
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<VertexSet> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn mds_examples() {
        assert_eq!(brute_mds(&Graph::path(3)).unwrap(), sets(&[&[0, 2], &[1]]));
        assert_eq!(brute_mds(&Graph::complete(3)).unwrap(), sets(&[&[0], &[1], &[2]]));
        assert_eq!(
            brute_mds(&Graph::cycle(4)).unwrap(),
            sets(&[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]])
        );
        assert_eq!(brute_mds(&Graph::empty(0)).unwrap(), sets(&[&[]]));
    }

    #[test]
    fn mis_examples() {
        assert_eq!(brute_mis(&Graph::path(3)).unwrap(), sets(&[&[0, 2], &[1]]));
        assert_eq!(brute_mis(&Graph::cycle(4)).unwrap(), sets(&[&[0, 2], &[1, 3]]));
        assert_eq!(brute_mis(&Graph::path(2)).unwrap(), sets(&[&[0], &[1]]));
    }

    #[test]
    fn eds_examples() {
        assert_eq!(brute_eds(&Graph::path(4)).unwrap(), vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]);
        assert_eq!(brute_eds(&Graph::complete(3)).unwrap(), vec![vec![(0, 1)], vec![(0, 2)], vec![(1, 2)]]);
        assert_eq!(brute_eds(&Graph::path(2)).unwrap(), vec![vec![(0, 1)]]);
    }

    #[test]
    fn mis_are_the_independent_mds() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (1, 5)]).unwrap();
        let mis = brute_mis(&g).unwrap();
        let independent: Vec<_> =
            brute_mds(&g).unwrap().into_iter().filter(|d| g.is_independent(d)).collect();
        assert_eq!(mis, independent);
    }

    #[test]
    fn caps() {
        assert!(matches!(brute_mds(&Graph::empty(25)), Err(Error::OracleCap { size: 25, cap: 24 })));
        assert!(matches!(brute_eds(&Graph::complete(7)), Err(Error::OracleCap { size: 21, cap: 20 })));
    }
}
