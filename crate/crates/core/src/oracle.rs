//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions by exhaustive
//! enumeration and only touches a graph through its labels and `has_edge`.
//! These are exponential and meant for small instances: the test suites
//! and `selftest` compare the fast paths against them.

use std::collections::BTreeSet;

use crate::complex::SimplicialComplex;
use crate::graph::{Graph, Vertex, VertexSet};

fn subsets(labels: &[Vertex]) -> impl Iterator<Item = VertexSet> + '_ {
    assert!(labels.len() < 25, "too many vertices for brute force");
    (0u32..1 << labels.len()).map(move |mask| {
        labels
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v)))
}

fn clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter()
        .all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
}

fn maximal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    let all = sets.clone();
    sets.retain(|s| !all.iter().any(|t| t.len() > s.len() && s.is_subset(t)));
    sets.sort();
    sets
}

fn minimal(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    let all = sets.clone();
    sets.retain(|s| !all.iter().any(|t| t.len() < s.len() && t.is_subset(s)));
    sets.sort();
    sets
}

pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximal(subsets(g.labels()).filter(|s| independent(g, s)).collect())
}

pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal(subsets(g.labels()).filter(|s| clique(g, s)).collect())
}

pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexSet> {
    let edges = g.edges();
    minimal(
        subsets(g.labels())
            .filter(|c| edges.iter().all(|(u, v)| c.contains(u) || c.contains(v)))
            .collect(),
    )
}

pub fn is_unmixed(g: &Graph) -> bool {
    let sizes: BTreeSet<usize> = minimal_vertex_covers(g).iter().map(|c| c.len()).collect();
    sizes.len() <= 1
}

/// No cycle of length at least 4 is chordless.
pub fn is_chordal(g: &Graph) -> bool {
    let labels = g.labels();
    // Cycles are enumerated from their smallest vertex.
    fn search(g: &Graph, labels: &[Vertex], path: &mut Vec<Vertex>) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        for &v in labels {
            if v <= start || path.contains(&v) || !g.has_edge(last, v) {
                continue;
            }
            path.push(v);
            if path.len() >= 4 && g.has_edge(v, start) && !has_chord(g, path) {
                return true;
            }
            if search(g, labels, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    fn has_chord(g: &Graph, cycle: &[Vertex]) -> bool {
        let m = cycle.len();
        (0..m)
            .any(|a| (a + 2..m).any(|b| !(a == 0 && b == m - 1) && g.has_edge(cycle[a], cycle[b])))
    }
    !labels.iter().any(|&s| search(g, labels, &mut vec![s]))
}

/// Minimal subsets of the universe lying in no facet.
pub fn minimal_non_faces(c: &SimplicialComplex) -> Vec<VertexSet> {
    let non_faces: Vec<VertexSet> = subsets(c.universe())
        .filter(|s| !c.facets().iter().any(|f| s.is_subset(f)))
        .collect();
    minimal(non_faces)
}

/// The original shelling condition on an ordered facet list: for each
/// `i >= 2`, the faces of `F_i` lying in an earlier facet are exactly the
/// faces generated by a non-empty set of maximal proper faces of `F_i`.
pub fn is_shelling_by_definition(ordered: &[VertexSet]) -> bool {
    for i in 1..ordered.len() {
        let fi: Vec<Vertex> = ordered[i].iter().copied().collect();
        let earlier = &ordered[..i];
        let in_earlier = |s: &VertexSet| earlier.iter().any(|f| s.is_subset(f));
        let intersection: BTreeSet<VertexSet> = subsets(&fi).filter(in_earlier).collect();
        let ridges: Vec<VertexSet> = fi
            .iter()
            .map(|x| ordered[i].iter().copied().filter(|v| v != x).collect())
            .filter(in_earlier)
            .collect();
        if ridges.is_empty() {
            return false;
        }
        let generated: BTreeSet<VertexSet> = subsets(&fi)
            .filter(|s| ridges.iter().any(|r| s.is_subset(r)))
            .collect();
        if intersection != generated {
            return false;
        }
    }
    true
}

/// All set partitions of `items`.
fn set_partitions(items: &[Vertex]) -> Vec<Vec<VertexSet>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for partition in set_partitions(rest) {
        for i in 0..partition.len() {
            let mut p = partition.clone();
            p[i].insert(first);
            out.push(p);
        }
        let mut p = partition;
        p.push(VertexSet::from([first]));
        out.push(p);
    }
    out
}

/// Edge set of the hybrid graph of `g[∪A_i]` for blocks `A_i ∪ B_i`,
/// computed from the definition.
fn hybrid_edges(g: &Graph, blocks: &[(VertexSet, VertexSet)]) -> BTreeSet<(Vertex, Vertex)> {
    let base: VertexSet = blocks.iter().flat_map(|(a, _)| a.iter().copied()).collect();
    let mut edges: BTreeSet<(Vertex, Vertex)> = g
        .edges()
        .into_iter()
        .filter(|(u, v)| base.contains(u) && base.contains(v))
        .collect();
    for (a, b) in blocks {
        let all: Vec<Vertex> = a.union(b).copied().collect();
        for (i, &u) in all.iter().enumerate() {
            for &v in &all[i + 1..] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    edges
}

/// Tries every partition of the vertex set into blocks and every non-empty
/// choice of `B_i` inside each block, rebuilding the hybrid graph each time.
/// Only feasible for about five vertices.
pub fn is_hybrid_by_definition(g: &Graph) -> bool {
    let target: BTreeSet<(Vertex, Vertex)> = g.edges().into_iter().collect();
    set_partitions(g.labels()).into_iter().any(|partition| {
        let choices: Vec<Vec<(VertexSet, VertexSet)>> = partition
            .iter()
            .map(|block| {
                let members: Vec<Vertex> = block.iter().copied().collect();
                subsets(&members)
                    .filter(|b| !b.is_empty())
                    .map(|b| (block.difference(&b).copied().collect(), b))
                    .collect()
            })
            .collect();
        let mut pick = vec![0usize; choices.len()];
        loop {
            let blocks: Vec<_> = choices
                .iter()
                .zip(&pick)
                .map(|(c, &k)| c[k].clone())
                .collect();
            if hybrid_edges(g, &blocks) == target {
                return true;
            }
            let mut slot = choices.len();
            loop {
                if slot == 0 {
                    return false;
                }
                slot -= 1;
                pick[slot] += 1;
                if pick[slot] < choices[slot].len() {
                    break;
                }
                pick[slot] = 0;
            }
        }
    })
}

/// Tries every partition of the vertex set into cliques and accepts when
/// each block contains a vertex whose closed neighbourhood is the block.
pub fn is_hybrid_by_partition(g: &Graph) -> bool {
    let closed = |v: Vertex| -> VertexSet {
        g.labels()
            .iter()
            .copied()
            .filter(|&u| u == v || g.has_edge(u, v))
            .collect()
    };
    set_partitions(g.labels()).into_iter().any(|partition| {
        partition
            .iter()
            .all(|block| clique(g, block) && block.iter().any(|&v| &closed(v) == block))
    })
}

/// Every graph on labels `1..=n`, by edge mask.
pub fn all_labelled_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let labels: Vec<Vertex> = (1..=n).collect();
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(&labels, &edges).expect("valid labels")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_are_counted_by_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate() {
            let items: Vec<Vertex> = (1..=n as Vertex).collect();
            assert_eq!(set_partitions(&items).len(), b);
        }
    }

    #[test]
    fn small_oracle_facts() {
        assert!(!is_chordal(&Graph::cycle(4)));
        assert!(is_chordal(&Graph::complete(&[1, 2, 3, 4]).unwrap()));
        assert!(!is_hybrid_by_definition(&Graph::cycle(5)));
        assert!(is_hybrid_by_definition(&Graph::path(4)));
        assert!(!is_hybrid_by_partition(&Graph::path(3)));
        assert_eq!(all_labelled_graphs(4).count(), 64);
    }

    #[test]
    fn definition_of_shelling() {
        let s = |v: &[Vertex]| v.iter().copied().collect::<VertexSet>();
        assert!(is_shelling_by_definition(&[
            s(&[1, 2]),
            s(&[2, 3]),
            s(&[3, 4])
        ]));
        assert!(!is_shelling_by_definition(&[
            s(&[1, 2]),
            s(&[3, 4]),
            s(&[2, 3])
        ]));
        // Two triangles sharing only a vertex.
        assert!(!is_shelling_by_definition(&[s(&[1, 2, 3]), s(&[3, 4, 5])]));
    }
}
