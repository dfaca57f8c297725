//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::hybrid::HybridSpec;

/// `G(n, p)` on labels `1..=n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    let labels: Vec<Vertex> = (1..=n).collect();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(&labels, &edges).expect("labels are distinct")
}

/// Chordal graph on `1..=n` grown by attaching each new vertex to a random
/// clique of the graph so far, so every new vertex is simplicial when
/// added.
pub fn random_chordal_graph<R: Rng>(rng: &mut R, n: u32) -> Graph {
    let mut adj: Vec<Vec<bool>> = vec![vec![false; n as usize + 1]; n as usize + 1];
    let mut edges = Vec::new();
    for v in 2..=n {
        if rng.gen_bool(0.15) {
            continue;
        }
        let mut pool: Vec<Vertex> = (1..v).collect();
        pool.shuffle(rng);
        let mut clique: Vec<Vertex> = vec![pool[0]];
        for &u in &pool[1..] {
            if clique.iter().all(|&w| adj[u as usize][w as usize]) && rng.gen_bool(0.6) {
                clique.push(u);
            }
        }
        for &u in &clique {
            adj[u as usize][v as usize] = true;
            adj[v as usize][u as usize] = true;
            edges.push((u, v));
        }
    }
    let labels: Vec<Vertex> = (1..=n).collect();
    Graph::new(&labels, &edges).expect("labels are distinct")
}

/// A partition of the vertices into non-empty cliques.
pub fn random_clique_partition<R: Rng>(rng: &mut R, g: &Graph) -> Vec<VertexSet> {
    let mut order: Vec<Vertex> = g.labels().to_vec();
    order.shuffle(rng);
    let mut parts: Vec<VertexSet> = Vec::new();
    for v in order {
        let fits: Vec<usize> = (0..parts.len())
            .filter(|&i| parts[i].iter().all(|&u| g.has_edge(u, v)))
            .collect();
        if fits.is_empty() || rng.gen_bool(1.0 / (fits.len() as f64 + 1.0)) {
            parts.push(VertexSet::from([v]));
        } else {
            let pick = fits[rng.gen_range(0..fits.len())];
            parts[pick].insert(v);
        }
    }
    parts.sort();
    parts
}

/// A random valid spec: base on `0..=max_base` vertices, `1..=max_r`
/// parts (possibly empty), whisker sizes in `1..=max_s`.
///
/// Vertices are dealt to parts at random, each part is completed to a
/// clique, and edges between parts are added with probability 0.4.
pub fn random_spec<R: Rng>(rng: &mut R, max_base: u32, max_r: usize, max_s: usize) -> HybridSpec {
    let n = rng.gen_range(0..=max_base);
    let r = rng.gen_range(1..=max_r);
    let mut parts = vec![VertexSet::new(); r];
    for v in 1..=n {
        parts[rng.gen_range(0..r)].insert(v);
    }
    let part_of = |v: Vertex| parts.iter().position(|p| p.contains(&v)).unwrap();
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if part_of(u) == part_of(v) || rng.gen_bool(0.4) {
                edges.push((u, v));
            }
        }
    }
    let labels: Vec<Vertex> = (1..=n).collect();
    let base = Graph::new(&labels, &edges).expect("labels are distinct");
    let sizes: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=max_s)).collect();
    HybridSpec::with_whisker_sizes(base, parts, &sizes).expect("parts are cliques")
}
