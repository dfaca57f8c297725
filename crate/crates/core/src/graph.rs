//! Simple undirected graphs on positive integer labels.
//!
//! Labels need not be contiguous: whisker vertices are usually numbered
//! after the base vertices, so a graph may carry labels like `{1, 2, 7, 9}`.
//! Internally every label maps to a dense position and adjacency is kept as
//! one bit row per position.

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Vertex label. Always `>= 1`.
pub type Vertex = u32;

/// A set of vertex labels, iterated in ascending order.
///
/// The derived `Ord` on `BTreeSet` compares the sorted member lists
/// lexicographically, which is the canonical order used for all
/// enumeration output in this crate.
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adj: Vec<FixedBitSet>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from a vertex list and an edge list.
    ///
    /// Duplicate edges (in either orientation) collapse to one edge.
    pub fn new(labels: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0]));
            }
        }
        if let Some(&v) = sorted.first() {
            if v == 0 {
                return Err(Error::InvalidLabel(0));
            }
        }
        let index: HashMap<Vertex, usize> =
            sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = sorted.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) else {
                return Err(Error::UnknownEndpoint(u, v));
            };
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph {
            labels: sorted,
            index,
            adj,
        })
    }

    /// Graph with no vertices.
    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            index: HashMap::new(),
            adj: Vec::new(),
        }
    }

    pub fn edgeless(labels: &[Vertex]) -> Result<Self> {
        Self::new(labels, &[])
    }

    pub fn complete(labels: &[Vertex]) -> Result<Self> {
        let mut edges = Vec::new();
        for (i, &u) in labels.iter().enumerate() {
            for &v in &labels[i + 1..] {
                edges.push((u, v));
            }
        }
        Self::new(labels, &edges)
    }

    /// Cycle `1 - 2 - ... - n - 1`. Requires `n >= 3`.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let labels: Vec<Vertex> = (1..=n).collect();
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Self::new(&labels, &edges).expect("cycle is a valid graph")
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u32) -> Self {
        let labels: Vec<Vertex> = (1..=n).collect();
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::new(&labels, &edges).expect("path is a valid graph")
    }

    /// Sorted vertex labels.
    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().copied().collect()
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn max_label(&self) -> Option<Vertex> {
        self.labels.last().copied()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.n_edges());
        for (i, row) in self.adj.iter().enumerate() {
            for j in row.ones().filter(|&j| j > i) {
                out.push((self.labels[i], self.labels[j]));
            }
        }
        out
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.index.get(&u), self.index.get(&v)) {
            (Some(&a), Some(&b)) => self.adj[a].contains(b),
            _ => false,
        }
    }

    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        let i = self.position(v)?;
        Ok(self.set_of(&self.adj[i]))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<VertexSet> {
        let mut set = self.neighbors(v)?;
        set.insert(v);
        Ok(set)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.adj[self.position(v)?].count_ones(..))
    }

    pub(crate) fn position(&self, v: Vertex) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    pub(crate) fn bits_of<'a, I>(&self, set: I) -> Result<FixedBitSet>
    where
        I: IntoIterator<Item = &'a Vertex>,
    {
        let mut bits = FixedBitSet::with_capacity(self.n_vertices());
        for &v in set {
            bits.insert(self.position(v)?);
        }
        Ok(bits)
    }

    pub(crate) fn set_of(&self, bits: &FixedBitSet) -> VertexSet {
        bits.ones().map(|i| self.labels[i]).collect()
    }

    /// The subgraph on `w` keeping every edge with both endpoints in `w`.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph> {
        let keep = self.bits_of(w)?;
        let labels: Vec<Vertex> = w.iter().copied().collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep.contains(self.index[&u]) && keep.contains(self.index[&v]))
            .collect();
        Graph::new(&labels, &edges)
    }

    /// Every pair of `c` is an edge. The empty set and singletons are cliques.
    pub fn is_clique(&self, c: &VertexSet) -> Result<bool> {
        let bits = self.bits_of(c)?;
        Ok(self.bits_are_clique(&bits))
    }

    pub(crate) fn bits_are_clique(&self, bits: &FixedBitSet) -> bool {
        bits.ones().all(|i| {
            let mut rest = bits.clone();
            rest.set(i, false);
            rest.is_subset(&self.adj[i])
        })
    }

    /// No pair of `s` is an edge.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        let bits = self.bits_of(s)?;
        Ok(bits.ones().all(|i| self.adj[i].is_disjoint(&bits)))
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// A perfect elimination ordering if the graph is chordal.
    ///
    /// Runs maximum-cardinality search, reverses the visit order and then
    /// checks that every vertex's later neighbours form a clique. A failed
    /// check means the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<Vertex>> {
        let n = self.n_vertices();
        let mut weight = vec![0usize; n];
        let mut numbered = FixedBitSet::with_capacity(n);
        let mut visit = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&i| !numbered.contains(i))
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("an unnumbered vertex remains");
            numbered.insert(next);
            visit.push(next);
            for j in self.adj[next].ones() {
                if !numbered.contains(j) {
                    weight[j] += 1;
                }
            }
        }
        visit.reverse();
        let order: Vec<Vertex> = visit.iter().map(|&i| self.labels[i]).collect();
        if self.is_perfect_elimination_order(&order) {
            Some(order)
        } else {
            None
        }
    }

    /// For each vertex, its neighbours that come later in `order` form a clique.
    ///
    /// Returns `false` if `order` is not a permutation of the vertices.
    pub fn is_perfect_elimination_order(&self, order: &[Vertex]) -> bool {
        let n = self.n_vertices();
        if order.len() != n {
            return false;
        }
        let mut later = FixedBitSet::with_capacity(n);
        later.insert_range(..);
        for &v in order {
            let Ok(i) = self.position(v) else {
                return false;
            };
            if !later.contains(i) {
                return false;
            }
            later.set(i, false);
            let mut tail = self.adj[i].clone();
            tail.intersect_with(&later);
            if !self.bits_are_clique(&tail) {
                return false;
            }
        }
        true
    }

    /// Vertices whose open neighbourhood is a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n_vertices())
            .filter(|&i| self.bits_are_clique(&self.adj[i]))
            .map(|i| self.labels[i])
            .collect()
    }

    /// All inclusion-maximal cliques, sorted.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = bron_kerbosch(&self.adj)
            .iter()
            .map(|b| self.set_of(b))
            .collect();
        out.sort();
        out
    }

    /// All inclusion-maximal independent sets, sorted.
    ///
    /// These are the maximal cliques of the complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = bron_kerbosch(&self.complement_rows())
            .iter()
            .map(|b| self.set_of(b))
            .collect();
        out.sort();
        out
    }

    /// Complements of the maximal independent sets, sorted.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let all = self.vertex_set();
        let mut out: Vec<VertexSet> = self
            .maximal_independent_sets()
            .into_iter()
            .map(|s| all.difference(&s).copied().collect())
            .collect();
        out.sort();
        out
    }

    /// All minimal vertex covers have the same size.
    pub fn is_unmixed(&self) -> bool {
        let sizes: BTreeSet<usize> = self
            .maximal_independent_sets()
            .iter()
            .map(|s| s.len())
            .collect();
        sizes.len() <= 1
    }

    /// Every independent set, including the empty set. Exponential.
    pub fn independent_sets(&self) -> Vec<VertexSet> {
        let n = self.n_vertices();
        let mut out = Vec::new();
        let mut current = FixedBitSet::with_capacity(n);
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(..);
        self.extend_independent(0, &mut current, &allowed, &mut out);
        out.sort();
        out
    }

    fn extend_independent(
        &self,
        from: usize,
        current: &mut FixedBitSet,
        allowed: &FixedBitSet,
        out: &mut Vec<VertexSet>,
    ) {
        out.push(self.set_of(current));
        for i in allowed.ones().filter(|&i| i >= from) {
            current.insert(i);
            let mut next = allowed.clone();
            next.difference_with(&self.adj[i]);
            next.set(i, false);
            self.extend_independent(i + 1, current, &next, out);
            current.set(i, false);
        }
    }

    fn complement_rows(&self) -> Vec<FixedBitSet> {
        let n = self.n_vertices();
        self.adj
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut c = row.clone();
                c.toggle_range(..);
                c.set(i, false);
                debug_assert_eq!(c.len(), n);
                c
            })
            .collect()
    }
}

/// Maximal cliques of the graph given by `adj`, Bron–Kerbosch with
/// Tomita pivoting. An empty graph yields the single empty clique.
fn bron_kerbosch(adj: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = FixedBitSet::with_capacity(n);
    expand(adj, &mut r, p, x, &mut out);
    out
}

fn expand(
    adj: &[FixedBitSet],
    r: &mut FixedBitSet,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<FixedBitSet>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| adj[u].intersection(&p).count())
        .expect("P is non-empty");
    let mut candidates = p.clone();
    candidates.difference_with(&adj[pivot]);
    for v in candidates.ones() {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        r.insert(v);
        expand(adj, r, np, nx, out);
        r.set(v, false);
        p.set(v, false);
        x.insert(v);
    }
}
