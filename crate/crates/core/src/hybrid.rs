//! Hybrid graphs.
//!
//! Given a base graph `G`, a partition `A_1, ..., A_r` of its vertices into
//! cliques (parts may be empty) and non-empty sets of fresh vertices
//! `B_1, ..., B_r`, the hybrid graph is `G` together with every pair inside
//! each `A_i ∪ B_i`. Its independence complex is pure of dimension `r - 1`
//! and shellable; the facets come in one block per independent set of `G`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use crate::complex::{format_set, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::shelling::{is_shelling_order, ShellingCertificate, ShellingCheck};

/// Base graph, clique partition and whisker sets.
///
/// Whisker sets are ordered: `whiskers[i][j]` is the vertex `y_{i+1, j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridSpec {
    base: Graph,
    parts: Vec<VertexSet>,
    whiskers: Vec<Vec<Vertex>>,
}

/// A witness that a graph is hybrid. Building it reproduces the graph.
pub type HybridDecomposition = HybridSpec;

impl HybridSpec {
    pub fn new(base: Graph, parts: Vec<VertexSet>, whiskers: Vec<Vec<Vertex>>) -> Result<Self> {
        if parts.len() != whiskers.len() {
            return Err(Error::ArityMismatch {
                parts: parts.len(),
                whiskers: whiskers.len(),
            });
        }
        let mut covered = VertexSet::new();
        for part in &parts {
            for &v in part {
                if !base.contains(v) {
                    return Err(Error::PartsNotPartition(format!(
                        "vertex {v} is not in the base graph"
                    )));
                }
                if !covered.insert(v) {
                    return Err(Error::PartsNotPartition(format!(
                        "vertex {v} lies in two parts"
                    )));
                }
            }
        }
        if let Some(v) = base.labels().iter().find(|v| !covered.contains(v)) {
            return Err(Error::PartsNotPartition(format!(
                "vertex {v} lies in no part"
            )));
        }
        for part in &parts {
            if !base.is_clique(part)? {
                return Err(Error::PartNotClique(part.iter().copied().collect()));
            }
        }
        let mut seen = base.vertex_set();
        for (i, b) in whiskers.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::EmptyWhiskerSet(i + 1));
            }
            for &y in b {
                if y == 0 {
                    return Err(Error::InvalidLabel(0));
                }
                if !seen.insert(y) {
                    return Err(Error::LabelCollision(y));
                }
            }
        }
        Ok(HybridSpec {
            base,
            parts,
            whiskers,
        })
    }

    /// Assigns whisker labels `m+1, m+2, ...` (`m` the largest base label)
    /// to `B_1`, then `B_2`, and so on.
    pub fn with_whisker_sizes(base: Graph, parts: Vec<VertexSet>, sizes: &[usize]) -> Result<Self> {
        let mut next = base.max_label().unwrap_or(0) + 1;
        let whiskers = sizes
            .iter()
            .map(|&s| {
                let b: Vec<Vertex> = (next..next + s as Vertex).collect();
                next += s as Vertex;
                b
            })
            .collect();
        Self::new(base, parts, whiskers)
    }

    /// One whisker per vertex, parts are the singletons in label order.
    pub fn whisker(g: &Graph) -> Self {
        let parts = g.labels().iter().map(|&v| VertexSet::from([v])).collect();
        let sizes = vec![1; g.n_vertices()];
        Self::with_whisker_sizes(g.clone(), parts, &sizes).expect("singletons are cliques")
    }

    /// One whisker per part of a vertex clique-partition.
    pub fn clique_whisker(g: &Graph, partition: Vec<VertexSet>) -> Result<Self> {
        if let Some(pos) = partition.iter().position(|p| p.is_empty()) {
            return Err(Error::PartsNotPartition(format!(
                "part {} is empty",
                pos + 1
            )));
        }
        let sizes = vec![1; partition.len()];
        Self::with_whisker_sizes(g.clone(), partition, &sizes)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn whiskers(&self) -> &[Vec<Vertex>] {
        &self.whiskers
    }

    /// Number of parts.
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn variable_order(&self) -> VariableOrder {
        VariableOrder::new(self)
    }

    /// The hybrid graph.
    pub fn build(&self) -> Graph {
        let mut labels: Vec<Vertex> = self.base.labels().to_vec();
        labels.extend(self.whiskers.iter().flatten());
        let mut edges = self.base.edges();
        for (a, b) in self.parts.iter().zip(&self.whiskers) {
            let block: Vec<Vertex> = a.iter().chain(b).copied().collect();
            for (i, &u) in block.iter().enumerate() {
                for &v in &block[i + 1..] {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(&labels, &edges).expect("validated spec builds a simple graph")
    }

    /// Facets of the hybrid graph's independence complex, one block per
    /// independent set `F` of the base.
    ///
    /// Blocks are ordered by `|F|`, then by the variable order; facets
    /// inside a block by the variable order on their whisker part. This is
    /// the canonical shelling order.
    pub fn facet_blocks(&self) -> Vec<FacetBlock> {
        let order = self.variable_order();
        let mut faces = self.base.independent_sets();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| order.compare(a, b)));

        faces
            .into_iter()
            .map(|face| {
                let open: Vec<&Vec<Vertex>> = self
                    .parts
                    .iter()
                    .zip(&self.whiskers)
                    .filter(|(a, _)| a.is_disjoint(&face))
                    .map(|(_, b)| b)
                    .collect();
                let mut facets = Vec::new();
                let mut pick = vec![0usize; open.len()];
                // odometer over the open whisker sets, last slot fastest
                'choices: loop {
                    let mut facet = face.clone();
                    facet.extend(open.iter().zip(&pick).map(|(b, &k)| b[k]));
                    facets.push(facet);
                    let mut slot = open.len();
                    loop {
                        if slot == 0 {
                            break 'choices;
                        }
                        slot -= 1;
                        pick[slot] += 1;
                        if pick[slot] < open[slot].len() {
                            break;
                        }
                        pick[slot] = 0;
                    }
                }
                facets.sort_by(|a, b| order.compare(a, b));
                FacetBlock { face, facets }
            })
            .collect()
    }

    /// The facets of all blocks, in canonical order.
    pub fn facets(&self) -> Vec<VertexSet> {
        self.facet_blocks()
            .into_iter()
            .flat_map(|b| b.facets)
            .collect()
    }

    /// The canonical order, checked against the independence complex of the
    /// built graph. The certificate's `order` indexes that complex's facets.
    pub fn canonical_shelling_order(&self) -> Result<(SimplicialComplex, ShellingCertificate)> {
        let complex = SimplicialComplex::independence_complex(&self.build());
        let order = self
            .facets()
            .iter()
            .map(|f| {
                complex
                    .facet_index(f)
                    .ok_or_else(|| Error::NotAFacet(f.iter().copied().collect()))
            })
            .collect::<Result<Vec<_>>>()?;
        match is_shelling_order(&complex, &order)? {
            ShellingCheck::Valid(cert) => Ok((complex, cert)),
            ShellingCheck::Violation { i, j } => Err(Error::CanonicalOrderNotShelling { i, j }),
        }
    }
}

/// One block of facets `F ∪ F'` sharing the base face `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetBlock {
    pub face: VertexSet,
    pub facets: Vec<VertexSet>,
}

impl FacetBlock {
    /// `F'` for each facet, i.e. the facet minus the base face.
    pub fn whisker_parts(&self) -> Vec<VertexSet> {
        self.facets
            .iter()
            .map(|t| t.difference(&self.face).copied().collect())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// `{1}∪{7,8,9}, ...`
    pub fn display_facets(&self) -> String {
        self.whisker_parts()
            .iter()
            .map(|w| {
                if self.face.is_empty() {
                    format_set(w)
                } else {
                    format!("{}∪{}", format_set(&self.face), format_set(w))
                }
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Name of a variable of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// Base vertex `x_label`.
    X(Vertex),
    /// Whisker `y_{i,j}`, 1-based.
    Y(usize, usize),
}

/// `x_1 > ... > x_n > y_{1,1} > ... > y_{1,s_1} > ... > y_{r,s_r}`.
///
/// Base vertices are ranked by label. A smaller rank is a larger variable.
#[derive(Clone, Debug)]
pub struct VariableOrder {
    rank: HashMap<Vertex, usize>,
    names: HashMap<Vertex, Variable>,
}

impl VariableOrder {
    fn new(spec: &HybridSpec) -> Self {
        let mut rank = HashMap::new();
        let mut names = HashMap::new();
        for &v in spec.base.labels() {
            rank.insert(v, rank.len());
            names.insert(v, Variable::X(v));
        }
        for (i, b) in spec.whiskers.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                rank.insert(y, rank.len());
                names.insert(y, Variable::Y(i + 1, j + 1));
            }
        }
        VariableOrder { rank, names }
    }

    /// Plain order on a graph: every vertex is `x_label`, ranked by label.
    pub fn for_graph(g: &Graph) -> Self {
        VariableOrder {
            rank: g
                .labels()
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i))
                .collect(),
            names: g.labels().iter().map(|&v| (v, Variable::X(v))).collect(),
        }
    }

    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[&v]
    }

    pub fn variable(&self, v: Vertex) -> Variable {
        self.names[&v]
    }

    /// Vertices sorted from largest to smallest variable.
    pub fn sorted(&self, s: &VertexSet) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = s.iter().copied().collect();
        vs.sort_by_key(|v| self.rank[v]);
        vs
    }

    /// Lexicographic comparison, largest variables first. The set with the
    /// larger leading variable comes first.
    pub fn compare(&self, a: &VertexSet, b: &VertexSet) -> Ordering {
        let ra: Vec<usize> = self.sorted(a).iter().map(|v| self.rank[v]).collect();
        let rb: Vec<usize> = self.sorted(b).iter().map(|v| self.rank[v]).collect();
        ra.cmp(&rb)
    }
}

/// Finds a decomposition of `g` as a hybrid graph, if one exists.
///
/// `g` is hybrid iff its vertex set is a disjoint union of closed
/// neighbourhoods `N[v]` of simplicial vertices: each block is `A_i ∪ B_i`
/// with `B_i` the vertices whose closed neighbourhood is the whole block.
/// The cover is found by exact-cover backtracking, always branching on the
/// smallest uncovered vertex and trying blocks in sorted order.
pub fn recognize_hybrid(g: &Graph) -> Option<HybridDecomposition> {
    let closed: HashMap<Vertex, VertexSet> = g
        .simplicial_vertices()
        .into_iter()
        .map(|v| (v, g.closed_neighborhood(v).expect("vertex of g")))
        .collect();
    let blocks: BTreeSet<VertexSet> = closed.values().cloned().collect();
    let blocks: Vec<VertexSet> = blocks.into_iter().collect();

    let mut chosen = Vec::new();
    if !exact_cover(&g.vertex_set(), &blocks, &mut chosen) {
        return None;
    }
    let mut cover: Vec<VertexSet> = chosen.into_iter().map(|i| blocks[i].clone()).collect();
    cover.sort();

    let mut parts = Vec::with_capacity(cover.len());
    let mut whiskers = Vec::with_capacity(cover.len());
    let mut base_vertices = VertexSet::new();
    for block in &cover {
        let free: Vec<Vertex> = block
            .iter()
            .copied()
            .filter(|v| closed.get(v) == Some(block))
            .collect();
        let part: VertexSet = block
            .iter()
            .copied()
            .filter(|v| !free.contains(v))
            .collect();
        base_vertices.extend(&part);
        parts.push(part);
        whiskers.push(free);
    }
    let base = g
        .induced_subgraph(&base_vertices)
        .expect("parts are vertices of g");
    let spec = HybridSpec::new(base, parts, whiskers).expect("cover gives a valid decomposition");
    debug_assert_eq!(&spec.build(), g);
    Some(spec)
}

fn exact_cover(uncovered: &VertexSet, blocks: &[VertexSet], chosen: &mut Vec<usize>) -> bool {
    let Some(&u) = uncovered.first() else {
        return true;
    };
    for (i, block) in blocks.iter().enumerate() {
        if !block.contains(&u) || !block.is_subset(uncovered) {
            continue;
        }
        chosen.push(i);
        let rest: VertexSet = uncovered.difference(block).copied().collect();
        if exact_cover(&rest, blocks, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}
