//! Simplicial complexes stored by their facets.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// A simplicial complex given by its facets over a labelled vertex universe.
///
/// Facets are kept in canonical (lexicographic) order and no facet contains
/// another. A universe vertex that lies in no facet is a non-face; it shows
/// up as a degree-one Stanley–Reisner generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    universe: Vec<Vertex>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal members of `sets` as facets.
    ///
    /// `[∅]` is accepted and gives the complex whose only face is the empty
    /// face. An empty list is rejected since the void complex has no
    /// dimension.
    pub fn from_facets<I>(universe: &[Vertex], sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut universe = universe.to_vec();
        universe.sort_unstable();
        for pair in universe.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0]));
            }
        }
        let sets: BTreeSet<VertexSet> = sets.into_iter().collect();
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        for v in sets.iter().flatten() {
            if universe.binary_search(v).is_err() {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let facets: Vec<VertexSet> = sets
            .iter()
            .filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { universe, facets })
    }

    /// Faces are the independent sets of `g`.
    pub fn independence_complex(g: &Graph) -> Self {
        SimplicialComplex {
            universe: g.labels().to_vec(),
            facets: g.maximal_independent_sets(),
        }
    }

    /// Faces are the cliques of `g`.
    pub fn clique_complex(g: &Graph) -> Self {
        SimplicialComplex {
            universe: g.labels().to_vec(),
            facets: g.maximal_cliques(),
        }
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// `max |F| - 1`; `-1` for the complex `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.len());
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }

    pub fn contains_face(&self, face: &VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    pub fn facet_index(&self, f: &VertexSet) -> Option<usize> {
        self.facets.binary_search(f).ok()
    }

    /// Vertices of `f` that lie in no other facet.
    pub fn free_vertices(&self, f: &VertexSet) -> Result<VertexSet> {
        let idx = self
            .facet_index(f)
            .ok_or_else(|| Error::NotAFacet(f.iter().copied().collect()))?;
        Ok(f.iter()
            .copied()
            .filter(|v| {
                self.facets
                    .iter()
                    .enumerate()
                    .all(|(i, g)| i == idx || !g.contains(v))
            })
            .collect())
    }

    /// Minimal non-faces, i.e. the supports of the minimal monomial
    /// generators of the Stanley–Reisner ideal.
    ///
    /// A set is a non-face iff it meets the complement of every facet, so
    /// the minimal non-faces are the minimal transversals of the facet
    /// complements. They are built one complement at a time (Berge).
    pub fn stanley_reisner_generators(&self) -> MonomialGenerators {
        let n = self.universe.len();
        let complements: Vec<FixedBitSet> = self
            .facets
            .iter()
            .map(|f| {
                let mut c = FixedBitSet::with_capacity(n);
                c.insert_range(..);
                for v in f {
                    c.set(self.position(*v), false);
                }
                c
            })
            .collect();

        let mut transversals = vec![FixedBitSet::with_capacity(n)];
        for edge in &complements {
            let mut next: Vec<FixedBitSet> = Vec::new();
            for t in &transversals {
                if !t.is_disjoint(edge) {
                    next.push(t.clone());
                } else {
                    for v in edge.ones() {
                        let mut grown = t.clone();
                        grown.insert(v);
                        next.push(grown);
                    }
                }
            }
            transversals = minimal_sets(next);
        }
        MonomialGenerators::new(
            transversals
                .iter()
                .map(|b| b.ones().map(|i| self.universe[i]).collect())
                .collect(),
        )
    }

    fn position(&self, v: Vertex) -> usize {
        self.universe
            .binary_search(&v)
            .expect("facet vertices lie in the universe")
    }
}

fn minimal_sets(mut sets: Vec<FixedBitSet>) -> Vec<FixedBitSet> {
    sets.sort_by_key(|s| s.count_ones(..));
    sets.dedup();
    let mut kept: Vec<FixedBitSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.facets.iter().map(format_set).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// `{1,2,3}` style rendering.
pub fn format_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Supports of square-free monomials generating a monomial ideal.
///
/// Sorted by degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialGenerators(Vec<VertexSet>);

impl MonomialGenerators {
    pub fn new(mut generators: Vec<VertexSet>) -> Self {
        generators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        generators.dedup();
        MonomialGenerators(generators)
    }

    /// `x_i x_j` for every edge `{i, j}`.
    pub fn edge_ideal(g: &Graph) -> Self {
        Self::new(
            g.edges()
                .into_iter()
                .map(|(u, v)| [u, v].into_iter().collect())
                .collect(),
        )
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// No generator contains another.
    pub fn is_antichain(&self) -> bool {
        self.0.iter().enumerate().all(|(i, a)| {
            self.0
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(b))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn sets(list: &[&[Vertex]]) -> Vec<VertexSet> {
        list.iter().map(|s| set(s)).collect()
    }

    fn diamond() -> Graph {
        Graph::new(&[1, 2, 3, 4], &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn from_facets_keeps_maximal_sets() {
        let c = SimplicialComplex::from_facets(&[1, 2, 3], sets(&[&[1, 2], &[1]])).unwrap();
        assert_eq!(c.facets(), sets(&[&[1, 2]]).as_slice());

        let c = SimplicialComplex::from_facets(&[1, 2, 3], sets(&[&[1], &[2], &[3]])).unwrap();
        assert_eq!(c.n_facets(), 3);
        assert_eq!(c.dimension(), 0);

        assert_eq!(
            SimplicialComplex::from_facets(&[1, 2], sets(&[&[1, 5]])),
            Err(Error::UnknownVertex(5))
        );
        assert_eq!(
            SimplicialComplex::from_facets(&[1, 2], Vec::new()),
            Err(Error::EmptyInput)
        );
    }

    #[test]
    fn dimension_and_purity() {
        let c = SimplicialComplex::from_facets(&[1, 2, 3], sets(&[&[1, 2], &[3]])).unwrap();
        assert_eq!(c.dimension(), 1);
        assert!(!c.is_pure());

        let void_face = SimplicialComplex::from_facets(&[], sets(&[&[]])).unwrap();
        assert_eq!(void_face.dimension(), -1);
        assert!(void_face.is_pure());
    }

    #[test]
    fn independence_and_clique_complexes() {
        let g = diamond();
        let ind = SimplicialComplex::independence_complex(&g);
        assert_eq!(ind.facets(), sets(&[&[1, 4], &[2], &[3]]).as_slice());
        let cl = SimplicialComplex::clique_complex(&g);
        assert_eq!(cl.facets(), sets(&[&[1, 2, 3], &[2, 3, 4]]).as_slice());

        let edgeless = Graph::edgeless(&[1, 2, 3]).unwrap();
        assert_eq!(
            SimplicialComplex::independence_complex(&edgeless).facets(),
            sets(&[&[1, 2, 3]]).as_slice()
        );
        assert_eq!(
            SimplicialComplex::clique_complex(&edgeless).facets(),
            sets(&[&[1], &[2], &[3]]).as_slice()
        );
        let k4 = Graph::complete(&[1, 2, 3, 4]).unwrap();
        assert_eq!(SimplicialComplex::clique_complex(&k4).n_facets(), 1);
    }

    #[test]
    fn stanley_reisner_examples() {
        let g = diamond();
        let ind = SimplicialComplex::independence_complex(&g);
        let gens = ind.stanley_reisner_generators();
        assert_eq!(
            gens.generators(),
            sets(&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]]).as_slice()
        );
        assert_eq!(gens, MonomialGenerators::edge_ideal(&g));

        let simplex = SimplicialComplex::from_facets(&[1, 2, 3], sets(&[&[1, 2, 3]])).unwrap();
        assert!(simplex.stanley_reisner_generators().is_empty());

        let two_points = SimplicialComplex::from_facets(&[1, 2], sets(&[&[1], &[2]])).unwrap();
        assert_eq!(
            two_points.stanley_reisner_generators().generators(),
            sets(&[&[1, 2]]).as_slice()
        );

        let ghost = SimplicialComplex::from_facets(&[1, 2, 3], sets(&[&[1, 2]])).unwrap();
        assert_eq!(
            ghost.stanley_reisner_generators().generators(),
            sets(&[&[3]]).as_slice()
        );

        assert!(MonomialGenerators::edge_ideal(&Graph::edgeless(&[1, 2]).unwrap()).is_empty());
    }

    #[test]
    fn free_vertex_examples() {
        let cl = SimplicialComplex::clique_complex(&diamond());
        assert_eq!(cl.free_vertices(&set(&[1, 2, 3])).unwrap(), set(&[1]));
        assert_eq!(cl.free_vertices(&set(&[2, 3, 4])).unwrap(), set(&[4]));
        assert_eq!(
            cl.free_vertices(&set(&[1, 2])),
            Err(Error::NotAFacet(vec![1, 2]))
        );

        let single = SimplicialComplex::from_facets(&[1, 2], sets(&[&[1, 2]])).unwrap();
        assert_eq!(single.free_vertices(&set(&[1, 2])).unwrap(), set(&[1, 2]));

        let c4 = SimplicialComplex::clique_complex(&Graph::cycle(4));
        assert_eq!(c4.free_vertices(&set(&[1, 2])).unwrap(), set(&[]));
    }
}
