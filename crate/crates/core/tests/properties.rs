use proptest::prelude::*;

use hybridcm::oracle;
use hybridcm::{
    find_shelling, is_shelling_order, Graph, HybridSpec, MonomialGenerators, ShellingCheck,
    ShellingSearch, SimplicialComplex, Vertex, VertexSet,
};

fn graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(Vertex, Vertex)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()).prop_map(move |edges| {
            let labels: Vec<Vertex> = (1..=n).collect();
            Graph::new(&labels, &edges).unwrap()
        })
    })
}

fn set_family() -> impl Strategy<Value = Vec<VertexSet>> {
    prop::collection::vec(prop::collection::btree_set(1u32..=6, 0..=4), 1..6)
}

proptest! {
    #[test]
    fn from_facets_is_idempotent(sets in set_family()) {
        let universe: Vec<Vertex> = (1..=6).collect();
        let c = SimplicialComplex::from_facets(&universe, sets).unwrap();
        let again = SimplicialComplex::from_facets(&universe, c.facets().to_vec()).unwrap();
        prop_assert_eq!(c.facets(), again.facets());
        for f in c.facets() {
            prop_assert!(c.contains_face(f));
        }
    }

    #[test]
    fn stanley_reisner_generators_are_minimal_non_faces(sets in set_family()) {
        let universe: Vec<Vertex> = (1..=6).collect();
        let c = SimplicialComplex::from_facets(&universe, sets).unwrap();
        let gens = c.stanley_reisner_generators();
        prop_assert!(gens.is_antichain());
        prop_assert_eq!(gens, MonomialGenerators::new(oracle::minimal_non_faces(&c)));
    }

    #[test]
    fn covers_are_complements_of_independent_sets(g in graph(8)) {
        let all = g.vertex_set();
        let mut complements: Vec<VertexSet> = g
            .maximal_independent_sets()
            .iter()
            .map(|s| all.difference(s).copied().collect())
            .collect();
        complements.sort();
        prop_assert_eq!(complements, g.minimal_vertex_covers());
    }

    #[test]
    fn elimination_order_exists_iff_chordal(g in graph(8)) {
        let chordal = oracle::is_chordal(&g);
        prop_assert_eq!(g.is_chordal(), chordal);
        match g.perfect_elimination_order() {
            Some(order) => prop_assert!(chordal && g.is_perfect_elimination_order(&order)),
            None => prop_assert!(!chordal),
        }
    }

    #[test]
    fn simplicial_vertices_have_clique_neighbourhoods(g in graph(8)) {
        let simplicial = g.simplicial_vertices();
        for &v in g.labels() {
            let n = g.neighbors(v).unwrap();
            prop_assert_eq!(simplicial.contains(&v), g.is_clique(&n).unwrap());
        }
    }

    #[test]
    fn singleton_clique_whisker_is_whisker(g in graph(7)) {
        let singletons: Vec<VertexSet> = g.labels().iter().map(|&v| VertexSet::from([v])).collect();
        let a = HybridSpec::clique_whisker(&g, singletons).unwrap();
        let b = HybridSpec::whisker(&g);
        prop_assert_eq!(a.build(), b.build());
        prop_assert_eq!(a.facets(), b.facets());
    }

    #[test]
    fn found_shellings_pass_the_checker(g in graph(6)) {
        let c = SimplicialComplex::independence_complex(&g);
        prop_assume!(c.is_pure());
        if let ShellingSearch::Found(cert) = find_shelling(&c, 100_000).unwrap() {
            prop_assert!(matches!(is_shelling_order(&c, &cert.order).unwrap(), ShellingCheck::Valid(_)));
            prop_assert!(oracle::is_shelling_by_definition(&cert.facets));
        }
    }
}
