//! Randomised cross-checks between the fast paths and [`crate::oracle`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chordal::chordal_cm_check;
use crate::complex::{MonomialGenerators, SimplicialComplex};
use crate::hybrid::{recognize_hybrid, HybridSpec};
use crate::io::{graph_to_json, spec_to_json};
use crate::oracle;
use crate::random::{random_chordal_graph, random_clique_partition, random_graph, random_spec};
use crate::shelling::DEFAULT_BUDGET;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    /// Offending inputs, as JSON.
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn suite<F>(name: &'static str, cases: usize, seed: u64, mut case: F) -> SuiteResult
where
    F: FnMut(&mut ChaCha8Rng) -> Option<String>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failures = (0..cases).filter_map(|_| case(&mut rng)).collect();
    SuiteResult {
        name,
        cases,
        failures,
    }
}

/// Checks a random hybrid spec: facets against brute force, purity,
/// block sizes, and the canonical shelling.
pub fn check_spec(spec: &HybridSpec) -> bool {
    let built = spec.build();
    let blocks = spec.facet_blocks();
    let mut flat: Vec<_> = blocks.iter().flat_map(|b| b.facets.clone()).collect();
    flat.sort();
    if flat != oracle::maximal_independent_sets(&built) {
        return false;
    }
    if !flat.iter().all(|f| f.len() == spec.r()) {
        return false;
    }
    let blocks_ok = blocks.iter().all(|b| {
        let expected: usize = spec
            .parts()
            .iter()
            .zip(spec.whiskers())
            .filter(|(a, _)| a.is_disjoint(&b.face))
            .map(|(_, w)| w.len())
            .product();
        b.len() == expected
    });
    if !blocks_ok {
        return false;
    }
    match spec.canonical_shelling_order() {
        Ok((complex, cert)) => {
            complex.is_pure()
                && complex.dimension() == spec.r() as isize - 1
                && cert.verify(&complex).is_ok()
        }
        Err(_) => false,
    }
}

pub fn run(cases: usize, seed: u64) -> Vec<SuiteResult> {
    vec![
        suite("hybrid-facets-and-shelling", cases, seed, |rng| {
            let spec = random_spec(rng, 7, 4, 3);
            (!check_spec(&spec)).then(|| spec_to_json(&spec))
        }),
        suite("canonical-order-by-definition", cases, seed ^ 1, |rng| {
            let spec = random_spec(rng, 5, 3, 2);
            let ok = spec
                .canonical_shelling_order()
                .map(|(_, cert)| oracle::is_shelling_by_definition(&cert.facets))
                .unwrap_or(false);
            (!ok).then(|| spec_to_json(&spec))
        }),
        suite("whisker", cases, seed ^ 2, |rng| {
            let n = rng.gen_range(0..=7);
            let g = random_graph(rng, n, 0.5);
            let spec = HybridSpec::whisker(&g);
            let built = spec.build();
            let ok = spec
                .canonical_shelling_order()
                .map(|(c, cert)| cert.verify(&c).is_ok())
                .unwrap_or(false)
                && built.is_unmixed()
                && built
                    .minimal_vertex_covers()
                    .iter()
                    .all(|c| c.len() == n as usize);
            (!ok).then(|| graph_to_json(&g))
        }),
        suite("clique-whisker", cases, seed ^ 3, |rng| {
            let n = rng.gen_range(1..=8);
            let g = random_chordal_graph(rng, n);
            let partition = random_clique_partition(rng, &g);
            let ok = HybridSpec::clique_whisker(&g, partition)
                .and_then(|s| s.canonical_shelling_order())
                .map(|(c, cert)| cert.verify(&c).is_ok())
                .unwrap_or(false);
            (!ok).then(|| graph_to_json(&g))
        }),
        suite("chordal-equivalence", cases, seed ^ 4, |rng| {
            let n = rng.gen_range(1..=9);
            let g = random_chordal_graph(rng, n);
            let ok = chordal_cm_check(&g, DEFAULT_BUDGET)
                .map(|r| r.conditions_agree == Some(true) && r.unmixed == oracle::is_unmixed(&g))
                .unwrap_or(false);
            (!ok).then(|| graph_to_json(&g))
        }),
        suite("stanley-reisner", cases, seed ^ 5, |rng| {
            let n = rng.gen_range(0..=8);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(rng, n, p);
            let complex = SimplicialComplex::independence_complex(&g);
            let gens = complex.stanley_reisner_generators();
            let oracle_gens = MonomialGenerators::new(oracle::minimal_non_faces(&complex));
            let ok = gens == MonomialGenerators::edge_ideal(&g) && gens == oracle_gens;
            (!ok).then(|| graph_to_json(&g))
        }),
        suite("chordality", cases, seed ^ 6, |rng| {
            let n = rng.gen_range(0..=8);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(rng, n, p);
            let ok = g.is_chordal() == oracle::is_chordal(&g)
                && g.maximal_independent_sets() == oracle::maximal_independent_sets(&g)
                && g.maximal_cliques() == oracle::maximal_cliques(&g)
                && g.minimal_vertex_covers() == oracle::minimal_vertex_covers(&g);
            (!ok).then(|| graph_to_json(&g))
        }),
        suite("recognition", cases, seed ^ 7, |rng| {
            let n = rng.gen_range(0..=6);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(rng, n, p);
            let found = recognize_hybrid(&g);
            let ok = found.as_ref().is_none_or(|d| d.build() == g)
                && found.is_some() == oracle::is_hybrid_by_partition(&g);
            (!ok).then(|| graph_to_json(&g))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_selftest_passes() {
        for result in run(20, 11) {
            assert!(result.passed(), "{}: {:?}", result.name, result.failures);
        }
    }
}
