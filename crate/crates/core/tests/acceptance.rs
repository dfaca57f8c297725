//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run
//! with `cargo test -p hybridcm-core --test acceptance -- --nocapture`
//! to see them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hybridcm::io::spec_from_json;
use hybridcm::oracle;
use hybridcm::random::{random_chordal_graph, random_clique_partition, random_graph, random_spec};
use hybridcm::{
    chordal_cm_check, find_shelling, is_shelling_order, recognize_hybrid, Graph, HybridSpec,
    MonomialGenerators, ShellingCheck, ShellingSearch, SimplicialComplex, Vertex, VertexSet,
    DEFAULT_BUDGET,
};

const SPEC_SEED: u64 = 20_240_601;
const SPEC_CASES: usize = 200;

fn report(id: &str, name: &str, pass: bool, detail: String) {
    println!(
        "[{}] {id} {name}: {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{id} {name} failed: {detail}");
}

fn set(vs: &[Vertex]) -> VertexSet {
    vs.iter().copied().collect()
}

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

type Blocks = Vec<(Vec<Vertex>, Vec<Vec<Vertex>>)>;

/// Compares the facet blocks with an expected listing, block for block.
fn matches_blocks(spec: &HybridSpec, expected: &Blocks) -> (bool, String) {
    let blocks = spec.facet_blocks();
    let got: Vec<(VertexSet, BTreeSet<VertexSet>)> = blocks
        .iter()
        .map(|b| (b.face.clone(), b.facets.iter().cloned().collect()))
        .collect();
    let want: Vec<(VertexSet, BTreeSet<VertexSet>)> = expected
        .iter()
        .map(|(face, facets)| (set(face), facets.iter().map(|f| set(f)).collect()))
        .collect();
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let total: usize = sizes.iter().sum();
    let uniform = blocks
        .iter()
        .flat_map(|b| &b.facets)
        .all(|f| f.len() == spec.r());
    (
        got == want && uniform,
        format!("{total} facets of size {}, block sizes {sizes:?}", spec.r()),
    )
}

fn blocks_a() -> Blocks {
    vec![
        (
            vec![],
            vec![
                vec![5, 7, 8, 9],
                vec![5, 7, 8, 10],
                vec![5, 7, 8, 11],
                vec![6, 7, 8, 9],
                vec![6, 7, 8, 10],
                vec![6, 7, 8, 11],
            ],
        ),
        (
            vec![1],
            vec![vec![1, 7, 8, 9], vec![1, 7, 8, 10], vec![1, 7, 8, 11]],
        ),
        (
            vec![2],
            vec![
                vec![2, 5, 8, 9],
                vec![2, 5, 8, 10],
                vec![2, 5, 8, 11],
                vec![2, 6, 8, 9],
                vec![2, 6, 8, 10],
                vec![2, 6, 8, 11],
            ],
        ),
        (
            vec![3],
            vec![
                vec![3, 5, 7, 9],
                vec![3, 5, 7, 10],
                vec![3, 5, 7, 11],
                vec![3, 6, 7, 9],
                vec![3, 6, 7, 10],
                vec![3, 6, 7, 11],
            ],
        ),
        (vec![4], vec![vec![4, 5, 7, 8], vec![4, 6, 7, 8]]),
        (vec![1, 4], vec![vec![1, 4, 7, 8]]),
    ]
}

fn blocks_b() -> Blocks {
    vec![
        (vec![], vec![vec![5, 6, 7], vec![5, 6, 8], vec![5, 6, 9]]),
        (vec![1], vec![vec![1, 6, 7], vec![1, 6, 8], vec![1, 6, 9]]),
        (vec![2], vec![vec![2, 5, 7], vec![2, 5, 8], vec![2, 5, 9]]),
        (vec![3], vec![vec![3, 6, 7], vec![3, 6, 8], vec![3, 6, 9]]),
        (vec![4], vec![vec![4, 5, 6]]),
        (vec![1, 4], vec![vec![1, 4, 6]]),
    ]
}

fn blocks_c() -> Blocks {
    vec![
        (vec![], vec![vec![5, 6], vec![5, 7]]),
        (vec![1], vec![vec![1, 6], vec![1, 7]]),
        (vec![2], vec![vec![2, 6], vec![2, 7]]),
        (vec![3], vec![vec![3, 6], vec![3, 7]]),
        (vec![4], vec![vec![4, 5]]),
        (vec![1, 4], vec![vec![1, 4]]),
    ]
}

fn spec_sample() -> Vec<HybridSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(SPEC_SEED);
    (0..SPEC_CASES)
        .map(|_| random_spec(&mut rng, 7, 4, 3))
        .collect()
}

#[test]
fn ac01_example_a_blocks() {
    let start = Instant::now();
    let spec = spec_from_json(&fixture("example_a.json")).unwrap();
    let (ok, detail) = matches_blocks(&spec, &blocks_a());
    let elapsed = start.elapsed();
    report(
        "AC1",
        "example A facet blocks",
        ok && elapsed < Duration::from_secs(1),
        format!("{detail}, {elapsed:?}"),
    );
}

#[test]
fn ac02_example_b_and_c_blocks() {
    let start = Instant::now();
    let b = spec_from_json(&fixture("example_b.json")).unwrap();
    let c = spec_from_json(&fixture("example_c.json")).unwrap();
    let (ok_b, detail_b) = matches_blocks(&b, &blocks_b());
    let (ok_c, detail_c) = matches_blocks(&c, &blocks_c());
    let elapsed = start.elapsed();
    report(
        "AC2",
        "example B and C facet blocks",
        ok_b && ok_c
            && b.facets().len() == 14
            && c.facets().len() == 10
            && elapsed < Duration::from_secs(1),
        format!("B: {detail_b}; C: {detail_c}; {elapsed:?}"),
    );
}

#[test]
fn ac03_purity_of_random_hybrids() {
    let mut failures = 0;
    for spec in spec_sample() {
        let complex = SimplicialComplex::independence_complex(&spec.build());
        let r = spec.r();
        let ok = complex.is_pure()
            && complex.dimension() == r as isize - 1
            && complex.facets().iter().all(|f| f.len() == r);
        failures += usize::from(!ok);
    }
    report(
        "AC3",
        "independence complex pure of dimension r-1",
        failures == 0,
        format!("{SPEC_CASES} specs, {failures} failures"),
    );
}

#[test]
fn ac04_canonical_order_certificates() {
    let start = Instant::now();
    let mut failures = 0;
    let mut pairs = 0;
    for spec in spec_sample() {
        let ok = match spec.canonical_shelling_order() {
            Ok((complex, cert)) => {
                pairs += cert.witnesses.len();
                let recheck = matches!(
                    is_shelling_order(&complex, &cert.order),
                    Ok(ShellingCheck::Valid(_))
                );
                let max_facet = complex.facets().iter().map(|f| f.len()).max().unwrap_or(0);
                recheck && cert.verify(&complex).is_ok() && max_facet == spec.r()
            }
            Err(_) => false,
        };
        failures += usize::from(!ok);
    }
    let elapsed = start.elapsed();
    report(
        "AC4",
        "canonical order re-verifies as a shelling",
        failures == 0 && elapsed < Duration::from_secs(60),
        format!("{SPEC_CASES} specs, {pairs} witnessed pairs, {failures} failures, {elapsed:?}"),
    );
}

#[test]
fn ac05_facet_oracle_equivalence() {
    let mut failures = 0;
    for spec in spec_sample() {
        let mine: BTreeSet<VertexSet> = spec.facets().into_iter().collect();
        let brute: BTreeSet<VertexSet> = oracle::maximal_independent_sets(&spec.build())
            .into_iter()
            .collect();
        let fast: BTreeSet<VertexSet> = spec
            .build()
            .maximal_independent_sets()
            .into_iter()
            .collect();
        failures += usize::from(mine != brute || mine != fast);
    }
    report(
        "AC5",
        "block facets equal maximal independent sets",
        failures == 0,
        format!("{SPEC_CASES} specs, {failures} failures"),
    );
}

#[test]
fn ac06_whiskering() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let spec = HybridSpec::whisker(&g);
        let built = spec.build();
        let shells = spec
            .canonical_shelling_order()
            .map(|(c, cert)| cert.verify(&c).is_ok())
            .unwrap_or(false);
        let covers = oracle::minimal_vertex_covers(&built);
        let unmixed = built.is_unmixed() && covers.iter().all(|c| c.len() == n as usize);
        failures += usize::from(!(shells && unmixed));
    }
    report(
        "AC6",
        "whiskered graphs shell and are unmixed",
        failures == 0,
        format!("100 graphs, {failures} failures"),
    );
}

#[test]
fn ac07_clique_whiskering() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_chordal_graph(&mut rng, n);
        let partition = random_clique_partition(&mut rng, &g);
        let ok = HybridSpec::clique_whisker(&g, partition)
            .and_then(|s| s.canonical_shelling_order())
            .map(|(c, cert)| cert.verify(&c).is_ok())
            .unwrap_or(false);
        failures += usize::from(!ok);
    }
    report(
        "AC7",
        "clique-whiskered chordal graphs shell",
        failures == 0,
        format!("50 graphs, {failures} failures"),
    );
}

#[test]
fn ac08_chordal_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = 0;
    let mut cm = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=9);
        let g = random_chordal_graph(&mut rng, n);
        let report = chordal_cm_check(&g, DEFAULT_BUDGET).unwrap();
        let unmixed = oracle::is_unmixed(&g);
        let partition = report.free_facet_partition.is_some();
        let hybrid = recognize_hybrid(&g).is_some();
        cm += usize::from(partition);
        let ok = report.chordal
            && unmixed == partition
            && partition == hybrid
            && report.conditions_agree == Some(true);
        failures += usize::from(!ok);
    }
    report(
        "AC8",
        "unmixed = free-facet partition = hybrid on chordal graphs",
        failures == 0 && cm > 0 && cm < 100,
        format!("100 graphs ({cm} CM), {failures} disagreements"),
    );
}

#[test]
fn ac09_five_cycle() {
    let c5 = Graph::cycle(5);
    let not_hybrid = recognize_hybrid(&c5).is_none();
    let unmixed = c5.is_unmixed();
    let complex = SimplicialComplex::independence_complex(&c5);
    let shelled = match find_shelling(&complex, DEFAULT_BUDGET).unwrap() {
        ShellingSearch::Found(cert) => cert.verify(&complex).is_ok(),
        _ => false,
    };
    let verdict = chordal_cm_check(&c5, DEFAULT_BUDGET).unwrap().verdict;
    report(
        "AC9",
        "5-cycle: not hybrid, unmixed, shellable",
        not_hybrid && unmixed && shelled && verdict.is_cohen_macaulay(),
        format!(
            "hybrid={}, unmixed={unmixed}, shelling={shelled}, verdict={verdict:?}",
            !not_hybrid
        ),
    );
}

#[test]
fn ac10_recognition_oracle() {
    let start = Instant::now();
    let mut graphs = 0;
    let mut disagreements = 0;
    let mut hybrids = 0;
    for n in 0..=6 {
        for g in oracle::all_labelled_graphs(n) {
            graphs += 1;
            let found = recognize_hybrid(&g);
            let round_trip = found.as_ref().is_none_or(|d| d.build() == g);
            let by_partition = oracle::is_hybrid_by_partition(&g);
            let mut agree = round_trip && found.is_some() == by_partition;
            if n <= 5 {
                agree &= by_partition == oracle::is_hybrid_by_definition(&g);
            }
            hybrids += usize::from(found.is_some());
            disagreements += usize::from(!agree);
        }
    }
    let elapsed = start.elapsed();
    report(
        "AC10",
        "recognition agrees with brute force on all labelled graphs, n <= 6",
        disagreements == 0 && elapsed < Duration::from_secs(600),
        format!("{graphs} graphs ({hybrids} hybrid), {disagreements} disagreements, {elapsed:?}"),
    );
}

#[test]
fn ac11_stanley_reisner_correspondence() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures = 0;
    for _ in 0..500 {
        let n = rng.gen_range(0..=6);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let complex = SimplicialComplex::independence_complex(&g);
        let gens = complex.stanley_reisner_generators();
        let ok = gens == MonomialGenerators::edge_ideal(&g)
            && gens == MonomialGenerators::new(oracle::minimal_non_faces(&complex));
        failures += usize::from(!ok);
    }
    report(
        "AC11",
        "edge ideal = Stanley-Reisner ideal of the independence complex",
        failures == 0,
        format!("500 graphs, {failures} failures"),
    );
}
