//! Cohen–Macaulay test for chordal graphs.
//!
//! For a chordal graph the following coincide: Cohen–Macaulay, unmixed,
//! the vertex set is the disjoint union of the clique-complex facets that
//! have a free vertex, and hybrid. The report computes the last three
//! independently so callers can see that they agree. Non-chordal graphs
//! fall back to a shelling search, which can only confirm the property.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::hybrid::{recognize_hybrid, HybridDecomposition};
use crate::shelling::{cm_via_shellability, CmVerdict, ShellingCertificate};

#[derive(Clone, Debug, Serialize)]
pub struct FreeFacet {
    pub facet: VertexSet,
    pub free_vertices: VertexSet,
}

#[derive(Clone, Debug)]
pub struct ChordalReport {
    pub chordal: bool,
    pub elimination_order: Option<Vec<Vertex>>,
    pub unmixed: bool,
    /// Clique-complex facets with at least one free vertex (chordal only).
    pub free_facets: Vec<FreeFacet>,
    /// The free facets, when they partition the vertex set (chordal only).
    pub free_facet_partition: Option<Vec<VertexSet>>,
    pub hybrid: Option<HybridDecomposition>,
    /// Whether unmixedness, the partition condition and hybrid recognition
    /// agree. `None` for non-chordal graphs, where they need not.
    pub conditions_agree: Option<bool>,
    pub verdict: CmVerdict,
    /// Shelling found by the non-chordal fallback.
    pub certificate: Option<ShellingCertificate>,
}

pub fn chordal_cm_check(g: &Graph, budget: u64) -> Result<ChordalReport> {
    let elimination_order = g.perfect_elimination_order();
    let chordal = elimination_order.is_some();
    let unmixed = g.is_unmixed();
    let hybrid = recognize_hybrid(g);

    if !chordal {
        let complex = SimplicialComplex::independence_complex(g);
        let (mut verdict, mut certificate) = cm_via_shellability(&complex, budget)?;
        if certificate.is_none() {
            if let Some(dec) = &hybrid {
                let (_, cert) = dec.canonical_shelling_order()?;
                verdict = CmVerdict::CohenMacaulay {
                    via: "canonical shelling of a hybrid decomposition".into(),
                };
                certificate = Some(cert);
            }
        }
        return Ok(ChordalReport {
            chordal,
            elimination_order,
            unmixed,
            free_facets: Vec::new(),
            free_facet_partition: None,
            hybrid,
            conditions_agree: None,
            verdict,
            certificate,
        });
    }

    let cliques = SimplicialComplex::clique_complex(g);
    let free_facets: Vec<FreeFacet> = cliques
        .facets()
        .iter()
        .filter_map(|f| {
            let free = cliques.free_vertices(f).expect("listed facet");
            (!free.is_empty()).then(|| FreeFacet {
                facet: f.clone(),
                free_vertices: free,
            })
        })
        .collect();
    let partitions = {
        let total: usize = free_facets.iter().map(|f| f.facet.len()).sum();
        let union: VertexSet = free_facets
            .iter()
            .flat_map(|f| f.facet.iter().copied())
            .collect();
        total == union.len() && union == g.vertex_set()
    };
    let free_facet_partition =
        partitions.then(|| free_facets.iter().map(|f| f.facet.clone()).collect());
    let conditions_agree = unmixed == partitions && partitions == hybrid.is_some();
    let verdict = if partitions {
        CmVerdict::CohenMacaulay {
            via: "chordal: free-vertex facets partition the vertex set".into(),
        }
    } else {
        CmVerdict::NotCohenMacaulay {
            reason: "chordal: free-vertex facets do not partition the vertex set".into(),
        }
    };
    Ok(ChordalReport {
        chordal,
        elimination_order,
        unmixed,
        free_facets,
        free_facet_partition,
        hybrid,
        conditions_agree: Some(conditions_agree),
        verdict,
        certificate: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hybrid::HybridSpec;
    use crate::shelling::DEFAULT_BUDGET;

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn diamond_is_not_cm() {
        let g = Graph::new(&[1, 2, 3, 4], &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let report = chordal_cm_check(&g, DEFAULT_BUDGET).unwrap();
        assert!(report.chordal);
        assert!(!report.unmixed);
        let facets: Vec<_> = report.free_facets.iter().map(|f| f.facet.clone()).collect();
        assert_eq!(facets, vec![set(&[1, 2, 3]), set(&[2, 3, 4])]);
        assert_eq!(report.free_facets[0].free_vertices, set(&[1]));
        assert_eq!(report.free_facets[1].free_vertices, set(&[4]));
        assert!(report.free_facet_partition.is_none());
        assert!(report.hybrid.is_none());
        assert_eq!(report.conditions_agree, Some(true));
        assert!(!report.verdict.is_cohen_macaulay());
    }

    #[test]
    fn whiskered_four_cycle_uses_fallback() {
        let g = HybridSpec::whisker(&Graph::cycle(4)).build();
        let report = chordal_cm_check(&g, DEFAULT_BUDGET).unwrap();
        assert!(!report.chordal);
        assert_eq!(report.conditions_agree, None);
        assert!(report.verdict.is_cohen_macaulay());
        let cert = report.certificate.unwrap();
        cert.verify(&SimplicialComplex::independence_complex(&g))
            .unwrap();
    }

    #[test]
    fn complete_graph_is_cm() {
        let g = Graph::complete(&[1, 2, 3, 4]).unwrap();
        let report = chordal_cm_check(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.free_facet_partition, Some(vec![set(&[1, 2, 3, 4])]));
        assert!(report.verdict.is_cohen_macaulay());
        assert_eq!(report.conditions_agree, Some(true));
    }

    #[test]
    fn five_cycle_is_cm_via_shelling() {
        let report = chordal_cm_check(&Graph::cycle(5), DEFAULT_BUDGET).unwrap();
        assert!(!report.chordal);
        assert!(report.hybrid.is_none());
        assert!(report.unmixed);
        assert_eq!(
            report.verdict,
            CmVerdict::CohenMacaulay {
                via: "shellability".into()
            }
        );
    }

    #[test]
    fn empty_graph_is_vacuously_cm() {
        let report = chordal_cm_check(&Graph::empty(), DEFAULT_BUDGET).unwrap();
        assert!(report.chordal);
        assert_eq!(report.conditions_agree, Some(true));
        assert!(report.verdict.is_cohen_macaulay());
    }
}
