//! Shelling orders: verification with explicit witnesses, and search.
//!
//! An order `F_1, ..., F_t` is a shelling iff for every `j < i` there is a
//! vertex `x ∈ F_i \ F_j` and an index `k < i` with `F_i \ F_k = {x}`.
//! Certificates store one such `(x, k)` for every pair so they can be
//! re-checked without searching again.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};

/// Default node budget for [`find_shelling`].
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Witness for the pair `(i, j)`, `j < i`. Positions are 1-based places in
/// the shelling order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub x: Vertex,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    /// Indices into the complex's canonical facet list.
    pub order: Vec<usize>,
    /// The facets in shelling order.
    pub facets: Vec<VertexSet>,
    /// One witness per pair, sorted by `(i, j)`.
    pub witnesses: Vec<Witness>,
}

/// Outcome of checking a proposed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingCheck {
    Valid(ShellingCertificate),
    /// First failing pair, 1-based positions.
    Violation {
        i: usize,
        j: usize,
    },
}

impl ShellingCheck {
    pub fn certificate(self) -> Option<ShellingCertificate> {
        match self {
            ShellingCheck::Valid(cert) => Some(cert),
            ShellingCheck::Violation { .. } => None,
        }
    }
}

/// Outcome of [`find_shelling`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingSearch {
    Found(ShellingCertificate),
    /// The search space was exhausted without finding a shelling.
    NotShellable,
    /// The node budget ran out before the search finished.
    BudgetExhausted {
        nodes: u64,
    },
}

/// Checks `order` (a permutation of facet indices) against the shelling
/// condition and builds the full witness table on success.
pub fn is_shelling_order(c: &SimplicialComplex, order: &[usize]) -> Result<ShellingCheck> {
    let t = c.n_facets();
    check_permutation(order, t)?;
    let facets: Vec<&VertexSet> = order.iter().map(|&idx| &c.facets()[idx]).collect();

    let mut witnesses = Vec::with_capacity(t * t.saturating_sub(1) / 2);
    for i in 1..t {
        let fi = facets[i];
        // For each x, the first earlier facet k with F_i \ F_k = {x}.
        let mut ridge: Vec<(Vertex, usize)> = Vec::new();
        for (k, fk) in facets[..i].iter().enumerate() {
            let mut diff = fi.difference(fk);
            if let (Some(&x), None) = (diff.next(), diff.next()) {
                if !ridge.iter().any(|&(y, _)| y == x) {
                    ridge.push((x, k));
                }
            }
        }
        for (j, fj) in facets[..i].iter().enumerate() {
            let found = fi
                .difference(fj)
                .find_map(|x| ridge.iter().find(|&&(y, _)| y == *x));
            match found {
                Some(&(x, k)) => witnesses.push(Witness {
                    i: i + 1,
                    j: j + 1,
                    x,
                    k: k + 1,
                }),
                None => return Ok(ShellingCheck::Violation { i: i + 1, j: j + 1 }),
            }
        }
    }
    Ok(ShellingCheck::Valid(ShellingCertificate {
        order: order.to_vec(),
        facets: facets.into_iter().cloned().collect(),
        witnesses,
    }))
}

fn check_permutation(order: &[usize], t: usize) -> Result<()> {
    if order.len() != t {
        return Err(Error::NotAPermutation(t));
    }
    let mut seen = vec![false; t];
    for &idx in order {
        if idx >= t || seen[idx] {
            return Err(Error::NotAPermutation(t));
        }
        seen[idx] = true;
    }
    Ok(())
}

impl ShellingCertificate {
    /// Re-checks the certificate against `c` using only the stored witnesses.
    pub fn verify(&self, c: &SimplicialComplex) -> Result<()> {
        let t = c.n_facets();
        check_permutation(&self.order, t)?;
        let mismatch = |msg: String| Err(Error::CertificateMismatch(msg));
        if self.facets.len() != t {
            return mismatch(format!(
                "{} facets listed, complex has {t}",
                self.facets.len()
            ));
        }
        for (pos, (&idx, f)) in self.order.iter().zip(&self.facets).enumerate() {
            if &c.facets()[idx] != f {
                return mismatch(format!("facet at position {} is not facet {idx}", pos + 1));
            }
        }
        let expected = t * t.saturating_sub(1) / 2;
        if self.witnesses.len() != expected {
            return mismatch(format!(
                "{} witnesses, expected {expected}",
                self.witnesses.len()
            ));
        }
        let mut pairs = self.witnesses.iter();
        for i in 2..=t {
            for j in 1..i {
                let w = pairs.next().expect("count checked above");
                if (w.i, w.j) != (i, j) {
                    return mismatch(format!("witness for ({i}, {j}) missing"));
                }
                if w.k == 0 || w.k >= i {
                    return mismatch(format!("witness ({i}, {j}) has k = {} not below i", w.k));
                }
                let fi = &self.facets[i - 1];
                if !fi.contains(&w.x) || self.facets[j - 1].contains(&w.x) {
                    return mismatch(format!("witness ({i}, {j}): x = {} not in F_i \\ F_j", w.x));
                }
                let diff: Vec<&Vertex> = fi.difference(&self.facets[w.k - 1]).collect();
                if diff != [&w.x] {
                    return mismatch(format!("witness ({i}, {j}): F_i \\ F_k is not {{{}}}", w.x));
                }
            }
        }
        Ok(())
    }
}

/// Backtracking search for a shelling of a pure complex.
///
/// Facets are tried in canonical order. Whether a facet may be appended
/// depends only on the set of facets already placed, so dead sets are
/// memoised. Each expanded set counts as one node against `budget`.
pub fn find_shelling(c: &SimplicialComplex, budget: u64) -> Result<ShellingSearch> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let t = c.n_facets();
    let facets = c.facets();
    // ridge[i][k] = Some(x) when F_i \ F_k = {x}
    let mut ridge = vec![vec![None; t]; t];
    // diff[i][j] as a vertex list
    let mut diff: Vec<Vec<Vec<Vertex>>> = vec![vec![Vec::new(); t]; t];
    for i in 0..t {
        for k in 0..t {
            if i == k {
                continue;
            }
            let d: Vec<Vertex> = facets[i].difference(&facets[k]).copied().collect();
            if d.len() == 1 {
                ridge[i][k] = Some(d[0]);
            }
            diff[i][k] = d;
        }
    }

    let mut search = Search {
        t,
        ridge: &ridge,
        diff: &diff,
        dead: HashSet::new(),
        nodes: 0,
        budget,
        order: Vec::with_capacity(t),
    };
    let mut placed = FixedBitSet::with_capacity(t);
    match search.extend(&mut placed) {
        Step::Done => {
            let order = search.order.clone();
            match is_shelling_order(c, &order)? {
                ShellingCheck::Valid(cert) => Ok(ShellingSearch::Found(cert)),
                ShellingCheck::Violation { i, j } => {
                    unreachable!("search produced an order failing at ({i}, {j})")
                }
            }
        }
        Step::Dead => Ok(ShellingSearch::NotShellable),
        Step::OutOfBudget => Ok(ShellingSearch::BudgetExhausted {
            nodes: search.nodes,
        }),
    }
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

struct Search<'a> {
    t: usize,
    ridge: &'a [Vec<Option<Vertex>>],
    diff: &'a [Vec<Vec<Vertex>>],
    dead: HashSet<FixedBitSet>,
    nodes: u64,
    budget: u64,
    order: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, placed: &mut FixedBitSet) -> Step {
        if self.order.len() == self.t {
            return Step::Done;
        }
        if self.dead.contains(placed) {
            return Step::Dead;
        }
        if self.nodes >= self.budget {
            return Step::OutOfBudget;
        }
        self.nodes += 1;
        for f in 0..self.t {
            if placed.contains(f) || !self.fits(f, placed) {
                continue;
            }
            placed.insert(f);
            self.order.push(f);
            match self.extend(placed) {
                Step::Dead => {}
                other => return other,
            }
            self.order.pop();
            placed.set(f, false);
        }
        self.dead.insert(placed.clone());
        Step::Dead
    }

    fn fits(&self, f: usize, placed: &FixedBitSet) -> bool {
        let reachable: Vec<Vertex> = placed.ones().filter_map(|k| self.ridge[f][k]).collect();
        placed
            .ones()
            .all(|j| self.diff[f][j].iter().any(|x| reachable.contains(x)))
    }
}

/// How a Cohen–Macaulay verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CmVerdict {
    CohenMacaulay {
        via: String,
    },
    NotCohenMacaulay {
        reason: String,
    },
    Undetermined {
        reason: String,
        budget_exhausted: bool,
    },
}

impl CmVerdict {
    pub fn is_cohen_macaulay(&self) -> bool {
        matches!(self, CmVerdict::CohenMacaulay { .. })
    }
}

/// Cohen–Macaulay status of `c` as far as shellability can tell.
///
/// Pure and shellable implies Cohen–Macaulay. Non-pure complexes are never
/// Cohen–Macaulay. Any other outcome is undetermined.
pub fn cm_via_shellability(
    c: &SimplicialComplex,
    budget: u64,
) -> Result<(CmVerdict, Option<ShellingCertificate>)> {
    if !c.is_pure() {
        return Ok((
            CmVerdict::NotCohenMacaulay {
                reason: "complex is not pure".into(),
            },
            None,
        ));
    }
    Ok(match find_shelling(c, budget)? {
        ShellingSearch::Found(cert) => (
            CmVerdict::CohenMacaulay {
                via: "shellability".into(),
            },
            Some(cert),
        ),
        ShellingSearch::NotShellable => (
            CmVerdict::Undetermined {
                reason: "pure but not shellable; shellability is only sufficient".into(),
                budget_exhausted: false,
            },
            None,
        ),
        ShellingSearch::BudgetExhausted { nodes } => (
            CmVerdict::Undetermined {
                reason: format!("shelling search budget exhausted after {nodes} nodes"),
                budget_exhausted: true,
            },
            None,
        ),
    })
}
