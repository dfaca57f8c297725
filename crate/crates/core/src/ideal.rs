//! Macaulay2 and Singular scripts for square-free monomial ideals.
//!
//! Variable naming is fixed: a base vertex with label `i` is `x_i`, the
//! `j`-th whisker vertex of the `i`-th part is `y_{i,j}`. Concretely
//!
//! | format   | base    | whisker    |
//! |----------|---------|------------|
//! | text     | `x_i`   | `y_i_j`    |
//! | m2       | `x_i`   | `y_(i,j)`  |
//! | singular | `x(i)`  | `y(i)(j)`  |
//!
//! Ring variables and the factors of every monomial are listed in the
//! variable order (base vertices by label, then whiskers by part).

use std::str::FromStr;

use crate::complex::MonomialGenerators;
use crate::error::Error;
use crate::graph::Vertex;
use crate::hybrid::{Variable, VariableOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealFormat {
    Text,
    Macaulay2,
    Singular,
}

impl FromStr for IdealFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(IdealFormat::Text),
            "m2" | "macaulay2" => Ok(IdealFormat::Macaulay2),
            "singular" => Ok(IdealFormat::Singular),
            other => Err(Error::Parse(format!("unknown ideal format {other:?}"))),
        }
    }
}

fn name(var: Variable, format: IdealFormat) -> String {
    match (format, var) {
        (IdealFormat::Text, Variable::X(i)) | (IdealFormat::Macaulay2, Variable::X(i)) => {
            format!("x_{i}")
        }
        (IdealFormat::Text, Variable::Y(i, j)) => format!("y_{i}_{j}"),
        (IdealFormat::Macaulay2, Variable::Y(i, j)) => format!("y_({i},{j})"),
        (IdealFormat::Singular, Variable::X(i)) => format!("x({i})"),
        (IdealFormat::Singular, Variable::Y(i, j)) => format!("y({i})({j})"),
    }
}

fn monomials(gens: &MonomialGenerators, order: &VariableOrder, format: IdealFormat) -> Vec<String> {
    gens.generators()
        .iter()
        .map(|g| {
            if g.is_empty() {
                return "1".to_string();
            }
            order
                .sorted(g)
                .into_iter()
                .map(|v| name(order.variable(v), format))
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect()
}

/// Renders the ideal with generators `gens` over the ring whose variables
/// are `vertices`.
pub fn emit(
    gens: &MonomialGenerators,
    vertices: &[Vertex],
    order: &VariableOrder,
    format: IdealFormat,
) -> String {
    let mut ring: Vec<Vertex> = vertices.to_vec();
    ring.sort_by_key(|&v| order.rank(v));
    let ring: Vec<String> = ring
        .into_iter()
        .map(|v| name(order.variable(v), format))
        .collect();
    let mons = monomials(gens, order, format);
    match format {
        IdealFormat::Text => format!("{}\n", mons.join(", ")),
        IdealFormat::Macaulay2 => {
            let body = if mons.is_empty() {
                "0_R".to_string()
            } else {
                mons.join(", ")
            };
            format!("R = QQ[{}];\nI = monomialIdeal({body});\n", ring.join(", "))
        }
        IdealFormat::Singular => {
            let body = if mons.is_empty() {
                "0".to_string()
            } else {
                mons.join(", ")
            };
            format!("ring R = 0, ({}), dp;\nideal I = {body};\n", ring.join(","))
        }
    }
}
