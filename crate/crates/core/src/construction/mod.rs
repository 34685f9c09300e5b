//! The lower-bound construction: digit-indexed `X_i`/`Y_i` blocks joined
//! completely off the diagonal, plus `st` short odd-path gadgets `Z_{p,q}`
//! whose ends attach to the blocks sharing digit `q` in position `p`.

mod alpha;
mod bounds;
mod layout;
mod member;

pub use alpha::{big_integer_root, integer_root, Alpha};
pub use bounds::{edge_bound, EdgeBound};
pub use layout::{digit, plan_layout, ConstructionLayout, DigitParams, VertexClass};
pub use member::{
    build_min_member, certify_structure, specified_edge_count, z_sides, Certificate,
    ConstructionResult, FactCheck, Witness, FACT_BIPARTITE, FACT_ENDPOINTS, FACT_INDEPENDENT,
    FACT_MIDDLE_DEGREE, FACT_Z_PATHS,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid digit parameters t={t}, s={s}")]
    InvalidDigitParams { t: u64, s: u32 },
    #[error("digit({x}, {p}) out of range for base {t} with {s} digits")]
    DigitOutOfRange { x: u64, p: u32, t: u64, s: u32 },
    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible layout: {inequality}")]
    Infeasible { inequality: String },
}

/// Evaluates the edge lower bound on a construction member.
pub fn edge_bound_check(result: &ConstructionResult, edges: u64) -> EdgeBound {
    let l = &result.layout;
    edge_bound(edges, l.n as u64, l.s as u32, l.k as u32, l.alpha)
}
