//! The vertex-deletion pipeline that turns the `(U, V, T)` partition of a
//! maximal `F_{s,k}`-free graph into an induced complete bipartite core.
//!
//! Every non-edge `xy` between `U` and `V` has a witness copy of `F_{s,k}` in
//! `G + xy`. The copy's neighbors of `x` and `y` inside `T` (the anchors)
//! define candidate sets `X ⊆ U'`, `Y ⊆ V'` of common neighbors; the smaller
//! one is deleted. Non-edges are handled in class order: path–path, then
//! hub–hub, then hub–path with a fully anchored hub, then the rest.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::biclique::{BicliqueResult, PartitionUVT, Side};
use crate::construction::Alpha;
use crate::freeness::{Detector, FreenessError, WitnessCopy};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone)]
pub enum StabilityError {
    #[error(transparent)]
    Freeness(#[from] FreenessError),
    #[error("adding {0}-{1} creates no copy of the pattern: the input is not maximal")]
    NotMaximal(usize, usize),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("probe {0}-{1} must join U to V and be a non-edge")]
    BadProbe(usize, usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Position of `x ∈ U` and `y ∈ V` in the witness copy created by `xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OmegaClass {
    /// Both are path vertices.
    Omega1,
    /// They are the two hubs.
    Omega2,
    /// `x` is a hub with all `s` path neighbors in `T`.
    Omega31,
    /// `y` is a hub with all `s` path neighbors in `T`.
    Omega32,
    /// `x` is a hub with at most `s - 1` path neighbors in `T`.
    Omega33,
    /// `y` is a hub with at most `s - 1` path neighbors in `T`.
    Omega34,
}

impl OmegaClass {
    /// Processing phase, 0-based.
    pub fn phase(self) -> usize {
        match self {
            OmegaClass::Omega1 => 0,
            OmegaClass::Omega2 => 1,
            OmegaClass::Omega31 | OmegaClass::Omega32 => 2,
            OmegaClass::Omega33 | OmegaClass::Omega34 => 3,
        }
    }
}

pub const PHASES: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub x: usize,
    pub y: usize,
    pub class: OmegaClass,
    pub witness: WitnessCopy,
    /// `N_F(x) ∩ T` in the witness.
    pub x_anchors: Vec<usize>,
    /// `N_F(y) ∩ T` in the witness.
    pub y_anchors: Vec<usize>,
}

impl Classification {
    /// Both `x` and `y` have a witness neighbor in `T`.
    pub fn endpoints_touch_t(&self) -> bool {
        !self.x_anchors.is_empty() && !self.y_anchors.is_empty()
    }
}

fn classify_with(
    det: &Detector,
    g: &Graph,
    part: &PartitionUVT,
    x: usize,
    y: usize,
) -> Result<Classification, StabilityError> {
    if !part.u.contains(x) || !part.v.contains(y) || g.has_edge(x, y) {
        return Err(StabilityError::BadProbe(x, y));
    }
    let witness = det
        .find_using_edge(g, x, y)?
        .ok_or(StabilityError::NotMaximal(x, y))?;
    let s = det.params().s;
    let anchors = |v: usize| -> Vec<usize> {
        let mut a: Vec<usize> = witness
            .neighbors_of(v)
            .into_iter()
            .filter(|&w| part.t.contains(w))
            .collect();
        a.sort_unstable();
        a
    };
    let (x_anchors, y_anchors) = (anchors(x), anchors(y));
    let is_hub = |v: usize| matches!(witness.preimage(v), Some(0) | Some(1));
    let class = match (is_hub(x), is_hub(y)) {
        (false, false) => OmegaClass::Omega1,
        (true, true) => OmegaClass::Omega2,
        (true, false) if x_anchors.len() == s => OmegaClass::Omega31,
        (true, false) => OmegaClass::Omega33,
        (false, true) if y_anchors.len() == s => OmegaClass::Omega32,
        (false, true) => OmegaClass::Omega34,
    };
    Ok(Classification {
        x,
        y,
        class,
        witness,
        x_anchors,
        y_anchors,
    })
}

/// Classifies the non-edge `xy` (`x ∈ U`, `y ∈ V`) by the first witness
/// copy found in `G + xy`.
pub fn classify_non_edge(
    g: &Graph,
    part: &PartitionUVT,
    x: usize,
    y: usize,
    s: usize,
    k: usize,
) -> Result<Classification, StabilityError> {
    classify_with(&Detector::new(s, k)?, g, part, x, y)
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletionStep {
    pub probe: (usize, usize),
    pub class: OmegaClass,
    pub x_anchors: Vec<usize>,
    pub y_anchors: Vec<usize>,
    pub x_candidates: usize,
    pub y_candidates: usize,
    pub deleted_side: Side,
    pub deleted: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletionTrace {
    pub steps: Vec<DeletionStep>,
    pub deleted_total: usize,
    /// Non-edges classified.
    pub omega_size: usize,
    /// Classified non-edges per class, in declaration order.
    pub class_counts: [usize; 6],
    /// Witnesses in which `x` or `y` has no neighbor in `T`.
    pub t_contact_violations: usize,
}

impl DeletionTrace {
    /// Deleted sets are pairwise disjoint and avoid `keep`.
    pub fn is_disjoint_from(&self, keep: &VertexSet) -> bool {
        let mut seen = keep.clone();
        self.steps
            .iter()
            .flat_map(|s| s.deleted.iter())
            .all(|&v| seen.insert(v))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilityOutcome {
    pub core: BicliqueResult,
    pub trace: DeletionTrace,
}

fn class_index(c: OmegaClass) -> usize {
    c as usize
}

fn common_neighbors(g: &Graph, anchors: &[usize], within: &VertexSet, fallback: usize) -> VertexSet {
    if anchors.is_empty() {
        return VertexSet::from_vertices(within.universe(), [fallback]);
    }
    let mut set = within.clone();
    for &a in anchors {
        set.intersect_with(g.neighbors(a));
    }
    set
}

/// Runs the deletion pipeline on a maximal `F_{s,k}`-free graph.
pub fn deletion_pipeline(
    g: &Graph,
    part: &PartitionUVT,
    s: usize,
    k: usize,
) -> Result<StabilityOutcome, StabilityError> {
    let det = Detector::new(s, k)?;
    part.validate(g).map_err(StabilityError::Partition)?;

    let omega = g
        .non_edges_between(&part.u, &part.v)
        .map_err(|e| StabilityError::Partition(e.to_string()))?;
    let classified: Vec<Classification> = omega
        .par_iter()
        .map(|&(x, y)| classify_with(&det, g, part, x, y))
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<_, _>>()?;

    let mut class_counts = [0; 6];
    for c in &classified {
        class_counts[class_index(c.class)] += 1;
    }
    let t_contact_violations = classified.iter().filter(|c| !c.endpoints_touch_t()).count();

    let mut u = part.u.clone();
    let mut v = part.v.clone();
    let mut steps = Vec::new();
    for phase in 0..PHASES {
        loop {
            let next = classified
                .iter()
                .find(|c| c.class.phase() == phase && u.contains(c.x) && v.contains(c.y));
            let Some(c) = next else { break };
            let xs = common_neighbors(g, &c.x_anchors, &u, c.x);
            let ys = common_neighbors(g, &c.y_anchors, &v, c.y);
            if !xs.contains(c.x) || !ys.contains(c.y) {
                return Err(StabilityError::Inconsistent(format!(
                    "candidate sets for {}-{} miss the probe ends",
                    c.x, c.y
                )));
            }
            let (side, del) = if xs.len() <= ys.len() {
                (Side::U, xs.clone())
            } else {
                (Side::V, ys.clone())
            };
            match side {
                Side::U => u.difference_with(&del),
                Side::V => v.difference_with(&del),
            }
            steps.push(DeletionStep {
                probe: (c.x, c.y),
                class: c.class,
                x_anchors: c.x_anchors.clone(),
                y_anchors: c.y_anchors.clone(),
                x_candidates: xs.len(),
                y_candidates: ys.len(),
                deleted_side: side,
                deleted: del.to_vec(),
            });
        }
    }

    if let Some(&(x, y)) = g.non_edges_between(&u, &v).unwrap().first() {
        return Err(StabilityError::Inconsistent(format!("non-edge {x}-{y} survived")));
    }
    let core = BicliqueResult { a: u, b: v };
    core.validate(g).map_err(StabilityError::Inconsistent)?;
    let deleted_total = steps.iter().map(|s| s.deleted.len()).sum();
    Ok(StabilityOutcome {
        core,
        trace: DeletionTrace {
            steps,
            deleted_total,
            omega_size: classified.len(),
            class_counts,
            t_contact_violations,
        },
    })
}

/// Deleted total against `4·(12sk)^{s+3}·α·n`, in exact arithmetic.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub deleted: usize,
    pub bound: String,
    pub within_bound: bool,
    /// `bound - deleted`.
    pub margin: String,
    /// The bound is at least `n`, so it constrains nothing.
    pub vacuous: bool,
}

pub fn bound_report(trace: &DeletionTrace, n: usize, s: usize, k: usize, alpha: Alpha) -> BoundReport {
    let base = BigInt::from(12u64 * s as u64 * k as u64);
    let bound = BigRational::from_integer(4 * base.pow(s as u32 + 3) * BigInt::from(n))
        * alpha.to_big();
    let deleted = BigRational::from_integer(BigInt::from(trace.deleted_total));
    let margin = &bound - &deleted;
    BoundReport {
        deleted: trace.deleted_total,
        within_bound: !margin.is_negative(),
        vacuous: bound >= BigRational::from_integer(BigInt::from(n)),
        bound: bound.to_string(),
        margin: margin.to_string(),
    }
}
