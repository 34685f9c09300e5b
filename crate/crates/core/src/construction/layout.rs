use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::{integer_root, Alpha, ConstructionError};

/// Base-`t` digit parameters with `s` digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitParams {
    pub t: u64,
    pub s: u32,
}

impl DigitParams {
    /// `t = 1` is accepted as the degenerate base in which only `0` is
    /// representable.
    pub fn new(t: u64, s: u32) -> Result<Self, ConstructionError> {
        if t == 0 || s == 0 {
            return Err(ConstructionError::InvalidDigitParams { t, s });
        }
        t.checked_pow(s)
            .ok_or(ConstructionError::InvalidDigitParams { t, s })?;
        Ok(DigitParams { t, s })
    }

    /// `t^s`.
    pub fn range(&self) -> u64 {
        self.t.pow(self.s)
    }
}

/// The `p`-th base-`t` digit of `x`, for `0 <= x < t^s`, `0 <= p < s`.
pub fn digit(x: u64, p: u32, params: DigitParams) -> Result<u64, ConstructionError> {
    if x >= params.range() || p >= params.s {
        return Err(ConstructionError::DigitOutOfRange {
            x,
            p,
            t: params.t,
            s: params.s,
        });
    }
    if params.t == 1 {
        return Ok(0);
    }
    Ok(x / params.t.pow(p) % params.t)
}

/// Class label of a vertex in the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum VertexClass {
    X { i: usize },
    Y { i: usize },
    /// `z_{p,q}^r` with `1 <= r <= 2k-1`.
    Z { p: usize, q: usize, r: usize },
}

/// Vertex partition of a construction member. `X_i`, `Y_i` for
/// `i < t^s` have `m` vertices each; `X_{t^s}`, `Y_{t^s}` split the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LayoutDocument")]
pub struct ConstructionLayout {
    pub n: usize,
    pub s: usize,
    pub k: usize,
    pub alpha: Alpha,
    pub t: usize,
    pub m: usize,
    /// `t^s`
    pub blocks: usize,
    pub class_of: Vec<VertexClass>,
    #[serde(skip)]
    x_ranges: Vec<Range<usize>>,
    #[serde(skip)]
    y_ranges: Vec<Range<usize>>,
    #[serde(skip)]
    z_start: usize,
}

pub fn plan_layout(
    n: usize,
    s: usize,
    k: usize,
    alpha: Alpha,
) -> Result<ConstructionLayout, ConstructionError> {
    if s < 2 || k < 2 {
        return Err(ConstructionError::InvalidParams(format!(
            "construction requires s >= 2 and k >= 2, got s={s}, k={k}"
        )));
    }
    if !alpha.in_unit_half() {
        return Err(ConstructionError::InvalidParams(format!(
            "alpha must satisfy 0 < alpha <= 1/2, got {alpha}"
        )));
    }
    let m = integer_root(n as u64, (s + 1) as u32) as usize;
    let t = (alpha.floor_mul(m as u64) as usize).max(1);
    let blocks = (t as u64)
        .checked_pow(s as u32)
        .filter(|&b| b <= n as u64)
        .ok_or_else(|| ConstructionError::Infeasible {
            inequality: format!("t^s = {t}^{s} must not exceed n = {n}"),
        })? as usize;

    let z_total = s * t * (2 * k - 1);
    let used = 2 * blocks * m + z_total;
    if n < used + 2 {
        return Err(ConstructionError::Infeasible {
            inequality: format!(
                "n - 2*t^s*m - s*t*(2k-1) >= 2 fails: {n} - 2*{blocks}*{m} - {s}*{t}*{} = {}",
                2 * k - 1,
                n as i64 - used as i64
            ),
        });
    }
    let residual = n - used;
    let x_last = residual.div_ceil(2);

    let mut class_of = Vec::with_capacity(n);
    let mut x_ranges = Vec::with_capacity(blocks + 1);
    let mut y_ranges = Vec::with_capacity(blocks + 1);
    for i in 0..blocks {
        x_ranges.push(class_of.len()..class_of.len() + m);
        class_of.extend(std::iter::repeat_n(VertexClass::X { i }, m));
    }
    for i in 0..blocks {
        y_ranges.push(class_of.len()..class_of.len() + m);
        class_of.extend(std::iter::repeat_n(VertexClass::Y { i }, m));
    }
    let z_start = class_of.len();
    for p in 0..s {
        for q in 0..t {
            for r in 1..2 * k {
                class_of.push(VertexClass::Z { p, q, r });
            }
        }
    }
    x_ranges.push(class_of.len()..class_of.len() + x_last);
    class_of.extend(std::iter::repeat_n(VertexClass::X { i: blocks }, x_last));
    y_ranges.push(class_of.len()..n);
    class_of.extend(std::iter::repeat_n(
        VertexClass::Y { i: blocks },
        residual - x_last,
    ));
    debug_assert_eq!(class_of.len(), n);

    Ok(ConstructionLayout {
        n,
        s,
        k,
        alpha,
        t,
        m,
        blocks,
        class_of,
        x_ranges,
        y_ranges,
        z_start,
    })
}

/// Serialized form; the layout is re-planned from its parameters and the
/// stored labels must agree with the plan.
#[derive(Deserialize)]
struct LayoutDocument {
    n: usize,
    s: usize,
    k: usize,
    alpha: Alpha,
    class_of: Vec<VertexClass>,
}

impl TryFrom<LayoutDocument> for ConstructionLayout {
    type Error = ConstructionError;

    fn try_from(doc: LayoutDocument) -> Result<Self, ConstructionError> {
        let layout = plan_layout(doc.n, doc.s, doc.k, doc.alpha)?;
        if layout.class_of != doc.class_of {
            return Err(ConstructionError::InvalidParams(
                "vertex labels disagree with the planned layout".into(),
            ));
        }
        Ok(layout)
    }
}

impl ConstructionLayout {
    pub fn digit_params(&self) -> DigitParams {
        DigitParams {
            t: self.t as u64,
            s: self.s as u32,
        }
    }

    /// `X_i`, `0 <= i <= t^s`.
    pub fn x_block(&self, i: usize) -> Range<usize> {
        self.x_ranges[i].clone()
    }

    pub fn y_block(&self, i: usize) -> Range<usize> {
        self.y_ranges[i].clone()
    }

    /// Vertex `z_{p,q}^r`.
    pub fn z_vertex(&self, p: usize, q: usize, r: usize) -> usize {
        debug_assert!(p < self.s && q < self.t && (1..2 * self.k).contains(&r));
        self.z_start + (p * self.t + q) * (2 * self.k - 1) + (r - 1)
    }

    /// The path `z_{p,q}^1 .. z_{p,q}^{2k-1}`.
    pub fn z_path(&self, p: usize, q: usize) -> Vec<usize> {
        (1..2 * self.k).map(|r| self.z_vertex(p, q, r)).collect()
    }

    /// Indices `i < t^s` whose `p`-th digit is `q`.
    pub fn digit_class(&self, p: usize, q: usize) -> Vec<usize> {
        let params = self.digit_params();
        (0..self.blocks)
            .filter(|&i| digit(i as u64, p as u32, params).unwrap() as usize == q)
            .collect()
    }

    pub fn x_vertices(&self) -> Vec<usize> {
        self.x_ranges.iter().flat_map(|r| r.clone()).collect()
    }

    pub fn y_vertices(&self) -> Vec<usize> {
        self.y_ranges.iter().flat_map(|r| r.clone()).collect()
    }

    pub fn z_vertices(&self) -> Range<usize> {
        self.z_start..self.z_start + self.s * self.t * (2 * self.k - 1)
    }

    /// `|X|`, including `X_{t^s}`.
    pub fn x_size(&self) -> usize {
        self.x_ranges.iter().map(|r| r.len()).sum()
    }

    pub fn y_size(&self) -> usize {
        self.y_ranges.iter().map(|r| r.len()).sum()
    }

    /// `t = 1`: a single digit class, so the digit structure carries no
    /// information.
    pub fn is_degenerate(&self) -> bool {
        self.t == 1
    }

    /// `n >= 8k²s²/α`, the regime in which the lower-bound argument applies.
    pub fn is_theorem_scale(&self) -> bool {
        let lhs = self.n as u128 * self.alpha.numer() as u128;
        let rhs = 8 * (self.k * self.k * self.s * self.s) as u128 * self.alpha.denom() as u128;
        lhs >= rhs
    }

    /// `n - t^s m`: every induced complete bipartite subgraph meeting both
    /// `X_{t^s}` and `Y_{t^s}` misses at least one of each `X_i`, `Y_i` pair.
    pub fn biclique_ceiling(&self) -> usize {
        self.n - self.blocks * self.m
    }
}
