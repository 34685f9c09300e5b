//! The pattern family `F_{s,k}`: `s` odd cycles `C_{2k+1}` glued along a
//! common edge `ab`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("invalid pattern parameters s={s}, k={k}: both must be at least 1")]
    InvalidParams { s: usize, k: usize },
    #[error("graph of order {0} exceeds the exact chromatic number cap of {CHROMATIC_MAX_ORDER}")]
    TooLarge(usize),
}

/// Pattern parameters `(s, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FskParams {
    pub s: usize,
    pub k: usize,
}

impl FskParams {
    pub fn new(s: usize, k: usize) -> Result<Self, PatternError> {
        if s == 0 || k == 0 {
            return Err(PatternError::InvalidParams { s, k });
        }
        Ok(FskParams { s, k })
    }

    /// Number of vertices, `s(2k-1) + 2`.
    pub fn order(&self) -> usize {
        self.s * (2 * self.k - 1) + 2
    }

    /// Number of edges, `2ks + 1`.
    pub fn size(&self) -> usize {
        2 * self.k * self.s + 1
    }

    /// Length (in edges) of each `a`–`b` path in `F - ab`.
    pub fn path_length(&self) -> usize {
        2 * self.k
    }

    /// Interior vertices per path.
    pub fn interior(&self) -> usize {
        2 * self.k - 1
    }
}

/// A labelled copy of `F_{s,k}`. Vertex `0` is the hub `a`, vertex `1` the
/// hub `b`, and path `i` occupies `2 + i(2k-1) .. 2 + (i+1)(2k-1)` in order
/// from the `a` end.
#[derive(Clone, Debug)]
pub struct FskPattern {
    pub params: FskParams,
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
    pub paths: Vec<Vec<usize>>,
}

pub fn build_fsk(s: usize, k: usize) -> Result<FskPattern, PatternError> {
    let params = FskParams::new(s, k)?;
    let interior = params.interior();
    let mut graph = Graph::new(params.order());
    let (a, b) = (0, 1);
    graph.add_edge(a, b).unwrap();
    let mut paths = Vec::with_capacity(s);
    for i in 0..s {
        let path: Vec<usize> = (0..interior).map(|r| 2 + i * interior + r).collect();
        let mut prev = a;
        for &c in &path {
            graph.add_edge(prev, c).unwrap();
            prev = c;
        }
        graph.add_edge(prev, b).unwrap();
        paths.push(path);
    }
    Ok(FskPattern {
        params,
        graph,
        a,
        b,
        paths,
    })
}

impl FskPattern {
    /// The hub-to-hub walk `a, c_1^i, ..., c_{2k-1}^i, b` for path `i`.
    pub fn full_path(&self, i: usize) -> Vec<usize> {
        let mut p = Vec::with_capacity(self.params.path_length() + 1);
        p.push(self.a);
        p.extend_from_slice(&self.paths[i]);
        p.push(self.b);
        p
    }

    /// Checks every structural invariant of the labelled pattern.
    pub fn validate(&self) -> Result<(), String> {
        let p = self.params;
        let g = &self.graph;
        if g.order() != p.order() {
            return Err(format!("order {} != {}", g.order(), p.order()));
        }
        if g.edge_count() != p.size() {
            return Err(format!("size {} != {}", g.edge_count(), p.size()));
        }
        if !g.has_edge(self.a, self.b) {
            return Err("hub edge ab missing".into());
        }
        for hub in [self.a, self.b] {
            if g.degree(hub) != p.s + 1 {
                return Err(format!("hub {hub} has degree {}", g.degree(hub)));
            }
        }
        let mut seen = VertexSet::from_vertices(g.order(), [self.a, self.b]);
        for i in 0..p.s {
            let walk = self.full_path(i);
            if walk.len() != p.path_length() + 1 {
                return Err(format!("path {i} has wrong length"));
            }
            for w in walk.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {i} misses edge {}-{}", w[0], w[1]));
                }
            }
            for &c in &self.paths[i] {
                if !seen.insert(c) {
                    return Err(format!("vertex {c} reused across paths"));
                }
                if g.degree(c) != 2 {
                    return Err(format!("interior vertex {c} has degree {}", g.degree(c)));
                }
            }
        }
        Ok(())
    }

    /// `F - ab`.
    pub fn without_hub_edge(&self) -> Graph {
        let mut g = self.graph.clone();
        g.delete_edge(self.a, self.b).unwrap();
        g
    }
}

/// Exact chromatic number by backtracking colouring, seeded with a greedy
/// clique as lower bound.
pub fn chromatic_number(g: &Graph) -> Result<usize, PatternError> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(PatternError::TooLarge(n));
    }
    if n == 0 {
        return Ok(0);
    }
    if g.edge_count() == 0 {
        return Ok(1);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lower = clique.len().max(2);

    // Clique vertices first so their colours are fixed up front.
    let mut seq = clique.clone();
    seq.extend(order.iter().copied().filter(|v| !clique.contains(v)));

    let mut colors = vec![usize::MAX; n];
    for c in lower..=n {
        colors.iter_mut().for_each(|x| *x = usize::MAX);
        if color_with(g, &seq, 0, c, 0, &mut colors) {
            return Ok(c);
        }
    }
    unreachable!("n colours always suffice")
}

fn color_with(
    g: &Graph,
    seq: &[usize],
    idx: usize,
    limit: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == seq.len() {
        return true;
    }
    let v = seq[idx];
    // A fresh colour is interchangeable with any other fresh colour.
    let max_try = (used + 1).min(limit);
    for c in 0..max_try {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, seq, idx + 1, limit, used.max(c + 1), colors) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// `χ(F) = 3` and `χ(F - ab) = 2`.
pub fn is_color_critical_edge(p: &FskPattern) -> bool {
    let full = chromatic_number(&p.graph);
    let cut = chromatic_number(&p.without_hub_edge());
    matches!((full, cut), (Ok(3), Ok(2)))
}
