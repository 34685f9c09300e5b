//! Exact `F_{s,k}` detection.
//!
//! `F_{s,k} - ab` is exactly `s` internally disjoint `a`–`b` paths of length
//! `2k`, so detection is a disjoint-paths search around a candidate hub edge
//! rather than general subgraph isomorphism. Probing a non-edge `xy` must
//! also consider copies in which `xy` is a path edge: the pattern has three
//! edge orbits (`ab`, `a c_1`, interior path edges) and each is tried as the
//! anchor.

mod engine;

pub(crate) use engine::PathEngine;

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::pattern::{FskParams, PatternError};

/// Exhaustive searches refuse hosts larger than this unless overridden.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Non-edges probed per parallel batch during saturation.
const SATURATION_BATCH: usize = 64;

#[derive(Debug, Error, Clone)]
pub enum FreenessError {
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("host of order {order} exceeds the exhaustive search limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("input already contains F_{{{},{}}} (hub edge {:?})", .0.params.s, .0.params.k, .0.hub_edge)]
    NotFree(Box<WitnessCopy>),
    #[error("{0} and {1} must be distinct vertices of the host")]
    BadProbe(usize, usize),
}

/// An injective embedding of `F_{s,k}` into a host (possibly `G + xy`).
/// `map` follows the pattern numbering of [`crate::pattern::build_fsk`]:
/// `map[0] = φ(a)`, `map[1] = φ(b)`, then path interiors in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCopy {
    pub params: FskParams,
    pub map: Vec<usize>,
    pub hub_edge: (usize, usize),
}

impl WitnessCopy {
    /// Builds the map from the hub pair and `s` full `a .. b` vertex lists.
    fn from_paths(params: FskParams, paths: &[Vec<usize>]) -> Self {
        let (a, b) = (paths[0][0], *paths[0].last().unwrap());
        let mut map = Vec::with_capacity(params.order());
        map.push(a);
        map.push(b);
        for p in paths {
            debug_assert_eq!(p.len(), params.path_length() + 1);
            map.extend_from_slice(&p[1..p.len() - 1]);
        }
        WitnessCopy {
            params,
            map,
            hub_edge: (a, b),
        }
    }

    /// Host images of path `i`, from `φ(a)` to `φ(b)`.
    pub fn path(&self, i: usize) -> Vec<usize> {
        let interior = self.params.interior();
        let mut p = Vec::with_capacity(interior + 2);
        p.push(self.map[0]);
        p.extend_from_slice(&self.map[2 + i * interior..2 + (i + 1) * interior]);
        p.push(self.map[1]);
        p
    }

    /// Host edges of the copy.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![self.hub_edge];
        for i in 0..self.params.s {
            out.extend(self.path(i).windows(2).map(|w| (w[0], w[1])));
        }
        out
    }

    /// Pattern vertex mapped to host vertex `v`, if any.
    pub fn preimage(&self, v: usize) -> Option<usize> {
        self.map.iter().position(|&w| w == v)
    }

    /// Degree of host vertex `v` inside the copy.
    pub fn degree_of(&self, v: usize) -> usize {
        match self.preimage(v) {
            Some(0) | Some(1) => self.params.s + 1,
            Some(_) => 2,
            None => 0,
        }
    }

    /// Neighbors of host vertex `v` inside the copy.
    pub fn neighbors_of(&self, v: usize) -> Vec<usize> {
        self.edges()
            .into_iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.map.iter().copied())
    }

    /// Checks injectivity and that every pattern edge lands on a host edge
    /// or on the probe pair.
    pub fn validate(&self, host: &Graph, probe: Option<(usize, usize)>) -> Result<(), String> {
        let n = host.order();
        if self.map.len() != self.params.order() {
            return Err(format!(
                "map has {} entries, pattern has {} vertices",
                self.map.len(),
                self.params.order()
            ));
        }
        let mut seen = VertexSet::new(n);
        for &v in &self.map {
            if v >= n {
                return Err(format!("vertex {v} outside host"));
            }
            if !seen.insert(v) {
                return Err(format!("vertex {v} used twice"));
            }
        }
        if self.hub_edge != (self.map[0], self.map[1]) {
            return Err("hub edge disagrees with map".into());
        }
        let is_probe = |u: usize, v: usize| {
            probe.is_some_and(|(x, y)| (u, v) == (x, y) || (u, v) == (y, x))
        };
        for (u, v) in self.edges() {
            if !host.has_edge(u, v) && !is_probe(u, v) {
                return Err(format!("pattern edge maps to non-edge {u}-{v}"));
            }
        }
        Ok(())
    }
}

/// Verdict of a maximality check.
#[derive(Clone, Debug, Serialize)]
pub struct MaximalityReport {
    pub maximal: bool,
    /// Non-edges whose addition creates no copy.
    pub failing: Vec<(usize, usize)>,
    pub probed: usize,
}

#[derive(Clone, Debug)]
pub struct Saturation {
    pub graph: Graph,
    pub added: Vec<(usize, usize)>,
}

/// Exact `F_{s,k}` search with a host-size guard.
#[derive(Clone, Copy, Debug)]
pub struct Detector {
    params: FskParams,
    max_order: usize,
}

impl Detector {
    pub fn new(s: usize, k: usize) -> Result<Self, FreenessError> {
        Ok(Detector {
            params: FskParams::new(s, k)?,
            max_order: DEFAULT_MAX_ORDER,
        })
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn params(&self) -> FskParams {
        self.params
    }

    fn guard(&self, g: &Graph) -> Result<(), FreenessError> {
        if g.order() > self.max_order {
            Err(FreenessError::TooLarge {
                order: g.order(),
                limit: self.max_order,
            })
        } else {
            Ok(())
        }
    }

    fn check_probe(g: &Graph, x: usize, y: usize) -> Result<(), FreenessError> {
        if x == y || x >= g.order() || y >= g.order() {
            Err(FreenessError::BadProbe(x, y))
        } else {
            Ok(())
        }
    }

    /// Copy of `F_{s,k}` in `g + xy` whose hub edge is `xy`.
    pub fn find_at_edge(
        &self,
        g: &Graph,
        x: usize,
        y: usize,
    ) -> Result<Option<WitnessCopy>, FreenessError> {
        self.guard(g)?;
        Self::check_probe(g, x, y)?;
        let eng = PathEngine::new(&g.with_edge(x, y).unwrap());
        Ok(self.hub_search(&eng, x, y))
    }

    fn hub_search(&self, eng: &PathEngine, x: usize, y: usize) -> Option<WitnessCopy> {
        let (a, b) = (eng.internal(x), eng.internal(y));
        let s = self.params.s;
        let h = eng.graph();
        if h.degree(a) < s + 1 || h.degree(b) < s + 1 {
            return None;
        }
        let mut avail = VertexSet::full(h.order());
        avail.remove(a);
        avail.remove(b);
        let mut out = Vec::with_capacity(s);
        if eng.disjoint_paths(a, b, s, self.params.path_length(), &mut avail, None, &mut out) {
            let paths: Vec<Vec<usize>> = out.iter().map(|p| eng.host_path(p)).collect();
            Some(WitnessCopy::from_paths(self.params, &paths))
        } else {
            None
        }
    }

    /// Copy of `F_{s,k}` in `g + xy` that uses the pair `xy` as an edge, in
    /// any position. The hub anchor is tried first, then path positions by
    /// increasing distance from the hub, `x` on the hub side first.
    pub fn find_using_edge(
        &self,
        g: &Graph,
        x: usize,
        y: usize,
    ) -> Result<Option<WitnessCopy>, FreenessError> {
        self.guard(g)?;
        Self::check_probe(g, x, y)?;
        let eng = PathEngine::new(&g.with_edge(x, y).unwrap());
        Ok(self.anchored_search(&eng, x, y))
    }

    fn anchored_search(&self, eng: &PathEngine, x: usize, y: usize) -> Option<WitnessCopy> {
        if let Some(w) = self.hub_search(eng, x, y) {
            return Some(w);
        }
        let (s, k) = (self.params.s, self.params.k);
        let len = self.params.path_length();
        let h = eng.graph();
        let n = h.order();
        let hub_capable = VertexSet::from_vertices(n, (0..n).filter(|&v| h.degree(v) > s));
        let (ix, iy) = (eng.internal(x), eng.internal(y));

        // Edge index r (0-based from the a end) of the anchored pair on its
        // path; reversing a path maps r to 2k-1-r, so r < k suffices.
        for r in 0..k {
            for (u, w) in [(ix, iy), (iy, ix)] {
                let mut avail = VertexSet::full(n);
                avail.remove(u);
                avail.remove(w);
                let mut found: Option<Vec<Vec<usize>>> = None;
                let forward_len = len - 1 - r;

                let mut finish = |back: &[usize], avail: &mut VertexSet| -> bool {
                    let a = *back.last().unwrap();
                    let mut targets = h.neighbors(a).intersection(avail);
                    targets.intersect_with(&hub_capable);
                    if targets.is_empty() {
                        return false;
                    }
                    let layers = eng.reach_layers(&targets, avail, forward_len);
                    let mut fwd = vec![w];
                    eng.extend(
                        &mut fwd,
                        forward_len,
                        avail,
                        &targets,
                        &layers,
                        None,
                        &mut |fp: &[usize], avail: &mut VertexSet| {
                            let b = *fp.last().unwrap();
                            let mut rest = Vec::with_capacity(s - 1);
                            if eng.disjoint_paths(a, b, s - 1, len, avail, None, &mut rest) {
                                let mut first: Vec<usize> = back.iter().rev().copied().collect();
                                first.extend_from_slice(fp);
                                let mut paths = vec![first];
                                paths.extend(rest);
                                found = Some(paths);
                                true
                            } else {
                                false
                            }
                        },
                    )
                };

                let hit = if r == 0 {
                    hub_capable.contains(u) && finish(&[u], &mut avail)
                } else {
                    let targets = avail.intersection(&hub_capable);
                    let layers = eng.reach_layers(&targets, &avail, r);
                    let mut back = vec![u];
                    eng.extend(&mut back, r, &mut avail, &targets, &layers, None, &mut finish)
                };
                if hit {
                    let paths: Vec<Vec<usize>> =
                        found.unwrap().iter().map(|p| eng.host_path(p)).collect();
                    return Some(WitnessCopy::from_paths(self.params, &paths));
                }
            }
        }
        None
    }

    /// Whether `g` contains no copy; on failure, the copy on the
    /// lexicographically first hub edge that carries one.
    pub fn find_copy(&self, g: &Graph) -> Result<Option<WitnessCopy>, FreenessError> {
        self.guard(g)?;
        let s = self.params.s;
        let eng = PathEngine::new(g);
        let edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| g.degree(u) > s && g.degree(v) > s)
            .collect();
        Ok(edges
            .par_iter()
            .find_map_first(|&(u, v)| self.hub_search(&eng, u, v)))
    }

    pub fn is_free(&self, g: &Graph) -> Result<bool, FreenessError> {
        Ok(self.find_copy(g)?.is_none())
    }

    fn require_free(&self, g: &Graph) -> Result<(), FreenessError> {
        match self.find_copy(g)? {
            Some(w) => Err(FreenessError::NotFree(Box::new(w))),
            None => Ok(()),
        }
    }

    /// Whether adding `xy` to the (F-free) host creates a copy.
    fn probe_creates_copy(&self, g: &Graph, x: usize, y: usize) -> bool {
        let eng = PathEngine::new(&g.with_edge(x, y).unwrap());
        self.anchored_search(&eng, x, y).is_some()
    }

    pub fn check_maximal(&self, g: &Graph) -> Result<MaximalityReport, FreenessError> {
        self.require_free(g)?;
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        let failing: Vec<(usize, usize)> = non_edges
            .par_iter()
            .filter(|&&(x, y)| !self.probe_creates_copy(g, x, y))
            .copied()
            .collect();
        Ok(MaximalityReport {
            maximal: failing.is_empty(),
            failing,
            probed: non_edges.len(),
        })
    }

    /// Adds non-edges in lexicographic order, each one iff it creates no
    /// copy, until no further edge can be added.
    ///
    /// A non-edge rejected once stays rejected (copies survive adding edges),
    /// so probes run in parallel batches against the current graph and only
    /// the tail after an accepted edge is re-probed.
    pub fn saturate(&self, g: &Graph) -> Result<Saturation, FreenessError> {
        self.require_free(g)?;
        let mut graph = g.clone();
        let mut added = Vec::new();
        let mut queue: VecDeque<(usize, usize)> = graph.non_edges().collect();
        while !queue.is_empty() {
            let batch: Vec<(usize, usize)> =
                queue.iter().take(SATURATION_BATCH).copied().collect();
            let creates: Vec<bool> = batch
                .par_iter()
                .map(|&(x, y)| self.probe_creates_copy(&graph, x, y))
                .collect();
            let mut consumed = 0;
            for (&(x, y), &bad) in batch.iter().zip(&creates) {
                consumed += 1;
                if !bad {
                    graph.add_edge(x, y).unwrap();
                    added.push((x, y));
                    break;
                }
            }
            queue.drain(..consumed);
        }
        Ok(Saturation { graph, added })
    }
}

/// One-shot helpers with the default size guard.
pub fn find_fsk_at_edge(
    g: &Graph,
    x: usize,
    y: usize,
    s: usize,
    k: usize,
) -> Result<Option<WitnessCopy>, FreenessError> {
    Detector::new(s, k)?.find_at_edge(g, x, y)
}

pub fn is_fsk_free(g: &Graph, s: usize, k: usize) -> Result<(bool, Option<WitnessCopy>), FreenessError> {
    let w = Detector::new(s, k)?.find_copy(g)?;
    Ok((w.is_none(), w))
}

pub fn is_maximal_fsk_free(g: &Graph, s: usize, k: usize) -> Result<MaximalityReport, FreenessError> {
    Detector::new(s, k)?.check_maximal(g)
}

pub fn saturate(g: &Graph, s: usize, k: usize) -> Result<Saturation, FreenessError> {
    Detector::new(s, k)?.saturate(g)
}
