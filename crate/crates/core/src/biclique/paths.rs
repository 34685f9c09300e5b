//! Paths with prescribed length and parity, long paths in dense graphs,
//! and slicing a long alternating path into short disjoint pieces.

use serde::Serialize;
use thiserror::Error;

use crate::freeness::PathEngine;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("graph is not bipartite (edge {0}-{1} closes an odd cycle)")]
    NotBipartite(usize, usize),
    #[error("length {length} has the wrong parity for endpoints {u} and {v}")]
    ParityMismatch { u: usize, v: usize, length: usize },
    #[error("invalid path request: {0}")]
    Invalid(String),
    #[error("path on {have} vertices yields only {found} of {count} segments of length {each_length}")]
    TooShort {
        have: usize,
        found: usize,
        count: usize,
        each_length: usize,
    },
}

/// A `u`–`v` path with exactly `length` edges whose interior avoids `w`.
/// The graph must be bipartite and, when `u` and `v` are connected, the
/// parity of `length` must match their sides. The search is exhaustive.
pub fn find_parity_path(
    g: &Graph,
    u: usize,
    v: usize,
    length: usize,
    w: &VertexSet,
) -> Result<Option<Vec<usize>>, PathError> {
    let n = g.order();
    if u >= n || v >= n || u == v {
        return Err(PathError::Invalid(format!("endpoints {u}, {v} must be distinct vertices")));
    }
    if length == 0 {
        return Err(PathError::Invalid("length must be positive".into()));
    }
    let colors = g
        .two_coloring(&g.vertex_set())
        .map_err(|(a, b)| PathError::NotBipartite(a, b))?;
    if !components(g, &g.vertex_set()).iter().any(|c| c.contains(u) && c.contains(v)) {
        return Ok(None);
    }
    if (colors[u] != colors[v]) != (length % 2 == 1) {
        return Err(PathError::ParityMismatch { u, v, length });
    }

    let eng = PathEngine::new(g);
    let (a, b) = (eng.internal(u), eng.internal(v));
    let mut avail = VertexSet::full(n);
    for x in w {
        avail.remove(eng.internal(x));
    }
    avail.remove(a);
    avail.remove(b);
    let targets = VertexSet::from_vertices(n, [b]);
    let layers = eng.reach_layers(&targets, &avail, length);
    let mut found = None;
    let mut path = vec![a];
    eng.extend(
        &mut path,
        length,
        &mut avail,
        &targets,
        &layers,
        None,
        &mut |p: &[usize], _: &mut VertexSet| {
            found = Some(eng.host_path(p));
            true
        },
    );
    Ok(found)
}

/// Checks that `path` is a simple path of `g`.
pub fn is_path(g: &Graph, path: &[usize]) -> bool {
    let mut seen = VertexSet::new(g.order());
    path.iter().all(|&v| v < g.order() && seen.insert(v))
        && path.windows(2).all(|e| g.has_edge(e[0], e[1]))
}

#[derive(Clone, Debug, Serialize)]
pub struct LongPath {
    pub path: Option<Vec<usize>>,
    /// `e(G) > (L - 2)·n / 2`, under which a path on `L` vertices must exist.
    pub guaranteed: bool,
}

/// Repeatedly deletes vertices of degree at most `max_deg` within `alive`.
fn peel(g: &Graph, alive: &mut VertexSet, max_deg: usize) {
    loop {
        let low: Vec<usize> = alive
            .iter()
            .filter(|&v| g.degree_into(v, alive) <= max_deg)
            .collect();
        if low.is_empty() {
            return;
        }
        for v in low {
            alive.remove(v);
        }
    }
}

fn components(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let n = g.order();
    let mut left = within.clone();
    let mut out = Vec::new();
    while let Some(root) = left.first() {
        let mut comp = VertexSet::from_vertices(n, [root]);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(n);
            for x in &frontier {
                next.union_with(g.neighbors(x));
            }
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        left.difference_with(&comp);
        out.push(comp);
    }
    out
}

/// Grows a path inside the connected set `comp` until it has `target`
/// vertices or cannot grow: extend either end while possible; when both
/// ends are stuck, close a cycle through all path vertices (endpoint
/// neighbors `v_0 ~ v_{i+1}`, `v_p ~ v_i`) and reopen it at a vertex with a
/// neighbor off the cycle.
fn grow_path(g: &Graph, comp: &VertexSet, start: usize, target: usize) -> Vec<usize> {
    let n = g.order();
    let mut path: std::collections::VecDeque<usize> = [start].into();
    let mut on = VertexSet::from_vertices(n, [start]);
    let free_neighbor = |x: usize, on: &VertexSet| {
        let mut c = g.neighbors(x).intersection(comp);
        c.difference_with(on);
        c.iter().min_by_key(|&y| (g.degree_into(y, comp), y))
    };
    while path.len() < target {
        if let Some(y) = free_neighbor(*path.back().unwrap(), &on) {
            path.push_back(y);
            on.insert(y);
            continue;
        }
        if let Some(y) = free_neighbor(*path.front().unwrap(), &on) {
            path.push_front(y);
            on.insert(y);
            continue;
        }
        let p: Vec<usize> = path.iter().copied().collect();
        let last = p.len() - 1;
        if last == 0 {
            break;
        }
        let pivot = (0..last).find(|&i| g.has_edge(p[0], p[i + 1]) && g.has_edge(p[last], p[i]));
        let Some(i) = pivot else { break };
        // cycle: p0 .. pi, p_last .. p_{i+1}, back to p0
        let cycle: Vec<usize> = p[..=i].iter().chain(p[i + 1..].iter().rev()).copied().collect();
        let exit = cycle
            .iter()
            .enumerate()
            .find_map(|(j, &c)| free_neighbor(c, &on).map(|y| (j, y)));
        let Some((j, y)) = exit else { break };
        let len = cycle.len();
        path.clear();
        path.push_back(y);
        for step in 0..len {
            path.push_back(cycle[(j + step) % len]);
        }
        on.insert(y);
    }
    path.into_iter().collect()
}

/// A path on at least `min_vertices` vertices. When
/// `e(G) > (min_vertices - 2)·n / 2` one is always found: peeling vertices of
/// degree at most `(min_vertices - 2) / 2` leaves a nonempty core, one of
/// whose components is dense enough to have at least `min_vertices`
/// vertices, and path growth with cycle rotation inside it reaches
/// `min(|component|, 2δ + 1)` vertices. Outside that regime the same growth
/// is tried on every component as a heuristic.
pub fn find_long_path(g: &Graph, min_vertices: usize) -> LongPath {
    let n = g.order();
    let target = min_vertices.max(1);
    let guaranteed = 2 * g.edge_count() > min_vertices.saturating_sub(2) * n;
    if target > n {
        return LongPath { path: None, guaranteed };
    }

    let mut regions = Vec::new();
    let all = g.vertex_set();
    for comp in components(g, &all) {
        let mut core = comp.clone();
        peel(g, &mut core, target.saturating_sub(2) / 2);
        let mut parts = components(g, &core);
        parts.sort_by_key(|c| std::cmp::Reverse(c.len()));
        regions.extend(parts.into_iter().filter(|c| c.len() >= target));
    }
    regions.extend(components(g, &all).into_iter().filter(|c| c.len() >= target));

    for region in &regions {
        let starts: Vec<usize> = {
            let mut s = region.to_vec();
            s.sort_by_key(|&v| (g.degree_into(v, region), v));
            s
        };
        for &start in &starts {
            let p = grow_path(g, region, start, target);
            if p.len() >= target {
                debug_assert!(is_path(g, &p));
                return LongPath { path: Some(p), guaranteed };
            }
        }
    }
    LongPath { path: None, guaranteed }
}

/// Cuts `count` vertex-disjoint subpaths with `each_length` edges and both
/// endpoints in `side` out of `path`, scanning left to right.
pub fn truncate_into_disjoint_paths(
    path: &[usize],
    count: usize,
    each_length: usize,
    side: &VertexSet,
) -> Result<Vec<Vec<usize>>, PathError> {
    let mut out = Vec::with_capacity(count);
    let mut i = 0;
    while out.len() < count && i + each_length < path.len() {
        if side.contains(path[i]) && side.contains(path[i + each_length]) {
            out.push(path[i..=i + each_length].to_vec());
            i += each_length + 1;
        } else {
            i += 1;
        }
    }
    if out.len() < count {
        return Err(PathError::TooShort {
            have: path.len(),
            found: out.len(),
            count,
            each_length,
        });
    }
    Ok(out)
}
