//! Exact-length path search over a degree-sorted relabelling of the host.
//!
//! Vertices are renumbered by ascending degree (ties by id), so iterating a
//! candidate bitset visits neighbors in ascending-degree order for free.
//! Paths of exact length are pruned with walk-reachability layers: a vertex
//! may sit `j` steps before the target only if some walk of length `j`
//! through still-available vertices reaches the target from it.

use crate::graph::{Graph, VertexSet};

pub(crate) struct PathEngine {
    g: Graph,
    /// `to_host[internal] = host id`
    to_host: Vec<usize>,
    /// `to_internal[host] = internal id`
    to_internal: Vec<usize>,
}

impl PathEngine {
    pub fn new(host: &Graph) -> Self {
        let n = host.order();
        let mut to_host: Vec<usize> = (0..n).collect();
        to_host.sort_by_key(|&v| (host.degree(v), v));
        let mut to_internal = vec![0; n];
        for (i, &v) in to_host.iter().enumerate() {
            to_internal[v] = i;
        }
        let mut g = Graph::new(n);
        for (u, v) in host.edges() {
            g.add_edge(to_internal[u], to_internal[v]).unwrap();
        }
        PathEngine {
            g,
            to_host,
            to_internal,
        }
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.g
    }

    #[inline]
    pub fn internal(&self, host: usize) -> usize {
        self.to_internal[host]
    }

    pub fn host_path(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&v| self.to_host[v]).collect()
    }

    /// `layers[j]`: vertices of `avail` from which a walk of exactly `j`
    /// steps, all intermediate vertices in `avail`, ends in `targets`.
    /// `layers[0] = targets`.
    pub fn reach_layers(&self, targets: &VertexSet, avail: &VertexSet, depth: usize) -> Vec<VertexSet> {
        let n = self.g.order();
        let mut layers = Vec::with_capacity(depth + 1);
        layers.push(targets.clone());
        for j in 1..=depth {
            let prev = &layers[j - 1];
            let mut next = VertexSet::new(n);
            for v in prev {
                next.union_with(self.g.neighbors(v));
            }
            next.intersect_with(avail);
            layers.push(next);
        }
        layers
    }

    /// Extends `path` by exactly `remaining` edges. New interior vertices are
    /// drawn from `avail` (and removed from it while on the path); the final
    /// vertex must lie in `targets` and not already be on the path. For each
    /// completed path `done` is called; returning `true` stops the search.
    ///
    /// `first_above`, if set, restricts the first new vertex to ids greater
    /// than the given one.
    #[allow(clippy::too_many_arguments)]
    pub fn extend(
        &self,
        path: &mut Vec<usize>,
        remaining: usize,
        avail: &mut VertexSet,
        targets: &VertexSet,
        layers: &[VertexSet],
        first_above: Option<usize>,
        done: &mut dyn FnMut(&[usize], &mut VertexSet) -> bool,
    ) -> bool {
        let cur = *path.last().expect("path has a start vertex");
        if remaining == 0 {
            if !targets.contains(cur) {
                return false;
            }
            return done(path, avail);
        }

        let mut cand = self.g.neighbors(cur).clone();
        if remaining == 1 {
            cand.intersect_with(targets);
            for &p in path.iter() {
                cand.remove(p);
            }
        } else {
            cand.intersect_with(avail);
            cand.intersect_with(&layers[remaining - 1]);
        }

        for next in cand.iter() {
            if first_above.is_some_and(|lo| next <= lo) {
                continue;
            }
            let was_avail = avail.remove(next);
            path.push(next);
            let stop = if remaining == 1 {
                done(path, avail)
            } else {
                self.extend(path, remaining - 1, avail, targets, layers, None, done)
            };
            path.pop();
            if was_avail {
                avail.insert(next);
            }
            if stop {
                return true;
            }
        }
        false
    }

    /// Finds `count` internally disjoint `a`–`b` paths of exactly `len`
    /// edges with interiors in `avail`, pushing them (as full vertex lists)
    /// onto `out`. Paths are generated with strictly increasing first
    /// interior vertex, so each unordered family is visited once.
    #[allow(clippy::too_many_arguments)]
    pub fn disjoint_paths(
        &self,
        a: usize,
        b: usize,
        count: usize,
        len: usize,
        avail: &mut VertexSet,
        first_above: Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if count == 0 {
            return true;
        }
        // Cheap necessary condition: enough usable neighbors on both ends.
        if len >= 2
            && (self.g.degree_into(a, avail) < count || self.g.degree_into(b, avail) < count)
        {
            return false;
        }
        let targets = VertexSet::from_vertices(self.g.order(), [b]);
        let layers = self.reach_layers(&targets, avail, len);
        let mut path = vec![a];
        self.extend(
            &mut path,
            len,
            avail,
            &targets,
            &layers,
            first_above,
            &mut |p: &[usize], avail: &mut VertexSet| {
                out.push(p.to_vec());
                if self.disjoint_paths(a, b, count - 1, len, avail, Some(p[1]), out) {
                    true
                } else {
                    out.pop();
                    false
                }
            },
        )
    }
}
