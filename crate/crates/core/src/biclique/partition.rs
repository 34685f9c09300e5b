//! The `(U, V, T)` partition: two independent sets forming a dense
//! bipartite core and an exceptional set `T` whose vertices see each side in
//! either none or more than `h` vertices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Restarts of the max-cut local search.
const MAX_CUT_RESTARTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionUVT {
    pub u: VertexSet,
    pub v: VertexSet,
    pub t: VertexSet,
    pub h: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    U,
    V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum InitialSplit {
    TwoColoring,
    MaxCut { seed: u64, cut_edges: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CleanupStep {
    /// The `T` vertex whose few neighbors on `side` were moved.
    pub anchor: usize,
    pub side: Side,
    pub moved: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UvtTrace {
    pub initial: InitialSplit,
    /// Vertices moved to `T` to make both sides independent.
    pub repaired: Vec<usize>,
    /// Vertices moved to `T` for having at most `h` neighbors across.
    pub low_degree: Vec<usize>,
    pub cleanup: Vec<CleanupStep>,
    /// Minimum degree of `G[U, V]`, if `U ∪ V` is nonempty.
    pub min_core_degree: Option<usize>,
}

impl PartitionUVT {
    pub fn side(&self, side: Side) -> &VertexSet {
        match side {
            Side::U => &self.u,
            Side::V => &self.v,
        }
    }

    /// Checks the cover, the independence of `U` and `V`, and the degree
    /// dichotomy on `T`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        for (name, s) in [("u", &self.u), ("v", &self.v), ("t", &self.t)] {
            if s.universe() != n {
                return Err(format!("set {name} has the wrong universe"));
            }
        }
        if self.u.intersects(&self.v) || self.u.intersects(&self.t) || self.v.intersects(&self.t) {
            return Err("sets overlap".into());
        }
        if self.u.len() + self.v.len() + self.t.len() != n {
            return Err("sets do not cover the vertex set".into());
        }
        for (name, s) in [("u", &self.u), ("v", &self.v)] {
            if let Some((a, b)) = g.edge_inside(s) {
                return Err(format!("edge {a}-{b} inside {name}"));
            }
        }
        for x in &self.t {
            for (name, s) in [("u", &self.u), ("v", &self.v)] {
                let d = g.degree_into(x, s);
                if d >= 1 && d <= self.h {
                    return Err(format!("T vertex {x} has {d} neighbors in {name}"));
                }
            }
        }
        Ok(())
    }
}

/// Seeded local-search max cut; `true` marks side `V`.
fn max_cut(g: &Graph, seed: u64) -> (Vec<bool>, usize) {
    let n = g.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(Vec<bool>, usize)> = None;
    for _ in 0..MAX_CUT_RESTARTS {
        let mut side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        loop {
            let flip = (0..n).find(|&v| {
                let same = g.neighbors(v).iter().filter(|&w| side[w] == side[v]).count();
                2 * same > g.degree(v)
            });
            match flip {
                Some(v) => side[v] = !side[v],
                None => break,
            }
        }
        let cut = g.edges().filter(|&(a, b)| side[a] != side[b]).count();
        if best.as_ref().is_none_or(|(_, c)| cut > *c) {
            best = Some((side, cut));
        }
    }
    best.unwrap_or_default()
}

/// Builds the partition. A bipartite input starts from its 2-coloring (the
/// side of the smallest vertex of each component is `U`); otherwise from a
/// seeded max cut whose same-side edges are removed by moving vertices to
/// `T`, those with the most same-side neighbors first. Vertices with at most
/// `h` neighbors across then join `T`, and finally every `T` vertex with
/// between 1 and `h` neighbors on a side pulls those neighbors into `T`,
/// until no such vertex remains.
pub fn build_uvt_partition(g: &Graph, h: usize, seed: u64) -> (PartitionUVT, UvtTrace) {
    let n = g.order();
    let (in_v, initial) = match g.two_coloring(&g.vertex_set()) {
        Ok(colors) => (
            colors.into_iter().map(|c| c.unwrap_or(false)).collect::<Vec<_>>(),
            InitialSplit::TwoColoring,
        ),
        Err(_) => {
            let (side, cut_edges) = max_cut(g, seed);
            (side, InitialSplit::MaxCut { seed, cut_edges })
        }
    };
    let mut u = VertexSet::from_vertices(n, (0..n).filter(|&v| !in_v[v]));
    let mut v = VertexSet::from_vertices(n, (0..n).filter(|&x| in_v[x]));
    let mut t = VertexSet::new(n);

    let mut repaired = Vec::new();
    loop {
        let worst = (0..n)
            .filter(|&x| !t.contains(x))
            .map(|x| {
                let own = if u.contains(x) { &u } else { &v };
                (g.degree_into(x, own), x)
            })
            .filter(|&(d, _)| d > 0)
            .max_by_key(|&(d, x)| (d, std::cmp::Reverse(x)));
        let Some((_, x)) = worst else { break };
        u.remove(x);
        v.remove(x);
        t.insert(x);
        repaired.push(x);
    }

    let low_degree: Vec<usize> = u
        .iter()
        .filter(|&x| g.degree_into(x, &v) <= h)
        .chain(v.iter().filter(|&y| g.degree_into(y, &u) <= h))
        .collect();
    for &x in &low_degree {
        u.remove(x);
        v.remove(x);
        t.insert(x);
    }

    let mut cleanup = Vec::new();
    loop {
        let mut changed = false;
        for side in [Side::U, Side::V] {
            for x in t.clone().iter() {
                let set = match side {
                    Side::U => &mut u,
                    Side::V => &mut v,
                };
                let nb = g.neighbors(x).intersection(set);
                let d = nb.len();
                if d >= 1 && d <= h {
                    set.difference_with(&nb);
                    t.union_with(&nb);
                    cleanup.push(CleanupStep {
                        anchor: x,
                        side,
                        moved: nb.to_vec(),
                    });
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let min_core_degree = u
        .iter()
        .map(|x| g.degree_into(x, &v))
        .chain(v.iter().map(|y| g.degree_into(y, &u)))
        .min();
    (
        PartitionUVT { u, v, t, h },
        UvtTrace {
            initial,
            repaired,
            low_degree,
            cleanup,
            min_core_degree,
        },
    )
}
