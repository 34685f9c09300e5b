use serde::Serialize;

use super::ConstructionLayout;
use crate::graph::{Graph, VertexSet};

/// The minimum-edge member of the construction class together with its
/// layout.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub layout: ConstructionLayout,
    /// Edge count from the closed form, computed independently of the graph.
    pub specified_edge_count: u64,
}

/// Closed-form size of the minimum member:
/// `|X||Y| - Σ_{i<t^s} |X_i||Y_i| + st(2k-2) + 2st·t^{s-1}·m`.
pub fn specified_edge_count(layout: &ConstructionLayout) -> u64 {
    let (s, t, k, m) = (
        layout.s as u64,
        layout.t as u64,
        layout.k as u64,
        layout.m as u64,
    );
    let blocks = layout.blocks as u64;
    let xy = layout.x_size() as u64 * layout.y_size() as u64;
    let missing = blocks * m * m;
    let z_paths = s * t * (2 * k - 2);
    let attachments = 2 * s * t * t.pow(layout.s as u32 - 1) * m;
    xy - missing + z_paths + attachments
}

pub fn build_min_member(layout: &ConstructionLayout) -> ConstructionResult {
    let mut g = Graph::new(layout.n);
    let blocks = layout.blocks;

    // X_i -- Y_j complete for i != j, and X_{t^s} -- Y_{t^s} complete.
    for i in 0..=blocks {
        for j in 0..=blocks {
            if i == j && i < blocks {
                continue;
            }
            for x in layout.x_block(i) {
                for y in layout.y_block(j) {
                    g.add_edge(x, y).unwrap();
                }
            }
        }
    }

    for p in 0..layout.s {
        for q in 0..layout.t {
            let path = layout.z_path(p, q);
            for w in path.windows(2) {
                g.add_edge(w[0], w[1]).unwrap();
            }
            let (first, last) = (path[0], *path.last().unwrap());
            for i in layout.digit_class(p, q) {
                for x in layout.x_block(i) {
                    g.add_edge(first, x).unwrap();
                }
                for y in layout.y_block(i) {
                    g.add_edge(last, y).unwrap();
                }
            }
        }
    }

    ConstructionResult {
        specified_edge_count: specified_edge_count(layout),
        graph: g,
        layout: layout.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
    MissingEdge { u: usize, v: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct FactCheck {
    pub fact: &'static str,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Per-fact verdicts for the structural facts behind F-freeness of the
/// minimum member.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub facts: Vec<FactCheck>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.facts.iter().all(|f| f.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FactCheck> {
        self.facts.iter().filter(|f| !f.passed)
    }

    pub fn fact(&self, name: &str) -> Option<&FactCheck> {
        self.facts.iter().find(|f| f.fact == name)
    }
}

pub const FACT_Z_PATHS: &str = "z_paths_exact";
pub const FACT_MIDDLE_DEGREE: &str = "middle_vertices_degree_two";
pub const FACT_INDEPENDENT: &str = "x_z2_and_y_z1_independent";
pub const FACT_BIPARTITE: &str = "bipartite_without_middles";
pub const FACT_ENDPOINTS: &str = "path_endpoint_neighborhoods";

/// Alternating halves of the Z-paths around the middle vertex `z^k`:
/// `Z^1` holds `r < k` odd and `r > k` even, `Z^2` the rest bar `z^k`.
pub fn z_sides(layout: &ConstructionLayout) -> (VertexSet, VertexSet, VertexSet) {
    let n = layout.n;
    let (mut z0, mut z1, mut z2) = (VertexSet::new(n), VertexSet::new(n), VertexSet::new(n));
    let k = layout.k;
    for p in 0..layout.s {
        for q in 0..layout.t {
            for r in 1..2 * k {
                let v = layout.z_vertex(p, q, r);
                if r == k {
                    z0.insert(v);
                } else if (r < k) == (r % 2 == 1) {
                    z1.insert(v);
                } else {
                    z2.insert(v);
                }
            }
        }
    }
    (z0, z1, z2)
}

fn check(fact: &'static str, witness: Option<Witness>) -> FactCheck {
    FactCheck {
        fact,
        passed: witness.is_none(),
        witness,
    }
}

pub fn certify_structure(result: &ConstructionResult) -> Certificate {
    let g = &result.graph;
    let layout = &result.layout;
    let n = layout.n;
    let (z0, z1, z2) = z_sides(layout);
    let x = VertexSet::from_vertices(n, layout.x_vertices());
    let y = VertexSet::from_vertices(n, layout.y_vertices());

    let mut facts = Vec::new();

    // G[Z_{p,q}] is exactly the path z^1 .. z^{2k-1}.
    let mut z_witness = None;
    'outer: for p in 0..layout.s {
        for q in 0..layout.t {
            let path = layout.z_path(p, q);
            for (i, &u) in path.iter().enumerate() {
                for (j, &v) in path.iter().enumerate().skip(i + 1) {
                    let want = j == i + 1;
                    if g.has_edge(u, v) != want {
                        z_witness = Some(if want {
                            Witness::MissingEdge { u, v }
                        } else {
                            Witness::Edge { u, v }
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    facts.push(check(FACT_Z_PATHS, z_witness));

    facts.push(check(
        FACT_MIDDLE_DEGREE,
        z0.iter()
            .find(|&v| g.degree(v) != 2)
            .map(|v| Witness::Vertex { v }),
    ));

    let side_x = x.union(&z2);
    let side_y = y.union(&z1);
    let independent = g
        .edge_inside(&side_x)
        .or_else(|| g.edge_inside(&side_y))
        .map(|(u, v)| Witness::Edge { u, v });
    facts.push(check(FACT_INDEPENDENT, independent));

    let without_middles = z0.complement();
    facts.push(check(
        FACT_BIPARTITE,
        g.two_coloring(&without_middles)
            .err()
            .map(|(u, v)| Witness::Edge { u, v }),
    ));

    // Neighbors of z^1 other than z^2 lie in X \ X_{t^s}; neighbors of
    // z^{2k-1} other than z^{2k-2} lie in Y \ Y_{t^s}.
    let mut allowed_x = x.clone();
    allowed_x.difference_with(&VertexSet::from_vertices(n, layout.x_block(layout.blocks)));
    let mut allowed_y = y.clone();
    allowed_y.difference_with(&VertexSet::from_vertices(n, layout.y_block(layout.blocks)));
    let mut endpoint_witness = None;
    'ends: for p in 0..layout.s {
        for q in 0..layout.t {
            let path = layout.z_path(p, q);
            let len = path.len();
            for (end, inner, allowed) in [
                (path[0], path[1], &allowed_x),
                (path[len - 1], path[len - 2], &allowed_y),
            ] {
                let mut bad = g.neighbors(end).difference(allowed);
                bad.remove(inner);
                if let Some(v) = bad.first() {
                    endpoint_witness = Some(Witness::Edge { u: end.min(v), v: end.max(v) });
                    break 'ends;
                }
            }
        }
    }
    facts.push(check(FACT_ENDPOINTS, endpoint_witness));

    Certificate { facts }
}
