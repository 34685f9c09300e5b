//! Undirected simple graphs over dense vertex ids `0..n`, stored as one
//! neighbor bitset per vertex.

mod edgelist;
mod graph6;
mod set;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6, GRAPH6_MAX_ORDER};
pub use set::{Iter as VertexSetIter, VertexSet};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("graph of order {0} exceeds the graph6 limit")]
    TooLarge(usize),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

/// Result of restricting a graph to a vertex subset.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the new id of `v`, or `None` if `v` was dropped.
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        if n >= 3 {
            for u in 0..n {
                g.insert_unchecked(u, (u + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 1..n {
            g.insert_unchecked(u - 1, u);
        }
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.insert_unchecked(i, (i + 1) % 5);
            g.insert_unchecked(i, i + 5);
            g.insert_unchecked(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        let added = self.rows[u].insert(v);
        self.rows[v].insert(u);
        added
    }

    /// Adds `uv`. Returns whether the edge was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `uv`. Returns whether the edge was present.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let removed = self.rows[u].remove(v);
        self.rows[v].remove(u);
        Ok(removed)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// `|N(v) ∩ set|`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_len(set)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| !self.rows[u].contains(v))
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Copy with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> InducedSubgraph {
        assert_eq!(s.universe(), self.order());
        let new_to_old = s.to_vec();
        let mut old_to_new = vec![None; self.order()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut graph = Graph::new(new_to_old.len());
        for (nu, &u) in new_to_old.iter().enumerate() {
            for v in self.rows[u].intersection(s).iter() {
                let nv = old_to_new[v].expect("neighbor inside subset");
                if nu < nv {
                    graph.insert_unchecked(nu, nv);
                }
            }
        }
        InducedSubgraph {
            graph,
            old_to_new,
            new_to_old,
        }
    }

    /// `e(A, B)` for disjoint `A`, `B`.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|u| self.rows[u].intersection_len(b)).sum()
    }

    /// The complement bipartite edge set between disjoint `a` and `b`:
    /// pairs `(u, v)` with `u ∈ a`, `v ∈ b` and `uv ∉ E`, ordered by `u` then `v`.
    pub fn non_edges_between(
        &self,
        a: &VertexSet,
        b: &VertexSet,
    ) -> Result<Vec<(usize, usize)>, GraphError> {
        if let Some(v) = a.intersection(b).first() {
            return Err(GraphError::OverlappingSets(v));
        }
        let mut out = Vec::new();
        for u in a {
            for v in b.difference(&self.rows[u]).iter() {
                out.push((u, v));
            }
        }
        Ok(out)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| !self.rows[u].intersects(s))
    }

    /// Some edge with both ends in `s`, if any.
    pub fn edge_inside(&self, s: &VertexSet) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            self.rows[u]
                .intersection(s)
                .first()
                .map(|v| (u.min(v), u.max(v)))
        })
    }

    /// Proper 2-coloring of `G[s]` (`true` / `false` sides), or an odd
    /// cycle witness edge if `G[s]` is not bipartite.
    pub fn two_coloring(&self, s: &VertexSet) -> Result<Vec<Option<bool>>, (usize, usize)> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in s {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.rows[u].intersection(s).iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Err((u.min(v), u.max(v))),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring(&self.vertex_set()).is_ok()
    }

    /// Checks symmetry and irreflexivity of the adjacency rows.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.rows.iter().enumerate().all(|(u, row)| {
            row.universe() == n && !row.contains(u) && row.iter().all(|v| self.rows[v].contains(u))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
