//! Maximum induced complete bipartite subgraph by branch and bound.
//!
//! False twins (equal open neighborhoods) are interchangeable, and an optimum
//! can always take a whole twin class or none of it, so the search runs on
//! the quotient by twin classes with class sizes as weights.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Vertex sets `a`, `b` with `G[a ∪ b]` exactly complete bipartite between
/// them. Either side may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BicliqueResult {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl BicliqueResult {
    pub fn empty(n: usize) -> Self {
        BicliqueResult {
            a: VertexSet::new(n),
            b: VertexSet::new(n),
        }
    }

    pub fn size(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.a.union(&self.b)
    }

    /// Pairwise re-check of the defining properties.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        validate_biclique(g, &self.a.to_vec(), &self.b.to_vec())
    }
}

/// Checks, pair by pair, that `a` and `b` are disjoint independent sets with
/// every cross pair adjacent.
pub fn validate_biclique(g: &Graph, a: &[usize], b: &[usize]) -> Result<(), String> {
    let n = g.order();
    for &v in a.iter().chain(b) {
        if v >= n {
            return Err(format!("vertex {v} outside graph"));
        }
    }
    for (i, &u) in a.iter().enumerate() {
        if b.contains(&u) {
            return Err(format!("vertex {u} on both sides"));
        }
        for &w in &a[i + 1..] {
            if g.has_edge(u, w) {
                return Err(format!("edge {u}-{w} inside side a"));
            }
        }
        for &w in b {
            if !g.has_edge(u, w) {
                return Err(format!("missing cross edge {u}-{w}"));
            }
        }
    }
    for (i, &u) in b.iter().enumerate() {
        for &w in &b[i + 1..] {
            if g.has_edge(u, w) {
                return Err(format!("edge {u}-{w} inside side b"));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct BicliqueSearch {
    pub best: BicliqueResult,
    /// The search closed: `best` is a maximum.
    pub optimal: bool,
    /// Proven upper bound on the maximum size (equals `best.size()` when optimal).
    pub upper_bound: usize,
    pub nodes: u64,
}

/// Partition of the vertices into false-twin classes.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut index: HashMap<&VertexSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.order() {
        let id = *index.entry(g.neighbors(v)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(v);
    }
    classes
}

struct Solver<'a> {
    q: &'a Graph,
    weight: &'a [usize],
    budget: u64,
    nodes: u64,
    aborted: bool,
    open_bound: usize,
    best: usize,
    best_a: Vec<usize>,
    best_b: Vec<usize>,
    cur_a: Vec<usize>,
    cur_b: Vec<usize>,
}

impl Solver<'_> {
    fn weight_of(&self, s: &VertexSet) -> usize {
        s.iter().map(|c| self.weight[c]).sum()
    }

    fn run(&mut self, size: usize, cand_a: VertexSet, cand_b: VertexSet) {
        self.nodes += 1;
        let undecided = cand_a.union(&cand_b);
        let bound = size + self.weight_of(&undecided);
        if bound <= self.best {
            return;
        }
        if self.aborted || self.nodes > self.budget {
            self.aborted = true;
            self.open_bound = self.open_bound.max(bound);
            return;
        }
        let Some(v) = undecided.first() else {
            self.best = size;
            self.best_a = self.cur_a.clone();
            self.best_b = self.cur_b.clone();
            return;
        };
        let nv = self.q.neighbors(v);
        let w = self.weight[v];

        if cand_a.contains(v) {
            let mut na = cand_a.difference(nv);
            na.remove(v);
            let nb = cand_b.intersection(nv);
            self.cur_a.push(v);
            self.run(size + w, na, nb);
            self.cur_a.pop();
        }
        // The first chosen class always goes to side a.
        if !self.cur_a.is_empty() && cand_b.contains(v) {
            let na = cand_a.intersection(nv);
            let mut nb = cand_b.difference(nv);
            nb.remove(v);
            self.cur_b.push(v);
            self.run(size + w, na, nb);
            self.cur_b.pop();
        }
        let mut na = cand_a;
        let mut nb = cand_b;
        na.remove(v);
        nb.remove(v);
        self.run(size, na, nb);
    }
}

/// Exact search within `budget` nodes. Classes are branched in descending
/// degree order, ties by smallest vertex id.
pub fn max_induced_complete_bipartite(g: &Graph, budget: u64) -> BicliqueSearch {
    let n = g.order();
    let mut classes = twin_classes(g);
    classes.sort_by_key(|c| (std::cmp::Reverse(g.degree(c[0])), c[0]));
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let mut q = Graph::new(classes.len());
    for (u, v) in g.edges() {
        q.add_edge(class_of[u], class_of[v]).unwrap();
    }
    let weight: Vec<usize> = classes.iter().map(Vec::len).collect();

    let mut solver = Solver {
        q: &q,
        weight: &weight,
        budget,
        nodes: 0,
        aborted: false,
        open_bound: 0,
        best: 0,
        best_a: Vec::new(),
        best_b: Vec::new(),
        cur_a: Vec::new(),
        cur_b: Vec::new(),
    };
    let all = VertexSet::full(classes.len());
    solver.run(0, all.clone(), all);

    let expand = |ids: &[usize]| {
        VertexSet::from_vertices(n, ids.iter().flat_map(|&c| classes[c].iter().copied()))
    };
    let best = BicliqueResult {
        a: expand(&solver.best_a),
        b: expand(&solver.best_b),
    };
    debug_assert_eq!(best.size(), solver.best);
    BicliqueSearch {
        optimal: !solver.aborted,
        upper_bound: solver.best.max(solver.open_bound),
        nodes: solver.nodes,
        best,
    }
}
