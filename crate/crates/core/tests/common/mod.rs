//! Independent reference implementations used as test oracles. They share
//! no search code with the library: adjacency is read only through
//! `Graph::has_edge`.

#![allow(dead_code)]

use fsk::Graph;
use rand::{Rng, SeedableRng};

/// Edge list of `F_{s,k}`: hubs 0 and 1, path `i` interior on
/// `2 + i(2k-1) ..`.
pub fn fsk_edges(s: usize, k: usize) -> (usize, Vec<(usize, usize)>) {
    let inner = 2 * k - 1;
    let mut edges = vec![(0, 1)];
    for i in 0..s {
        let first = 2 + i * inner;
        let mut prev = 0;
        for r in 0..inner {
            edges.push((prev, first + r));
            prev = first + r;
        }
        edges.push((prev, 1));
    }
    (2 + s * inner, edges)
}

/// Whether `host` contains `pattern` as a (not necessarily induced)
/// subgraph, by plain backtracking over injective maps.
pub fn contains_subgraph(pn: usize, pedges: &[(usize, usize)], host: &Graph) -> bool {
    let mut adj = vec![Vec::new(); pn];
    for &(u, v) in pedges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Next vertex: the one with most mapped neighbors, so cycles close early.
    let mut order = vec![0];
    let mut placed = vec![false; pn];
    placed[0] = true;
    while order.len() < pn {
        let next = (0..pn)
            .filter(|&w| !placed[w])
            .max_by_key(|&w| (adj[w].iter().filter(|&&q| placed[q]).count(), std::cmp::Reverse(w)))
            .unwrap();
        if adj[next].iter().all(|&q| !placed[q]) {
            break;
        }
        placed[next] = true;
        order.push(next);
    }
    assert_eq!(order.len(), pn, "pattern must be connected");
    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; host.order()];
    embed(0, &order, &adj, host, &mut map, &mut used)
}

fn embed(
    depth: usize,
    order: &[usize],
    adj: &[Vec<usize>],
    host: &Graph,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.order() {
        if used[h] || host.degree(h) < adj[p].len() {
            continue;
        }
        let fits = adj[p]
            .iter()
            .all(|&q| map[q] == usize::MAX || host.has_edge(map[q], h));
        if !fits {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if embed(depth + 1, order, adj, host, map, used) {
            return true;
        }
        map[p] = usize::MAX;
        used[h] = false;
    }
    false
}

pub fn naive_contains_fsk(host: &Graph, s: usize, k: usize) -> bool {
    let (pn, pe) = fsk_edges(s, k);
    contains_subgraph(pn, &pe, host)
}

/// Maximum induced complete bipartite subgraph by subset enumeration.
pub fn brute_biclique(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_complete_bipartite(g, &vs) {
            best = size;
        }
    }
    best
}

/// `G[vs]` is complete bipartite (a side may be empty).
pub fn is_complete_bipartite(g: &Graph, vs: &[usize]) -> bool {
    let mut side = vec![None; vs.len()];
    for start in 0..vs.len() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..vs.len() {
                if g.has_edge(vs[i], vs[j]) {
                    match side[j] {
                        None => {
                            side[j] = Some(!side[i].unwrap());
                            stack.push(j);
                        }
                        Some(c) if c == side[i].unwrap() => return false,
                        _ => {}
                    }
                }
            }
        }
    }
    let a = side.iter().filter(|c| **c == Some(false)).count();
    let b = vs.len() - a;
    let mut e = 0;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            e += g.has_edge(vs[i], vs[j]) as usize;
        }
    }
    e == a * b
}

/// Vertex count of a longest path, by dynamic programming over vertex
/// subsets: `ends[mask]` holds the possible last vertices of a path on `mask`.
pub fn longest_path_vertices(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16);
    let mut ends = vec![0u32; 1 << n];
    let mut best = 0;
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1usize..(1 << n) {
        if ends[mask] == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for v in 0..n {
            if ends[mask] >> v & 1 == 0 {
                continue;
            }
            for w in 0..n {
                if mask >> w & 1 == 0 && g.has_edge(v, w) {
                    ends[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    best
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random bipartite graph on sides `0..a` and `a..a+b`.
pub fn random_bipartite<R: Rng>(rng: &mut R, a: usize, b: usize, p: f64) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// `x`'s base-`t` digit in position `p`, by repeated division.
pub fn digit_oracle(x: u64, p: u32, t: u64) -> u64 {
    let mut y = x;
    for _ in 0..p {
        y /= t;
    }
    y % t
}

use fsk::construction::{Alpha, ConstructionLayout, VertexClass};

/// `(m, t, blocks, |Z|, |X_{t^s}|, |Y_{t^s}|)` recomputed from the
/// definition, or `None` when the residual is below 2.
pub fn oracle_layout(n: usize, s: usize, k: usize, alpha: Alpha) -> Option<[usize; 6]> {
    let mut m = 0usize;
    while (m + 1).pow(s as u32 + 1) <= n {
        m += 1;
    }
    let t = ((alpha.numer() as usize * m) / alpha.denom() as usize).max(1);
    let blocks = t.checked_pow(s as u32)?;
    let z = s * t * (2 * k - 1);
    let used = 2 * blocks * m + z;
    if used + 2 > n {
        return None;
    }
    let rest = n - used;
    Some([m, t, blocks, z, rest.div_ceil(2), rest / 2])
}

/// Adjacency of the minimum member, decided from the vertex labels alone.
pub fn oracle_adjacent(layout: &ConstructionLayout, u: usize, v: usize) -> bool {
    use VertexClass::*;
    let blocks = layout.blocks;
    let top = 2 * layout.k - 1;
    let attached = |i: usize, p: usize, q: usize| i < blocks && digit_oracle(i as u64, p as u32, layout.t as u64) as usize == q;
    match (layout.class_of[u], layout.class_of[v]) {
        (X { i }, Y { i: j }) | (Y { i: j }, X { i }) => i != j || i == blocks,
        (Z { p, q, r }, Z { p: p2, q: q2, r: r2 }) => p == p2 && q == q2 && r.abs_diff(r2) == 1,
        (Z { p, q, r }, X { i }) | (X { i }, Z { p, q, r }) => r == 1 && attached(i, p, q),
        (Z { p, q, r }, Y { i }) | (Y { i }, Z { p, q, r }) => r == top && attached(i, p, q),
        _ => false,
    }
}

pub fn oracle_edge_count(layout: &ConstructionLayout) -> u64 {
    let n = layout.n;
    let mut e = 0;
    for u in 0..n {
        for v in u + 1..n {
            e += oracle_adjacent(layout, u, v) as u64;
        }
    }
    e
}

/// A maximal `F_{s,k}`-free graph grown from a random near-bipartite seed
/// (`cross` density between halves, `inner` within them).
pub fn random_maximal(det: &fsk::freeness::Detector, n: usize, seed: u64, cross: f64, inner: f64) -> Graph {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let half = n / 2;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let p = if (u < half) != (v < half) { cross } else { inner };
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    while let Some(w) = det.find_copy(&g).unwrap() {
        g.delete_edge(w.hub_edge.0, w.hub_edge.1).unwrap();
    }
    det.saturate(&g).unwrap().graph
}
