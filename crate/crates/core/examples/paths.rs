//! Path finders: exact-length parity paths avoiding a set, long paths in
//! the Erdős–Gallai density regime, and slicing a path into short pieces.

use fsk::biclique::{find_long_path, find_parity_path, truncate_into_disjoint_paths};
use fsk::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let g = Graph::complete_bipartite(6, 6);
    let w = VertexSet::from_vertices(12, [1, 7, 8]);
    for length in [2, 3, 4, 5] {
        let (u, v) = if length % 2 == 0 { (0, 2) } else { (0, 6) };
        println!("{u}-{v} length {length} avoiding {:?}: {:?}", w.to_vec(), find_parity_path(&g, u, v, length, &w));
    }
    println!("parity mismatch: {:?}", find_parity_path(&g, 0, 2, 3, &w));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 60;
    let mut h = Graph::new(n);
    while 2 * h.edge_count() <= 10 * n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            h.add_edge(u, v).unwrap();
        }
    }
    let long = find_long_path(&h, 12);
    println!(
        "{} edges on {n} vertices, path on 12 vertices guaranteed {}: {:?}",
        h.edge_count(),
        long.guaranteed,
        long.path
    );

    let path: Vec<usize> = (0..12).collect();
    let even = VertexSet::from_vertices(12, (0..12).step_by(2));
    println!("two length-2 pieces: {:?}", truncate_into_disjoint_paths(&path, 2, 2, &even));
    println!("five length-2 pieces: {:?}", truncate_into_disjoint_paths(&path, 5, 2, &even));
}
