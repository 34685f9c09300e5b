//! Maximum induced complete bipartite subgraphs by branch and bound, on a
//! planted instance and under a tight node budget.

use fsk::biclique::{max_induced_complete_bipartite, twin_classes};
use fsk::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 40;
    let mut g = Graph::new(n);
    // planted K_{6,8} on 0..14, noise elsewhere
    for u in 0..n {
        for v in u + 1..n {
            let planted = u < 6 && (6..14).contains(&v);
            let inside = v < 14;
            if planted || (!inside && rng.gen_bool(0.3)) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    println!("{} false-twin classes on {n} vertices", twin_classes(&g).len());

    let exact = max_induced_complete_bipartite(&g, 10_000_000);
    exact.best.validate(&g).unwrap();
    println!(
        "exact: |A| = {}, |B| = {}, optimal {}, {} nodes",
        exact.best.a.len(),
        exact.best.b.len(),
        exact.optimal,
        exact.nodes
    );

    let capped = max_induced_complete_bipartite(&g, 5);
    println!(
        "budget 5: best {}, optimal {}, certified upper bound {}",
        capped.best.size(),
        capped.optimal,
        capped.upper_bound
    );
}
