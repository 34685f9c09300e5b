//! The stability pipeline on a random maximal `F_{2,2}`-free graph: the
//! `(U, V, T)` partition, the classified non-edges, the deletion steps, the
//! surviving complete bipartite core and the deletion bound.

use fsk::biclique::build_uvt_partition;
use fsk::construction::Alpha;
use fsk::freeness::Detector;
use fsk::stability::{bound_report, deletion_pipeline};
use fsk::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let det = Detector::new(2, 2).unwrap();
    let n = 40;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let across = (u < n / 2) != (v < n / 2);
            if rng.gen_bool(if across { 0.5 } else { 0.03 }) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    while let Some(w) = det.find_copy(&g).unwrap() {
        g.delete_edge(w.hub_edge.0, w.hub_edge.1).unwrap();
    }
    let g = det.saturate(&g).unwrap().graph;
    println!("maximal F_{{2,2}}-free graph: {n} vertices, {} edges", g.edge_count());

    for h in [1, 2, det.params().order()] {
        let (part, trace) = build_uvt_partition(&g, h, 0);
        let out = deletion_pipeline(&g, &part, 2, 2).unwrap();
        println!(
            "h = {h}: |U| = {}, |V| = {}, |T| = {} (initial {:?}), {} non-edges classified {:?}",
            part.u.len(),
            part.v.len(),
            part.t.len(),
            trace.initial,
            out.trace.omega_size,
            out.trace.class_counts
        );
        for step in out.trace.steps.iter().take(3) {
            println!(
                "  probe {:?} {:?}: candidates {} / {}, deleted {:?} from {:?}",
                step.probe, step.class, step.x_candidates, step.y_candidates, step.deleted, step.deleted_side
            );
        }
        let bound = bound_report(&out.trace, n, 2, 2, Alpha::new(1, 4).unwrap());
        println!(
            "  {} steps delete {}; core K_{{{},{}}}; bound {} (vacuous {})",
            out.trace.steps.len(),
            out.trace.deleted_total,
            out.core.a.len(),
            out.core.b.len(),
            bound.bound,
            bound.vacuous
        );
    }
}
