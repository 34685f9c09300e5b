//! Saturates the n = 64 construction member and checks the structure the
//! lower-bound argument relies on: `X` and `Y` stay independent and every
//! diagonal pair `X_i, Y_i` stays empty. Then extracts a complete bipartite
//! core with the deletion pipeline.

use std::time::Instant;

use fsk::biclique::{build_uvt_partition, max_induced_complete_bipartite};
use fsk::construction::{build_min_member, plan_layout, Alpha};
use fsk::freeness::Detector;
use fsk::stability::deletion_pipeline;
use fsk::VertexSet;

fn main() {
    let layout = plan_layout(64, 2, 2, Alpha::half()).expect("feasible layout");
    let member = build_min_member(&layout);
    let det = Detector::new(2, 2).unwrap();

    let clock = Instant::now();
    let sat = det.saturate(&member.graph).expect("member is F-free");
    println!(
        "saturation added {} edges ({} -> {}) in {:.1?}",
        sat.added.len(),
        member.graph.edge_count(),
        sat.graph.edge_count(),
        clock.elapsed()
    );
    let g = &sat.graph;

    let x = VertexSet::from_vertices(64, layout.x_vertices());
    let y = VertexSet::from_vertices(64, layout.y_vertices());
    println!("X independent: {}", g.is_independent(&x));
    println!("Y independent: {}", g.is_independent(&y));
    let diagonal_edges: usize = (0..layout.blocks)
        .map(|i| {
            let xi = VertexSet::from_vertices(64, layout.x_block(i));
            let yi = VertexSet::from_vertices(64, layout.y_block(i));
            g.edges_between(&xi, &yi)
        })
        .sum();
    println!("edges inside diagonal pairs: {diagonal_edges}");

    let clock = Instant::now();
    let bic = max_induced_complete_bipartite(g, 100_000_000);
    println!(
        "max induced biclique: {} (optimal: {}, bound {}, {} nodes, {:.1?}); ceiling {}",
        bic.best.size(),
        bic.optimal,
        bic.upper_bound,
        bic.nodes,
        clock.elapsed(),
        layout.biclique_ceiling()
    );

    let clock = Instant::now();
    let h = det.params().order();
    let (part, _) = build_uvt_partition(g, h, 0);
    let out = deletion_pipeline(g, &part, 2, 2).expect("saturated input is maximal");
    println!(
        "partition |U|={} |V|={} |T|={}; core {} after {} steps deleting {} ({:.1?})",
        part.u.len(),
        part.v.len(),
        part.t.len(),
        out.core.size(),
        out.trace.steps.len(),
        out.trace.deleted_total,
        clock.elapsed()
    );
}
