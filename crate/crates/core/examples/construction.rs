//! Plans the digit-block layout, builds the minimum member, checks its
//! certificate and edge count, and compares the size with the lower bound.

use fsk::construction::{
    build_min_member, certify_structure, digit, edge_bound_check, plan_layout, Alpha,
};

fn main() {
    let alpha = Alpha::half();
    for n in [11, 40, 64, 256] {
        let layout = match plan_layout(n, 2, 2, alpha) {
            Ok(l) => l,
            Err(e) => {
                println!("n = {n}: {e}");
                continue;
            }
        };
        let member = build_min_member(&layout);
        let cert = certify_structure(&member);
        let bound = edge_bound_check(&member, member.graph.edge_count() as u64);
        println!(
            "n = {n}: m = {}, t = {}, {} blocks, |X| = {}, |Y| = {}, |Z| = {}, degenerate: {}",
            layout.m,
            layout.t,
            layout.blocks,
            layout.x_size(),
            layout.y_size(),
            layout.z_vertices().len(),
            layout.is_degenerate()
        );
        println!(
            "  edges {} (closed form {}), certificate {}, bound holds {} (margin ≈ {:.1}, theorem scale {})",
            member.graph.edge_count(),
            member.specified_edge_count,
            if cert.passed() { "passed" } else { "FAILED" },
            bound.holds,
            bound.margin_approx,
            bound.theorem_scale
        );
    }

    let layout = plan_layout(256, 2, 2, alpha).unwrap();
    let params = layout.digit_params();
    for i in 0..layout.blocks {
        let digits: Vec<u64> = (0..2).map(|p| digit(i as u64, p, params).unwrap()).collect();
        println!("block {i}: digits {digits:?}");
    }
    println!("layout JSON: {} bytes", serde_json::to_string(&layout).unwrap().len());
}
