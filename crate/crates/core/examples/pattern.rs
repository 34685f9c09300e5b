//! Builds `F_{s,k}` for a few parameter pairs and prints its order, size,
//! chromatic numbers with and without the hub edge, and graph6 encoding.

use fsk::graph::encode_graph6;
use fsk::pattern::{build_fsk, chromatic_number, is_color_critical_edge};

fn main() {
    for (s, k) in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 4)] {
        let p = build_fsk(s, k).expect("valid parameters");
        p.validate().expect("labelled structure");
        println!(
            "F_{{{s},{k}}}: {} vertices, {} edges, χ = {}, χ without ab = {}, critical ab: {}, graph6 {}",
            p.graph.order(),
            p.graph.edge_count(),
            chromatic_number(&p.graph).unwrap(),
            chromatic_number(&p.without_hub_edge()).unwrap(),
            is_color_critical_edge(&p),
            encode_graph6(&p.graph).unwrap()
        );
    }
    let p = build_fsk(2, 2).unwrap();
    for i in 0..2 {
        println!("F_{{2,2}} cycle {i}: {:?}", p.full_path(i));
    }
}
