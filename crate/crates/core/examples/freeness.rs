//! Exact `F_{s,k}` detection: a witness in a small dense graph, freeness of
//! the construction, the copy created by a diagonal edge, and maximality of
//! complete bipartite graphs.

use fsk::construction::{build_min_member, plan_layout, Alpha};
use fsk::freeness::{is_fsk_free, Detector};
use fsk::Graph;

fn main() {
    let det = Detector::new(2, 2).unwrap();

    let (free, witness) = is_fsk_free(&Graph::complete(8), 2, 2).unwrap();
    let w = witness.expect("K_8 contains F_{2,2}");
    println!("K_8 free: {free}; hub edge {:?}, cycles {:?} and {:?}", w.hub_edge, w.path(0), w.path(1));

    let layout = plan_layout(64, 2, 2, Alpha::half()).unwrap();
    let member = build_min_member(&layout);
    println!("n = 64 member free: {}", det.is_free(&member.graph).unwrap());

    let (x, y) = (layout.x_block(0).start, layout.y_block(0).start);
    match det.find_using_edge(&member.graph, x, y).unwrap() {
        Some(w) => {
            w.validate(&member.graph, Some((x, y))).unwrap();
            println!("adding {x}-{y} inside X_0, Y_0 creates a copy with hub {:?}", w.hub_edge);
        }
        None => println!("adding {x}-{y} creates no copy"),
    }

    let report = det.check_maximal(&member.graph).unwrap();
    println!(
        "member maximal: {} ({} of {} non-edges can be added)",
        report.maximal,
        report.failing.len(),
        report.probed
    );

    for m in [4, 8] {
        let r = det.check_maximal(&Graph::complete_bipartite(m, m)).unwrap();
        println!("K_{{{m},{m}}} maximal: {}", r.maximal);
    }
}
