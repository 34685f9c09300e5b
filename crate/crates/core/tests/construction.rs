mod common;

use common::{digit_oracle, oracle_adjacent, oracle_edge_count, oracle_layout};
use fsk::construction::{
    build_min_member, certify_structure, digit, plan_layout, specified_edge_count, Alpha,
    ConstructionLayout, DigitParams,
};
use fsk::freeness::Detector;
use proptest::prelude::*;

fn alphas() -> [Alpha; 3] {
    [Alpha::new(1, 4).unwrap(), Alpha::new(1, 3).unwrap(), Alpha::half()]
}

#[test]
fn layout_matches_oracle_arithmetic() {
    for s in 2..=3 {
        for k in 2..=3 {
            for alpha in alphas() {
                for n in 1..=300 {
                    let planned = plan_layout(n, s, k, alpha);
                    match oracle_layout(n, s, k, alpha) {
                        None => assert!(planned.is_err(), "n={n} s={s} k={k} α={alpha}"),
                        Some([m, t, blocks, z, xl, yl]) => {
                            let l = planned.unwrap();
                            assert_eq!((l.m, l.t, l.blocks, l.z_vertices().len()), (m, t, blocks, z));
                            assert_eq!((l.x_block(blocks).len(), l.y_block(blocks).len()), (xl, yl));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn members_match_label_oracle() {
    for (n, s, k) in [(12, 2, 2), (64, 2, 2), (100, 2, 3), (256, 2, 2), (300, 3, 2)] {
        for alpha in alphas() {
            let Ok(layout) = plan_layout(n, s, k, alpha) else { continue };
            let g = build_min_member(&layout).graph;
            for u in 0..n {
                for v in u + 1..n {
                    assert_eq!(g.has_edge(u, v), oracle_adjacent(&layout, u, v), "{u}-{v} in n={n}");
                }
            }
            assert_eq!(specified_edge_count(&layout), oracle_edge_count(&layout));
        }
    }
}

#[test]
fn small_members_are_certified_and_free() {
    for n in 12..=60 {
        for alpha in alphas() {
            let Ok(layout) = plan_layout(n, 2, 2, alpha) else { continue };
            let member = build_min_member(&layout);
            let cert = certify_structure(&member);
            assert!(cert.passed(), "n={n} α={alpha}: {:?}", cert.failures().collect::<Vec<_>>());
            assert!(Detector::new(2, 2).unwrap().is_free(&member.graph).unwrap(), "n={n}");
        }
    }
}

#[test]
fn diagonal_edge_creates_a_copy() {
    // With every digit class populated, an X_i - Y_i edge closes s odd cycles
    // through the gadgets.
    let layout = plan_layout(64, 2, 2, Alpha::half()).unwrap();
    let mut g = build_min_member(&layout).graph;
    let (x, y) = (layout.x_block(0).start, layout.y_block(0).start);
    g.add_edge(x, y).unwrap();
    let det = Detector::new(2, 2).unwrap();
    let w = det.find_copy(&g).unwrap().expect("copy through the diagonal edge");
    w.validate(&g, None).unwrap();
}

proptest! {
    #[test]
    fn digits_round_trip(t in 1u64..8, s in 1u32..5, seed in any::<u64>()) {
        let params = DigitParams::new(t, s).unwrap();
        let x = seed % params.range();
        let mut sum = 0;
        for p in 0..s {
            let d = digit(x, p, params).unwrap();
            prop_assert_eq!(d, if t == 1 { 0 } else { digit_oracle(x, p, t) });
            sum += d * t.pow(p);
        }
        prop_assert_eq!(sum, x);
    }

    #[test]
    fn layout_json_round_trip(n in 12usize..400, s in 2usize..4, k in 2usize..4, a in 0usize..3) {
        if let Ok(layout) = plan_layout(n, s, k, alphas()[a]) {
            let doc = serde_json::to_string(&layout).unwrap();
            let back: ConstructionLayout = serde_json::from_str(&doc).unwrap();
            prop_assert_eq!(back, layout);
        }
    }
}
