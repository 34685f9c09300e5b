//! graph6 and edge-list round trips.

use fsk::graph::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use fsk::Graph;

fn main() {
    let g = Graph::petersen();
    let text = encode_graph6(&g).unwrap();
    println!("Petersen graph6: {text}");
    assert_eq!(decode_graph6(&text).unwrap(), g);

    let list = write_edge_list(&Graph::cycle(5));
    print!("C_5 edge list:\n{list}");
    let back = parse_edge_list(&list).unwrap();
    println!("parsed back: {} vertices, {} edges", back.order(), back.edge_count());

    let big = Graph::path(100);
    let text = encode_graph6(&big).unwrap();
    println!("P_100 graph6 is {} bytes, header {:?}", text.len(), &text[..1]);
}
