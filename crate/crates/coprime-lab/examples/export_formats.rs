//! One labeling, three serializations: the JSON schema (round-trippable),
//! DOT for rendering, and the two-row CSV matching the drawing layout.
//!
//! Usage: cargo run --example export_formats

use coprime_lab::format::{to_csv, to_dot, LabelingFile};
use coprime_lab::ladders::cyclic_prime_pair_labeling;

fn main() {
    let (graph, labeling) = cyclic_prime_pair_labeling(10, 3)
        .expect("(3, 23) is a prime pair")
        .to_graph_labeling();

    let file = LabelingFile::from_parts(&graph, &labeling);
    let json = file.to_json();
    println!("JSON:\n{json}\n");

    let reparsed = LabelingFile::from_json(&json).expect("own output parses");
    assert_eq!(reparsed.to_json(), json, "emit -> parse -> emit is stable");

    println!("DOT:\n{}", to_dot(&graph, &labeling));
    println!("CSV:\n{}", to_csv(&graph, &labeling));
}
