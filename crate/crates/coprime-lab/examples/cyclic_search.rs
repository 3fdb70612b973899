//! Exhaustive consecutive cyclic search on a ladder: every top-row placement
//! of the label 1, what the column-sum screen says about it, and whether the
//! full verifier accepts it.
//!
//! Usage: cargo run --example cyclic_search [n]

use coprime_lab::graphs;
use coprime_lab::ladders::{screen_column_sums, ColumnSumScreen, CyclicPlacement};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(10);

    println!("consecutive cyclic placements on the {n}-rung ladder\n");
    let mut winners = Vec::new();
    for position in 1..=n {
        let placement = CyclicPlacement::new(n, position).expect("position in range");
        let screen = screen_column_sums(&placement);
        let (graph, labeling) = placement.labeling().to_graph_labeling();
        let violations = graphs::verify(&graph, &labeling).expect("sizes match");
        let verdict = match (&screen, violations.is_empty()) {
            (ColumnSumScreen::RejectComposite { column_sum }, _) => {
                format!("screened out (column sum {column_sum} composite)")
            }
            (ColumnSumScreen::Candidate, true) => {
                winners.push(position);
                "prime labeling".to_string()
            }
            (ColumnSumScreen::Candidate, false) => {
                let v = &violations[0];
                format!(
                    "candidate, but rung ({}, {}) shares {}",
                    v.label_a, v.label_b, v.common_divisor
                )
            }
        };
        println!(
            "position {position:3}  k_below = {:3}  {verdict}",
            placement.k_below()
        );
    }
    let list: Vec<String> = winners.iter().map(|w| w.to_string()).collect();
    println!("\nsuccessful positions: {}", list.join(" "));
}
