//! Exact pr(K_{n,n}) values and minimal-labeling counts, row by row.
//!
//! Usage: cargo run --release --example pr_table [max_n]

use coprime_lab::bipartite::{pr_search, SearchBudget};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(13);

    let budget = SearchBudget::default();
    println!("{:>3} {:>6} {:>9} {:>10}", "n", "pr", "count", "nodes");
    for n in 1..=max_n {
        let report = pr_search(n, true, &budget).expect("search within budget");
        println!(
            "{n:>3} {:>6} {:>9} {:>10}",
            report.pr_value,
            report.labelings.len(),
            report.nodes_explored
        );
    }
}
