//! Popop label sets: products of powers of a chosen prime set, the
//! complementary side built from the smallest coprime integers, and how the
//! result stacks up against the true minimal bound.
//!
//! The generator set {2,7,11,13} at n = 12 reproduces the unique minimal
//! coprime labeling of K_{12,12} exactly.
//!
//! Usage: cargo run --release --example popop_sets

use coprime_lab::bipartite::{popop, popop_partition, pr_search, SearchBudget};

fn row(s: &[u64]) -> String {
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    println!("popop({{2,3}}, 9)        = {}", row(&popop(&[2, 3], 9)));
    println!(
        "popop({{2,7,11,13}}, 12) = {}\n",
        row(&popop(&[2, 7, 11, 13], 12))
    );

    let budget = SearchBudget::default();
    for (primes, n) in [
        (vec![2u64, 7, 11, 13], 12usize),
        (vec![2, 3], 5),
        (vec![2, 3], 8),
    ] {
        let pr = pr_search(n, false, &budget)
            .expect("search in budget")
            .pr_value;
        let report = popop_partition(&primes, n, Some(pr));
        println!("primes {{{}}}, n = {n}:", row(&primes));
        println!("  A: {}", row(&report.a_side));
        println!("  B: {}", row(&report.b_side));
        println!(
            "  max label {} vs pr(K_{{{n},{n}}}) = {pr}; coprime valid: {}, achieves pr: {}\n",
            report.max_label,
            report.coprime_valid,
            report.achieves_pr.unwrap(),
        );
    }
}
