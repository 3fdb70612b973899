//! The three closed-form ladder labelings, with column sums and verifier
//! output for each.
//!
//! Usage: cargo run --example ladder_labelings [n]

use coprime_lab::ladders::{
    cyclic_origin_labeling, cyclic_prime_pair_labeling, sequential_labeling, LadderLabeling,
};
use coprime_lab::numtheory::is_prime;

fn show(name: &str, labeling: &LadderLabeling) {
    println!("{name}");
    println!("{labeling}");
    let sums: Vec<String> = labeling
        .column_sums()
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("column sums: {}", sums.join(" "));
    println!("prime labeling: {}\n", labeling.is_prime_labeling());
}

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(10);

    match sequential_labeling(n) {
        Ok(l) => show(
            &format!("sequential rows (n = {n}, n+1 = {} prime)", n + 1),
            &l,
        ),
        Err(e) => println!("sequential rows: {e}\n"),
    }

    match cyclic_origin_labeling(n) {
        Ok(l) => show(
            &format!(
                "cyclic from the origin (n = {n}, 2n+1 = {} prime)",
                2 * n + 1
            ),
            &l,
        ),
        Err(e) => println!("cyclic from the origin: {e}\n"),
    }

    let pairs: Vec<u64> = (3..2 * n as u64 + 1)
        .filter(|&p| is_prime(p) && is_prime(2 * n as u64 + p))
        .collect();
    if pairs.is_empty() {
        println!("no prime p < 2n+1 makes 2n+p prime for n = {n}");
    }
    for p in pairs {
        let l = cyclic_prime_pair_labeling(n, p).expect("pair admissible");
        show(
            &format!("cyclic for the pair ({p}, {})", 2 * n as u64 + p),
            &l,
        );
    }
}
