//! Prime-pair witnesses for every ladder size up to a bound: the smallest
//! p (1 or a prime below 2n+1) with 2n+p prime. Each hit yields a cyclic
//! prime labeling; a miss would be a noteworthy finding, so misses are
//! collected and reported rather than aborting the scan.
//!
//! Usage: cargo run --release --example witness_scan [max_n]

use coprime_lab::ladders::prime_pair_witness;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(1000);

    let mut misses = Vec::new();
    let mut histogram: std::collections::BTreeMap<u64, usize> = Default::default();
    for n in 1..=max_n {
        match prime_pair_witness(n, 2 * n as u64) {
            Ok(w) => {
                *histogram.entry(w.p).or_default() += 1;
                if !w.labeling.is_prime_labeling() {
                    misses.push(format!("n = {n}: witness p = {} failed verification", w.p));
                }
            }
            Err(e) => misses.push(format!("n = {n}: {e}")),
        }
    }

    println!("witness p frequencies over n = 1..={max_n}:");
    for (p, count) in &histogram {
        println!("  p = {p:>4}: {count}");
    }
    if misses.is_empty() {
        println!(
            "\nevery ladder up to {max_n} rungs has a cyclic prime labeling from a prime pair"
        );
    } else {
        println!("\nfindings:");
        for m in &misses {
            println!("  {m}");
        }
    }
}
