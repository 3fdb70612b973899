//! Ramanujan primes: the least R_n with at least n primes in (x/2, x] for
//! every x >= R_n.
//!
//! Usage: cargo run --example ramanujan [max_n]

use coprime_lab::numtheory::{PrimeSieve, DEFAULT_SIEVE_LIMIT};

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a positive integer"))
        .unwrap_or(20);

    let sieve = PrimeSieve::new(DEFAULT_SIEVE_LIMIT).expect("limit >= 2");
    let table = sieve
        .ramanujan_primes(max_n)
        .expect("within sieve capacity");
    println!("{:>4} {:>8}", "n", "R_n");
    for (i, r) in table.iter().enumerate() {
        println!("{:>4} {r:>8}", i + 1);
    }
}
