//! The prime-interval criterion for K_{m,n} with m < n: for each m, the
//! Ramanujan-prime threshold beyond which every K_{m,n} is prime, plus the
//! scattered smaller n that are prime anyway, and a sample construction.
//!
//! Usage: cargo run --example kmn_criterion [max_m]

use coprime_lab::bipartite::{kmn_construct, kmn_exception_scan, kmn_threshold};
use coprime_lab::numtheory::{PrimeSieve, DEFAULT_SIEVE_LIMIT};

fn main() {
    let max_m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_m must be a positive integer"))
        .unwrap_or(13);

    let sieve = PrimeSieve::new(DEFAULT_SIEVE_LIMIT).expect("limit >= 2");
    println!("{:>3} {:>12}  small prime cases", "m", "threshold");
    for m in 3..=max_m {
        let threshold = kmn_threshold(&sieve, m).expect("within sieve capacity");
        let exceptions = kmn_exception_scan(&sieve, m).expect("within sieve capacity");
        let list = if exceptions.is_empty() {
            "(none)".to_string()
        } else {
            exceptions
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        println!("{m:>3} {threshold:>12}  {list}");
    }

    println!("\nsample construction for K_{{3,4}}:");
    let l = kmn_construct(&sieve, 3, 4).expect("criterion holds");
    println!("  A: {:?}", l.a_side());
    println!("  B: {:?}", l.b_side());
}
