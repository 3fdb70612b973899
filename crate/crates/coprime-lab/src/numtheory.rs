//! Number-theoretic primitives shared by every other module: gcd, a prime
//! sieve with a prefix counting table, prime intervals with an exact
//! half-integer lower endpoint, and Ramanujan primes.
//!
//! All primality here is deterministic. Bulk queries go through
//! [`PrimeSieve`]; one-off checks on small integers use trial division via
//! [`is_prime`].

use std::fmt;

/// Sieve size used by the CLI when nothing else is configured.
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Greatest common divisor by the Euclidean algorithm.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// Deterministic trial-division primality test for small standalone checks.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x.is_multiple_of(2) {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact multiple of one half.
///
/// Interval endpoints like (m+n)/2 can land between integers; storing twice
/// the value keeps the strict comparison `t < x` exact (it becomes the
/// integer comparison `2x > 2t`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Half(u64);

impl Half {
    /// The integer `t`, as a half-valued bound.
    pub fn from_int(t: u64) -> Self {
        Half(2 * t)
    }

    /// The bound `numerator / 2`, kept exact even when `numerator` is odd.
    pub fn half_of(numerator: u64) -> Self {
        Half(numerator)
    }

    /// Twice the bound's value.
    pub fn doubled(self) -> u64 {
        self.0
    }

    /// Strict comparison `self < x` without leaving the integers.
    pub fn less_than(self, x: u64) -> bool {
        2 * x > self.0
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumTheoryError {
    /// A sieve needs `limit >= 2` to hold any prime at all.
    LimitTooSmall { limit: u64 },
    /// A query reached past the sieve's table.
    BeyondSieve { value: u64, limit: u64 },
    /// The sieve is too small to certify the requested Ramanujan prime.
    RamanujanCapacity { n: u32, limit: u64 },
}

impl fmt::Display for NumTheoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumTheoryError::LimitTooSmall { limit } => {
                write!(f, "sieve limit {limit} is below 2")
            }
            NumTheoryError::BeyondSieve { value, limit } => {
                write!(f, "value {value} exceeds sieve limit {limit}")
            }
            NumTheoryError::RamanujanCapacity { n, limit } => {
                write!(
                    f,
                    "sieve limit {limit} cannot certify the Ramanujan prime for n = {n}; \
                     raise the limit"
                )
            }
        }
    }
}

impl std::error::Error for NumTheoryError {}

/// Primality table, ordered prime list, and prefix prime counts up to a limit.
///
/// Immutable after construction; all queries are read-only.
#[derive(Clone, Debug)]
pub struct PrimeSieve {
    limit: u64,
    is_prime: Vec<bool>,
    primes: Vec<u64>,
    pi: Vec<u32>,
}

impl PrimeSieve {
    /// Sieve of Eratosthenes up to `limit` inclusive. Rejects `limit < 2`.
    pub fn new(limit: u64) -> Result<Self, NumTheoryError> {
        if limit < 2 {
            return Err(NumTheoryError::LimitTooSmall { limit });
        }
        let size = limit as usize + 1;
        let mut is_prime = vec![true; size];
        is_prime[0] = false;
        is_prime[1] = false;
        let mut p = 2usize;
        while p * p < size {
            if is_prime[p] {
                let mut m = p * p;
                while m < size {
                    is_prime[m] = false;
                    m += p;
                }
            }
            p += 1;
        }
        let mut primes = Vec::new();
        let mut pi = vec![0u32; size];
        let mut count = 0u32;
        for x in 0..size {
            if is_prime[x] {
                count += 1;
                primes.push(x as u64);
            }
            pi[x] = count;
        }
        Ok(PrimeSieve {
            limit,
            is_prime,
            primes,
            pi,
        })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Table lookup; `x` must not exceed the sieve limit.
    pub fn is_prime(&self, x: u64) -> bool {
        assert!(
            x <= self.limit,
            "is_prime({x}) beyond sieve limit {}",
            self.limit
        );
        self.is_prime[x as usize]
    }

    /// All primes `<= limit`, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The prime counting function pi(x); `x` must not exceed the sieve limit.
    pub fn prime_count(&self, x: u64) -> u64 {
        assert!(
            x <= self.limit,
            "prime_count({x}) beyond sieve limit {}",
            self.limit
        );
        u64::from(self.pi[x as usize])
    }

    /// The set P(t, v): all primes x with t < x <= v, ascending.
    pub fn primes_in_interval(&self, t: Half, v: u64) -> Result<Vec<u64>, NumTheoryError> {
        if v > self.limit {
            return Err(NumTheoryError::BeyondSieve {
                value: v,
                limit: self.limit,
            });
        }
        let start = self.primes.partition_point(|&p| !t.less_than(p));
        Ok(self.primes[start..]
            .iter()
            .copied()
            .take_while(|&p| p <= v)
            .collect())
    }

    /// The n-th Ramanujan prime: the least R such that
    /// pi(x) - pi(floor(x/2)) >= n for every x >= R.
    ///
    /// The defining inequality is checked across the whole sieve, and the
    /// result is only returned when the sieve extends to at least four times
    /// the candidate, so the tail condition is not a near-boundary artifact.
    pub fn ramanujan_prime(&self, n: u32) -> Result<u64, NumTheoryError> {
        let table = self.ramanujan_primes(n)?;
        Ok(table[n as usize - 1])
    }

    /// Ramanujan primes R_1 ..= R_max_n in one pass over the sieve.
    pub fn ramanujan_primes(&self, max_n: u32) -> Result<Vec<u64>, NumTheoryError> {
        assert!(max_n >= 1, "ramanujan_primes requires max_n >= 1");
        let mut table = vec![0u64; max_n as usize];
        // Scanning x downward, R_n = x + 1 at the first x where the count of
        // primes in (x/2, x] drops below n. Larger x never violate again, so
        // each n is settled exactly once.
        let mut next_unset = max_n;
        let mut x = self.limit;
        while x >= 1 && next_unset >= 1 {
            let in_upper_half =
                u64::from(self.pi[x as usize]) - u64::from(self.pi[(x / 2) as usize]);
            while u64::from(next_unset) > in_upper_half {
                table[next_unset as usize - 1] = x + 1;
                next_unset -= 1;
                if next_unset == 0 {
                    break;
                }
            }
            x -= 1;
        }
        if next_unset > 0 {
            return Err(NumTheoryError::RamanujanCapacity {
                n: next_unset,
                limit: self.limit,
            });
        }
        for (i, &r) in table.iter().enumerate() {
            if 4 * r > self.limit {
                return Err(NumTheoryError::RamanujanCapacity {
                    n: i as u32 + 1,
                    limit: self.limit,
                });
            }
            debug_assert!(self.is_prime(r), "R_{} = {r} is not prime", i + 1);
        }
        Ok(table)
    }
}
