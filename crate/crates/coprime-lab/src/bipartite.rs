//! Complete bipartite graphs: exact computation of the minimal coprime bound
//! pr(K_{n,n}) with full enumeration of the minimal labelings, popop label
//! sets, and the prime-interval criterion with its Ramanujan-prime threshold
//! for K_{m,n}.
//!
//! The search branches on primes rather than labels. Two labels sharing a
//! prime factor can never sit on opposite sides, so every coprime labeling
//! is induced by an assignment of each prime q <= k to side A or side B: a
//! composite label is usable on a side exactly when all of its prime factors
//! live there, and the label 1 is a free agent placed last. Enumerating
//! these assignments with pool-size pruning exhausts the space at a tiny
//! fraction of the cost of permuting labels.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use crate::graphs::{Graph, Labeling};
use crate::numtheory::{gcd, is_prime, Half, NumTheoryError, PrimeSieve};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartiteError {
    ZeroSize,
    /// The side sets overlap, contain zero, or repeat a label.
    MalformedSides,
    /// The search passed its node or time budget before finishing. Distinct
    /// from "no labeling exists": nothing was certified.
    BudgetExceeded {
        nodes_explored: u64,
        at_bound: u64,
    },
    /// The prime-interval criterion is stated for m < n.
    RequiresSmallerSide {
        m: usize,
        n: usize,
    },
    /// The criterion fails, so no prime labeling of K_{m,n} exists.
    CriterionFails {
        m: usize,
        n: usize,
    },
    MTooSmall {
        m: usize,
        min: usize,
    },
    Num(NumTheoryError),
}

impl fmt::Display for BipartiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BipartiteError::ZeroSize => write!(f, "side size must be at least 1"),
            BipartiteError::MalformedSides => {
                write!(f, "sides must be disjoint sets of distinct positive labels")
            }
            BipartiteError::BudgetExceeded {
                nodes_explored,
                at_bound,
            } => write!(
                f,
                "search budget exceeded after {nodes_explored} nodes while trying bound k = {at_bound}"
            ),
            BipartiteError::RequiresSmallerSide { m, n } => {
                write!(f, "criterion requires m < n (got m = {m}, n = {n})")
            }
            BipartiteError::CriterionFails { m, n } => {
                write!(f, "K_{{{m},{n}}} has no prime labeling: the prime-interval criterion fails")
            }
            BipartiteError::MTooSmall { m, min } => {
                write!(f, "m must be at least {min} (got {m})")
            }
            BipartiteError::Num(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for BipartiteError {}

impl From<NumTheoryError> for BipartiteError {
    fn from(e: NumTheoryError) -> Self {
        BipartiteError::Num(e)
    }
}

/// Two disjoint label sets for the sides of a complete bipartite graph,
/// each stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartiteLabeling {
    a_side: Vec<u64>,
    b_side: Vec<u64>,
}

impl PartiteLabeling {
    pub fn new(mut a_side: Vec<u64>, mut b_side: Vec<u64>) -> Result<Self, BipartiteError> {
        if a_side.is_empty() || b_side.is_empty() {
            return Err(BipartiteError::ZeroSize);
        }
        a_side.sort_unstable();
        b_side.sort_unstable();
        let mut seen = HashSet::new();
        for &l in a_side.iter().chain(b_side.iter()) {
            if l == 0 || !seen.insert(l) {
                return Err(BipartiteError::MalformedSides);
            }
        }
        Ok(PartiteLabeling { a_side, b_side })
    }

    pub fn a_side(&self) -> &[u64] {
        &self.a_side
    }

    pub fn b_side(&self) -> &[u64] {
        &self.b_side
    }

    pub fn max_label(&self) -> u64 {
        let a = *self.a_side.last().expect("nonempty");
        let b = *self.b_side.last().expect("nonempty");
        a.max(b)
    }

    /// Cross check: every pair of labels on opposite sides is coprime.
    pub fn is_coprime_valid(&self) -> bool {
        self.a_side
            .iter()
            .all(|&a| self.b_side.iter().all(|&b| gcd(a, b) == 1))
    }

    /// Equality as an unordered pair of sets.
    pub fn unordered_eq(&self, other: &PartiteLabeling) -> bool {
        (self.a_side == other.a_side && self.b_side == other.b_side)
            || (self.a_side == other.b_side && self.b_side == other.a_side)
    }

    /// The same partition with the lexicographically smaller side listed
    /// first, so unordered pairs compare and sort deterministically.
    pub fn canonical(self) -> PartiteLabeling {
        if self.a_side <= self.b_side {
            self
        } else {
            PartiteLabeling {
                a_side: self.b_side,
                b_side: self.a_side,
            }
        }
    }

    /// Expands into a complete bipartite graph plus a flat labeling (A side
    /// first), with bound k defaulting to the largest label.
    pub fn to_graph_labeling(&self, bound_k: Option<u64>) -> (Graph, Labeling) {
        let graph = Graph::complete_bipartite(self.a_side.len(), self.b_side.len())
            .expect("sides are nonempty");
        let mut labels = self.a_side.clone();
        labels.extend(&self.b_side);
        let k = bound_k.unwrap_or_else(|| self.max_label());
        let labeling = Labeling::new(labels, k).expect("sides were validated");
        (graph, labeling)
    }
}

/// Node and wall-clock limits for the exact search. Exceeding either is a
/// hard error, never a silently truncated answer.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: u64::MAX,
            time_limit: None,
        }
    }
}

/// Result of an exact pr(K_{n,n}) computation.
///
/// `labelings` holds minimal coprime labelings in canonical form: an
/// unordered pair of disjoint n-sets, smaller side first, with the A/B
/// mirror image deduplicated. `nodes_explored` is a diagnostic only.
#[derive(Clone, Debug)]
pub struct PrSearchReport {
    pub n: usize,
    pub pr_value: u64,
    pub labelings: Vec<PartiteLabeling>,
    pub nodes_explored: u64,
}

struct BoundSearch<'a> {
    n: usize,
    k: u64,
    /// Primes <= k, ascending; branching order (small primes first touches
    /// the most labels and prunes earliest).
    primes: &'a [u64],
    /// factor_mask[x] has bit i set iff primes[i] divides x.
    factor_mask: Vec<u64>,
    count_all: bool,
    found: BTreeSet<(Vec<u64>, Vec<u64>)>,
    witness: Option<(Vec<u64>, Vec<u64>)>,
    budget: &'a SearchBudget,
    started: Instant,
    nodes: u64,
}

impl<'a> BoundSearch<'a> {
    fn new(
        n: usize,
        k: u64,
        primes: &'a [u64],
        count_all: bool,
        budget: &'a SearchBudget,
        started: Instant,
        nodes_so_far: u64,
    ) -> Self {
        assert!(
            primes.len() <= 64,
            "prime assignment masks hold at most 64 primes"
        );
        let mut factor_mask = vec![0u64; k as usize + 1];
        for (i, &p) in primes.iter().enumerate() {
            let mut m = p;
            while m <= k {
                factor_mask[m as usize] |= 1 << i;
                m += p;
            }
        }
        BoundSearch {
            n,
            k,
            primes,
            factor_mask,
            count_all,
            found: BTreeSet::new(),
            witness: None,
            budget,
            started,
            nodes: nodes_so_far,
        }
    }

    fn charge_node(&mut self) -> Result<(), BipartiteError> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(BipartiteError::BudgetExceeded {
                nodes_explored: self.nodes,
                at_bound: self.k,
            });
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    return Err(BipartiteError::BudgetExceeded {
                        nodes_explored: self.nodes,
                        at_bound: self.k,
                    });
                }
            }
        }
        Ok(())
    }

    /// Walks the assignment tree. The first prime is pinned to side A: the
    /// global A/B mirror maps every labeling onto one with that orientation,
    /// and results are deduplicated as unordered pairs anyway.
    fn dfs(&mut self, depth: usize, a_mask: u64, b_mask: u64) -> Result<(), BipartiteError> {
        self.charge_node()?;

        let mut a_pot = 0usize;
        let mut b_pot = 0usize;
        let mut alive = 0usize;
        for x in 2..=self.k as usize {
            let fm = self.factor_mask[x];
            let a_ok = fm & b_mask == 0;
            let b_ok = fm & a_mask == 0;
            a_pot += usize::from(a_ok);
            b_pot += usize::from(b_ok);
            alive += usize::from(a_ok || b_ok);
        }
        // The label 1 can top up exactly one side, so a completion needs
        // pools of at least n-1 and n-1 that jointly cover 2n-1 labels.
        if a_pot + 1 < self.n || b_pot + 1 < self.n || alive + 1 < 2 * self.n {
            return Ok(());
        }

        if depth == self.primes.len() {
            return self.leaf(a_mask, b_mask);
        }

        let bit = 1u64 << depth;
        self.dfs(depth + 1, a_mask | bit, b_mask)?;
        if !self.count_all && self.witness.is_some() {
            return Ok(());
        }
        if depth > 0 {
            self.dfs(depth + 1, a_mask, b_mask | bit)?;
        }
        Ok(())
    }

    fn leaf(&mut self, a_mask: u64, b_mask: u64) -> Result<(), BipartiteError> {
        let mut pool_a = Vec::new();
        let mut pool_b = Vec::new();
        for x in 2..=self.k {
            let fm = self.factor_mask[x as usize];
            if fm & b_mask == 0 {
                pool_a.push(x);
            } else if fm & a_mask == 0 {
                pool_b.push(x);
            }
        }
        // The prune above already guaranteed feasibility at the leaf.
        debug_assert!(pool_a.len() + 1 >= self.n && pool_b.len() + 1 >= self.n);
        debug_assert!(pool_a.len() + pool_b.len() + 1 >= 2 * self.n);

        if !self.count_all {
            let (a, b) = if pool_a.len() >= self.n && pool_b.len() >= self.n {
                (pool_a[..self.n].to_vec(), pool_b[..self.n].to_vec())
            } else if pool_a.len() < self.n {
                let mut a = vec![1];
                a.extend(&pool_a);
                (a, pool_b[..self.n].to_vec())
            } else {
                let mut b = vec![1];
                b.extend(&pool_b);
                (pool_a[..self.n].to_vec(), b)
            };
            self.witness = Some(if a <= b { (a, b) } else { (b, a) });
            return Ok(());
        }

        for (one_to_a, one_to_b) in [(false, false), (true, false), (false, true)] {
            let need_a = self.n - usize::from(one_to_a);
            let need_b = self.n - usize::from(one_to_b);
            if pool_a.len() < need_a || pool_b.len() < need_b {
                continue;
            }
            // Charge the whole cross product up front so a hostile instance
            // hits the budget before any materialization.
            let combos =
                binomial(pool_a.len(), need_a).saturating_mul(binomial(pool_b.len(), need_b));
            self.nodes = self
                .nodes
                .saturating_add(combos.min(u128::from(u64::MAX)) as u64);
            if self.nodes > self.budget.max_nodes {
                return Err(BipartiteError::BudgetExceeded {
                    nodes_explored: self.nodes,
                    at_bound: self.k,
                });
            }
            let choices_b = combinations(&pool_b, need_b);
            for mut a in combinations(&pool_a, need_a) {
                if one_to_a {
                    a.insert(0, 1);
                }
                for b_choice in &choices_b {
                    let mut b = b_choice.clone();
                    if one_to_b {
                        b.insert(0, 1);
                    }
                    let pair = if a <= b {
                        (a.clone(), b)
                    } else {
                        (b, a.clone())
                    };
                    self.found.insert(pair);
                }
            }
        }
        Ok(())
    }
}

/// All `take`-subsets of `pool`, each ascending, in lexicographic order.
fn combinations(pool: &[u64], take: usize) -> Vec<Vec<u64>> {
    fn rec(
        pool: &[u64],
        take: usize,
        from: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if take == 0 {
            out.push(current.clone());
            return;
        }
        if pool.len() - from < take {
            return;
        }
        for i in from..=pool.len() - take {
            current.push(pool[i]);
            rec(pool, take - 1, i + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, take, 0, &mut Vec::with_capacity(take), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Builds a sieve guaranteed to contain at least `count` primes.
fn sieve_with_primes(count: usize) -> PrimeSieve {
    let mut limit = 64u64;
    loop {
        let sieve = PrimeSieve::new(limit).expect("limit >= 2");
        if sieve.primes().len() >= count {
            return sieve;
        }
        limit *= 2;
    }
}

/// Exact minimal coprime bound for K_{n,n}.
///
/// Tries bounds k = 2n, 2n+1, ... until a labeling exists; the exhausted
/// searches below the answer are the minimality certificate. With
/// `count_all` the report carries every canonical minimal labeling,
/// otherwise a single witness. Deterministic for a given n.
pub fn pr_search(
    n: usize,
    count_all: bool,
    budget: &SearchBudget,
) -> Result<PrSearchReport, BipartiteError> {
    if n == 0 {
        return Err(BipartiteError::ZeroSize);
    }
    // Labeling the sides with the first 2n primes is always coprime-valid,
    // so the search is bounded by the 2n-th prime.
    let sieve = sieve_with_primes(2 * n);
    let k_ceiling = sieve.primes()[2 * n - 1];
    let started = Instant::now();
    let mut nodes = 0u64;
    for k in 2 * n as u64..=k_ceiling {
        let prime_count = sieve.prime_count(k) as usize;
        let mut search = BoundSearch::new(
            n,
            k,
            &sieve.primes()[..prime_count],
            count_all,
            budget,
            started,
            nodes,
        );
        search.dfs(0, 0, 0)?;
        nodes = search.nodes;
        let labelings: Vec<PartiteLabeling> = if count_all {
            search
                .found
                .into_iter()
                .map(|(a, b)| PartiteLabeling::new(a, b).expect("search emits disjoint sides"))
                .collect()
        } else {
            search
                .witness
                .into_iter()
                .map(|(a, b)| PartiteLabeling::new(a, b).expect("search emits disjoint sides"))
                .collect()
        };
        if !labelings.is_empty() {
            return Ok(PrSearchReport {
                n,
                pr_value: k,
                labelings,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("the first 2n primes always admit a coprime labeling of K_{{n,n}}")
}

/// Number of canonical minimal coprime labelings of K_{n,n}.
pub fn count_minimal_labelings(n: usize, budget: &SearchBudget) -> Result<u64, BipartiteError> {
    Ok(pr_search(n, true, budget)?.labelings.len() as u64)
}

/// The first `n` integers larger than 1 whose prime factorizations use only
/// the given primes, ascending.
///
/// Panics if the inputs are not primes or if the n-th element would
/// overflow a u64.
pub fn popop(primes: &[u64], n: usize) -> Vec<u64> {
    assert!(!primes.is_empty(), "popop needs at least one prime");
    for &p in primes {
        assert!(is_prime(p), "popop inputs must be prime, got {p}");
    }
    let mut frontier: BTreeSet<u64> = primes.iter().copied().collect();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = match frontier.iter().next() {
            Some(&x) => x,
            None => panic!("popop element {} exceeds the u64 range", out.len() + 1),
        };
        frontier.remove(&x);
        out.push(x);
        for &p in primes {
            if let Some(product) = x.checked_mul(p) {
                frontier.insert(product);
            }
        }
    }
    out
}

/// A popop-generated candidate for a minimal coprime labeling of K_{n,n}:
/// side A is popop(primes, n), side B the n smallest positive integers
/// coprime to everything in A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopopPartition {
    pub a_side: Vec<u64>,
    pub b_side: Vec<u64>,
    pub max_label: u64,
    /// Explicit cross-gcd check, independent of how the sides were built.
    pub coprime_valid: bool,
    /// Whether `max_label` equals a supplied reference value of pr(K_{n,n}).
    pub achieves_pr: Option<bool>,
}

pub fn popop_partition(primes: &[u64], n: usize, known_pr: Option<u64>) -> PopopPartition {
    let a_side = popop(primes, n);
    // B avoids exactly the primes that actually occur in A; a generator
    // prime too large to appear in A does not constrain B.
    let used: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|&p| a_side.iter().any(|&x| x % p == 0))
        .collect();
    let mut b_side = Vec::with_capacity(n);
    let mut x = 1u64;
    while b_side.len() < n {
        if used.iter().all(|&p| !x.is_multiple_of(p)) {
            b_side.push(x);
        }
        x += 1;
    }
    let coprime_valid = a_side
        .iter()
        .all(|&a| b_side.iter().all(|&b| gcd(a, b) == 1));
    let max_label = a_side
        .iter()
        .chain(b_side.iter())
        .copied()
        .max()
        .expect("n >= 1");
    PopopPartition {
        a_side,
        b_side,
        max_label,
        coprime_valid,
        achieves_pr: known_pr.map(|pr| max_label == pr),
    }
}

/// The prime-interval criterion: for m < n, K_{m,n} is prime iff
/// m <= |P((m+n)/2, m+n)| + 1.
pub fn fu_huang_is_prime(sieve: &PrimeSieve, m: usize, n: usize) -> Result<bool, BipartiteError> {
    if m == 0 || n == 0 {
        return Err(BipartiteError::ZeroSize);
    }
    if m >= n {
        return Err(BipartiteError::RequiresSmallerSide { m, n });
    }
    let total = (m + n) as u64;
    let interval = sieve.primes_in_interval(Half::half_of(total), total)?;
    Ok(m <= interval.len() + 1)
}

/// Prime labeling of K_{m,n} from the criterion's witness: side A is 1 plus
/// the first m-1 primes in ((m+n)/2, m+n], side B everything else up to m+n.
///
/// Each prime in that interval exceeds half of m+n, so it divides no other
/// label in range; together with 1 the A side is coprime to all of B.
pub fn kmn_construct(
    sieve: &PrimeSieve,
    m: usize,
    n: usize,
) -> Result<PartiteLabeling, BipartiteError> {
    if !fu_huang_is_prime(sieve, m, n)? {
        return Err(BipartiteError::CriterionFails { m, n });
    }
    let total = (m + n) as u64;
    let interval = sieve.primes_in_interval(Half::half_of(total), total)?;
    let mut a_side = vec![1u64];
    a_side.extend(interval.iter().take(m - 1));
    let chosen: HashSet<u64> = a_side.iter().copied().collect();
    let b_side: Vec<u64> = (1..=total).filter(|x| !chosen.contains(x)).collect();
    PartiteLabeling::new(a_side, b_side)
}

/// The bound from the Ramanujan-prime argument: K_{m,n} is prime for every
/// n >= R_{m-1} - m.
pub fn kmn_threshold(sieve: &PrimeSieve, m: usize) -> Result<u64, BipartiteError> {
    if m < 2 {
        return Err(BipartiteError::MTooSmall { m, min: 2 });
    }
    Ok(sieve.ramanujan_prime(m as u32 - 1)? - m as u64)
}

/// All n strictly between m and the Ramanujan threshold for which K_{m,n}
/// is nevertheless prime.
pub fn kmn_exception_scan(sieve: &PrimeSieve, m: usize) -> Result<Vec<u64>, BipartiteError> {
    if m < 3 {
        return Err(BipartiteError::MTooSmall { m, min: 3 });
    }
    let threshold = kmn_threshold(sieve, m)?;
    let mut exceptional = Vec::new();
    for n in m as u64 + 1..threshold {
        if fu_huang_is_prime(sieve, m, n as usize)? {
            exceptional.push(n);
        }
    }
    Ok(exceptional)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs;

    fn default_sieve() -> PrimeSieve {
        PrimeSieve::new(10_000).unwrap()
    }

    #[test]
    fn pr_small_values() {
        let budget = SearchBudget::default();
        let r = pr_search(1, false, &budget).unwrap();
        assert_eq!(r.pr_value, 2);
        assert_eq!(r.labelings[0].a_side(), &[1]);
        assert_eq!(r.labelings[0].b_side(), &[2]);

        assert_eq!(pr_search(2, false, &budget).unwrap().pr_value, 4);
        assert_eq!(pr_search(3, false, &budget).unwrap().pr_value, 7);
        assert_eq!(pr_search(4, false, &budget).unwrap().pr_value, 9);
    }

    #[test]
    fn pr_three_contains_the_known_partition() {
        let r = pr_search(3, true, &SearchBudget::default()).unwrap();
        let known = PartiteLabeling::new(vec![1, 3, 5], vec![2, 4, 7]).unwrap();
        assert!(r.labelings.iter().any(|l| l.unordered_eq(&known)));
    }

    #[test]
    fn pr_twelve_is_unique_with_the_popop_sets() {
        let r = pr_search(12, true, &SearchBudget::default()).unwrap();
        assert_eq!(r.pr_value, 32);
        assert_eq!(r.labelings.len(), 1);
        let expected = PartiteLabeling::new(
            vec![2, 4, 7, 8, 11, 13, 14, 16, 22, 26, 28, 32],
            vec![1, 3, 5, 9, 15, 17, 19, 23, 25, 27, 29, 31],
        )
        .unwrap();
        assert!(r.labelings[0].unordered_eq(&expected));
    }

    #[test]
    fn no_prime_labeling_beyond_two() {
        for n in 3..=6 {
            let r = pr_search(n, false, &SearchBudget::default()).unwrap();
            assert!(
                r.pr_value > 2 * n as u64,
                "pr(K_{{{n},{n}}}) must exceed 2n"
            );
        }
    }

    #[test]
    fn reported_labelings_pass_the_verifier() {
        for n in 1..=8 {
            let r = pr_search(n, true, &SearchBudget::default()).unwrap();
            assert!(!r.labelings.is_empty());
            for l in &r.labelings {
                assert!(l.is_coprime_valid());
                assert_eq!(l.max_label(), r.pr_value);
                let (graph, labeling) = l.to_graph_labeling(Some(r.pr_value));
                assert!(graphs::verify(&graph, &labeling).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn budget_is_a_hard_error() {
        let budget = SearchBudget {
            max_nodes: 3,
            time_limit: None,
        };
        assert!(matches!(
            pr_search(8, false, &budget),
            Err(BipartiteError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn popop_examples() {
        assert_eq!(popop(&[2, 3], 9), vec![2, 3, 4, 6, 8, 9, 12, 16, 18]);
        assert_eq!(
            popop(&[2, 7, 11, 13], 12),
            vec![2, 4, 7, 8, 11, 13, 14, 16, 22, 26, 28, 32]
        );
        assert_eq!(popop(&[2], 3), vec![2, 4, 8]);
    }

    #[test]
    fn popop_closed_under_generators() {
        for primes in [vec![2, 3], vec![3, 5, 7], vec![2, 7, 11, 13]] {
            for mut x in popop(&primes, 40) {
                for &p in &primes {
                    while x % p == 0 {
                        x /= p;
                    }
                }
                assert_eq!(x, 1, "popop element kept a foreign factor");
            }
        }
    }

    #[test]
    fn partition_examples() {
        let r = popop_partition(&[2, 7, 11, 13], 12, Some(32));
        assert_eq!(r.a_side, vec![2, 4, 7, 8, 11, 13, 14, 16, 22, 26, 28, 32]);
        assert_eq!(r.b_side, vec![1, 3, 5, 9, 15, 17, 19, 23, 25, 27, 29, 31]);
        assert!(r.coprime_valid);
        assert_eq!(r.max_label, 32);
        assert_eq!(r.achieves_pr, Some(true));

        let r = popop_partition(&[2, 3], 5, Some(11));
        assert!(r.coprime_valid);
        assert_eq!(r.max_label, 13);
        assert_eq!(r.achieves_pr, Some(false));

        let r = popop_partition(&[2], 1, Some(2));
        assert_eq!(r.a_side, vec![2]);
        assert_eq!(r.b_side, vec![1]);
        assert_eq!(r.achieves_pr, Some(true));
    }

    #[test]
    fn partition_always_places_one_in_b() {
        for primes in [vec![2u64, 3], vec![2, 7, 11, 13], vec![5, 7]] {
            for n in 1..=10 {
                let r = popop_partition(&primes, n, None);
                assert!(r.b_side.contains(&1));
            }
        }
    }

    #[test]
    fn criterion_examples() {
        let sieve = default_sieve();
        assert!(fu_huang_is_prime(&sieve, 3, 4).unwrap());
        assert!(!fu_huang_is_prime(&sieve, 3, 7).unwrap());
        assert!(!fu_huang_is_prime(&sieve, 10, 60).unwrap());
        assert!(fu_huang_is_prime(&sieve, 10, 61).unwrap());
        assert!(matches!(
            fu_huang_is_prime(&sieve, 4, 4),
            Err(BipartiteError::RequiresSmallerSide { .. })
        ));
    }

    #[test]
    fn construction_examples() {
        let sieve = default_sieve();
        let l = kmn_construct(&sieve, 3, 4).unwrap();
        assert_eq!(l.a_side(), &[1, 5, 7]);
        assert_eq!(l.b_side(), &[2, 3, 4, 6]);

        let l = kmn_construct(&sieve, 4, 9).unwrap();
        assert_eq!(l.a_side(), &[1, 7, 11, 13]);
        assert_eq!(l.b_side(), &[2, 3, 4, 5, 6, 8, 9, 10, 12]);

        let l = kmn_construct(&sieve, 5, 14).unwrap();
        assert_eq!(l.a_side(), &[1, 11, 13, 17, 19]);

        assert!(matches!(
            kmn_construct(&sieve, 3, 7),
            Err(BipartiteError::CriterionFails { m: 3, n: 7 })
        ));
    }

    #[test]
    fn constructions_are_prime_labelings() {
        let sieve = default_sieve();
        for (m, n) in [
            (3usize, 4usize),
            (3, 5),
            (3, 6),
            (3, 8),
            (4, 9),
            (5, 14),
            (6, 31),
            (9, 52),
        ] {
            let l = kmn_construct(&sieve, m, n).unwrap();
            let (graph, labeling) = l.to_graph_labeling(Some((m + n) as u64));
            assert!(
                graphs::is_prime_labeling(&graph, &labeling).unwrap(),
                "K_{{{m},{n}}} construction is not a prime labeling"
            );
        }
    }

    #[test]
    fn threshold_examples() {
        let sieve = default_sieve();
        assert_eq!(kmn_threshold(&sieve, 3).unwrap(), 8);
        assert_eq!(kmn_threshold(&sieve, 6).unwrap(), 35);
        assert_eq!(kmn_threshold(&sieve, 13).unwrap(), 94);
        assert!(matches!(
            kmn_threshold(&sieve, 1),
            Err(BipartiteError::MTooSmall { .. })
        ));
    }

    #[test]
    fn exception_scan_examples() {
        let sieve = default_sieve();
        assert_eq!(
            kmn_exception_scan(&sieve, 5).unwrap(),
            vec![14, 15, 16, 18, 19, 20]
        );
        assert_eq!(kmn_exception_scan(&sieve, 10).unwrap(), Vec::<u64>::new());
        assert_eq!(
            kmn_exception_scan(&sieve, 11).unwrap(),
            vec![62, 68, 69, 70, 72, 73, 74, 78, 79, 80, 81, 82]
        );
    }

    #[test]
    fn criterion_holds_at_its_own_threshold() {
        let sieve = default_sieve();
        for m in 3..=13 {
            let t = kmn_threshold(&sieve, m).unwrap();
            assert!(
                fu_huang_is_prime(&sieve, m, t as usize).unwrap(),
                "criterion fails at its own threshold for m = {m}"
            );
        }
    }
}
