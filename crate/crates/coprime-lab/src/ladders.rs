//! Ladder labelings: the sequential-rows construction, consecutive cyclic
//! windings and their column-sum arithmetic, the exhaustive cyclic search,
//! and the prime-pair witness scan.
//!
//! Rows follow the drawing convention of the `graphs` module: `top[i]` sits
//! above `bottom[i]`, columns numbered 1..=n from the left. A consecutive
//! cyclic labeling places 1 somewhere in the top row and counts upward
//! clockwise around the boundary, wrapping from the top-right corner down
//! and back along the bottom row.

use std::collections::HashSet;
use std::fmt;

use crate::graphs::{self, Graph, Labeling};
use crate::numtheory::is_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LadderError {
    ZeroSize,
    /// Rows of unequal length, or a repeated label.
    MalformedRows,
    /// n + 1 must be prime for the sequential-rows construction.
    SuccessorNotPrime {
        n: usize,
    },
    /// 2n + 1 must be prime for the origin cyclic construction.
    WraparoundNotPrime {
        n: usize,
    },
    OffsetNotPrime {
        p: u64,
    },
    OffsetTooLarge {
        p: u64,
        n: usize,
    },
    /// 2n + p must be prime for the offset cyclic construction.
    PairSumNotPrime {
        n: usize,
        p: u64,
    },
    NoWitness {
        n: usize,
        search_limit: u64,
    },
}

impl fmt::Display for LadderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LadderError::ZeroSize => write!(f, "ladder size must be at least 1"),
            LadderError::MalformedRows => {
                write!(f, "rows must have equal length and distinct labels")
            }
            LadderError::SuccessorNotPrime { n } => write!(f, "n+1 not prime (n = {n})"),
            LadderError::WraparoundNotPrime { n } => write!(f, "2n+1 not prime (n = {n})"),
            LadderError::OffsetNotPrime { p } => write!(f, "p not prime (p = {p})"),
            LadderError::OffsetTooLarge { p, n } => {
                write!(f, "p must be less than 2n+1 (p = {p}, n = {n})")
            }
            LadderError::PairSumNotPrime { n, p } => {
                write!(f, "2n+p not prime (n = {n}, p = {p})")
            }
            LadderError::NoWitness { n, search_limit } => {
                write!(
                    f,
                    "no prime pair found for n = {n} with p <= {search_limit}"
                )
            }
        }
    }
}

impl std::error::Error for LadderError {}

/// Two rows of n labels each, in left-to-right drawing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderLabeling {
    top: Vec<u64>,
    bottom: Vec<u64>,
}

impl LadderLabeling {
    pub fn new(top: Vec<u64>, bottom: Vec<u64>) -> Result<LadderLabeling, LadderError> {
        if top.is_empty() {
            return Err(LadderError::ZeroSize);
        }
        if top.len() != bottom.len() {
            return Err(LadderError::MalformedRows);
        }
        let mut seen = HashSet::new();
        for &l in top.iter().chain(bottom.iter()) {
            if l == 0 || !seen.insert(l) {
                return Err(LadderError::MalformedRows);
            }
        }
        Ok(LadderLabeling { top, bottom })
    }

    pub fn rungs(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[u64] {
        &self.top
    }

    pub fn bottom(&self) -> &[u64] {
        &self.bottom
    }

    /// Column sums: entry i is `top[i] + bottom[i]`.
    pub fn column_sums(&self) -> Vec<u64> {
        self.top
            .iter()
            .zip(&self.bottom)
            .map(|(t, b)| t + b)
            .collect()
    }

    /// The row form as a graph-plus-labeling pair, labels listed top row
    /// then bottom row, with bound k equal to the largest label.
    pub fn to_graph_labeling(&self) -> (Graph, Labeling) {
        let graph = Graph::ladder(self.rungs()).expect("rungs >= 1");
        let mut labels = self.top.clone();
        labels.extend(&self.bottom);
        let k = *labels.iter().max().expect("nonempty");
        let labeling = Labeling::new(labels, k).expect("rows were validated");
        (graph, labeling)
    }

    /// Runs the full verifier and checks the labels are exactly 1..2n.
    pub fn is_prime_labeling(&self) -> bool {
        let (graph, labeling) = self.to_graph_labeling();
        graphs::is_prime_labeling(&graph, &labeling).expect("sizes match by construction")
    }
}

impl fmt::Display for LadderLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u64]| {
            r.iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(f, "{}", row(&self.top))?;
        write!(f, "{}", row(&self.bottom))
    }
}

/// A consecutive cyclic labeling, identified by where the label 1 sits in
/// the top row (1-based from the left).
///
/// The label directly below the 1 is forced by the winding:
/// `k_below = 2 * (n - one_position + 1)`, always even.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicPlacement {
    n: usize,
    one_position: usize,
    k_below: u64,
}

impl CyclicPlacement {
    pub fn new(n: usize, one_position: usize) -> Result<CyclicPlacement, LadderError> {
        if n == 0 {
            return Err(LadderError::ZeroSize);
        }
        if one_position == 0 || one_position > n {
            return Err(LadderError::MalformedRows);
        }
        let k_below = 2 * (n - one_position + 1) as u64;
        Ok(CyclicPlacement {
            n,
            one_position,
            k_below,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Top-row position of the label 1, 1-based from the left.
    pub fn one_position(&self) -> usize {
        self.one_position
    }

    /// The label directly below the 1.
    pub fn k_below(&self) -> u64 {
        self.k_below
    }

    /// Materializes the winding: 1 at the placement column, counting up to
    /// the right, wrapping down the right edge, leftward along the bottom,
    /// and up the left edge back into the top row.
    pub fn labeling(&self) -> LadderLabeling {
        let n = self.n as u64;
        let i = self.one_position as u64;
        let top = (1..=n)
            .map(|j| if j >= i { j - i + 1 } else { 2 * n - i + 1 + j })
            .collect();
        let bottom = (1..=n).map(|j| 2 * n - i + 2 - j).collect();
        LadderLabeling::new(top, bottom).expect("winding labels 1..2n are distinct")
    }
}

/// Outcome of the column-sum screen on a cyclic placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColumnSumScreen {
    /// k+1 is composite, so the placement can never verify.
    RejectComposite { column_sum: u64 },
    /// k+1 is prime; full verification still has to decide.
    Candidate,
}

/// Screens a cyclic placement by its column sums.
///
/// Every column sum of a consecutive cyclic labeling is congruent to
/// `k_below + 1` modulo 2n (a checked internal invariant); when that value
/// is composite the placement is rejected outright.
pub fn screen_column_sums(placement: &CyclicPlacement) -> ColumnSumScreen {
    let modulus = 2 * placement.n as u64;
    let residue = (placement.k_below + 1) % modulus;
    for sum in placement.labeling().column_sums() {
        assert_eq!(
            sum % modulus,
            residue,
            "column sum {sum} breaks the mod-{modulus} congruence"
        );
    }
    if !is_prime(placement.k_below + 1) {
        ColumnSumScreen::RejectComposite {
            column_sum: placement.k_below + 1,
        }
    } else {
        ColumnSumScreen::Candidate
    }
}

/// True when both possible column sums, `k_below + 1` and `2n + k_below + 1`,
/// are prime. A true result certifies the induced cyclic labeling is a prime
/// labeling with no need to verify; false decides nothing.
pub fn certify_prime_column_sums(n: usize, k_below: u64) -> bool {
    is_prime(k_below + 1) && is_prime(2 * n as u64 + k_below + 1)
}

/// Sequential rows: top 1..n, bottom n+2..2n then n+1. Requires n+1 prime.
pub fn sequential_labeling(n: usize) -> Result<LadderLabeling, LadderError> {
    if n == 0 {
        return Err(LadderError::ZeroSize);
    }
    if !is_prime(n as u64 + 1) {
        return Err(LadderError::SuccessorNotPrime { n });
    }
    let n64 = n as u64;
    let top = (1..=n64).collect();
    let mut bottom: Vec<u64> = (n64 + 2..=2 * n64).collect();
    bottom.push(n64 + 1);
    LadderLabeling::new(top, bottom).map_err(|_| LadderError::MalformedRows)
}

/// Origin cyclic winding: 1 at the top-left corner, so top is 1..n and the
/// bottom runs 2n down to n+1. Requires 2n+1 prime.
pub fn cyclic_origin_labeling(n: usize) -> Result<LadderLabeling, LadderError> {
    if n == 0 {
        return Err(LadderError::ZeroSize);
    }
    if !is_prime(2 * n as u64 + 1) {
        return Err(LadderError::WraparoundNotPrime { n });
    }
    Ok(CyclicPlacement::new(n, 1)
        .expect("position 1 is valid")
        .labeling())
}

/// Top-row position of the 1 dictated by the prime p: `(p-1)/2 - 1` places
/// in from the top-right vertex.
fn offset_position(n: usize, p: u64) -> usize {
    n - ((p as usize - 1) / 2 - 1)
}

/// Cyclic winding for a prime pair (p, 2n+p): places the 1 so that the two
/// column sums come out as p and 2n+p. Requires p prime, p < 2n+1, and
/// 2n+p prime.
pub fn cyclic_prime_pair_labeling(n: usize, p: u64) -> Result<LadderLabeling, LadderError> {
    if n == 0 {
        return Err(LadderError::ZeroSize);
    }
    if !is_prime(p) {
        return Err(LadderError::OffsetNotPrime { p });
    }
    if p > 2 * n as u64 {
        return Err(LadderError::OffsetTooLarge { p, n });
    }
    if !is_prime(2 * n as u64 + p) {
        return Err(LadderError::PairSumNotPrime { n, p });
    }
    let placement = CyclicPlacement::new(n, offset_position(n, p)).expect("position in range");
    debug_assert_eq!(placement.k_below() + 1, p);
    Ok(placement.labeling())
}

/// Exhausts all n top-row placements of the label 1 and returns those whose
/// induced cyclic labeling passes full verification, sorted by position.
///
/// The column-sum screen runs first and discards placements with a composite
/// k+1 before any gcd work. Bottom-row and counterclockwise windings map
/// onto these by the ladder's symmetries, so only top-row placements are
/// enumerated.
pub fn find_all_cyclic_prime_labelings(n: usize) -> Vec<CyclicPlacement> {
    assert!(n >= 1, "ladder size must be at least 1");
    (1..=n)
        .filter_map(|i| {
            let placement = CyclicPlacement::new(n, i).expect("position in range");
            match screen_column_sums(&placement) {
                ColumnSumScreen::RejectComposite { .. } => None,
                ColumnSumScreen::Candidate => placement
                    .labeling()
                    .is_prime_labeling()
                    .then_some(placement),
            }
        })
        .collect()
}

/// A prime 2n+p found for the ladder of size n, together with the cyclic
/// prime labeling it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePairWitness {
    pub p: u64,
    pub labeling: LadderLabeling,
}

/// Scans p over 1 and the primes below 2n+1, in ascending order up to
/// `search_limit`, for the smallest p making 2n+p prime. p = 1 routes to the
/// origin winding; a prime p routes to the prime-pair winding.
///
/// Exhausting the scan without a hit is reported as `NoWitness` - for any n
/// where that happens, no cyclic prime labeling arises from this family.
pub fn prime_pair_witness(n: usize, search_limit: u64) -> Result<PrimePairWitness, LadderError> {
    if n == 0 {
        return Err(LadderError::ZeroSize);
    }
    let ceiling = (2 * n as u64 + 1).min(search_limit + 1);
    if 1 < ceiling && is_prime(2 * n as u64 + 1) {
        return Ok(PrimePairWitness {
            p: 1,
            labeling: cyclic_origin_labeling(n)?,
        });
    }
    for p in (3..ceiling).step_by(2) {
        if is_prime(p) && is_prime(2 * n as u64 + p) {
            return Ok(PrimePairWitness {
                p,
                labeling: cyclic_prime_pair_labeling(n, p)?,
            });
        }
    }
    Err(LadderError::NoWitness { n, search_limit })
}
