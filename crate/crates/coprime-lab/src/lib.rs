//! Coprime and prime labelings of graphs.
//!
//! A coprime labeling gives the vertices of a graph distinct labels from
//! {1..k} so that adjacent labels are relatively prime; a prime labeling is
//! one with k equal to the vertex count. This crate builds and verifies such
//! labelings for ladders and complete bipartite graphs:
//!
//! - [`graphs`]: the graph/labeling model and the universal verifier.
//! - [`numtheory`]: gcd, prime sieve, prime intervals, Ramanujan primes.
//! - [`ladders`]: closed-form ladder labelings, consecutive cyclic windings
//!   with their column-sum screens, exhaustive cyclic search, and the
//!   prime-pair witness scan.
//! - [`bipartite`]: exact computation of the minimal coprime bound
//!   pr(K_{n,n}) with full enumeration of minimal labelings, popop label
//!   sets, and the prime-interval criterion for K_{m,n}.
//! - [`format`]: JSON/DOT/CSV emission and OEIS b-file parsing.
//! - [`oeis`]: local recomputation of A213273, A213806, and A104272 with
//!   comparison against reference data.
//!
//! Each major capability has a runnable demo under `examples/`:
//!
//! ```bash
//! cargo run --release --example pr_table 10
//! cargo run --release --example cyclic_search 10
//! ```
//!
//! The same functionality is scriptable through the `coprime-lab` binary;
//! see the crate README.

pub mod bipartite;
pub mod format;
pub mod graphs;
pub mod ladders;
pub mod numtheory;
pub mod oeis;

pub use bipartite::{PartiteLabeling, PrSearchReport, SearchBudget};
pub use graphs::{Graph, Labeling, Violation};
pub use ladders::{CyclicPlacement, LadderLabeling};
pub use numtheory::PrimeSieve;
