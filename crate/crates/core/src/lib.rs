//! Exact walk counting on unitary Cayley graphs.
//!
//! The unitary Cayley graph `X_n` has vertex set `Z_n` and an edge `{a, b}`
//! whenever `gcd(a - b, n) = 1`. This crate counts walks of any length
//! between any two vertices in closed form:
//!
//! * [`walk_formulas::complete_walks`] counts walks in the complete graph `K_p`,
//! * [`walk_formulas::radical_walks`] multiplies per-prime `K_p` counts for
//!   square-free moduli,
//! * [`walk_formulas::walks`] scales the square-free count by
//!   `(n / rad(n))^(k - 1)` for arbitrary `n`.
//!
//! The same counts give the number of ordered `k`-tuples of units summing to a
//! residue ([`walk_formulas::unit_sum_count`]) and the first row of the
//! circulant matrix `A(X_n)^k` ([`circulant::adjacency_power_row`]).
//!
//! Everything is cross-checked against the brute-force [`oracle`], which
//! exponentiates the dense adjacency matrix and enumerates unit tuples
//! directly. With the `parallel` feature (on by default) the oracle and the
//! sweeps in [`verify`] fan out over rayon; without it they run sequentially.

pub mod circulant;
mod error;
pub mod numtheory;
pub mod oracle;
pub mod verify;
pub mod walk_formulas;

pub use circulant::{adjacency_power_row, circ_multiply, CirculantRow};
pub use error::{Error, Result};
pub use numtheory::{factorize, prime_partition, radical, totient, Factorization, PrimePartition};
pub use oracle::{DenseMatrix, OracleConfig};
pub use walk_formulas::{
    complete_walks, homogeneous_sum_count, radical_walks, unit_sum_count, walks, WalkQuery,
};

/// Exact nonnegative walk or representation count.
pub type Count = num_bigint::BigUint;
