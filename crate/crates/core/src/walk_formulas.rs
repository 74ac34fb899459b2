//! Closed-form walk counts.
//!
//! The pipeline has three stages. Walks in `K_p` have a closed form. A
//! square-free `X_m` is the Kronecker product of the `K_p` for `p | m`, so its
//! walk counts are products of `K_p` counts. A general `X_n` is the blow-up of
//! `X_rad(n)` of order `n / rad(n)`, which multiplies every `k`-walk count by
//! `(n / rad(n))^(k - 1)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, prime_partition, Factorization, PrimePartition};
use crate::Count;

/// A request for the number of length-`k` walks from `i` to `j` in `X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkQuery {
    pub n: u64,
    pub k: u32,
    pub i: u64,
    pub j: u64,
}

impl WalkQuery {
    /// Validates `n >= 2` and `0 <= i, j < n`.
    pub fn new(n: u64, k: u32, i: u64, j: u64) -> Result<Self> {
        check_modulus(n)?;
        for (name, v) in [("i", i), ("j", j)] {
            if v >= n {
                return Err(Error::domain(format!(
                    "{name} = {v} must be a residue in [0, {n})"
                )));
            }
        }
        Ok(WalkQuery { n, k, i, j })
    }
}

fn check_modulus(n: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    Ok(())
}

/// `b_{n,k} = ((n-1)^k - (-1)^k) / n`, the open-walk count in `K_n`.
fn open_complete(n: u64, k: u32) -> Count {
    let mut num: BigUint = BigUint::from(n - 1).pow(k);
    if k % 2 == 0 {
        num -= 1u32;
    } else {
        num += 1u32;
    }
    let (q, r) = num.div_rem(&BigUint::from(n));
    debug_assert!(r.is_zero(), "(n-1)^k - (-1)^k not divisible by n");
    q
}

/// Number of length-`k` walks in `K_n` between two fixed vertices, closed
/// (same endpoint) or open (distinct endpoints).
///
/// Closed walks are computed as `a_{n,k} = (n - 1) * b_{n,k-1}`.
pub fn complete_walks(n: u64, k: u32, closed: bool) -> Result<Count> {
    check_modulus(n)?;
    Ok(match (closed, k) {
        (true, 0) => Count::one(),
        (true, _) => open_complete(n, k - 1) * (n - 1),
        (false, _) => open_complete(n, k),
    })
}

/// Walk count in `X_m` for square-free `m`: a `K_p` factor for every prime `p | m`,
/// closed when `p` is in `part.congruent` and open otherwise.
pub fn radical_walks(q: &WalkQuery, part: &PrimePartition) -> Result<Count> {
    let f = factorize(q.n)?;
    if !f.is_square_free() {
        return Err(Error::domain("radical_walks requires square-free modulus"));
    }
    if q.k == 0 {
        return Err(Error::domain("radical_walks requires walk length k >= 1"));
    }
    let mut listed: Vec<u64> = part
        .congruent
        .iter()
        .chain(&part.noncongruent)
        .copied()
        .collect();
    listed.sort_unstable();
    if !listed.iter().copied().eq(f.primes()) {
        return Err(Error::domain(format!(
            "prime partition does not cover the primes of {}",
            q.n
        )));
    }
    Ok(partition_product(q.k, part))
}

fn partition_product(k: u32, part: &PrimePartition) -> Count {
    let closed = part.congruent.iter().map(|&p| (p, true));
    let open = part.noncongruent.iter().map(|&p| (p, false));
    closed
        .chain(open)
        .map(|(p, c)| complete_walks(p, k, c).expect("prime moduli are >= 2"))
        .product()
}

/// Walk count for a modulus whose factorization is already known.
///
/// `i` and `j` must already be residues mod `f.n()`.
pub(crate) fn walks_factored(f: &Factorization, k: u32, i: u64, j: u64) -> Count {
    if k == 0 {
        return if i == j { Count::one() } else { Count::zero() };
    }
    let rad = f.radical();
    let part = prime_partition(&f.radical_factorization(), i % rad, j % rad)
        .expect("residues reduced mod rad(n)");
    let blow_up = BigUint::from(f.n() / rad).pow(k - 1);
    blow_up * partition_product(k, &part)
}

/// Number of length-`k` walks from `i` to `j` in `X_n`.
///
/// `k = 0` counts the trivial walk: 1 if `i == j`, else 0.
pub fn walks(q: &WalkQuery) -> Result<Count> {
    let q = WalkQuery::new(q.n, q.k, q.i, q.j)?;
    let f = factorize(q.n)?;
    Ok(walks_factored(&f, q.k, q.i, q.j))
}

/// Number of ordered `k`-tuples of units mod `n` whose sum is `r` mod `n`.
pub fn unit_sum_count(n: u64, k: u32, r: u64) -> Result<Count> {
    if k == 0 {
        return Err(Error::domain("number of summands k must be at least 1"));
    }
    walks(&WalkQuery::new(n, k, 0, r)?)
}

/// Number of ordered `k`-tuples of units mod `n` summing to zero.
pub fn homogeneous_sum_count(n: u64, k: u32) -> Result<Count> {
    if k == 0 {
        return Err(Error::domain("number of summands k must be at least 1"));
    }
    let f = factorize(n)?;
    let scale = BigUint::from(n / f.radical()).pow(k - 1);
    let closed: Count = f
        .primes()
        .map(|p| BigUint::from(p - 1) * open_complete(p, k - 1))
        .product();
    Ok(scale * closed)
}
