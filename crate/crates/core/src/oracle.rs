//! Brute-force ground truth.
//!
//! Builds `A(X_n)` literally from the gcd edge rule, raises it to the `k`-th
//! power over exact integers, and enumerates unit tuples directly. Nothing
//! here uses the closed forms; it exists to check them.

use num_integer::Integer;
use num_traits::{One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numtheory::factorize;
use crate::Count;

/// Default largest modulus the dense oracle accepts.
pub const DEFAULT_SIZE_CAP: u64 = 512;
/// Default largest number of tuples `phi(n)^k` the unit-sum enumeration visits.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// Limits on the brute-force paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub size_cap: u64,
    pub enumeration_cap: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            size_cap: DEFAULT_SIZE_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl OracleConfig {
    fn check_size(&self, n: u64) -> Result<()> {
        if n > self.size_cap {
            return Err(Error::resource(format!(
                "n = {n} exceeds the oracle size cap {}",
                self.size_cap
            )));
        }
        Ok(())
    }
}

/// Square matrix of exact counts, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    n: usize,
    entries: Vec<Count>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            entries: vec![Count::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Count::one();
        }
        m
    }

    /// Builds a 0/1 matrix from an adjacency predicate.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.entries[i * n + j] = Count::one();
                }
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Count {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Count] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn product_row(&self, rhs: &DenseMatrix, i: usize) -> Vec<Count> {
        let n = self.n;
        let mut out = vec![Count::zero(); n];
        for t in 0..n {
            let a = self.get(i, t);
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(rhs.row(t)) {
                *o += a * b;
            }
        }
        out
    }

    /// Triple-loop product on the current thread.
    pub fn mul_sequential(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let entries = (0..self.n).flat_map(|i| self.product_row(rhs, i)).collect();
        DenseMatrix { n: self.n, entries }
    }

    /// Triple-loop product with output rows spread over the rayon pool.
    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let rows: Vec<Vec<Count>> = (0..self.n)
            .into_par_iter()
            .map(|i| self.product_row(rhs, i))
            .collect();
        DenseMatrix {
            n: self.n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix product, parallel when the `parallel` feature is enabled.
    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        #[cfg(feature = "parallel")]
        {
            self.mul_parallel(rhs)
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.mul_sequential(rhs)
        }
    }

    /// `self^k` by binary exponentiation; `self^0` is the identity.
    pub fn pow(&self, mut k: u32) -> DenseMatrix {
        let mut acc = DenseMatrix::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// `A(X_n)`: entry `(i, j)` is 1 iff `gcd(i - j mod n, n) = 1`.
pub fn build_adjacency(n: u64, cfg: &OracleConfig) -> Result<DenseMatrix> {
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    cfg.check_size(n)?;
    let n = n as usize;
    Ok(DenseMatrix::from_fn(n, |i, j| ((i + n - j) % n).gcd(&n) == 1))
}

/// `A(K_n)`: all ones off the diagonal.
pub fn build_complete(n: u64, cfg: &OracleConfig) -> Result<DenseMatrix> {
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    cfg.check_size(n)?;
    Ok(DenseMatrix::from_fn(n as usize, |i, j| i != j))
}

/// Entry `(i, j)` of `a^k`.
pub fn matrix_power_walks(a: &DenseMatrix, k: u32, i: usize, j: usize) -> Result<Count> {
    let n = a.dim();
    if i >= n || j >= n {
        return Err(Error::domain(format!(
            "vertex ({i}, {j}) out of range for a {n}x{n} matrix"
        )));
    }
    Ok(a.pow(k).get(i, j).clone())
}

/// Units mod `n`, after checking that `phi(n)^k` tuples fit the enumeration cap.
fn enumeration_units(n: u64, k: u32, cfg: &OracleConfig) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    if k == 0 {
        return Err(Error::domain("number of summands k must be at least 1"));
    }
    let units: Vec<u64> = (1..n).filter(|u| u.gcd(&n) == 1).collect();
    let tuples = (units.len() as u128).checked_pow(k);
    if !tuples.is_some_and(|t| t <= cfg.enumeration_cap) {
        return Err(Error::resource(format!(
            "phi({n})^{k} tuples exceed the enumeration cap {}",
            cfg.enumeration_cap
        )));
    }
    Ok(units)
}

/// Counts `(u_1, ..., u_k)` in `U_n^k` with `u_1 + ... + u_k ≡ r (mod n)` by
/// depth-first enumeration.
pub fn enumerate_unit_sums(n: u64, k: u32, r: u64, cfg: &OracleConfig) -> Result<Count> {
    let units = enumeration_units(n, k, cfg)?;
    if r >= n {
        return Err(Error::domain(format!("r = {r} must be a residue in [0, {n})")));
    }

    fn dfs(units: &[u64], n: u64, left: u32, sum: u64, r: u64) -> u64 {
        if left == 0 {
            return u64::from(sum == r);
        }
        units
            .iter()
            .map(|&u| dfs(units, n, left - 1, (sum + u) % n, r))
            .sum()
    }
    Ok(Count::from(dfs(&units, n, k, 0, r)))
}

/// Distribution of `u_1 + ... + u_k mod n` over all of `U_n^k`; entry `r` is
/// the number of tuples summing to `r`. One enumeration serves every residue.
pub fn enumerate_unit_sum_histogram(n: u64, k: u32, cfg: &OracleConfig) -> Result<Vec<Count>> {
    let units = enumeration_units(n, k, cfg)?;

    fn dfs(units: &[u64], n: u64, left: u32, sum: u64, hist: &mut [u64]) {
        if left == 0 {
            hist[sum as usize] += 1;
            return;
        }
        for &u in units {
            dfs(units, n, left - 1, (sum + u) % n, hist);
        }
    }
    let mut hist = vec![0u64; n as usize];
    dfs(&units, n, k, 0, &mut hist);
    Ok(hist.into_iter().map(Count::from).collect())
}

/// True iff every pair `x ≠ y` with `x ≡ y (mod rad(n))` is a non-edge of
/// `X_n` and has identical adjacency rows.
pub fn neighborhood_class_check(n: u64, cfg: &OracleConfig) -> Result<bool> {
    let a = build_adjacency(n, cfg)?;
    let rad = factorize(n)?.radical() as usize;
    let n = n as usize;
    Ok((0..n).all(|x| {
        (x + rad..n)
            .step_by(rad)
            .all(|y| a.get(x, y).is_zero() && a.row(x) == a.row(y))
    }))
}
