//! Factorization and the arithmetic functions derived from it.

use crate::error::{Error, Result};

/// Prime factorization of a modulus `n >= 2`.
///
/// Factors are stored as `(prime, exponent)` pairs with strictly increasing
/// primes and exponents of at least one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from explicit prime powers, checking every invariant.
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::domain("modulus must be at least 2"));
        }
        let mut n: u64 = 1;
        let mut last = 0;
        for &(p, e) in &factors {
            if p <= last {
                return Err(Error::domain("primes must be strictly increasing"));
            }
            if e == 0 {
                return Err(Error::domain(format!("exponent of {p} must be at least 1")));
            }
            if !is_prime(p) {
                return Err(Error::domain(format!("{p} is not prime")));
            }
            let pe = p
                .checked_pow(e)
                .and_then(|pe| n.checked_mul(pe))
                .ok_or_else(|| Error::domain("factorization overflows u64"))?;
            n = pe;
            last = p;
        }
        Ok(Factorization { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Distinct primes dividing `n`, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Factorization of `rad(n)`.
    pub fn radical_factorization(&self) -> Factorization {
        Factorization {
            n: self.radical(),
            factors: self.factors.iter().map(|&(p, _)| (p, 1)).collect(),
        }
    }

    pub(crate) fn check_residue(&self, r: u64, name: &str) -> Result<()> {
        if r >= self.n {
            return Err(Error::domain(format!(
                "{name} = {r} must be a residue in [0, {})",
                self.n
            )));
        }
        Ok(())
    }
}

/// Factors `n` by trial division: 2, then odd candidates up to `sqrt(n)`.
///
/// Fast for the supported range `n <= 10^12`; larger inputs are accepted but
/// may need up to `2^31` divisions.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut take = |m: &mut u64, p: u64| {
        let mut e = 0;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    take(&mut m, 2);
    let mut p = 3u64;
    while p <= m / p {
        take(&mut m, p);
        p += 2;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Product of the distinct primes dividing `n`.
pub fn radical(f: &Factorization) -> u64 {
    f.radical()
}

/// Euler's totient: the number of units mod `n`, and the degree of `X_n`.
pub fn totient(f: &Factorization) -> u64 {
    f.totient()
}

/// Split of the primes dividing `n` by whether `i ≡ j (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimePartition {
    /// Primes `p | n` with `i ≡ j (mod p)`.
    pub congruent: Vec<u64>,
    /// Primes `p | n` with `i ≢ j (mod p)`.
    pub noncongruent: Vec<u64>,
}

/// Places each prime divisor of `n` into `congruent` or `noncongruent`
/// according to `i mod p == j mod p`.
pub fn prime_partition(f: &Factorization, i: u64, j: u64) -> Result<PrimePartition> {
    f.check_residue(i, "i")?;
    f.check_residue(j, "j")?;
    let (congruent, noncongruent) = f.primes().partition(|&p| i % p == j % p);
    Ok(PrimePartition {
        congruent,
        noncongruent,
    })
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
