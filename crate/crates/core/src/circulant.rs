//! Powers of `A(X_n)` as circulant first rows.

use num_traits::{One, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numtheory::factorize;
use crate::walk_formulas::walks_factored;
use crate::Count;

/// First row `c_0..c_{n-1}` of a circulant matrix; entry `(i, j)` of the full
/// matrix is `c_{(j - i) mod n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantRow {
    row: Vec<Count>,
}

impl CirculantRow {
    pub fn new(row: Vec<Count>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::domain("circulant row must be non-empty"));
        }
        Ok(CirculantRow { row })
    }

    /// `circ(1, 0, ..., 0)`.
    pub fn identity(n: usize) -> Self {
        let mut row = vec![Count::zero(); n];
        row[0] = Count::one();
        CirculantRow { row }
    }

    pub fn dim(&self) -> usize {
        self.row.len()
    }

    pub fn as_slice(&self) -> &[Count] {
        &self.row
    }

    pub fn into_vec(self) -> Vec<Count> {
        self.row
    }

    /// Entry `(i, j)` of the full matrix.
    pub fn entry(&self, i: usize, j: usize) -> &Count {
        let n = self.dim();
        &self.row[(j + n - i % n) % n]
    }

    /// `c_m == c_{(n - m) mod n}` for all `m`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|m| self.row[m] == self.row[(n - m) % n])
    }
}

fn map_indices<F>(n: usize, f: F) -> Vec<Count>
where
    F: Fn(usize) -> Count + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// First row of `A(X_n)^k`, entry `m` being the walk count from 0 to `m`.
pub fn adjacency_power_row(n: u64, k: u32) -> Result<CirculantRow> {
    let f = factorize(n)?;
    let size = usize::try_from(n)
        .map_err(|_| Error::resource(format!("n = {n} does not fit in memory")))?;
    if k == 0 {
        return Ok(CirculantRow::identity(size));
    }
    // Entries depend only on m mod rad(n); evaluate one per class and repeat.
    let rad = f.radical() as usize;
    let classes = map_indices(rad.min(size), |m| walks_factored(&f, k, 0, m as u64));
    let row = (0..size).map(|m| classes[m % rad].clone()).collect();
    Ok(CirculantRow { row })
}

/// First row of the product of two circulants: the cyclic convolution
/// `r[m] = sum_t a[t] * b[(m - t) mod n]`.
pub fn circ_multiply(a: &CirculantRow, b: &CirculantRow) -> Result<CirculantRow> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::domain(format!(
            "circulant dimension mismatch: {n} vs {}",
            b.dim()
        )));
    }
    let row = map_indices(n, |m| {
        let mut acc = Count::zero();
        for (t, at) in a.row.iter().enumerate() {
            if !at.is_zero() {
                acc += at * &b.row[(m + n - t) % n];
            }
        }
        acc
    });
    Ok(CirculantRow { row })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[u64]) -> CirculantRow {
        CirculantRow::new(v.iter().map(|&x| Count::from(x)).collect()).unwrap()
    }

    #[test]
    fn power_row_examples() {
        assert_eq!(adjacency_power_row(4, 1).unwrap(), row(&[0, 1, 0, 1]));
        assert_eq!(adjacency_power_row(4, 2).unwrap(), row(&[2, 0, 2, 0]));
        assert_eq!(adjacency_power_row(5, 2).unwrap(), row(&[4, 3, 3, 3, 3]));
        assert_eq!(adjacency_power_row(6, 0).unwrap(), CirculantRow::identity(6));
        assert!(adjacency_power_row(1, 2).is_err());
    }

    #[test]
    fn multiply_examples() {
        let b = row(&[3, 1, 4, 1, 5]);
        assert_eq!(circ_multiply(&CirculantRow::identity(5), &b).unwrap(), b);
        let c4 = row(&[0, 1, 0, 1]);
        assert_eq!(circ_multiply(&c4, &c4).unwrap(), row(&[2, 0, 2, 0]));
        let k2 = row(&[0, 1]);
        assert_eq!(circ_multiply(&k2, &k2).unwrap(), row(&[1, 0]));
        assert!(matches!(circ_multiply(&k2, &c4), Err(Error::Domain(_))));
    }

    #[test]
    fn entry_indexing() {
        let r = row(&[10, 11, 12]);
        assert_eq!(r.entry(0, 2), &Count::from(12u32));
        assert_eq!(r.entry(2, 0), &Count::from(11u32));
        assert_eq!(r.entry(1, 1), &Count::from(10u32));
    }

    #[test]
    fn semigroup_and_conservation() {
        for n in 2..=20u64 {
            let phi = Count::from(factorize(n).unwrap().totient());
            let step = adjacency_power_row(n, 1).unwrap();
            let mut prev = adjacency_power_row(n, 0).unwrap();
            for k in 0..=10u32 {
                let cur = adjacency_power_row(n, k).unwrap();
                assert_eq!(cur, prev, "n={n} k={k}");
                assert!(cur.is_symmetric());
                assert_eq!(cur.as_slice().iter().sum::<Count>(), num_traits::pow(phi.clone(), k as usize));
                prev = circ_multiply(&cur, &step).unwrap();
            }
        }
    }
}
