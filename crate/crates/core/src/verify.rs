//! Formula-versus-oracle sweeps.
//!
//! Each `(n, k)` cell is independent; with the `parallel` feature the cells
//! run on the rayon pool. Results are merged in `(n, k)` order so a report is
//! identical regardless of scheduling.

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::circulant::adjacency_power_row;
use crate::error::{Error, Result};
use crate::numtheory::factorize;
use crate::oracle::{build_adjacency, enumerate_unit_sum_histogram, OracleConfig};
use crate::walk_formulas::{unit_sum_count, walks_factored};
use crate::Count;

/// Which quantity a comparison covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// `walks(n, k, i, j)` against entry `(i, j)` of `A(X_n)^k`.
    Walks,
    /// `unit_sum_count(n, k, r)` against tuple enumeration; `j` holds `r`.
    UnitSums,
    /// `adjacency_power_row(n, k)[m]` against row 0 of `A(X_n)^k`; `j` holds `m`.
    CirculantRow,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Walks => "walks",
            Check::UnitSums => "unit-sums",
            Check::CirculantRow => "circ-row",
        }
    }
}

/// A disagreement between the closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub check: Check,
    pub n: u64,
    pub k: u32,
    pub i: u64,
    pub j: u64,
    pub formula: Count,
    pub oracle: Count,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} k={} i={} j={}: closed-form {} != oracle {}",
            self.check.name(),
            self.n,
            self.k,
            self.i,
            self.j,
            self.formula,
            self.oracle
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: u64,
    pub max_k: u32,
    /// Unit-sum cells with more than this many tuples are skipped.
    pub tuple_budget: u128,
    pub oracle: OracleConfig,
}

impl SweepConfig {
    pub fn new(max_n: u64, max_k: u32) -> Self {
        SweepConfig {
            max_n,
            max_k,
            tuple_budget: 1_000_000,
            oracle: OracleConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub comparisons: u64,
    /// Unit-sum cells skipped for exceeding the tuple budget.
    pub skipped_cells: u64,
    /// Every mismatch, ordered by `(n, k, check, i, j)`.
    pub mismatches: Vec<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }

    fn merge(&mut self, other: VerifyReport) {
        self.comparisons += other.comparisons;
        self.skipped_cells += other.skipped_cells;
        self.mismatches.extend(other.mismatches);
    }
}

/// Compares walks over every vertex pair, unit sums over every residue and
/// the circulant first row, for one `(n, k)`.
pub fn verify_cell(n: u64, k: u32, cfg: &SweepConfig) -> Result<VerifyReport> {
    let f = factorize(n)?;
    let power = build_adjacency(n, &cfg.oracle)?.pow(k);
    let mut report = VerifyReport::default();
    let mut record = |check, i: u64, j: u64, formula: Count, oracle: &Count| {
        report.comparisons += 1;
        if &formula != oracle {
            report.mismatches.push(Mismatch {
                check,
                n,
                k,
                i,
                j,
                formula,
                oracle: oracle.clone(),
            });
        }
    };

    for i in 0..n {
        for j in 0..n {
            let formula = walks_factored(&f, k, i, j);
            record(Check::Walks, i, j, formula, power.get(i as usize, j as usize));
        }
    }

    let row = adjacency_power_row(n, k)?;
    for (m, (formula, oracle)) in row.as_slice().iter().zip(power.row(0)).enumerate() {
        record(Check::CirculantRow, 0, m as u64, formula.clone(), oracle);
    }

    let within_budget = (f.totient() as u128)
        .checked_pow(k)
        .is_some_and(|t| t <= cfg.tuple_budget);
    let mut skipped = 0;
    if k >= 1 && within_budget {
        let hist = enumerate_unit_sum_histogram(n, k, &cfg.oracle)?;
        for (r, oracle) in hist.iter().enumerate() {
            record(Check::UnitSums, 0, r as u64, unit_sum_count(n, k, r as u64)?, oracle);
        }
    } else if k >= 1 {
        skipped = 1;
    }
    report.skipped_cells = skipped;
    report.mismatches.sort_by_key(|m| (m.check, m.i, m.j));
    Ok(report)
}

/// Runs [`verify_cell`] for every `n` in `2..=max_n` and `k` in `0..=max_k`.
pub fn verify_sweep(cfg: &SweepConfig) -> Result<VerifyReport> {
    if cfg.max_n < 2 {
        return Err(Error::domain("max-n must be at least 2"));
    }
    if cfg.max_n > cfg.oracle.size_cap {
        return Err(Error::resource(format!(
            "max-n = {} exceeds the oracle size cap {}",
            cfg.max_n, cfg.oracle.size_cap
        )));
    }
    let cells: Vec<(u64, u32)> = (2..=cfg.max_n)
        .flat_map(|n| (0..=cfg.max_k).map(move |k| (n, k)))
        .collect();

    #[cfg(feature = "parallel")]
    let results: Vec<Result<VerifyReport>> =
        cells.par_iter().map(|&(n, k)| verify_cell(n, k, cfg)).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<VerifyReport>> =
        cells.iter().map(|&(n, k)| verify_cell(n, k, cfg)).collect();

    let mut report = VerifyReport::default();
    for r in results {
        report.merge(r?);
    }
    Ok(report)
}
