//! Bounded parameter scans.
//!
//! Every `(weight type, dimension vector)` pair within the bounds is decided
//! for every requested genus. The genus-regime checks assert three facts:
//!
//! - genus ≥ 2: every instance is almost very good;
//! - genus 1 with at least one nontrivial flag point: at least almost good;
//! - genus 1 with at least two nontrivial flag points: almost very good.
//!
//! A flag point is nontrivial when some flag subspace there is neither zero
//! nor the whole fiber, i.e. some stored entry lies strictly between 0 and
//! the rank.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use parbun::grid::{instances, GridBounds};
use parbun::{decide, Classification, DimVector, WeightType};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::AlphaSpec;
use crate::report::{fmt_alpha, fmt_opt};
use crate::CliError;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub bounds: GridBounds,
    pub genera: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub genus: u32,
    pub weights: Vec<usize>,
    pub alpha: AlphaSpec,
    pub verdict: String,
    pub margin: Option<i64>,
    pub nontrivial_points: usize,
    #[serde(skip)]
    pub classification: Classification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GenusCounts {
    pub genus: u32,
    pub almost_very_good: usize,
    pub almost_good_only: usize,
    pub not_almost_good: usize,
    pub total: usize,
}

#[derive(Clone, Debug)]
pub struct ScanOutcome {
    /// Sorted by genus, then canonical instance order.
    pub rows: Vec<ScanRow>,
    pub counts: Vec<GenusCounts>,
}

impl ScanOutcome {
    /// Rows that contradict one of the genus-regime facts.
    pub fn remark_violations(&self) -> Vec<&ScanRow> {
        self.rows.iter().filter(|r| violates_regime(r)).collect()
    }
}

pub fn violates_regime(row: &ScanRow) -> bool {
    match row.genus {
        0 => false,
        1 => {
            (row.nontrivial_points >= 1 && row.classification == Classification::NotAlmostGood)
                || (row.nontrivial_points >= 2
                    && row.classification != Classification::AlmostVeryGood)
        }
        _ => row.classification != Classification::AlmostVeryGood,
    }
}

pub fn check_options(opts: &ScanOptions) -> Result<(), CliError> {
    if opts.bounds.max_rank == 0 {
        return Err(CliError::BadInput("--max-rank must be at least 1".into()));
    }
    if opts.bounds.max_flag_len == 0 {
        return Err(CliError::BadInput("--max-flag-len must be at least 1".into()));
    }
    if opts.genera.is_empty() {
        return Err(CliError::BadInput("--genus needs at least one value".into()));
    }
    Ok(())
}

pub fn run_scan(opts: &ScanOptions) -> Result<ScanOutcome, CliError> {
    check_options(opts)?;
    let grid: Vec<(WeightType, DimVector)> = instances(opts.bounds);
    let mut genera = opts.genera.clone();
    genera.sort_unstable();
    genera.dedup();
    let jobs: Vec<(u32, &DimVector)> = genera
        .iter()
        .flat_map(|&g| grid.iter().map(move |(_, a)| (g, a)))
        .collect();
    // par_iter + collect keeps the input order
    let rows = jobs
        .par_iter()
        .map(|&(g, a)| {
            let verdict = decide(a, g)?;
            Ok(ScanRow {
                genus: g,
                weights: a.weight_type().flag_lengths().to_vec(),
                alpha: AlphaSpec::from(a),
                verdict: verdict.classification.to_string(),
                margin: verdict.margin,
                nontrivial_points: a.nontrivial_points(),
                classification: verdict.classification,
            })
        })
        .collect::<Result<Vec<_>, parbun::Error>>()?;

    let mut counts: BTreeMap<u32, GenusCounts> = genera
        .iter()
        .map(|&g| (g, GenusCounts { genus: g, ..Default::default() }))
        .collect();
    for row in &rows {
        let c = counts.get_mut(&row.genus).expect("genus registered");
        c.total += 1;
        match row.classification {
            Classification::AlmostVeryGood => c.almost_very_good += 1,
            Classification::AlmostGoodOnly => c.almost_good_only += 1,
            Classification::NotAlmostGood => c.not_almost_good += 1,
        }
    }
    Ok(ScanOutcome {
        rows,
        counts: counts.into_values().collect(),
    })
}

pub fn render_row_human(r: &ScanRow) -> String {
    format!(
        "g={:<3} w={:<12} {:<24} {:<18} {:>6}",
        r.genus,
        format!("{:?}", r.weights),
        fmt_alpha(&r.alpha),
        r.verdict,
        fmt_opt(r.margin)
    )
}

pub fn render_counts_human(counts: &[GenusCounts]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>5} {:>18} {:>18} {:>18} {:>8}",
        "genus", "almost-very-good", "almost-good-only", "not-almost-good", "total"
    );
    for c in counts {
        let _ = writeln!(
            out,
            "{:>5} {:>18} {:>18} {:>18} {:>8}",
            c.genus, c.almost_very_good, c.almost_good_only, c.not_almost_good, c.total
        );
    }
    out
}
