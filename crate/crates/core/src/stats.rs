//! Wilcoxon signed-rank test for paired per-document scores.
//!
//! Differences are ranked by absolute value with average ranks for ties;
//! the statistic is the smaller of the positive- and negative-rank sums.
//! Small samples (n <= 12 effective pairs) get an exact two-sided p-value
//! by enumerating all 2^n sign assignments; larger samples use the normal
//! approximation with tie-exact variance and a continuity correction.
//!
//! Average ranks are half-integers, so all rank bookkeeping is done on
//! doubled integer ranks: the enumeration is exact with no float drift.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// What to do with zero differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroHandling {
    /// Discard zero differences before ranking (Wilcoxon's method).
    #[default]
    Drop,
    /// Rank zeros with everything else, then discard their ranks
    /// (Pratt's method); nonzero ranks shift upward.
    Pratt,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// Test outcome. `degenerate` marks the no-information case where every
/// difference was zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    pub n_effective: usize,
    pub w_statistic: f64,
    pub p_value: f64,
    pub significant_at_95: bool,
    #[serde(skip_serializing_if = "is_false", default)]
    pub degenerate: bool,
}

impl WilcoxonResult {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Runs the test with zero differences dropped.
pub fn wilcoxon_signed_rank(pairs: &[(f64, f64)]) -> Result<WilcoxonResult> {
    wilcoxon_signed_rank_with(pairs, ZeroHandling::Drop)
}

/// Runs the test with explicit zero-difference handling.
pub fn wilcoxon_signed_rank_with(
    pairs: &[(f64, f64)],
    zeros: ZeroHandling,
) -> Result<WilcoxonResult> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput("score pairs"));
    }

    let mut diffs: Vec<(f64, i8)> = pairs
        .iter()
        .map(|&(a, b)| {
            let d = a - b;
            (d.abs(), if d > 0.0 { 1 } else if d < 0.0 { -1 } else { 0 })
        })
        .collect();
    if zeros == ZeroHandling::Drop {
        diffs.retain(|&(_, sign)| sign != 0);
    }
    diffs.sort_by(|a, b| a.0.total_cmp(&b.0));

    // Doubled average ranks: a tie group occupying 1-based positions
    // start+1 ..= start+len gets rank (2*start + len + 1) / 2 each.
    let mut ranks: Vec<(u64, i8)> = Vec::with_capacity(diffs.len());
    let mut start = 0;
    while start < diffs.len() {
        let mut end = start + 1;
        while end < diffs.len() && diffs[end].0 == diffs[start].0 {
            end += 1;
        }
        let doubled = (2 * start + (end - start) + 1) as u64;
        for &(_, sign) in &diffs[start..end] {
            if sign != 0 {
                ranks.push((doubled, sign));
            }
        }
        start = end;
    }

    let n_effective = ranks.len();
    if n_effective == 0 {
        return Ok(WilcoxonResult {
            n_effective: 0,
            w_statistic: 0.0,
            p_value: 1.0,
            significant_at_95: false,
            degenerate: true,
        });
    }

    let total: u64 = ranks.iter().map(|&(r, _)| r).sum();
    let w_plus: u64 = ranks.iter().filter(|&&(_, s)| s > 0).map(|&(r, _)| r).sum();
    let w_doubled = w_plus.min(total - w_plus);

    let p_value = if n_effective <= 12 {
        exact_p(&ranks, w_doubled)
    } else {
        normal_p(&ranks, w_doubled)
    };

    Ok(WilcoxonResult {
        n_effective,
        w_statistic: w_doubled as f64 / 2.0,
        p_value,
        significant_at_95: p_value < 0.05,
        degenerate: false,
    })
}

/// Exact two-sided p: the fraction of sign assignments whose statistic is
/// at least as extreme as the observed one.
fn exact_p(ranks: &[(u64, i8)], observed: u64) -> f64 {
    let total: u64 = ranks.iter().map(|&(r, _)| r).sum();
    let patterns = 1u64 << ranks.len();
    let mut at_least_as_extreme = 0u64;
    for mask in 0..patterns {
        let mut plus = 0u64;
        for (bit, &(rank, _)) in ranks.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                plus += rank;
            }
        }
        if plus.min(total - plus) <= observed {
            at_least_as_extreme += 1;
        }
    }
    at_least_as_extreme as f64 / patterns as f64
}

/// Normal approximation with variance taken from the realized (possibly
/// tied) ranks and a 0.5 continuity correction.
fn normal_p(ranks: &[(u64, i8)], w_doubled: u64) -> f64 {
    let mean: f64 = ranks.iter().map(|&(r, _)| r as f64 / 2.0).sum::<f64>() / 2.0;
    let variance: f64 = ranks
        .iter()
        .map(|&(r, _)| (r as f64 / 2.0).powi(2))
        .sum::<f64>()
        / 4.0;
    let w = w_doubled as f64 / 2.0;
    let z = (w - mean + 0.5) / variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal is valid");
    (2.0 * normal.cdf(z)).min(1.0)
}
