//! Self-contained ROUGE-2 and ROUGE-SU4 scoring.
//!
//! ROUGE-N counts clipped n-gram overlap between a candidate and a
//! reference; ROUGE-SU counts ordered in-sentence skip pairs up to a
//! maximum gap, plus unigrams. Both report recall, precision and F1 with
//! the raw counts. Matching is clipped: each distinct unit contributes
//! the minimum of its two multiplicities.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::corpus::{split_sentences, DEFAULT_STOPWORDS};
use crate::error::{Error, Result};
use crate::porter;

/// Token normalization options.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RougeConfig {
    /// Porter-stem every token (on by default, the common ROUGE setup).
    pub stem: bool,
    /// Drop stopwords before stemming (off by default).
    pub remove_stopwords: bool,
}

impl Default for RougeConfig {
    fn default() -> Self {
        RougeConfig {
            stem: true,
            remove_stopwords: false,
        }
    }
}

/// Which metric a score belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RougeMetric {
    /// N-gram overlap; `N(2)` is ROUGE-2.
    N(usize),
    /// Skip-bigram plus unigram overlap; `Su(4)` is ROUGE-SU4.
    Su(usize),
}

impl fmt::Display for RougeMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RougeMetric::N(n) => write!(f, "rouge{n}"),
            RougeMetric::Su(skip) => write!(f, "rougesu{skip}"),
        }
    }
}

/// One metric's result. recall = match/reference, precision =
/// match/candidate (each 0 when its denominator is 0), f1 their harmonic
/// mean.
#[derive(Debug, Clone, PartialEq)]
pub struct RougeScore {
    pub metric: RougeMetric,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
    pub match_count: usize,
    pub candidate_count: usize,
    pub reference_count: usize,
}

fn make_score(
    metric: RougeMetric,
    match_count: usize,
    candidate_count: usize,
    reference_count: usize,
) -> RougeScore {
    let recall = if reference_count == 0 {
        0.0
    } else {
        match_count as f64 / reference_count as f64
    };
    let precision = if candidate_count == 0 {
        0.0
    } else {
        match_count as f64 / candidate_count as f64
    };
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    RougeScore {
        metric,
        recall,
        precision,
        f1,
        match_count,
        candidate_count,
        reference_count,
    }
}

/// Clipped multiset intersection size via sort and merge.
fn clipped_intersection<U: Ord>(mut a: Vec<U>, mut b: Vec<U>) -> usize {
    a.sort_unstable();
    b.sort_unstable();
    let (mut i, mut j, mut matches) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                matches += 1;
                i += 1;
                j += 1;
            }
        }
    }
    matches
}

fn ngrams<'a, T, S: AsRef<[T]>>(sentences: &'a [S], n: usize) -> Vec<&'a [T]> {
    let mut grams = Vec::new();
    for sentence in sentences {
        let tokens = sentence.as_ref();
        if tokens.len() >= n {
            grams.extend(tokens.windows(n));
        }
    }
    grams
}

/// Skip units: unigrams as (t, None), ordered pairs with gap <= skip as
/// (first, Some(second)). Pairs never cross sentence boundaries.
fn skip_units<'a, T, S: AsRef<[T]>>(
    sentences: &'a [S],
    skip: usize,
) -> Vec<(&'a T, Option<&'a T>)> {
    let mut units = Vec::new();
    for sentence in sentences {
        let tokens = sentence.as_ref();
        for (i, t) in tokens.iter().enumerate() {
            units.push((t, None));
            for second in &tokens[i + 1..tokens.len().min(i + skip + 1)] {
                units.push((t, Some(second)));
            }
        }
    }
    units
}

/// ROUGE-N over sentence-segmented token sequences.
pub fn rouge_n_sentences<T: Ord, S: AsRef<[T]>>(
    candidate: &[S],
    reference: &[S],
    n: usize,
) -> RougeScore {
    assert!(n >= 1, "n-gram order must be at least 1");
    let cand = ngrams(candidate, n);
    let refr = ngrams(reference, n);
    let (cand_count, ref_count) = (cand.len(), refr.len());
    let matches = clipped_intersection(cand, refr);
    make_score(RougeMetric::N(n), matches, cand_count, ref_count)
}

/// ROUGE-N over flat token sequences (treated as one sentence each).
pub fn rouge_n<T: Ord>(candidate: &[T], reference: &[T], n: usize) -> RougeScore {
    rouge_n_sentences(&[candidate], &[reference], n)
}

/// ROUGE-SU over sentence-segmented token sequences.
pub fn rouge_su_sentences<T: Ord, S: AsRef<[T]>>(
    candidate: &[S],
    reference: &[S],
    skip: usize,
) -> RougeScore {
    assert!(skip >= 1, "skip distance must be at least 1");
    let cand = skip_units(candidate, skip);
    let refr = skip_units(reference, skip);
    let (cand_count, ref_count) = (cand.len(), refr.len());
    let matches = clipped_intersection(cand, refr);
    make_score(RougeMetric::Su(skip), matches, cand_count, ref_count)
}

/// ROUGE-SU over flat token sequences (treated as one sentence each).
pub fn rouge_su<T: Ord>(candidate: &[T], reference: &[T], skip: usize) -> RougeScore {
    rouge_su_sentences(&[candidate], &[reference], skip)
}

fn stopwords() -> &'static BTreeSet<&'static str> {
    static SET: OnceLock<BTreeSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| DEFAULT_STOPWORDS.iter().copied().collect())
}

/// Lowercases, splits on non-alphanumeric characters, drops empty tokens,
/// then applies the configured stopword filter and stemmer.
pub fn normalize_tokens(text: &str, config: &RougeConfig) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .filter(|t| !config.remove_stopwords || !stopwords().contains(t))
        .map(|t| {
            if config.stem {
                porter::stem(t)
            } else {
                t.to_string()
            }
        })
        .collect()
}

/// Splits free text into per-sentence normalized token lists. Each input
/// line is segmented further, so both one-sentence-per-line summaries and
/// paragraph-shaped references get real sentence boundaries.
pub fn sentence_tokens(text: &str, config: &RougeConfig) -> Vec<Vec<String>> {
    text.lines()
        .flat_map(|line| split_sentences(line))
        .map(|sentence| normalize_tokens(&sentence, config))
        .filter(|tokens| !tokens.is_empty())
        .collect()
}

/// Scores a candidate summary against a model summary, returning
/// (ROUGE-2, ROUGE-SU4).
pub fn score_summary(
    candidate: &str,
    reference: &str,
    config: &RougeConfig,
) -> Result<(RougeScore, RougeScore)> {
    if candidate.trim().is_empty() {
        return Err(Error::EmptyInput("candidate summary"));
    }
    if reference.trim().is_empty() {
        return Err(Error::EmptyInput("reference summary"));
    }
    let cand = sentence_tokens(candidate, config);
    let refr = sentence_tokens(reference, config);
    Ok((
        rouge_n_sentences(&cand, &refr, 2),
        rouge_su_sentences(&cand, &refr, 4),
    ))
}
