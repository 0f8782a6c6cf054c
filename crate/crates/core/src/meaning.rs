//! Concept meaningfulness via the Helmholtz principle.
//!
//! A concept that appears in m sentences of a paragraph, out of k
//! appearances in the whole document, has an expected number of false
//! alarms NFA = C(k,m) / N^(m-1), where N is the document-to-paragraph
//! length ratio. Meaningfulness is -(1/m) log10 NFA; concepts whose
//! maximum per-paragraph meaningfulness strictly exceeds a threshold
//! epsilon form the meaningful set, the document's main topics.
//!
//! All arithmetic stays in log space so large documents cannot overflow.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::corpus::Document;
use crate::error::{Error, Result};

/// Base-10 log of the binomial coefficient C(k, m).
///
/// Computed as a cumulative sum of term logs over the shorter side of the
/// coefficient, never materializing factorials.
pub fn log_binomial(k: usize, m: usize) -> Result<f64> {
    if m > k {
        return Err(Error::Domain(format!(
            "binomial coefficient C({k}, {m}) requires m <= k"
        )));
    }
    let span = m.min(k - m);
    let mut sum = 0.0f64;
    for i in 0..span {
        sum += ((k - i) as f64).log10() - ((i + 1) as f64).log10();
    }
    Ok(sum)
}

/// log10 of the number of false alarms for a concept seen k times in the
/// document and m times in one paragraph, with length ratio `n_ratio`.
pub fn nfa_log10(k: usize, m: usize, n_ratio: usize) -> Result<f64> {
    if m < 1 || m > k {
        return Err(Error::Domain(format!(
            "nfa requires 1 <= m <= k, got k={k}, m={m}"
        )));
    }
    if n_ratio < 1 {
        return Err(Error::Domain("nfa requires N >= 1".into()));
    }
    Ok(log_binomial(k, m)? - (m as f64 - 1.0) * (n_ratio as f64).log10())
}

/// Meaningfulness of a concept within one paragraph: -(1/m) log10 NFA.
///
/// Positive iff NFA < 1, i.e. the concentration is rarer than chance.
pub fn meaning_in_paragraph(k: usize, m: usize, n_ratio: usize) -> Result<f64> {
    let nfa = nfa_log10(k, m, n_ratio)?;
    if nfa == 0.0 {
        // Avoids -0.0 leaking into serialized output.
        return Ok(0.0);
    }
    Ok(-nfa / m as f64)
}

/// Per-paragraph meaningfulness of one concept. Only paragraphs where the
/// concept occurs (m >= 1) are recorded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParagraphMeaning {
    pub paragraph: usize,
    pub m: usize,
    #[serde(skip_serializing, default)]
    pub nfa_log10: f64,
    pub meaning: f64,
}

/// All meaningfulness values for one concept; `document_meaning` is the
/// maximum over paragraphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeaningEntry {
    #[serde(rename = "id")]
    pub concept_id: String,
    pub document_meaning: f64,
    pub per_paragraph: Vec<ParagraphMeaning>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// The full meaning table for a document at one threshold.
///
/// `entries` is sorted by concept id; `meaningful` holds the ids with
/// `document_meaning > epsilon`, ordered by descending meaning then
/// ascending id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeaningTable {
    pub epsilon: f64,
    #[serde(rename = "concepts")]
    pub entries: Vec<MeaningEntry>,
    pub meaningful: Vec<String>,
    /// True when the document had no concept occurrences at all; the
    /// table is then empty rather than an error.
    #[serde(skip_serializing_if = "is_false", default)]
    pub empty_concept_space: bool,
}

impl MeaningTable {
    /// Looks up one concept's entry by id.
    pub fn get(&self, concept_id: &str) -> Option<&MeaningEntry> {
        self.entries
            .binary_search_by(|e| e.concept_id.as_str().cmp(concept_id))
            .ok()
            .map(|i| &self.entries[i])
    }

    pub fn is_meaningful(&self, concept_id: &str) -> bool {
        self.meaningful.iter().any(|id| id == concept_id)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// Computes the meaning table for a document at threshold `epsilon`.
///
/// For each concept: k counts the sentences of the document containing it
/// and m the sentences of one paragraph containing it. The length ratio
/// for paragraph j is N = max(1, floor(L / B_j)) with L the document's
/// total concept occurrences and B_j the paragraph's. Paragraphs whose
/// sentences carry no concepts are skipped.
pub fn build_meaning_table(doc: &Document, epsilon: f64) -> MeaningTable {
    let total = doc.total_concepts();
    if total == 0 {
        return MeaningTable {
            epsilon,
            entries: Vec::new(),
            meaningful: Vec::new(),
            empty_concept_space: true,
        };
    }

    let mut paragraph_of = vec![0usize; doc.sentences.len()];
    for p in &doc.paragraphs {
        for s in p.sentence_indices() {
            paragraph_of[s] = p.index;
        }
    }
    let n_ratio: Vec<usize> = (0..doc.paragraphs.len())
        .map(|j| {
            let b = doc.paragraph_concepts(j);
            if b == 0 {
                0
            } else {
                (total / b).max(1)
            }
        })
        .collect();

    // Concept id -> per-paragraph sentence counts, in id order.
    let mut occurrences: BTreeMap<&str, BTreeMap<usize, usize>> = BTreeMap::new();
    for sentence in &doc.sentences {
        for concept in &sentence.concepts {
            *occurrences
                .entry(concept.id.as_str())
                .or_default()
                .entry(paragraph_of[sentence.index])
                .or_insert(0) += 1;
        }
    }
    let occurrences: Vec<(&str, BTreeMap<usize, usize>)> = occurrences.into_iter().collect();

    // Per-concept work is independent; the indexed collect keeps the
    // result identical to sequential evaluation.
    let entries: Vec<MeaningEntry> = occurrences
        .par_iter()
        .map(|(id, by_paragraph)| {
            let k: usize = by_paragraph.values().sum();
            let per_paragraph: Vec<ParagraphMeaning> = by_paragraph
                .iter()
                .map(|(&j, &m)| {
                    let nfa = nfa_log10(k, m, n_ratio[j])
                        .expect("occurrence counts satisfy 1 <= m <= k");
                    let meaning = if nfa == 0.0 { 0.0 } else { -nfa / m as f64 };
                    ParagraphMeaning {
                        paragraph: j,
                        m,
                        nfa_log10: nfa,
                        meaning,
                    }
                })
                .collect();
            let document_meaning = per_paragraph
                .iter()
                .map(|p| p.meaning)
                .fold(f64::NEG_INFINITY, f64::max);
            MeaningEntry {
                concept_id: (*id).to_string(),
                document_meaning,
                per_paragraph,
            }
        })
        .collect();

    let mut meaningful: Vec<(f64, &str)> = entries
        .iter()
        .filter(|e| e.document_meaning > epsilon)
        .map(|e| (e.document_meaning, e.concept_id.as_str()))
        .collect();
    meaningful.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
    let meaningful = meaningful.into_iter().map(|(_, id)| id.to_string()).collect();

    MeaningTable {
        epsilon,
        entries,
        meaningful,
        empty_concept_space: false,
    }
}
