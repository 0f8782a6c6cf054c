//! Document ingestion: segmentation into paragraphs and sentences, concept
//! annotation, and the generic-semantic-type filter.
//!
//! Two input paths exist. Annotated JSON is the precision path: it carries
//! per-sentence concept lists produced by an external concept mapper.
//! Plain text is segmented heuristically and can be annotated with
//! [`surrogate_annotate`] so the full pipeline runs without external tools.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Semantic types considered too broad to carry topical signal; concepts
/// tagged with one of these are discarded by [`filter_generic_types`].
pub const GENERIC_SEMANTIC_TYPES: [&str; 9] = [
    "Temporal Concept",
    "Spatial Concept",
    "Qualitative Concept",
    "Quantitative Concept",
    "Language",
    "Mental Process",
    "Intellectual Product",
    "Idea or Concept",
    "Functional Concept",
];

/// Small English stopword list used by the surrogate annotator and the
/// optional ROUGE stopword filter.
pub const DEFAULT_STOPWORDS: [&str; 64] = [
    "a", "about", "after", "all", "also", "an", "and", "any", "are", "as", "at", "be", "been",
    "but", "by", "can", "could", "did", "do", "does", "for", "from", "had", "has", "have", "how",
    "if", "in", "into", "is", "it", "its", "may", "more", "most", "not", "of", "on", "one", "or",
    "other", "our", "out", "over", "should", "so", "some", "such", "than", "that", "the", "their",
    "then", "there", "these", "they", "this", "to", "was", "we", "were", "which", "will", "with",
];

/// Returns [`DEFAULT_STOPWORDS`] as an owned set.
pub fn default_stopwords() -> BTreeSet<String> {
    DEFAULT_STOPWORDS.iter().map(|w| (*w).to_string()).collect()
}

/// A unit of meaning attached to a sentence.
///
/// Identity is the `id` alone: two concepts are equal iff their ids are
/// equal, regardless of label or semantic type. When annotations come from
/// a UMLS mapper the id is a CUI; the surrogate annotator uses the token
/// itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Concept {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semantic_type: Option<String>,
}

impl Concept {
    pub fn new(id: impl Into<String>) -> Self {
        Concept {
            id: id.into(),
            label: None,
            semantic_type: None,
        }
    }

    pub fn with_semantic_type(mut self, semantic_type: impl Into<String>) -> Self {
        self.semantic_type = Some(semantic_type.into());
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

impl PartialEq for Concept {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Concept {}

impl PartialOrd for Concept {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Concept {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.id.cmp(&other.id)
    }
}

impl std::hash::Hash for Concept {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id)
    }
}

/// A sentence with its position, original text, and unique-concept set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    /// 0-based position in document order.
    pub index: usize,
    pub text: String,
    pub concepts: BTreeSet<Concept>,
}

impl Sentence {
    /// True if the sentence contains a concept with the given id.
    pub fn contains_concept(&self, id: &str) -> bool {
        self.concepts.contains(&Concept::new(id))
    }
}

/// A contiguous run of sentences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paragraph {
    /// 0-based paragraph position.
    pub index: usize,
    /// First sentence index (inclusive).
    pub start: usize,
    /// One past the last sentence index.
    pub end: usize,
}

impl Paragraph {
    pub fn sentence_indices(&self) -> std::ops::Range<usize> {
        self.start..self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

/// An ordered document: paragraphs partition the sentence list.
///
/// Documents are immutable after construction and safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub sentences: Vec<Sentence>,
    pub paragraphs: Vec<Paragraph>,
}

impl Document {
    /// Replaces the document id, e.g. with a corpus filename stem.
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }

    /// Total number of concept occurrences in the document (one per
    /// sentence containing the concept).
    pub fn total_concepts(&self) -> usize {
        self.sentences.iter().map(|s| s.concepts.len()).sum()
    }

    /// Concept occurrences within paragraph `j`.
    pub fn paragraph_concepts(&self, j: usize) -> usize {
        self.paragraph_sentences(j)
            .iter()
            .map(|s| s.concepts.len())
            .sum()
    }

    /// The sentences of paragraph `j`.
    pub fn paragraph_sentences(&self, j: usize) -> &[Sentence] {
        let p = &self.paragraphs[j];
        &self.sentences[p.start..p.end]
    }

    /// All distinct concept ids in the document, in id order.
    pub fn unique_concept_ids(&self) -> BTreeSet<String> {
        self.sentences
            .iter()
            .flat_map(|s| s.concepts.iter().map(|c| c.id.clone()))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Plain-text loading
// ---------------------------------------------------------------------------

/// Segments trimmed plain text into a [`Document`] with empty concept sets.
///
/// Paragraphs split on blank lines; sentences split after `.`, `?` or `!`
/// followed by whitespace and an uppercase letter, or at end of paragraph.
/// Abbreviations such as "Dr. Smith" therefore over-split; annotated JSON
/// is the precision path.
pub fn load_plain_text(text: &str) -> Result<Document> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyDocument);
    }

    let mut sentences = Vec::new();
    let mut paragraphs = Vec::new();

    for block in split_blank_line_blocks(trimmed) {
        let start = sentences.len();
        for sent in split_sentences(&block) {
            sentences.push(Sentence {
                index: sentences.len(),
                text: sent,
                concepts: BTreeSet::new(),
            });
        }
        let end = sentences.len();
        if end > start {
            paragraphs.push(Paragraph {
                index: paragraphs.len(),
                start,
                end,
            });
        }
    }

    if sentences.is_empty() {
        return Err(Error::EmptyDocument);
    }

    Ok(Document {
        id: String::new(),
        sentences,
        paragraphs,
    })
}

/// Splits text into blocks separated by one or more blank lines.
fn split_blank_line_blocks(text: &str) -> Vec<String> {
    let mut blocks = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.trim().is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            current.clear();
        } else {
            if !current.is_empty() {
                current.push(' ');
            }
            current.push_str(line.trim());
        }
    }
    if !current.trim().is_empty() {
        blocks.push(current);
    }
    blocks
}

/// Splits one paragraph into sentences.
///
/// A boundary is a run of `.`/`?`/`!` followed by whitespace and an
/// uppercase letter. Text without any terminator is a single sentence.
pub fn split_sentences(paragraph: &str) -> Vec<String> {
    let chars: Vec<char> = paragraph.chars().collect();
    let mut sentences = Vec::new();
    let mut sentence_start = 0usize;
    let mut i = 0usize;

    while i < chars.len() {
        if matches!(chars[i], '.' | '?' | '!') {
            // Absorb a run of terminators ("?!", "...").
            let mut j = i + 1;
            while j < chars.len() && matches!(chars[j], '.' | '?' | '!') {
                j += 1;
            }
            // Look past whitespace for an uppercase letter.
            let mut k = j;
            while k < chars.len() && chars[k].is_whitespace() {
                k += 1;
            }
            let boundary = k > j && k < chars.len() && chars[k].is_uppercase();
            if boundary {
                let sent: String = chars[sentence_start..j].iter().collect();
                let sent = sent.trim().to_string();
                if !sent.is_empty() {
                    sentences.push(sent);
                }
                sentence_start = k;
                i = k;
                continue;
            }
            i = j;
        } else {
            i += 1;
        }
    }

    let tail: String = chars[sentence_start..].iter().collect();
    let tail = tail.trim().to_string();
    if !tail.is_empty() {
        sentences.push(tail);
    }
    sentences
}

// ---------------------------------------------------------------------------
// Annotated JSON loading
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct AnnotatedDocument {
    id: String,
    paragraphs: Vec<AnnotatedParagraph>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AnnotatedParagraph {
    sentences: Vec<AnnotatedSentence>,
}

#[derive(Debug, Serialize, Deserialize)]
struct AnnotatedSentence {
    text: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    concepts: Vec<Concept>,
    /// Optional explicit index; must match the position implied by order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
}

/// Loads a concept-annotated document from its JSON representation.
///
/// Sentence indices are implicit from order; an explicit `index` field, if
/// present, is validated against the position. Per-sentence concept lists
/// are deduplicated by id (first occurrence wins).
pub fn load_annotated(json: &str) -> Result<Document> {
    let parsed: AnnotatedDocument =
        serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))?;

    if parsed.paragraphs.is_empty() {
        return Err(Error::Schema("document has no paragraphs".into()));
    }

    let mut sentences = Vec::new();
    let mut paragraphs = Vec::new();
    let mut seen_indices = BTreeSet::new();

    for para in parsed.paragraphs {
        if para.sentences.is_empty() {
            return Err(Error::Schema(format!(
                "paragraph {} has no sentences",
                paragraphs.len()
            )));
        }
        let start = sentences.len();
        for sent in para.sentences {
            let position = sentences.len();
            if let Some(explicit) = sent.index {
                if !seen_indices.insert(explicit) {
                    return Err(Error::DuplicateSentenceIndex(explicit));
                }
                if explicit != position {
                    return Err(Error::Schema(format!(
                        "sentence index {explicit} does not match position {position}"
                    )));
                }
            }
            let mut concepts = BTreeSet::new();
            for concept in sent.concepts {
                if concept.id.is_empty() {
                    return Err(Error::Schema("concept with empty id".into()));
                }
                // First occurrence wins on duplicate ids.
                if !concepts.contains(&concept) {
                    concepts.insert(concept);
                }
            }
            sentences.push(Sentence {
                index: position,
                text: sent.text,
                concepts,
            });
        }
        paragraphs.push(Paragraph {
            index: paragraphs.len(),
            start,
            end: sentences.len(),
        });
    }

    if sentences.is_empty() {
        return Err(Error::Schema("document has no sentences".into()));
    }

    Ok(Document {
        id: parsed.id,
        sentences,
        paragraphs,
    })
}

/// Serializes a document to the annotated JSON format; inverse of
/// [`load_annotated`].
pub fn to_annotated_json(doc: &Document) -> Result<String> {
    let paragraphs = doc
        .paragraphs
        .iter()
        .map(|p| AnnotatedParagraph {
            sentences: doc.sentences[p.start..p.end]
                .iter()
                .map(|s| AnnotatedSentence {
                    text: s.text.clone(),
                    concepts: s.concepts.iter().cloned().collect(),
                    index: None,
                })
                .collect(),
        })
        .collect();
    let annotated = AnnotatedDocument {
        id: doc.id.clone(),
        paragraphs,
    };
    Ok(serde_json::to_string_pretty(&annotated)?)
}

// ---------------------------------------------------------------------------
// Annotation transforms
// ---------------------------------------------------------------------------

/// Removes every concept whose semantic type is in `generic_types`.
///
/// Concepts without a semantic type are kept: the filter is defined over
/// semantic types, and absent means unclassifiable.
pub fn filter_generic_types(doc: &Document, generic_types: &BTreeSet<String>) -> Document {
    let sentences = doc
        .sentences
        .iter()
        .map(|s| Sentence {
            index: s.index,
            text: s.text.clone(),
            concepts: s
                .concepts
                .iter()
                .filter(|c| match &c.semantic_type {
                    Some(t) => !generic_types.contains(t),
                    None => true,
                })
                .cloned()
                .collect(),
        })
        .collect();
    Document {
        id: doc.id.clone(),
        sentences,
        paragraphs: doc.paragraphs.clone(),
    }
}

/// Returns [`GENERIC_SEMANTIC_TYPES`] as an owned set.
pub fn default_generic_types() -> BTreeSet<String> {
    GENERIC_SEMANTIC_TYPES
        .iter()
        .map(|t| (*t).to_string())
        .collect()
}

/// Derives concept sets from sentence text: unique lowercase alphabetic
/// tokens of length >= 3 not in `stopwords`, each used as its own concept
/// id with no semantic type.
pub fn surrogate_annotate(doc: &Document, stopwords: &BTreeSet<String>) -> Document {
    let sentences = doc
        .sentences
        .iter()
        .map(|s| {
            let concepts = s
                .text
                .split(|c: char| !c.is_alphabetic())
                .map(|tok| tok.to_lowercase())
                .filter(|tok| tok.chars().count() >= 3 && !stopwords.contains(tok.as_str()))
                .map(|tok| Concept {
                    label: Some(tok.clone()),
                    id: tok,
                    semantic_type: None,
                })
                .collect();
            Sentence {
                index: s.index,
                text: s.text.clone(),
                concepts,
            }
        })
        .collect();
    Document {
        id: doc.id.clone(),
        sentences,
        paragraphs: doc.paragraphs.clone(),
    }
}
