//! Extractive summarization via meaningful-concept sentence graphs.
//!
//! The pipeline ingests a document as ordered paragraphs of sentences, each
//! sentence carrying a set of unique concepts. Concepts that deviate from
//! random placement (low number of false alarms, in the Helmholtz-principle
//! sense) are kept as the document's main topics; sentences sharing a topic
//! are linked in an undirected graph on top of a consecutive-sentence
//! backbone; the highest-degree sentences form the summary.
//!
//! Evaluation support: small-world diagnostics for the sentence graph,
//! self-contained ROUGE-2 / ROUGE-SU4 scoring, and a Wilcoxon signed-rank
//! test for paired system comparisons.

pub mod corpus;
pub mod error;
pub mod graph;
pub mod meaning;
pub mod porter;
pub mod rouge;
pub mod stats;
pub mod topology;

pub use corpus::{Concept, Document, Paragraph, Sentence};
pub use error::{Error, Result};
pub use graph::{EdgeKind, RankedSentence, SentenceGraph, Summary};
pub use meaning::{MeaningEntry, MeaningTable};
pub use rouge::{RougeConfig, RougeMetric, RougeScore};
pub use stats::{WilcoxonResult, ZeroHandling};
pub use topology::{Regime, TopologyReport};
