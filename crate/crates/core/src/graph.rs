//! The sentence graph and summary extraction.
//!
//! Sentences are nodes. Consecutive sentences are always joined (local
//! edges, the document's narrative flow); non-consecutive sentences
//! sharing at least one meaningful concept are joined by distant edges.
//! A consecutive pair that also shares a meaningful concept keeps a
//! single edge tagged `both`: the graph is simple and undirected, and the
//! local backbone makes it connected. Sentences are ranked by degree and
//! the top fraction, per the compression rate, becomes the summary.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::corpus::Document;
use crate::error::{Error, Result};

/// Why an edge exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    /// Consecutive sentences only.
    Local,
    /// Shared meaningful concept between non-consecutive sentences.
    Distant,
    /// Consecutive sentences that also share a meaningful concept.
    Both,
}

/// Edge annotation: its kind and the meaningful concepts that induced it
/// (empty for purely local edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeInfo {
    pub kind: EdgeKind,
    pub shared_concepts: BTreeSet<String>,
}

/// Undirected simple graph over a document's sentences.
///
/// Edge keys are normalized to u < v. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SentenceGraph {
    pub n: usize,
    pub adjacency: Vec<BTreeSet<usize>>,
    pub edges: BTreeMap<(usize, usize), EdgeInfo>,
}

impl SentenceGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(|a| a.len()).collect()
    }

    pub fn neighbors(&self, node: usize) -> &BTreeSet<usize> {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&(u.min(v), u.max(v)))
    }

    /// Builds a graph directly from an edge list; nodes are 0..n.
    /// Intended for synthetic graphs in diagnostics and tests.
    pub fn from_edges(n: usize, edge_list: &[(usize, usize)]) -> Self {
        let mut edges = BTreeMap::new();
        for &(a, b) in edge_list {
            assert!(a != b && a < n && b < n, "invalid edge ({a}, {b})");
            let key = (a.min(b), a.max(b));
            let kind = if key.1 - key.0 == 1 {
                EdgeKind::Local
            } else {
                EdgeKind::Distant
            };
            edges.entry(key).or_insert(EdgeInfo {
                kind,
                shared_concepts: BTreeSet::new(),
            });
        }
        Self::assemble(n, edges)
    }

    fn assemble(n: usize, edges: BTreeMap<(usize, usize), EdgeInfo>) -> Self {
        let mut adjacency = vec![BTreeSet::new(); n];
        for &(u, v) in edges.keys() {
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        SentenceGraph { n, adjacency, edges }
    }

    pub fn to_json(&self) -> Result<String> {
        let edges: Vec<EdgeJson> = self
            .edges
            .iter()
            .map(|(&(u, v), info)| EdgeJson {
                u,
                v,
                kind: info.kind,
                concepts: info.shared_concepts.iter().cloned().collect(),
            })
            .collect();
        Ok(serde_json::to_string_pretty(&GraphJson { n: self.n, edges })?)
    }
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize)]
struct EdgeJson {
    u: usize,
    v: usize,
    kind: EdgeKind,
    concepts: Vec<String>,
}

/// Builds the sentence graph for a document given the meaningful concept
/// ids. Local backbone always; distant edges wherever two non-consecutive
/// sentences share a meaningful concept.
pub fn build_graph(doc: &Document, meaningful: &BTreeSet<String>) -> SentenceGraph {
    let n = doc.sentences.len();
    let mut edges: BTreeMap<(usize, usize), EdgeInfo> = BTreeMap::new();
    for i in 0..n.saturating_sub(1) {
        edges.insert(
            (i, i + 1),
            EdgeInfo {
                kind: EdgeKind::Local,
                shared_concepts: BTreeSet::new(),
            },
        );
    }

    // Inverted index: meaningful concept -> sentences containing it.
    let mut sentences_with: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for sentence in &doc.sentences {
        for concept in &sentence.concepts {
            if meaningful.contains(&concept.id) {
                sentences_with
                    .entry(concept.id.as_str())
                    .or_default()
                    .push(sentence.index);
            }
        }
    }

    for (id, holders) in &sentences_with {
        for (a_pos, &u) in holders.iter().enumerate() {
            for &v in &holders[a_pos + 1..] {
                let info = edges.entry((u, v)).or_insert(EdgeInfo {
                    kind: EdgeKind::Distant,
                    shared_concepts: BTreeSet::new(),
                });
                if info.kind == EdgeKind::Local {
                    info.kind = EdgeKind::Both;
                }
                info.shared_concepts.insert((*id).to_string());
            }
        }
    }

    SentenceGraph::assemble(n, edges)
}

/// One row of the degree ranking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedSentence {
    /// 1-based rank.
    pub rank: usize,
    pub sentence_index: usize,
    pub degree: usize,
}

/// Ranks all sentences by descending degree; equal degrees are ordered by
/// ascending sentence index, favoring earlier sentences.
pub fn degree_ranking(g: &SentenceGraph) -> Vec<RankedSentence> {
    let mut order: Vec<(usize, usize)> = (0..g.n).map(|i| (i, g.degree(i))).collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    order
        .into_iter()
        .enumerate()
        .map(|(pos, (sentence_index, degree))| RankedSentence {
            rank: pos + 1,
            sentence_index,
            degree,
        })
        .collect()
}

/// Number of sentences a summary keeps: rate x n rounded half-up, at
/// least 1, at most n.
///
/// The tiny bias added before flooring absorbs binary representation
/// error in products like 0.3 x 85, which must round up from an exact
/// half; no realistic rate sits within 1e-9 below a half boundary.
pub fn summary_sentence_count(n: usize, rate: f64) -> Result<usize> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::Domain(format!(
            "compression rate must be in (0, 1], got {rate}"
        )));
    }
    let size = (rate * n as f64 + 0.5 + 1e-9).floor() as usize;
    Ok(size.clamp(1, n.max(1)))
}

/// An extracted summary: the selected sentence indices in document order,
/// plus the ranking that produced them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub selected: Vec<usize>,
    pub ranked: Vec<RankedSentence>,
    pub compression_rate: f64,
}

/// Takes the top-ranked sentences at the given compression rate and
/// rearranges them into document order.
pub fn select_summary(ranking: &[RankedSentence], n: usize, rate: f64) -> Result<Summary> {
    if ranking.len() != n {
        return Err(Error::Domain(format!(
            "ranking covers {} sentences, document has {n}",
            ranking.len()
        )));
    }
    let size = summary_sentence_count(n, rate)?;
    let mut selected: Vec<usize> = ranking[..size].iter().map(|r| r.sentence_index).collect();
    selected.sort_unstable();
    Ok(Summary {
        selected,
        ranked: ranking.to_vec(),
        compression_rate: rate,
    })
}

/// Renders the graph in DOT format. Nodes are S0..S(n-1); distant and
/// both edges are labeled with their shared concepts.
pub fn export_dot(g: &SentenceGraph) -> String {
    let mut out = String::from("graph sentence_graph {\n");
    for i in 0..g.n {
        let _ = writeln!(out, "  S{i};");
    }
    for (&(u, v), info) in &g.edges {
        match info.kind {
            EdgeKind::Local => {
                let _ = writeln!(out, "  S{u} -- S{v};");
            }
            EdgeKind::Distant | EdgeKind::Both => {
                let label = info
                    .shared_concepts
                    .iter()
                    .map(String::as_str)
                    .collect::<Vec<_>>()
                    .join(",");
                let style = if info.kind == EdgeKind::Both {
                    ""
                } else {
                    ", style=dashed"
                };
                let _ = writeln!(out, "  S{u} -- S{v} [label=\"{label}\"{style}];");
            }
        }
    }
    out.push_str("}\n");
    out
}
