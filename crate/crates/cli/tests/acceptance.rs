//! Acceptance gate: ten checks spanning the numeric core, the sentence
//! graph, the evaluation metrics, and end-to-end CLI determinism. Every
//! numeric claim is either a hand-derivable fixed point or a comparison
//! against an independently coded brute-force oracle. Each test prints one
//! PASS line on success.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fs;
use std::process::Command;
use std::time::Instant;

use swsum_core::corpus::{Concept, Document, Paragraph, Sentence};
use swsum_core::graph::{
    build_graph, degree_ranking, summary_sentence_count, EdgeKind, SentenceGraph,
};
use swsum_core::meaning::{build_meaning_table, meaning_in_paragraph, nfa_log10};
use swsum_core::rouge::{normalize_tokens, rouge_n, rouge_su, RougeConfig};
use swsum_core::stats::wilcoxon_signed_rank;
use swsum_core::topology::{
    characteristic_path_length, mean_clustering, small_world_report, transitivity, Regime,
};

// ---------------------------------------------------------------------------
// Shared generators and oracles
// ---------------------------------------------------------------------------

/// Random annotated document: <= 5 paragraphs, <= 4 sentences each (so
/// <= 20 sentences), <= 10 distinct concept ids.
fn random_document(rng: &mut ChaCha8Rng) -> Document {
    let pool_size = rng.random_range(1..=10usize);
    let pool: Vec<String> = (0..pool_size).map(|i| format!("C{i:02}")).collect();
    let paragraph_count = rng.random_range(1..=5usize);
    let mut sentences = Vec::new();
    let mut paragraphs = Vec::new();
    for p in 0..paragraph_count {
        let start = sentences.len();
        for _ in 0..rng.random_range(1..=4usize) {
            let mut concepts = BTreeSet::new();
            for _ in 0..rng.random_range(0..=4usize) {
                concepts.insert(Concept::new(pool[rng.random_range(0..pool.len())].clone()));
            }
            let index = sentences.len();
            sentences.push(Sentence {
                index,
                text: format!("sentence {index}"),
                concepts,
            });
        }
        paragraphs.push(Paragraph {
            index: p,
            start,
            end: sentences.len(),
        });
    }
    Document {
        id: "gen".into(),
        sentences,
        paragraphs,
    }
}

fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize) -> SentenceGraph {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for u in 0..n {
        for v in u + 2..n {
            if rng.random_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    SentenceGraph::from_edges(n, &edges)
}

fn binomial_u128(k: usize, m: usize) -> u128 {
    let m = m.min(k - m);
    let mut c: u128 = 1;
    for i in 0..m {
        c = c * (k - i) as u128 / (i + 1) as u128;
    }
    c
}

fn fixture(rel: &str) -> String {
    format!("{}/tests/fixtures/{rel}", env!("CARGO_MANIFEST_DIR"))
}

// ---------------------------------------------------------------------------
// 1. Meaning values match an exact-integer oracle on random documents
// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_meaning_oracle_equivalence() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0usize;
    for _ in 0..200 {
        let doc = random_document(&mut rng);
        let table = build_meaning_table(&doc, 0.3);
        let total: usize = doc.sentences.iter().map(|s| s.concepts.len()).sum();
        let mut oracle_ids = BTreeSet::new();
        for s in &doc.sentences {
            for c in &s.concepts {
                oracle_ids.insert(c.id.clone());
            }
        }
        assert_eq!(
            table.entries.len(),
            oracle_ids.len(),
            "concept inventory mismatch"
        );
        for id in &oracle_ids {
            let entry = table.get(id).expect("entry for every observed concept");
            // Independent route: exact integer binomial and block ratio,
            // logarithms taken once at the end.
            let k = doc
                .sentences
                .iter()
                .filter(|s| s.concepts.iter().any(|c| &c.id == id))
                .count();
            let mut best = f64::NEG_INFINITY;
            let mut seen = 0usize;
            for p in &doc.paragraphs {
                let span = &doc.sentences[p.start..p.end];
                let m = span
                    .iter()
                    .filter(|s| s.concepts.iter().any(|c| &c.id == id))
                    .count();
                if m == 0 {
                    continue;
                }
                let b: usize = span.iter().map(|s| s.concepts.len()).sum();
                let n_ratio = (total / b).max(1);
                let expected = ((m as f64 - 1.0) * (n_ratio as f64).log10()
                    - (binomial_u128(k, m) as f64).log10())
                    / m as f64;
                let got = entry
                    .per_paragraph
                    .iter()
                    .find(|pm| pm.paragraph == p.index)
                    .expect("per-paragraph entry");
                assert!(
                    (got.meaning - expected).abs() <= 1e-9,
                    "{id} paragraph {}: {} vs {expected}",
                    p.index,
                    got.meaning
                );
                best = best.max(expected);
                seen += 1;
                checked += 1;
            }
            assert_eq!(entry.per_paragraph.len(), seen);
            assert!((entry.document_meaning - best).abs() <= 1e-9);
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "meaning oracle run took {elapsed:?}"
    );
    println!("PASS 01 meaning oracle: 200 documents, {checked} paragraph values within 1e-9, {elapsed:?}");
}

// ---------------------------------------------------------------------------
// 2. Fixed spot values of the meaningfulness formulas
// ---------------------------------------------------------------------------

#[test]
fn acceptance_02_meaning_spot_values() {
    let nfa = nfa_log10(3, 2, 2).unwrap();
    assert!(
        (nfa - 1.5f64.log10()).abs() <= 1e-12,
        "nfa_log10(3,2,2) = {nfa}"
    );

    let meaning = meaning_in_paragraph(3, 3, 5).unwrap();
    assert!((meaning - 0.46598).abs() <= 1e-5, "meaning(3,3,5) = {meaning}");

    for n_ratio in [1usize, 2, 7, 100, 1_000_000] {
        let m = meaning_in_paragraph(1, 1, n_ratio).unwrap();
        assert_eq!(m, 0.0, "meaning(1,1,{n_ratio})");
        assert!(!m.is_sign_negative(), "meaning(1,1,{n_ratio}) must be +0.0");
    }
    println!("PASS 02 spot values: nfa(3,2,2)=log10(1.5), meaning(3,3,5)=0.46598, meaning(1,1,N)=0");
}

// ---------------------------------------------------------------------------
// 3. Summary size: fixed point and round-half-up property
// ---------------------------------------------------------------------------

#[test]
fn acceptance_03_summary_size() {
    assert_eq!(summary_sentence_count(85, 0.3).unwrap(), 26);

    // rate = k/20 makes round-half-up of rate*n an exact integer expression.
    for n in 1..=1000usize {
        for k in 1..=20usize {
            let rate = k as f64 / 20.0;
            let got = summary_sentence_count(n, rate).unwrap();
            let want = ((k * n + 10) / 20).clamp(1, n);
            assert_eq!(got, want, "n={n} rate={rate}");
        }
    }
    println!("PASS 03 summary size: 85 @ 0.3 -> 26; round-half-up verified for n <= 1000, 20 rates");
}

// ---------------------------------------------------------------------------
// 4. Edge sets shrink monotonically with the threshold; the limit is a path
// ---------------------------------------------------------------------------

#[test]
fn acceptance_04_graph_epsilon_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..50 {
        let doc = random_document(&mut rng);
        let n = doc.sentences.len();
        let mut previous: Option<BTreeSet<(usize, usize)>> = None;
        for step in 0..=10 {
            let eps = f64::from(step) * 0.1;
            let table = build_meaning_table(&doc, eps);
            let meaningful: BTreeSet<String> = table.meaningful.iter().cloned().collect();
            let graph = build_graph(&doc, &meaningful);
            let edges: BTreeSet<(usize, usize)> = graph.edges.keys().cloned().collect();
            if let Some(prev) = &previous {
                assert!(
                    edges.is_subset(prev),
                    "edge set grew when the threshold rose to {eps}"
                );
            }
            previous = Some(edges);
        }
        // Far above every meaning value only the backbone remains.
        let table = build_meaning_table(&doc, 1e12);
        assert!(table.meaningful.is_empty());
        let graph = build_graph(&doc, &BTreeSet::new());
        let expected: BTreeSet<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let got: BTreeSet<(usize, usize)> = graph.edges.keys().cloned().collect();
        assert_eq!(got, expected, "large-threshold limit must be the path graph");
        assert!(graph.edges.values().all(|e| e.kind == EdgeKind::Local));
    }
    println!("PASS 04 monotonicity: 50 documents, 11-step grid nested; limit graph is the path");
}

// ---------------------------------------------------------------------------
// 5. Ranking breaks degree ties by ascending sentence index
// ---------------------------------------------------------------------------

#[test]
fn acceptance_05_tie_break_conformance() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for _ in 0..100 {
        let n = rng.random_range(2..=30usize);
        let mut edges = BTreeSet::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.25) {
                    edges.insert((u, v));
                }
            }
        }
        let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
        let graph = SentenceGraph::from_edges(n, &edge_list);
        let ranking = degree_ranking(&graph);
        assert_eq!(ranking.len(), n);
        let indices: BTreeSet<usize> = ranking.iter().map(|r| r.sentence_index).collect();
        assert_eq!(indices.len(), n, "ranking must cover every sentence");
        for pair in ranking.windows(2) {
            assert!(
                pair[0].degree > pair[1].degree
                    || (pair[0].degree == pair[1].degree
                        && pair[0].sentence_index < pair[1].sentence_index),
                "tie not broken by ascending index: {pair:?}"
            );
        }
    }
    println!("PASS 05 tie-break: 100 random graphs rank equal degrees by ascending index");
}

// ---------------------------------------------------------------------------
// 6. Topology metrics match O(n^3) brute force; fixed small-graph values
// ---------------------------------------------------------------------------

fn oracle_path_length(g: &SentenceGraph) -> f64 {
    let n = g.n;
    let inf = usize::MAX / 4;
    let mut dist = vec![vec![inf; n]; n];
    for i in 0..n {
        dist[i][i] = 0;
    }
    for (u, v) in g.edges.keys() {
        dist[*u][*v] = 1;
        dist[*v][*u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k] + dist[k][j];
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    let mut total: u64 = 0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                assert!(dist[i][j] < inf);
                total += dist[i][j] as u64;
            }
        }
    }
    total as f64 / (n * (n - 1)) as f64
}

fn oracle_clustering_and_transitivity(g: &SentenceGraph) -> (f64, f64) {
    let n = g.n;
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges.keys() {
        adj[*u][*v] = true;
        adj[*v][*u] = true;
    }
    let mut mean = 0.0;
    let mut closed: u64 = 0;
    let mut triples: u64 = 0;
    for i in 0..n {
        let neighbors: Vec<usize> = (0..n).filter(|&j| adj[i][j]).collect();
        let k = neighbors.len();
        let mut links: u64 = 0;
        for a in 0..k {
            for b in a + 1..k {
                if adj[neighbors[a]][neighbors[b]] {
                    links += 1;
                }
            }
        }
        if k >= 2 {
            mean += 2.0 * links as f64 / (k * (k - 1)) as f64;
        }
        closed += links;
        triples += (k * k.saturating_sub(1) / 2) as u64;
    }
    let t = if triples == 0 { 0.0 } else { closed as f64 / triples as f64 };
    (mean / n as f64, t)
}

#[test]
fn acceptance_06_topology_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for _ in 0..500 {
        let n = rng.random_range(3..=12usize);
        let g = random_connected_graph(&mut rng, n);
        let l = characteristic_path_length(&g).unwrap();
        assert_eq!(l.to_bits(), oracle_path_length(&g).to_bits());
        let (c, t) = oracle_clustering_and_transitivity(&g);
        assert_eq!(mean_clustering(&g).to_bits(), c.to_bits());
        assert_eq!(transitivity(&g).to_bits(), t.to_bits());
    }

    // Three-node path: ordered-pair distances sum to 8 over 6 pairs.
    let p3 = SentenceGraph::from_edges(3, &[(0, 1), (1, 2)]);
    assert_eq!(characteristic_path_length(&p3).unwrap(), 4.0 / 3.0);

    // Triangle: every metric is exactly 1.
    let tri = SentenceGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
    assert_eq!(characteristic_path_length(&tri).unwrap(), 1.0);
    assert_eq!(mean_clustering(&tri), 1.0);
    assert_eq!(transitivity(&tri), 1.0);

    // Square with one diagonal. Per corner on the diagonal: 3 neighbors,
    // 2 of the 3 neighbor pairs linked -> 2/3. Off-diagonal corners: 2
    // neighbors, linked -> 1. Mean = (2/3 + 1 + 2/3 + 1)/4 = 5/6. Closed
    // triples 2+1+2+1 = 6 of 3+1+3+1 = 8 -> transitivity 3/4.
    let diamond = SentenceGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
    let dc = mean_clustering(&diamond);
    let (oc, ot) = oracle_clustering_and_transitivity(&diamond);
    assert_eq!(dc.to_bits(), oc.to_bits());
    assert!((dc - 5.0 / 6.0).abs() < 1e-15, "diamond clustering = {dc}");
    assert_eq!(transitivity(&diamond), 0.75);
    assert_eq!(ot, 0.75);

    println!("PASS 06 topology oracles: 500 random graphs exact; P3 L=4/3, triangle 1.0, diamond C=5/6 T=0.75");
}

// ---------------------------------------------------------------------------
// 7. Regime transition on an engineered 100-sentence document
// ---------------------------------------------------------------------------

/// 10 paragraphs x 10 sentences with three concept families:
///  - one topic per paragraph, in all 10 of its sentences      (k=10, m=10)
///  - 20 shortcuts: three spread sentences in a home paragraph
///    plus one sentence five paragraphs away                   (k=4,  m=3)
///  - 1000 cross-paragraph pair concepts tying sentence i to
///    sentence i+offset (offsets 11,13,..,29 mod 100)          (k=2,  m=1)
/// Every paragraph holds exactly 218 of the 2180 occurrences, so each
/// block ratio is exactly 10 and the family meanings land at 0.9,
/// (2 - log10(4))/3 ~ 0.466, and -log10(2) ~ -0.301.
fn transition_document() -> Document {
    let mut sentences: Vec<Sentence> = (0..100)
        .map(|i| Sentence {
            index: i,
            text: format!("Sentence number {i} discusses the running study."),
            concepts: BTreeSet::new(),
        })
        .collect();
    for p in 0..10usize {
        for s in 0..10 {
            sentences[10 * p + s]
                .concepts
                .insert(Concept::new(format!("T{p:02}")));
        }
    }
    for q in 0..20usize {
        let home = q % 10;
        let away = (q + 5) % 10;
        for offset in [0, 4, 8] {
            sentences[10 * home + offset]
                .concepts
                .insert(Concept::new(format!("S{q:02}")));
        }
        sentences[10 * away + (q * 3) % 10]
            .concepts
            .insert(Concept::new(format!("S{q:02}")));
    }
    for t in 0..10usize {
        let offset = 11 + 2 * t;
        for i in 0..100usize {
            let j = (i + offset) % 100;
            let id = format!("G{t:02}x{i:02}");
            sentences[i].concepts.insert(Concept::new(id.clone()));
            sentences[j].concepts.insert(Concept::new(id));
        }
    }
    let paragraphs = (0..10)
        .map(|p| Paragraph {
            index: p,
            start: 10 * p,
            end: 10 * p + 10,
        })
        .collect();
    Document {
        id: "transition".into(),
        sentences,
        paragraphs,
    }
}

#[test]
fn acceptance_07_small_world_transition() {
    let started = Instant::now();
    let doc = transition_document();
    assert_eq!(doc.sentence_count(), 100);
    assert_eq!(doc.total_concepts(), 2180);
    for j in 0..10 {
        assert_eq!(doc.paragraph_concepts(j), 218);
    }

    // Pin the engineered meaning landscape before asserting regimes.
    let table = build_meaning_table(&doc, 0.3);
    let topic = table.get("T00").unwrap().document_meaning;
    assert!((topic - 0.9).abs() < 1e-12, "topic meaning = {topic}");
    let shortcut = table.get("S00").unwrap().document_meaning;
    assert!(
        (shortcut - (2.0 - 4f64.log10()) / 3.0).abs() < 1e-12,
        "shortcut meaning = {shortcut}"
    );
    assert!((shortcut - 0.46598).abs() < 1e-5);
    let pair = table.get("G00x00").unwrap().document_meaning;
    assert!((pair + 2f64.log10()).abs() < 1e-12, "pair meaning = {pair}");

    // Above every meaning value: backbone only, a regular chain.
    let high = build_meaning_table(&doc, 1.0);
    assert!(high.meaningful.is_empty());
    let chain = build_graph(&doc, &BTreeSet::new());
    let chain_report = small_world_report(&chain).unwrap();
    assert_eq!(chain_report.regime, Regime::Regular, "{chain_report:?}");

    // Intermediate threshold: topics and shortcuts only.
    let meaningful: BTreeSet<String> = table.meaningful.iter().cloned().collect();
    assert_eq!(meaningful.len(), 30, "topics + shortcuts expected");
    let mid = build_graph(&doc, &meaningful);
    let mid_report = small_world_report(&mid).unwrap();
    assert_eq!(mid_report.regime, Regime::SmallWorld, "{mid_report:?}");

    // Every concept treated as meaningful: the pair concepts flood the
    // graph with cross-paragraph edges and wash the clustering out.
    let all = build_graph(&doc, &doc.unique_concept_ids());
    let all_report = small_world_report(&all).unwrap();
    assert!(all.edge_count() > 2 * all.n);
    assert_eq!(all_report.regime, Regime::RandomLike, "{all_report:?}");

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "transition run took {elapsed:?}");
    println!(
        "PASS 07 transition: regular @ 1.0, small_world @ 0.3 (sigma {:.2}), random_like (sigma {:.2}), {elapsed:?}",
        mid_report.sigma, all_report.sigma
    );
}

// ---------------------------------------------------------------------------
// 8. ROUGE counts match brute force on every short sequence pair
// ---------------------------------------------------------------------------

/// Clipped-unit counts over fixed alphabets: 9 possible bigrams, 3
/// unigrams plus 9 ordered pairs for the skip metric.
struct UnitCounts {
    bigrams: [u16; 9],
    bigram_total: usize,
    su: [u16; 12],
    su_total: usize,
}

fn unit_counts(seq: &[u8]) -> UnitCounts {
    let mut bigrams = [0u16; 9];
    for w in seq.windows(2) {
        bigrams[(w[0] * 3 + w[1]) as usize] += 1;
    }
    let mut su = [0u16; 12];
    for &t in seq {
        su[t as usize] += 1;
    }
    let mut pair_total = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len().min(i + 5) {
            su[3 + (seq[i] * 3 + seq[j]) as usize] += 1;
            pair_total += 1;
        }
    }
    UnitCounts {
        bigrams,
        bigram_total: seq.len().saturating_sub(1),
        su,
        su_total: seq.len() + pair_total,
    }
}

#[test]
fn acceptance_08_rouge_exhaustive() {
    let started = Instant::now();
    let mut sequences: Vec<Vec<u8>> = vec![Vec::new()];
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..8 {
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for s in &frontier {
            for t in 0..3u8 {
                let mut v = Vec::with_capacity(s.len() + 1);
                v.extend_from_slice(s);
                v.push(t);
                next.push(v);
            }
        }
        sequences.extend(next.iter().cloned());
        frontier = next;
    }
    assert_eq!(sequences.len(), 9841);
    let counts: Vec<UnitCounts> = sequences.iter().map(|s| unit_counts(s)).collect();

    let mut pairs = 0u64;
    for (ci, cand) in sequences.iter().enumerate() {
        let cc = &counts[ci];
        for (ri, refr) in sequences.iter().enumerate() {
            let rc = &counts[ri];

            let r2 = rouge_n(cand, refr, 2);
            let expected2: usize = (0..9)
                .map(|u| cc.bigrams[u].min(rc.bigrams[u]) as usize)
                .sum();
            assert_eq!(r2.match_count, expected2, "cand={cand:?} ref={refr:?}");
            assert_eq!(r2.candidate_count, cc.bigram_total);
            assert_eq!(r2.reference_count, rc.bigram_total);

            let su = rouge_su(cand, refr, 4);
            let expected_su: usize = (0..12).map(|u| cc.su[u].min(rc.su[u]) as usize).sum();
            assert_eq!(su.match_count, expected_su, "cand={cand:?} ref={refr:?}");
            assert_eq!(su.candidate_count, cc.su_total);
            assert_eq!(su.reference_count, rc.su_total);

            // Spot-check the derived ratios on a deterministic subsample.
            if pairs % 9973 == 0 {
                let want_recall = if rc.bigram_total == 0 {
                    0.0
                } else {
                    expected2 as f64 / rc.bigram_total as f64
                };
                assert_eq!(r2.recall.to_bits(), want_recall.to_bits());
                let want_precision = if cc.su_total == 0 {
                    0.0
                } else {
                    expected_su as f64 / cc.su_total as f64
                };
                assert_eq!(su.precision.to_bits(), want_precision.to_bits());
            }
            pairs += 1;
        }
    }
    assert_eq!(pairs, 9841 * 9841);

    // Hand-counted fixtures, exact.
    let config = RougeConfig::default();
    let cand = normalize_tokens("the cat sat on the mat", &config);
    let refr = normalize_tokens("the cat on the mat", &config);
    let fixture2 = rouge_n(&cand, &refr, 2);
    assert_eq!(fixture2.match_count, 3);
    assert_eq!(fixture2.reference_count, 4);
    assert_eq!(fixture2.recall, 0.75);
    assert_eq!(fixture2.precision, 0.6);

    let su_cand = normalize_tokens("a b c", &config);
    let su_ref = normalize_tokens("a c", &config);
    let fixture_su = rouge_su(&su_cand, &su_ref, 4);
    assert_eq!(fixture_su.recall, 1.0);
    assert_eq!(fixture_su.precision, 0.5);

    println!(
        "PASS 08 exhaustive: {pairs} sequence pairs match brute force; fixtures exact, {:?}",
        started.elapsed()
    );
}

// ---------------------------------------------------------------------------
// 9. Wilcoxon p-values match exact enumeration; fixed fixtures
// ---------------------------------------------------------------------------

/// Independent recomputation: f64 average ranks and full 2^n enumeration.
fn oracle_exact_wilcoxon(diffs: &[f64]) -> (f64, f64) {
    let mut nonzero: Vec<f64> = diffs.iter().cloned().filter(|d| *d != 0.0).collect();
    nonzero.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());
    let n = nonzero.len();
    let mut ranks = vec![0.0f64; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j < n && nonzero[j].abs() == nonzero[i].abs() {
            j += 1;
        }
        let avg = (i + 1 + j) as f64 / 2.0;
        for r in ranks.iter_mut().take(j).skip(i) {
            *r = avg;
        }
        i = j;
    }
    let w_plus: f64 = nonzero
        .iter()
        .zip(&ranks)
        .filter(|(d, _)| **d > 0.0)
        .map(|(_, r)| *r)
        .fold(0.0, |acc, r| acc + r);
    let total: f64 = ranks.iter().sum();
    let w = w_plus.min(total - w_plus);
    let mut hits = 0u64;
    for mask in 0u64..(1 << n) {
        let plus: f64 = ranks
            .iter()
            .enumerate()
            .filter(|(idx, _)| mask >> idx & 1 == 1)
            .map(|(_, r)| *r)
            .sum();
        if plus.min(total - plus) <= w {
            hits += 1;
        }
    }
    (w, hits as f64 / (1u64 << n) as f64)
}

#[test]
fn acceptance_09_wilcoxon_exactness() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let n = rng.random_range(1..=10usize);
        let pairs: Vec<(f64, f64)> = (0..n)
            .map(|_| {
                (
                    rng.random_range(0..8) as f64 / 2.0,
                    rng.random_range(0..8) as f64 / 2.0,
                )
            })
            .collect();
        let result = wilcoxon_signed_rank(&pairs).unwrap();
        let diffs: Vec<f64> = pairs.iter().map(|(a, b)| a - b).collect();
        if diffs.iter().all(|d| *d == 0.0) {
            assert!(result.degenerate);
            assert_eq!(result.p_value, 1.0);
            continue;
        }
        let (w, p) = oracle_exact_wilcoxon(&diffs);
        assert_eq!(result.w_statistic, w, "pairs={pairs:?}");
        assert_eq!(result.p_value.to_bits(), p.to_bits(), "pairs={pairs:?}");
    }

    // All positive differences 1..6: W = 0, two-sided p = 2/64.
    let ascending: Vec<(f64, f64)> = (1..=6).map(|i| (f64::from(i), 0.0)).collect();
    let result = wilcoxon_signed_rank(&ascending).unwrap();
    assert_eq!(result.n_effective, 6);
    assert_eq!(result.w_statistic, 0.0);
    assert_eq!(result.p_value, 0.03125);
    assert!(result.significant_at_95);

    // All-zero differences: degenerate, p = 1.
    let flat = vec![(0.25, 0.25); 5];
    let result = wilcoxon_signed_rank(&flat).unwrap();
    assert!(result.degenerate);
    assert_eq!(result.p_value, 1.0);
    assert!(!result.significant_at_95);

    println!("PASS 09 wilcoxon: 300 cases match enumeration; p(+1..+6)=0.03125; all-zero p=1");
}

// ---------------------------------------------------------------------------
// 10. Byte-identical CLI output, independent of thread count
// ---------------------------------------------------------------------------

fn run_swsum(args: &[&str], threads: &str) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_swsum"))
        .args(args)
        .env("RAYON_NUM_THREADS", threads)
        .output()
        .expect("binary runs")
}

#[test]
fn acceptance_10_end_to_end_determinism() {
    let input = fixture("docs/alpha.json");
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let out_a = dir_a.path().join("summary.txt");
    let out_b = dir_b.path().join("summary.txt");

    let run_a = run_swsum(
        &["summarize", "--input", &input, "--output", out_a.to_str().unwrap(), "--explain"],
        "4",
    );
    let run_b = run_swsum(
        &["summarize", "--input", &input, "--output", out_b.to_str().unwrap(), "--explain"],
        "1",
    );
    assert!(run_a.status.success() && run_b.status.success());
    for name in ["summary.txt", "summary.meaning.json", "summary.graph.dot"] {
        let a = fs::read(dir_a.path().join(name)).unwrap();
        let b = fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs across runs/thread counts");
        assert!(!a.is_empty());
    }

    let sweep_args = [
        "sweep",
        "--corpus",
        &fixture("docs"),
        "--models",
        &fixture("models"),
        "--epsilons",
        "0.0:0.4:0.1",
    ];
    let single = run_swsum(&sweep_args, "1");
    let quad = run_swsum(&sweep_args, "4");
    let again = run_swsum(&sweep_args, "4");
    assert!(single.status.success() && quad.status.success());
    assert_eq!(single.stdout, quad.stdout, "sweep output depends on thread count");
    assert_eq!(quad.stdout, again.stdout, "sweep output differs across reruns");
    assert!(!single.stdout.is_empty());

    println!("PASS 10 determinism: summarize artifacts and sweep rows byte-identical across thread counts");
}
