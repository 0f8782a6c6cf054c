//! Command-line front end for the summarization pipeline.
//!
//! Subcommands cover the full workflow: `summarize` one document, `sweep`
//! a threshold range over a corpus, `evaluate` candidate summaries against
//! model summaries, `compare` two score files, and `topology` for graph
//! structure reports. All outputs are deterministic for fixed inputs.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use swsum_core::corpus::{
    default_generic_types, default_stopwords, filter_generic_types, load_annotated,
    load_plain_text, surrogate_annotate, Document,
};
use swsum_core::graph::{build_graph, degree_ranking, export_dot, select_summary, SentenceGraph};
use swsum_core::meaning::{build_meaning_table, MeaningTable};
use swsum_core::rouge::{score_summary, RougeConfig};
use swsum_core::stats::wilcoxon_signed_rank;
use swsum_core::topology::{small_world_report, TopologyReport};

#[derive(Parser)]
#[command(name = "swsum", version, about = "Graph-based extractive summarizer")]
struct Cli {
    /// JSON config file mirroring the flags; explicit flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a single document.
    Summarize(SummarizeArgs),
    /// Score summaries over a corpus for a range of meaningfulness thresholds.
    Sweep(SweepArgs),
    /// Score existing candidate summaries against model summaries.
    Evaluate(EvaluateArgs),
    /// Wilcoxon signed-rank comparison of two evaluation score files.
    Compare(CompareArgs),
    /// Sentence-graph structure report for a single document.
    Topology(TopologyArgs),
}

#[derive(Args)]
struct SummarizeArgs {
    /// Input document: .json (annotated) or plain text.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Meaningfulness threshold.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Compression rate in (0, 1].
    #[arg(long)]
    rate: Option<f64>,
    /// Derive concepts from plain text instead of requiring annotations.
    #[arg(long)]
    surrogate: bool,
    /// Also write the meaning table and graph next to the output.
    #[arg(long)]
    explain: bool,
    /// Write the meaning table JSON to this path.
    #[arg(long)]
    dump_meaning: Option<PathBuf>,
    /// Write the sentence graph to this path.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    /// Graph output format (dot or json).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Summary destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Directory of input documents (.json or .txt).
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Directory of model summaries (<stem>.txt).
    #[arg(long)]
    models: Option<PathBuf>,
    /// Threshold range `start:end:step` (inclusive) or a single value.
    #[arg(long)]
    epsilons: Option<String>,
    /// Compression rate in (0, 1].
    #[arg(long)]
    rate: Option<f64>,
    /// Derive concepts from plain text instead of requiring annotations.
    #[arg(long)]
    surrogate: bool,
    /// Enable Porter stemming for scoring (default on).
    #[arg(long, overrides_with = "no_stem")]
    stem: bool,
    /// Disable Porter stemming for scoring.
    #[arg(long)]
    no_stem: bool,
    /// Remove stopwords before scoring (default off).
    #[arg(long)]
    remove_stopwords: bool,
    /// Which score populates the table.
    #[arg(long, value_enum)]
    aggregate: Option<Aggregate>,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Directory of candidate summaries (<stem>.txt).
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Directory of model summaries (<stem>.txt).
    #[arg(long)]
    models: Option<PathBuf>,
    /// Enable Porter stemming for scoring (default on).
    #[arg(long, overrides_with = "no_stem")]
    stem: bool,
    /// Disable Porter stemming for scoring.
    #[arg(long)]
    no_stem: bool,
    /// Remove stopwords before scoring (default off).
    #[arg(long)]
    remove_stopwords: bool,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// First evaluation CSV.
    #[arg(long)]
    a: Option<PathBuf>,
    /// Second evaluation CSV.
    #[arg(long)]
    b: Option<PathBuf>,
    /// Score column to compare.
    #[arg(long)]
    metric: Option<String>,
    /// JSON destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TopologyArgs {
    /// Input document: .json (annotated) or plain text.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Meaningfulness threshold.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Derive concepts from plain text instead of requiring annotations.
    #[arg(long)]
    surrogate: bool,
    /// Report format (json or csv).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Destination; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum Aggregate {
    Recall,
    F1,
}

/// Optional JSON config; every field mirrors a flag of the same name.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    input: Option<PathBuf>,
    corpus: Option<PathBuf>,
    models: Option<PathBuf>,
    epsilon: Option<f64>,
    epsilons: Option<String>,
    rate: Option<f64>,
    stem: Option<bool>,
    remove_stopwords: Option<bool>,
    aggregate: Option<String>,
    surrogate: Option<bool>,
    explain: Option<bool>,
    dump_meaning: Option<PathBuf>,
    graph_out: Option<PathBuf>,
    format: Option<String>,
    output: Option<PathBuf>,
    a: Option<PathBuf>,
    b: Option<PathBuf>,
    metric: Option<String>,
    generic_types: Option<Vec<String>>,
}

/// Marker error distinguishing a missing input path (exit code 2).
#[derive(Debug)]
struct MissingPath(PathBuf);

impl fmt::Display for MissingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no such file or directory: {}", self.0.display())
    }
}

impl std::error::Error for MissingPath {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let missing = err.chain().any(|cause| {
                cause.downcast_ref::<MissingPath>().is_some()
                    || cause
                        .downcast_ref::<std::io::Error>()
                        .is_some_and(|e| e.kind() == std::io::ErrorKind::NotFound)
            });
            if missing {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let config = match &cli.config {
        Some(path) => {
            let text = read_checked(path)?;
            serde_json::from_str(&text)
                .with_context(|| format!("invalid config file {}", path.display()))?
        }
        None => FileConfig::default(),
    };
    match cli.command {
        Command::Summarize(args) => cmd_summarize(args, config),
        Command::Sweep(args) => cmd_sweep(args, config),
        Command::Evaluate(args) => cmd_evaluate(args, config),
        Command::Compare(args) => cmd_compare(args, config),
        Command::Topology(args) => cmd_topology(args, config),
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

fn read_checked(path: &Path) -> Result<String> {
    if !path.exists() {
        return Err(MissingPath(path.to_path_buf()).into());
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}

fn generic_type_set(config: &FileConfig) -> BTreeSet<String> {
    match &config.generic_types {
        Some(list) => list.iter().cloned().collect(),
        None => default_generic_types(),
    }
}

/// Load one document; `.json` files carry annotations, anything else is
/// plain text (optionally concept-annotated by the surrogate tokenizer).
fn load_document(path: &Path, surrogate: bool, generic: &BTreeSet<String>) -> Result<Document> {
    let text = read_checked(path)?;
    let doc = if path.extension().is_some_and(|e| e == "json") {
        let doc = load_annotated(&text).with_context(|| format!("parsing {}", path.display()))?;
        filter_generic_types(&doc, generic)
    } else {
        let doc = load_plain_text(&text).with_context(|| format!("parsing {}", path.display()))?;
        if surrogate {
            surrogate_annotate(&doc, &default_stopwords())
        } else {
            doc
        }
    };
    Ok(doc.with_id(file_stem(path)))
}

fn build_sentence_graph(doc: &Document, epsilon: f64) -> (MeaningTable, SentenceGraph) {
    let table = build_meaning_table(doc, epsilon);
    let meaningful: BTreeSet<String> = table.meaningful.iter().cloned().collect();
    let graph = build_graph(doc, &meaningful);
    (table, graph)
}

fn summary_text(doc: &Document, selected: &[usize]) -> String {
    let mut out = String::new();
    for &i in selected {
        out.push_str(&doc.sentences[i].text);
        out.push('\n');
    }
    out
}

fn write_or_print(output: Option<&Path>, content: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn rouge_config(stem: bool, no_stem: bool, remove_stopwords: bool, config: &FileConfig) -> RougeConfig {
    let stem = if no_stem {
        false
    } else if stem {
        true
    } else {
        config.stem.unwrap_or(true)
    };
    RougeConfig {
        stem,
        remove_stopwords: remove_stopwords || config.remove_stopwords.unwrap_or(false),
    }
}

fn parse_aggregate(s: &str) -> Result<Aggregate> {
    match s {
        "recall" => Ok(Aggregate::Recall),
        "f1" => Ok(Aggregate::F1),
        other => bail!("unknown aggregate '{other}' (expected recall or f1)"),
    }
}

fn parse_format(s: &str) -> Result<Format> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "dot" => Ok(Format::Dot),
        other => bail!("unknown format '{other}' (expected json, csv, or dot)"),
    }
}

fn resolve_format(flag: Option<Format>, config: &FileConfig) -> Result<Option<Format>> {
    match flag {
        Some(f) => Ok(Some(f)),
        None => config.format.as_deref().map(parse_format).transpose(),
    }
}

/// `start:end:step` expanded inclusively (1e-9 tolerance); a bare number
/// yields a single value.
fn parse_range(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [single] => {
            let v: f64 = single
                .trim()
                .parse()
                .map_err(|_| anyhow!("invalid threshold '{single}'"))?;
            Ok(vec![v])
        }
        [start, end, step] => {
            let start: f64 = start.trim().parse().map_err(|_| anyhow!("invalid range start"))?;
            let end: f64 = end.trim().parse().map_err(|_| anyhow!("invalid range end"))?;
            let step: f64 = step.trim().parse().map_err(|_| anyhow!("invalid range step"))?;
            if !start.is_finite() || !end.is_finite() || !step.is_finite() {
                bail!("range bounds must be finite");
            }
            if step <= 0.0 {
                bail!("range step must be positive");
            }
            if start > end + 1e-9 {
                bail!("range start exceeds end");
            }
            let mut values = Vec::new();
            let mut i = 0u32;
            loop {
                let v = start + f64::from(i) * step;
                if v > end + 1e-9 {
                    break;
                }
                values.push(v);
                i += 1;
            }
            Ok(values)
        }
        _ => bail!("range spec must be 'start:end:step' or a single number"),
    }
}

/// Files in `dir` sorted by name; errors if the directory is missing.
fn list_files(dir: &Path) -> Result<Vec<PathBuf>> {
    if !dir.is_dir() {
        return Err(MissingPath(dir.to_path_buf()).into());
    }
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    Ok(files)
}

/// Pair corpus files with `<stem>.txt` model files; unmatched corpus files
/// are reported to stderr and skipped.
fn pair_with_models(corpus: &Path, models: &Path) -> Result<Vec<(String, PathBuf, PathBuf)>> {
    let model_map: BTreeMap<String, PathBuf> = list_files(models)?
        .into_iter()
        .filter(|p| p.extension().is_some_and(|e| e == "txt"))
        .map(|p| (file_stem(&p), p))
        .collect();
    let mut pairs = Vec::new();
    for path in list_files(corpus)? {
        let stem = file_stem(&path);
        match model_map.get(&stem) {
            Some(model) => pairs.push((stem, path, model.clone())),
            None => eprintln!("warning: no model summary for {}, skipped", path.display()),
        }
    }
    if pairs.is_empty() {
        bail!("no corpus document has a matching model summary");
    }
    Ok(pairs)
}

fn f6(x: f64) -> String {
    format!("{x:.6}")
}

// ---------------------------------------------------------------------------
// summarize
// ---------------------------------------------------------------------------

fn cmd_summarize(args: SummarizeArgs, config: FileConfig) -> Result<()> {
    let input = args
        .input
        .clone()
        .or_else(|| config.input.clone())
        .ok_or_else(|| anyhow!("--input is required"))?;
    let epsilon = args.epsilon.or(config.epsilon).unwrap_or(0.3);
    let rate = args.rate.or(config.rate).unwrap_or(0.3);
    let surrogate = args.surrogate || config.surrogate.unwrap_or(false);
    let explain = args.explain || config.explain.unwrap_or(false);
    let format = resolve_format(args.format, &config)?.unwrap_or(Format::Dot);
    let output = args.output.clone().or_else(|| config.output.clone());

    let doc = load_document(&input, surrogate, &generic_type_set(&config))?;
    let (table, graph) = build_sentence_graph(&doc, epsilon);
    let ranking = degree_ranking(&graph);
    let summary = select_summary(&ranking, graph.n, rate)?;
    write_or_print(output.as_deref(), &summary_text(&doc, &summary.selected))?;

    // Explanation artifacts: named explicitly, or derived from the summary
    // output path (falling back to the input path for stdout runs).
    let base = output.as_deref().unwrap_or(&input);
    let meaning_path = args
        .dump_meaning
        .or_else(|| config.dump_meaning.clone())
        .or_else(|| explain.then(|| base.with_extension("meaning.json")));
    if let Some(path) = meaning_path {
        fs::write(&path, table.to_json()?).with_context(|| format!("writing {}", path.display()))?;
    }
    let graph_path = args
        .graph_out
        .or_else(|| config.graph_out.clone())
        .or_else(|| {
            explain.then(|| {
                let ext = if format == Format::Json { "graph.json" } else { "graph.dot" };
                base.with_extension(ext)
            })
        });
    if let Some(path) = graph_path {
        let content = match format {
            Format::Dot => export_dot(&graph),
            Format::Json => graph.to_json()?,
            Format::Csv => bail!("csv is not a graph export format (use dot or json)"),
        };
        fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepDoc {
    rouge2: f64,
    rougesu4: f64,
    edges: f64,
    report: Option<TopologyReport>,
}

fn cmd_sweep(args: SweepArgs, config: FileConfig) -> Result<()> {
    let corpus = args
        .corpus
        .clone()
        .or_else(|| config.corpus.clone())
        .ok_or_else(|| anyhow!("--corpus is required"))?;
    let models = args
        .models
        .clone()
        .or_else(|| config.models.clone())
        .ok_or_else(|| anyhow!("--models is required"))?;
    let spec = args
        .epsilons
        .clone()
        .or_else(|| config.epsilons.clone())
        .unwrap_or_else(|| "0.1:0.8:0.1".to_string());
    let epsilons = parse_range(&spec)?;
    let rate = args.rate.or(config.rate).unwrap_or(0.3);
    let surrogate = args.surrogate || config.surrogate.unwrap_or(false);
    let scoring = rouge_config(args.stem, args.no_stem, args.remove_stopwords, &config);
    let aggregate = match args.aggregate {
        Some(a) => a,
        None => config
            .aggregate
            .as_deref()
            .map(parse_aggregate)
            .transpose()?
            .unwrap_or(Aggregate::Recall),
    };
    let output = args.output.clone().or_else(|| config.output.clone());

    let generic = generic_type_set(&config);
    let pairs = pair_with_models(&corpus, &models)?;
    let mut docs = Vec::new();
    for (stem, doc_path, model_path) in &pairs {
        let doc = load_document(doc_path, surrogate, &generic)?;
        let model = read_checked(model_path)?;
        if model.trim().is_empty() {
            bail!("model summary {} is empty", model_path.display());
        }
        docs.push((stem.clone(), doc, model));
    }

    let mut out = String::from(
        "epsilon,documents,rouge2,rougesu4,edges,char_path_length,mean_clustering,transitivity,sigma\n",
    );
    for &epsilon in &epsilons {
        let mut rows: Vec<(String, SweepDoc)> = docs
            .par_iter()
            .map(|(stem, doc, model)| {
                let (_, graph) = build_sentence_graph(doc, epsilon);
                let ranking = degree_ranking(&graph);
                let summary = select_summary(&ranking, graph.n, rate)?;
                let text = summary_text(doc, &summary.selected);
                let (r2, su4) = score_summary(&text, model, &scoring)
                    .with_context(|| format!("scoring document {stem}"))?;
                let pick = |s: &swsum_core::rouge::RougeScore| match aggregate {
                    Aggregate::Recall => s.recall,
                    Aggregate::F1 => s.f1,
                };
                Ok((
                    stem.clone(),
                    SweepDoc {
                        rouge2: pick(&r2),
                        rougesu4: pick(&su4),
                        edges: graph.edge_count() as f64,
                        report: small_world_report(&graph).ok(),
                    },
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.sort_by(|a, b| a.0.cmp(&b.0));

        let n = rows.len() as f64;
        let mean = |f: &dyn Fn(&SweepDoc) -> f64| rows.iter().map(|(_, d)| f(d)).sum::<f64>() / n;
        let reported: Vec<&TopologyReport> =
            rows.iter().filter_map(|(_, d)| d.report.as_ref()).collect();
        let topo = |f: &dyn Fn(&TopologyReport) -> f64| -> String {
            if reported.is_empty() {
                String::new()
            } else {
                f6(reported.iter().map(|r| f(r)).sum::<f64>() / reported.len() as f64)
            }
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            f6(epsilon),
            rows.len(),
            f6(mean(&|d: &SweepDoc| d.rouge2)),
            f6(mean(&|d: &SweepDoc| d.rougesu4)),
            f6(mean(&|d: &SweepDoc| d.edges)),
            topo(&|r: &TopologyReport| r.char_path_length),
            topo(&|r: &TopologyReport| r.mean_clustering),
            topo(&|r: &TopologyReport| r.transitivity),
            topo(&|r: &TopologyReport| r.sigma),
        ));
    }
    write_or_print(output.as_deref(), &out)
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

fn cmd_evaluate(args: EvaluateArgs, config: FileConfig) -> Result<()> {
    let corpus = args
        .corpus
        .clone()
        .or_else(|| config.corpus.clone())
        .ok_or_else(|| anyhow!("--corpus is required"))?;
    let models = args
        .models
        .clone()
        .or_else(|| config.models.clone())
        .ok_or_else(|| anyhow!("--models is required"))?;
    let scoring = rouge_config(args.stem, args.no_stem, args.remove_stopwords, &config);
    let output = args.output.clone().or_else(|| config.output.clone());

    let pairs = pair_with_models(&corpus, &models)?;
    let mut rows: Vec<(String, [f64; 6])> = pairs
        .par_iter()
        .map(|(stem, cand_path, model_path)| {
            let cand = read_checked(cand_path)?;
            let model = read_checked(model_path)?;
            let (r2, su4) = score_summary(&cand, &model, &scoring)
                .with_context(|| format!("scoring document {stem}"))?;
            Ok((
                stem.clone(),
                [r2.recall, r2.precision, r2.f1, su4.recall, su4.precision, su4.f1],
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.0.cmp(&b.0));

    let mut out = String::from("doc_id,rouge2_r,rouge2_p,rouge2_f,rougesu4_r,rougesu4_p,rougesu4_f\n");
    for (id, values) in &rows {
        let cells: Vec<String> = values.iter().map(|v| f6(*v)).collect();
        out.push_str(&format!("{},{}\n", id, cells.join(",")));
    }
    let n = rows.len() as f64;
    let means: Vec<String> = (0..6)
        .map(|i| f6(rows.iter().map(|(_, v)| v[i]).sum::<f64>() / n))
        .collect();
    out.push_str(&format!("MEAN,{}\n", means.join(",")));
    write_or_print(output.as_deref(), &out)
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

fn parse_scores(text: &str, metric: &str, source: &str) -> Result<BTreeMap<String, f64>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().context("reading CSV header")?.clone();
    let column = headers
        .iter()
        .position(|h| h == metric)
        .ok_or_else(|| anyhow!("metric '{metric}' not found in {source}"))?;
    let mut scores = BTreeMap::new();
    for record in reader.records() {
        let record = record.with_context(|| format!("reading {source}"))?;
        let id = record
            .get(0)
            .ok_or_else(|| anyhow!("empty row in {source}"))?
            .to_string();
        if id == "MEAN" {
            continue;
        }
        let raw = record
            .get(column)
            .ok_or_else(|| anyhow!("row {id} in {source} lacks column {metric}"))?;
        let value: f64 = raw
            .parse()
            .map_err(|_| anyhow!("row {id} in {source}: '{raw}' is not a number"))?;
        scores.insert(id, value);
    }
    Ok(scores)
}

fn cmd_compare(args: CompareArgs, config: FileConfig) -> Result<()> {
    let a_path = args
        .a
        .clone()
        .or_else(|| config.a.clone())
        .ok_or_else(|| anyhow!("--a is required"))?;
    let b_path = args
        .b
        .clone()
        .or_else(|| config.b.clone())
        .ok_or_else(|| anyhow!("--b is required"))?;
    let metric = args
        .metric
        .clone()
        .or_else(|| config.metric.clone())
        .unwrap_or_else(|| "rouge2_r".to_string());
    let output = args.output.clone().or_else(|| config.output.clone());

    let a_scores = parse_scores(&read_checked(&a_path)?, &metric, &a_path.display().to_string())?;
    let b_scores = parse_scores(&read_checked(&b_path)?, &metric, &b_path.display().to_string())?;
    let mut pairs = Vec::new();
    for (id, a) in &a_scores {
        match b_scores.get(id) {
            Some(b) => pairs.push((*a, *b)),
            None => eprintln!("warning: document {id} missing from {}, skipped", b_path.display()),
        }
    }
    for id in b_scores.keys() {
        if !a_scores.contains_key(id) {
            eprintln!("warning: document {id} missing from {}, skipped", a_path.display());
        }
    }
    if pairs.is_empty() {
        bail!("no documents shared between the two score files");
    }
    let result = wilcoxon_signed_rank(&pairs)?;
    let mut json = result.to_json()?;
    json.push('\n');
    write_or_print(output.as_deref(), &json)
}

// ---------------------------------------------------------------------------
// topology
// ---------------------------------------------------------------------------

fn cmd_topology(args: TopologyArgs, config: FileConfig) -> Result<()> {
    let input = args
        .input
        .clone()
        .or_else(|| config.input.clone())
        .ok_or_else(|| anyhow!("--input is required"))?;
    let epsilon = args.epsilon.or(config.epsilon).unwrap_or(0.3);
    let surrogate = args.surrogate || config.surrogate.unwrap_or(false);
    let format = resolve_format(args.format, &config)?.unwrap_or(Format::Json);
    let output = args.output.clone().or_else(|| config.output.clone());

    let doc = load_document(&input, surrogate, &generic_type_set(&config))?;
    let (_, graph) = build_sentence_graph(&doc, epsilon);
    let report = small_world_report(&graph)?;
    let content = match format {
        Format::Json => {
            let mut json = report.to_json()?;
            json.push('\n');
            json
        }
        Format::Csv => {
            let mut out = String::from(
                "n,edges,char_path_length,mean_clustering,transitivity,l_rand,c_rand,sigma,regime\n",
            );
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                report.n,
                report.edge_count,
                f6(report.char_path_length),
                f6(report.mean_clustering),
                f6(report.transitivity),
                f6(report.random_baseline.l_rand),
                f6(report.random_baseline.c_rand),
                f6(report.sigma),
                report.regime,
            ));
            out
        }
        Format::Dot => bail!("dot is not a topology report format (use json or csv)"),
    };
    write_or_print(output.as_deref(), &content)
}

// ---------------------------------------------------------------------------
