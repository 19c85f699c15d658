//! The `domsum` command line.
//!
//! Exit codes: 0 success, 1 other failure, 2 unparseable input, 3 order
//! above the counting cap, 4 counterexample found, 5 checkpoint mismatch.
//! `DOMSUM_CAP` overrides the counting cap.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{gap_table, BoundReport, GapRow};
use crate::campaign::{verify_order, CampaignConfig, CampaignReport, Mode};
use crate::count::{Count, Counter, DominationSummary};
use crate::enumerate::{ingest_graph6, SourceDescriptor};
use crate::error::{Error, Result};
use crate::experiments::{edge_move_analysis, induction_gap_experiment, multipartite_scan};
use crate::graph::{Graph, PartitionSpec};
use crate::graph6::{parse_graph6, write_graph6};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_COUNTEREXAMPLE: i32 = 4;
pub const EXIT_CHECKPOINT: i32 = 5;

pub const CAP_ENV: &str = "DOMSUM_CAP";

#[derive(Debug, Parser)]
#[command(name = "domsum", version, about = "Dominating-set sums of a graph and its complement")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count dominating sets of a graph and its complement.
    Count(GraphArgs),
    /// Evaluate every upper bound for a graph.
    Bounds(GraphArgs),
    /// Check every graph of one order against the conjectured maximum.
    Verify(VerifyArgs),
    /// Recount after toggling each vertex pair.
    EdgeMoves(GraphArgs),
    /// Compare one-vertex extensions with the balanced bipartite step.
    Induction(GraphArgs),
    /// Compare all complete multipartite graphs of one order.
    Multipartite(MultipartiteArgs),
    /// Gap between 2^(n+1) and the maximum sum, with asymptotic constants.
    Gap(GapArgs),
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group = ArgGroup::new("input").required(true).args(["family", "g6", "edges", "file"]))]
pub struct GraphArgs {
    /// Named graph: cycle:N, path:N, star:K, bipartite:A,B,
    /// multipartite:A1,A2,..., complete:N, empty:N, complement(SPEC)
    #[arg(long)]
    pub family: Option<String>,
    /// A graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge list such as "0-1,1-2"; needs --n.
    #[arg(long, requires = "n")]
    pub edges: Option<String>,
    /// Order for --edges.
    #[arg(long)]
    pub n: Option<usize>,
    /// File whose first graph6 line is used.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Verify,
    Discover,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Read graphs from a graph6 file instead of generating them.
    #[arg(long, conflicts_with = "labeled")]
    pub g6_file: Option<PathBuf>,
    /// Enumerate every labelled graph (n <= 7).
    #[arg(long)]
    pub labeled: bool,
    /// With --labeled, visit one graph of each complement pair.
    #[arg(long, requires = "labeled")]
    pub pair_complements: bool,
    #[arg(long, value_enum, default_value = "verify")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Count every graph without bound-based pruning.
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long, default_value_t = 1024)]
    pub chunk_size: usize,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MultipartiteArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[arg(long)]
    pub n_min: usize,
    #[arg(long)]
    pub n_max: usize,
    /// Known exact maximum for one order, as N=SUM; repeatable.
    #[arg(long = "max-sum", value_parser = parse_max_sum)]
    pub max_sums: Vec<(usize, Count)>,
    #[arg(long)]
    pub json: bool,
}

fn parse_max_sum(s: &str) -> std::result::Result<(usize, Count), String> {
    let (n, sum) = s.split_once('=').ok_or_else(|| format!("expected N=SUM, got {s:?}"))?;
    let n = n.trim().parse().map_err(|_| format!("bad order {n:?}"))?;
    let sum = sum.trim().parse().map_err(|_| format!("bad sum {sum:?}"))?;
    Ok((n, sum))
}

/// Parses the family mini-language.
pub fn parse_family(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("complement(").and_then(|s| s.strip_suffix(')')) {
        return Ok(parse_family(inner)?.complement());
    }
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("family {spec:?} is not NAME:ARGS")))?;
    let nums = args
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad number {t:?} in family {spec:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let one = || match nums.as_slice() {
        [k] => Ok(*k),
        _ => Err(Error::Input(format!("{name} takes one size, got {args:?}"))),
    };
    match name {
        "cycle" => Graph::cycle(one()?),
        "path" => Graph::path(one()?),
        "star" => Graph::star(one()? + 1),
        "complete" => Graph::complete(one()?),
        "empty" => Graph::empty(one()?),
        "bipartite" => match nums.as_slice() {
            [a, b] => Graph::complete_bipartite(*a, *b),
            _ => Err(Error::Input(format!("bipartite takes two sizes, got {args:?}"))),
        },
        "multipartite" => Graph::multipartite(&PartitionSpec::new(nums)?),
        _ => Err(Error::Input(format!("unknown family {name:?}"))),
    }
}

/// Parses `"0-1,1-2,..."` into a graph on `n` vertices.
pub fn parse_edge_list(n: usize, text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let bad = || Error::Input(format!("bad edge {token:?}; expected U-V"));
        let (u, v) = token.split_once('-').ok_or_else(bad)?;
        let u = u.trim().parse().map_err(|_| bad())?;
        let v = v.trim().parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    Graph::from_edge_list(n, &edges)
}

impl GraphArgs {
    pub fn graph(&self) -> Result<Graph> {
        if let Some(f) = &self.family {
            parse_family(f)
        } else if let Some(s) = &self.g6 {
            Ok(parse_graph6(s)?)
        } else if let Some(e) = &self.edges {
            parse_edge_list(self.n.expect("clap enforces --n with --edges"), e)
        } else if let Some(path) = &self.file {
            ingest_graph6(path, None)?
                .next()
                .unwrap_or_else(|| Err(Error::Input(format!("{} has no graphs", path.display()))))
        } else {
            Err(Error::Input("no graph given".into()))
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::CheckpointMismatch { .. } => EXIT_CHECKPOINT,
        Error::OrderOutOfRange(_)
        | Error::EndpointOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::InvalidSize { .. }
        | Error::Graph6(_)
        | Error::DegreeOutOfRange { .. }
        | Error::InvalidPartition
        | Error::Line { .. }
        | Error::OrderMismatch { .. }
        | Error::Stream { .. }
        | Error::Input(_) => EXIT_PARSE,
        Error::Inconsistent(_) | Error::Checkpoint { .. } | Error::Io(_) | Error::Json(_) => EXIT_FAILURE,
    }
}

/// Runs the CLI with `DOMSUM_CAP` taken from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cap = std::env::var(CAP_ENV).ok();
    run_with_cap(args, cap.as_deref(), out, err)
}

pub fn run_with_cap<I, T>(args: I, cap: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let counter = match cap {
        None => Counter::default(),
        Some(text) => match text.trim().parse().map_err(|_| ()).and_then(|c| Counter::with_cap(c).map_err(|_| ())) {
            Ok(c) => c,
            Err(()) => {
                let _ = writeln!(err, "error: {CAP_ENV}={text:?} is not a valid counting cap");
                return EXIT_PARSE;
            }
        },
    };
    match dispatch(&cli.command, &counter, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct CountOutput {
    graph: Graph,
    n: usize,
    count_g: Count,
    count_gbar: Count,
    sum: Count,
    upsilon: Count,
}

impl CountOutput {
    fn new(g: &Graph, s: &DominationSummary) -> Self {
        CountOutput {
            graph: g.clone(),
            n: s.n,
            count_g: s.count_g,
            count_gbar: s.count_gbar,
            sum: s.sum,
            upsilon: s.upsilon,
        }
    }
}

#[derive(Serialize)]
struct BoundsOutput {
    graph: Graph,
    #[serde(flatten)]
    report: BoundReportJson,
}

/// `BoundReport` with counts as JSON numbers and no flattening of `u128`.
#[derive(Serialize)]
struct BoundReportJson {
    n: usize,
    degrees: Vec<usize>,
    lemma_bounds: Vec<Count>,
    best_lemma_bound: Count,
    theorem1_bound: Count,
    conjecture_value: Count,
    degree_window: (i64, i64),
    degree_window_ok: bool,
    actual_sum: Option<Count>,
}

fn dispatch(command: &Command, counter: &Counter, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Count(args) => {
            let g = args.graph()?;
            let s = counter.summarize(&g)?;
            if args.json {
                emit_json(out, &CountOutput::new(&g, &s))?;
            } else {
                writeln!(out, "graph       {} (n = {})", write_graph6(&g), s.n)?;
                writeln!(out, "count_g     {}", s.count_g)?;
                writeln!(out, "count_gbar  {}", s.count_gbar)?;
                writeln!(out, "sum         {} = 2^{} + {}", s.sum, s.n, s.upsilon)?;
                writeln!(out, "upsilon     {}", s.upsilon)?;
            }
            Ok(EXIT_OK)
        }
        Command::Bounds(args) => {
            let g = args.graph()?;
            let report = if counter.check(g.order()).is_ok() {
                BoundReport::with_actual(&g, counter)?
            } else {
                BoundReport::new(&g)
            };
            if args.json {
                let r = report.clone();
                emit_json(
                    out,
                    &BoundsOutput {
                        graph: g.clone(),
                        report: BoundReportJson {
                            n: r.n,
                            degrees: g.degrees(),
                            lemma_bounds: r.lemma_bounds,
                            best_lemma_bound: r.best_lemma_bound,
                            theorem1_bound: r.theorem1_bound,
                            conjecture_value: r.conjecture_value,
                            degree_window: r.degree_window,
                            degree_window_ok: r.degree_window_ok,
                            actual_sum: r.actual_sum,
                        },
                    },
                )?;
            } else {
                writeln!(out, "graph              {} (n = {})", write_graph6(&g), report.n)?;
                writeln!(out, "best_lemma_bound   {}", report.best_lemma_bound)?;
                writeln!(out, "theorem1_bound     {}", report.theorem1_bound)?;
                writeln!(out, "conjecture_value   {}", report.conjecture_value)?;
                let (lo, hi) = report.degree_window;
                writeln!(
                    out,
                    "degree_window      [{lo}, {hi}] {}",
                    if report.degree_window_ok { "ok" } else { "violated" }
                )?;
                match report.actual_sum {
                    Some(sum) => writeln!(out, "actual_sum         {sum}")?,
                    None => writeln!(out, "actual_sum         (order above counting cap {})", counter.cap())?,
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify(args) => verify(args, counter, out),
        Command::EdgeMoves(args) => {
            let g = args.graph()?;
            let r = edge_move_analysis(&g, counter)?;
            if args.json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "graph {} base_sum {}", write_graph6(&g), r.base_sum)?;
                for m in &r.moves {
                    let kind = match m.kind {
                        crate::experiments::MoveKind::Remove => "remove",
                        crate::experiments::MoveKind::Add => "add",
                    };
                    writeln!(out, "{kind:<6} {}-{}  {}", m.u, m.v, m.sum)?;
                }
                writeln!(out, "moves {} any_improving {}", r.moves.len(), r.any_improving)?;
            }
            Ok(EXIT_OK)
        }
        Command::Induction(args) => {
            let g = args.graph()?;
            let r = induction_gap_experiment(&g, counter)?;
            if args.json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "graph            {} (n = {})", write_graph6(&g), r.n)?;
                writeln!(out, "base_sum         {}", r.base_sum)?;
                writeln!(out, "h_increment      {} ({} -> {})", r.h_increment, r.h_sum, r.h_next_sum)?;
                writeln!(
                    out,
                    "best_increment   {} (mask {:#b}, sum {})",
                    r.best_increment, r.best_attachment_mask, r.best_sum
                )?;
                writeln!(out, "violates         {}", r.violates)?;
            }
            Ok(EXIT_OK)
        }
        Command::Multipartite(args) => {
            let r = multipartite_scan(args.n)?;
            if args.json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "n {} partitions {}", r.n, r.partitions_checked)?;
                writeln!(out, "balanced {} sum {}", r.balanced, r.balanced_sum)?;
                for p in &r.top {
                    writeln!(out, "  {:<24} {}", p.parts.to_string(), p.sum)?;
                }
                writeln!(out, "dominance_holds {}", r.dominance_holds)?;
            }
            Ok(EXIT_OK)
        }
        Command::Gap(args) => {
            let maxima: BTreeMap<usize, Count> = args.max_sums.iter().copied().collect();
            let rows = gap_table(args.n_min, args.n_max, &maxima)?;
            if args.json {
                emit_json(out, &rows)?;
            } else {
                write_gap_rows(out, &rows)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn write_gap_rows(out: &mut dyn Write, rows: &[GapRow]) -> Result<()> {
    writeln!(
        out,
        "{:>3} {:>22} {:>22} {:>12} {:>12} {:>10} {:>10} {:>8}",
        "n", "2^(n+1)", "max_sum", "gap", "min_gap", "lower", "upper", "ratio"
    )?;
    for r in rows {
        writeln!(
            out,
            "{:>3} {:>22} {:>22} {:>12} {:>12} {:>10.3} {:>10.3} {:>8.4}",
            r.n, r.trivial_cap, r.max_sum, r.gap, r.min_gap, r.lower_scaled, r.upper_scaled, r.gap_ratio
        )?;
    }
    Ok(())
}

fn verify(args: &VerifyArgs, counter: &Counter, out: &mut dyn Write) -> Result<i32> {
    let source = match (&args.g6_file, args.labeled) {
        (Some(path), _) => SourceDescriptor::Graph6File { path: path.clone() },
        (None, true) => SourceDescriptor::LabeledExhaustive {
            skip_complements: args.pair_complements,
        },
        (None, false) => SourceDescriptor::CanonicalGeneration,
    };
    let config = CampaignConfig {
        mode: match args.mode {
            ModeArg::Verify => Mode::Verify,
            ModeArg::Discover => Mode::Discover,
        },
        workers: args.workers,
        pruning: !args.no_prune,
        chunk_size: args.chunk_size,
        checkpoint: args.checkpoint.clone(),
        counter: *counter,
        ..CampaignConfig::default()
    };
    let state = verify_order(args.n, &source, &config)?;
    let report = CampaignReport::from(&state);
    if let Some(path) = &args.report {
        std::fs::write(path, serde_json::to_string_pretty(&report)? + "\n")?;
    }
    if args.json {
        emit_json(out, &report)?;
    } else {
        writeln!(out, "n                  {}", report.n)?;
        writeln!(out, "source             {}", report.source)?;
        writeln!(out, "graphs_seen        {}", report.graphs_seen)?;
        writeln!(out, "graphs_pruned      {}", report.graphs_pruned)?;
        writeln!(out, "current_max        {}", report.current_max)?;
        writeln!(out, "conjecture_target  {}", report.conjecture_target)?;
        writeln!(out, "matched            {}", report.matched)?;
        writeln!(out, "witnesses          {}", report.witnesses.join(" "))?;
        writeln!(out, "balanced_bipartite {}", report.witnesses_balanced_bipartite)?;
        writeln!(out, "wall_time_seconds  {:.3}", report.wall_time_seconds)?;
    }
    if report.counterexample {
        writeln!(out, "COUNTEREXAMPLE: {}", report.witnesses.join(" "))?;
    }
    Ok(verify_exit_code(&report))
}

/// 4 on a counterexample; in verify mode 1 unless the target was attained.
pub fn verify_exit_code(report: &CampaignReport) -> i32 {
    if report.counterexample {
        EXIT_COUNTEREXAMPLE
    } else if report.mode == Mode::Verify && !report.matched {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_family("cycle:5").unwrap(), Graph::cycle(5).unwrap());
        assert_eq!(parse_family("star:4").unwrap().order(), 5);
        assert_eq!(parse_family("bipartite:2,3").unwrap(), Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(
            parse_family("complement(complement(cycle:6))").unwrap(),
            Graph::cycle(6).unwrap()
        );
        assert_eq!(parse_family("multipartite:1,1,1").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_family("empty:3").unwrap(), Graph::empty(3).unwrap());
        assert!(parse_family("wheel:5").is_err());
        assert!(parse_family("cycle:x").is_err());
        assert!(parse_family("cycle").is_err());
        assert!(parse_family("bipartite:3").is_err());
    }

    #[test]
    fn verify_exit_codes() {
        let config = CampaignConfig::default();
        let state = verify_order(4, &SourceDescriptor::CanonicalGeneration, &config).unwrap();
        let mut report = CampaignReport::from(&state);
        assert_eq!(verify_exit_code(&report), EXIT_OK);
        report.current_max += 1;
        report.counterexample = true;
        report.matched = false;
        assert_eq!(verify_exit_code(&report), EXIT_COUNTEREXAMPLE);
        report.counterexample = false;
        assert_eq!(verify_exit_code(&report), EXIT_FAILURE);
        report.mode = Mode::Discover;
        assert_eq!(verify_exit_code(&report), EXIT_OK);
    }

    #[test]
    fn edge_lists() {
        assert_eq!(parse_edge_list(3, "0-1, 1-2").unwrap(), Graph::path(3).unwrap());
        assert_eq!(parse_edge_list(2, "").unwrap(), Graph::empty(2).unwrap());
        assert!(parse_edge_list(3, "0-1,1").is_err());
        assert!(parse_edge_list(3, "0-3").is_err());
    }
}
