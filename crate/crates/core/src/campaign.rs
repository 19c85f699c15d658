//! Exhaustive verification of the maximum domination sum for one order.
//!
//! A producer pulls fixed-size chunks from a [`GraphStream`]; a batch of
//! chunks is counted on a worker pool and the per-chunk results are
//! max-merged in chunk order. Each chunk prunes against the running maximum
//! as it stood at the start of its batch, so the outcome, including the
//! pruning tally, depends only on the stream contents and the chunk
//! geometry and never on the number of workers.
//!
//! A graph is pruned only when its best per-degree bound is strictly below the
//! running maximum; ties are always counted so every witness is collected.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{best_lemma_bound, conjecture_value, degree_window_check};
use crate::canon::canonicalize;
use crate::count::{Count, Counter};
use crate::enumerate::{SourceDescriptor, StreamCursor};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};

pub const CHECKPOINT_FORMAT: &str = "domsum-checkpoint";
pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Seed the running maximum with the conjectured value.
    Verify,
    /// Seed the running maximum with zero.
    Discover,
}

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    pub mode: Mode,
    pub workers: usize,
    pub pruning: bool,
    pub chunk_size: usize,
    pub chunks_per_batch: usize,
    pub witness_cap: usize,
    pub checkpoint: Option<PathBuf>,
    pub checkpoint_every_graphs: u64,
    pub checkpoint_every: Duration,
    /// Stop after this many batches (the checkpoint is still written).
    pub max_batches: Option<usize>,
    pub counter: Counter,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            mode: Mode::Verify,
            workers: 1,
            pruning: true,
            chunk_size: 1024,
            chunks_per_batch: 16,
            witness_cap: 1000,
            checkpoint: None,
            checkpoint_every_graphs: 1 << 16,
            checkpoint_every: Duration::from_secs(30),
            max_batches: None,
            counter: Counter::default(),
        }
    }
}

/// Chunk geometry recorded in checkpoints; resuming with a different one
/// would change the pruning tally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkGeometry {
    pub chunk_size: usize,
    pub chunks_per_batch: usize,
    pub pruning: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchState {
    pub n: usize,
    pub mode: Mode,
    pub source: SourceDescriptor,
    pub geometry: ChunkGeometry,
    pub cursor: StreamCursor,
    pub graphs_seen: u64,
    pub graphs_pruned: u64,
    pub graphs_counted: u64,
    pub current_max: Count,
    /// graph6 strings of canonically labelled graphs attaining `current_max`.
    pub witnesses: BTreeSet<String>,
    pub witnesses_overflow: bool,
    pub conjecture_target: Count,
    pub complete: bool,
    pub started_unix: u64,
    pub updated_unix: u64,
    /// Wall time accumulated over every run that advanced this state.
    pub elapsed_seconds: f64,
}

impl SearchState {
    pub fn counterexample(&self) -> bool {
        self.current_max > self.conjecture_target
    }

    /// Finished, no graph beats the target, and the target is attained.
    pub fn matched(&self) -> bool {
        self.complete && self.current_max == self.conjecture_target && !self.witnesses.is_empty()
    }

    /// The witness set is exactly `K_{floor(n/2),ceil(n/2)}` and its complement.
    pub fn witnesses_are_balanced_bipartite(&self) -> bool {
        !self.witnesses_overflow && self.witnesses == balanced_witness_set(self.n)
    }

    pub fn witnesses_in_degree_window(&self) -> bool {
        self.witnesses
            .iter()
            .all(|w| parse_graph6(w).map(|g| degree_window_check(&g)).unwrap_or(false))
    }

    pub fn witness_graphs(&self) -> Vec<Graph> {
        self.witnesses
            .iter()
            .map(|w| parse_graph6(w).expect("witnesses are written by write_graph6"))
            .collect()
    }
}

/// graph6 of the canonical labelling of `g`.
pub fn witness_key(g: &Graph) -> String {
    write_graph6(&canonicalize(g).graph)
}

/// Canonical graph6 strings of the conjectured extremal graphs of order `n`.
pub fn balanced_witness_set(n: usize) -> BTreeSet<String> {
    let h = if n == 1 {
        Graph::empty(1).expect("order 1")
    } else {
        Graph::complete_bipartite(n / 2, n.div_ceil(2)).expect("n <= 64")
    };
    [witness_key(&h), witness_key(&h.complement())].into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub n: usize,
    pub mode: Mode,
    pub source: String,
    pub complete: bool,
    pub graphs_seen: u64,
    pub graphs_pruned: u64,
    pub graphs_counted: u64,
    pub current_max: Count,
    pub conjecture_target: Count,
    pub matched: bool,
    pub counterexample: bool,
    pub witnesses: Vec<String>,
    pub witnesses_overflow: bool,
    pub witnesses_balanced_bipartite: bool,
    pub witnesses_in_degree_window: bool,
    pub wall_time_seconds: f64,
}

impl From<&SearchState> for CampaignReport {
    fn from(s: &SearchState) -> Self {
        let source = match &s.source {
            SourceDescriptor::LabeledExhaustive { skip_complements: false } => "labeled-exhaustive",
            SourceDescriptor::LabeledExhaustive { skip_complements: true } => "labeled-exhaustive-paired",
            SourceDescriptor::CanonicalGeneration => "canonical-generation",
            SourceDescriptor::Graph6File { .. } => "graph6-file",
        };
        CampaignReport {
            n: s.n,
            mode: s.mode,
            source: source.to_string(),
            complete: s.complete,
            graphs_seen: s.graphs_seen,
            graphs_pruned: s.graphs_pruned,
            graphs_counted: s.graphs_counted,
            current_max: s.current_max,
            conjecture_target: s.conjecture_target,
            matched: s.matched(),
            counterexample: s.counterexample(),
            witnesses: s.witnesses.iter().cloned().collect(),
            witnesses_overflow: s.witnesses_overflow,
            witnesses_balanced_bipartite: s.witnesses_are_balanced_bipartite(),
            witnesses_in_degree_window: s.witnesses_in_degree_window(),
            wall_time_seconds: s.elapsed_seconds,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CheckpointFile {
    format: String,
    version: u32,
    state: SearchState,
}

pub fn write_checkpoint(path: &Path, state: &SearchState) -> Result<()> {
    let file = CheckpointFile {
        format: CHECKPOINT_FORMAT.to_string(),
        version: CHECKPOINT_VERSION,
        state: state.clone(),
    };
    let json = serde_json::to_vec_pretty(&file)?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let io = |source| Error::Checkpoint {
        path: path.to_path_buf(),
        source,
    };
    fs::write(&tmp, json).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)?;
    Ok(())
}

pub fn read_checkpoint(path: &Path) -> Result<SearchState> {
    let bytes = fs::read(path).map_err(|source| Error::Checkpoint {
        path: path.to_path_buf(),
        source,
    })?;
    let mismatch = |reason: String| Error::CheckpointMismatch {
        path: path.to_path_buf(),
        reason,
    };
    let file: CheckpointFile =
        serde_json::from_slice(&bytes).map_err(|e| mismatch(format!("unreadable checkpoint: {e}")))?;
    if file.format != CHECKPOINT_FORMAT || file.version != CHECKPOINT_VERSION {
        return Err(mismatch(format!(
            "format {} v{} is not {CHECKPOINT_FORMAT} v{CHECKPOINT_VERSION}",
            file.format, file.version
        )));
    }
    Ok(file.state)
}

fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Best value and witnesses from one chunk or from the whole campaign.
#[derive(Debug, Default)]
struct Tally {
    max: Count,
    witnesses: BTreeSet<String>,
    overflow: bool,
    pruned: u64,
    counted: u64,
}

impl Tally {
    fn offer(&mut self, sum: Count, g: &Graph, cap: usize) {
        if sum > self.max {
            self.max = sum;
            self.witnesses.clear();
            self.overflow = false;
        }
        if sum == self.max {
            self.witnesses.insert(witness_key(g));
            self.trim(cap);
        }
    }

    fn trim(&mut self, cap: usize) {
        while self.witnesses.len() > cap {
            self.witnesses.pop_last();
            self.overflow = true;
        }
    }

    /// Commutative max-merge.
    fn merge(&mut self, other: Tally, cap: usize) {
        self.pruned += other.pruned;
        self.counted += other.counted;
        if other.max > self.max {
            self.max = other.max;
            self.witnesses = other.witnesses;
            self.overflow = other.overflow;
        } else if other.max == self.max {
            self.witnesses.extend(other.witnesses);
            self.overflow |= other.overflow;
            self.trim(cap);
        }
    }
}

fn process_chunk(graphs: &[Graph], threshold: Count, config: &CampaignConfig) -> Result<Tally> {
    let mut tally = Tally {
        max: threshold,
        ..Tally::default()
    };
    for g in graphs {
        if config.pruning && best_lemma_bound(g) < tally.max {
            tally.pruned += 1;
            continue;
        }
        let sum = config.counter.summarize(g)?.sum;
        tally.counted += 1;
        tally.offer(sum, g, config.witness_cap);
    }
    Ok(tally)
}

/// Runs (or resumes) a campaign over every graph of order `n` in `source`.
///
/// With a checkpoint path, an existing checkpoint is resumed if it was
/// written for the same order, source, mode and chunk geometry; otherwise
/// [`Error::CheckpointMismatch`] is returned.
pub fn verify_order(n: usize, source: &SourceDescriptor, config: &CampaignConfig) -> Result<SearchState> {
    if config.workers == 0 || config.chunk_size == 0 || config.chunks_per_batch == 0 {
        return Err(Error::Input("workers, chunk size and chunks per batch must be >= 1".into()));
    }
    config.counter.check(n)?;
    let geometry = ChunkGeometry {
        chunk_size: config.chunk_size,
        chunks_per_batch: config.chunks_per_batch,
        pruning: config.pruning,
    };
    let target = conjecture_value(n);

    let resumed = match &config.checkpoint {
        Some(path) if path.exists() => {
            let state = read_checkpoint(path)?;
            let mut problems = Vec::new();
            if state.n != n {
                problems.push(format!("order {} != {n}", state.n));
            }
            if &state.source != source {
                problems.push(format!("source {:?} != {:?}", state.source, source));
            }
            if state.mode != config.mode {
                problems.push(format!("mode {:?} != {:?}", state.mode, config.mode));
            }
            if state.geometry != geometry {
                problems.push(format!("chunk geometry {:?} != {:?}", state.geometry, geometry));
            }
            if !problems.is_empty() {
                return Err(Error::CheckpointMismatch {
                    path: path.clone(),
                    reason: problems.join("; "),
                });
            }
            Some(state)
        }
        _ => None,
    };

    let mut state = match resumed {
        Some(state) if state.complete => return Ok(state),
        Some(state) => state,
        None => {
            let now = unix_now();
            let cursor = source.open(n)?.cursor();
            SearchState {
                n,
                mode: config.mode,
                source: source.clone(),
                geometry,
                cursor,
                graphs_seen: 0,
                graphs_pruned: 0,
                graphs_counted: 0,
                current_max: match config.mode {
                    Mode::Verify => target,
                    Mode::Discover => 0,
                },
                witnesses: BTreeSet::new(),
                witnesses_overflow: false,
                conjecture_target: target,
                complete: false,
                started_unix: now,
                updated_unix: now,
                elapsed_seconds: 0.0,
            }
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))?;
    pool.install(|| run_batches(&mut state, config))?;
    Ok(state)
}

fn run_batches(state: &mut SearchState, config: &CampaignConfig) -> Result<()> {
    let run_started = Instant::now();
    let elapsed_before = state.elapsed_seconds;
    let mut stream = state.source.resume(&state.cursor)?;
    let batch_len = config.chunk_size * config.chunks_per_batch;
    let mut last_checkpoint = Instant::now();
    let mut since_checkpoint = 0u64;
    let mut batches = 0usize;

    loop {
        let mut graphs = Vec::with_capacity(batch_len);
        while graphs.len() < batch_len {
            match stream.next() {
                None => break,
                Some(Ok(g)) => graphs.push(g),
                Some(Err(e)) => {
                    return Err(Error::Stream {
                        position: stream.cursor().position,
                        source: Box::new(e),
                    })
                }
            }
        }
        let exhausted = graphs.len() < batch_len;

        let threshold = state.current_max;
        let outcomes: Vec<Result<Tally>> = graphs
            .par_chunks(config.chunk_size)
            .map(|chunk| process_chunk(chunk, threshold, config))
            .collect();
        let mut tally = Tally {
            max: state.current_max,
            witnesses: std::mem::take(&mut state.witnesses),
            overflow: state.witnesses_overflow,
            ..Tally::default()
        };
        for outcome in outcomes {
            tally.merge(outcome?, config.witness_cap);
        }

        state.graphs_seen += graphs.len() as u64;
        state.graphs_pruned += tally.pruned;
        state.graphs_counted += tally.counted;
        state.current_max = tally.max;
        state.witnesses = tally.witnesses;
        state.witnesses_overflow = tally.overflow;
        state.cursor = stream.cursor();
        state.complete = exhausted;
        state.updated_unix = unix_now();
        state.elapsed_seconds = elapsed_before + run_started.elapsed().as_secs_f64();
        since_checkpoint += graphs.len() as u64;
        batches += 1;

        let stop = exhausted || config.max_batches.is_some_and(|m| batches >= m);
        if let Some(path) = &config.checkpoint {
            let due = since_checkpoint >= config.checkpoint_every_graphs
                || last_checkpoint.elapsed() >= config.checkpoint_every;
            if due || stop {
                write_checkpoint(path, state)?;
                last_checkpoint = Instant::now();
                since_checkpoint = 0;
            }
        }
        if stop {
            return Ok(());
        }
    }
}
