//! Streams of graphs of one order: every labelled graph, one graph per
//! isomorphism class, or the contents of a graph6 file.
//!
//! Class representatives come from canonical augmentation. A child of a
//! parent `P` on `m` vertices is `P` plus a vertex `m` attached to some mask.
//! The child is kept iff deleting the vertex that receives the last
//! canonical label gives a graph isomorphic to `P`; this makes the parent
//! class an isomorphism invariant of the child, so distinct parents never
//! produce isomorphic children. Duplicates from one parent are dropped by
//! canonical form.
//!
//! Every stream reports a [`StreamCursor`] and can be rebuilt from one to
//! continue with exactly the suffix the original would have produced.

use std::collections::{HashSet, VecDeque};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

pub const LABELED_MAX_ORDER: usize = 7;
pub const GENERATION_MAX_ORDER: usize = 10;

/// Parents handed to the thread pool at once by the canonical generator.
const PARENT_BLOCK: usize = 256;

/// Number of isomorphism classes of graphs on `n` vertices, `n = 1..=10`.
pub const CLASS_COUNTS: [u64; 10] = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SourceDescriptor {
    LabeledExhaustive { skip_complements: bool },
    CanonicalGeneration,
    Graph6File { path: PathBuf },
}

impl SourceDescriptor {
    pub fn tag(&self) -> SourceTag {
        match self {
            SourceDescriptor::LabeledExhaustive { .. } => SourceTag::Labeled,
            SourceDescriptor::CanonicalGeneration => SourceTag::Canonical,
            SourceDescriptor::Graph6File { .. } => SourceTag::Graph6,
        }
    }

    /// Opens a fresh stream of order-`n` graphs from this source.
    pub fn open(&self, n: usize) -> Result<GraphStream> {
        match self {
            SourceDescriptor::LabeledExhaustive { skip_complements } => labeled_stream(n, *skip_complements),
            SourceDescriptor::CanonicalGeneration => generate_nonisomorphic(n),
            SourceDescriptor::Graph6File { path } => ingest_graph6(path, Some(n)),
        }
    }

    /// Reopens a stream positioned at `cursor`.
    pub fn resume(&self, cursor: &StreamCursor) -> Result<GraphStream> {
        if cursor.source != self.tag() {
            return Err(Error::Input(format!(
                "cursor for {:?} cannot resume a {:?} source",
                cursor.source,
                self.tag()
            )));
        }
        let n = cursor
            .n
            .ok_or_else(|| Error::Input("cursor has no graph order".into()))?;
        let mut stream = self.open(n)?;
        stream.seek(cursor.position)?;
        Ok(stream)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SourceTag {
    Labeled,
    Canonical,
    Graph6,
}

/// Resumable position: source tag, order, and a source-specific integer.
///
/// Labelled streams store the next edge mask, graph6 files the number of
/// lines consumed, and canonical generation `parent << 32 | child_offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StreamCursor {
    pub source: SourceTag,
    pub n: Option<usize>,
    pub position: u64,
}

pub struct GraphStream {
    n: Option<usize>,
    emitted: u64,
    inner: Inner,
}

enum Inner {
    Labeled(LabeledGraphs),
    Canonical(CanonicalGraphs),
    Graph6(Graph6Lines),
}

impl GraphStream {
    pub fn order(&self) -> Option<usize> {
        self.n
    }

    /// Graphs yielded since this stream value was opened.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    pub fn cursor(&self) -> StreamCursor {
        let (source, position) = match &self.inner {
            Inner::Labeled(s) => (SourceTag::Labeled, s.next_mask),
            Inner::Canonical(s) => (SourceTag::Canonical, s.position()),
            Inner::Graph6(s) => (SourceTag::Graph6, s.line),
        };
        StreamCursor {
            source,
            n: self.n,
            position,
        }
    }

    fn seek(&mut self, position: u64) -> Result<()> {
        match &mut self.inner {
            Inner::Labeled(s) => {
                if position > s.end {
                    return Err(Error::Input(format!("labelled cursor {position} past end {}", s.end)));
                }
                s.next_mask = position;
            }
            Inner::Canonical(s) => s.seek(position)?,
            Inner::Graph6(s) => s.skip_lines(position)?,
        }
        Ok(())
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        let item = match &mut self.inner {
            Inner::Labeled(s) => s.next().map(Ok),
            Inner::Canonical(s) => s.next().map(Ok),
            Inner::Graph6(s) => s.next(),
        };
        if matches!(item, Some(Ok(_))) {
            self.emitted += 1;
        }
        item
    }
}

/// Every labelled graph on `n <= 7` vertices in increasing edge-mask order.
///
/// Bit `e` of the edge mask is the `e`-th pair in graph6 order. With
/// `skip_complements`, only the member of each `{G, Ḡ}` pair with the smaller
/// mask is produced; pairs are matched by mask, not by isomorphism.
pub fn labeled_stream(n: usize, skip_complements: bool) -> Result<GraphStream> {
    if n == 0 || n > LABELED_MAX_ORDER {
        return Err(Error::Input(format!(
            "labelled enumeration supports 1..={LABELED_MAX_ORDER} vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let end = 1u64 << pairs.len();
    Ok(GraphStream {
        n: Some(n),
        emitted: 0,
        inner: Inner::Labeled(LabeledGraphs {
            n,
            pairs,
            next_mask: 0,
            end,
            skip_complements,
        }),
    })
}

struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
    skip_complements: bool,
}

impl LabeledGraphs {
    fn graph(&self, mask: u64) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (e, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let all = self.end - 1;
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if self.skip_complements && mask > mask ^ all {
                continue;
            }
            return Some(self.graph(mask));
        }
        None
    }
}

/// One canonically labelled representative per isomorphism class, `n <= 10`.
pub fn generate_nonisomorphic(n: usize) -> Result<GraphStream> {
    if n == 0 || n > GENERATION_MAX_ORDER {
        return Err(Error::Input(format!(
            "generation supports 1..={GENERATION_MAX_ORDER} vertices, got {n}"
        )));
    }
    let parents = if n == 1 {
        Vec::new()
    } else {
        with_forms(nonisomorphic_graphs(n - 1)?)
    };
    Ok(GraphStream {
        n: Some(n),
        emitted: 0,
        inner: Inner::Canonical(CanonicalGraphs {
            n,
            parents,
            next_parent: 0,
            buffer: VecDeque::new(),
            skip: 0,
        }),
    })
}

/// All class representatives on `n` vertices, in generation order.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > GENERATION_MAX_ORDER {
        return Err(Error::Input(format!(
            "generation supports 1..={GENERATION_MAX_ORDER} vertices, got {n}"
        )));
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 2..=n {
        let parents = with_forms(level);
        level = parents
            .par_iter()
            .map(|(p, form)| augment(p, form))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
    }
    Ok(level)
}

fn with_forms(graphs: Vec<Graph>) -> Vec<(Graph, CanonicalForm)> {
    graphs
        .into_par_iter()
        .map(|g| {
            let form = canonical_form(&g);
            (g, form)
        })
        .collect()
}

/// Canonical children of `parent` in increasing attachment-mask order.
fn augment(parent: &Graph, parent_form: &CanonicalForm) -> Vec<Graph> {
    let m = parent.order();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << m {
        let child = parent.with_vertex(mask).expect("order stays within 64");
        let c = canonicalize(&child);
        let last = c
            .labeling
            .iter()
            .position(|&l| l == m)
            .expect("labeling is a permutation");
        if last != m {
            if child.degree(last) != mask.count_ones() as usize {
                continue;
            }
            if canonical_form(&child.without_vertex(last)) != *parent_form {
                continue;
            }
        }
        if seen.insert(c.form) {
            out.push(c.graph);
        }
    }
    out
}

struct CanonicalGraphs {
    n: usize,
    parents: Vec<(Graph, CanonicalForm)>,
    /// First parent whose children are not yet buffered.
    next_parent: usize,
    /// `(parent index, offset within that parent's children, graph)`.
    buffer: VecDeque<(usize, usize, Graph)>,
    /// Children still to drop from the front of the next generated block.
    skip: usize,
}

impl CanonicalGraphs {
    fn parent_count(&self) -> usize {
        if self.n == 1 {
            1
        } else {
            self.parents.len()
        }
    }

    fn position(&self) -> u64 {
        match self.buffer.front() {
            Some(&(p, o, _)) => (p as u64) << 32 | o as u64,
            None => (self.next_parent as u64) << 32 | self.skip as u64,
        }
    }

    fn seek(&mut self, position: u64) -> Result<()> {
        let parent = (position >> 32) as usize;
        let offset = (position & 0xffff_ffff) as usize;
        if parent > self.parent_count() {
            return Err(Error::Input(format!("canonical cursor parent {parent} out of range")));
        }
        self.buffer.clear();
        self.next_parent = parent;
        self.skip = offset;
        Ok(())
    }

    fn fill(&mut self) {
        let end = (self.next_parent + PARENT_BLOCK).min(self.parent_count());
        if self.next_parent >= end {
            return;
        }
        let start = self.next_parent;
        let blocks: Vec<Vec<Graph>> = if self.n == 1 {
            vec![vec![Graph::empty(1).expect("order 1")]]
        } else {
            self.parents[start..end]
                .par_iter()
                .map(|(p, form)| augment(p, form))
                .collect()
        };
        for (i, children) in blocks.into_iter().enumerate() {
            for (o, g) in children.into_iter().enumerate() {
                self.buffer.push_back((start + i, o, g));
            }
        }
        let skip = std::mem::take(&mut self.skip);
        let available = self.buffer.iter().filter(|&&(p, _, _)| p == start).count();
        for _ in 0..skip.min(available) {
            self.buffer.pop_front();
        }
        self.next_parent = end;
    }
}

impl Iterator for CanonicalGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.buffer.is_empty() && self.next_parent < self.parent_count() {
            self.fill();
        }
        self.buffer.pop_front().map(|(_, _, g)| g)
    }
}

/// Graphs from a file of graph6 lines; blank lines and a `>>graph6<<`
/// header are ignored. The cursor counts lines consumed.
pub fn ingest_graph6(path: impl AsRef<Path>, expected_n: Option<usize>) -> Result<GraphStream> {
    let file = File::open(path.as_ref())?;
    Ok(GraphStream {
        n: expected_n,
        emitted: 0,
        inner: Inner::Graph6(Graph6Lines {
            reader: BufReader::new(file),
            line: 0,
            expected_n,
            buf: String::new(),
        }),
    })
}

struct Graph6Lines {
    reader: BufReader<File>,
    line: u64,
    expected_n: Option<usize>,
    buf: String,
}

impl Graph6Lines {
    fn read_line(&mut self) -> Result<bool> {
        self.buf.clear();
        let read = self.reader.read_line(&mut self.buf)?;
        if read > 0 {
            self.line += 1;
        }
        Ok(read > 0)
    }

    fn skip_lines(&mut self, count: u64) -> Result<()> {
        while self.line < count {
            if !self.read_line()? {
                return Err(Error::Input(format!(
                    "graph6 cursor at line {count} but file has only {} lines",
                    self.line
                )));
            }
        }
        Ok(())
    }
}

impl Iterator for Graph6Lines {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            match self.read_line() {
                Err(e) => return Some(Err(e)),
                Ok(false) => return None,
                Ok(true) => {}
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            let g = match parse_graph6(text) {
                Ok(g) => g,
                Err(source) => return Some(Err(Error::Line { line, source })),
            };
            if let Some(expected) = self.expected_n {
                if g.order() != expected {
                    return Some(Err(Error::OrderMismatch {
                        line,
                        expected,
                        found: g.order(),
                    }));
                }
            }
            return Some(Ok(g));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(stream: GraphStream) -> Vec<Graph> {
        stream.map(|g| g.unwrap()).collect()
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(collect(labeled_stream(1, false).unwrap()).len(), 1);
        assert_eq!(collect(labeled_stream(1, true).unwrap()).len(), 1);
        assert_eq!(collect(labeled_stream(3, false).unwrap()).len(), 8);
        assert_eq!(collect(labeled_stream(3, true).unwrap()).len(), 4);
        assert_eq!(collect(labeled_stream(4, false).unwrap()).len(), 64);
        assert!(labeled_stream(8, false).is_err());
        assert!(labeled_stream(0, false).is_err());
    }

    #[test]
    fn labeled_pairing_is_by_mask() {
        // each complement pair contributes exactly one member
        let kept = collect(labeled_stream(4, true).unwrap());
        assert_eq!(kept.len(), 32);
        for g in &kept {
            assert!(!kept.contains(&g.complement()));
        }
    }

    #[test]
    fn small_class_counts() {
        for n in 1..=6 {
            let graphs = collect(generate_nonisomorphic(n).unwrap());
            assert_eq!(graphs.len() as u64, CLASS_COUNTS[n - 1], "n = {n}");
            let forms: HashSet<_> = graphs.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), graphs.len());
        }
        assert!(generate_nonisomorphic(11).is_err());
    }

    #[test]
    fn canonical_resume_matches_suffix() {
        let full = collect(generate_nonisomorphic(6).unwrap());
        let mut stream = generate_nonisomorphic(6).unwrap();
        let mut prefix = Vec::new();
        for _ in 0..37 {
            prefix.push(stream.next().unwrap().unwrap());
        }
        let cursor = stream.cursor();
        let resumed = collect(SourceDescriptor::CanonicalGeneration.resume(&cursor).unwrap());
        prefix.extend(resumed);
        assert_eq!(prefix, full);
    }

    #[test]
    fn graph6_file_errors_name_the_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.g6");
        std::fs::write(&path, "D?{\nD?\nD?{\n").unwrap();
        let items: Vec<_> = ingest_graph6(&path, None).unwrap().collect();
        assert!(items[0].is_ok());
        assert!(matches!(items[1], Err(Error::Line { line: 2, .. })));

        std::fs::write(&path, "").unwrap();
        assert_eq!(ingest_graph6(&path, None).unwrap().count(), 0);

        std::fs::write(&path, ">>graph6<<D?{\nC~\n").unwrap();
        let items: Vec<_> = ingest_graph6(&path, Some(5)).unwrap().collect();
        assert!(items[0].is_ok());
        assert!(matches!(
            items[1],
            Err(Error::OrderMismatch { line: 2, expected: 5, found: 4 })
        ));
    }
}
