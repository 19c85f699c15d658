//! Small experiments on why the conjectured maximum resists simple proofs:
//! single edge moves, one-vertex induction steps, and the comparison among
//! complete multipartite graphs.

use serde::{Deserialize, Serialize};

use crate::bounds::conjecture_value;
use crate::count::{multipartite_sum, Count, Counter};
use crate::error::{Error, Result};
use crate::graph::{partitions, Graph, PartitionSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// The pair was an edge of `G` and moves to the complement.
    Remove,
    /// The pair was an edge of the complement and moves into `G`.
    Add,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMove {
    pub u: usize,
    pub v: usize,
    pub kind: MoveKind,
    pub sum: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMoveReport {
    pub base: Graph,
    pub base_sum: Count,
    /// One entry per vertex pair, in `(u, v)` order with `u < v`.
    pub moves: Vec<EdgeMove>,
    pub any_improving: bool,
}

/// Toggles every vertex pair of `g` in turn and recounts.
///
/// The sum is invariant under complementation, so moving an edge of `Ḡ`
/// into `G` is the same as adding a non-edge; `n(n-1)/2` moves in total.
pub fn edge_move_analysis(g: &Graph, counter: &Counter) -> Result<EdgeMoveReport> {
    let n = g.order();
    let base_sum = counter.summarize(g)?.sum;
    let mut moves = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut work = g.clone();
    for u in 0..n {
        for v in u + 1..n {
            let kind = if g.has_edge(u, v) {
                MoveKind::Remove
            } else {
                MoveKind::Add
            };
            work.toggle_edge(u, v);
            let sum = counter.summarize(&work)?.sum;
            work.toggle_edge(u, v);
            moves.push(EdgeMove { u, v, kind, sum });
        }
    }
    let any_improving = moves.iter().any(|m| m.sum > base_sum);
    Ok(EdgeMoveReport {
        base: g.clone(),
        base_sum,
        moves,
        any_improving,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    pub base: Graph,
    pub n: usize,
    pub base_sum: Count,
    /// Sum for the balanced complete bipartite graph on `n` vertices.
    pub h_sum: Count,
    /// Same on `n + 1` vertices.
    pub h_next_sum: Count,
    pub h_increment: Count,
    /// First attachment mask (lowest value) reaching `best_increment`.
    pub best_attachment_mask: u64,
    pub best_sum: Count,
    pub best_increment: Count,
    pub attachments_scanned: u64,
    /// `best_increment >= h_increment`.
    pub violates: bool,
}

/// Adds one vertex to `g` in all `2^n` ways and compares the largest gain in
/// the domination sum with the step from `H_n` to `H_{n+1}`.
pub fn induction_gap_experiment(g: &Graph, counter: &Counter) -> Result<InductionReport> {
    let n = g.order();
    counter.check(n + 1)?;
    let base_sum = counter.summarize(g)?.sum;
    let h_sum = conjecture_value(n);
    let h_next_sum = conjecture_value(n + 1);
    let h_increment = h_next_sum - h_sum;

    let mut best: Option<(u64, Count)> = None;
    let attachments = 1u64 << n;
    for mask in 0..attachments {
        let sum = counter.summarize(&g.with_vertex(mask)?)?.sum;
        if best.is_none_or(|(_, s)| sum > s) {
            best = Some((mask, sum));
        }
    }
    let (best_attachment_mask, best_sum) = best.expect("at least one attachment");
    // adding a vertex never lowers the sum below 2^(n+1) >= base_sum
    let best_increment = best_sum
        .checked_sub(base_sum)
        .ok_or_else(|| Error::Inconsistent(format!("sum fell from {base_sum} to {best_sum}")))?;
    Ok(InductionReport {
        base: g.clone(),
        n,
        base_sum,
        h_sum,
        h_next_sum,
        h_increment,
        best_attachment_mask,
        best_sum,
        best_increment,
        attachments_scanned: attachments,
        violates: best_increment >= h_increment,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionSum {
    pub parts: PartitionSpec,
    pub sum: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteScan {
    pub n: usize,
    pub partitions_checked: u64,
    pub balanced: PartitionSpec,
    pub balanced_sum: Count,
    pub conjecture_value: Count,
    /// Every other partition with at least two parts sums strictly lower.
    pub dominance_holds: bool,
    pub violations: Vec<PartitionSum>,
    /// Five largest sums, ties broken by partition order.
    pub top: Vec<PartitionSum>,
}

/// Closed-form sums for every complete multipartite graph on `n` vertices
/// with at least two parts.
pub fn multipartite_scan(n: usize) -> Result<MultipartiteScan> {
    if !(2..=64).contains(&n) {
        return Err(Error::Input(format!("multipartite scan needs 2 <= n <= 64, got {n}")));
    }
    let balanced = PartitionSpec::balanced_bipartition(n)?;
    let target = conjecture_value(n);
    let balanced_sum = multipartite_sum(&balanced).sum;
    if balanced_sum != target {
        return Err(Error::Inconsistent(format!(
            "balanced bipartition sums to {balanced_sum}, conjectured value is {target}"
        )));
    }

    let mut all: Vec<PartitionSum> = partitions(n, 2)
        .into_iter()
        .map(|parts| {
            let sum = multipartite_sum(&parts).sum;
            PartitionSum { parts, sum }
        })
        .collect();
    let violations: Vec<PartitionSum> = all
        .iter()
        .filter(|p| p.parts != balanced && p.sum >= target)
        .cloned()
        .collect();
    let partitions_checked = all.len() as u64;
    all.sort_by(|a, b| b.sum.cmp(&a.sum).then_with(|| a.parts.cmp(&b.parts)));
    all.truncate(5);
    Ok(MultipartiteScan {
        n,
        partitions_checked,
        balanced,
        balanced_sum,
        conjecture_value: target,
        dominance_holds: violations.is_empty(),
        violations,
        top: all,
    })
}
