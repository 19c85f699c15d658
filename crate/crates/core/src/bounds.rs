//! Upper bounds on ∂(G) + ∂(Ḡ) and the conjectured maximum.
//!
//! All bounds are exact integers. The only floating-point values are the
//! asymptotic gap constants in [`GapRow`], which are for display.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::count::{Count, Counter};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[inline]
fn pow2(e: usize) -> Count {
    1u128 << e
}

/// `2^(n+1) - 2^k - 2^(n-k-1)`: the bound implied by one vertex of degree `k`.
pub fn lemma_k_bound(n: usize, k: usize) -> Result<Count> {
    if n == 0 || k >= n {
        return Err(Error::DegreeOutOfRange { n, k });
    }
    Ok(pow2(n + 1) - pow2(k) - pow2(n - k - 1))
}

/// `2^(n+1) - 2^floor(n/2) - 2^(ceil(n/2)-1)`.
pub fn theorem1_bound(n: usize) -> Count {
    assert!(n >= 1, "order must be positive");
    pow2(n + 1) - pow2(n / 2) - pow2(n.div_ceil(2) - 1)
}

/// `2(2^floor(n/2) - 1)(2^ceil(n/2) - 1) + 2`, the domination sum of the
/// balanced complete bipartite graph.
pub fn conjecture_value(n: usize) -> Count {
    assert!(n >= 1, "order must be positive");
    2 * (pow2(n / 2) - 1) * (pow2(n.div_ceil(2)) - 1) + 2
}

/// Smallest per-degree bound over all vertices of `G` and `Ḡ`.
///
/// A vertex of degree `k` in `G` has degree `n-1-k` in `Ḡ`, and the bound is
/// symmetric under that swap, so scanning `G` alone covers both graphs.
pub fn best_lemma_bound(g: &Graph) -> Count {
    let n = g.order();
    g.adjacency()
        .iter()
        .map(|row| lemma_k_bound(n, row.count_ones() as usize).expect("degree < n"))
        .min()
        .expect("graphs have at least one vertex")
}

/// Allowed degree range `[floor(n/2) - 2, ceil(n/2) + 1]` for extremal graphs.
pub fn degree_window(n: usize) -> (i64, i64) {
    ((n / 2) as i64 - 2, n.div_ceil(2) as i64 + 1)
}

pub fn degree_window_check(g: &Graph) -> bool {
    let n = g.order();
    let (lo, hi) = degree_window(n);
    let co = g.complement();
    let mut ok = true;
    for v in 0..n {
        let d = g.degree(v);
        assert_eq!(d + co.degree(v), n - 1, "deg_G + deg_co must be n - 1");
        ok &= lo <= d as i64 && d as i64 <= hi;
    }
    // the window is symmetric about (n-1)/2, so the complement agrees
    debug_assert_eq!(
        ok,
        (0..n).all(|v| lo <= co.degree(v) as i64 && co.degree(v) as i64 <= hi)
    );
    ok
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    /// Per-degree bound for each vertex of `G`, by label.
    pub lemma_bounds: Vec<Count>,
    pub best_lemma_bound: Count,
    pub theorem1_bound: Count,
    pub conjecture_value: Count,
    pub degree_window: (i64, i64),
    pub degree_window_ok: bool,
    pub actual_sum: Option<Count>,
}

impl BoundReport {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let lemma_bounds: Vec<Count> = (0..n)
            .map(|v| lemma_k_bound(n, g.degree(v)).expect("degree < n"))
            .collect();
        BoundReport {
            n,
            best_lemma_bound: best_lemma_bound(g),
            lemma_bounds,
            theorem1_bound: theorem1_bound(n),
            conjecture_value: conjecture_value(n),
            degree_window: degree_window(n),
            degree_window_ok: degree_window_check(g),
            actual_sum: None,
        }
    }

    /// Adds the exact sum, checking it against every bound.
    pub fn with_actual(g: &Graph, counter: &Counter) -> Result<Self> {
        let mut report = BoundReport::new(g);
        let sum = counter.summarize(g)?.sum;
        if sum > report.best_lemma_bound || report.best_lemma_bound > report.theorem1_bound {
            return Err(Error::Inconsistent(format!(
                "sum {sum} <= best lemma bound {} <= theorem bound {} violated",
                report.best_lemma_bound, report.theorem1_bound
            )));
        }
        report.actual_sum = Some(sum);
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapRow {
    pub n: usize,
    pub trivial_cap: Count,
    pub max_sum: Count,
    /// `"campaign"` when `max_sum` came from a completed campaign, else `"conjecture"`.
    pub max_sum_source: String,
    pub gap: Count,
    /// Exact lower floor `2^(n+1) - theorem1_bound(n)`.
    pub min_gap: Count,
    /// 3/2 for even `n`, sqrt 2 for odd `n`.
    pub lower_const: f64,
    /// 4 for even `n`, 3 sqrt 2 for odd `n`.
    pub upper_const: f64,
    pub lower_scaled: f64,
    pub upper_scaled: f64,
    /// `gap / 2^(n/2)`.
    pub gap_ratio: f64,
}

pub fn gap_table(n_min: usize, n_max: usize, max_sums: &BTreeMap<usize, Count>) -> Result<Vec<GapRow>> {
    if n_min < 2 || n_max > 64 || n_min > n_max {
        return Err(Error::Input(format!(
            "gap table needs 2 <= n_min <= n_max <= 64, got {n_min}..{n_max}"
        )));
    }
    let mut rows = Vec::with_capacity(n_max - n_min + 1);
    for n in n_min..=n_max {
        let trivial_cap = pow2(n + 1);
        let (max_sum, source) = match max_sums.get(&n) {
            Some(&m) => (m, "campaign"),
            None => (conjecture_value(n), "conjecture"),
        };
        if max_sum > trivial_cap {
            return Err(Error::Input(format!("max sum {max_sum} exceeds 2^{} for n = {n}", n + 1)));
        }
        let (lower_const, upper_const) = if n % 2 == 0 {
            (1.5, 4.0)
        } else {
            (std::f64::consts::SQRT_2, 3.0 * std::f64::consts::SQRT_2)
        };
        let scale = 2f64.powf(n as f64 / 2.0);
        let gap = trivial_cap - max_sum;
        rows.push(GapRow {
            n,
            trivial_cap,
            max_sum,
            max_sum_source: source.to_string(),
            gap,
            min_gap: trivial_cap - theorem1_bound(n),
            lower_const,
            upper_const,
            lower_scaled: lower_const * scale,
            upper_scaled: upper_const * scale,
            gap_ratio: gap as f64 / scale,
        });
    }
    Ok(rows)
}
