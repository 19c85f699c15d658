//! Exact domination counts.
//!
//! Two independent routes compute the number of dominating sets: a direct
//! sweep over all vertex masks, and inclusion-exclusion over undominated
//! vertex sets. The fused [`Counter::summarize`] pass counts dominating sets
//! of `G` and `Ḡ` together with the joint count `upsilon`, and checks the
//! identity `sum = 2^n + upsilon` before returning.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, NeighborhoodTable, PartitionSpec};

/// Exact counts; every reachable value is below `2^65`.
pub type Count = u128;

pub const DEFAULT_COUNT_CAP: usize = 26;
/// Upper limit accepted for a cap override.
pub const MAX_COUNT_CAP: usize = 40;

/// Minimum width of the low half of the mask split in the fused pass.
const LOW_BITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DominationSummary {
    pub n: usize,
    pub count_g: Count,
    pub count_gbar: Count,
    pub sum: Count,
    pub upsilon: Count,
}

impl DominationSummary {
    /// Builds a summary from the two counts, checking every invariant.
    pub fn from_counts(n: usize, count_g: Count, count_gbar: Count) -> Result<Self> {
        let sum = count_g + count_gbar;
        let base = 1u128 << n;
        if sum < base || sum > base << 1 {
            return Err(Error::Inconsistent(format!(
                "sum {sum} outside [2^{n}, 2^{}]",
                n + 1
            )));
        }
        Ok(DominationSummary {
            n,
            count_g,
            count_gbar,
            sum,
            upsilon: sum - base,
        })
    }
}

#[inline]
pub fn is_dominating(nt: &NeighborhoodTable, set: u64) -> bool {
    nt.cover(set) == nt.full
}

/// Counting entry point carrying the order cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counter {
    cap: usize,
}

impl Default for Counter {
    fn default() -> Self {
        Counter {
            cap: DEFAULT_COUNT_CAP,
        }
    }
}

impl Counter {
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap == 0 || cap > MAX_COUNT_CAP {
            return Err(Error::Input(format!("counting cap must be in 1..={MAX_COUNT_CAP}, got {cap}")));
        }
        Ok(Counter { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap {
            Err(Error::CapExceeded { n, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Tests every mask in increasing order. This is the reference count.
    pub fn count_dominating_brute(&self, g: &Graph) -> Result<Count> {
        self.check(g.order())?;
        let nt = g.neighborhood_table();
        let mut count: Count = 0;
        for set in 0..=nt.full {
            count += is_dominating(&nt, set) as Count;
        }
        Ok(count)
    }

    /// `sum over A ⊆ V of (-1)^|A| 2^(n - |N[A]|)`, walking subsets by
    /// appending vertices above the current maximum and carrying `N[A]`.
    pub fn count_dominating_ie(&self, g: &Graph) -> Result<Count> {
        self.check(g.order())?;
        let nt = g.neighborhood_table();
        let total = inclusion_exclusion(&nt.closed, 0, 0, 1);
        Count::try_from(total).map_err(|_| Error::Inconsistent(format!("negative count {total}")))
    }

    pub fn upsilon(&self, g: &Graph) -> Result<Count> {
        Ok(self.summarize(g)?.upsilon)
    }

    /// One sweep over all masks `S`, testing `S` against `G` and `V∖S`
    /// against `Ḡ` with split lookup tables for the neighbourhood unions.
    pub fn summarize(&self, g: &Graph) -> Result<DominationSummary> {
        let n = g.order();
        self.check(n)?;
        let nt = g.neighborhood_table();
        let nt_bar = g.complement().neighborhood_table();

        let low = n.min(LOW_BITS.max(n.div_ceil(2)));
        let high = n - low;
        let low_full = full_mask(low);
        let high_full = full_mask(high);
        let low_g = cover_table(&nt.closed[..low]);
        let low_bar = cover_table(&nt_bar.closed[..low]);
        let high_g = cover_table(&nt.closed[low..]);
        let high_bar = cover_table(&nt_bar.closed[low..]);

        let full = nt.full;
        let (mut dom_g, mut dom_bar, mut both) = (0u64, 0u64, 0u64);
        for hi in 0..=high_full {
            let cg = high_g[hi as usize];
            let cb = high_bar[(hi ^ high_full) as usize];
            for lo in 0..=low_full {
                let a = (cg | low_g[lo as usize]) == full;
                let b = (cb | low_bar[(lo ^ low_full) as usize]) == full;
                dom_g += a as u64;
                dom_bar += b as u64;
                both += (a & b) as u64;
            }
        }

        let summary = DominationSummary::from_counts(n, dom_g as Count, dom_bar as Count)?;
        if summary.upsilon != both as Count {
            return Err(Error::Inconsistent(format!(
                "sum {} != 2^{n} + upsilon {both}",
                summary.sum
            )));
        }
        Ok(summary)
    }
}

/// `table[s]` = union of `closed[i]` over set bits `i` of `s`.
fn cover_table(closed: &[u64]) -> Vec<u64> {
    let mut table = vec![0u64; 1 << closed.len()];
    for s in 1..table.len() {
        table[s] = table[s & (s - 1)] | closed[s.trailing_zeros() as usize];
    }
    table
}

fn inclusion_exclusion(closed: &[u64], next: usize, union: u64, sign: i128) -> i128 {
    let n = closed.len();
    let mut total = sign << (n - union.count_ones() as usize);
    for v in next..n {
        total += inclusion_exclusion(closed, v + 1, union | closed[v], -sign);
    }
    total
}

pub fn count_dominating_brute(g: &Graph) -> Result<Count> {
    Counter::default().count_dominating_brute(g)
}

pub fn count_dominating_ie(g: &Graph) -> Result<Count> {
    Counter::default().count_dominating_ie(g)
}

pub fn upsilon(g: &Graph) -> Result<Count> {
    Counter::default().upsilon(g)
}

pub fn summarize(g: &Graph) -> Result<DominationSummary> {
    Counter::default().summarize(g)
}

/// Closed-form counts for the complete multipartite graph with the given
/// parts and its complement, the disjoint union of cliques.
///
/// A set dominates the multipartite graph iff it meets two parts or equals
/// one whole part; it dominates the union of cliques iff it meets every part.
pub fn multipartite_sum(spec: &PartitionSpec) -> DominationSummary {
    let n = spec.order();
    let parts = spec.parts();
    let nonempty_in_part = |a: usize| (1u128 << a) - 1;
    let within_one: Count = parts.iter().map(|&a| nonempty_in_part(a)).sum();
    let count_g = (1u128 << n) - 1 - within_one + parts.len() as Count;
    let count_gbar: Count = parts.iter().map(|&a| nonempty_in_part(a)).product();
    DominationSummary::from_counts(n, count_g, count_gbar)
        .expect("closed forms satisfy the summary invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_dominating_examples() {
        let c5 = Graph::cycle(5).unwrap().neighborhood_table();
        assert!(is_dominating(&c5, 0b11111));
        assert!(!is_dominating(&c5, 0));
        let p3 = Graph::path(3).unwrap().neighborhood_table();
        assert!(is_dominating(&p3, 0b101));
        assert!(!is_dominating(&p3, 0b001));
    }

    #[test]
    fn brute_examples() {
        for n in 1..=8 {
            assert_eq!(count_dominating_brute(&Graph::complete(n).unwrap()).unwrap(), (1 << n) - 1);
            assert_eq!(count_dominating_brute(&Graph::empty(n).unwrap()).unwrap(), 1);
        }
        assert_eq!(count_dominating_brute(&Graph::cycle(5).unwrap()).unwrap(), 21);
    }

    #[test]
    fn ie_examples() {
        assert_eq!(count_dominating_ie(&Graph::complete(3).unwrap()).unwrap(), 7);
        assert_eq!(count_dominating_ie(&Graph::star(4).unwrap()).unwrap(), 9);
        assert_eq!(count_dominating_ie(&Graph::empty(1).unwrap()).unwrap(), 1);
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon(&Graph::complete(2).unwrap()).unwrap(), 0);
        assert_eq!(upsilon(&Graph::cycle(4).unwrap()).unwrap(), 4);
        assert_eq!(upsilon(&Graph::cycle(5).unwrap()).unwrap(), 10);
    }

    #[test]
    fn summaries() {
        let s = summarize(&Graph::complete_bipartite(2, 2).unwrap()).unwrap();
        assert_eq!((s.count_g, s.count_gbar, s.sum, s.upsilon), (11, 9, 20, 4));
        let s = summarize(&Graph::star(4).unwrap()).unwrap();
        assert_eq!((s.count_g, s.count_gbar, s.sum, s.upsilon), (9, 7, 16, 0));
        let s = summarize(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((s.count_g, s.count_gbar, s.sum, s.upsilon), (21, 21, 42, 10));
        let s = summarize(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!((s.count_g, s.count_gbar, s.sum, s.upsilon), (1, 1, 2, 0));
    }

    #[test]
    fn fused_pass_crosses_the_table_split() {
        // orders above LOW_BITS exercise the high table
        for n in [13, 15] {
            let g = Graph::cycle(n).unwrap();
            let s = summarize(&g).unwrap();
            assert_eq!(s.count_g, count_dominating_brute(&g).unwrap());
            assert_eq!(s.count_gbar, count_dominating_brute(&g.complement()).unwrap());
        }
    }

    #[test]
    fn cap_enforced() {
        let counter = Counter::with_cap(5).unwrap();
        let g = Graph::cycle(6).unwrap();
        assert!(matches!(counter.summarize(&g), Err(Error::CapExceeded { n: 6, cap: 5 })));
        assert!(matches!(counter.count_dominating_brute(&g), Err(Error::CapExceeded { .. })));
        assert!(matches!(counter.count_dominating_ie(&g), Err(Error::CapExceeded { .. })));
        assert!(matches!(
            summarize(&Graph::empty(27).unwrap()),
            Err(Error::CapExceeded { n: 27, cap: 26 })
        ));
        assert!(Counter::with_cap(0).is_err());
        assert!(Counter::with_cap(41).is_err());
    }

    #[test]
    fn multipartite_closed_forms() {
        let k55 = multipartite_sum(&PartitionSpec::new(vec![5, 5]).unwrap());
        assert_eq!(k55.sum, 1924);
        for n in 2..=12 {
            let star = multipartite_sum(&PartitionSpec::new(vec![1, n - 1]).unwrap());
            assert_eq!(star.sum, 1 << n);
        }
        // a single part is the edgeless graph
        let s = multipartite_sum(&PartitionSpec::new(vec![4]).unwrap());
        assert_eq!((s.count_g, s.count_gbar), (1, 15));
        let big = multipartite_sum(&PartitionSpec::new(vec![32, 32]).unwrap());
        assert_eq!(big.sum, 2 * ((1u128 << 32) - 1) * ((1u128 << 32) - 1) + 2);
    }
}
