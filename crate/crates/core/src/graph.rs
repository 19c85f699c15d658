//! Simple graphs on at most 64 vertices stored as adjacency bit masks.
//!
//! Vertex `i` is bit `i` of every mask. All constructors produce graphs that
//! satisfy the symmetry, loop-free and in-range invariants, so downstream
//! code never re-validates.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// Mask with bits `0..n` set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let full = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::Input(format!("row {v} has bits at or above {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::Input(format!("adjacency not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let full = full_mask(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| full & !(1u64 << v)).collect(),
        })
    }

    /// `C_n` with edges `i ~ i+1 (mod n)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                family: "cycle",
                detail: format!("needs at least 3 vertices, got {n}"),
            });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// `K_{a,b}`; the first part occupies labels `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidSize {
                family: "complete bipartite",
                detail: format!("part sizes must be >= 1, got {a},{b}"),
            });
        }
        Graph::multipartite(&PartitionSpec::new(vec![a, b])?)
    }

    /// `K_{1,n-1}` with the centre at label 0.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize {
                family: "star",
                detail: format!("needs at least 2 vertices, got {n}"),
            });
        }
        Graph::complete_bipartite(1, n - 1)
    }

    /// Complete multipartite graph with parts on consecutive labels.
    pub fn multipartite(spec: &PartitionSpec) -> Result<Self> {
        let n = spec.order();
        let full = full_mask(n);
        let mut adj = vec![0u64; n];
        let mut start = 0;
        for &size in spec.parts() {
            let part = full_mask(size) << start;
            for row in &mut adj[start..start + size] {
                *row = full & !part;
            }
            start += size;
        }
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| row << self.n));
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n {
            let mut higher = self.adj[v] & !full_mask(v + 1);
            while higher != 0 {
                let u = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((v, u));
            }
        }
        out
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| full & !(self.adj[v] | 1 << v))
                .collect(),
        }
    }

    /// Adds a vertex with label `n` adjacent to exactly the vertices in `mask`.
    pub fn with_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.n + 1;
        check_order(n)?;
        if mask & !full_mask(self.n) != 0 {
            return Err(Error::Input(format!("attachment mask {mask:#x} exceeds order {}", self.n)));
        }
        let mut adj = self.adj.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            *row |= (mask >> u & 1) << self.n;
        }
        adj.push(mask);
        Ok(Graph { n, adj })
    }

    /// Deletes vertex `v`, shifting higher labels down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.n && self.n > 1);
        let low = full_mask(v);
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| squeeze(row))
            .collect();
        Graph { n: self.n - 1, adj }
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = self.adj[v];
            let mut out = 0u64;
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                out |= 1 << perm[u];
            }
            adj[perm[v]] = out;
        }
        Graph { n: self.n, adj }
    }

    pub fn neighborhood_table(&self) -> NeighborhoodTable {
        NeighborhoodTable::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

/// Closed neighbourhoods `N[v]` and the full vertex mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodTable {
    pub closed: Vec<u64>,
    pub full: u64,
}

impl NeighborhoodTable {
    pub fn new(g: &Graph) -> Self {
        NeighborhoodTable {
            closed: (0..g.n).map(|v| g.adj[v] | 1 << v).collect(),
            full: full_mask(g.n),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.closed.len()
    }

    /// `N[S]` for a vertex mask `S`.
    #[inline]
    pub fn cover(&self, mut set: u64) -> u64 {
        let mut acc = 0u64;
        while set != 0 {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            acc |= self.closed[v];
            if acc == self.full {
                break;
            }
        }
        acc
    }
}

/// Part sizes of a complete multipartite graph, kept in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct PartitionSpec(Vec<usize>);

impl PartitionSpec {
    /// Sorts the parts descending; rejects empty lists, zero parts, and totals above 64.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        let total: usize = parts.iter().sum();
        if total > MAX_ORDER {
            return Err(Error::InvalidPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionSpec(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part_count(&self) -> usize {
        self.0.len()
    }

    /// `[ceil(n/2), floor(n/2)]`.
    pub fn balanced_bipartition(n: usize) -> Result<Self> {
        PartitionSpec::new(vec![n.div_ceil(2), n / 2])
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `n` into at least `min_parts` parts, each in descending order.
pub fn partitions(n: usize, min_parts: usize) -> Vec<PartitionSpec> {
    fn rec(remaining: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .filter(|p| p.len() >= min_parts)
        .map(PartitionSpec)
        .collect()
}
