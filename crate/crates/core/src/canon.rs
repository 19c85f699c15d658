//! Canonical labelling by individualisation and refinement.
//!
//! The search tree starts from the equitable refinement of the unit
//! partition, individualises vertices of the first non-singleton cell and
//! re-refines until the partition is discrete. Every leaf gives a relabelled
//! adjacency matrix; the lexicographically smallest one is the canonical
//! form. Leaves that reproduce the first or best code yield automorphisms,
//! which prune sibling subtrees lying in the same orbit of the pointwise
//! stabiliser of the current prefix. Orbit sizes along the first path give
//! the automorphism group order.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::Graph;

/// Label-independent encoding: equal for two graphs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let width = n.div_ceil(8);
        let mut bytes = Vec::with_capacity(1 + n * width);
        bytes.push(n as u8);
        for row in rows {
            bytes.extend_from_slice(&row.to_le_bytes()[..width]);
        }
        CanonicalForm(bytes)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub struct Canonical {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    pub form: CanonicalForm,
    /// The input relabelled by `labeling`.
    pub graph: Graph,
    /// Orbit sizes along the first path; their product is |Aut(G)|.
    orbit_factors: Vec<usize>,
}

impl Canonical {
    /// |Aut(G)|, or `None` if it does not fit in 128 bits.
    pub fn automorphism_count(&self) -> Option<u128> {
        self.orbit_factors
            .iter()
            .try_fold(1u128, |acc, &k| acc.checked_mul(k as u128))
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonicalize(g).form
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

pub fn canonicalize(g: &Graph) -> Canonical {
    let n = g.order();
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
        orbit_factors: Vec::new(),
    };
    let mut cells = vec![crate::graph::full_mask(n)];
    let queue: VecDeque<u64> = cells.iter().copied().collect();
    refine(g, &mut cells, queue);
    search.explore(cells, &mut Vec::with_capacity(n), true);

    let best = search.best.expect("search reaches at least one leaf");
    let mut labeling = vec![0usize; n];
    for (pos, &v) in best.order.iter().enumerate() {
        labeling[v as usize] = pos;
    }
    let graph = Graph::from_adjacency_unchecked(best.code.clone());
    Canonical {
        labeling,
        form: CanonicalForm::from_rows(&best.code),
        graph,
        orbit_factors: search.orbit_factors,
    }
}

/// Splits cells until the partition is equitable. Cells are split in place,
/// sub-cells ordered by ascending neighbour count into the splitter, so the
/// result depends only on the structure and never on vertex labels.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let adj = g.adjacency();
    let mut buckets = [0u64; 65];
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (64usize, 0usize);
            let mut rest = cell;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let k = (adj[v] & splitter).count_ones() as usize;
                buckets[k] |= 1 << v;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                buckets[lo] = 0;
                i += 1;
                continue;
            }
            let mut parts = Vec::new();
            for bucket in &mut buckets[lo..=hi] {
                if *bucket != 0 {
                    parts.push(*bucket);
                    *bucket = 0;
                }
            }
            queue.extend(parts.iter().copied());
            let added = parts.len();
            cells.splice(i..=i, parts);
            i += added;
        }
    }
}

struct Leaf {
    /// `order[pos]` is the vertex placed at canonical position `pos`.
    order: Vec<u8>,
    code: Vec<u64>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as image arrays.
    autos: Vec<Vec<u8>>,
    orbit_factors: Vec<usize>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Vec<u64>, prefix: &mut Vec<u8>, first_path: bool) {
        let Some(target) = cells.iter().position(|c| c & (c - 1) != 0) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<u8> = Vec::new();
        let mut orbits = Orbits::new(self.g.order());
        let mut autos_seen = usize::MAX;

        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            if !explored.is_empty() {
                if autos_seen != self.autos.len() {
                    orbits.rebuild(&self.autos, prefix);
                    autos_seen = self.autos.len();
                }
                if explored.iter().any(|&e| orbits.same(e, v)) {
                    continue;
                }
            }
            let mut child = cells.clone();
            child[target] = 1 << v;
            let remainder = cell & !(1u64 << v);
            child.insert(target + 1, remainder);
            refine(self.g, &mut child, VecDeque::from([1u64 << v]));
            prefix.push(v);
            self.explore(child, prefix, first_path && explored.is_empty());
            prefix.pop();
            explored.push(v);
        }

        if first_path {
            orbits.rebuild(&self.autos, prefix);
            let first_child = cell.trailing_zeros() as u8;
            let mut size = 0;
            let mut rest = cell;
            while rest != 0 {
                let u = rest.trailing_zeros() as u8;
                rest &= rest - 1;
                if orbits.same(u, first_child) {
                    size += 1;
                }
            }
            self.orbit_factors.push(size);
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let n = self.g.order();
        let order: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut position = [0u8; 64];
        for (pos, &v) in order.iter().enumerate() {
            position[v as usize] = pos as u8;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = self.g.neighbors(v as usize);
                let mut out = 0u64;
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    row &= row - 1;
                    out |= 1 << position[u];
                }
                out
            })
            .collect();
        let leaf = Leaf { order, code };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                order: leaf.order.clone(),
                code: leaf.code.clone(),
            });
            self.first = Some(leaf);
            return;
        };
        if leaf.code == first.code {
            self.autos.push(automorphism(n, first, &leaf));
            return;
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.code.cmp(&best.code) {
            std::cmp::Ordering::Less => self.best = Some(leaf),
            std::cmp::Ordering::Equal => self.autos.push(automorphism(n, best, &leaf)),
            std::cmp::Ordering::Greater => {}
        }
    }
}

/// The automorphism carrying leaf `a` onto leaf `b` (equal codes).
fn automorphism(n: usize, a: &Leaf, b: &Leaf) -> Vec<u8> {
    let mut image = vec![0u8; n];
    for pos in 0..n {
        image[a.order[pos] as usize] = b.order[pos];
    }
    image
}

/// Orbits of the group generated by the stored automorphisms that fix a
/// prefix pointwise.
struct Orbits {
    parent: Vec<u8>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n as u8).collect(),
        }
    }

    fn rebuild(&mut self, autos: &[Vec<u8>], prefix: &[u8]) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        for gamma in autos {
            if prefix.iter().all(|&v| gamma[v as usize] == v) {
                for (v, &w) in gamma.iter().enumerate() {
                    self.union(v as u8, w);
                }
            }
        }
    }

    fn find(&mut self, mut v: u8) -> u8 {
        while self.parent[v as usize] != v {
            let up = self.parent[self.parent[v as usize] as usize];
            self.parent[v as usize] = up;
            v = up;
        }
        v
    }

    fn union(&mut self, a: u8, b: u8) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }

    fn same(&mut self, a: u8, b: u8) -> bool {
        self.find(a) == self.find(b)
    }
}
