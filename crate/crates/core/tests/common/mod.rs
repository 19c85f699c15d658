//! Naive reference implementations that share no code with the library.

#![allow(dead_code)]

use domsum::Graph;

/// Adjacency as nested vectors.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn complement_matrix(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = m.len();
    (0..n).map(|u| (0..n).map(|v| u != v && !m[u][v]).collect()).collect()
}

/// Dominating sets by checking every vertex against every subset.
pub fn dominating_sets(m: &[Vec<bool>]) -> u128 {
    let n = m.len();
    let mut count = 0;
    for s in 0u64..1 << n {
        let inside = |v: usize| s >> v & 1 == 1;
        if (0..n).all(|v| inside(v) || (0..n).any(|u| inside(u) && m[u][v])) {
            count += 1;
        }
    }
    count
}

pub fn domination_sum(g: &Graph) -> u128 {
    let m = matrix(g);
    dominating_sets(&m) + dominating_sets(&complement_matrix(&m))
}

/// Sets `A` dominating `G` whose complement dominates `Ḡ`.
pub fn naive_upsilon(g: &Graph) -> u128 {
    let m = matrix(g);
    let c = complement_matrix(&m);
    let n = m.len();
    let dominates = |adj: &[Vec<bool>], s: u64| {
        (0..n).all(|v| s >> v & 1 == 1 || (0..n).any(|u| s >> u & 1 == 1 && adj[u][v]))
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0u64..1 << n)
        .filter(|&a| dominates(&m, a) && dominates(&c, full & !a))
        .count() as u128
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Upper-triangle bit string of a labelled graph.
pub fn edge_code(n: usize, edge: impl Fn(usize, usize) -> bool) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if edge(u, v) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Smallest edge code over all relabellings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| edge_code(n, |u, v| g.has_edge(p[u], p[v])))
        .min()
        .unwrap_or(0)
}

/// Number of isomorphism classes of order `n` by brute relabelling.
pub fn brute_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let mut seen = std::collections::HashSet::new();
    for code in 0u64..1 << pairs {
        let g = graph_from_code(n, code);
        seen.insert(brute_canonical(&g, &perms));
    }
    seen.len()
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Every labelled graph of order `n`.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |code| graph_from_code(n, code))
}

/// Automorphisms by trying every permutation.
pub fn brute_automorphisms(g: &Graph, perms: &[Vec<usize>]) -> u128 {
    let n = g.order();
    perms
        .iter()
        .filter(|p| (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(p[u], p[v]))))
        .count() as u128
}

/// Reproducible random graph with edge probability one half.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Complete multipartite graph built edge by edge.
pub fn multipartite_graph(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut label = Vec::with_capacity(n);
    for (i, &a) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(i, a));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if label[u] != label[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Integer partitions of `n` with at least `min_parts` parts, descending.
pub fn integer_partitions(n: usize, min_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (1..=rest.min(max)).rev() {
            cur.push(a);
            go(rest - a, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() >= min_parts);
    out
}

pub fn pow2(k: usize) -> u128 {
    1u128 << k
}

/// The conjectured maximum written out directly.
pub fn conjectured(n: usize) -> u128 {
    2 * (pow2(n / 2) - 1) * (pow2(n.div_ceil(2)) - 1) + 2
}
