//! Independent reference implementations used by the integration tests. Nothing here
//! calls into the library's algorithms; only `Graph` is shared as a carrier type.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schatten::Graph;

/// Coefficients of det(xI − A), highest degree first, by the Leibniz expansion.
///
/// With a 0/1 adjacency matrix and zero diagonal, a permutation σ contributes
/// sgn(σ)·(−1)^{moved}·x^{fixed} when every moved i has A[i][σ(i)] = 1, and nothing otherwise.
pub fn leibniz_char_poly(g: &Graph) -> Vec<i64> {
    let n = g.n();
    let mut ascending = vec![0i64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn walk(g: &Graph, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, acc: &mut Vec<i64>) {
        let n = g.n();
        if i == n {
            let fixed = (0..n).filter(|&k| perm[k] == k).count();
            let moved = n - fixed;
            let sign = permutation_sign(perm) * if moved.is_multiple_of(2) { 1 } else { -1 };
            acc[fixed] += sign;
            return;
        }
        for j in 0..n {
            if used[j] || (j != i && !g.has_edge(i, j)) {
                continue;
            }
            used[j] = true;
            perm[i] = j;
            walk(g, i + 1, perm, used, acc);
            used[j] = false;
        }
    }
    walk(g, 0, &mut perm, &mut used, &mut ascending);
    ascending.reverse();
    ascending
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Number of k-edge matchings by scanning every edge subset.
pub fn brute_matchings(g: &Graph) -> Vec<u64> {
    let edges = g.edges();
    let mut counts = vec![0u64; g.n() / 2 + 1];
    for mask in 0u64..(1u64 << edges.len()) {
        let mut covered = vec![false; g.n()];
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if covered[u] || covered[v] {
                    ok = false;
                    break;
                }
                covered[u] = true;
                covered[v] = true;
            }
        }
        if ok {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Writes graph6 by building the full upper-triangle bit string first (n ≤ 62).
pub fn naive_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62);
    let mut bits = String::new();
    for j in 0..n {
        for i in 0..j {
            bits.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((v + 63) as char);
    }
    out
}

/// Quadratic-time Prüfer decoding over labels 0..n.
pub fn naive_pruefer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism code of a free tree: AHU string rooted at the center(s), found by
/// repeatedly stripping leaves.
pub fn center_code(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".into();
    }
    let adj = adjacency(n, edges);
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            removed[leaf] = true;
            alive -= 1;
            for &w in &adj[leaf] {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n)
        .filter(|&v| !removed[v])
        .map(|c| rooted(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// All isomorphism classes of trees on n ≥ 2 vertices, by decoding every Prüfer sequence.
pub fn brute_tree_classes(n: usize) -> BTreeSet<String> {
    let mut classes = BTreeSet::new();
    if n == 2 {
        classes.insert(center_code(2, &[(0, 1)]));
        return classes;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        classes.insert(center_code(n, &naive_pruefer_decode(&seq)));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return classes;
        }
    }
}

/// Random bipartite graph: classes of sizes n1 and n2, each cross edge kept with prob `density`.
pub fn random_bipartite(n1: usize, n2: usize, density: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if rng.gen_bool(density) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n1 + n2, &pairs).unwrap()
}

/// Eigenvalue-free Schatten energy for the extremal trees.
pub fn star_energy(n: usize, p: f64) -> f64 {
    2.0 * ((n - 1) as f64).powf(p / 2.0)
}

pub fn path_eigenvalues(n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n)
        .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
        .collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}
