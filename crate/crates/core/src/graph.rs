//! Simple undirected graphs, the plain edge-list text format and bipartiteness.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored once each as `(u, v)` with `u < v`, sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from vertex pairs. Duplicate pairs (in either orientation) are merged;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Same graph with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Self {
        let mut adj = self.adj.clone();
        adj.resize(self.n + extra, Vec::new());
        Graph {
            n: self.n + extra,
            edges: self.edges.clone(),
            adj,
        }
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1.0;
            a[v][u] = 1.0;
        }
        a
    }

    /// Connected component label for every vertex, labels in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// A forest is acyclic: m = n − (number of components).
    pub fn is_forest(&self) -> bool {
        let comps = self.components().into_iter().max().map_or(0, |c| c + 1);
        self.m() + comps == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Parses the edge-list text format: a first line `n m`, then `m` lines `u v`.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            reason: "missing header \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut pairs = Vec::with_capacity(m);
        for (line, l) in lines.by_ref().take(m) {
            let [u, v] = parse_pair(line, l)?;
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(Error::EdgeList {
                line: hline,
                reason: format!("header announces {m} edges, found {}", pairs.len()),
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::EdgeList {
                line,
                reason: "trailing data after the announced edges".into(),
            });
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Writes the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<_> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::EdgeList {
            line,
            reason: format!("expected two integers, got {:?}", text),
        });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| Error::EdgeList {
            line,
            reason: format!("not a nonnegative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// P_n: the path `0 − 1 − … − (n−1)`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path_graph needs n >= 1".into()));
    }
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// S_n: center 0 joined to `1..n`.
pub fn star_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("star_graph needs n >= 1".into()));
    }
    let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// Class (0 or 1) of every vertex; each edge joins the two classes.
    Classes(Vec<u8>),
    /// Vertices of an odd cycle, in order; consecutive entries (and last, first) are adjacent.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Classes(_))
    }
}

/// Breadth-first two-colouring, starting each component at its smallest vertex with class 0.
/// On failure returns an odd cycle through the offending edge.
pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut class = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if class[s] != u8::MAX {
            continue;
        }
        class[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if class[w] == u8::MAX {
                    class[w] = 1 - class[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if class[w] == class[v] {
                    return Bipartition::OddCycle(odd_cycle(v, w, &parent, &depth));
                }
            }
        }
    }
    Bipartition::Classes(class)
}

// Climb both BFS-tree branches to their lowest common ancestor; together with the edge
// (v, w) between same-depth-parity vertices they close an odd cycle.
fn odd_cycle(v: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (v, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    // Smallest vertex first, then its smaller cycle neighbour.
    let pos = left
        .iter()
        .enumerate()
        .min_by_key(|&(_, &x)| x)
        .map_or(0, |(i, _)| i);
    left.rotate_left(pos);
    if left.len() > 2 && left[left.len() - 1] < left[1] {
        left[1..].reverse();
    }
    left
}
