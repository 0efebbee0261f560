//! Labeled trees via Prüfer sequences, AHU canonical codes for free trees, and
//! enumeration of free trees up to isomorphism.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{path_graph, star_graph, Graph};

/// Largest n for which [`enumerate_trees`] runs.
pub const ENUMERATION_CAP: usize = 10;

/// Decodes a Prüfer sequence of length `n − 2` into the labeled tree on `n` vertices.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    // Linear-time decoding: `ptr` scans for the next leaf, `leaf` is the current one.
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    let mut pairs = Vec::with_capacity(n - 1);
    for &v in seq {
        pairs.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    pairs.push((leaf, n - 1));
    Graph::from_edge_list(n, &pairs)
}

/// Prüfer sequence of a labeled tree on `n ≥ 2` vertices.
pub fn pruefer_encode(g: &Graph) -> Result<Vec<usize>> {
    if g.n() < 2 || !g.is_tree() {
        return Err(Error::InvalidArgument(
            "Prüfer encoding needs a tree on at least 2 vertices".into(),
        ));
    }
    let n = g.n();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        removed[leaf] = true;
        let parent = *g
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf has a live neighbour");
        seq.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 && parent < ptr {
            leaf = parent;
        } else {
            ptr += 1;
            while degree[ptr] != 1 || removed[ptr] {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(seq)
}

/// Vertices whose removal leaves components of size at most n/2 (one or two of them).
pub fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let (order, parent) = dfs_order(g, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        let mut largest = n - size[v];
        for &w in g.neighbors(v) {
            if parent[w] == v {
                largest = largest.max(size[w]);
            }
        }
        if 2 * largest <= n {
            out.push(v);
        }
    }
    out
}

fn dfs_order(g: &Graph, root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (order, parent)
}

/// AHU code of the tree rooted at `root`: `(` + sorted child codes + `)`.
fn rooted_code(g: &Graph, root: usize) -> (String, Vec<Vec<usize>>) {
    let (order, parent) = dfs_order(g, root);
    let mut codes = vec![String::new(); g.n()];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &v in order.iter().rev() {
        let mut kids: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != parent[v])
            .collect();
        kids.sort_by(|&a, &b| codes[a].cmp(&codes[b]));
        let mut code = String::from("(");
        for &c in &kids {
            code.push_str(&codes[c]);
        }
        code.push(')');
        codes[v] = code;
        children[v] = kids;
    }
    (std::mem::take(&mut codes[root]), children)
}

/// A free tree in canonical form: its AHU code (minimum over centroid roots) and the tree
/// relabeled in breadth-first order from that root, children in code order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTree {
    pub code: String,
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalTree> {
    if !g.is_tree() {
        return Err(Error::InvalidArgument(
            "canonical form is defined for trees only".into(),
        ));
    }
    let (code, root, children) = centroids(g)
        .into_iter()
        .map(|c| {
            let (code, children) = rooted_code(g, c);
            (code, c, children)
        })
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("a tree has a centroid");
    let mut label = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::from([root]);
    let mut next = 0;
    label[root] = 0;
    let mut pairs = Vec::with_capacity(g.m());
    while let Some(v) = queue.pop_front() {
        for &c in &children[v] {
            next += 1;
            label[c] = next;
            pairs.push((label[v], label[c]));
            queue.push_back(c);
        }
    }
    Ok(CanonicalTree {
        code,
        graph: Graph::from_edge_list(g.n(), &pairs)?,
    })
}

/// AHU code of a free tree.
pub fn ahu_code(g: &Graph) -> Result<String> {
    canonical_form(g).map(|c| c.code)
}

/// One representative per isomorphism class of free trees on `n` vertices, sorted by
/// canonical code.
///
/// Trees on n vertices are grown from the representatives on n − 1 vertices by attaching a
/// leaf at every vertex; every tree arises this way because deleting any leaf gives a smaller
/// tree.
pub fn enumerate_trees(n: usize) -> Result<Vec<CanonicalTree>> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    if n < 2 {
        return Err(Error::InvalidArgument(
            "tree enumeration needs n >= 2".into(),
        ));
    }
    let mut level = vec![canonical_form(&path_graph(2)?)?];
    for size in 3..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..size - 1 {
                let mut pairs = t.graph.edges().to_vec();
                pairs.push((v, size - 1));
                let grown = canonical_form(&Graph::from_edge_list(size, &pairs)?)?;
                next.entry(grown.code).or_insert(grown.graph);
            }
        }
        level = next
            .into_iter()
            .map(|(code, graph)| CanonicalTree { code, graph })
            .collect();
    }
    Ok(level)
}

/// Free trees drawn from `samples` uniformly random Prüfer sequences (seeded), deduplicated
/// and sorted by canonical code. The star and the path are always included.
pub fn sample_trees(n: usize, samples: usize, seed: u64) -> Result<Vec<CanonicalTree>> {
    if n < 2 {
        return Err(Error::InvalidArgument("tree sampling needs n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    for g in [star_graph(n)?, path_graph(n)?] {
        let c = canonical_form(&g)?;
        found.insert(c.code, c.graph);
    }
    for _ in 0..samples {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let c = canonical_form(&tree_from_pruefer(&seq)?)?;
        found.entry(c.code).or_insert(c.graph);
    }
    Ok(found
        .into_iter()
        .map(|(code, graph)| CanonicalTree { code, graph })
        .collect())
}
