//! Small-graph oracles: connected induced subgraph enumeration, rooted tree
//! counts and component statistics of deleted vertex sets.

mod trees;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::Polytope;

pub use trees::{rooted_tree_count, rooted_tree_count_brute_force};

/// Default largest subgraph size accepted by [`enumerate_connected_induced`].
pub const ENUMERATION_CAP: usize = 8;

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parameter(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        Self::from_adjacency(adj)
    }

    /// Checks symmetry and the absence of self-loops.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        for (v, list) in adj.iter().enumerate() {
            for &u in list {
                if u == v {
                    return Err(Error::Parameter(format!("self-loop at vertex {v}")));
                }
                if u >= n || adj[u].binary_search(&v).is_err() {
                    return Err(Error::Parameter(format!("adjacency of {v} and {u} is not symmetric")));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// The 1-skeleton of a polytope.
    pub fn from_polytope(p: &Polytope) -> Self {
        Graph {
            adj: p.skeleton().to_vec(),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Self::from_edges(n, &edges).expect("complete graph")
    }

    /// Skeleton of the `k`-cube.
    pub fn hypercube(k: usize) -> Self {
        let n = 1usize << k;
        let edges: Vec<_> = (0..n)
            .flat_map(|v| (0..k).map(move |i| (v, v ^ (1 << i))).filter(|&(a, b)| a < b))
            .collect();
        Self::from_edges(n, &edges).expect("hypercube")
    }

    /// Skeleton of the `k`-dimensional cross-polytope: `K_{2k}` minus a
    /// perfect matching.
    pub fn cross_polytope(k: usize) -> Self {
        let n = 2 * k;
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a / 2 != b / 2)
            .collect();
        Self::from_edges(n, &edges).expect("cross-polytope")
    }

    /// Circular ladder on `2n` vertices.
    pub fn prism(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((n + i, n + (i + 1) % n));
            edges.push((i, n + i));
        }
        Self::from_edges(2 * n, &edges).expect("prism")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Self::from_edges(10, &edges).expect("petersen")
    }

    /// Circulant graph joining `i` and `i ± s` for every offset `s`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|i| offsets.iter().map(move |&s| (i, (i + s) % n)))
            .filter(|&(a, b)| a != b)
            .collect();
        Self::from_edges(n, &edges).expect("circulant")
    }
}

/// Number of `t`-subsets of vertices inducing a connected subgraph, with
/// the default cap `t ≤ 8`.
pub fn enumerate_connected_induced(g: &Graph, t: usize) -> Result<u64> {
    enumerate_connected_induced_capped(g, t, ENUMERATION_CAP)
}

/// ESU enumeration: each connected set is grown from its smallest vertex,
/// extending only by vertices in the exclusive neighborhood of the newest
/// member, so every set is produced exactly once.
pub fn enumerate_connected_induced_capped(g: &Graph, t: usize, cap: usize) -> Result<u64> {
    if t < 2 || t > cap {
        return Err(Error::Range(format!("subgraph size must be in 2..={cap}, got {t}")));
    }
    let n = g.num_vertices();
    let mut in_sub = vec![false; n];
    let mut near = vec![0u32; n];
    let mut count = 0;
    for root in 0..n {
        let ext: Vec<usize> = g.adj[root].iter().copied().filter(|&u| u > root).collect();
        in_sub[root] = true;
        for &u in &g.adj[root] {
            near[u] += 1;
        }
        extend(g, t, root, 1, ext, &mut in_sub, &mut near, &mut count);
        for &u in &g.adj[root] {
            near[u] -= 1;
        }
        in_sub[root] = false;
    }
    Ok(count)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    t: usize,
    root: usize,
    size: usize,
    mut ext: Vec<usize>,
    in_sub: &mut [bool],
    near: &mut [u32],
    count: &mut u64,
) {
    if size == t {
        *count += 1;
        return;
    }
    while let Some(w) = ext.pop() {
        let mut next = ext.clone();
        for &u in &g.adj[w] {
            if u > root && !in_sub[u] && near[u] == 0 && !next.contains(&u) {
                next.push(u);
            }
        }
        in_sub[w] = true;
        for &u in &g.adj[w] {
            near[u] += 1;
        }
        extend(g, t, root, size + 1, next, in_sub, near, count);
        for &u in &g.adj[w] {
            near[u] -= 1;
        }
        in_sub[w] = false;
    }
}

/// `(connected, disconnected)` counts over all `t`-subsets, by exhaustive
/// enumeration. Oracle for small graphs only.
pub fn count_induced_brute_force(g: &Graph, t: usize) -> (u64, u64) {
    let n = g.num_vertices();
    let mut subset: Vec<usize> = (0..t).collect();
    let (mut conn, mut disc) = (0, 0);
    if t == 0 || t > n {
        return (0, 0);
    }
    loop {
        if induced_components(g, &subset).len() == 1 {
            conn += 1;
        } else {
            disc += 1;
        }
        // next combination in lexicographic order
        let Some(i) = (0..t).rev().find(|&i| subset[i] < n - t + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..t {
            subset[j] = subset[j - 1] + 1;
        }
    }
    (conn, disc)
}

/// Connected components of the subgraph induced by `vertices`, each sorted,
/// listed by smallest member.
pub fn induced_components(g: &Graph, vertices: &[usize]) -> Vec<Vec<usize>> {
    let mut member = vec![false; g.num_vertices()];
    for &v in vertices {
        member[v] = true;
    }
    let mut seen = vec![false; g.num_vertices()];
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    for &start in &sorted {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            for &u in &g.adj[comp[i]] {
                if member[u] && !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Histogram `size → number of components` of the subgraph induced by the
/// vertices not in `kept`.
pub fn deleted_subgraph_components(g: &Graph, kept: &[usize]) -> BTreeMap<usize, usize> {
    let mut is_kept = vec![false; g.num_vertices()];
    for &v in kept {
        is_kept[v] = true;
    }
    let deleted: Vec<usize> = (0..g.num_vertices()).filter(|&v| !is_kept[v]).collect();
    let mut hist = BTreeMap::new();
    for comp in induced_components(g, &deleted) {
        *hist.entry(comp.len()).or_insert(0) += 1;
    }
    hist
}
