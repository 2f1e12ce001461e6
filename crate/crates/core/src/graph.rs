//! Simple undirected graphs and their hop metric.

use std::collections::VecDeque;
use std::time::Instant;

use crate::broadcast::{Broadcast, ParameterKind};
use crate::error::{Error, Result};
use crate::solver::ParameterResult;

/// Distance value used for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default cap on the vertex count accepted by [`independence_number`].
pub const INDEPENDENCE_CAP: usize = 40;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are kept sorted and duplicate free. Family generators
/// attach a label to every vertex so certificates can address vertices by
/// name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let g = Graph {
            adjacency,
            labels: None,
        };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate label `{l}`")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&v| v < self.n()),
        }
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() == self.n() - 1 && is_connected(self)
    }

    pub(crate) fn check_invariants(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && v < self.n() && self.has_edge(v, u))
        })
    }
}

/// All-pairs hop distances plus the derived eccentricity data.
///
/// Eccentricities are taken within each vertex's component, so a broadcast
/// on a disconnected graph is the union of broadcasts on its components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diameter: u32,
    radius: u32,
    min_degree: usize,
    connected: bool,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance, or [`UNREACHABLE`].
    #[inline]
    pub fn d(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// Largest strength `v` may broadcast with: its eccentricity, or 1 for an
    /// isolated vertex.
    pub fn strength_cap(&self, v: usize) -> u32 {
        self.ecc[v].max(1)
    }

    pub fn row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }
}

fn bfs(graph: &Graph, source: usize, out: &mut [u32]) {
    out.fill(UNREACHABLE);
    out[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = out[u];
        for &w in graph.neighbors(u) {
            if out[w] == UNREACHABLE {
                out[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
}

/// Breadth-first all-pairs distances.
pub fn distances(graph: &Graph) -> DistanceMatrix {
    let n = graph.n();
    let mut dist = vec![UNREACHABLE; n * n];
    for s in 0..n {
        bfs(graph, s, &mut dist[s * n..(s + 1) * n]);
    }
    let ecc: Vec<u32> = (0..n)
        .map(|v| {
            dist[v * n..(v + 1) * n]
                .iter()
                .copied()
                .filter(|&x| x != UNREACHABLE)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let connected = n == 0 || dist[..n].iter().all(|&x| x != UNREACHABLE);
    DistanceMatrix {
        n,
        diameter: ecc.iter().copied().max().unwrap_or(0),
        radius: ecc.iter().copied().min().unwrap_or(0),
        min_degree: graph.min_degree(),
        ecc,
        dist,
        connected,
    }
}

pub fn is_connected(graph: &Graph) -> bool {
    let n = graph.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![UNREACHABLE; n];
    bfs(graph, 0, &mut seen);
    seen.iter().all(|&x| x != UNREACHABLE)
}

pub fn is_bipartite(graph: &Graph) -> bool {
    let n = graph.n();
    let mut colour = vec![UNREACHABLE; n];
    for s in 0..n {
        if colour[s] != UNREACHABLE {
            continue;
        }
        colour[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if colour[w] == UNREACHABLE {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if colour[w] == colour[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Connected, at least three vertices, no cutvertex.
pub fn is_two_connected(graph: &Graph) -> bool {
    let n = graph.n();
    if n < 3 || !is_connected(graph) {
        return false;
    }
    cutvertices(graph).is_empty()
}

/// Articulation points via the low-link DFS.
pub fn cutvertices(graph: &Graph) -> Vec<usize> {
    let n = graph.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if *pos < graph.degree(u) {
                let w = graph.neighbors(u)[*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if w != parent {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if parent != root && low[u] >= disc[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

/// Breadth-first spanning tree rooted at vertex 0; keeps the labels.
pub fn spanning_tree(graph: &Graph) -> Result<Graph> {
    let n = graph.n();
    if !is_connected(graph) {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    if n > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    edges.push((u, w));
                    queue.push_back(w);
                }
            }
        }
    }
    let tree = Graph::from_edges(n, &edges)?;
    match graph.labels() {
        Some(l) => tree.with_labels(l.to_vec()),
        None => Ok(tree),
    }
}

/// Exact independence number with the lexicographically least maximum
/// independent set as witness (0/1 strengths).
pub fn independence_number(graph: &Graph) -> Result<ParameterResult> {
    independence_number_capped(graph, INDEPENDENCE_CAP)
}

pub fn independence_number_capped(graph: &Graph, cap: usize) -> Result<ParameterResult> {
    let n = graph.n();
    if n > cap || n > 64 {
        return Err(Error::CapExceeded {
            n,
            cap: cap.min(64),
        });
    }
    let start = Instant::now();
    let adj: Vec<u64> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut mis = Mis {
        adj: &adj,
        nodes: 0,
    };
    let alpha = mis.max_size(all);

    // Fix vertices in index order, excluding whenever the optimum survives.
    let mut chosen = 0u64;
    let mut count = 0u32;
    let mut candidates = all;
    for (v, &nbrs) in adj.iter().enumerate() {
        let bit = 1u64 << v;
        if candidates & bit == 0 {
            continue;
        }
        let without = mis.max_size(candidates & !bit);
        if count + without >= alpha {
            candidates &= !bit;
        } else {
            chosen |= bit;
            count += 1;
            candidates &= !bit & !nbrs;
        }
    }
    debug_assert_eq!(count, alpha);
    let strengths = (0..n).map(|v| ((chosen >> v) & 1) as u32).collect();
    Ok(ParameterResult {
        kind: ParameterKind::Alpha,
        value: alpha,
        witness: Broadcast::new(strengths),
        optimal: true,
        nodes_explored: mis.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

struct Mis<'a> {
    adj: &'a [u64],
    nodes: u64,
}

impl Mis<'_> {
    fn max_size(&mut self, candidates: u64) -> u32 {
        let mut best = 0;
        self.search(candidates, 0, &mut best);
        best
    }

    fn search(&mut self, mut p: u64, size: u32, best: &mut u32) {
        self.nodes += 1;
        let mut size = size;
        // Vertices of degree <= 1 inside `p` belong to some maximum set.
        loop {
            let mut changed = false;
            let mut scan = p;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if p & (1 << v) == 0 {
                    continue;
                }
                if (self.adj[v] & p).count_ones() <= 1 {
                    size += 1;
                    p &= !(1 << v) & !self.adj[v];
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if p == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover_bound(p) <= *best {
            return;
        }
        let mut pick = 0;
        let mut pick_deg = 0;
        let mut scan = p;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (self.adj[v] & p).count_ones();
            if deg > pick_deg {
                pick = v;
                pick_deg = deg;
            }
        }
        self.search(p & !(1 << pick) & !self.adj[pick], size + 1, best);
        self.search(p & !(1 << pick), size, best);
    }

    // Greedy partition into cliques; an independent set meets each at most once.
    fn clique_cover_bound(&self, p: u64) -> u32 {
        let mut rest = p;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique_cands = rest & self.adj[v];
            rest &= !(1 << v);
            while clique_cands != 0 {
                let w = clique_cands.trailing_zeros() as usize;
                rest &= !(1 << w);
                clique_cands &= self.adj[w];
            }
            cliques += 1;
        }
        cliques
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = vec![];
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn path_metric() {
        let d = distances(&path(4));
        assert_eq!(d.d(0, 3), 3);
        assert_eq!(d.ecc(0), 3);
        assert_eq!(d.ecc(1), 2);
        assert_eq!(d.diameter(), 3);
        assert_eq!(d.radius(), 2);
    }

    #[test]
    fn single_vertex() {
        let d = distances(&Graph::empty(1));
        assert_eq!(d.diameter(), 0);
        assert_eq!(d.ecc(0), 0);
        assert_eq!(d.strength_cap(0), 1);
        assert!(d.is_connected());
    }

    #[test]
    fn disconnected_pairs_are_flagged() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&g));
        let d = distances(&g);
        assert_eq!(d.d(0, 2), UNREACHABLE);
        assert_eq!(d.ecc(0), 1);
        assert!(!d.is_connected());
        assert_eq!(spanning_tree(&g), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_self_loops() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn structure_queries() {
        assert!(is_connected(&path(3)));
        assert!(is_bipartite(&cycle(4)));
        assert!(!is_bipartite(&cycle(5)));
        assert!(is_two_connected(&cycle(4)));
        assert!(!is_two_connected(&path(4)));
        assert_eq!(cutvertices(&path(4)), vec![1, 2]);
        assert!(!is_two_connected(&path(2)));
    }

    #[test]
    fn bfs_spanning_trees() {
        let t = path(5);
        assert_eq!(spanning_tree(&t).unwrap(), t);
        let st = spanning_tree(&cycle(4)).unwrap();
        assert_eq!(st.edge_count(), 3);
        assert!(st.is_tree());
        let star = spanning_tree(&complete(4)).unwrap();
        assert_eq!(star.degree(0), 3);
        assert!((1..4).all(|v| star.degree(v) == 1));
    }

    #[test]
    fn independence_small() {
        assert_eq!(independence_number(&complete(5)).unwrap().value, 1);
        let c6 = independence_number(&cycle(6)).unwrap();
        assert_eq!(c6.value, 3);
        assert_eq!(c6.witness.strengths(), &[0, 1, 0, 1, 0, 1]);
        let p4 = independence_number(&path(4)).unwrap();
        assert_eq!(p4.witness.strengths(), &[0, 1, 0, 1]);
        assert!(independence_number_capped(&path(5), 4).is_err());
    }
}
