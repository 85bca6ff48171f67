//! Simple undirected graphs stored as per-vertex neighbor bitsets.
//!
//! Vertices are `0..n`. Each vertex owns a row of `words` 64-bit words, so a
//! graph on `n <= 64` vertices keeps one `u64` per vertex (the representation
//! the exhaustive search relies on) while constructions with larger `n` spill
//! into additional words behind the same interface. Graphs are immutable after
//! construction and all operations here are pure.

use thiserror::Error;

/// Errors raised by graph construction and queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph is disconnected, so its connectivity is undefined")]
    Disconnected,
}

/// An undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// A set of vertices whose removal disconnects the host graph.
///
/// Produced by [`Graph::vertex_connectivity`], in which case the set is a
/// minimum cut. The complete graph gets the conventional empty cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    vertices: Vec<usize>,
}

impl VertexCut {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mask of valid bits in word `w` of a row for an `n`-vertex graph.
#[inline]
fn tail_mask(n: usize, w: usize) -> u64 {
    let lo = w * 64;
    if n >= lo + 64 {
        u64::MAX
    } else if n <= lo {
        0
    } else {
        (1u64 << (n - lo)) - 1
    }
}

impl Graph {
    /// Builds the graph on `n` vertices with the given edges.
    ///
    /// Duplicate edges collapse; each endpoint must lie in `0..n` and loops
    /// are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let words = words_for(n);
        Ok(Self {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            for w in 0..g.words {
                g.bits[v * g.words + w] = tail_mask(n, w);
            }
            g.clear_bit(v, v);
        }
        Ok(g)
    }

    /// Adopts one `u64` neighbor row per vertex (`n <= 64`).
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        debug_assert!((1..=64).contains(&n) && rows.len() == n);
        Self {
            n,
            words: 1,
            bits: rows.to_vec(),
        }
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn set_edge(&mut self, u: usize, v: usize) {
        self.set_bit(u, v);
        self.set_bit(v, u);
    }

    #[inline]
    fn set_bit(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1u64 << (col % 64);
    }

    #[inline]
    fn clear_bit(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] &= !(1u64 << (col % 64));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            BitIter(word).map(move |b| base + b)
        })
    }

    /// Edges as `(u, v)` pairs with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph: edge `uv` present exactly when absent here.
    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.n {
            for w in 0..self.words {
                g.bits[v * self.words + w] = !self.bits[v * self.words + w] & tail_mask(self.n, w);
            }
            g.clear_bit(v, v);
        }
        g
    }

    /// Whether a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut visited = vec![0u64; self.words];
        visited[0] = 1;
        let mut frontier = visited.clone();
        let mut reached = 1usize;
        loop {
            let mut next = vec![0u64; self.words];
            for (wi, &fword) in frontier.iter().enumerate() {
                let mut word = fword;
                while word != 0 {
                    let v = wi * 64 + word.trailing_zeros() as usize;
                    word &= word - 1;
                    let row = self.row(v);
                    for (nw, &bitsw) in next.iter_mut().zip(row) {
                        *nw |= bitsw;
                    }
                }
            }
            let mut grew = false;
            for wi in 0..self.words {
                next[wi] &= !visited[wi];
                if next[wi] != 0 {
                    grew = true;
                    visited[wi] |= next[wi];
                    reached += next[wi].count_ones() as usize;
                }
            }
            if !grew {
                break;
            }
            frontier = next;
        }
        reached == self.n
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `s`, relabeled `0..s.len()` in sorted order.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Self, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySubset);
        }
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let mut g = Self::empty(sorted.len())?;
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Whether every pair of vertices in `s` is adjacent; vacuously true for
    /// singletons and the empty set. Vertices must be in range.
    pub fn is_clique(&self, s: &[usize]) -> bool {
        for (i, &u) in s.iter().enumerate() {
            assert!(u < self.n, "vertex {u} out of range");
            for &v in &s[i + 1..] {
                if u != v && !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Two-colors the graph if possible, returning the color classes.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return None;
                    }
                }
            }
        }
        let mut parts = (Vec::new(), Vec::new());
        for (v, &c) in color.iter().enumerate() {
            if c == 0 {
                parts.0.push(v);
            } else {
                parts.1.push(v);
            }
        }
        Some(parts)
    }

    /// Removes the vertices in `cut` and returns the rest as a relabel-free
    /// component partition (vertex labels of the original graph).
    pub fn components_without(&self, cut: &[usize]) -> Vec<Vec<usize>> {
        let mut removed = vec![false; self.n];
        for &v in cut {
            removed[v] = true;
        }
        let mut seen = removed.clone();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The adjacency matrix as dense rows of 0.0/1.0.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }

    /// Exact vertex connectivity with a witnessing minimum cut.
    ///
    /// Uses max-flow on the vertex-split digraph, minimized over non-adjacent
    /// source/sink pairs. The complete graph returns `n - 1` with an empty
    /// cut by convention; disconnected input is an error.
    pub fn vertex_connectivity(&self) -> Result<(usize, VertexCut), GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = self.n;
        let mut net = SplitFlow::new(n, self.edges());
        let mut best = n; // strictly above any attainable connectivity
        let mut best_pair = None;
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                net.reset();
                let f = net.max_flow(s, t, best);
                if f < best {
                    best = f;
                    best_pair = Some((s, t));
                }
            }
        }
        match best_pair {
            None => Ok((n - 1, VertexCut { vertices: Vec::new() })), // complete graph
            Some((s, t)) => {
                net.reset();
                let f = net.max_flow(s, t, n);
                debug_assert_eq!(f, best);
                let vertices = net.min_cut();
                debug_assert_eq!(vertices.len(), best);
                Ok((best, VertexCut { vertices }))
            }
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={};", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {u}-{v}")?;
        }
        write!(f, ")")
    }
}

/// Iterates the set bit positions of one word.
struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Max-flow on the vertex-split digraph.
///
/// Vertex `v` becomes `in(v) = 2v` and `out(v) = 2v + 1` joined by a
/// capacity-1 arc; each undirected edge `uv` becomes `out(u) -> in(v)` and
/// `out(v) -> in(u)` with effectively infinite capacity, so minimum cuts
/// consist of split arcs only. The max flow from `out(s)` to `in(t)` counts
/// internally disjoint s-t paths, and the split arcs on the residual
/// frontier form a minimum vertex cut.
pub(crate) struct SplitFlow {
    n: usize,
    to: Vec<u32>,
    cap: Vec<u32>,
    head: Vec<Vec<u32>>,
    source: usize,
    parent: Vec<u32>,
    queue: Vec<u32>,
}

const EDGE_ARC_CAP: u32 = 1 << 30;

impl SplitFlow {
    pub(crate) fn new(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Self {
        let mut net = Self::with_nodes(n);
        net.load(n, edges);
        net
    }

    /// Allocates buffers for up to `n` graph vertices.
    pub(crate) fn with_nodes(n: usize) -> Self {
        Self {
            n,
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); 2 * n],
            source: 0,
            parent: vec![u32::MAX; 2 * n],
            queue: Vec::with_capacity(2 * n),
        }
    }

    /// Refills the network for a new edge set, reusing existing buffers.
    pub(crate) fn load(&mut self, n: usize, edges: impl Iterator<Item = (usize, usize)>) {
        assert!(self.head.len() >= 2 * n);
        self.n = n;
        self.to.clear();
        self.cap.clear();
        for list in self.head.iter_mut() {
            list.clear();
        }
        for v in 0..n {
            self.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in edges {
            self.add_arc(2 * u + 1, 2 * v, EDGE_ARC_CAP);
            self.add_arc(2 * v + 1, 2 * u, EDGE_ARC_CAP);
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let idx = self.to.len() as u32;
        self.to.push(to as u32);
        self.cap.push(cap);
        self.head[from].push(idx);
        self.to.push(from as u32);
        self.cap.push(0);
        self.head[to].push(idx + 1);
    }

    pub(crate) fn reset(&mut self) {
        for (p, pair) in self.cap.chunks_mut(2).enumerate() {
            pair[0] = if p < self.n { 1 } else { EDGE_ARC_CAP };
            pair[1] = 0;
        }
    }

    /// Pushes unit augmenting paths from `out(s)` to `in(t)` until none remain
    /// or `limit` units have been sent.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let src = 2 * s + 1;
        let dst = 2 * t;
        self.source = src;
        let mut flow = 0;
        while flow < limit {
            self.parent[..2 * self.n].fill(u32::MAX);
            self.queue.clear();
            self.queue.push(src as u32);
            let mut found = false;
            let mut qi = 0;
            'bfs: while qi < self.queue.len() {
                let node = self.queue[qi] as usize;
                qi += 1;
                for ai in 0..self.head[node].len() {
                    let arc = self.head[node][ai] as usize;
                    if self.cap[arc] == 0 {
                        continue;
                    }
                    let next = self.to[arc] as usize;
                    if next != src && self.parent[next] == u32::MAX {
                        self.parent[next] = arc as u32;
                        if next == dst {
                            found = true;
                            break 'bfs;
                        }
                        self.queue.push(next as u32);
                    }
                }
            }
            if !found {
                break;
            }
            let mut node = dst;
            while node != src {
                let arc = self.parent[node] as usize;
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                node = self.to[arc ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }

    /// Minimum vertex cut from the residual graph of the last `max_flow` run.
    pub(crate) fn min_cut(&self) -> Vec<usize> {
        let mut reach = vec![false; 2 * self.n];
        reach[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(node) = stack.pop() {
            for &arc in &self.head[node] {
                let arc = arc as usize;
                if self.cap[arc] == 0 {
                    continue;
                }
                let next = self.to[arc] as usize;
                if !reach[next] {
                    reach[next] = true;
                    stack.push(next);
                }
            }
        }
        (0..self.n)
            .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn builds_path_on_three_vertices() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn empty_and_complete_graphs() {
        let e = Graph::new(4, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert!((0..4).all(|v| e.degree(v) == 0));

        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!((0..5).all(|v| k5.degree(v) == 4));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::NoVertices));
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k5 = Graph::complete(5).unwrap();
        let c = k5.complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.complement(), k5);
    }

    #[test]
    fn complement_of_path3_is_single_edge() {
        let g = path(3);
        let c = g.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn complement_involution_is_bit_exact() {
        let g = Graph::new(7, &[(0, 3), (1, 2), (2, 6), (4, 5), (0, 6)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complement_crosses_word_boundary() {
        // 70 vertices exercises the two-word rows.
        let g = Graph::new(70, &[(0, 69), (63, 64), (10, 20)]).unwrap();
        let c = g.complement();
        assert!(!c.has_edge(0, 69));
        assert!(!c.has_edge(63, 64));
        assert!(c.has_edge(0, 68));
        assert_eq!(c.complement(), g);
        assert_eq!(g.edge_count() + c.edge_count(), 70 * 69 / 2);
    }

    #[test]
    fn connectivity_of_small_graphs() {
        assert!(Graph::complete(4).unwrap().is_connected());
        assert!(!Graph::new(2, &[]).unwrap().is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
        assert!(path(6).is_connected());
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_cases() {
        let k5 = Graph::complete(5).unwrap();
        let tri = k5.induced_subgraph(&[4, 0, 2]).unwrap();
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(tri.edge_count(), 3);

        let p4 = path(4);
        let two = p4.induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(two.edge_count(), 0);

        assert_eq!(p4.induced_subgraph(&[]), Err(GraphError::EmptySubset));
        assert!(p4.induced_subgraph(&[9]).is_err());
    }

    #[test]
    fn clique_checks() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.is_clique(&[0, 1, 2, 3]));
        assert!(k4.is_clique(&[2]));
        assert!(k4.is_clique(&[]));

        let mut edges: Vec<_> = Graph::complete(4).unwrap().edges().collect();
        edges.retain(|&e| e != (1, 2));
        let nearly = Graph::new(4, &edges).unwrap();
        assert!(!nearly.is_clique(&[0, 1, 2, 3]));
        assert!(nearly.is_clique(&[0, 1, 3]));
    }

    #[test]
    fn bipartition_detects_odd_cycles() {
        assert!(cycle(6).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
        let (a, b) = path(4).bipartition().unwrap();
        assert_eq!(a, vec![0, 2]);
        assert_eq!(b, vec![1, 3]);
    }

    #[test]
    fn connectivity_of_complete_graph_is_conventional() {
        for n in 1..=6 {
            let (k, cut) = Graph::complete(n).unwrap().vertex_connectivity().unwrap();
            assert_eq!(k, n - 1);
            assert!(cut.vertices().is_empty());
        }
    }

    #[test]
    fn connectivity_of_cycle_is_two() {
        let (k, cut) = cycle(5).vertex_connectivity().unwrap();
        assert_eq!(k, 2);
        assert_eq!(cut.size(), 2);
        let comps = cycle(5).components_without(cut.vertices());
        assert!(comps.len() >= 2);
    }

    #[test]
    fn connectivity_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.vertex_connectivity(), Err(GraphError::Disconnected));
    }

    /// Exhaustive connectivity oracle over bitmask subsets; n <= 16.
    fn brute_connectivity_masks(g: &Graph) -> usize {
        let n = g.vertex_count();
        let mut best = n - 1;
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if subset.len() >= best {
                continue;
            }
            if subset.len() == n {
                continue;
            }
            if g.components_without(&subset).len() > 1 {
                best = subset.len();
            }
        }
        best
    }

    #[test]
    fn connectivity_matches_brute_force_on_all_five_vertex_graphs() {
        // all 1024 labeled graphs on 5 vertices
        for mask in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..5 {
                for i in 0..j {
                    if mask >> idx & 1 == 1 {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            let g = Graph::new(5, &edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let (k, cut) = g.vertex_connectivity().unwrap();
            assert_eq!(k, brute_connectivity_masks(&g), "mask {mask}: {g:?}");
            if k < 4 {
                assert_eq!(cut.size(), k);
                assert!(g.components_without(cut.vertices()).len() > 1);
            }
        }
    }

    #[test]
    fn degree_sum_is_even() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 5)]).unwrap();
        let total: usize = (0..6).map(|v| g.degree(v)).sum();
        assert_eq!(total % 2, 0);
        assert_eq!(total / 2, g.edge_count());
    }
}
