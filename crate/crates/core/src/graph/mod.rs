//! Graphs on the vertex set `1..=n`.
//!
//! [`Graph`] is the simple undirected graph every algorithm in the crate
//! runs on. [`Multigraph`] carries stable edge ids for deletion and
//! contraction, [`Digraph`] allows ordered parallel arcs, and
//! [`PartialOrientation`] assigns each edge of a base graph one of the
//! five subtraffic states.

mod digraph;
pub(crate) mod io;
mod multigraph;
mod orientation;

pub use digraph::Digraph;
pub use io::{graph_to_dot, parse_digraph, parse_graph, EdgeStyle};
pub use multigraph::{MultiEdge, Multigraph};
pub use orientation::{EdgeState, PartialOrientation};

use std::fmt;

use crate::error::{Error, Result};

/// Arc structure shared by undirected graphs and digraphs.
///
/// `out_arcs(v)` yields `(w, k)` for every target `w` with `k >= 1` arcs
/// `v -> w`; `in_arcs(v)` yields `(w, k)` for every `w` with `k` arcs
/// `w -> v`. An undirected edge counts as one arc in each direction.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn out_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_;
    fn in_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_;

    /// Number of arcs `from -> to`.
    fn multiplicity(&self, from: usize, to: usize) -> usize {
        self.out_arcs(from)
            .find(|&(w, _)| w == to)
            .map_or(0, |(_, k)| k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    /// Sorted neighbor lists; index 0 unused.
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicates and out-of-range
    /// endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|u| (u, u + 1)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((1, n));
        edges.sort_unstable();
        Self::from_sorted(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Spanning subgraph keeping the edges whose indices are listed.
    pub fn spanning_subgraph(&self, indices: impl IntoIterator<Item = usize>) -> Graph {
        let mut edges: Vec<_> = indices.into_iter().map(|i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(self.n, edges)
    }

    /// Spanning subgraph selected by a bitmask over edge indices.
    pub fn spanning_subgraph_mask(&self, mask: u64) -> Graph {
        self.spanning_subgraph((0..self.edges.len()).filter(|&i| mask >> i & 1 == 1))
    }

    /// Same vertex set, with `extra` edges added (duplicates ignored).
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut all: Vec<_> = self.edges.clone();
        for &(u, v) in extra {
            if !self.has_edge(u, v) {
                all.push((u, v));
            }
        }
        Graph::new(self.n, all)
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.n + 1);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        self.n - uf.merges()
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    /// Number of vertices minus number of components, counted with a
    /// union-find over the edges.
    pub fn rank(&self) -> usize {
        self.n - self.components()
    }

    /// Image under `v -> perm[v - 1]`; `perm` must be a permutation of
    /// `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "one image per vertex");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        Graph::new(self.n, edges).expect("relabeling preserves simplicity")
    }

    /// Lexicographically least relabeled edge list over all `n!`
    /// relabelings. Equal for isomorphic graphs.
    pub fn canonical_form(&self) -> Result<Graph> {
        const CAP: usize = 8;
        if self.n > CAP {
            return Err(Error::CapExceeded { what: "vertices for canonical form", size: self.n, cap: CAP });
        }
        let mut perm: Vec<usize> = (1..=self.n).collect();
        let mut best = self.clone();
        // Heap's algorithm
        let mut c = vec![0usize; self.n];
        let mut i = 0;
        while i < self.n {
            if c[i] < i {
                perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
                let candidate = self.relabel(&perm);
                if candidate.edges < best.edges {
                    best = candidate;
                }
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        Ok(best)
    }

    /// Every labeled simple graph on `n` vertices, in bitmask order over
    /// the edges of `K_n`.
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        let k = Graph::complete(n);
        let m = k.edge_count();
        assert!(m < 64, "too many graphs to enumerate");
        (0u64..1 << m).map(move |mask| k.spanning_subgraph_mask(mask))
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn out_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().map(|&w| (w, 1))
    }

    fn in_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().map(|&w| (w, 1))
    }

    fn multiplicity(&self, from: usize, to: usize) -> usize {
        usize::from(self.has_edge(from, to))
    }
}

impl fmt::Display for Graph {
    /// The edge-list text format accepted by [`parse_graph`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Plain union-find with path halving.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    merges: usize,
}

impl UnionFind {
    pub(crate) fn new(size: usize) -> Self {
        UnionFind { parent: (0..size).collect(), merges: 0 }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.merges += 1;
        true
    }

    pub(crate) fn merges(&self) -> usize {
        self.merges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(1, 2), (2, 1)]), Err(Error::DuplicateEdge(1, 2)));
        assert_eq!(Graph::new(3, [(2, 2)]), Err(Error::Loop(2)));
        assert_eq!(
            Graph::new(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(Graph::complete(3).components(), 1);
        assert_eq!(Graph::empty(3).components(), 3);
        assert_eq!(Graph::new(4, [(1, 2), (3, 4)]).unwrap().components(), 2);
        assert_eq!(Graph::empty(0).components(), 0);
    }

    #[test]
    fn generators() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::cycle(5).edges(), &[(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(Graph::all_on(4).count(), 64);
        assert_eq!(Graph::all_on(4).filter(Graph::is_connected).count(), 38);
    }

    #[test]
    fn adjacency_view() {
        let g = Graph::path(3);
        assert_eq!(g.out_arcs(2).collect::<Vec<_>>(), vec![(1, 1), (3, 1)]);
        assert_eq!(g.multiplicity(1, 3), 0);
        assert_eq!(g.multiplicity(3, 2), 1);
    }
}
