use super::{Graph, UnionFind};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MultiEdge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl MultiEdge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// Undirected multigraph with loops. Edge ids are assigned in input order
/// and survive deletion and contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (id, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            list.push(MultiEdge { id, u, v });
        }
        Ok(Multigraph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Option<&MultiEdge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn delete_edge(&self, id: usize) -> Result<Multigraph> {
        let pos = self.position(id)?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Multigraph { n: self.n, edges })
    }

    /// Identifies the endpoints of `id`. The larger endpoint merges into
    /// the smaller one and higher labels shift down, so the result lives
    /// on `1..n-1`. Parallel edges become loops; nothing else is dropped.
    pub fn contract_edge(&self, id: usize) -> Result<Multigraph> {
        let pos = self.position(id)?;
        let e = self.edges[pos];
        if e.is_loop() {
            return Err(Error::ContractLoop(id));
        }
        let (keep, gone) = (e.u.min(e.v), e.u.max(e.v));
        let relabel = |w: usize| match w.cmp(&gone) {
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => w - 1,
            std::cmp::Ordering::Less => w,
        };
        let edges = self
            .edges
            .iter()
            .filter(|x| x.id != id)
            .map(|x| MultiEdge { id: x.id, u: relabel(x.u), v: relabel(x.v) })
            .collect();
        Ok(Multigraph { n: self.n - 1, edges })
    }

    /// Adds an edge with a fresh id (one past the largest in use).
    pub fn add_edge(&self, u: usize, v: usize) -> Result<(Multigraph, usize)> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        let id = self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        let mut edges = self.edges.clone();
        edges.push(MultiEdge { id, u, v });
        Ok((Multigraph { n: self.n, edges }, id))
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.n + 1);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        self.n - uf.merges()
    }

    /// True when deleting `id` disconnects its endpoints.
    pub fn is_bridge(&self, id: usize) -> Result<bool> {
        let e = self.edges[self.position(id)?];
        if e.is_loop() {
            return Ok(false);
        }
        let mut uf = UnionFind::new(self.n + 1);
        for x in self.edges.iter().filter(|x| x.id != id) {
            uf.union(x.u, x.v);
        }
        Ok(uf.find(e.u) != uf.find(e.v))
    }

    fn position(&self, id: usize) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.id == id)
            .ok_or(Error::UnknownEdge(id))
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| MultiEdge { id, u, v })
            .collect();
        Multigraph { n: g.vertex_count(), edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Multigraph {
        Multigraph::from(&Graph::complete(3))
    }

    fn ends(g: &Multigraph) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = g.edges().iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn delete() {
        // ids: 0 = {1,2}, 1 = {1,3}, 2 = {2,3}
        let g = k3().delete_edge(0).unwrap();
        assert_eq!(ends(&g), vec![(1, 3), (2, 3)]);
        assert_eq!(g.edges().iter().map(|e| e.id).collect::<Vec<_>>(), vec![1, 2]);

        let single = Multigraph::new(2, [(1, 2)]).unwrap();
        assert_eq!(single.delete_edge(0).unwrap().edge_count(), 0);
        assert_eq!(k3().delete_edge(7), Err(Error::UnknownEdge(7)));
    }

    #[test]
    fn contract() {
        let g = k3().contract_edge(0).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(ends(&g), vec![(1, 2), (1, 2)]);

        let p3 = Multigraph::from(&Graph::path(3)).contract_edge(0).unwrap();
        assert_eq!(ends(&p3), vec![(1, 2)]);

        let looped = Multigraph::new(1, [(1, 1)]).unwrap();
        assert_eq!(looped.contract_edge(0), Err(Error::ContractLoop(0)));
    }

    #[test]
    fn delete_then_add_restores_edges() {
        let g = k3();
        let (back, _) = g.delete_edge(1).unwrap().add_edge(1, 3).unwrap();
        assert_eq!(ends(&back), ends(&g));
    }

    #[test]
    fn bridges() {
        let g = Multigraph::from(&Graph::path(3));
        assert!(g.is_bridge(0).unwrap());
        assert!(!k3().is_bridge(0).unwrap());
    }
}
