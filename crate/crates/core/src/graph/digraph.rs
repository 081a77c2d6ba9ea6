use std::collections::BTreeMap;
use std::fmt;

use super::Adjacency;
use crate::error::{Error, Result};

/// Loopless digraph with parallel arcs. The arcs `u -> v` are numbered
/// `1..=multiplicity(u, v)`; the numbering fixes the total order on each
/// parallel class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    /// `(u, v) -> number of parallel arcs`.
    arcs: BTreeMap<(usize, usize), usize>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl Digraph {
    /// `arcs` lists `(u, v, k)`: `k` parallel arcs from `u` to `v`.
    /// Repeated pairs accumulate.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (u, v, k) in arcs {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if k > 0 {
                *map.entry((u, v)).or_insert(0) += k;
            }
        }
        let mut out = vec![Vec::new(); n + 1];
        let mut inc = vec![Vec::new(); n + 1];
        for (&(u, v), &k) in &map {
            out[u].push((v, k));
            inc[v].push((u, k));
        }
        for list in &mut inc {
            list.sort_unstable();
        }
        Ok(Digraph { n, arcs: map, out, inc })
    }

    /// Each undirected edge becomes the arc pair `(u, v)`, `(v, u)`.
    pub fn from_graph(g: &super::Graph) -> Self {
        let arcs = g.edges().iter().flat_map(|&(u, v)| [(u, v, 1), (v, u, 1)]);
        Digraph::new(g.vertex_count(), arcs).expect("simple graph is a valid digraph")
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().sum()
    }

    /// `(u, v, k)` triples in lexicographic order of `(u, v)`.
    pub fn arc_classes(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arcs.iter().map(|(&(u, v), &k)| (u, v, k))
    }

    /// Every individual arc as `(u, v, index)`, index starting at 1.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arc_classes().flat_map(|(u, v, k)| (1..=k).map(move |i| (u, v, i)))
    }
}

impl Adjacency for Digraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn out_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out[v].iter().copied()
    }

    fn in_arcs(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inc[v].iter().copied()
    }

    fn multiplicity(&self, from: usize, to: usize) -> usize {
        self.arcs.get(&(from, to)).copied().unwrap_or(0)
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.arcs.len())?;
        for (u, v, k) in self.arc_classes() {
            if k == 1 {
                writeln!(f, "{u} {v}")?;
            } else {
                writeln!(f, "{u} {v} {k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_arcs_accumulate() {
        let d = Digraph::new(3, [(2, 1, 2), (1, 2, 1), (2, 1, 1)]).unwrap();
        assert_eq!(d.multiplicity(2, 1), 3);
        assert_eq!(d.multiplicity(1, 3), 0);
        assert_eq!(d.arc_count(), 4);
        assert_eq!(d.arcs().filter(|a| a.0 == 2).map(|a| a.2).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(d.in_arcs(1).collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn loopless() {
        assert_eq!(Digraph::new(2, [(1, 1, 1)]), Err(Error::Loop(1)));
    }
}
