use super::{Graph, UnionFind};

/// State of one base edge `{u, v}` (`u < v`) in a subdigraph or subtraffic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    Absent,
    /// The arc `u -> v`.
    Fwd,
    /// The arc `v -> u`.
    Bwd,
    /// Both arcs.
    Both,
    Undirected,
}

impl EdgeState {
    pub const SUBDIGRAPH: [EdgeState; 4] =
        [EdgeState::Absent, EdgeState::Fwd, EdgeState::Bwd, EdgeState::Both];
    pub const SUBTRAFFIC: [EdgeState; 5] = [
        EdgeState::Absent,
        EdgeState::Fwd,
        EdgeState::Bwd,
        EdgeState::Both,
        EdgeState::Undirected,
    ];

    /// Contribution to `|E(K)|`.
    pub fn weight(self) -> usize {
        match self {
            EdgeState::Absent => 0,
            EdgeState::Both => 2,
            _ => 1,
        }
    }

    /// Whether `from` can reach `to` across this edge, where `(lo, hi)`
    /// are the canonical endpoints.
    fn passes(self, lo: usize, from: usize) -> bool {
        match self {
            EdgeState::Absent => false,
            EdgeState::Fwd => from == lo,
            EdgeState::Bwd => from != lo,
            EdgeState::Both | EdgeState::Undirected => true,
        }
    }
}

/// Per-edge states over a base graph: a subdigraph when no edge is
/// `Undirected`, a subtraffic in general.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrientation<'g> {
    graph: &'g Graph,
    states: Vec<EdgeState>,
}

/// One way out of a vertex in a partial orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub to: usize,
    /// True when the arc `from -> to` is present; false when only the
    /// undirected edge is.
    pub directed: bool,
}

impl<'g> PartialOrientation<'g> {
    /// `states` is aligned with `graph.edges()`.
    pub fn new(graph: &'g Graph, states: Vec<EdgeState>) -> Self {
        assert_eq!(states.len(), graph.edge_count(), "one state per base edge");
        PartialOrientation { graph, states }
    }

    pub fn uniform(graph: &'g Graph, state: EdgeState) -> Self {
        Self::new(graph, vec![state; graph.edge_count()])
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn state(&self, u: usize, v: usize) -> Option<EdgeState> {
        self.graph.edge_index(u, v).map(|i| self.states[i])
    }

    pub fn set(&mut self, u: usize, v: usize, state: EdgeState) {
        let i = self.graph.edge_index(u, v).expect("edge of the base graph");
        self.states[i] = state;
    }

    /// `|E(K)|`: Absent 0, Both 2, every other state 1.
    pub fn edge_weight(&self) -> usize {
        self.states.iter().map(|s| s.weight()).sum()
    }

    /// Neighbors of `from` reachable in one step, in increasing order.
    pub fn steps(&self, from: usize) -> impl Iterator<Item = Step> + '_ {
        self.graph.neighbors(from).iter().filter_map(move |&to| {
            let state = self.states[self.graph.edge_index(from, to)?];
            let lo = from.min(to);
            state.passes(lo, from).then(|| Step {
                to,
                directed: state != EdgeState::Undirected,
            })
        })
    }

    /// Number of trees a directed breadth-first search grows: the vertices
    /// not reachable from any smaller vertex. Arcs are followed in their
    /// direction, undirected edges either way. On an undirected state
    /// assignment this is the ordinary component count.
    pub fn components(&self) -> usize {
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n + 1];
        let mut roots = 0;
        let mut stack = Vec::new();
        for r in 1..=n {
            if seen[r] {
                continue;
            }
            roots += 1;
            seen[r] = true;
            stack.push(r);
            while let Some(x) = stack.pop() {
                for s in self.steps(x) {
                    if !seen[s.to] {
                        seen[s.to] = true;
                        stack.push(s.to);
                    }
                }
            }
        }
        roots
    }

    /// Components of the underlying undirected graph of present edges.
    pub fn weak_components(&self) -> usize {
        let n = self.graph.vertex_count();
        let mut uf = UnionFind::new(n + 1);
        for (&(u, v), s) in self.graph.edges().iter().zip(&self.states) {
            if *s != EdgeState::Absent {
                uf.union(u, v);
            }
        }
        n - uf.merges()
    }
}
