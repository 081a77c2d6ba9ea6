//! Rooted spanning forests, their traversal orders, and choice functions.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, UnionFind};

/// Spanning forest on `1..=n` in which every tree is rooted at its least
/// vertex. `parent[v]` is `None` exactly for roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootedForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

impl RootedForest {
    pub fn edgeless(n: usize) -> Self {
        Self::from_parents_unchecked(vec![None; n + 1])
    }

    /// Orients an acyclic undirected edge set toward the least vertex of
    /// each component.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n + 1];
        let mut uf = UnionFind::new(n + 1);
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if !uf.union(u, v) {
                return Err(Error::Cycle(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![None; n + 1];
        let mut seen = vec![false; n + 1];
        for r in 1..=n {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let mut stack = vec![r];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some(x);
                        stack.push(y);
                    }
                }
            }
        }
        Ok(Self::from_parents_unchecked(parent))
    }

    /// Validates parent links: in range, acyclic, and each root is the least
    /// vertex of its tree. Index 0 of `parent` is ignored.
    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len().saturating_sub(1);
        for (v, p) in parent.iter().enumerate().skip(1) {
            if let Some(p) = *p {
                if p == 0 || p > n {
                    return Err(Error::VertexOutOfRange { vertex: p, n });
                }
                if p == v {
                    return Err(Error::Loop(v));
                }
            }
        }
        let mut root_of = vec![0usize; n + 1];
        for v in 1..=n {
            let mut x = v;
            let mut steps = 0;
            while let Some(p) = parent[x] {
                x = p;
                steps += 1;
                if steps > n {
                    return Err(Error::Cycle(v));
                }
            }
            root_of[v] = x;
        }
        for v in 1..=n {
            if v < root_of[v] {
                return Err(Error::RootNotLeast { vertex: root_of[v], least: v });
            }
        }
        Ok(Self::from_parents_unchecked(parent))
    }

    pub(crate) fn from_parents_unchecked(mut parent: Vec<Option<usize>>) -> Self {
        if parent.is_empty() {
            parent.push(None);
        }
        let n = parent.len() - 1;
        let mut children = vec![Vec::new(); n + 1];
        let mut roots = Vec::new();
        for v in 1..=n {
            match parent[v] {
                Some(p) => children[p].push(v),
                None => roots.push(v),
            }
        }
        RootedForest { parent, children, roots }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children in increasing order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Roots in increasing order.
    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.parent[v].is_none()
    }

    pub fn component_count(&self) -> usize {
        self.roots.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count() - self.roots.len()
    }

    /// Edges `(min, max)` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = (1..=self.vertex_count())
            .filter_map(|v| self.parent[v].map(|p| (v.min(p), v.max(p))))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    pub fn root_of(&self, mut v: usize) -> usize {
        while let Some(p) = self.parent[v] {
            v = p;
        }
        v
    }

    /// Number of edges between `v` and its root.
    pub fn height(&self, mut v: usize) -> usize {
        let mut h = 0;
        while let Some(p) = self.parent[v] {
            v = p;
            h += 1;
        }
        h
    }

    /// True when `a` lies on the path from `d` to its root (`a == d`
    /// included).
    pub fn is_ancestor(&self, a: usize, mut d: usize) -> bool {
        loop {
            if a == d {
                return true;
            }
            match self.parent[d] {
                Some(p) => d = p,
                None => return false,
            }
        }
    }

    /// The forest viewed as a graph.
    pub fn to_graph(&self) -> Graph {
        Graph::new(self.vertex_count(), self.edges()).expect("forest edges are simple")
    }

    pub fn is_subgraph_of(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() != self.vertex_count() {
            return Err(Error::DomainMismatch { expected: g.vertex_count(), got: self.vertex_count() });
        }
        match self.edges().into_iter().find(|&(u, v)| !g.has_edge(u, v)) {
            Some((u, v)) => Err(Error::NotSubgraph(u, v)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for RootedForest {
    /// Edge-list text (parseable as a graph).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = self.edges();
        writeln!(f, "{} {}", self.vertex_count(), edges.len())?;
        for (u, v) in edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for RootedForest {
    type Err = Error;

    /// Same edge-list text as a graph; roots are the least vertices.
    fn from_str(text: &str) -> Result<Self> {
        let g = crate::graph::parse_graph(text)?;
        RootedForest::from_edges(g.vertex_count(), g.edges())
    }
}

/// Depth-first (preorder) order: trees by root, parents before children,
/// siblings by vertex index, subtrees contiguous.
pub fn order_df(forest: &RootedForest) -> Vec<usize> {
    let mut out = Vec::with_capacity(forest.vertex_count());
    for &r in forest.roots() {
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            out.push(v);
            stack.extend(forest.children(v).iter().rev());
        }
    }
    out
}

/// Breadth-first order: trees by root, then by height, then by vertex index.
pub fn order_bf(forest: &RootedForest) -> Vec<usize> {
    let n = forest.vertex_count();
    let mut keyed: Vec<_> = (1..=n).map(|v| (forest.root_of(v), forest.height(v), v)).collect();
    keyed.sort_unstable();
    keyed.into_iter().map(|(_, _, v)| v).collect()
}

/// Breadth-first order with a queue: children of earlier vertices come
/// first, siblings by vertex index.
pub fn order_bfq(forest: &RootedForest) -> Vec<usize> {
    let mut out = Vec::with_capacity(forest.vertex_count());
    for &r in forest.roots() {
        let mut queue = VecDeque::from([r]);
        while let Some(v) = queue.pop_front() {
            out.push(v);
            queue.extend(forest.children(v));
        }
    }
    out
}

/// A choice function: picks the next vertex to process from the pending
/// candidates of a partially built forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ChoiceOrder {
    /// Least candidate in the given priority list (earlier = preferred).
    /// Vertices not listed rank after the listed ones, by index.
    Ranking(Vec<usize>),
    DepthFirst,
    BreadthFirst,
    BreadthFirstQueue,
    /// Most recently added candidate.
    Stack,
    /// Second-smallest candidate by index, or the only one.
    SecondMin,
}

impl ChoiceOrder {
    /// The six built-in rules, with the identity ranking.
    pub fn builtins() -> Vec<ChoiceOrder> {
        vec![
            ChoiceOrder::Ranking(Vec::new()),
            ChoiceOrder::DepthFirst,
            ChoiceOrder::BreadthFirst,
            ChoiceOrder::BreadthFirstQueue,
            ChoiceOrder::Stack,
            ChoiceOrder::SecondMin,
        ]
    }

    /// Whether pending candidates must be kept in insertion order.
    pub fn is_ordered(&self) -> bool {
        matches!(self, ChoiceOrder::Stack | ChoiceOrder::BreadthFirstQueue)
    }

    /// Picks from `pending` (insertion order, each batch of newly found
    /// vertices appended in increasing index). `forest` holds the edges
    /// found so far; vertices not yet reached are isolated in it.
    pub fn choose(&self, forest: &RootedForest, pending: &[usize]) -> Result<usize> {
        let (&first, rest) = pending.split_first().ok_or(Error::EmptyCandidates)?;
        if rest.is_empty() {
            return Ok(first);
        }
        let by_position = |order: Vec<usize>| {
            let mut pos = vec![usize::MAX; forest.vertex_count() + 1];
            for (i, v) in order.into_iter().enumerate() {
                pos[v] = i;
            }
            *pending.iter().min_by_key(|&&v| pos[v]).expect("nonempty")
        };
        Ok(match self {
            ChoiceOrder::Ranking(list) => {
                let rank = |v: usize| list.iter().position(|&x| x == v).unwrap_or(list.len() + v);
                *pending.iter().min_by_key(|&&v| rank(v)).expect("nonempty")
            }
            ChoiceOrder::DepthFirst => by_position(order_df(forest)),
            ChoiceOrder::BreadthFirst => by_position(order_bf(forest)),
            ChoiceOrder::BreadthFirstQueue => by_position(order_bfq(forest)),
            ChoiceOrder::Stack => *pending.last().expect("nonempty"),
            ChoiceOrder::SecondMin => {
                let mut sorted = pending.to_vec();
                sorted.sort_unstable();
                sorted[1]
            }
        })
    }
}

impl fmt::Display for ChoiceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChoiceOrder::Ranking(list) if list.is_empty() => f.write_str("ranking"),
            ChoiceOrder::Ranking(list) => {
                let parts: Vec<_> = list.iter().map(ToString::to_string).collect();
                write!(f, "ranking:{}", parts.join(","))
            }
            ChoiceOrder::DepthFirst => f.write_str("dfs"),
            ChoiceOrder::BreadthFirst => f.write_str("bfs"),
            ChoiceOrder::BreadthFirstQueue => f.write_str("bfsq"),
            ChoiceOrder::Stack => f.write_str("stack"),
            ChoiceOrder::SecondMin => f.write_str("secondmin"),
        }
    }
}

impl FromStr for ChoiceOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadChoice(s.to_string());
        Ok(match s {
            "ranking" => ChoiceOrder::Ranking(Vec::new()),
            "dfs" => ChoiceOrder::DepthFirst,
            "bfs" => ChoiceOrder::BreadthFirst,
            "bfsq" => ChoiceOrder::BreadthFirstQueue,
            "stack" => ChoiceOrder::Stack,
            "secondmin" => ChoiceOrder::SecondMin,
            _ => {
                let list = s.strip_prefix("ranking:").ok_or_else(bad)?;
                let perm: Vec<usize> = list
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?;
                let mut check = perm.clone();
                check.sort_unstable();
                check.dedup();
                if check.len() != perm.len() || check.first() == Some(&0) {
                    return Err(bad());
                }
                ChoiceOrder::Ranking(perm)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The six-vertex example tree.
    fn t_star() -> RootedForest {
        RootedForest::from_edges(6, &[(1, 2), (2, 3), (2, 6), (1, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn example_tree_orders() {
        let t = t_star();
        assert_eq!(order_df(&t), vec![1, 2, 3, 6, 4, 5]);
        assert_eq!(order_bf(&t), vec![1, 2, 4, 3, 5, 6]);
        assert_eq!(order_bfq(&t), vec![1, 2, 4, 3, 6, 5]);
    }

    #[test]
    fn small_orders() {
        let single = RootedForest::edgeless(1);
        assert_eq!(order_df(&single), vec![1]);
        let star = RootedForest::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(order_df(&star), vec![1, 2, 3, 4]);
        assert_eq!(order_bf(&star), order_bfq(&star));
        let path = RootedForest::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(order_bf(&path), vec![1, 2, 3]);
        let two = RootedForest::edgeless(2);
        assert_eq!(order_bf(&two), vec![1, 2]);
        let split = RootedForest::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(order_bfq(&split), vec![1, 2, 3]);
    }

    #[test]
    fn forest_validation() {
        assert_eq!(RootedForest::from_edges(3, &[(1, 2), (2, 3), (1, 3)]), Err(Error::Cycle(1)));
        assert_eq!(
            RootedForest::from_parents(vec![None, Some(2), None]),
            Err(Error::RootNotLeast { vertex: 2, least: 1 })
        );
        assert!(matches!(
            RootedForest::from_parents(vec![None, None, Some(3), Some(2)]),
            Err(Error::Cycle(_))
        ));
        let f = RootedForest::from_parents(vec![None, None, Some(1), None]).unwrap();
        assert_eq!(f.roots(), &[1, 3]);
        assert_eq!(f.edges(), vec![(1, 2)]);
    }

    #[test]
    fn choose_examples() {
        let f = RootedForest::edgeless(9);
        assert_eq!(ChoiceOrder::SecondMin.choose(&f, &[3, 5, 7]), Ok(5));
        assert_eq!(ChoiceOrder::SecondMin.choose(&f, &[7, 3, 5]), Ok(5));
        assert_eq!(ChoiceOrder::Ranking(vec![]).choose(&f, &[4, 2, 9]), Ok(2));
        assert_eq!(ChoiceOrder::Ranking(vec![9, 4]).choose(&f, &[4, 2, 9]), Ok(9));
        assert_eq!(ChoiceOrder::Stack.choose(&f, &[4, 2, 9]), Ok(9));
        for c in ChoiceOrder::builtins() {
            assert_eq!(c.choose(&f, &[6]), Ok(6));
            assert_eq!(c.choose(&f, &[]), Err(Error::EmptyCandidates));
        }
    }

    #[test]
    fn choose_by_forest_order() {
        // 1 -> {2, 4}, 2 -> {3, 6}, 4 -> {5}; pending leaves 3, 6, 5
        let t = t_star();
        assert_eq!(ChoiceOrder::DepthFirst.choose(&t, &[5, 6, 3]), Ok(3));
        assert_eq!(ChoiceOrder::BreadthFirst.choose(&t, &[6, 5]), Ok(5));
        assert_eq!(ChoiceOrder::BreadthFirstQueue.choose(&t, &[5, 6]), Ok(6));
    }

    #[test]
    fn choice_text_round_trip() {
        for text in ["ranking", "ranking:3,1,2", "dfs", "bfs", "bfsq", "stack", "secondmin"] {
            assert_eq!(text.parse::<ChoiceOrder>().unwrap().to_string(), text);
        }
        assert!("ranking:1,1".parse::<ChoiceOrder>().is_err());
        assert!("random".parse::<ChoiceOrder>().is_err());
    }
}
