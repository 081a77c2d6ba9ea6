//! Edge classification against a spanning forest, and the searches whose
//! externally active edges feed the Tutte polynomial: breadth-first with a
//! queue, neighbors-first, directed, and partially directed.

use std::fmt;
use std::fmt::Write as _;

use crate::bijection::{process_order, psi};
use crate::error::{Error, Result};
use crate::graph::{EdgeState, EdgeStyle, Graph, PartialOrientation};
use crate::orders::{order_bfq, ChoiceOrder, RootedForest};

/// Snapshots of the search queue. `snapshots[t]` is the queue after `t`
/// vertices have been processed (including any refill), so there are
/// `n + 1` of them and the last is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueueTrace {
    pub snapshots: Vec<Vec<usize>>,
    /// Time of the first snapshot holding `v` (slot 0 unused).
    pub enter: Vec<usize>,
    /// Step at which `v` was processed, `1..=n` (slot 0 unused).
    pub process: Vec<usize>,
}

impl QueueTrace {
    /// Processing order.
    pub fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (1..self.process.len()).collect();
        order.sort_by_key(|&v| self.process[v]);
        order
    }

    /// Whether `u` and `v` sat in the queue together at some time.
    pub fn simultaneous(&self, u: usize, v: usize) -> bool {
        self.enter[u].max(self.enter[v]) < self.process[u].min(self.process[v])
    }

    /// Edges ordered by the first time both endpoints are in the queue, ties
    /// by the edge itself. Shown as `{{3,4},{4,8}}`.
    pub fn in_meeting_order(&self, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut out = edges.to_vec();
        out.sort_by_key(|&(u, v)| (self.enter[u].max(self.enter[v]), u.min(v), u.max(v)));
        out
    }

    /// Times `t` whose snapshot is exactly `[v]`.
    fn singleton_times(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.snapshots.iter().enumerate().filter(move |(_, q)| q.as_slice() == [v]).map(|(t, _)| t)
    }

    /// Two rows, `t` and `Q`, columns separated by ` | `.
    pub fn table(&self) -> String {
        let cells: Vec<String> = self.snapshots.iter().map(|q| snapshot_text(q)).collect();
        let mut top = String::from("t");
        let mut bottom = String::from("Q");
        for (t, cell) in cells.iter().enumerate() {
            let w = cell.chars().count().max(t.to_string().len());
            let _ = write!(top, " | {t:<w$}");
            let _ = write!(bottom, " | {cell}{}", " ".repeat(w - cell.chars().count()));
        }
        format!("{}\n{}\n", top.trim_end(), bottom.trim_end())
    }
}

/// `{{u,v},{u,v}}`
pub fn edge_set_text(edges: &[(usize, usize)]) -> String {
    let parts: Vec<_> = edges.iter().map(|(u, v)| format!("{{{u},{v}}}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn snapshot_text(q: &[usize]) -> String {
    if q.is_empty() {
        "∅".to_string()
    } else {
        let parts: Vec<_> = q.iter().map(ToString::to_string).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for QueueTrace {
    /// `(1),(3,4),…,∅`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.snapshots.iter().map(|q| snapshot_text(q)).collect();
        f.write_str(&parts.join(","))
    }
}

/// Result of a queue search: the forest, which forest edges were entered
/// along an arc, and the queue history.
struct Search {
    parent: Vec<Option<usize>>,
    via_arc: Vec<bool>,
    trace: QueueTrace,
}

/// Queue search from vertex 1. `steps(x)` lists `(u, directed)` for each
/// neighbor `u` reachable from `x`, increasing in `u`.
fn queue_search<I>(n: usize, steps: impl Fn(usize) -> I) -> Search
where
    I: IntoIterator<Item = (usize, bool)>,
{
    let mut parent = vec![None; n + 1];
    let mut via_arc = vec![false; n + 1];
    let mut visited = vec![false; n + 1];
    let mut enter = vec![0; n + 1];
    let mut process = vec![0; n + 1];
    let mut queue = std::collections::VecDeque::new();
    let mut snapshots = Vec::with_capacity(n + 1);
    let mut least = 1;
    if n > 0 {
        visited[1] = true;
        queue.push_back(1);
    }
    snapshots.push(queue.iter().copied().collect());
    for t in 1..=n {
        let x = queue.pop_front().expect("queue refilled while vertices remain");
        process[x] = t;
        for (u, directed) in steps(x) {
            if !visited[u] {
                visited[u] = true;
                parent[u] = Some(x);
                via_arc[u] = directed;
                enter[u] = t;
                queue.push_back(u);
            }
        }
        if queue.is_empty() {
            while least <= n && visited[least] {
                least += 1;
            }
            if least <= n {
                visited[least] = true;
                enter[least] = t;
                queue.push_back(least);
            }
        }
        snapshots.push(queue.iter().copied().collect());
    }
    Search { parent, via_arc, trace: QueueTrace { snapshots, enter, process } }
}

fn graph_search(h: &Graph) -> Search {
    queue_search(h.vertex_count(), |x| h.neighbors(x).iter().map(|&u| (u, false)).collect::<Vec<_>>())
}

/// Breadth-first forest: process the queue head, append its unvisited
/// neighbors in increasing order, refill an empty queue with the least
/// unvisited vertex.
pub fn bfs_forest(h: &Graph) -> (RootedForest, QueueTrace) {
    let s = graph_search(h);
    (RootedForest::from_parents_unchecked(s.parent), s.trace)
}

fn require_spanning(g: &Graph, forest: &RootedForest) -> Result<()> {
    forest.is_subgraph_of(g)
}

fn non_forest_edges<'a>(g: &'a Graph, forest: &'a RootedForest) -> impl Iterator<Item = (usize, usize)> + 'a {
    g.edges().iter().copied().filter(|&(u, v)| !forest.has_edge(u, v))
}

/// Non-forest edges whose endpoints share the queue at some time while
/// searching the forest itself.
pub fn bfs_external(g: &Graph, forest: &RootedForest) -> Result<Vec<(usize, usize)>> {
    require_spanning(g, forest)?;
    let (_, trace) = bfs_forest(&forest.to_graph());
    Ok(non_forest_edges(g, forest).filter(|&(u, v)| trace.simultaneous(u, v)).collect())
}

/// Non-forest edges `e` with `BFS(F + e) = F`, by rerunning the search.
pub fn bfs_external_by_definition(g: &Graph, forest: &RootedForest) -> Result<Vec<(usize, usize)>> {
    require_spanning(g, forest)?;
    let base = forest.to_graph();
    Ok(non_forest_edges(g, forest)
        .filter(|&e| bfs_forest(&base.with_edges(&[e]).expect("edge outside forest")).0 == *forest)
        .collect())
}

/// Partition of the edges of a graph relative to a spanning forest and
/// the process order of a choice rule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeClassification {
    pub forest: Vec<(usize, usize)>,
    /// Both endpoints roots.
    pub r1: Vec<(usize, usize)>,
    /// A root and a non-root processed before it.
    pub r2: Vec<(usize, usize)>,
    /// Non-roots `v`, `w` with `w` processed strictly between `parent(v)`
    /// and `v`.
    pub r3: Vec<(usize, usize)>,
    /// Non-forest edges that lower some value down to its final `0`.
    pub plain: Vec<(usize, usize)>,
}

impl EdgeClassification {
    pub fn redundant_count(&self) -> usize {
        self.r1.len() + self.r2.len() + self.r3.len()
    }

    pub fn style(&self, u: usize, v: usize) -> EdgeStyle {
        let e = (u.min(v), u.max(v));
        if self.forest.contains(&e) {
            EdgeStyle::Forest
        } else if self.r1.contains(&e) {
            EdgeStyle::R1
        } else if self.r2.contains(&e) {
            EdgeStyle::R2
        } else if self.r3.contains(&e) {
            EdgeStyle::R3
        } else if self.plain.contains(&e) {
            EdgeStyle::Plain
        } else {
            EdgeStyle::Hidden
        }
    }
}

pub fn classify_edges(g: &Graph, choice: &ChoiceOrder, forest: &RootedForest) -> Result<EdgeClassification> {
    require_spanning(g, forest)?;
    let pos = process_order(choice, forest)?.positions();
    let straddles = |v: usize, w: usize| {
        forest.parent(v).is_some_and(|p| pos[p] < pos[w] && pos[w] < pos[v])
    };
    let mut out = EdgeClassification::default();
    for &(u, v) in g.edges() {
        let bucket = if forest.has_edge(u, v) {
            &mut out.forest
        } else {
            match (forest.is_root(u), forest.is_root(v)) {
                (true, true) => &mut out.r1,
                (true, false) if pos[v] < pos[u] => &mut out.r2,
                (false, true) if pos[u] < pos[v] => &mut out.r2,
                (false, false) if straddles(u, v) || straddles(v, u) => &mut out.r3,
                _ => &mut out.plain,
            }
        };
        bucket.push((u, v));
    }
    Ok(out)
}

/// The three summands of `|E| = Σ f(v) + |E(F)| + |R|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeIdentity {
    pub edges: usize,
    pub value_sum: u64,
    pub forest_edges: usize,
    pub redundant: usize,
}

/// Checks `|E| = Σ_{f(v) finite} f(v) + |E(F)| + |R1 ∪ R2 ∪ R3|` with
/// `f = psi(F)`.
pub fn verify_edge_identity(g: &Graph, choice: &ChoiceOrder, forest: &RootedForest) -> Result<EdgeIdentity> {
    let (f, _) = psi(g, choice, forest)?;
    let classes = classify_edges(g, choice, forest)?;
    let id = EdgeIdentity {
        edges: g.edge_count(),
        value_sum: f.finite_sum(),
        forest_edges: forest.edge_count(),
        redundant: classes.redundant_count(),
    };
    if id.edges as u64 != id.value_sum + (id.forest_edges + id.redundant) as u64 {
        return Err(Error::IdentityViolated(format!(
            "{} edges but {} + {} + {} for forest {:?}",
            id.edges,
            id.value_sum,
            id.forest_edges,
            id.redundant,
            forest.edges()
        )));
    }
    Ok(id)
}

/// Neighbors-first search: from the least unmarked vertex, searching `v`
/// marks all its unmarked neighbors (adding those edges), then searches
/// them recursively in increasing order.
pub fn nfs_forest(h: &Graph) -> RootedForest {
    let n = h.vertex_count();
    let mut parent = vec![None; n + 1];
    let mut marked = vec![false; n + 1];
    for start in 1..=n {
        if marked[start] {
            continue;
        }
        marked[start] = true;
        // each frame: vertices marked by one search, and the next to recurse into
        let mut frames: Vec<(Vec<usize>, usize)> = vec![(vec![start], 0)];
        while let Some((batch, next)) = frames.last_mut() {
            let Some(&v) = batch.get(*next) else {
                frames.pop();
                continue;
            };
            *next += 1;
            let found: Vec<usize> = h.neighbors(v).iter().copied().filter(|&w| !marked[w]).collect();
            for &w in &found {
                marked[w] = true;
                parent[w] = Some(v);
            }
            if !found.is_empty() {
                frames.push((found, 0));
            }
        }
    }
    RootedForest::from_parents_unchecked(parent)
}

/// Non-forest edges `e` with `NFS(F + e) = F`.
pub fn nfs_external(g: &Graph, forest: &RootedForest) -> Result<Vec<(usize, usize)>> {
    require_spanning(g, forest)?;
    let base = forest.to_graph();
    Ok(non_forest_edges(g, forest)
        .filter(|&e| nfs_forest(&base.with_edges(&[e]).expect("edge outside forest")) == *forest)
        .collect())
}

/// Forest of a queue search over a partial orientation, as found by
/// processing the queue head and appending every unvisited `u` with an arc
/// `x -> u` or an undirected edge `{x, u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrafficForest {
    pub forest: RootedForest,
    /// Forest edges `(parent, child)` entered along an arc, by child.
    pub arcs: Vec<(usize, usize)>,
    pub trace: QueueTrace,
}

pub fn traffic_bfs(k: &PartialOrientation) -> TrafficForest {
    let n = k.graph().vertex_count();
    let s = queue_search(n, |x| k.steps(x).map(|s| (s.to, s.directed)).collect::<Vec<_>>());
    let arcs = (1..=n).filter(|&v| s.via_arc[v]).map(|v| (s.parent[v].expect("arc has a tail"), v)).collect();
    TrafficForest { forest: RootedForest::from_parents_unchecked(s.parent), arcs, trace: s.trace }
}

/// Directed search forest of a subdigraph (no undirected states).
pub fn dbfs_forest(d: &PartialOrientation) -> RootedForest {
    traffic_bfs(d).forest
}

/// The forest as a subdigraph, each edge directed away from its root.
pub fn outward<'g>(g: &'g Graph, forest: &RootedForest) -> Result<PartialOrientation<'g>> {
    require_spanning(g, forest)?;
    let mut d = PartialOrientation::uniform(g, EdgeState::Absent);
    for v in 1..=forest.vertex_count() {
        if let Some(p) = forest.parent(v) {
            d.set(p, v, if p < v { EdgeState::Fwd } else { EdgeState::Bwd });
        }
    }
    Ok(d)
}

fn with_arc(state: EdgeState, lo_to_hi: bool) -> EdgeState {
    match (state, lo_to_hi) {
        (EdgeState::Absent, true) => EdgeState::Fwd,
        (EdgeState::Absent, false) => EdgeState::Bwd,
        _ => EdgeState::Both,
    }
}

/// Arcs `(from, to)` outside the outward forest whose addition leaves the
/// directed search forest unchanged, by rerunning the search.
pub fn dbfs_external_by_definition(g: &Graph, forest: &RootedForest) -> Result<Vec<(usize, usize)>> {
    let base = outward(g, forest)?;
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for (from, to) in [(u, v), (v, u)] {
            if forest.parent(to) == Some(from) {
                continue;
            }
            let mut d = base.clone();
            d.set(u, v, with_arc(base.state(u, v).expect("base edge"), from == u));
            if dbfs_forest(&d) == *forest {
                out.push((from, to));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Directed externally active arcs by edge class, with `u` before `v` in
/// the queue order: a forest edge admits `v -> u`; an externally active
/// edge admits both arcs; any other edge admits `v -> u`.
pub fn dbfs_external(g: &Graph, forest: &RootedForest) -> Result<Vec<(usize, usize)>> {
    let active = bfs_external(g, forest)?;
    let mut pos = vec![0; forest.vertex_count() + 1];
    for (i, v) in order_bfq(forest).into_iter().enumerate() {
        pos[v] = i;
    }
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        let (u, v) = if pos[a] < pos[b] { (a, b) } else { (b, a) };
        out.push((v, u));
        if active.contains(&(a, b)) {
            out.push((u, v));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The three externally active sets of a forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivitySets {
    pub bfs: Vec<(usize, usize)>,
    pub nfs: Vec<(usize, usize)>,
    pub directed: Vec<(usize, usize)>,
}

pub fn activity_sets(g: &Graph, forest: &RootedForest) -> Result<ActivitySets> {
    Ok(ActivitySets {
        bfs: bfs_external(g, forest)?,
        nfs: nfs_external(g, forest)?,
        directed: dbfs_external(g, forest)?,
    })
}

fn require_complete(g: &Graph, forest: &RootedForest) -> Result<()> {
    if !g.is_complete() {
        return Err(Error::NotComplete);
    }
    require_spanning(g, forest)
}

/// Joins the root of each tree after the first to the last vertex, in
/// queue order, of the tree before it.
pub fn merge(g: &Graph, forest: &RootedForest) -> Result<RootedForest> {
    require_complete(g, forest)?;
    let order = order_bfq(forest);
    let mut last_in_tree = vec![0; forest.vertex_count() + 1];
    for &v in &order {
        last_in_tree[forest.root_of(v)] = v;
    }
    let mut parent = forest.parents().to_vec();
    for pair in forest.roots().windows(2) {
        parent[pair[1]] = Some(last_in_tree[pair[0]]);
    }
    RootedForest::from_parents(parent)
}

/// Edges `e` of a spanning tree of a complete graph with
/// `merge(T - e) = T`, as `(parent, child)`.
pub fn critical_edges(g: &Graph, tree: &RootedForest) -> Result<Vec<(usize, usize)>> {
    require_complete(g, tree)?;
    if tree.component_count() != 1 {
        return Err(Error::Disconnected);
    }
    let mut out = Vec::new();
    for v in 2..=tree.vertex_count() {
        let p = tree.parent(v).expect("non-root");
        let mut cut = tree.parents().to_vec();
        cut[v] = None;
        let cut = RootedForest::from_edges(
            tree.vertex_count(),
            &(1..cut.len()).filter_map(|x| cut[x].map(|q| (x, q))).collect::<Vec<_>>(),
        )?;
        if merge(g, &cut)? == *tree {
            out.push((p, v));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Critical edges read off the queue of the tree: `v` is queued alone,
/// exactly once, and is least among the vertices processed from then on.
pub fn critical_edges_by_queue(tree: &RootedForest) -> Result<Vec<(usize, usize)>> {
    if tree.component_count() != 1 {
        return Err(Error::Disconnected);
    }
    let (_, trace) = bfs_forest(&tree.to_graph());
    let order = trace.order();
    let mut out = Vec::new();
    for (i, &v) in order.iter().enumerate().skip(1) {
        let alone = trace.singleton_times(v).count() == 1
            && trace.snapshots.iter().filter(|q| q.contains(&v)).count() == 1;
        let least_after = order[i..].iter().all(|&w| w >= v);
        if alone && least_after {
            out.push((tree.parent(v).expect("non-root"), v));
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Checks the classical parking condition: sorted increasingly, the
/// `i`-th term (from 0) is at most `i`.
pub fn is_classical_parking(b: &[u64]) -> bool {
    let mut sorted = b.to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &x)| x <= i as u64)
}

/// Number of terms `b_i = j` that have exactly `j` smaller terms and
/// `n - 1 - j` larger terms, and exceed every earlier term.
pub fn alpha(b: &[u64]) -> Result<usize> {
    if !is_classical_parking(b) {
        return Err(Error::NotParkingFunction(b.to_vec()));
    }
    let n = b.len() as u64;
    let mut max_so_far: Option<u64> = None;
    let mut count = 0;
    for &j in b {
        let smaller = b.iter().filter(|&&x| x < j).count() as u64;
        let larger = b.iter().filter(|&&x| x > j).count() as u64;
        let record = max_so_far.is_none_or(|m| j > m);
        if smaller == j && j < n && larger == n - 1 - j && record {
            count += 1;
        }
        max_so_far = Some(max_so_far.map_or(j, |m| m.max(j)));
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forest(n: usize, edges: &[(usize, usize)]) -> RootedForest {
        RootedForest::from_edges(n, edges).unwrap()
    }

    const F11: [(usize, usize); 9] = [(1, 3), (1, 4), (3, 8), (4, 7), (7, 6), (7, 9), (2, 5), (2, 10), (5, 11)];
    const E11: [(usize, usize); 6] = [(3, 4), (4, 8), (7, 8), (6, 9), (5, 10), (10, 11)];

    fn h11() -> Graph {
        Graph::new(11, F11.iter().chain(&E11).copied()).unwrap()
    }

    #[test]
    fn eleven_vertex_queue_trace() {
        let (f, trace) = bfs_forest(&h11());
        assert_eq!(f, forest(11, &F11));
        assert_eq!(trace.to_string(), "(1),(3,4),(4,8),(8,7),(7),(6,9),(9),(2),(5,10),(10,11),(11),∅");
        let mut active = E11.to_vec();
        active.sort_unstable();
        assert_eq!(bfs_external(&h11(), &f).unwrap(), active);
        assert_eq!(bfs_external_by_definition(&h11(), &f).unwrap(), active);
        assert_eq!(
            edge_set_text(&trace.in_meeting_order(&active)),
            "{{3,4},{4,8},{7,8},{6,9},{5,10},{10,11}}"
        );
    }

    #[test]
    fn small_searches() {
        let (f, trace) = bfs_forest(&Graph::empty(3));
        assert_eq!(f.edge_count(), 0);
        assert_eq!(trace.to_string(), "(1),(2),(3),∅");
        let p = Graph::path(4);
        assert_eq!(bfs_forest(&p).0.to_graph(), p);
        assert_eq!(nfs_forest(&p).to_graph(), p);
        let k3 = Graph::complete(3);
        assert_eq!(nfs_forest(&k3).edges(), vec![(1, 2), (1, 3)]);
    }

    #[test]
    fn triangle_activity() {
        let k3 = Graph::complete(3);
        let star = forest(3, &[(1, 2), (1, 3)]);
        let path = forest(3, &[(1, 2), (2, 3)]);
        assert_eq!(bfs_external(&k3, &star).unwrap(), vec![(2, 3)]);
        assert_eq!(bfs_external(&k3, &path).unwrap(), vec![]);
        assert_eq!(nfs_external(&k3, &star).unwrap(), vec![(2, 3)]);
        assert_eq!(dbfs_external(&k3, &star).unwrap(), vec![(2, 1), (2, 3), (3, 1), (3, 2)]);
        assert_eq!(dbfs_external_by_definition(&k3, &star).unwrap(), dbfs_external(&k3, &star).unwrap());
        let edge = Graph::path(2);
        assert_eq!(dbfs_external(&edge, &forest(2, &[(1, 2)])).unwrap(), vec![(2, 1)]);
    }

    #[test]
    fn classification_examples() {
        let k3 = Graph::complete(3);
        let bfsq = ChoiceOrder::BreadthFirstQueue;
        let c = classify_edges(&k3, &bfsq, &forest(3, &[(1, 2), (1, 3)])).unwrap();
        assert_eq!((c.r1.len(), c.r2.len(), c.r3.clone()), (0, 0, vec![(2, 3)]));
        let c = classify_edges(&k3, &bfsq, &forest(3, &[(1, 2)])).unwrap();
        assert_eq!((c.r1.clone(), c.r2.clone()), (vec![(1, 3)], vec![(2, 3)]));
        let c = classify_edges(&k3, &bfsq, &RootedForest::edgeless(3)).unwrap();
        assert_eq!(c.r1.len(), 3);

        let id = verify_edge_identity(&k3, &bfsq, &forest(3, &[(1, 2), (1, 3)])).unwrap();
        assert_eq!((id.value_sum, id.forest_edges, id.redundant), (0, 2, 1));
        let id = verify_edge_identity(&k3, &bfsq, &forest(3, &[(2, 3)])).unwrap();
        assert_eq!((id.value_sum, id.forest_edges, id.redundant), (1, 1, 1));
    }

    #[test]
    fn traffic_search() {
        let k3 = Graph::complete(3);
        let mut k = PartialOrientation::uniform(&k3, EdgeState::Undirected);
        let t = traffic_bfs(&k);
        assert_eq!(t.forest, bfs_forest(&k3).0);
        assert!(t.arcs.is_empty());
        k.set(1, 2, EdgeState::Fwd);
        k.set(2, 3, EdgeState::Absent);
        let t = traffic_bfs(&k);
        assert_eq!(t.forest.edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(t.arcs, vec![(1, 2)]);
        let t = traffic_bfs(&PartialOrientation::uniform(&k3, EdgeState::Absent));
        assert_eq!(t.forest.edge_count(), 0);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&[3, 0, 0, 2]), Ok(1));
        assert_eq!(alpha(&[0, 1]), Ok(2));
        assert_eq!(alpha(&[1, 0]), Ok(1));
        assert_eq!(alpha(&[0, 0]), Ok(0));
        assert_eq!(alpha(&[1, 1]), Err(Error::NotParkingFunction(vec![1, 1])));
    }

    #[test]
    fn merge_and_critical_edges() {
        let k4 = Graph::complete(4);
        let tree = forest(4, &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(merge(&k4, &tree).unwrap(), tree);
        assert_eq!(merge(&k4, &forest(4, &[(1, 2)])).unwrap(), tree);
        assert_eq!(critical_edges(&k4, &tree).unwrap(), vec![(1, 2), (2, 3), (3, 4)]);
        assert_eq!(critical_edges_by_queue(&tree).unwrap(), critical_edges(&k4, &tree).unwrap());
        assert_eq!(merge(&Graph::path(4), &tree), Err(Error::NotComplete));
    }
}
