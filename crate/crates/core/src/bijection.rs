//! The bijection between multiparking functions and spanning forests.
//!
//! [`phi`] runs the value-decrement process: starting from vertex 1, the
//! chosen pending vertex is processed and every unprocessed neighbor loses
//! one unit of value; a vertex whose value drops below zero is found by
//! the vertex just processed and joins the pending collection. [`psi`]
//! recovers the function from the forest by replaying the same process
//! order. Both are parameterized by a [`ChoiceOrder`] and have directed
//! counterparts over [`Digraph`]s with parallel arcs.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Digraph, Graph};
use crate::orders::{ChoiceOrder, RootedForest};
use crate::parking::{is_multiparking_burning, Burning, ExtNat, VertexFunction};

/// One time step of the process. Step 0 is the initial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessStep {
    /// Vertex processed at this step; `None` at time 0.
    pub processed: Option<usize>,
    /// Vertices found by `processed`, increasing.
    pub found: Vec<usize>,
    /// Pending vertices after the step, in insertion order.
    pub pending: Vec<usize>,
    /// The pending collection was empty and got the least unprocessed
    /// vertex.
    pub refilled: bool,
    /// Values after the step, indexed by vertex (slot 0 unused); `None` is
    /// `∞`. Values keep decreasing below `-1`.
    pub values: Vec<Option<i64>>,
}

/// Full record of one run of the value-decrement process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProcessTrace {
    pub choice: ChoiceOrder,
    pub steps: Vec<ProcessStep>,
}

impl ProcessTrace {
    /// Vertices in the order they were processed.
    pub fn order(&self) -> ProcessOrder {
        ProcessOrder(self.steps.iter().filter_map(|s| s.processed).collect())
    }

    /// Values after the last step.
    pub fn final_values(&self) -> &[Option<i64>] {
        &self.steps.last().expect("trace has a time-0 step").values
    }

    /// Pending collection after step `t`, next vertex first. Ordered
    /// collections keep their discipline for the rest; sets list the rest
    /// increasing.
    pub fn pending_display(&self, t: usize) -> Vec<usize> {
        let pending = &self.steps[t].pending;
        let Some(next) = self.steps.get(t + 1).and_then(|s| s.processed) else {
            return pending.clone();
        };
        let mut rest: Vec<usize> = pending.iter().copied().filter(|&v| v != next).collect();
        match self.choice {
            ChoiceOrder::Stack => rest.reverse(),
            ChoiceOrder::BreadthFirstQueue => {}
            _ => rest.sort_unstable(),
        }
        let mut out = vec![next];
        out.extend(rest);
        out
    }

    /// Rows `t`, `Q_t`, `P_t`, columns separated by ` | `. Ordered
    /// collections print in parentheses, sets in braces.
    pub fn table(&self) -> String {
        let (open, close) = if self.choice.is_ordered() { ("(", ")") } else { ("{", "}") };
        let set = |items: &[usize], open: &str, close: &str| {
            if items.is_empty() {
                "∅".to_string()
            } else {
                let parts: Vec<_> = items.iter().map(ToString::to_string).collect();
                format!("{open}{}{close}", parts.join(","))
            }
        };
        let mut t_row = vec!["t".to_string()];
        let mut q_row = vec!["Q_t".to_string()];
        let mut p_row = vec!["P_t".to_string()];
        let mut done = Vec::new();
        for (t, step) in self.steps.iter().enumerate() {
            if let Some(v) = step.processed {
                done.push(v);
                done.sort_unstable();
            }
            t_row.push(t.to_string());
            q_row.push(set(&self.pending_display(t), open, close));
            p_row.push(set(&done, "{", "}"));
        }
        let widths: Vec<usize> = (0..t_row.len())
            .map(|c| [&t_row, &q_row, &p_row].iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in [&t_row, &q_row, &p_row] {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, &w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
        }
        out
    }
}

/// The order `π` in which a forest's vertices are processed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProcessOrder(pub Vec<usize>);

impl ProcessOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `pos[v]` = 0-based index of `v` in `π` (slot 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl fmt::Display for ProcessOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A spanning forest of a digraph: every non-root `v` has one arc
/// `v -> parent(v)`, identified by its index among the parallel arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedForest {
    forest: RootedForest,
    /// Index (1-based) of the arc `v -> parent(v)`; 0 for roots.
    arc_index: Vec<usize>,
}

impl OrientedForest {
    pub fn new(forest: RootedForest, arc_index: Vec<usize>) -> Result<Self> {
        let n = forest.vertex_count();
        if arc_index.len() != n + 1 {
            return Err(Error::DomainMismatch { expected: n + 1, got: arc_index.len() });
        }
        for v in 1..=n {
            if forest.is_root(v) != (arc_index[v] == 0) {
                return Err(Error::UnknownEdge(v));
            }
        }
        Ok(OrientedForest { forest, arc_index })
    }

    /// Every arc with index 1, as for a graph viewed as a symmetric digraph.
    pub fn simple(forest: RootedForest) -> Self {
        let arc_index = (0..=forest.vertex_count())
            .map(|v| usize::from(v > 0 && !forest.is_root(v)))
            .collect();
        OrientedForest { forest, arc_index }
    }

    pub fn forest(&self) -> &RootedForest {
        &self.forest
    }

    pub fn arc_index(&self, v: usize) -> Option<usize> {
        (self.arc_index[v] > 0).then_some(self.arc_index[v])
    }

    /// `(child, parent, index)` for every forest arc, by child.
    pub fn arcs(&self) -> Vec<(usize, usize, usize)> {
        (1..=self.forest.vertex_count())
            .filter_map(|v| self.forest.parent(v).map(|p| (v, p, self.arc_index[v])))
            .collect()
    }

    fn check_in<A: Adjacency>(&self, g: &A) -> Result<()> {
        let n = g.vertex_count();
        if self.forest.vertex_count() != n {
            return Err(Error::DomainMismatch { expected: n, got: self.forest.vertex_count() });
        }
        match self.arcs().into_iter().find(|&(v, p, k)| g.multiplicity(v, p) < k) {
            Some((v, p, _)) => Err(Error::NotSubgraph(v, p)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for OrientedForest {
    /// `n m` header, then `child parent index` per arc.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs = self.arcs();
        writeln!(f, "{} {}", self.forest.vertex_count(), arcs.len())?;
        for (v, p, k) in arcs {
            writeln!(f, "{v} {p} {k}")?;
        }
        Ok(())
    }
}

impl FromStr for OrientedForest {
    type Err = Error;

    /// Inverse of `Display`; a missing index means 1.
    fn from_str(text: &str) -> Result<Self> {
        let (n, rows) = crate::graph::io::parse_rows(text, true)?;
        let mut parent = vec![None; n + 1];
        let mut arc_index = vec![0; n + 1];
        for (line, v, p, k) in rows {
            if parent[v].is_some() {
                return Err(Error::DoubleParent(v));
            }
            if k == 0 {
                return Err(Error::Malformed { line, message: "arc index starts at 1".into() });
            }
            parent[v] = Some(p);
            arc_index[v] = k;
        }
        OrientedForest::new(RootedForest::from_parents(parent)?, arc_index)
    }
}

fn to_value(x: ExtNat) -> Option<i64> {
    x.finite().map(|v| v as i64)
}

/// The value-decrement process on any adjacency. Processing `v` lowers each
/// unprocessed non-root `w` by the number of arcs `w -> v`; when the value
/// crosses from `k >= 0` below zero, `w` is found through its `(k+1)`-st
/// arc to `v`.
fn run_process<A: Adjacency>(
    g: &A,
    choice: &ChoiceOrder,
    f: &VertexFunction,
) -> Result<(OrientedForest, ProcessTrace)> {
    let n = g.vertex_count();
    f.check_domain(n)?;
    if let Burning::Stuck { residual } = is_multiparking_burning(g, f)? {
        return Err(Error::NotMultiparking { residual });
    }
    let mut values: Vec<Option<i64>> = std::iter::once(None).chain(f.values().iter().map(|&x| to_value(x))).collect();
    let mut parent = vec![None; n + 1];
    let mut arc_index = vec![0usize; n + 1];
    let mut processed = vec![false; n + 1];
    let mut pending: Vec<usize> = if n > 0 { vec![1] } else { Vec::new() };
    let mut steps = vec![ProcessStep {
        processed: None,
        found: Vec::new(),
        pending: pending.clone(),
        refilled: false,
        values: values.clone(),
    }];
    let mut least_unprocessed = 1;
    for _ in 0..n {
        let partial = RootedForest::from_parents_unchecked(parent.clone());
        let v = choice.choose(&partial, &pending)?;
        pending.retain(|&x| x != v);
        processed[v] = true;
        let mut found = Vec::new();
        for (w, k) in g.in_arcs(v) {
            if processed[w] {
                continue;
            }
            if let Some(before) = values[w] {
                let after = before - k as i64;
                values[w] = Some(after);
                if before >= 0 && after < 0 {
                    found.push(w);
                    parent[w] = Some(v);
                    arc_index[w] = before as usize + 1;
                }
            }
        }
        found.sort_unstable();
        pending.extend(&found);
        let mut refilled = false;
        if pending.is_empty() {
            while least_unprocessed <= n && processed[least_unprocessed] {
                least_unprocessed += 1;
            }
            if least_unprocessed <= n {
                debug_assert!(values[least_unprocessed].is_none(), "refill vertex is a root of a valid f");
                pending.push(least_unprocessed);
                refilled = true;
            }
        }
        steps.push(ProcessStep { processed: Some(v), found, pending: pending.clone(), refilled, values: values.clone() });
    }
    let forest = RootedForest::from_parents(parent)?;
    let trace = ProcessTrace { choice: choice.clone(), steps };
    Ok((OrientedForest { forest, arc_index }, trace))
}

/// The order in which [`phi`] processes the vertices when its output is
/// `forest`. It depends only on the forest and the choice rule: pending
/// vertices are the unprocessed children of processed vertices, and when
/// there are none the least unprocessed vertex comes next.
pub fn process_order(choice: &ChoiceOrder, forest: &RootedForest) -> Result<ProcessOrder> {
    let n = forest.vertex_count();
    let mut partial = vec![None; n + 1];
    let mut processed = vec![false; n + 1];
    let mut pending: Vec<usize> = if n > 0 { vec![1] } else { Vec::new() };
    let mut order = Vec::with_capacity(n);
    let mut least_unprocessed = 1;
    for _ in 0..n {
        let view = RootedForest::from_parents_unchecked(partial.clone());
        let v = choice.choose(&view, &pending)?;
        pending.retain(|&x| x != v);
        processed[v] = true;
        order.push(v);
        for &c in forest.children(v) {
            partial[c] = Some(v);
            pending.push(c);
        }
        if pending.is_empty() {
            while least_unprocessed <= n && processed[least_unprocessed] {
                least_unprocessed += 1;
            }
            if least_unprocessed <= n {
                pending.push(least_unprocessed);
            }
        }
    }
    Ok(ProcessOrder(order))
}

fn inverse<A: Adjacency>(g: &A, choice: &ChoiceOrder, forest: &OrientedForest) -> Result<(VertexFunction, ProcessOrder)> {
    forest.check_in(g)?;
    let order = process_order(choice, forest.forest())?;
    let pos = order.positions();
    let n = g.vertex_count();
    let values = (1..=n)
        .map(|v| match forest.forest().parent(v) {
            None => ExtNat::Infinite,
            Some(p) => {
                let earlier: usize = g.out_arcs(v).filter(|&(w, _)| pos[w] < pos[p]).map(|(_, k)| k).sum();
                ExtNat::Finite((earlier + forest.arc_index[v] - 1) as u64)
            }
        })
        .collect();
    Ok((VertexFunction::new(values), order))
}

/// Spanning forest of a multiparking function, with the process trace.
pub fn phi(g: &Graph, choice: &ChoiceOrder, f: &VertexFunction) -> Result<(RootedForest, ProcessTrace)> {
    let (forest, trace) = run_process(g, choice, f)?;
    Ok((forest.forest, trace))
}

/// Multiparking function of a spanning forest, with its process order.
pub fn psi(g: &Graph, choice: &ChoiceOrder, forest: &RootedForest) -> Result<(VertexFunction, ProcessOrder)> {
    forest.is_subgraph_of(g)?;
    inverse(g, choice, &OrientedForest::simple(forest.clone()))
}

/// Directed version of [`phi`]: the out-degree counts arcs leaving a set,
/// and a vertex whose value was `k` is found through its `(k+1)`-st arc.
pub fn phi_directed(d: &Digraph, choice: &ChoiceOrder, f: &VertexFunction) -> Result<(OrientedForest, ProcessTrace)> {
    run_process(d, choice, f)
}

/// Directed version of [`psi`]. A vertex becomes pending once its forest
/// arc points into the processed set.
pub fn psi_directed(d: &Digraph, choice: &ChoiceOrder, forest: &OrientedForest) -> Result<(VertexFunction, ProcessOrder)> {
    inverse(d, choice, forest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vf(s: &str) -> VertexFunction {
        s.parse().unwrap()
    }

    fn forest(n: usize, edges: &[(usize, usize)]) -> RootedForest {
        RootedForest::from_edges(n, edges).unwrap()
    }

    #[test]
    fn path_examples() {
        let p3 = Graph::path(3);
        for c in ChoiceOrder::builtins() {
            let (f, _) = phi(&p3, &c, &vf("inf 0 0")).unwrap();
            assert_eq!(f.edges(), vec![(1, 2), (2, 3)]);
            let (f, _) = phi(&p3, &c, &vf("inf 0 inf")).unwrap();
            assert_eq!(f.edges(), vec![(1, 2)]);
            assert_eq!(f.roots(), &[1, 3]);
            let (f, _) = phi(&p3, &c, &vf("inf inf inf")).unwrap();
            assert_eq!(f.edge_count(), 0);
        }
    }

    #[test]
    fn triangle_inverse_examples() {
        let k3 = Graph::complete(3);
        let id = ChoiceOrder::Ranking(Vec::new());
        assert_eq!(psi(&k3, &id, &forest(3, &[(1, 2), (1, 3)])).unwrap().0, vf("inf 0 0"));
        assert_eq!(psi(&k3, &id, &forest(3, &[(1, 2), (2, 3)])).unwrap().0, vf("inf 0 1"));
        let (f, order) = psi(&k3, &id, &forest(3, &[(2, 3)])).unwrap();
        assert_eq!(f, vf("inf inf 1"));
        assert_eq!(order.as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_invalid_inputs() {
        let k3 = Graph::complete(3);
        let c = ChoiceOrder::BreadthFirstQueue;
        assert_eq!(phi(&k3, &c, &vf("inf 1 1")), Err(Error::NotMultiparking { residual: vec![2, 3] }));
        assert!(matches!(phi(&k3, &c, &vf("inf 0")), Err(Error::DomainMismatch { .. })));
        let p3 = Graph::path(3);
        assert_eq!(psi(&p3, &c, &forest(3, &[(1, 3)])), Err(Error::NotSubgraph(1, 3)));
    }

    #[test]
    fn round_trip_on_k4() {
        let k4 = Graph::complete(4);
        for c in ChoiceOrder::builtins() {
            for f in crate::parking::sweep(&k4) {
                if !is_multiparking_burning(&k4, &f).unwrap().is_complete() {
                    continue;
                }
                let (forest, trace) = phi(&k4, &c, &f).unwrap();
                assert_eq!(forest.roots(), f.roots().as_slice());
                let (back, order) = psi(&k4, &c, &forest).unwrap();
                assert_eq!(back, f, "choice {c}");
                assert_eq!(order, trace.order());
            }
        }
    }

    #[test]
    fn trace_shape() {
        let k3 = Graph::complete(3);
        let (_, trace) = phi(&k3, &ChoiceOrder::BreadthFirstQueue, &vf("inf 0 0")).unwrap();
        assert_eq!(trace.steps.len(), 4);
        assert!(trace.steps.last().unwrap().pending.is_empty());
        // vertex 3 keeps dropping after being found by 1
        assert_eq!(trace.final_values(), &[None, None, Some(-1), Some(-2)]);
        let table = trace.table();
        assert_eq!(table.lines().next().unwrap(), "t   | 0   | 1     | 2     | 3");
        assert!(table.contains("Q_t | (1) | (2,3) | (3)   | ∅"));
        assert!(table.contains("P_t | ∅   | {1}   | {1,2} | {1,2,3}"));
    }

    #[test]
    fn refill_takes_least_unprocessed() {
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        let (f, trace) = phi(&g, &ChoiceOrder::DepthFirst, &vf("inf 0 inf 0")).unwrap();
        assert_eq!(f.edges(), vec![(1, 2), (3, 4)]);
        assert!(trace.steps[2].refilled);
        assert_eq!(trace.steps[2].pending, vec![3]);
    }

    #[test]
    fn directed_examples() {
        let d = Digraph::new(2, [(2, 1, 1), (1, 2, 1)]).unwrap();
        let c = ChoiceOrder::BreadthFirstQueue;
        let (f, _) = phi_directed(&d, &c, &vf("inf 0")).unwrap();
        assert_eq!(f.arcs(), vec![(2, 1, 1)]);
        let (f, _) = phi_directed(&d, &c, &vf("inf inf")).unwrap();
        assert!(f.arcs().is_empty());

        let parallel = Digraph::new(2, [(2, 1, 2)]).unwrap();
        let (f, _) = phi_directed(&parallel, &c, &vf("inf 1")).unwrap();
        assert_eq!(f.arcs(), vec![(2, 1, 2)]);
        assert_eq!(psi_directed(&parallel, &c, &f).unwrap().0, vf("inf 1"));
        assert_eq!(f.to_string(), "2 1\n2 1 2\n");
        assert_eq!(f.to_string().parse::<OrientedForest>().unwrap(), f);
        assert!("2 1\n2 1 0\n".parse::<OrientedForest>().is_err());
    }

    #[test]
    fn directed_round_trip_on_small_digraph() {
        let d = Digraph::new(3, [(2, 1, 2), (3, 2, 1), (3, 1, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        let mut count = 0;
        for c in ChoiceOrder::builtins() {
            for f in crate::parking::sweep(&d) {
                if !is_multiparking_burning(&d, &f).unwrap().is_complete() {
                    continue;
                }
                count += 1;
                let (forest, _) = phi_directed(&d, &c, &f).unwrap();
                assert_eq!(psi_directed(&d, &c, &forest).unwrap().0, f);
            }
        }
        assert!(count > 0);
    }
}
