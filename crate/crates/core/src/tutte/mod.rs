//! The Tutte polynomial by five independent routes.
//!
//! * [`tutte_dc`]: deletion–contraction with a memo.
//! * [`tutte_activities`]: internal/external activities of spanning trees
//!   under a total edge order.
//! * [`tutte_corank_nullity`]: the sum over all spanning subgraphs of
//!   `x^(c(H)-1) y^(|E(H)|-n+c(H))`, which is `t(1+x, 1+y)`.
//! * [`tutte_bfs_forests`]: the sum over spanning forests of
//!   `x^(c(F)-1) y^|𝓔(F)|`, which is `t(1+x, y)`.
//! * [`tutte_multiparking`]: the sum over multiparking functions of
//!   `x^(r(f)-1) y^rsum(f)`, also `t(1+x, y)`.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

pub use poly::{BiPoly, PolyJson, TermJson};

use crate::activity::bfs_external;
use crate::bijection::psi;
use crate::census::{spanning_forests, spanning_trees};
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, UnionFind};
use crate::orders::ChoiceOrder;
use crate::parking::rsum;

pub type TuttePolynomial = BiPoly;
pub type Rational = BigRational;

/// Default cap on `|E|` for the subset sweep.
pub const CORANK_EDGE_CAP: usize = 20;

#[derive(Default)]
struct DeletionContraction {
    memo: HashMap<Vec<(u16, u16)>, BiPoly>,
}

impl DeletionContraction {
    /// Drops isolated vertices and relabels the rest by decreasing degree
    /// (ties by old label). Not canonical, but merges many equal states.
    fn relabel(edges: &[(usize, usize)]) -> Vec<(u16, u16)> {
        let mut deg: HashMap<usize, usize> = HashMap::new();
        for &(u, v) in edges {
            *deg.entry(u).or_default() += 1;
            *deg.entry(v).or_default() += 1;
        }
        let mut verts: Vec<_> = deg.into_iter().collect();
        verts.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let label: HashMap<usize, u16> = verts.iter().enumerate().map(|(i, &(v, _))| (v, i as u16)).collect();
        let mut out: Vec<_> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (label[&u], label[&v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn connected_without(edges: &[(u16, u16)], skip: usize, from: u16, to: u16) -> bool {
        let size = edges.iter().map(|&(_, b)| b as usize + 1).max().unwrap_or(0);
        let mut uf = UnionFind::new(size);
        for (i, &(a, b)) in edges.iter().enumerate() {
            if i != skip {
                uf.union(a as usize, b as usize);
            }
        }
        uf.find(from as usize) == uf.find(to as usize)
    }

    fn run(&mut self, edges: &[(usize, usize)]) -> BiPoly {
        let loops = edges.iter().filter(|(u, v)| u == v).count() as u32;
        let rest: Vec<_> = edges.iter().copied().filter(|(u, v)| u != v).collect();
        self.solve(Self::relabel(&rest)).shift_degree(0, loops)
    }

    /// Loopless edge lists only.
    fn solve(&mut self, key: Vec<(u16, u16)>) -> BiPoly {
        if key.is_empty() {
            return BiPoly::one();
        }
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (a, b) = key[0];
        let contracted: Vec<(usize, usize)> = key[1..]
            .iter()
            .map(|&(u, v)| {
                let m = |w: u16| if w == b { a as usize } else { w as usize };
                (m(u), m(v))
            })
            .collect();
        let result = if Self::connected_without(&key, 0, a, b) {
            let deleted: Vec<(usize, usize)> = key[1..].iter().map(|&(u, v)| (u as usize, v as usize)).collect();
            self.run(&deleted) + self.run(&contracted)
        } else {
            &BiPoly::x() * &self.run(&contracted)
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// Deletion–contraction: a bridge contributes `x·t(G/e)`, a loop
/// `y·t(G-e)`, any other edge `t(G-e) + t(G/e)`.
pub fn tutte_dc(g: &Multigraph) -> TuttePolynomial {
    let edges: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    DeletionContraction::default().run(&edges)
}

/// A total order on the edges of a graph, as a rank per edge index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrder(Vec<usize>);

impl EdgeOrder {
    /// Edge `i` (in `Graph::edges` order) has rank `i`.
    pub fn natural(m: usize) -> Self {
        EdgeOrder((0..m).collect())
    }

    pub fn reversed(m: usize) -> Self {
        EdgeOrder((0..m).rev().collect())
    }

    /// Odd-indexed edges first, then even-indexed ones.
    pub fn interleaved(m: usize) -> Self {
        let seq: Vec<usize> = (0..m).filter(|i| i % 2 == 1).chain((0..m).filter(|i| i % 2 == 0)).collect();
        let mut rank = vec![0; m];
        for (r, e) in seq.into_iter().enumerate() {
            rank[e] = r;
        }
        EdgeOrder(rank)
    }

    pub fn from_ranks(rank: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; rank.len()];
        for &r in &rank {
            if r >= rank.len() || std::mem::replace(&mut seen[r], true) {
                return Err(Error::BadChoice(format!("edge ranks {rank:?} are not a permutation")));
            }
        }
        Ok(EdgeOrder(rank))
    }

    pub fn rank(&self, edge: usize) -> usize {
        self.0[edge]
    }
}

/// Sum over maximal spanning forests (spanning trees when `g` is
/// connected) of `x^ia(T) y^ea(T)`. An edge outside `T` is
/// externally active when it is the largest on its cycle in `T + e`; an
/// edge of `T` is internally active when it is the largest in its cut.
pub fn tutte_activities(g: &Graph, order: &EdgeOrder) -> Result<TuttePolynomial> {
    if order.0.len() != g.edge_count() {
        return Err(Error::DomainMismatch { expected: g.edge_count(), got: order.0.len() });
    }
    let n = g.vertex_count();
    let mut total = BiPoly::zero();
    for tree in spanning_trees(g) {
        let in_tree: Vec<bool> = g.edges().iter().map(|&(u, v)| tree.has_edge(u, v)).collect();
        let parent_edge = |v: usize| tree.parent(v).map(|p| g.edge_index(v, p).expect("tree edge"));
        let depth: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { tree.height(v) }).collect();
        let mut ea = 0u32;
        let mut ia = 0u32;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if in_tree[e] {
                // the side of T - e containing the child endpoint
                let child = if tree.parent(u) == Some(v) { u } else { v };
                let largest = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(a, b))| tree.is_ancestor(child, a) != tree.is_ancestor(child, b))
                    .all(|(f, _)| order.rank(f) <= order.rank(e));
                ia += u32::from(largest);
            } else {
                let (mut a, mut b) = (u, v);
                let mut largest = true;
                while a != b {
                    if depth[a] < depth[b] {
                        std::mem::swap(&mut a, &mut b);
                    }
                    let f = parent_edge(a).expect("non-root on path");
                    largest &= order.rank(f) < order.rank(e);
                    a = tree.parent(a).expect("non-root on path");
                }
                ea += u32::from(largest);
            }
        }
        total.add_term(ia, ea, 1.into());
    }
    Ok(total)
}

/// Sweep of all `2^|E|` spanning subgraphs, then `x -> x-1`, `y -> y-1`.
pub fn tutte_corank_nullity(g: &Graph) -> Result<TuttePolynomial> {
    tutte_corank_nullity_capped(g, CORANK_EDGE_CAP)
}

pub fn tutte_corank_nullity_capped(g: &Graph, cap: usize) -> Result<TuttePolynomial> {
    let m = g.edge_count();
    if m > cap.min(63) {
        return Err(Error::CapExceeded { what: "edges for the subset sweep", size: m, cap: cap.min(63) });
    }
    let n = g.vertex_count();
    let base = g.components();
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for mask in 0u64..1 << m {
        let mut uf = UnionFind::new(n + 1);
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(u, v);
            }
        }
        let c = n - uf.merges();
        let edges = mask.count_ones() as usize;
        *counts.entry(((c - base) as u32, (edges + c - n) as u32)).or_default() += 1;
    }
    let mut shifted = BiPoly::zero();
    for ((i, j), k) in counts {
        shifted.add_term(i, j, k.into());
    }
    Ok(shifted.shift(-1, -1))
}

/// Sum over spanning forests of `x^(c(F)-c(G)) y^|𝓔(F)|`, then `x -> x-1`.
pub fn tutte_bfs_forests(g: &Graph) -> Result<TuttePolynomial> {
    let base = g.components() as u32;
    let mut sum = BiPoly::zero();
    for f in spanning_forests(g) {
        let active = bfs_external(g, &f)?.len() as u32;
        sum.add_term(f.component_count() as u32 - base, active, 1.into());
    }
    Ok(sum.shift(-1, 0))
}

/// Sum over multiparking functions (the images of all spanning forests
/// under the choice rule) of `x^(r(f)-c(G)) y^rsum(f)`, then `x -> x-1`.
pub fn tutte_multiparking(g: &Graph, choice: &ChoiceOrder) -> Result<TuttePolynomial> {
    let base = g.components() as u32;
    let mut sum = BiPoly::zero();
    for forest in spanning_forests(g) {
        let (f, _) = psi(g, choice, &forest)?;
        sum.add_term(f.root_count() as u32 - base, rsum(g, &f)? as u32, 1.into());
    }
    Ok(sum.shift(-1, 0))
}

pub fn evaluate(p: &TuttePolynomial, x: &Rational, y: &Rational) -> Rational {
    p.evaluate(x, y)
}

/// Route selector for [`tutte`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    DeletionContraction,
    Activities,
    CorankNullity,
    BfsForests,
    Multiparking(ChoiceOrder),
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "dc" => Method::DeletionContraction,
            "activities" => Method::Activities,
            "corank" => Method::CorankNullity,
            "bfs" => Method::BfsForests,
            "mpf" => Method::Multiparking(ChoiceOrder::BreadthFirstQueue),
            _ => return Err(Error::BadChoice(format!("unknown method '{s}' (dc|activities|corank|bfs|mpf)"))),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DeletionContraction => "dc",
            Method::Activities => "activities",
            Method::CorankNullity => "corank",
            Method::BfsForests => "bfs",
            Method::Multiparking(_) => "mpf",
        })
    }
}

/// `t_G` by the chosen route. Only deletion–contraction accepts
/// disconnected graphs.
pub fn tutte(g: &Graph, method: &Method) -> Result<TuttePolynomial> {
    match method {
        Method::DeletionContraction => Ok(tutte_dc(&Multigraph::from(g))),
        Method::Activities => tutte_activities(g, &EdgeOrder::natural(g.edge_count())),
        Method::CorankNullity => tutte_corank_nullity(g),
        Method::BfsForests => tutte_bfs_forests(g),
        Method::Multiparking(choice) => tutte_multiparking(g, choice),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dc(g: &Graph) -> BiPoly {
        tutte_dc(&Multigraph::from(g))
    }

    #[test]
    fn small_deletion_contraction() {
        assert_eq!(dc(&Graph::complete(3)).to_string(), "x^2 + x + y");
        assert_eq!(dc(&Graph::path(2)).to_string(), "x");
        let lp = Multigraph::new(1, [(1, 1)]).unwrap();
        assert_eq!(tutte_dc(&lp).to_string(), "y");
        let two = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(dc(&two).to_string(), "x^2");
        assert_eq!(dc(&Graph::cycle(4)).to_string(), "x^3 + x^2 + x + y");
    }

    #[test]
    fn k4_routes() {
        let k4 = Graph::complete(4);
        let expect = dc(&k4);
        assert_eq!(expect.to_string(), "x^3 + 3*x^2 + 4*x*y + 2*x + y^3 + 3*y^2 + 2*y");
        let m = k4.edge_count();
        for order in [EdgeOrder::natural(m), EdgeOrder::reversed(m), EdgeOrder::interleaved(m)] {
            assert_eq!(tutte_activities(&k4, &order).unwrap(), expect);
        }
        assert_eq!(tutte_corank_nullity(&k4).unwrap(), expect);
        assert_eq!(tutte_bfs_forests(&k4).unwrap(), expect);
        for c in ChoiceOrder::builtins() {
            assert_eq!(tutte_multiparking(&k4, &c).unwrap(), expect);
        }
    }

    #[test]
    fn tree_input() {
        let p = Graph::path(4);
        assert_eq!(tutte_activities(&p, &EdgeOrder::natural(3)).unwrap().to_string(), "x^3");
        assert_eq!(tutte_bfs_forests(&p).unwrap().to_string(), "x^3");
    }

    #[test]
    fn disconnected_is_product() {
        let two = Graph::new(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (4, 7)]).unwrap();
        let expect = tutte_dc(&Multigraph::from(&Graph::complete(3))) * tutte_dc(&Multigraph::from(&Graph::cycle(4)));
        assert_eq!(tutte_dc(&Multigraph::from(&two)), expect);
        for order in [EdgeOrder::natural(7), EdgeOrder::interleaved(7)] {
            assert_eq!(tutte_activities(&two, &order).unwrap(), expect);
        }
        assert_eq!(tutte_corank_nullity(&two).unwrap(), expect);
        assert_eq!(tutte_bfs_forests(&two).unwrap(), expect);
        for c in ChoiceOrder::builtins() {
            assert_eq!(tutte_multiparking(&two, &c).unwrap(), expect);
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            tutte_corank_nullity_capped(&Graph::complete(4), 5),
            Err(Error::CapExceeded { .. })
        ));
        assert!(EdgeOrder::from_ranks(vec![0, 0]).is_err());
        assert_eq!("mpf".parse::<Method>().unwrap().to_string(), "mpf");
    }
}
