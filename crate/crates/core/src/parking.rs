//! Vertex functions with values in `ℕ ∪ {∞}` and the multiparking
//! predicate.
//!
//! A function `f` on `1..=n` is multiparking for a graph when every
//! nonempty vertex set `U` either has its least vertex at `∞` (a root), or
//! contains a *well-behaved* vertex `i` with `f(i) < outdeg_U(i)`, the
//! number of arcs from `i` leaving `U`. The predicates here are generic over
//! [`Adjacency`], so the same code serves undirected graphs and digraphs
//! with parallel arcs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph};

/// A nonnegative integer or `∞`. `∞ - 1 = ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn is_infinite(self) -> bool {
        self == ExtNat::Infinite
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(x) => Some(x),
            ExtNat::Infinite => None,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(x) => write!(f, "{x}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "∞" => Ok(ExtNat::Infinite),
            _ => s.parse().map(ExtNat::Finite).map_err(|_| Error::Malformed {
                line: 1,
                message: format!("'{s}' is neither a nonnegative integer nor 'inf'"),
            }),
        }
    }
}

/// `f : {1..n} -> ℕ ∪ {∞}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexFunction(Vec<ExtNat>);

impl VertexFunction {
    pub fn new(values: Vec<ExtNat>) -> Self {
        VertexFunction(values)
    }

    pub fn all_infinite(n: usize) -> Self {
        VertexFunction(vec![ExtNat::Infinite; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at vertex `v` (1-based).
    pub fn get(&self, v: usize) -> ExtNat {
        self.0[v - 1]
    }

    pub fn set(&mut self, v: usize, value: ExtNat) {
        self.0[v - 1] = value;
    }

    pub fn values(&self) -> &[ExtNat] {
        &self.0
    }

    /// `{v : f(v) = ∞}` in increasing order.
    pub fn roots(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&v| self.get(v).is_infinite()).collect()
    }

    pub fn root_count(&self) -> usize {
        self.0.iter().filter(|x| x.is_infinite()).count()
    }

    /// Sum of the finite values.
    pub fn finite_sum(&self) -> u64 {
        self.0.iter().filter_map(|x| x.finite()).sum()
    }

    pub(crate) fn check_domain(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DomainMismatch { expected: n, got: self.len() })
        }
    }
}

impl fmt::Display for VertexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexFunction {
    type Err = Error;

    /// Whitespace-separated tokens, `#` comments allowed.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .map(str::parse)
            .collect::<Result<_>>()?;
        Ok(VertexFunction(values))
    }
}

/// Vertex subset of `1..=64` as a bitmask (bit `v - 1` for vertex `v`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const MAX_VERTICES: usize = 64;

    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_VERTICES);
        VertexSet(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                v
            })
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet(0);
        for v in iter {
            s.insert(v);
        }
        s
    }
}

fn check_small(n: usize) -> Result<()> {
    if n > VertexSet::MAX_VERTICES {
        return Err(Error::CapExceeded { what: "vertex count", size: n, cap: VertexSet::MAX_VERTICES });
    }
    Ok(())
}

/// Number of arcs from `v` to vertices outside `set`.
pub fn outdeg<A: Adjacency>(g: &A, set: VertexSet, v: usize) -> Result<usize> {
    if !set.contains(v) {
        return Err(Error::NotInSet(v));
    }
    Ok(g.out_arcs(v).filter(|&(w, _)| !set.contains(w)).map(|(_, k)| k).sum())
}

fn well_behaved(value: ExtNat, outdeg: usize) -> bool {
    matches!(value, ExtNat::Finite(x) if x < outdeg as u64)
}

/// Whether some vertex of `set` satisfies condition (A) or (B) there.
fn has_witness<A: Adjacency>(g: &A, f: &VertexFunction, set: VertexSet) -> bool {
    let least = set.min().expect("nonempty set");
    f.get(least).is_infinite()
        || set.iter().any(|v| {
            let d = g.out_arcs(v).filter(|&(w, _)| !set.contains(w)).map(|(_, k)| k).sum();
            well_behaved(f.get(v), d)
        })
}

/// The definition checked literally on all `2^n - 1` nonempty subsets.
pub fn is_multiparking_subsets<A: Adjacency>(g: &A, f: &VertexFunction) -> Result<bool> {
    let n = g.vertex_count();
    f.check_domain(n)?;
    check_small(n)?;
    if n >= 31 {
        return Err(Error::CapExceeded { what: "subset sweep over vertices", size: n, cap: 30 });
    }
    Ok((1u64..1 << n).all(|mask| has_witness(g, f, VertexSet(mask))))
}

/// How a vertex qualified when it was thrown out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Least remaining vertex, with `f = ∞`. `outdeg` is its out-degree
    /// into the already thrown-out vertices.
    Root { outdeg: usize },
    /// `f(v) < outdeg` in the remaining set.
    WellBehaved { outdeg: usize },
}

/// An order in which every vertex can be thrown out, each satisfying (A)
/// or (B) in the set of vertices not yet thrown out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThrowOutOrder {
    pub order: Vec<usize>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Burning {
    Complete(ThrowOutOrder),
    /// No vertex of `residual` can be thrown out.
    Stuck { residual: Vec<usize> },
}

impl Burning {
    pub fn is_complete(&self) -> bool {
        matches!(self, Burning::Complete(_))
    }
}

/// Greedy burning: repeatedly throw out the smallest well-behaved vertex
/// of the remaining set, or else its least vertex when that is a root.
/// Succeeds exactly when `f` is multiparking.
pub fn is_multiparking_burning<A: Adjacency>(g: &A, f: &VertexFunction) -> Result<Burning> {
    let n = g.vertex_count();
    f.check_domain(n)?;
    let mut remaining = vec![true; n + 1];
    // out-degree of each remaining vertex toward thrown-out vertices
    let mut out = vec![0usize; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut witnesses = Vec::with_capacity(n);
    let mut least = 1;
    for _ in 0..n {
        while !remaining[least] {
            least += 1;
        }
        let pick = (least..=n)
            .find(|&v| remaining[v] && well_behaved(f.get(v), out[v]))
            .map(|v| (v, Witness::WellBehaved { outdeg: out[v] }))
            .or_else(|| {
                f.get(least).is_infinite().then(|| (least, Witness::Root { outdeg: out[least] }))
            });
        let Some((v, witness)) = pick else {
            return Ok(Burning::Stuck { residual: (1..=n).filter(|&v| remaining[v]).collect() });
        };
        remaining[v] = false;
        order.push(v);
        witnesses.push(witness);
        for (w, k) in g.in_arcs(v) {
            if remaining[w] {
                out[w] += k;
            }
        }
    }
    Ok(Burning::Complete(ThrowOutOrder { order, witnesses }))
}

/// Checks a claimed throw-out order against the definition of (A)/(B).
pub fn check_throw_out_order<A: Adjacency>(g: &A, f: &VertexFunction, order: &ThrowOutOrder) -> Result<bool> {
    let n = g.vertex_count();
    check_small(n)?;
    let mut set = VertexSet::full(n);
    for (&v, w) in order.order.iter().zip(&order.witnesses) {
        let d = outdeg(g, set, v)?;
        let ok = match *w {
            Witness::Root { outdeg } => set.min() == Some(v) && f.get(v).is_infinite() && outdeg == d,
            Witness::WellBehaved { outdeg } => outdeg == d && well_behaved(f.get(v), d),
        };
        if !ok {
            return Ok(false);
        }
        set.remove(v);
    }
    Ok(set.is_empty() && order.order.len() == n)
}

pub fn roots(f: &VertexFunction) -> Vec<usize> {
    f.roots()
}

fn require_valid<A: Adjacency>(g: &A, f: &VertexFunction) -> Result<ThrowOutOrder> {
    match is_multiparking_burning(g, f)? {
        Burning::Complete(order) => Ok(order),
        Burning::Stuck { residual } => Err(Error::NotMultiparking { residual }),
    }
}

/// Records of every root, `(root, rec)`, read off the greedy burning order:
/// a root's record is its out-degree toward the vertices thrown out before
/// it.
pub fn records<A: Adjacency>(g: &A, f: &VertexFunction) -> Result<Vec<(usize, usize)>> {
    let order = require_valid(g, f)?;
    let mut recs: Vec<_> = order
        .order
        .iter()
        .zip(&order.witnesses)
        .filter_map(|(&v, w)| match *w {
            Witness::Root { outdeg } => Some((v, outdeg)),
            Witness::WellBehaved { .. } => None,
        })
        .collect();
    recs.sort_unstable();
    Ok(recs)
}

/// `rec(v)` for a root `v` via the greedy burning order.
pub fn record<A: Adjacency>(g: &A, f: &VertexFunction, v: usize) -> Result<usize> {
    if v == 0 || v > f.len() || !f.get(v).is_infinite() {
        return Err(Error::NotARoot(v));
    }
    records(g, f)?
        .into_iter()
        .find(|&(r, _)| r == v)
        .map(|(_, rec)| rec)
        .ok_or(Error::NotARoot(v))
}

/// `rec(v)` as the minimum of `outdeg_U(v)` over all sets `U` with least
/// vertex `v` and no well-behaved vertex.
pub fn record_brute_force<A: Adjacency>(g: &A, f: &VertexFunction, v: usize) -> Result<usize> {
    let n = g.vertex_count();
    f.check_domain(n)?;
    check_small(n)?;
    if v == 0 || v > n || !f.get(v).is_infinite() {
        return Err(Error::NotARoot(v));
    }
    // subsets of {v+1..n}, each joined with v
    let above = n - v;
    let mut best = usize::MAX;
    for rest in 0u64..1 << above {
        let set = VertexSet((rest << v) | 1 << (v - 1));
        let no_witness = set.iter().all(|w| {
            let d = g.out_arcs(w).filter(|&(x, _)| !set.contains(x)).map(|(_, k)| k).sum();
            !well_behaved(f.get(w), d)
        });
        if no_witness {
            best = best.min(outdeg(g, set, v)?);
        }
    }
    Ok(best)
}

/// `Rec(f)`: total of the root records.
pub fn total_record<A: Adjacency>(g: &A, f: &VertexFunction) -> Result<usize> {
    Ok(records(g, f)?.into_iter().map(|(_, r)| r).sum())
}

/// Reversed sum `|E| - n + r(f) - Rec(f) - Σ_{f(v) finite} f(v)`.
pub fn rsum(g: &Graph, f: &VertexFunction) -> Result<u64> {
    let rec = total_record(g, f)? as i64;
    let value = g.edge_count() as i64 - g.vertex_count() as i64 + f.root_count() as i64
        - rec
        - f.finite_sum() as i64;
    u64::try_from(value).map_err(|_| {
        Error::IdentityViolated(format!("reversed sum of {f} is negative ({value})"))
    })
}

/// Candidate values for the exhaustive sweep at vertex `v`: `0..deg(v)`
/// and `∞`. A finite value `x >= deg(v)` always fails on `U = {v}`, where
/// `v` is the least vertex but not a root and `outdeg_U(v) = deg(v) <= x`.
pub fn sweep_values<A: Adjacency>(g: &A, v: usize) -> Vec<ExtNat> {
    let deg: usize = g.out_arcs(v).map(|(_, k)| k).sum();
    (0..deg as u64).map(ExtNat::Finite).chain([ExtNat::Infinite]).collect()
}

/// Every vertex function in the sweep range, in lexicographic order.
pub fn sweep<A: Adjacency>(g: &A) -> impl Iterator<Item = VertexFunction> {
    let n = g.vertex_count();
    let ranges: Vec<Vec<ExtNat>> = (1..=n).map(|v| sweep_values(g, v)).collect();
    let mut idx = vec![0usize; n];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let f = VertexFunction(idx.iter().zip(&ranges).map(|(&i, r)| r[i]).collect());
        done = true;
        for p in (0..n).rev() {
            idx[p] += 1;
            if idx[p] < ranges[p].len() {
                done = false;
                break;
            }
            idx[p] = 0;
        }
        Some(f)
    })
}
