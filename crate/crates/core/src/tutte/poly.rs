use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sparse polynomial in `x` and `y` with big-integer coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(i: u32, j: u32, c: impl Into<BigInt>) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `((i, j), c)` by increasing `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(X, Y)` for polynomials `X`, `Y`.
    pub fn compose(&self, xs: &BiPoly, ys: &BiPoly) -> BiPoly {
        let mut xp = vec![BiPoly::one()];
        let mut yp = vec![BiPoly::one()];
        for _ in 0..self.degree_x() {
            let next = xp.last().expect("nonempty") * xs;
            xp.push(next);
        }
        for _ in 0..self.degree_y() {
            let next = yp.last().expect("nonempty") * ys;
            yp.push(next);
        }
        let mut out = BiPoly::zero();
        for ((i, j), c) in self.terms() {
            let term = &xp[i as usize] * &yp[j as usize];
            out += &term.scale(c);
        }
        out
    }

    /// `p(x + dx, y + dy)`.
    pub fn shift(&self, dx: i64, dy: i64) -> BiPoly {
        self.compose(&(BiPoly::x() + BiPoly::constant(dx)), &(BiPoly::y() + BiPoly::constant(dy)))
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        let mut out = BiPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (&k, v) in &self.terms {
            out.terms.insert(k, v * c);
        }
        out
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift_degree(&self, i: u32, j: u32) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect() }
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut xp = vec![BigRational::one()];
        for _ in 0..self.degree_x() {
            let next = xp.last().expect("nonempty") * x;
            xp.push(next);
        }
        let mut yp = vec![BigRational::one()];
        for _ in 0..self.degree_y() {
            let next = yp.last().expect("nonempty") * y;
            yp.push(next);
        }
        let mut acc = BigRational::zero();
        for ((i, j), c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * &xp[i as usize] * &yp[j as usize];
        }
        acc
    }

    /// Evaluation at integer points.
    pub fn evaluate_int(&self, x: i64, y: i64) -> BigInt {
        let r = self.evaluate(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into()));
        r.to_integer()
    }

    /// The coefficients of `y^j` as a list indexed by `j`, assuming no `x`.
    pub fn y_coefficients(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.degree_y() as usize + 1];
        for ((_, j), c) in self.terms() {
            out[j as usize] += c;
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            terms: self.terms().map(|((x, y), c)| TermJson { x, y, c: c.to_string() }).collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<BiPoly> {
        let mut p = BiPoly::zero();
        for t in &json.terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Json(format!("bad coefficient '{}'", t.c)))?;
            p.add_term(t.x, t.y, c);
        }
        Ok(p)
    }
}

/// Serialized form: `{"terms":[{"x":i,"y":j,"c":"<decimal>"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub x: u32,
    pub y: u32,
    pub c: String,
}

impl fmt::Display for BiPoly {
    /// Terms by decreasing power of `x`, then of `y`: `x^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let mut factors = Vec::new();
            if !abs.is_one() || (*i == 0 && *j == 0) {
                factors.push(abs.to_string());
            }
            for (var, e) in [("x", *i), ("y", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        self += &rhs;
        self
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(i, j), d) in &rhs.terms {
                out.add_term(a + i, b + j, c * d);
            }
        }
        out
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}
