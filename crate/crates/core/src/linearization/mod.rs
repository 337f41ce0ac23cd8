//! Grid-window linearizations of tropical polynomials.
//!
//! A window `T_N = {0..N-1}^n` carries one real variable per grid point.
//! Grid points are flattened with the first coordinate varying fastest:
//! `index(k_1, ..., k_n) = k_1 + N k_2 + ... + N^(n-1) k_n`, so for `n = 2`
//! the order is `(0,0), (1,0), ..., (N-1,0), (0,1), ...`.

mod generators;
mod zero_dim;

pub use generators::{curve_radical_generators, polygon_shapes};
pub use zero_dim::{zero_dim_radical_generator, Pick, Picks, ZeroDimPrevariety};

use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::tropical::TropicalPolynomial;

/// The grid `{0..side-1}^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub n: usize,
    #[serde(rename = "N")]
    pub side: usize,
}

impl Window {
    pub fn new(n: usize, side: usize) -> Self {
        assert!(side >= 1, "window side must be positive");
        Self { n, side }
    }

    /// Number of grid variables, `N^n`.
    pub fn size(&self) -> usize {
        self.side.pow(self.n as u32)
    }

    pub fn contains(&self, k: &[i64]) -> bool {
        k.len() == self.n && k.iter().all(|&c| c >= 0 && (c as usize) < self.side)
    }

    /// # Panics
    /// If `k` lies outside the window.
    pub fn index(&self, k: &[i64]) -> usize {
        assert!(self.contains(k), "grid point {k:?} outside window {self:?}");
        k.iter().rev().fold(0, |acc, &c| acc * self.side + c as usize)
    }

    pub fn coords(&self, mut idx: usize) -> Vec<i64> {
        let mut k = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            k.push((idx % self.side) as i64);
            idx /= self.side;
        }
        k
    }

    /// All grid points in index order.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        (0..self.size()).map(|i| self.coords(i))
    }
}

/// A point of `R^{T_N}`: one rational value per grid point, in index order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridFunction {
    #[serde(flatten)]
    pub window: Window,
    #[serde(with = "crate::rational::serde_rational_vec")]
    pub values: Vec<Rational>,
}

impl GridFunction {
    pub fn new(window: Window, values: Vec<Rational>) -> Result<Self> {
        if values.len() != window.size() {
            return Err(Error::DimensionMismatch { expected: window.size(), found: values.len() });
        }
        Ok(Self { window, values })
    }

    pub fn from_fn(window: Window, f: impl Fn(&[i64]) -> Rational) -> Self {
        let values = window.points().map(|k| f(&k)).collect();
        Self { window, values }
    }

    pub fn at(&self, k: &[i64]) -> &Rational {
        &self.values[self.window.index(k)]
    }

    pub fn distinct_values(&self) -> usize {
        let mut v = self.values.clone();
        v.sort();
        v.dedup();
        v.len()
    }
}

/// `u(k) = <k, x>` for every grid point: the image of a point of `R^n`.
pub fn embed_solution(x: &[Rational], side: usize) -> GridFunction {
    let window = Window::new(x.len(), side);
    GridFunction::from_fn(window, |k| {
        k.iter().zip(x).fold(rational::zero(), |acc, (&ki, xi)| acc + rational::int(ki) * xi)
    })
}

/// One term `constant + u(var)` of a tropical linear equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub constant: Rational,
    pub var: usize,
}

/// `min_t (constant_t + u(var_t))` must be attained at least twice.
///
/// Equations from a single-monomial polynomial keep their one term; such an
/// equation has no solutions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalLinearEquation {
    pub terms: Vec<Term>,
}

impl TropicalLinearEquation {
    pub fn new(mut terms: Vec<Term>) -> Self {
        terms.sort();
        terms.dedup();
        Self { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_values(&self, u: &[Rational]) -> Vec<Rational> {
        self.terms.iter().map(|t| &t.constant + &u[t.var]).collect()
    }

    pub fn is_satisfied(&self, u: &[Rational]) -> bool {
        let v = self.term_values(u);
        let m = v.iter().min().expect("nonempty equation");
        v.iter().filter(|x| *x == m).count() >= 2
    }
}

/// Where an equation came from: `sources[source]` shifted by `shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub source: usize,
    pub shift: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalLinearSystem {
    pub window: Window,
    pub equations: Vec<TropicalLinearEquation>,
    /// Parallel to `equations`; `None` for equations loaded without provenance.
    pub provenance: Vec<Option<Provenance>>,
    pub sources: Vec<TropicalPolynomial>,
}

impl TropicalLinearSystem {
    pub fn empty(window: Window) -> Self {
        Self { window, equations: vec![], provenance: vec![], sources: vec![] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.window.size()
    }

    pub fn is_satisfied(&self, u: &[Rational]) -> bool {
        self.equations.iter().all(|e| e.is_satisfied(u))
    }

    /// Recomputes the equation from its provenance.
    pub fn reproduce(&self, i: usize) -> Option<TropicalLinearEquation> {
        let p = self.provenance[i].as_ref()?;
        Some(shifted_equation(&self.sources[p.source], &p.shift, self.window))
    }

    /// Returns the same system with equations and terms permuted.
    pub fn permuted(&self, eq_order: &[usize], term_orders: &[Vec<usize>]) -> Self {
        let equations = eq_order
            .iter()
            .map(|&i| {
                let e = &self.equations[i];
                TropicalLinearEquation { terms: term_orders[i].iter().map(|&t| e.terms[t].clone()).collect() }
            })
            .collect();
        let provenance = eq_order.iter().map(|&i| self.provenance[i].clone()).collect();
        Self { window: self.window, equations, provenance, sources: self.sources.clone() }
    }
}

/// Shift vectors `s` such that every `t_j + s` lies in `T_N`, first
/// coordinate varying fastest.
pub fn enumerate_shifts(f: &TropicalPolynomial, side: usize) -> Vec<Vec<i64>> {
    let n = f.n();
    let n_side = side as i64;
    let mut ranges = Vec::with_capacity(n);
    for i in 0..n {
        let lo = f.monomials().iter().map(|m| m.exponents[i]).min().expect("nonempty");
        let hi = f.monomials().iter().map(|m| m.exponents[i]).max().expect("nonempty");
        let (smin, smax) = (-lo, n_side - 1 - hi);
        if smin > smax {
            return vec![];
        }
        ranges.push((smin, smax));
    }
    let mut out = Vec::new();
    let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    loop {
        out.push(cur.clone());
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                break;
            }
            cur[i] = ranges[i].0;
            i += 1;
        }
    }
}

fn shifted_equation(f: &TropicalPolynomial, shift: &[i64], window: Window) -> TropicalLinearEquation {
    TropicalLinearEquation::new(
        f.monomials()
            .iter()
            .map(|m| {
                let k: Vec<i64> = m.exponents.iter().zip(shift).map(|(t, s)| t + s).collect();
                Term { constant: m.coeff.clone(), var: window.index(&k) }
            })
            .collect(),
    )
}

/// The system cutting out `U_N`: one equation per admissible shift.
pub fn linearize_polynomial(f: &TropicalPolynomial, side: usize) -> TropicalLinearSystem {
    linearize_family(Window::new(f.n(), side), std::slice::from_ref(f))
}

/// Union of the linearizations of `gens`, identical equations merged.
///
/// With fewer generators the solution set can only grow, so a finite family
/// of radical elements yields an over-approximation of `W_N`.
///
/// # Panics
/// If a generator's dimension differs from the window's.
pub fn linearize_family(window: Window, gens: &[TropicalPolynomial]) -> TropicalLinearSystem {
    let mut sys = TropicalLinearSystem::empty(window);
    let mut seen: HashSet<TropicalLinearEquation> = HashSet::new();
    for (gi, g) in gens.iter().enumerate() {
        assert_eq!(g.n(), window.n, "generator dimension differs from window");
        sys.sources.push(g.clone());
        for s in enumerate_shifts(g, window.side) {
            let eq = shifted_equation(g, &s, window);
            if seen.insert(eq.clone()) {
                sys.equations.push(eq);
                sys.provenance.push(Some(Provenance { source: gi, shift: s }));
            }
        }
    }
    sys
}

// ---- JSON form ------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct TermJson {
    #[serde(with = "crate::rational::serde_rational")]
    c: Rational,
    k: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct EquationJson {
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    n: usize,
    #[serde(rename = "N")]
    side: usize,
    equations: Vec<EquationJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    sources: Vec<TropicalPolynomial>,
}

impl Serialize for TropicalLinearSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let equations = self
            .equations
            .iter()
            .zip(&self.provenance)
            .map(|(e, p)| EquationJson {
                terms: e
                    .terms
                    .iter()
                    .map(|t| TermJson { c: t.constant.clone(), k: self.window.coords(t.var) })
                    .collect(),
                source: p.as_ref().map(|p| p.source),
                shift: p.as_ref().map(|p| p.shift.clone()),
            })
            .collect();
        SystemJson { n: self.window.n, side: self.window.side, equations, sources: self.sources.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropicalLinearSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SystemJson::deserialize(d)?;
        if raw.side == 0 {
            return Err(D::Error::custom("window side N must be at least 1"));
        }
        let window = Window::new(raw.n, raw.side);
        let mut sys = TropicalLinearSystem::empty(window);
        sys.sources = raw.sources;
        for e in raw.equations {
            if e.terms.is_empty() {
                return Err(D::Error::custom("equation without terms"));
            }
            let mut terms = Vec::new();
            for t in e.terms {
                if !window.contains(&t.k) {
                    return Err(D::Error::custom(format!("grid point {:?} outside the window", t.k)));
                }
                terms.push(Term { constant: t.c, var: window.index(&t.k) });
            }
            let prov = match (e.source, e.shift) {
                (Some(source), Some(shift)) if source < sys.sources.len() && shift.len() == window.n => {
                    Some(Provenance { source, shift })
                }
                _ => None,
            };
            sys.equations.push(TropicalLinearEquation::new(terms));
            sys.provenance.push(prov);
        }
        Ok(sys)
    }
}
