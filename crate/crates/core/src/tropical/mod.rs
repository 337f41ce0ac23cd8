//! Tropical (min-plus) polynomials: evaluation, tropical zeros, Newton
//! polygons, single-vertex curves and radical membership oracles.

mod envelope;
mod newton;
mod radical;

pub use envelope::{ray_envelope, vanishes_on_ray, EnvelopePiece, RayEnvelope};
pub use newton::{curve_prevariety, newton_polygon, TropicalCurve};
pub use radical::{radical_member_curve, radical_member_zero_dim, CurveMembership};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// One affine form `coeff + <exponents, X>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalMonomial {
    #[serde(with = "crate::rational::serde_rational")]
    pub coeff: Rational,
    #[serde(rename = "exp")]
    pub exponents: Vec<i64>,
}

impl TropicalMonomial {
    pub fn new(coeff: Rational, exponents: Vec<i64>) -> Self {
        Self { coeff, exponents }
    }

    /// Monomial with zero coefficient.
    pub fn bare(exponents: Vec<i64>) -> Self {
        Self::new(Rational::zero(), exponents)
    }

    pub fn value_at(&self, x: &[Rational]) -> Rational {
        let mut v = self.coeff.clone();
        for (t, xi) in self.exponents.iter().zip(x) {
            if *t != 0 {
                v += xi * rational::int(*t);
            }
        }
        v
    }
}

/// `min_j { a_j + <t_j, X> }` over `R^n`.
///
/// Exponent vectors are kept pairwise distinct: duplicates are merged at
/// construction keeping the smaller coefficient, which leaves the function
/// unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalPolynomial {
    n: usize,
    monomials: Vec<TropicalMonomial>,
}

#[derive(Deserialize)]
struct RawPolynomial {
    n: usize,
    monomials: Vec<TropicalMonomial>,
}

impl<'de> Deserialize<'de> for TropicalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPolynomial::deserialize(d)?;
        TropicalPolynomial::new(raw.n, raw.monomials).map_err(serde::de::Error::custom)
    }
}

impl TropicalPolynomial {
    pub fn new(n: usize, monomials: Vec<TropicalMonomial>) -> Result<Self> {
        if monomials.is_empty() {
            return Err(Error::EmptyPolynomial);
        }
        let mut order: Vec<Vec<i64>> = Vec::new();
        let mut best: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for m in monomials {
            if m.exponents.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.exponents.len() });
            }
            match best.get_mut(&m.exponents) {
                Some(c) => {
                    if m.coeff < *c {
                        *c = m.coeff;
                    }
                }
                None => {
                    order.push(m.exponents.clone());
                    best.insert(m.exponents, m.coeff);
                }
            }
        }
        let monomials = order
            .into_iter()
            .map(|e| {
                let c = best.remove(&e).expect("recorded exponent");
                TropicalMonomial::new(c, e)
            })
            .collect();
        Ok(Self { n, monomials })
    }

    /// Zero-coefficient polynomial from a list of exponent vectors.
    pub fn from_exponents(n: usize, exps: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        Self::new(n, exps.into_iter().map(TropicalMonomial::bare).collect())
    }

    /// Zero-coefficient bivariate polynomial from lattice points.
    pub fn bivariate(points: &[[i64; 2]]) -> Result<Self> {
        Self::from_exponents(2, points.iter().map(|p| p.to_vec()))
    }

    /// `min{0, X, Y, X+Y}`, the running example with a unit-square Newton polygon.
    pub fn unit_square() -> Self {
        Self::bivariate(&[[0, 0], [1, 0], [0, 1], [1, 1]]).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &[TropicalMonomial] {
        &self.monomials
    }

    pub fn m(&self) -> usize {
        self.monomials.len()
    }

    pub fn has_zero_coefficients(&self) -> bool {
        self.monomials.iter().all(|m| m.coeff.is_zero())
    }

    pub(crate) fn require_zero_coefficients(&self) -> Result<()> {
        match self.monomials.iter().position(|m| !m.coeff.is_zero()) {
            Some(index) => {
                Err(Error::NonZeroCoefficient { index, coeff: rational::format(&self.monomials[index].coeff) })
            }
            None => Ok(()),
        }
    }

    pub(crate) fn require_bivariate(&self) -> Result<()> {
        if self.n != 2 {
            return Err(Error::NotBivariate(self.n));
        }
        Ok(())
    }

    /// Exponent vectors as lattice points; requires `n = 2`.
    pub fn support_2d(&self) -> Result<Vec<[i64; 2]>> {
        self.require_bivariate()?;
        Ok(self.monomials.iter().map(|m| [m.exponents[0], m.exponents[1]]).collect())
    }

    /// Scales every exponent vector by `lambda`.
    pub fn dilate(&self, lambda: i64) -> Self {
        Self::new(
            self.n,
            self.monomials
                .iter()
                .map(|m| TropicalMonomial::new(m.coeff.clone(), m.exponents.iter().map(|t| t * lambda).collect()))
                .collect(),
        )
        .expect("dilation of a valid polynomial")
    }

    /// Adds `shift` to every exponent vector (multiplication by a tropical monomial).
    pub fn shifted(&self, shift: &[i64]) -> Self {
        Self {
            n: self.n,
            monomials: self
                .monomials
                .iter()
                .map(|m| {
                    TropicalMonomial::new(m.coeff.clone(), m.exponents.iter().zip(shift).map(|(t, s)| t + s).collect())
                })
                .collect(),
        }
    }

    fn check_point(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(())
    }

    /// Exact value and argmin set at `x`.
    pub fn evaluate(&self, x: &[Rational]) -> Result<EvalResult> {
        self.check_point(x)?;
        let values: Vec<Rational> = self.monomials.iter().map(|m| m.value_at(x)).collect();
        Ok(EvalResult::from_values(&values))
    }

    /// True iff the minimum is attained at least twice at `x`.
    pub fn is_tropical_zero(&self, x: &[Rational]) -> Result<bool> {
        Ok(self.evaluate(x)?.argmin.len() >= 2)
    }
}

/// Minimum value together with every index attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalResult {
    #[serde(with = "crate::rational::serde_rational")]
    pub value: Rational,
    pub argmin: Vec<usize>,
}

impl EvalResult {
    /// # Panics
    /// On an empty slice.
    pub fn from_values(values: &[Rational]) -> Self {
        let value = values.iter().min().expect("nonempty").clone();
        let argmin = values.iter().enumerate().filter(|(_, v)| **v == value).map(|(i, _)| i).collect();
        Self { value, argmin }
    }

    pub fn attained_twice(&self) -> bool {
        self.argmin.len() >= 2
    }
}

/// Rational point from integers, handy in tests and examples.
pub fn point(coords: &[i64]) -> Vec<Rational> {
    coords.iter().map(|&c| rational::int(c)).collect()
}
