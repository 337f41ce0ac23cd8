//! Restriction of a tropical polynomial to a ray and the lower envelope of
//! the resulting affine functions of the ray parameter `t >= 0`.

use num_traits::Zero;
use serde::Serialize;

use super::TropicalPolynomial;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A maximal interval `[start, next start)` on which one line is minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnvelopePiece {
    #[serde(with = "crate::rational::serde_rational")]
    pub start: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub intercept: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub slope: Rational,
    /// Number of monomials restricting to exactly this line.
    pub multiplicity: usize,
}

/// Breakpoint structure of `t -> min_j (alpha_j + beta_j t)` on `[0, inf)`.
///
/// `breakpoints[i]` is the start of `pieces[i]` paired with the number of
/// monomials attaining the minimum there; the first breakpoint is `t = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RayEnvelope {
    pub pieces: Vec<EnvelopePiece>,
    pub breakpoint_support: Vec<usize>,
}

impl RayEnvelope {
    /// Minimum attained at least twice for every `t >= 0`.
    pub fn vanishes(&self) -> bool {
        self.pieces.iter().all(|p| p.multiplicity >= 2) && self.breakpoint_support.iter().all(|&s| s >= 2)
    }
}

struct Line {
    intercept: Rational,
    slope: Rational,
    multiplicity: usize,
}

impl Line {
    fn at(&self, t: &Rational) -> Rational {
        &self.intercept + &self.slope * t
    }
}

/// Lower envelope of `g` restricted to `base + t * dir`, `t >= 0`.
pub fn ray_envelope(g: &TropicalPolynomial, base: &[Rational], dir: &[i64]) -> Result<RayEnvelope> {
    if base.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: base.len() });
    }
    if dir.len() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: dir.len() });
    }
    if dir.iter().all(|&d| d == 0) {
        return Err(Error::ZeroDirection);
    }

    let mut lines: Vec<Line> = Vec::new();
    for m in g.monomials() {
        let intercept = m.value_at(base);
        let slope = rational::int(m.exponents.iter().zip(dir).map(|(t, d)| t * d).sum());
        match lines.iter_mut().find(|l| l.intercept == intercept && l.slope == slope) {
            Some(l) => l.multiplicity += 1,
            None => lines.push(Line { intercept, slope, multiplicity: 1 }),
        }
    }

    let mut pieces = Vec::new();
    let mut breakpoint_support = Vec::new();
    let mut t = Rational::zero();
    loop {
        let values: Vec<Rational> = lines.iter().map(|l| l.at(&t)).collect();
        let min = values.iter().min().expect("nonempty").clone();
        let tied: Vec<usize> = (0..lines.len()).filter(|&i| values[i] == min).collect();
        breakpoint_support.push(tied.iter().map(|&i| lines[i].multiplicity).sum());
        // Among the lines tied at t, the one with the smallest slope stays
        // minimal immediately to the right of t.
        let cur = *tied.iter().min_by(|&&a, &&b| lines[a].slope.cmp(&lines[b].slope)).expect("nonempty");
        pieces.push(EnvelopePiece {
            start: t.clone(),
            intercept: lines[cur].intercept.clone(),
            slope: lines[cur].slope.clone(),
            multiplicity: lines[cur].multiplicity,
        });
        let next = lines
            .iter()
            .filter(|l| l.slope < lines[cur].slope)
            .map(|l| (&l.intercept - &lines[cur].intercept) / (&lines[cur].slope - &l.slope))
            .min();
        match next {
            Some(nt) => {
                debug_assert!(nt > t);
                t = nt;
            }
            None => break,
        }
    }
    Ok(RayEnvelope { pieces, breakpoint_support })
}

/// True iff `g` has its minimum attained at least twice at every point of
/// the closed ray `base + t * dir`, `t >= 0`.
pub fn vanishes_on_ray(g: &TropicalPolynomial, base: &[Rational], dir: &[i64]) -> Result<bool> {
    Ok(ray_envelope(g, base, dir)?.vanishes())
}
