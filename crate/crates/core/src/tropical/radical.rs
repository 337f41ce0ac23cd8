use serde::Serialize;

use super::{curve_prevariety, newton_polygon, vanishes_on_ray, TropicalPolynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Membership of `g` in the radical of a zero-coefficient curve polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveMembership {
    /// `g` vanishes at the vertex and along every ray of `V(f)` (exact).
    pub member: bool,
    /// For every edge of the Newton polygon of `f`, the Newton polygon of `g`
    /// has an edge with the same outer normal. Implies `member`.
    pub sufficient_condition_met: bool,
}

/// Decides `g in rad(f)` for a single-vertex tropical curve `V(f)`.
///
/// Membership is decided by the exact ray oracle; the edge-parallel
/// condition is reported alongside and is not assumed to be necessary.
pub fn radical_member_curve(g: &TropicalPolynomial, f: &TropicalPolynomial) -> Result<CurveMembership> {
    let curve = curve_prevariety(f)?;
    g.require_bivariate()?;
    g.require_zero_coefficients()?;
    let origin = [Rational::from_integer(0.into()), Rational::from_integer(0.into())];
    let mut member = true;
    for ray in &curve.rays {
        if !vanishes_on_ray(g, &origin, ray)? {
            member = false;
            break;
        }
    }
    let g_normals = newton_polygon(g)?.outer_normals();
    let sufficient_condition_met = curve.polygon.edges.iter().all(|e| g_normals.contains(&e.outer_normal));
    Ok(CurveMembership { member, sufficient_condition_met })
}

/// True iff `g` is a tropical zero at every point of the finite prevariety `points`.
pub fn radical_member_zero_dim(g: &TropicalPolynomial, points: &[Vec<Rational>]) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::InvalidInput("zero-dimensional prevariety needs at least one point".into()));
    }
    for p in points {
        if !g.is_tropical_zero(p)? {
            return Ok(false);
        }
    }
    Ok(true)
}
