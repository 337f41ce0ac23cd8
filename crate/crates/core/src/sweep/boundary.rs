use serde::Serialize;

use crate::error::{Error, Result};
use crate::linearization::{zero_dim_radical_generator, GridFunction, Pick, Picks, ZeroDimPrevariety};
use crate::rational::{self, Rational};
use crate::tropical::{radical_member_zero_dim, TropicalPolynomial};

/// Greatest offsets `c` with `max_i (L_i(a) + c_i) <= -w(a)` on the grid, and
/// the points where the roof stays strictly below `-w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaxPlusFit {
    #[serde(with = "rational::serde_rational_vec")]
    pub offsets: Vec<Rational>,
    pub deficiency: Vec<Vec<i64>>,
}

pub fn maxplus_fit(v: &ZeroDimPrevariety, w: &GridFunction) -> Result<MaxPlusFit> {
    if w.window.n != v.n {
        return Err(Error::DimensionMismatch { expected: v.n, found: w.window.n });
    }
    let offsets: Vec<Rational> = (0..v.k())
        .map(|i| w.window.points().map(|a| -w.at(&a) - v.form_at(i, &a)).min().expect("window is nonempty"))
        .collect();
    let deficiency = w.window.points().filter(|a| -w.at(a) > v.roof(&offsets, a)).collect();
    Ok(MaxPlusFit { offsets, deficiency })
}

#[derive(Debug, Clone, Serialize)]
pub struct DeficiencyReport {
    pub certified: bool,
    pub fit: MaxPlusFit,
    #[serde(with = "rational::serde_rational")]
    pub threshold: Rational,
    /// `|D| + k`, the dimension bound for the enclosing set, when certified.
    pub bound: Option<usize>,
}

/// One-sided membership test: certified when the residuated fit leaves at
/// most `threshold` grid points off the boundary. A failure does not prove
/// anything, since other offsets may do better.
pub fn boundary_deficiency(v: &ZeroDimPrevariety, w: &GridFunction, threshold: &Rational) -> Result<DeficiencyReport> {
    if threshold < &rational::zero() {
        return Err(Error::InvalidInput("threshold must be nonnegative".into()));
    }
    let fit = maxplus_fit(v, w)?;
    let size = fit.deficiency.len();
    let certified = rational::int(size as i64) <= *threshold;
    Ok(DeficiencyReport { certified, bound: certified.then_some(size + v.k()), fit, threshold: threshold.clone() })
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeHit {
    pub generator: TropicalPolynomial,
    /// The unique minimizer of the generator's linearization at `w`.
    pub anchor: Vec<i64>,
    pub picks: Vec<Vec<i64>>,
    /// `coeff + w(a)` for every monomial of the generator, in its order.
    #[serde(with = "rational::serde_rational_vec")]
    pub term_values: Vec<Rational>,
    pub vanishes_on_prevariety: bool,
    pub unique_minimum: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub fit: MaxPlusFit,
    pub anchors_tried: usize,
    pub hit: Option<ProbeHit>,
    pub notes: Vec<String>,
}

/// Looks for a radical element, built on the boundary of the fitted
/// polyhedron, whose linearization fails at `w`.
///
/// Anchors are deficiency points, most deficient first. For an anchor `a0`
/// the generator uses `a0` plus, on every facet, two window points whose
/// deficiency is smaller than that of `a0`, so `a0` is the only minimizer.
pub fn zero_dim_radical_probe(v: &ZeroDimPrevariety, w: &GridFunction) -> Result<ProbeReport> {
    if v.k() < 2 {
        return Err(Error::InvalidInput("the probe needs at least two forms".into()));
    }
    let fit = maxplus_fit(v, w)?;
    let window = w.window;
    let c = &fit.offsets;
    let mut notes = Vec::new();
    let facets: Vec<Vec<Vec<i64>>> = (0..v.k()).map(|i| v.facet_points(c, window, i)).collect();
    let small: Vec<usize> = (0..v.k()).filter(|&i| facets[i].len() < 2).collect();
    if !small.is_empty() {
        for i in &small {
            notes.push(format!("facet {i} has {} window point(s); skipped", facets[*i].len()));
        }
        return Ok(ProbeReport { fit, anchors_tried: 0, hit: None, notes });
    }
    // gap(a) = roof(a) + w(a) <= 0, negative exactly on the deficiency set
    let gap = |a: &[i64]| v.roof(c, a) + w.at(a);
    let mut anchors = fit.deficiency.clone();
    anchors.sort_by(|a, b| gap(a).cmp(&gap(b)).then(a.cmp(b)));
    let mut tried = 0;
    for a0 in &anchors {
        tried += 1;
        let g0 = gap(a0);
        let mut picks: Vec<Vec<i64>> = vec![a0.clone()];
        let mut complete = true;
        for pts in &facets {
            let mut above: Vec<&Vec<i64>> = pts.iter().filter(|a| gap(a) > g0).collect();
            above.sort_by(|a, b| gap(b).cmp(&gap(a)).then(a.cmp(b)));
            if above.len() < 2 {
                complete = false;
                break;
            }
            for a in above.into_iter().take(2) {
                if !picks.contains(a) {
                    picks.push(a.clone());
                }
            }
        }
        if !complete {
            notes.push(format!("anchor {a0:?}: some facet lacks two points above it"));
            continue;
        }
        let explicit = Picks::Explicit(picks.iter().map(|p| Pick::on_roof(p.clone())).collect());
        let generator = zero_dim_radical_generator(v, c, window.side, &explicit)?;
        let term_values: Vec<Rational> = generator.monomials().iter().map(|m| &m.coeff + w.at(&m.exponents)).collect();
        let min = term_values.iter().min().expect("nonempty").clone();
        let unique_minimum = term_values.iter().filter(|t| **t == min).count() == 1
            && generator.monomials().iter().zip(&term_values).any(|(m, t)| *t == min && &m.exponents == a0);
        let vanishes_on_prevariety = radical_member_zero_dim(&generator, &v.points())?;
        if unique_minimum && vanishes_on_prevariety {
            let hit =
                ProbeHit { generator, anchor: a0.clone(), picks, term_values, vanishes_on_prevariety, unique_minimum };
            return Ok(ProbeReport { fit, anchors_tried: tried, hit: Some(hit), notes });
        }
        notes.push(format!("anchor {a0:?}: generator failed verification"));
    }
    Ok(ProbeReport { fit, anchors_tried: tried, hit: None, notes })
}
