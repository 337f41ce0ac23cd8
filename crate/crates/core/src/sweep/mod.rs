//! Polygon sweep over a grid point of `R^{T_N}` for a plane curve, and the
//! max-plus boundary fit for finite prevarieties.
//!
//! The sweep peels lattice lines off the square `T_N`, one edge direction of
//! the Newton polygon at a time. A line carrying at most two values of `w` is
//! removed; when every edge direction shows at least three values on its
//! outermost line, the triples assemble a radical element whose linearization
//! fails at `w`.

mod boundary;

pub use boundary::{
    boundary_deficiency, maxplus_fit, zero_dim_radical_probe, DeficiencyReport, MaxPlusFit, ProbeHit, ProbeReport,
};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linearization::{GridFunction, Window};
use crate::polyhedra::LatticePoint;
use crate::rational::{self, Rational};
use crate::tropical::{newton_polygon, radical_member_curve, CurveMembership, TropicalPolynomial};

/// One attempt to peel the outermost line of `Q` normal to an edge.
#[derive(Debug, Clone, Serialize)]
pub struct SweepStep {
    pub edge: usize,
    /// The line is `<normal, p> = level`.
    pub normal: LatticePoint,
    pub level: i64,
    pub points: Vec<LatticePoint>,
    #[serde(with = "rational::serde_rational_vec")]
    pub values: Vec<Rational>,
    pub shrunk: bool,
}

/// The region `Q`: grid points of `T_N` inside every accumulated half-plane
/// `<normal, p> <= bound`.
#[derive(Debug, Clone, Serialize)]
pub struct SweepState {
    pub side: usize,
    pub half_planes: Vec<(LatticePoint, i64)>,
    pub remaining: Vec<LatticePoint>,
    pub log: Vec<SweepStep>,
}

impl SweepState {
    fn start(side: usize) -> Self {
        let n = side as i64;
        let remaining = (0..n).flat_map(|y| (0..n).map(move |x| [x, y])).collect();
        let half_planes = vec![([-1, 0], 0), ([1, 0], n - 1), ([0, -1], 0), ([0, 1], n - 1)];
        Self { side, half_planes, remaining, log: Vec::new() }
    }

    /// Outermost line of `Q` in direction `normal` and the points on it.
    fn outer_line(&self, normal: LatticePoint) -> Option<(i64, Vec<LatticePoint>)> {
        let level = self.remaining.iter().map(|p| dot(normal, *p)).max()?;
        let on: Vec<LatticePoint> = self.remaining.iter().copied().filter(|p| dot(normal, *p) == level).collect();
        Some((level, on))
    }
}

fn dot(a: LatticePoint, b: LatticePoint) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepOutcome {
    Certificate {
        steps: usize,
        /// Values on each peeled line, at most two per step.
        #[serde(serialize_with = "serialize_nested")]
        step_values: Vec<Vec<Rational>>,
        /// Number of distinct values of `w` over all peeled points.
        d: usize,
    },
    Counterexample {
        g: TropicalPolynomial,
        violated_at: LatticePoint,
        /// Per edge, the three lowest-valued points of its outer line.
        triples: Vec<Vec<LatticePoint>>,
        support: Vec<LatticePoint>,
        #[serde(with = "rational::serde_rational_vec")]
        term_values: Vec<Rational>,
    },
}

fn serialize_nested<S: serde::Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&row.iter().map(rational::format).collect::<Vec<_>>())?;
    }
    seq.end()
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRun {
    pub outcome: SweepOutcome,
    pub state: SweepState,
}

/// The three lowest distinct values on a line, lexicographically smallest
/// point per value. `None` when the line carries fewer than three values.
fn lowest_triple(points: &[LatticePoint], w: &GridFunction) -> Option<Vec<LatticePoint>> {
    let mut by_value: BTreeMap<&Rational, LatticePoint> = BTreeMap::new();
    for p in points {
        let v = w.at(p);
        by_value.entry(v).and_modify(|q| *q = (*q).min(*p)).or_insert(*p);
    }
    (by_value.len() >= 3).then(|| by_value.values().take(3).copied().collect())
}

/// Runs the sweep for a zero-coefficient bivariate `f` with a 2-dimensional
/// Newton polygon on the grid function `w` over `T_N`.
///
/// Each step tries the edges counterclockwise from the first one and peels
/// the first outermost line carrying at most two values.
pub fn sweep_curve(f: &TropicalPolynomial, w: &GridFunction) -> Result<SweepRun> {
    f.require_bivariate()?;
    f.require_zero_coefficients()?;
    if w.window.n != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: w.window.n });
    }
    let poly = newton_polygon(f)?;
    if poly.dim() != 2 {
        return Err(Error::DegenerateNewtonPolygon(poly.dim()));
    }
    let normals: Vec<LatticePoint> = poly.edges.iter().map(|e| e.outer_normal).collect();
    let mut state = SweepState::start(w.window.side);
    let mut step_values: Vec<Vec<Rational>> = Vec::new();
    let mut swept: BTreeSet<&Rational> = BTreeSet::new();
    while !state.remaining.is_empty() {
        let mut shrunk = false;
        let mut lines = Vec::with_capacity(normals.len());
        for (ei, &normal) in normals.iter().enumerate() {
            let (level, on) = state.outer_line(normal).expect("Q is nonempty");
            let mut values: Vec<Rational> = on.iter().map(|p| w.at(p).clone()).collect();
            values.sort();
            values.dedup();
            let ok = values.len() <= 2;
            state.log.push(SweepStep {
                edge: ei,
                normal,
                level,
                points: on.clone(),
                values: values.clone(),
                shrunk: ok,
            });
            if ok {
                state.half_planes.push((normal, level - 1));
                state.remaining.retain(|p| dot(normal, *p) < level);
                for p in &on {
                    swept.insert(w.at(p));
                }
                step_values.push(values);
                shrunk = true;
                break;
            }
            lines.push(on);
        }
        if !shrunk {
            return counterexample(&lines, w).map(|outcome| SweepRun { outcome, state });
        }
    }
    let d = swept.len();
    Ok(SweepRun { outcome: SweepOutcome::Certificate { steps: step_values.len(), step_values, d }, state })
}

fn counterexample(lines: &[Vec<LatticePoint>], w: &GridFunction) -> Result<SweepOutcome> {
    let triples: Vec<Vec<LatticePoint>> =
        lines.iter().map(|on| lowest_triple(on, w).expect("line has three distinct values")).collect();
    let anchor =
        *triples.iter().flatten().min_by(|a, b| w.at(*a).cmp(w.at(*b)).then(a.cmp(b))).expect("at least one edge");
    let floor = w.at(&anchor).clone();
    let mut support: BTreeSet<LatticePoint> = BTreeSet::from([anchor]);
    for t in &triples {
        support.extend(t.iter().filter(|p| *w.at(*p) > floor).take(2));
    }
    let support: Vec<LatticePoint> = support.into_iter().collect();
    let g = TropicalPolynomial::bivariate(&support)?;
    let term_values: Vec<Rational> = support.iter().map(|p| w.at(p).clone()).collect();
    Ok(SweepOutcome::Counterexample { g, violated_at: anchor, triples, support, term_values })
}

/// Independent re-check of a sweep outcome: a counterexample must be a
/// radical member whose shift-0 linearization has a unique minimizer at the
/// reported point; a certificate must recount its distinct values.
pub fn verify_outcome(f: &TropicalPolynomial, w: &GridFunction, outcome: &SweepOutcome) -> Result<bool> {
    match outcome {
        SweepOutcome::Certificate { steps, d, .. } => Ok(*d == w.distinct_values() && *d <= 2 * steps),
        SweepOutcome::Counterexample { g, violated_at, .. } => {
            let CurveMembership { member, .. } = radical_member_curve(g, f)?;
            let values: Vec<(Rational, LatticePoint)> = g
                .monomials()
                .iter()
                .map(|m| {
                    let p = [m.exponents[0], m.exponents[1]];
                    (w.at(&p).clone(), p)
                })
                .collect();
            let min = values.iter().map(|(v, _)| v).min().expect("g is nonempty");
            let at_min: Vec<LatticePoint> = values.iter().filter(|(v, _)| v == min).map(|(_, p)| *p).collect();
            Ok(member && at_min == [*violated_at])
        }
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BoundReport {
    pub samples: usize,
    pub certificates: usize,
    pub counterexamples: usize,
    pub max_steps: usize,
    pub max_d: usize,
    /// Indices of samples breaking `steps <= 2N`, `d <= 4N`, or failing
    /// verification.
    pub violations: Vec<usize>,
}

impl BoundReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the sweep for the unit-square-shaped `f` on every sample and checks
/// the step and value-count bounds of the resulting certificates.
pub fn certificate_bound_check(f: &TropicalPolynomial, samples: &[GridFunction]) -> Result<BoundReport> {
    let poly = newton_polygon(f)?;
    if poly.vertices != [[0, 0], [1, 0], [1, 1], [0, 1]] {
        return Err(Error::InvalidInput("Newton polygon must be the unit square".into()));
    }
    let mut report = BoundReport { samples: samples.len(), ..Default::default() };
    for (i, w) in samples.iter().enumerate() {
        let run = sweep_curve(f, w)?;
        let side = w.window.side;
        let mut ok = verify_outcome(f, w, &run.outcome)?;
        match run.outcome {
            SweepOutcome::Certificate { steps, d, .. } => {
                report.certificates += 1;
                report.max_steps = report.max_steps.max(steps);
                report.max_d = report.max_d.max(d);
                ok &= steps <= 2 * side && d <= 4 * side;
            }
            SweepOutcome::Counterexample { .. } => report.counterexamples += 1,
        }
        if !ok {
            report.violations.push(i);
        }
    }
    Ok(report)
}

/// `w(x, y) = c(x)` on `T_N`.
pub fn column_function(side: usize, c: impl Fn(i64) -> Rational) -> GridFunction {
    GridFunction::from_fn(Window::new(2, side), |k| c(k[0]))
}
