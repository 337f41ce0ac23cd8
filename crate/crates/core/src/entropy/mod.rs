//! Brackets for the entropy `lim dim(U_N) / N^n`: upper bounds from exact
//! dimensions at finite `N`, lower bounds from verified witness families.

mod witness;

pub use witness::{AsymptoticClaim, WitnessFamily};

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linearization::{curve_radical_generators, linearize_family, TropicalLinearSystem, Window};
use crate::polyhedra::RationalPolyhedron;
use crate::prevariety::{contains_polyhedron, dim_prevariety_with, ContainmentReport, SearchOptions};
use crate::rational::{self, Rational};
use crate::tropical::TropicalPolynomial;

/// What is being linearized at each window size.
#[derive(Debug, Clone)]
pub enum Target {
    Polynomial(TropicalPolynomial),
    /// The radical family of a zero-coefficient plane curve polynomial.
    CurveRadical(TropicalPolynomial),
    Generators(Vec<TropicalPolynomial>),
}

impl Target {
    pub fn n(&self) -> usize {
        match self {
            Self::Polynomial(f) | Self::CurveRadical(f) => f.n(),
            Self::Generators(g) => g.first().map_or(0, |f| f.n()),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Self::Polynomial(_) => "polynomial",
            Self::CurveRadical(_) => "curve-radical",
            Self::Generators(_) => "generators",
        }
    }

    pub fn system(&self, side: usize) -> Result<TropicalLinearSystem> {
        let window = Window::new(self.n(), side);
        Ok(match self {
            Self::Polynomial(f) => linearize_family(window, std::slice::from_ref(f)),
            Self::CurveRadical(f) => linearize_family(window, &curve_radical_generators(f, side)?),
            Self::Generators(g) => linearize_family(window, g),
        })
    }

    /// Smallest `R` with the support inside a translate of `T_R`.
    fn support_side(&self) -> Option<usize> {
        let Self::Polynomial(f) = self else { return None };
        (0..f.n())
            .map(|i| {
                let e = f.monomials().iter().map(|m| m.exponents[i]);
                (e.clone().max().unwrap() - e.min().unwrap() + 1) as usize
            })
            .max()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryStatus {
    Complete,
    /// Budget ran out: `dim` is only a lower bound and the entry is not an
    /// upper bound on the entropy.
    Partial,
    /// No shift fits in the window, so there are no equations.
    EmptyWindow,
}

impl EntryStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Complete => "complete",
            Self::Partial => "partial",
            Self::EmptyWindow => "empty_window",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperEntry {
    #[serde(rename = "N")]
    pub side: usize,
    pub dim: i64,
    #[serde(with = "rational::serde_rational")]
    pub ratio: Rational,
    pub status: EntryStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct UpperSequence {
    pub entries: Vec<UpperEntry>,
    /// Minimum ratio over non-partial entries, 1 if there are none.
    #[serde(with = "rational::serde_rational")]
    pub upper: Rational,
}

pub fn entropy_upper(target: &Target, n_max: usize, opts: &SearchOptions) -> Result<UpperSequence> {
    if n_max == 0 {
        return Err(Error::InvalidInput("N_max must be at least 1".into()));
    }
    let n = target.n() as u32;
    let mut entries = Vec::with_capacity(n_max);
    for side in 1..=n_max {
        let system = target.system(side)?;
        let volume = (side as i64).pow(n);
        let (dim, status) = if system.equations.is_empty() {
            (volume, EntryStatus::EmptyWindow)
        } else {
            let r = dim_prevariety_with(&system, opts);
            (r.dim, if r.complete { EntryStatus::Complete } else { EntryStatus::Partial })
        };
        entries.push(UpperEntry { side, dim, ratio: rational::ratio(dim.max(0), volume), status });
    }
    let upper = entries
        .iter()
        .filter(|e| e.status != EntryStatus::Partial)
        .map(|e| e.ratio.clone())
        .min()
        .unwrap_or_else(rational::one);
    Ok(UpperSequence { entries, upper })
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessCheck {
    pub family: WitnessFamily,
    #[serde(rename = "N")]
    pub side: usize,
    pub claimed_dim: i64,
    pub affine_dim: i64,
    pub containment: ContainmentReport,
    /// `dim(target at N) >= bound`, present only when containment is proven.
    pub bound: Option<i64>,
}

/// Checks that the family's polyhedron lies in the target's prevariety at
/// `N` and returns its dimension as a lower bound.
pub fn witness_lower(target: &Target, family: WitnessFamily, side: usize) -> Result<WitnessCheck> {
    if target.n() != 2 {
        return Err(Error::InvalidInput("witness families live in plane windows".into()));
    }
    let system = target.system(side)?;
    let poly: RationalPolyhedron = family.polyhedron(side);
    let containment = contains_polyhedron(&system, &poly, None, true);
    let affine_dim = poly.affine_dim();
    let bound = containment.contained.then_some(affine_dim);
    Ok(WitnessCheck { family, side, claimed_dim: family.claimed_dim(side), affine_dim, containment, bound })
}

#[derive(Debug, Clone, Serialize)]
pub struct EntropyBracket {
    pub target: &'static str,
    #[serde(with = "rational::serde_rational")]
    pub lower: Rational,
    /// The family behind `lower`; its density is an asymptotic claim read
    /// off the dimension formula, checked at every computed `N`.
    pub lower_claim: Option<AsymptoticClaim>,
    #[serde(with = "rational::serde_rational")]
    pub upper: Rational,
    pub upper_sequence: Vec<UpperEntry>,
    pub witness_checks: Vec<WitnessCheck>,
    /// Every verified witness bound is at most the computed dimension.
    pub consistent: bool,
    /// `1 - 1/R^n` for support inside `T_R`, and whether `upper` meets it.
    #[serde(with = "rational::serde_rational_opt")]
    pub support_bound: Option<Rational>,
    pub support_bound_certified: bool,
}

pub fn entropy_bracket(
    target: &Target,
    n_max: usize,
    families: &[WitnessFamily],
    opts: &SearchOptions,
) -> Result<EntropyBracket> {
    let seq = entropy_upper(target, n_max, opts)?;
    let mut checks = Vec::new();
    let mut lower_claim: Option<AsymptoticClaim> = None;
    let mut consistent = true;
    for &family in families {
        let mut all = true;
        for side in 2..=n_max {
            let check = witness_lower(target, family, side)?;
            let entry = &seq.entries[side - 1];
            match check.bound {
                Some(b) => consistent &= entry.status != EntryStatus::Complete || b <= entry.dim,
                None => all = false,
            }
            all &= check.affine_dim == check.claimed_dim;
            checks.push(check);
        }
        let claim = family.asymptotic();
        if all && n_max >= 2 && lower_claim.as_ref().is_none_or(|c| claim.density > c.density) {
            lower_claim = Some(claim);
        }
    }
    let lower = lower_claim.as_ref().map_or_else(rational::zero, |c| c.density.clone());
    let support_bound =
        target.support_side().map(|r| rational::one() - rational::ratio(1, (r as i64).pow(target.n() as u32)));
    let support_bound_certified = support_bound.as_ref().is_some_and(|b| seq.upper <= *b);
    Ok(EntropyBracket {
        target: target.label(),
        lower,
        lower_claim,
        upper: seq.upper,
        upper_sequence: seq.entries,
        witness_checks: checks,
        consistent,
        support_bound,
        support_bound_certified,
    })
}

/// `N,dim,ratio_exact,ratio_decimal,status` rows.
pub fn write_csv<W: Write>(entries: &[UpperEntry], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["N", "dim", "ratio_exact", "ratio_decimal", "status"]).map_err(io)?;
    for e in entries {
        w.write_record([
            e.side.to_string(),
            e.dim.to_string(),
            rational::format(&e.ratio),
            format!("{}", rational::to_f64(&e.ratio)),
            e.status.as_str().to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}
