//! Dimension of tropical linear prevarieties.
//!
//! A point lies on the prevariety when every equation has its minimum attained
//! at least twice. Choosing, per equation, one pair of terms that are jointly
//! minimal cuts the prevariety into polyhedral cells; the dimension is the
//! largest cell dimension.

mod containment;
mod dbm;
mod search;
mod subadditivity;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use containment::{contains_polyhedron, ContainmentReport, EquationCertificate};
pub use subadditivity::{fekete_partition, subadditivity_audit, SubWindow, SubadditivityReport};

use crate::error::{Error, Result};
use crate::linearization::TropicalLinearSystem;
use crate::polyhedra::{LinearForm, RationalPolyhedron};

/// One pair of term indices (0-based, `p < q`) per equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CellPattern(pub Vec<(usize, usize)>);

impl CellPattern {
    pub fn validate(&self, system: &TropicalLinearSystem) -> Result<()> {
        if self.0.len() != system.equations.len() {
            return Err(Error::InvalidPattern(format!(
                "{} pairs for {} equations",
                self.0.len(),
                system.equations.len()
            )));
        }
        for (i, (&(p, q), eq)) in self.0.iter().zip(&system.equations).enumerate() {
            if p == q || p >= eq.len() || q >= eq.len() {
                return Err(Error::InvalidPattern(format!("equation {i}: pair ({p},{q}) with {} terms", eq.len())));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimResult {
    pub dim: i64,
    pub witness_pattern: Option<CellPattern>,
    #[serde(rename = "explored")]
    pub cells_explored: u64,
    #[serde(rename = "pruned")]
    pub cells_pruned: u64,
    /// False when the budget ran out; `dim` is then only a lower bound.
    pub complete: bool,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub max_cells: Option<u64>,
    pub time_limit: Option<Duration>,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { max_cells: None, time_limit: None, workers: std::thread::available_parallelism().map_or(1, |n| n.get()) }
    }
}

impl SearchOptions {
    pub fn sequential() -> Self {
        Self { workers: 1, ..Self::default() }
    }
}

/// The closed cell where pair `(p, q)` of each equation is jointly minimal.
pub fn cell_polyhedron(system: &TropicalLinearSystem, pattern: &CellPattern) -> Result<RationalPolyhedron> {
    pattern.validate(system)?;
    let d = system.ambient_dim();
    let mut poly = RationalPolyhedron::new(d);
    for (eq, &(p, q)) in system.equations.iter().zip(&pattern.0) {
        let (tp, tq) = (&eq.terms[p], &eq.terms[q]);
        // c_q + u_q - c_p - u_p = 0
        poly.add_equality(LinearForm::difference(d, tq.var, tp.var, &tq.constant - &tp.constant));
        for (r, tr) in eq.terms.iter().enumerate() {
            if r != p && r != q {
                poly.add_inequality(LinearForm::difference(d, tr.var, tp.var, &tr.constant - &tp.constant));
            }
        }
    }
    Ok(poly)
}

/// Exact dimension with default options (all cores, no budget).
pub fn dim_prevariety(system: &TropicalLinearSystem) -> DimResult {
    dim_prevariety_with(system, &SearchOptions::default())
}

pub fn dim_prevariety_with(system: &TropicalLinearSystem, opts: &SearchOptions) -> DimResult {
    search::search(system, opts)
}
