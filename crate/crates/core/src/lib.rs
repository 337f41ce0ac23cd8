//! Tropical linear prevarieties: exact dimensions of linearizations of
//! tropical polynomials over finite grids, entropy brackets, and radical
//! membership tools for plane curves and finite point sets.

pub mod cli;
pub mod entropy;
pub mod error;
pub mod linearization;
pub mod polyhedra;
pub mod prevariety;
pub mod rational;
pub mod selftest;
pub mod sweep;
pub mod tropical;

pub use error::{Error, Result};
