use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{dim_prevariety_with, SearchOptions};
use crate::error::{Error, Result};
use crate::linearization::{linearize_polynomial, Window};
use crate::tropical::TropicalPolynomial;

/// The cube `origin + [0, side)^n` inside a larger window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubWindow {
    pub side: usize,
    pub origin: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FeketeCheck {
    pub q: usize,
    pub bound: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubadditivityReport {
    #[serde(rename = "N")]
    pub side: usize,
    pub dim: i64,
    /// `dim(U_q)` for every side used by the partition.
    pub block_dims: BTreeMap<usize, i64>,
    pub sum: i64,
    pub holds: bool,
    pub fekete: FeketeCheck,
    /// False if some search ran out of budget.
    pub complete: bool,
}

/// Tiles `T_N` by `floor(N/q)^n` cubes of side `q` and unit cubes for the rest.
pub fn fekete_partition(n: usize, side: usize, q: usize) -> Vec<SubWindow> {
    assert!(q >= 1 && q <= side, "block side out of range");
    let k = side / q;
    let covered = (k * q) as i64;
    let mut blocks: Vec<SubWindow> = Window::new(n, k)
        .points()
        .map(|c| SubWindow { side: q, origin: c.iter().map(|x| x * q as i64).collect() })
        .collect();
    for p in Window::new(n, side).points() {
        if p.iter().any(|&x| x >= covered) {
            blocks.push(SubWindow { side: 1, origin: p });
        }
    }
    blocks
}

fn check_tiling(n: usize, side: usize, partition: &[SubWindow]) -> Result<()> {
    let window = Window::new(n, side);
    let mut hit = vec![false; window.size()];
    for (b, block) in partition.iter().enumerate() {
        if block.side == 0 || block.origin.len() != n {
            return Err(Error::InvalidPartition(format!("block {b} is malformed")));
        }
        for off in Window::new(n, block.side).points() {
            let p: Vec<i64> = block.origin.iter().zip(&off).map(|(o, x)| o + x).collect();
            if !window.contains(&p) {
                return Err(Error::InvalidPartition(format!("block {b} leaves the window at {p:?}")));
            }
            let i = window.index(&p);
            if hit[i] {
                return Err(Error::InvalidPartition(format!("point {p:?} covered twice")));
            }
            hit[i] = true;
        }
    }
    if let Some(i) = hit.iter().position(|h| !h) {
        return Err(Error::InvalidPartition(format!("point {:?} not covered", window.coords(i))));
    }
    Ok(())
}

/// Computes `dim(U_N)` and the dims of the blocks of `partition` and checks
/// `dim(U_N) <= sum of block dims`, plus the Fekete-style bound for the
/// largest block side.
pub fn subadditivity_audit(
    f: &TropicalPolynomial,
    side: usize,
    partition: &[SubWindow],
    opts: &SearchOptions,
) -> Result<SubadditivityReport> {
    let n = f.n();
    check_tiling(n, side, partition)?;
    let mut complete = true;
    let mut dim_of = |q: usize| {
        let r = dim_prevariety_with(&linearize_polynomial(f, q), opts);
        complete &= r.complete;
        r.dim
    };
    let dim = dim_of(side);
    let mut block_dims = BTreeMap::new();
    for b in partition {
        if let std::collections::btree_map::Entry::Vacant(e) = block_dims.entry(b.side) {
            e.insert(dim_of(b.side));
        }
    }
    let sum = partition.iter().map(|b| block_dims[&b.side]).sum();
    let q = partition.iter().map(|b| b.side).max().expect("tiling is nonempty");
    let k = (side / q) as i64;
    let e = n as u32;
    let bound = k.pow(e) * block_dims[&q] + (side as i64).pow(e) - (k * q as i64).pow(e);
    Ok(SubadditivityReport {
        side,
        dim,
        block_dims,
        sum,
        holds: dim <= sum,
        fekete: FeketeCheck { q, bound, holds: dim <= bound },
        complete,
    })
}
