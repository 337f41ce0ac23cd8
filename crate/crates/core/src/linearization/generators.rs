//! A finite, documented family of radical elements of a single-vertex curve.
//!
//! For a zero-coefficient `f` whose Newton polygon `P` has primitive edge
//! directions `d_1..d_e` (counterclockwise), every choice of integers
//! `mu_i >= 1` with `sum mu_i d_i = 0` closes up into a convex lattice polygon
//! whose edges have the same outer normals as `P`. The zero-coefficient
//! polynomial on its vertices vanishes on every ray of `V(f)`. The family
//! returned is: those polygons (including the dilations `mu = lambda * len`),
//! the dilations of `f` itself, each translated to every position inside the
//! window. It is deliberately not exhaustive.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::polyhedra::LatticePoint;
use crate::tropical::{curve_prevariety, TropicalPolynomial};

/// Vertex lists (normalized so the bounding box starts at the origin) of the
/// polygons with edge vectors `mu_i d_i` whose bounding box fits in `side`.
pub fn polygon_shapes(directions: &[LatticePoint], side: usize) -> Vec<Vec<LatticePoint>> {
    let limit = side as i64 - 1;
    let mut out = Vec::new();
    let mut mu = vec![0i64; directions.len()];
    fn rec(
        i: usize,
        pos: LatticePoint,
        bbox: [i64; 4],
        dirs: &[LatticePoint],
        mu: &mut Vec<i64>,
        limit: i64,
        out: &mut Vec<Vec<LatticePoint>>,
    ) {
        if i == dirs.len() {
            if pos == [0, 0] {
                let mut verts = Vec::with_capacity(dirs.len());
                let mut p = [0i64, 0];
                for (d, m) in dirs.iter().zip(mu.iter()) {
                    verts.push([p[0] - bbox[0], p[1] - bbox[2]]);
                    p = [p[0] + d[0] * m, p[1] + d[1] * m];
                }
                out.push(verts);
            }
            return;
        }
        let d = dirs[i];
        for m in 1..=limit.max(1) {
            let np = [pos[0] + d[0] * m, pos[1] + d[1] * m];
            let nb = [bbox[0].min(np[0]), bbox[1].max(np[0]), bbox[2].min(np[1]), bbox[3].max(np[1])];
            if nb[1] - nb[0] > limit || nb[3] - nb[2] > limit {
                break;
            }
            mu[i] = m;
            rec(i + 1, np, nb, dirs, mu, limit, out);
        }
    }
    if limit >= 1 {
        rec(0, [0, 0], [0, 0, 0, 0], directions, &mut mu, limit, &mut out);
    }
    out
}

fn translates(points: &[LatticePoint], side: usize) -> Vec<Vec<LatticePoint>> {
    let min_x = points.iter().map(|p| p[0]).min().expect("nonempty");
    let min_y = points.iter().map(|p| p[1]).min().expect("nonempty");
    let w = points.iter().map(|p| p[0]).max().unwrap() - min_x;
    let h = points.iter().map(|p| p[1]).max().unwrap() - min_y;
    let s = side as i64;
    let mut out = Vec::new();
    for dy in 0..s - h {
        for dx in 0..s - w {
            out.push(points.iter().map(|p| [p[0] - min_x + dx, p[1] - min_y + dy]).collect());
        }
    }
    out
}

/// Radical elements of `f` with support inside `T_N`, deduplicated, in a
/// deterministic order (shapes by size, then translates row by row).
pub fn curve_radical_generators(f: &TropicalPolynomial, side: usize) -> Result<Vec<TropicalPolynomial>> {
    let curve = curve_prevariety(f)?;
    let support = f.support_2d()?;
    let mut shapes: Vec<Vec<LatticePoint>> = Vec::new();
    for lambda in 1.. {
        let dilated: Vec<LatticePoint> = support.iter().map(|p| [p[0] * lambda, p[1] * lambda]).collect();
        let before = shapes.len();
        if !translates(&dilated, side).is_empty() {
            shapes.push(dilated);
        }
        if shapes.len() == before {
            break;
        }
    }
    let dirs: Vec<LatticePoint> = curve.polygon.edges.iter().map(|e| e.direction).collect();
    shapes.extend(polygon_shapes(&dirs, side));

    let mut seen: BTreeSet<Vec<LatticePoint>> = BTreeSet::new();
    let mut out = Vec::new();
    for shape in shapes {
        for t in translates(&shape, side) {
            let mut key = t.clone();
            key.sort();
            if seen.insert(key) {
                out.push(TropicalPolynomial::bivariate(&t)?);
            }
        }
    }
    Ok(out)
}
