//! Lattice convex hulls in the plane (Newton polygons).

use num_integer::Integer;
use serde::Serialize;

pub type LatticePoint = [i64; 2];

/// An edge of a lattice polygon, oriented counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonEdge {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Primitive direction `end - start` divided by its lattice length.
    pub direction: LatticePoint,
    pub lattice_length: i64,
    /// Primitive outer normal. For a segment this is the right-hand normal;
    /// the opposite one is implied (see [`NewtonPolygon::outer_normals`]).
    pub outer_normal: LatticePoint,
}

/// Convex hull of a finite lattice point set, vertices counterclockwise
/// starting at the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub vertices: Vec<LatticePoint>,
    pub edges: Vec<PolygonEdge>,
}

impl NewtonPolygon {
    /// Affine dimension of the hull: 0 (point), 1 (segment) or 2.
    pub fn dim(&self) -> usize {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Number of edges `e`; 1 for a segment and 0 for a point.
    pub fn e(&self) -> usize {
        self.edges.len()
    }

    /// All primitive outer normals. A segment, seen as a flat polygon, has two.
    pub fn outer_normals(&self) -> Vec<LatticePoint> {
        match self.dim() {
            0 => vec![],
            1 => {
                let n = self.edges[0].outer_normal;
                vec![n, [-n[0], -n[1]]]
            }
            _ => self.edges.iter().map(|e| e.outer_normal).collect(),
        }
    }

    /// True iff `p` lies in the closed polygon.
    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.dim() {
            0 => self.vertices[0] == p,
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, p) == 0
                    && p[0] >= a[0].min(b[0])
                    && p[0] <= a[0].max(b[0])
                    && p[1] >= a[1].min(b[1])
                    && p[1] <= a[1].max(b[1])
            }
            _ => self.edges.iter().all(|e| cross(e.start, e.end, p) >= 0),
        }
    }
}

/// Cross product of `b - a` and `c - a`; positive for a left turn.
pub fn cross(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

pub fn primitive(v: LatticePoint) -> (LatticePoint, i64) {
    let g = v[0].gcd(&v[1]);
    if g == 0 {
        (v, 0)
    } else {
        ([v[0] / g, v[1] / g], g)
    }
}

/// Counterclockwise convex hull (Andrew's monotone chain) with collinear
/// boundary points dropped.
///
/// # Panics
/// If `points` is empty.
pub fn hull_2d(points: &[LatticePoint]) -> NewtonPolygon {
    assert!(!points.is_empty(), "hull of an empty point set");
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let vertices = if pts.len() <= 2 {
        pts
    } else {
        let mut lower: Vec<LatticePoint> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<LatticePoint> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    };

    let edges = match vertices.len() {
        1 => vec![],
        2 => vec![make_edge(vertices[0], vertices[1])],
        k => (0..k).map(|i| make_edge(vertices[i], vertices[(i + 1) % k])).collect(),
    };
    NewtonPolygon { vertices, edges }
}

fn make_edge(start: LatticePoint, end: LatticePoint) -> PolygonEdge {
    let (direction, lattice_length) = primitive([end[0] - start[0], end[1] - start[1]]);
    PolygonEdge { start, end, direction, lattice_length, outer_normal: [direction[1], -direction[0]] }
}
