use serde::Serialize;

use super::TropicalPolynomial;
use crate::error::{Error, Result};
use crate::polyhedra::{hull_2d, LatticePoint, NewtonPolygon};

/// Tropical curve of a zero-coefficient bivariate polynomial: a single vertex
/// at the origin and one ray per edge of the Newton polygon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TropicalCurve {
    pub vertex: LatticePoint,
    /// `rays[i]` is the negated outer normal of `polygon.edges[i]`.
    pub rays: Vec<LatticePoint>,
    pub polygon: NewtonPolygon,
}

pub fn newton_polygon(f: &TropicalPolynomial) -> Result<NewtonPolygon> {
    Ok(hull_2d(&f.support_2d()?))
}

/// The prevariety `V(f)` for zero coefficients and a 2-dimensional Newton
/// polygon. Points `t * ray` (`t >= 0`) are exactly the tropical zeros.
pub fn curve_prevariety(f: &TropicalPolynomial) -> Result<TropicalCurve> {
    f.require_bivariate()?;
    f.require_zero_coefficients()?;
    let polygon = newton_polygon(f)?;
    if polygon.dim() < 2 {
        return Err(Error::DegenerateNewtonPolygon(polygon.dim()));
    }
    let rays = polygon.edges.iter().map(|e| [-e.outer_normal[0], -e.outer_normal[1]]).collect();
    Ok(TropicalCurve { vertex: [0, 0], rays, polygon })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio, Rational};
    use crate::tropical::TropicalMonomial;

    fn pt(x: Rational, y: Rational) -> Vec<Rational> {
        vec![x, y]
    }

    /// Sample-based soundness oracle: points along every returned ray are
    /// tropical zeros; a direction strictly inside each cone between two
    /// consecutive rays is not.
    fn check_curve(f: &TropicalPolynomial, curve: &TropicalCurve) {
        for r in &curve.rays {
            for k in 1..=32 {
                let t = ratio(k, 4);
                let x = pt(int(r[0]) * &t, int(r[1]) * &t);
                assert!(f.is_tropical_zero(&x).unwrap(), "ray {r:?} at t={t}");
            }
        }
        let e = curve.rays.len();
        for i in 0..e {
            let (a, b) = (curve.rays[i], curve.rays[(i + 1) % e]);
            // Rays come from consecutive ccw edges; their sum points into the
            // open cone between them unless they are opposite.
            let mid = [a[0] + b[0], a[1] + b[1]];
            if mid == [0, 0] {
                continue;
            }
            let x = pt(int(mid[0]), int(mid[1]));
            assert!(!f.is_tropical_zero(&x).unwrap(), "cone between {a:?} and {b:?}");
        }
    }

    #[test]
    fn unit_square_polygon() {
        let p = newton_polygon(&TropicalPolynomial::unit_square()).unwrap();
        assert_eq!(p.e(), 4);
        assert_eq!(p.vertices, vec![[0, 0], [1, 0], [1, 1], [0, 1]]);
    }

    #[test]
    fn segment_and_dilated_square() {
        let seg = TropicalPolynomial::bivariate(&[[0, 0], [1, 1]]).unwrap();
        let p = newton_polygon(&seg).unwrap();
        assert_eq!((p.dim(), p.e()), (1, 1));
        assert_eq!(p.vertices, vec![[0, 0], [1, 1]]);
        let sq2 = TropicalPolynomial::bivariate(&[[0, 0], [2, 0], [0, 2], [2, 2]]).unwrap();
        let p = newton_polygon(&sq2).unwrap();
        assert_eq!(p.e(), 4);
        assert!(p.edges.iter().all(|e| e.lattice_length == 2));
    }

    #[test]
    fn unit_square_curve_is_the_two_axes() {
        let f = TropicalPolynomial::unit_square();
        let c = curve_prevariety(&f).unwrap();
        let mut rays = c.rays.clone();
        rays.sort();
        assert_eq!(rays, vec![[-1, 0], [0, -1], [0, 1], [1, 0]]);
        check_curve(&f, &c);
    }

    #[test]
    fn triangle_curve() {
        let f = TropicalPolynomial::bivariate(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let c = curve_prevariety(&f).unwrap();
        let mut rays = c.rays.clone();
        rays.sort();
        assert_eq!(rays, vec![[-1, -1], [0, 1], [1, 0]]);
        check_curve(&f, &c);
    }

    #[test]
    fn random_polygons_are_sound() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 50 {
            let pts: Vec<[i64; 2]> =
                (0..rng.gen_range(3..8)).map(|_| [rng.gen_range(0..5), rng.gen_range(0..5)]).collect();
            let f = TropicalPolynomial::bivariate(&pts).unwrap();
            if let Ok(c) = curve_prevariety(&f) {
                check_curve(&f, &c);
                checked += 1;
            }
        }
    }

    #[test]
    fn rejects_degenerate_and_nonzero_coefficients() {
        let seg = TropicalPolynomial::bivariate(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(curve_prevariety(&seg), Err(Error::DegenerateNewtonPolygon(1)));
        let f = TropicalPolynomial::new(
            2,
            vec![
                TropicalMonomial::bare(vec![0, 0]),
                TropicalMonomial::new(int(1), vec![1, 0]),
                TropicalMonomial::bare(vec![0, 1]),
            ],
        )
        .unwrap();
        assert!(matches!(curve_prevariety(&f), Err(Error::NonZeroCoefficient { index: 1, .. })));
        let uni = TropicalPolynomial::from_exponents(1, [vec![0], vec![1]]).unwrap();
        assert_eq!(curve_prevariety(&uni), Err(Error::NotBivariate(1)));
    }
}
