// Finite families of radical elements: lattice polygons with the edge
// directions of a curve, and boundary lattice points of an upper polyhedron
// for a finite point set.

use tropical_entropy::linearization::{
    curve_radical_generators, linearize_family, zero_dim_radical_generator, Picks, Window, ZeroDimPrevariety,
};
use tropical_entropy::prevariety::dim_prevariety;
use tropical_entropy::rational::int;
use tropical_entropy::tropical::{radical_member_curve, radical_member_zero_dim, TropicalPolynomial};

fn main() {
    let f = TropicalPolynomial::unit_square();
    for side in 2..=4 {
        let gens = curve_radical_generators(&f, side).unwrap();
        assert!(gens.iter().all(|g| radical_member_curve(g, &f).unwrap().member));
        let sys = linearize_family(Window::new(2, side), &gens);
        println!(
            "N = {side}: {} generators, {} equations, dim {}",
            gens.len(),
            sys.equations.len(),
            dim_prevariety(&sys).dim
        );
    }

    let tri = TropicalPolynomial::bivariate(&[[0, 0], [1, 0], [0, 1]]).unwrap();
    let gens = curve_radical_generators(&tri, 3).unwrap();
    println!("triangle, N = 3: {} generators", gens.len());

    let v = ZeroDimPrevariety::from_points(&[vec![int(0)], vec![int(-1)]]).unwrap();
    let g = zero_dim_radical_generator(&v, &[int(0), int(-1)], 4, &Picks::Auto).unwrap();
    println!("points 0 and -1: {}", serde_json::to_string(&g).unwrap());
    println!("vanishes there: {}", radical_member_zero_dim(&g, &v.points()).unwrap());
}
