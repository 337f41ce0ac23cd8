// Evaluating tropical polynomials and reading off their curves.
//
// Run with `cargo run --example tropical_zeros`.

use tropical_entropy::rational::{int, ratio};
use tropical_entropy::tropical::{curve_prevariety, point, TropicalMonomial, TropicalPolynomial};

fn main() {
    let f = TropicalPolynomial::unit_square();

    for x in [point(&[0, 0]), point(&[2, -1]), vec![ratio(1, 2), int(-3)], point(&[1, 1])] {
        let e = f.evaluate(&x).unwrap();
        println!("f({}, {}) = {}  argmin {:?}  zero: {}", x[0], x[1], e.value, e.argmin, e.attained_twice());
    }

    // min{1 + X, Y, 3}: nonzero coefficients are fine for evaluation
    let g = TropicalPolynomial::new(
        2,
        vec![
            TropicalMonomial::new(int(1), vec![1, 0]),
            TropicalMonomial::new(int(0), vec![0, 1]),
            TropicalMonomial::new(int(3), vec![0, 0]),
        ],
    )
    .unwrap();
    println!("g(2, 3) zero: {}", g.is_tropical_zero(&point(&[2, 3])).unwrap());

    let curve = curve_prevariety(&f).unwrap();
    println!("Newton polygon vertices: {:?}", curve.polygon.vertices);
    println!("rays of V(f): {:?}", curve.rays);
    println!("{}", serde_json::to_string(&f).unwrap());
}
