// Deciding whether a polynomial vanishes on a tropical curve or on a finite
// set of points.

use tropical_entropy::rational::int;
use tropical_entropy::tropical::{radical_member_curve, radical_member_zero_dim, TropicalPolynomial};

fn show(name: &str, g: &TropicalPolynomial, f: &TropicalPolynomial) {
    let m = radical_member_curve(g, f).unwrap();
    println!("{name:<12} member {:<5}  edge condition {}", m.member, m.sufficient_condition_met);
}

fn main() {
    let f = TropicalPolynomial::unit_square();
    show("f", &f, &f);
    show("f dilated", &f.dilate(3), &f);
    show("rectangle", &TropicalPolynomial::bivariate(&[[0, 0], [2, 0], [0, 1], [2, 1]]).unwrap(), &f);
    show("pentagon", &TropicalPolynomial::bivariate(&[[0, 0], [2, 0], [2, 1], [1, 2], [0, 2]]).unwrap(), &f);
    show("triangle", &TropicalPolynomial::bivariate(&[[0, 0], [1, 0], [0, 1]]).unwrap(), &f);

    let pts = vec![vec![int(0), int(0)], vec![int(0), int(-3)], vec![int(5), int(0)]];
    println!("f on three curve points: {}", radical_member_zero_dim(&f, &pts).unwrap());
    let off = vec![vec![int(1), int(1)]];
    println!("f at (1, 1): {}", radical_member_zero_dim(&f, &off).unwrap());
}
