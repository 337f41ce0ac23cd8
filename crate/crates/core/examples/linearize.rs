// The tropical linear system a polynomial induces on a grid window, and the
// grid image of a tropical zero.

use tropical_entropy::linearization::{embed_solution, linearize_polynomial, Window};
use tropical_entropy::rational::int;
use tropical_entropy::tropical::TropicalPolynomial;

fn main() {
    let f = TropicalPolynomial::unit_square();
    let sys = linearize_polynomial(&f, 3);
    println!("{} equations on {} unknowns", sys.equations.len(), sys.ambient_dim());
    let w = Window::new(2, 3);
    for (eq, prov) in sys.equations.iter().zip(&sys.provenance) {
        let cells: Vec<Vec<i64>> = eq.terms.iter().map(|t| w.coords(t.var)).collect();
        println!("  shift {:?}: min over u at {:?}", prov.as_ref().unwrap().shift, cells);
    }

    let x = [int(0), int(-2)];
    let u = embed_solution(&x, 3);
    println!("f zero at {x:?}: {}", f.is_tropical_zero(&x).unwrap());
    println!("its grid image satisfies the system: {}", sys.is_satisfied(&u.values));

    println!("{}", serde_json::to_string_pretty(&linearize_polynomial(&f, 2)).unwrap());
}
