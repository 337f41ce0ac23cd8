// Verifying explicit polyhedra inside prevarieties, which bounds their
// dimension from below.

use tropical_entropy::entropy::{witness_lower, Target, WitnessFamily};
use tropical_entropy::tropical::TropicalPolynomial;

fn main() {
    let f = TropicalPolynomial::unit_square();
    let single = Target::Polynomial(f.clone());
    let radical = Target::CurveRadical(f);

    let runs = [
        (&single, WitnessFamily::EvenColumn, "f"),
        (&radical, WitnessFamily::ConcaveColumn, "radical family"),
        (&radical, WitnessFamily::Diagonal, "radical family"),
        (&radical, WitnessFamily::EvenColumn, "radical family"),
    ];
    for (target, family, label) in runs {
        for side in [3, 4, 5] {
            let c = witness_lower(target, family, side).unwrap();
            let uniform = c.containment.uniform_pairs().is_some();
            match c.bound {
                Some(b) => {
                    println!("{:<15} in {label:<15} N = {side}: dim >= {b}  (uniform pairs: {uniform})", family.name())
                }
                None => println!("{:<15} in {label:<15} N = {side}: not contained", family.name()),
            }
        }
    }
}
