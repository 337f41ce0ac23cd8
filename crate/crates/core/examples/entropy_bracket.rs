// Entropy brackets: the infimum of dim/N^n over computed windows above, a
// verified witness family below.

use tropical_entropy::entropy::{entropy_bracket, write_csv, Target, WitnessFamily};
use tropical_entropy::prevariety::SearchOptions;
use tropical_entropy::rational::format;
use tropical_entropy::tropical::TropicalPolynomial;

fn main() {
    let opts = SearchOptions::default();
    let f = TropicalPolynomial::unit_square();

    let b = entropy_bracket(&Target::Polynomial(f.clone()), 5, &[WitnessFamily::EvenColumn], &opts).unwrap();
    println!("unit square:    [{}, {}]", format(&b.lower), format(&b.upper));
    write_csv(&b.upper_sequence, std::io::stdout()).unwrap();

    let b =
        entropy_bracket(&Target::CurveRadical(f), 4, &[WitnessFamily::ConcaveColumn, WitnessFamily::Diagonal], &opts)
            .unwrap();
    println!("radical family: [{}, {}]", format(&b.lower), format(&b.upper));
    write_csv(&b.upper_sequence, std::io::stdout()).unwrap();

    let double = TropicalPolynomial::from_exponents(1, [vec![1], vec![2]]).unwrap();
    let b = entropy_bracket(&Target::Polynomial(double), 6, &[], &opts).unwrap();
    println!("min(X, 2X):     [{}, {}]", format(&b.lower), format(&b.upper));
}
