// Tiling a window by smaller ones bounds its dimension by the sum of theirs.

use tropical_entropy::prevariety::{fekete_partition, subadditivity_audit, SearchOptions, SubWindow};
use tropical_entropy::tropical::TropicalPolynomial;

fn main() {
    let opts = SearchOptions::default();
    let polys = [
        ("unit square", TropicalPolynomial::unit_square()),
        ("triangle", TropicalPolynomial::bivariate(&[[0, 0], [1, 0], [0, 1]]).unwrap()),
    ];
    for (name, f) in &polys {
        for (side, q) in [(3, 2), (4, 2), (4, 3), (5, 2)] {
            let r = subadditivity_audit(f, side, &fekete_partition(2, side, q), &opts).unwrap();
            println!(
                "{name:<12} N = {side}, q = {q}: dim {:>2} <= sum {:>2} ({}), <= {:>2} ({})",
                r.dim, r.sum, r.holds, r.fekete.bound, r.fekete.holds
            );
        }
    }

    // Two 2x4 strips.
    let strips = [SubWindow { side: 2, origin: vec![0, 0] }, SubWindow { side: 2, origin: vec![2, 0] }];
    let err = subadditivity_audit(&polys[0].1, 4, &strips, &opts).unwrap_err();
    println!("not a tiling: {err}");
}
