// Exact dimension of a tropical linear prevariety by searching over the
// cells where a chosen pair of terms attains each minimum.

use tropical_entropy::linearization::{linearize_polynomial, TropicalLinearSystem, Window};
use tropical_entropy::prevariety::{cell_polyhedron, dim_prevariety, dim_prevariety_with, SearchOptions};
use tropical_entropy::tropical::TropicalPolynomial;

fn main() {
    let f = TropicalPolynomial::unit_square();
    for side in 2..=5 {
        let sys = linearize_polynomial(&f, side);
        let r = dim_prevariety(&sys);
        println!(
            "N = {side}: dim {:>2} of {:>2}  (explored {}, pruned {}, {} ms)",
            r.dim,
            side * side,
            r.cells_explored,
            r.cells_pruned,
            r.elapsed_ms
        );
        // The reported cell really has that dimension.
        let cell = cell_polyhedron(&sys, r.witness_pattern.as_ref().unwrap()).unwrap();
        assert_eq!(cell.affine_dim(), r.dim);
    }

    let double = TropicalPolynomial::from_exponents(1, [vec![1], vec![2]]).unwrap();
    println!("min(X, 2X), N = 6: dim {}", dim_prevariety(&linearize_polynomial(&double, 6)).dim);
    println!("no equations, 3x3: dim {}", dim_prevariety(&TropicalLinearSystem::empty(Window::new(2, 3))).dim);

    let capped = SearchOptions { max_cells: Some(50), ..SearchOptions::sequential() };
    let r = dim_prevariety_with(&linearize_polynomial(&f, 4), &capped);
    println!("with a 50-cell budget: dim >= {} (complete: {})", r.dim, r.complete);
}
