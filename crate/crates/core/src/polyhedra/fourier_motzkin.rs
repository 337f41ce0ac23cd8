//! Fourier–Motzkin feasibility for small systems `G z >= h`.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

/// True iff `{z : rows[i].z >= rhs[i]}` is nonempty. Exponential in the
/// number of variables; meant for a handful of them.
pub fn feasible(d: usize, rows: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let mut sys: Vec<(Vec<Rational>, Rational)> = rows.iter().cloned().zip(rhs.iter().cloned()).collect();
    for var in 0..d {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for (row, b) in sys {
            if row[var].is_positive() {
                pos.push((row, b));
            } else if row[var].is_negative() {
                neg.push((row, b));
            } else {
                rest.push((row, b));
            }
        }
        // Each pos row gives a lower bound on z_var, each neg row an upper one.
        for (pr, pb) in &pos {
            for (nr, nb) in &neg {
                let (sp, sn) = (pr[var].clone(), -nr[var].clone());
                let row: Vec<Rational> = pr.iter().zip(nr).map(|(a, b)| a * &sn + b * &sp).collect();
                rest.push((row, pb * &sn + nb * &sp));
            }
        }
        rest.dedup();
        sys = rest;
    }
    sys.iter().all(|(row, b)| {
        debug_assert!(row.iter().all(|v| v.is_zero()));
        !b.is_positive()
    })
}
