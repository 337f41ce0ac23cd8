//! Small end-to-end checks with known answers, run by `tropent selftest`.

use crate::entropy::{witness_lower, Target, WitnessFamily};
use crate::linearization::{linearize_polynomial, GridFunction, TropicalLinearSystem, Window, ZeroDimPrevariety};
use crate::prevariety::{dim_prevariety_with, fekete_partition, subadditivity_audit, SearchOptions};
use crate::rational::int;
use crate::sweep::{maxplus_fit, sweep_curve, verify_outcome, SweepOutcome};
use crate::tropical::{radical_member_curve, TropicalPolynomial};

type Check = fn() -> bool;

fn dim_of(system: &TropicalLinearSystem) -> i64 {
    dim_prevariety_with(system, &SearchOptions::default()).dim
}

fn unit_square_two() -> bool {
    dim_of(&linearize_polynomial(&TropicalPolynomial::unit_square(), 2)) == 3
}

fn double_root_four() -> bool {
    let f = TropicalPolynomial::from_exponents(1, [vec![1], vec![2]]).unwrap();
    dim_of(&linearize_polynomial(&f, 4)) == 1
}

fn empty_system() -> bool {
    dim_of(&TropicalLinearSystem::empty(Window::new(2, 3))) == 9
}

fn even_columns() -> bool {
    let c = witness_lower(&Target::Polynomial(TropicalPolynomial::unit_square()), WitnessFamily::EvenColumn, 4);
    c.is_ok_and(|c| c.bound == Some(8))
}

fn sweep_counterexample() -> bool {
    let f = TropicalPolynomial::unit_square();
    let w = GridFunction::from_fn(Window::new(2, 3), |k| int(3 * k[0] + k[1]));
    let Ok(run) = sweep_curve(&f, &w) else { return false };
    matches!(run.outcome, SweepOutcome::Counterexample { violated_at: [0, 0], .. })
        && verify_outcome(&f, &w, &run.outcome).unwrap_or(false)
}

fn dilation_member() -> bool {
    let f = TropicalPolynomial::unit_square();
    radical_member_curve(&f.dilate(2), &f).is_ok_and(|m| m.member && m.sufficient_condition_met)
}

fn fit_example() -> bool {
    let v = ZeroDimPrevariety::from_forms(vec![vec![int(0)], vec![int(1)]]).unwrap();
    let w = GridFunction::new(Window::new(1, 4), vec![int(0), int(0), int(0), int(-1)]).unwrap();
    maxplus_fit(&v, &w).is_ok_and(|fit| fit.offsets == [int(0), int(-2)] && fit.deficiency.is_empty())
}

fn fekete_three() -> bool {
    let f = TropicalPolynomial::unit_square();
    subadditivity_audit(&f, 3, &fekete_partition(2, 3, 2), &SearchOptions::default())
        .is_ok_and(|r| r.holds && r.fekete.holds && r.fekete.bound == 8)
}

const CHECKS: [(&str, Check); 8] = [
    ("unit-square-dim-2", unit_square_two),
    ("double-root-dim-4", double_root_four),
    ("empty-system-dim", empty_system),
    ("even-column-witness-4", even_columns),
    ("sweep-counterexample-3", sweep_counterexample),
    ("dilation-in-radical", dilation_member),
    ("maxplus-fit", fit_example),
    ("fekete-bound-3", fekete_three),
];

pub fn run_all() -> Vec<(&'static str, bool)> {
    CHECKS.iter().map(|(name, check)| (*name, check())).collect()
}
