// Peeling lines off a grid point: either few distinct values, or a radical
// element whose linearization fails.

use tropical_entropy::linearization::{embed_solution, GridFunction, Window};
use tropical_entropy::rational::{format, int};
use tropical_entropy::sweep::{certificate_bound_check, column_function, sweep_curve, verify_outcome, SweepOutcome};
use tropical_entropy::tropical::TropicalPolynomial;

use rand::{Rng, SeedableRng};

fn report(f: &TropicalPolynomial, name: &str, w: &GridFunction) {
    let run = sweep_curve(f, w).unwrap();
    let ok = verify_outcome(f, w, &run.outcome).unwrap();
    match &run.outcome {
        SweepOutcome::Certificate { steps, d, .. } => {
            println!("{name}: certificate, {steps} steps, {d} values (verified {ok})")
        }
        SweepOutcome::Counterexample { support, violated_at, term_values, .. } => {
            let vals: Vec<String> = term_values.iter().map(format).collect();
            println!("{name}: counterexample on {support:?}");
            println!("    values {vals:?}, unique minimum at {violated_at:?} (verified {ok})");
        }
    }
}

fn main() {
    let f = TropicalPolynomial::unit_square();
    report(&f, "slope 3x+y, N=3", &GridFunction::from_fn(Window::new(2, 3), |k| int(3 * k[0] + k[1])));
    report(&f, "concave columns, N=6", &column_function(6, |x| int(-x * x)));
    report(&f, "curve point (0,1), N=5", &embed_solution(&[int(0), int(1)], 5));

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let window = Window::new(2, 4);
    let samples: Vec<GridFunction> = (0..200)
        .map(|_| GridFunction::new(window, (0..16).map(|_| int(rng.gen_range(0..10))).collect()).unwrap())
        .collect();
    let r = certificate_bound_check(&f, &samples).unwrap();
    println!(
        "200 random points on T_4: {} certificates (max {} steps, {} values), {} counterexamples, {} violations",
        r.certificates,
        r.max_steps,
        r.max_d,
        r.counterexamples,
        r.violations.len()
    );
}
