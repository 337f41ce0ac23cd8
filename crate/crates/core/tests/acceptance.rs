//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints exactly one PASS or FAIL line; any failure makes the target fail.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropical_entropy::entropy::{Target, WitnessFamily};
use tropical_entropy::linearization::{
    curve_radical_generators, linearize_family, linearize_polynomial, zero_dim_radical_generator, GridFunction, Picks,
    TropicalLinearSystem, Window, ZeroDimPrevariety,
};
use tropical_entropy::polyhedra::{LinearForm, RationalPolyhedron};
use tropical_entropy::prevariety::{
    contains_polyhedron, dim_prevariety_with, fekete_partition, subadditivity_audit, SearchOptions, SubWindow,
};
use tropical_entropy::rational::{int, ratio, Rational};
use tropical_entropy::sweep::{boundary_deficiency, column_function, maxplus_fit, sweep_curve, SweepOutcome};
use tropical_entropy::tropical::{newton_polygon, radical_member_curve, TropicalPolynomial};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn f4() -> TropicalPolynomial {
    TropicalPolynomial::unit_square()
}

fn triangle() -> TropicalPolynomial {
    TropicalPolynomial::bivariate(&[[0, 0], [1, 0], [0, 1]]).unwrap()
}

fn double_root() -> TropicalPolynomial {
    TropicalPolynomial::from_exponents(1, [vec![1], vec![2]]).unwrap()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn dim(system: &TropicalLinearSystem) -> Result<i64, String> {
    let r = dim_prevariety_with(system, &opts());
    ensure!(r.complete, "search did not finish");
    Ok(r.dim)
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure!(t < limit, "{what} took {t:?}, limit {limit:?}");
    Ok(())
}

/// Every choice of a minimizing pair for the single equation of `f4` at
/// `N = 2`, each cell written out by hand.
fn unit_square_two() -> Outcome {
    let start = Instant::now();
    let system = linearize_polynomial(&f4(), 2);
    ensure!(system.equations.len() == 1, "expected one equation");
    let got = dim(&system)?;

    let mut cells = 0;
    let mut best = -1;
    for p in 0..4 {
        for q in p + 1..4 {
            let mut cell = RationalPolyhedron::new(4);
            cell.add_equality(LinearForm::difference(4, q, p, int(0)));
            for r in (0..4).filter(|r| *r != p && *r != q) {
                cell.add_inequality(LinearForm::difference(4, r, p, int(0)));
            }
            best = best.max(cell.affine_dim());
            cells += 1;
        }
    }
    ensure!(cells == 6, "enumerated {cells} cells");
    ensure!(got == 3 && best == 3, "search {got}, enumeration {best}");
    within(start, Duration::from_secs(1), "dim(U_2)")?;
    Ok(format!("dim = 3 over 6 cells in {:?}", start.elapsed()))
}

fn even_columns() -> Outcome {
    let start = Instant::now();
    let mut dims = Vec::new();
    for side in 2..=4usize {
        let d = dim(&linearize_polynomial(&f4(), side))?;
        let floor = (side * (side / 2)) as i64;
        ensure!(d >= floor, "N = {side}: dim {d} < {floor}");
        ensure!(ratio(d, (side * side) as i64) >= ratio(1, 2), "N = {side}: ratio below 1/2");
        dims.push(d);
    }
    for side in 1..=8usize {
        let poly = WitnessFamily::EvenColumn.polyhedron(side);
        let expected = (side * (side / 2)) as i64;
        ensure!(poly.affine_dim() == expected, "N = {side}: affine dim {} != {expected}", poly.affine_dim());
        let report = contains_polyhedron(&linearize_polynomial(&f4(), side), &poly, None, true);
        ensure!(report.contained, "N = {side}: even columns not contained");
    }
    within(start, Duration::from_secs(60), "even-column checks")?;
    Ok(format!("dims {dims:?} for N = 2..4, witness verified for N <= 8"))
}

fn tilings(n: usize, side: usize) -> Vec<Vec<SubWindow>> {
    let mut out: Vec<Vec<SubWindow>> = (1..=side).map(|q| fekete_partition(n, side, q)).collect();
    if side >= 3 {
        // one block of side N - 1 in the far corner, unit cells elsewhere
        let q = side - 1;
        let corner = vec![1i64; n];
        let mut t = vec![SubWindow { side: q, origin: corner.clone() }];
        for p in Window::new(n, side).points() {
            if p.contains(&0) {
                t.push(SubWindow { side: 1, origin: p });
            }
        }
        out.push(t);
    }
    out
}

fn subadditivity() -> Outcome {
    let cases = [(f4(), 5), (triangle(), 5), (double_root(), 8)];
    let mut checked = 0;
    for (f, max_side) in &cases {
        for side in 2..=*max_side {
            for tiling in tilings(f.n(), side) {
                let r = subadditivity_audit(f, side, &tiling, &opts()).map_err(|e| e.to_string())?;
                ensure!(r.complete, "N = {side}: incomplete search");
                ensure!(r.holds, "N = {side}: {} > block sum {}", r.dim, r.sum);
                ensure!(r.fekete.holds, "N = {side}, q = {}: {} > {}", r.fekete.q, r.dim, r.fekete.bound);
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (f, N, tiling) triples, no violations"))
}

fn double_root_rigid() -> Outcome {
    let f = double_root();
    for side in 2..=6usize {
        let d = dim(&linearize_polynomial(&f, side))?;
        ensure!(d == 1, "N = {side}: dim {d}");
        ensure!(ratio(d, side as i64) == ratio(1, side as i64), "ratio");
    }
    let seq =
        tropical_entropy::entropy::entropy_upper(&Target::Polynomial(f), 6, &opts()).map_err(|e| e.to_string())?;
    for e in seq.entries.iter().skip(1) {
        ensure!(e.ratio == ratio(1, e.side as i64), "N = {}: upper ratio {}", e.side, e.ratio);
    }
    ensure!(seq.upper == ratio(1, 6), "upper {}", seq.upper);
    Ok("dim = 1 for N = 2..6, upper bounds 1/N".into())
}

fn random_grid(rng: &mut ChaCha8Rng, side: usize) -> GridFunction {
    let window = Window::new(2, side);
    GridFunction::new(window, (0..window.size()).map(|_| int(rng.gen_range(0..10))).collect()).unwrap()
}

fn sweep_outcomes() -> Outcome {
    let start = Instant::now();
    let f = f4();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut certs, mut counters) = (0, 0);
    for _ in 0..200 {
        let w = random_grid(&mut rng, 4);
        match sweep_curve(&f, &w).map_err(|e| e.to_string())?.outcome {
            SweepOutcome::Certificate { d, .. } => {
                let distinct: BTreeSet<&Rational> = w.values.iter().collect();
                ensure!(d <= 16 && d == distinct.len(), "certificate d = {d}");
                certs += 1;
            }
            SweepOutcome::Counterexample { g, violated_at, .. } => {
                ensure!(radical_member_curve(&g, &f).unwrap().member, "counterexample outside the radical");
                let values: Vec<Rational> = g.monomials().iter().map(|m| &m.coeff + w.at(&m.exponents)).collect();
                let min = values.iter().min().unwrap();
                let argmin: Vec<&Vec<i64>> =
                    g.monomials().iter().zip(&values).filter(|(_, v)| *v == min).map(|(m, _)| &m.exponents).collect();
                ensure!(argmin == [&violated_at], "minimizers {argmin:?}, reported {violated_at:?}");
                counters += 1;
            }
        }
    }

    let mut concave = 0;
    for side in 2..=7usize {
        for _ in 0..10 {
            // integer sequence with nonincreasing increments
            let mut slope = rng.gen_range(0..6);
            let mut c = vec![rng.gen_range(-5..5)];
            for _ in 1..side {
                slope -= rng.gen_range(0..3);
                c.push(c.last().unwrap() + slope);
            }
            let w = column_function(side, |x| int(c[x as usize]));
            let out = sweep_curve(&f, &w).map_err(|e| e.to_string())?.outcome;
            ensure!(matches!(out, SweepOutcome::Certificate { .. }), "concave columns {c:?} gave a counterexample");
            concave += 1;
        }
    }

    let w = GridFunction::from_fn(Window::new(2, 3), |k| int(3 * k[0] + k[1]));
    match sweep_curve(&f, &w).map_err(|e| e.to_string())?.outcome {
        SweepOutcome::Counterexample { violated_at, support, .. } => {
            let mut expected = vec![[0, 0], [1, 0], [2, 0], [2, 1], [0, 2], [1, 2], [0, 1]];
            expected.sort();
            ensure!(violated_at == [0, 0] && support == expected, "hand counterexample differs: {support:?}");
        }
        _ => return Err("3x + y on T_3 gave a certificate".into()),
    }
    within(start, Duration::from_secs(60), "sweep checks")?;
    Ok(format!("{certs} certificates, {counters} verified counterexamples, {concave} concave certificates"))
}

/// A fan is the set of directions where two support points tie for the
/// minimum; a direction perpendicular to a pair of support points is a ray
/// when that pair attains the minimum.
fn fan_rays(f: &TropicalPolynomial) -> Vec<[i64; 2]> {
    let pts: Vec<[i64; 2]> = f.monomials().iter().map(|m| [m.exponents[0], m.exponents[1]]).collect();
    let mut rays = BTreeSet::new();
    for a in &pts {
        for b in &pts {
            let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
            if (dx, dy) == (0, 0) {
                continue;
            }
            let g = num_integer::gcd(dx, dy);
            let nu = [dy / g, -dx / g];
            let dot = |p: &[i64; 2]| p[0] * nu[0] + p[1] * nu[1];
            let min = pts.iter().map(dot).min().unwrap();
            if dot(a) == min {
                rays.insert(nu);
            }
        }
    }
    rays.into_iter().collect()
}

/// `g` is a tropical zero at the vertex and at sample points along every ray.
fn vanishes_on_samples(g: &TropicalPolynomial, rays: &[[i64; 2]]) -> bool {
    let zero = |x: &[Rational]| g.is_tropical_zero(x).unwrap();
    if !zero(&[int(0), int(0)]) {
        return false;
    }
    rays.iter().all(|r| (1..=40).map(|k| ratio(k * k, 7)).all(|t| zero(&[&t * int(r[0]), &t * int(r[1])])))
}

fn random_pentagon(rng: &mut ChaCha8Rng) -> TropicalPolynomial {
    loop {
        let pts: Vec<[i64; 2]> = (0..5).map(|_| [rng.gen_range(0..7), rng.gen_range(0..7)]).collect();
        let Ok(f) = TropicalPolynomial::bivariate(&pts) else { continue };
        if f.m() == 5 && newton_polygon(&f).is_ok_and(|p| p.vertices.len() == 5) {
            return f;
        }
    }
}

fn random_g(rng: &mut ChaCha8Rng, f: &TropicalPolynomial) -> TropicalPolynomial {
    let mut pts: BTreeSet<[i64; 2]> = BTreeSet::new();
    if rng.gen_bool(0.5) {
        // a product of dilations of f: same edge directions as f
        let (a, b) = (rng.gen_range(1..3), rng.gen_range(1..3));
        let (sa, sb) = (f.dilate(a), f.dilate(b));
        for v in &newton_polygon(f).unwrap().vertices {
            pts.insert([v[0] * (a + b), v[1] * (a + b)]);
        }
        for _ in 0..rng.gen_range(0..6) {
            let p = &sa.monomials()[rng.gen_range(0..sa.m())].exponents;
            let q = &sb.monomials()[rng.gen_range(0..sb.m())].exponents;
            pts.insert([p[0] + q[0], p[1] + q[1]]);
        }
    } else {
        while pts.len() < rng.gen_range(2..8) {
            pts.insert([rng.gen_range(0..5), rng.gen_range(0..5)]);
        }
    }
    let pts: Vec<[i64; 2]> = pts.into_iter().collect();
    TropicalPolynomial::bivariate(&pts).unwrap()
}

fn membership_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let pentagon = random_pentagon(&mut rng);
    let mut total = 0;
    let mut sufficient = 0;
    for f in [f4(), pentagon] {
        let rays = fan_rays(&f);
        for _ in 0..150 {
            let g = random_g(&mut rng, &f);
            let m = radical_member_curve(&g, &f).map_err(|e| e.to_string())?;
            ensure!(!m.sufficient_condition_met || m.member, "edge condition without membership for {g:?}");
            ensure!(!m.member || vanishes_on_samples(&g, &rays), "member but nonzero on the curve: {g:?}");
            sufficient += usize::from(m.sufficient_condition_met);
            total += 1;
        }
    }
    ensure!(sufficient >= 50, "only {sufficient} cases met the edge condition");
    Ok(format!("{total} polynomials, {sufficient} with the edge condition, no exceptions"))
}

fn zero_dim_machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let (mut generators, mut perturbed) = (0, 0);
    for _ in 0..100 {
        let n = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=4);
        let side = rng.gen_range(2..=6);
        let forms: Vec<Vec<Rational>> =
            (0..k).map(|_| (0..n).map(|_| ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2))).collect()).collect();
        let v = ZeroDimPrevariety::from_forms(forms).unwrap();
        let c0: Vec<Rational> = (0..k).map(|_| int(rng.gen_range(-5..=5))).collect();
        let window = Window::new(n, side);
        let w = GridFunction::from_fn(window, |a| -v.roof(&c0, a));

        let fit = maxplus_fit(&v, &w).unwrap();
        ensure!(fit.deficiency.is_empty(), "exact data left a deficiency");
        ensure!(window.points().all(|a| v.roof(&fit.offsets, &a) == v.roof(&c0, &a)), "roof not recovered");

        if let Ok(g) = zero_dim_radical_generator(&v, &fit.offsets, side, &Picks::Auto) {
            for x in v.points() {
                ensure!(g.is_tropical_zero(&x).unwrap(), "generator nonzero at {x:?}");
            }
            generators += 1;
        }

        // Lower w at points that leave every facet with a point of its own,
        // so the offsets stay put and each lowered point leaves the roof.
        let facets: Vec<Vec<Vec<i64>>> = (0..k).map(|i| v.facet_points(&fit.offsets, window, i)).collect();
        let mut order: Vec<Vec<i64>> = window.points().collect();
        order.shuffle(&mut rng);
        let mut lowered: Vec<Vec<i64>> = Vec::new();
        for p in order.into_iter().take(4) {
            let keeps = facets.iter().all(|f| f.iter().any(|q| *q != p && !lowered.contains(q)));
            if keeps {
                lowered.push(p);
            }
        }
        let mut bumped = w.clone();
        for p in &lowered {
            let i = window.index(p);
            bumped.values[i] -= int(rng.gen_range(1..4));
        }
        let r = boundary_deficiency(&v, &bumped, &int(lowered.len() as i64)).unwrap();
        let mut d = r.fit.deficiency.clone();
        d.sort();
        lowered.sort();
        ensure!(d == lowered, "deficiency {d:?}, lowered {lowered:?}");
        ensure!(r.bound == Some(lowered.len() + k), "bound {:?}", r.bound);
        perturbed += usize::from(!lowered.is_empty());
    }
    Ok(format!("100 round trips, {generators} generators checked, {perturbed} perturbed instances"))
}

fn monotone_and_diagonal() -> Outcome {
    let f = f4();
    let mut pairs = Vec::new();
    for side in 2..=4usize {
        let gens = curve_radical_generators(&f, side).map_err(|e| e.to_string())?;
        let w = dim(&linearize_family(Window::new(2, side), &gens))?;
        let u = dim(&linearize_polynomial(&f, side))?;
        ensure!(w <= u, "N = {side}: radical family {w} > {u}");
        pairs.push((w, u));
    }
    for side in 3..=5usize {
        let system = Target::CurveRadical(f.clone()).system(side).map_err(|e| e.to_string())?;
        let poly = WitnessFamily::Diagonal.polyhedron(side);
        let report = contains_polyhedron(&system, &poly, None, true);
        ensure!(report.contained, "N = {side}: diagonal witness not contained");
        let d = poly.affine_dim();
        ensure!(d > side as i64, "N = {side}: diagonal dim {d}");
    }
    Ok(format!("(radical, U_N) dims {pairs:?}; diagonal gives N + 1 at N = 3, 4, 5"))
}

fn shuffled(system: &TropicalLinearSystem, rng: &mut ChaCha8Rng) -> TropicalLinearSystem {
    let mut eqs: Vec<usize> = (0..system.equations.len()).collect();
    eqs.shuffle(rng);
    let terms: Vec<Vec<usize>> = system
        .equations
        .iter()
        .map(|e| {
            let mut t: Vec<usize> = (0..e.terms.len()).collect();
            t.shuffle(rng);
            t
        })
        .collect();
    system.permuted(&eqs, &terms)
}

fn order_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let radical3 = linearize_family(Window::new(2, 3), &curve_radical_generators(&f4(), 3).unwrap());
    let instances = [
        ("f4 N=3", linearize_polynomial(&f4(), 3)),
        ("f4 N=4", linearize_polynomial(&f4(), 4)),
        ("triangle N=4", linearize_polynomial(&triangle(), 4)),
        ("double root N=5", linearize_polynomial(&double_root(), 5)),
        ("radical N=3", radical3),
    ];
    for (name, system) in &instances {
        let base = dim(system)?;
        for trial in 0..50 {
            let d = dim(&shuffled(system, &mut rng))?;
            ensure!(d == base, "{name}, trial {trial}: {d} != {base}");
        }
    }
    Ok(format!("{} instances x 50 shuffles, identical dims", instances.len()))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("unit square dim(U_2) = 3 by cell enumeration", unit_square_two),
        ("even-column lower bound and ratios >= 1/2", even_columns),
        ("subadditivity and Fekete bounds", subadditivity),
        ("min{X, 2X} forces constant grids", double_root_rigid),
        ("line sweep certificates and counterexamples", sweep_outcomes),
        ("edge condition implies curve membership", membership_equivalence),
        ("max-plus fit, generators, deficiency bound", zero_dim_machinery),
        ("radical family monotonicity and diagonal witness", monotone_and_diagonal),
        ("order invariance under shuffles", order_invariance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}; {t:.2}s)", i + 1),
            Err(why) => {
                println!("FAIL {}: {name} ({why}; {t:.2}s)", i + 1);
                failed += 1;
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
