//! Exact rational polyhedra in H-representation.
//!
//! Feasibility, linear optimization, implicit-equality detection and affine
//! dimension, all in exact arithmetic. Equalities are eliminated first by
//! Gaussian elimination; the remaining inequality system is handled by
//! Fourier–Motzkin when it is tiny and by the Bland-rule simplex otherwise.

mod fourier_motzkin;
mod hull;
pub mod linalg;
mod simplex;

pub use hull::{cross, hull_2d, primitive, LatticePoint, NewtonPolygon, PolygonEdge};
pub use simplex::LpOutcome;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::rational::Rational;

/// Affine form `coeffs.x + constant` over `D` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl LinearForm {
    pub fn zero(d: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); d], constant: Rational::zero() }
    }

    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        Self { coeffs, constant }
    }

    /// `x_i`.
    pub fn var(d: usize, i: usize) -> Self {
        let mut f = Self::zero(d);
        f.coeffs[i] = Rational::one();
        f
    }

    /// `x_i - x_j + constant`.
    pub fn difference(d: usize, i: usize, j: usize, constant: Rational) -> Self {
        let mut f = Self::zero(d);
        f.coeffs[i] += Rational::one();
        f.coeffs[j] -= Rational::one();
        f.constant = constant;
        f
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).fold(self.constant.clone(), |acc, (c, v)| if c.is_zero() { acc } else { acc + c * v })
    }

    pub fn negated(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect(), constant: -&self.constant }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MaximizeResult {
    Infeasible,
    Unbounded,
    Optimum {
        #[serde(with = "crate::rational::serde_rational")]
        value: Rational,
        /// A feasible point attaining `value`.
        #[serde(with = "crate::rational::serde_rational_vec")]
        point: Vec<Rational>,
    },
}

impl MaximizeResult {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            MaximizeResult::Optimum { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// `{x in R^D : e(x) = 0 for e in equalities, g(x) >= 0 for g in inequalities}`.
/// The representation may be redundant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolyhedron {
    pub dim: usize,
    pub equalities: Vec<LinearForm>,
    pub inequalities: Vec<LinearForm>,
}

/// `x = origin + sum_j z_j * directions[j]`, the affine hull of the equalities.
#[derive(Debug, Clone)]
struct Parametrization {
    origin: Vec<Rational>,
    directions: Vec<Vec<Rational>>,
}

impl Parametrization {
    fn pull_back(&self, f: &LinearForm) -> (Vec<Rational>, Rational) {
        let row = self
            .directions
            .iter()
            .map(|d| {
                d.iter().zip(&f.coeffs).fold(Rational::zero(), |acc, (a, b)| {
                    if b.is_zero() || a.is_zero() {
                        acc
                    } else {
                        acc + a * b
                    }
                })
            })
            .collect();
        (row, f.eval(&self.origin))
    }

    fn push_forward(&self, z: &[Rational]) -> Vec<Rational> {
        let mut x = self.origin.clone();
        for (zj, d) in z.iter().zip(&self.directions) {
            if zj.is_zero() {
                continue;
            }
            for (xi, di) in x.iter_mut().zip(d) {
                if !di.is_zero() {
                    *xi += zj * di;
                }
            }
        }
        x
    }
}

/// A polyhedron with its equalities eliminated: `x = origin + M z` and the
/// inequalities rewritten as `rows.z >= rhs`. Build once, optimize many times.
#[derive(Debug, Clone)]
pub struct PreparedPolyhedron {
    dim: usize,
    param: Parametrization,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

const FM_MAX_VARS: usize = 3;
const FM_MAX_ROWS: usize = 16;

impl PreparedPolyhedron {
    /// Number of free parameters after equality elimination.
    pub fn param_dim(&self) -> usize {
        self.param.directions.len()
    }

    pub fn feasible(&self) -> bool {
        let d = self.param_dim();
        if self.rows.is_empty() {
            return true;
        }
        if d <= FM_MAX_VARS && self.rows.len() <= FM_MAX_ROWS {
            fourier_motzkin::feasible(d, &self.rows, &self.rhs)
        } else {
            !matches!(simplex::maximize(d, &self.rows, &self.rhs, &vec![Rational::zero(); d]), LpOutcome::Infeasible)
        }
    }

    pub fn maximize(&self, objective: &LinearForm) -> MaximizeResult {
        assert_eq!(objective.dim(), self.dim);
        let d = self.param_dim();
        let (obj, c0) = self.param.pull_back(objective);
        match simplex::maximize(d, &self.rows, &self.rhs, &obj) {
            LpOutcome::Infeasible => MaximizeResult::Infeasible,
            LpOutcome::Unbounded => MaximizeResult::Unbounded,
            LpOutcome::Optimal { value, point } => {
                MaximizeResult::Optimum { value: value + c0, point: self.param.push_forward(&point) }
            }
        }
    }

    /// Largest `eps` in `[0, 1]` such that some point has `f(x) >= eps` for
    /// every form in `forms`, with that point. `None` when the polyhedron is
    /// empty or no point has all forms nonnegative.
    pub fn max_common_margin(&self, forms: &[LinearForm]) -> Option<(Rational, Vec<Rational>)> {
        let d = self.param_dim();
        let nv = d + 1;
        let mut rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.push(Rational::zero());
                r
            })
            .collect();
        let mut rhs = self.rhs.clone();
        for f in forms {
            let (mut row, c) = self.param.pull_back(f);
            row.push(-Rational::one());
            rows.push(row);
            rhs.push(-c);
        }
        let mut lo = vec![Rational::zero(); nv];
        lo[d] = Rational::one();
        rows.push(lo.clone());
        rhs.push(Rational::zero());
        lo[d] = -Rational::one();
        rows.push(lo.clone());
        rhs.push(-Rational::one());
        let mut obj = vec![Rational::zero(); nv];
        obj[d] = Rational::one();
        match simplex::maximize(nv, &rows, &rhs, &obj) {
            LpOutcome::Optimal { value, point } => Some((value, self.param.push_forward(&point[..d]))),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("margin is bounded by 1"),
        }
    }

    /// Indices of inequalities tight on the whole polyhedron, `None` if empty.
    pub fn implicit_equalities(&self) -> Option<Vec<usize>> {
        let d = self.param_dim();
        let m = self.rows.len();
        if m == 0 {
            return Some(vec![]);
        }
        // Repeatedly maximize the sum of bounded slacks y_i <= G_i z - h_i,
        // 0 <= y_i <= 1, over undecided rows; a row with positive slack at
        // the optimum is strict somewhere. A zero optimum leaves only
        // implicit equalities.
        let mut undecided: Vec<bool> = vec![true; m];
        loop {
            let und: Vec<usize> = (0..m).filter(|&i| undecided[i]).collect();
            if und.is_empty() {
                return Some(vec![]);
            }
            let k = und.len();
            let nv = d + k;
            let (mut rows, mut rhs) = (Vec::new(), Vec::new());
            for i in 0..m {
                let mut r = self.rows[i].clone();
                r.resize(nv, Rational::zero());
                if let Some(pos) = und.iter().position(|&u| u == i) {
                    r[d + pos] = -Rational::one();
                }
                rows.push(r);
                rhs.push(self.rhs[i].clone());
            }
            for pos in 0..k {
                let mut lo = vec![Rational::zero(); nv];
                lo[d + pos] = Rational::one();
                rows.push(lo.clone());
                rhs.push(Rational::zero());
                lo[d + pos] = -Rational::one();
                rows.push(lo);
                rhs.push(-Rational::one());
            }
            let mut obj = vec![Rational::zero(); nv];
            for v in obj.iter_mut().skip(d) {
                *v = Rational::one();
            }
            match simplex::maximize(nv, &rows, &rhs, &obj) {
                LpOutcome::Infeasible => return None,
                LpOutcome::Unbounded => unreachable!("slacks are bounded"),
                LpOutcome::Optimal { value, point } => {
                    if value.is_zero() {
                        return Some(und);
                    }
                    for &i in &und {
                        let slack: Rational =
                            self.rows[i].iter().zip(&point).map(|(a, b)| a * b).sum::<Rational>() - &self.rhs[i];
                        if slack.is_positive() {
                            undecided[i] = false;
                        }
                    }
                }
            }
        }
    }

    pub fn affine_dim(&self) -> i64 {
        let Some(implicit) = self.implicit_equalities() else { return -1 };
        let rows: Vec<Vec<Rational>> = implicit.iter().map(|&i| self.rows[i].clone()).collect();
        (self.param_dim() - linalg::rank(&rows)) as i64
    }
}

impl RationalPolyhedron {
    pub fn new(dim: usize) -> Self {
        Self { dim, equalities: Vec::new(), inequalities: Vec::new() }
    }

    pub fn with_constraints(dim: usize, equalities: Vec<LinearForm>, inequalities: Vec<LinearForm>) -> Self {
        debug_assert!(equalities.iter().chain(&inequalities).all(|f| f.dim() == dim));
        Self { dim, equalities, inequalities }
    }

    pub fn add_equality(&mut self, f: LinearForm) {
        assert_eq!(f.dim(), self.dim);
        self.equalities.push(f);
    }

    pub fn add_inequality(&mut self, f: LinearForm) {
        assert_eq!(f.dim(), self.dim);
        self.inequalities.push(f);
    }

    pub fn contains_point(&self, x: &[Rational]) -> bool {
        self.equalities.iter().all(|e| e.eval(x).is_zero())
            && self.inequalities.iter().all(|g| !g.eval(x).is_negative())
    }

    fn parametrize(&self) -> Option<Parametrization> {
        let d = self.dim;
        let mut m: Vec<Vec<Rational>> = self
            .equalities
            .iter()
            .map(|e| {
                let mut r = e.coeffs.clone();
                r.push(-e.constant.clone());
                r
            })
            .collect();
        let pivots = linalg::rref(&mut m, d);
        if m.iter().skip(pivots.len()).any(|r| !r[d].is_zero()) {
            return None;
        }
        let mut origin = vec![Rational::zero(); d];
        for (row, &p) in m.iter().zip(&pivots) {
            origin[p] = row[d].clone();
        }
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let directions = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); d];
                v[f] = Rational::one();
                for (row, &p) in m.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect();
        Some(Parametrization { origin, directions })
    }

    /// Eliminates the equalities; `None` when they are inconsistent.
    pub fn prepare(&self) -> Option<PreparedPolyhedron> {
        let param = self.parametrize()?;
        let (mut rows, mut rhs) = (Vec::new(), Vec::new());
        for g in &self.inequalities {
            let (row, c) = param.pull_back(g);
            rows.push(row);
            rhs.push(-c);
        }
        Some(PreparedPolyhedron { dim: self.dim, param, rows, rhs })
    }

    /// True iff the polyhedron is nonempty.
    pub fn feasible(&self) -> bool {
        self.prepare().is_some_and(|p| p.feasible())
    }

    /// Feasibility through the simplex path only.
    pub fn feasible_lp(&self) -> bool {
        !matches!(self.maximize(&LinearForm::zero(self.dim)), MaximizeResult::Infeasible)
    }

    /// Exact maximum of `objective` over the polyhedron.
    pub fn maximize(&self, objective: &LinearForm) -> MaximizeResult {
        match self.prepare() {
            Some(p) => p.maximize(objective),
            None => MaximizeResult::Infeasible,
        }
    }

    /// Indices of inequalities that hold with equality on the whole polyhedron,
    /// or `None` when it is empty.
    pub fn implicit_equalities(&self) -> Option<Vec<usize>> {
        self.prepare()?.implicit_equalities()
    }

    /// Affine dimension; -1 for the empty polyhedron.
    pub fn affine_dim(&self) -> i64 {
        self.prepare().map_or(-1, |p| p.affine_dim())
    }

    /// Some point of the polyhedron, if nonempty.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        match self.maximize(&LinearForm::zero(self.dim)) {
            MaximizeResult::Optimum { point, .. } => Some(point),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn lf(c: &[i64], k: i64) -> LinearForm {
        LinearForm::new(c.iter().map(|&v| int(v)).collect(), int(k))
    }

    #[test]
    fn infeasible_interval() {
        // x >= 0, -x >= 1
        let p = RationalPolyhedron::with_constraints(1, vec![], vec![lf(&[1], 0), lf(&[-1], -1)]);
        assert!(!p.feasible());
        assert!(!p.feasible_lp());
        assert_eq!(p.affine_dim(), -1);
    }

    #[test]
    fn simplex_segment() {
        // x + y = 1, x >= 0, y >= 0
        let p = RationalPolyhedron::with_constraints(2, vec![lf(&[1, 1], -1)], vec![lf(&[1, 0], 0), lf(&[0, 1], 0)]);
        assert!(p.feasible());
        assert_eq!(p.affine_dim(), 1);
    }

    #[test]
    fn dims_of_small_examples() {
        let diag = RationalPolyhedron::with_constraints(2, vec![lf(&[1, -1], 0)], vec![]);
        assert_eq!(diag.affine_dim(), 1);
        let pinched = RationalPolyhedron::with_constraints(2, vec![], vec![lf(&[1, 0], 0), lf(&[-1, 0], 0)]);
        assert_eq!(pinched.affine_dim(), 1);
        assert_eq!(pinched.implicit_equalities(), Some(vec![0, 1]));
        // Unit-square cell: u0 = u1 <= u2, u3 in R^4.
        let cell = RationalPolyhedron::with_constraints(
            4,
            vec![lf(&[1, -1, 0, 0], 0)],
            vec![lf(&[-1, 0, 1, 0], 0), lf(&[-1, 0, 0, 1], 0)],
        );
        assert_eq!(cell.affine_dim(), 3);
        assert_eq!(RationalPolyhedron::new(3).affine_dim(), 3);
    }

    #[test]
    fn maximize_examples() {
        let boxed = RationalPolyhedron::with_constraints(1, vec![], vec![lf(&[1], 0), lf(&[-1], 5)]);
        assert_eq!(boxed.maximize(&lf(&[1], 0)).value(), Some(&int(5)));
        let ray = RationalPolyhedron::with_constraints(2, vec![lf(&[1, -1], 0)], vec![lf(&[0, 1], 0)]);
        assert_eq!(ray.maximize(&lf(&[1, 0], 0)), MaximizeResult::Unbounded);
        // u0 = u1 <= u2, u3 inside [0,1]^4: max u2 - u0 = 1.
        let mut cell = RationalPolyhedron::with_constraints(
            4,
            vec![lf(&[1, -1, 0, 0], 0)],
            vec![lf(&[-1, 0, 1, 0], 0), lf(&[-1, 0, 0, 1], 0)],
        );
        for i in 0..4 {
            cell.add_inequality(LinearForm::var(4, i));
            cell.add_inequality(LinearForm::var(4, i).negated().clone_with_constant(int(1)));
        }
        match cell.maximize(&lf(&[-1, 0, 1, 0], 0)) {
            MaximizeResult::Optimum { value, point } => {
                assert_eq!(value, int(1));
                assert!(cell.contains_point(&point));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            RationalPolyhedron::with_constraints(1, vec![lf(&[0], 1)], vec![]).maximize(&lf(&[1], 0)),
            MaximizeResult::Infeasible
        );
    }

    impl LinearForm {
        fn clone_with_constant(&self, c: Rational) -> Self {
            Self { coeffs: self.coeffs.clone(), constant: c }
        }
    }

    /// Brute-force oracle for pointed systems `A x >= b` in R^d: nonempty iff
    /// some basic solution (d tight rows with a nonsingular block) is feasible.
    fn vertex_oracle(d: usize, rows: &[LinearForm]) -> bool {
        let k = rows.len();
        let mut idx: Vec<usize> = (0..d).collect();
        loop {
            let a: Vec<Vec<Rational>> = idx.iter().map(|&i| rows[i].coeffs.clone()).collect();
            let b: Vec<Rational> = idx.iter().map(|&i| -rows[i].constant.clone()).collect();
            if let Some(x) = linalg::solve_square(&a, &b) {
                if rows.iter().all(|r| !r.eval(&x).is_negative()) {
                    return true;
                }
            }
            // next combination
            let mut i = d;
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                if idx[i] < k - d + i {
                    idx[i] += 1;
                    for j in i + 1..d {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn feasibility_matches_vertex_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let (mut yes, mut no, mut cases) = (0, 0, 0);
        while cases < 100 {
            let rows: Vec<LinearForm> = (0..12)
                .map(|_| lf(&(0..6).map(|_| rng.gen_range(-3..4)).collect::<Vec<_>>(), rng.gen_range(-4..3)))
                .collect();
            let coeffs: Vec<Vec<Rational>> = rows.iter().map(|r| r.coeffs.clone()).collect();
            if linalg::rank(&coeffs) < 6 {
                continue;
            }
            let p = RationalPolyhedron::with_constraints(6, vec![], rows.clone());
            let expect = vertex_oracle(6, &rows);
            assert_eq!(p.feasible(), expect);
            assert_eq!(p.affine_dim() >= 0, expect);
            if expect {
                yes += 1
            } else {
                no += 1
            }
            cases += 1;
        }
        assert!(yes > 5 && no > 5, "unbalanced sample: {yes} feasible, {no} infeasible");
    }

    #[test]
    fn fourier_motzkin_agrees_with_simplex() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let d = rng.gen_range(1..4);
            let rows: Vec<LinearForm> = (0..rng.gen_range(1..8))
                .map(|_| lf(&(0..d).map(|_| rng.gen_range(-2..3)).collect::<Vec<_>>(), rng.gen_range(-3..3)))
                .collect();
            let eqs: Vec<LinearForm> = (0..rng.gen_range(0..2))
                .map(|_| lf(&(0..d).map(|_| rng.gen_range(-1..2)).collect::<Vec<_>>(), rng.gen_range(-1..2)))
                .collect();
            let p = RationalPolyhedron::with_constraints(d, eqs, rows);
            assert_eq!(p.feasible(), p.feasible_lp(), "{p:?}");
        }
    }

    #[test]
    fn adding_constraints_never_raises_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..30 {
            let mut p = RationalPolyhedron::new(4);
            let mut last = p.affine_dim();
            for _ in 0..8 {
                let f = lf(&(0..4).map(|_| rng.gen_range(-1..2)).collect::<Vec<_>>(), rng.gen_range(-1..2));
                if rng.gen_bool(0.3) {
                    p.add_equality(f);
                } else {
                    p.add_inequality(f);
                }
                let now = p.affine_dim();
                assert!(now <= last);
                assert_eq!(now >= 0, p.feasible());
                last = now;
            }
        }
    }

    #[test]
    fn optimum_is_attained_and_not_beaten_by_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let mut p = RationalPolyhedron::new(3);
            for i in 0..3 {
                p.add_inequality(lf(&[0, 0, 0], 0).with_coeff(i, 1, 2));
                p.add_inequality(lf(&[0, 0, 0], 0).with_coeff(i, -1, 2));
            }
            for _ in 0..3 {
                p.add_inequality(lf(&(0..3).map(|_| rng.gen_range(-2..3)).collect::<Vec<_>>(), rng.gen_range(0..3)));
            }
            let obj = lf(&(0..3).map(|_| rng.gen_range(-3..4)).collect::<Vec<_>>(), 0);
            if let MaximizeResult::Optimum { value, point } = p.maximize(&obj) {
                assert!(p.contains_point(&point));
                assert_eq!(obj.eval(&point), value);
                for a in -2..=2 {
                    for b in -2..=2 {
                        for c in -2..=2 {
                            let x = vec![int(a), int(b), int(c)];
                            if p.contains_point(&x) {
                                assert!(obj.eval(&x) <= value);
                            }
                        }
                    }
                }
            }
        }
    }

    impl LinearForm {
        fn with_coeff(mut self, i: usize, c: i64, k: i64) -> Self {
            self.coeffs[i] = int(c);
            self.constant = int(k);
            self
        }
    }
}
