//! Dense two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Solves `maximize c.z` subject to `G z >= h` with `z` free. Free variables
//! are split as `z = z+ - z-`; each row gets a surplus and an artificial.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, point: Vec<Rational> },
}

struct Tableau {
    /// rows x (cols + 1); last column is the right-hand side.
    a: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        if !p.is_one() {
            for v in self.a[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &p;
                }
            }
        }
        let prow = self.a[r].clone();
        for (i, row) in self.a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs for minimizing `cost` over the current basis.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut rc: Vec<Rational> = cost.to_vec();
        for (i, row) in self.a.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (j, v) in row.iter().take(self.cols).enumerate() {
                if !v.is_zero() {
                    rc[j] -= cb * v;
                }
            }
        }
        rc
    }

    /// Minimizes `cost` restricted to `allowed` columns. Returns false when unbounded.
    fn run(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let rc = self.reduced_costs(cost);
            // Bland: smallest eligible entering index.
            let entering = (0..self.cols).find(|&j| allowed[j] && rc[j].is_negative());
            let Some(c) = entering else { return true };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.a.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[self.cols] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        self.basis.iter().position(|&b| b == col).map(|i| self.a[i][self.cols].clone()).unwrap_or_else(Rational::zero)
    }
}

/// `maximize objective.z` subject to `rows[i].z >= rhs[i]`, `z` in `R^d`.
pub fn maximize(d: usize, rows: &[Vec<Rational>], rhs: &[Rational], objective: &[Rational]) -> LpOutcome {
    let m = rows.len();
    // Columns: z+ (d), z- (d), surplus (m), artificial (m).
    let nz = 2 * d;
    let cols = nz + 2 * m;
    let mut a = Vec::with_capacity(m);
    for (i, (row, b)) in rows.iter().zip(rhs).enumerate() {
        let neg = b.is_negative();
        let sign = |v: Rational| if neg { -v } else { v };
        let mut t = vec![Rational::zero(); cols + 1];
        for j in 0..d {
            if !row[j].is_zero() {
                t[j] = sign(row[j].clone());
                t[d + j] = sign(-row[j].clone());
            }
        }
        t[nz + i] = sign(-Rational::one());
        t[nz + m + i] = Rational::one();
        t[cols] = sign(b.clone());
        a.push(t);
    }
    let mut tab = Tableau { a, basis: (0..m).map(|i| nz + m + i).collect(), cols };

    // Phase 1: minimize the sum of artificials.
    let mut cost1 = vec![Rational::zero(); cols];
    for c in cost1.iter_mut().skip(nz + m) {
        *c = Rational::one();
    }
    let all = vec![true; cols];
    tab.run(&cost1, &all);
    let infeas: Rational = (0..m).map(|i| tab.value_of(nz + m + i)).sum();
    if !infeas.is_zero() {
        return LpOutcome::Infeasible;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    let mut i = 0;
    while i < tab.a.len() {
        if tab.basis[i] >= nz + m {
            if let Some(c) = (0..nz + m).find(|&j| !tab.a[i][j].is_zero()) {
                tab.pivot(i, c);
            } else {
                tab.a.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    // Phase 2: minimize -objective over non-artificial columns.
    let mut cost2 = vec![Rational::zero(); cols];
    for j in 0..d {
        cost2[j] = -objective[j].clone();
        cost2[d + j] = objective[j].clone();
    }
    let allowed: Vec<bool> = (0..cols).map(|j| j < nz + m).collect();
    if !tab.run(&cost2, &allowed) {
        return LpOutcome::Unbounded;
    }
    let point: Vec<Rational> = (0..d).map(|j| tab.value_of(j) - tab.value_of(d + j)).collect();
    let value = point.iter().zip(objective).map(|(x, c)| x * c).sum();
    LpOutcome::Optimal { value, point }
}
