//! Closed difference-bound matrices.
//!
//! `d[i][j]` is the tightest known upper bound on `u_j - u_i`; `None` means
//! unbounded. The matrix is kept closed under shortest paths, so every entry
//! is attained by some point of the polyhedron.

use std::ops::{Add, Neg};

use num_traits::Zero;

pub trait Weight: Clone + Ord + Zero + Add<Output = Self> + Neg<Output = Self> + Send + Sync {}

impl<T> Weight for T where T: Clone + Ord + Zero + Add<Output = T> + Neg<Output = T> + Send + Sync {}

#[derive(Debug, Clone)]
pub struct Dbm<W> {
    v: usize,
    d: Vec<Option<W>>,
}

impl<W: Weight> Dbm<W> {
    pub fn unconstrained(v: usize) -> Self {
        let mut d = vec![None; v * v];
        for i in 0..v {
            d[i * v + i] = Some(W::zero());
        }
        Self { v, d }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<&W> {
        self.d[i * self.v + j].as_ref()
    }

    /// True if `u_j - u_i <= w` already follows.
    pub fn implies(&self, i: usize, j: usize, w: &W) -> bool {
        self.get(i, j).is_some_and(|cur| cur <= w)
    }

    /// Adds `u_j - u_i <= w`. Returns false (leaving `self` unspecified) if
    /// the system becomes infeasible.
    pub fn constrain(&mut self, i: usize, j: usize, w: W) -> bool {
        if i == j {
            return w >= W::zero();
        }
        if let Some(back) = self.get(j, i) {
            if back.clone() + w.clone() < W::zero() {
                return false;
            }
        }
        if self.implies(i, j, &w) {
            return true;
        }
        let v = self.v;
        let to_i: Vec<(usize, W)> =
            (0..v).filter_map(|a| self.d[a * v + i].as_ref().map(|x| (a, x.clone() + w.clone()))).collect();
        let from_j: Vec<(usize, W)> =
            (0..v).filter_map(|b| self.d[j * v + b].as_ref().map(|x| (b, x.clone()))).collect();
        for (a, ai) in &to_i {
            let row = a * v;
            for (b, jb) in &from_j {
                let cand = ai.clone() + jb.clone();
                let slot = &mut self.d[row + b];
                match slot {
                    Some(cur) if *cur <= cand => {}
                    _ => *slot = Some(cand),
                }
            }
        }
        true
    }

    /// `u_j - u_i = w`.
    pub fn fix(&mut self, i: usize, j: usize, w: W) -> bool {
        let neg = -w.clone();
        self.constrain(i, j, w) && self.constrain(j, i, neg)
    }

    /// True if `u_j - u_i` is pinned to `w` on the whole polyhedron.
    pub fn fixed_as(&self, i: usize, j: usize, w: &W) -> bool {
        if i == j {
            return w.is_zero();
        }
        self.get(i, j) == Some(w) && self.get(j, i).is_some_and(|b| b.clone() + w.clone() == W::zero())
    }

    /// Labels of the classes of variables with pinned differences, and their
    #[allow(clippy::needless_range_loop)]
    /// count (the affine dimension).
    pub fn classes(&self) -> (Vec<usize>, usize) {
        let v = self.v;
        let mut label = vec![usize::MAX; v];
        let mut count = 0;
        for i in 0..v {
            if label[i] != usize::MAX {
                continue;
            }
            label[i] = count;
            for j in i + 1..v {
                if label[j] == usize::MAX {
                    if let (Some(a), Some(b)) = (&self.d[i * v + j], &self.d[j * v + i]) {
                        if (a.clone() + b.clone()).is_zero() {
                            label[j] = count;
                        }
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn dim(&self) -> usize {
        self.classes().1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_classes() {
        let mut m: Dbm<i64> = Dbm::unconstrained(4);
        assert_eq!(m.dim(), 4);
        assert!(m.fix(0, 1, 3));
        assert!(m.constrain(1, 2, 0));
        assert_eq!(m.dim(), 3);
        assert!(m.constrain(2, 1, 0));
        assert_eq!(m.dim(), 2);
        assert!(m.fixed_as(0, 2, &3));
        assert!(!m.constrain(2, 0, -4));
    }

    #[test]
    fn negative_cycle() {
        let mut m: Dbm<i64> = Dbm::unconstrained(3);
        assert!(m.constrain(0, 1, 1));
        assert!(m.constrain(1, 2, 1));
        assert!(!m.constrain(2, 0, -3));
    }
}
