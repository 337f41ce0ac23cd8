use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use super::dbm::{Dbm, Weight};
use super::{CellPattern, DimResult, SearchOptions};
use crate::linearization::TropicalLinearSystem;
use crate::rational::Rational;

/// Constants above this size fall back to exact rationals in the kernel.
const I64_LIMIT: i64 = 1 << 40;

const LOOKAHEAD: usize = 4;

struct Problem<W> {
    v: usize,
    eqs: Vec<Vec<(W, usize)>>,
    order: Vec<usize>,
}

struct Shared<'a> {
    incumbent: AtomicI64,
    best: Mutex<Option<Vec<(usize, usize)>>>,
    explored: AtomicU64,
    pruned: AtomicU64,
    exhausted: AtomicBool,
    opts: &'a SearchOptions,
    start: Instant,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let n = self.explored.fetch_add(1, Ordering::Relaxed) + 1;
        let over_cells = self.opts.max_cells.is_some_and(|m| n > m);
        let over_time = n.is_multiple_of(64) && self.opts.time_limit.is_some_and(|t| self.start.elapsed() > t);
        if over_cells || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn offer(&self, dim: i64, pattern: &[Option<(usize, usize)>]) {
        if dim <= self.incumbent.load(Ordering::Relaxed) {
            return;
        }
        let mut best = self.best.lock().unwrap();
        if dim > self.incumbent.load(Ordering::Relaxed) {
            self.incumbent.store(dim, Ordering::Relaxed);
            *best = Some(pattern.iter().map(|p| p.expect("leaf pattern is complete")).collect());
        }
    }
}

#[derive(Clone)]
struct Node<W> {
    dbm: Dbm<W>,
    uf: Vec<usize>,
    classes: usize,
    pattern: Vec<Option<(usize, usize)>>,
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

impl<W: Weight> Problem<W> {
    fn uniform(&self, dbm: &Dbm<W>, e: usize, p: usize, q: usize) -> bool {
        let t = &self.eqs[e];
        let (cp, xp) = &t[p];
        let (cq, xq) = &t[q];
        dbm.fixed_as(*xp, *xq, &(cp.clone() + -cq.clone()))
            && t.iter()
                .enumerate()
                .all(|(r, (cr, xr))| r == p || r == q || dbm.implies(*xr, *xp, &(cr.clone() + -cp.clone())))
    }

    fn apply(&self, node: &mut Node<W>, e: usize, p: usize, q: usize) -> bool {
        let t = &self.eqs[e];
        let (cp, xp) = &t[p];
        let (cq, xq) = &t[q];
        if !node.dbm.fix(*xp, *xq, cp.clone() + -cq.clone()) {
            return false;
        }
        for (r, (cr, xr)) in t.iter().enumerate() {
            if r != p && r != q && !node.dbm.constrain(*xr, *xp, cr.clone() + -cp.clone()) {
                return false;
            }
        }
        let (a, b) = (find(&mut node.uf, *xp), find(&mut node.uf, *xq));
        if a != b {
            node.uf[a] = b;
            node.classes -= 1;
        }
        node.pattern[e] = Some((p, q));
        true
    }

    /// Settles every open equation already satisfied on the whole cell.
    fn absorb(&self, node: &mut Node<W>) {
        for &e in &self.order {
            if node.pattern[e].is_some() {
                continue;
            }
            let m = self.eqs[e].len();
            'pairs: for p in 0..m {
                for q in p + 1..m {
                    if self.uniform(&node.dbm, e, p, q) {
                        node.pattern[e] = Some((p, q));
                        break 'pairs;
                    }
                }
            }
        }
    }

    fn expand(&self, node: &Node<W>, e: usize, shared: &Shared) -> Vec<(usize, Node<W>)> {
        let m = self.eqs[e].len();
        let mut out = Vec::new();
        for p in 0..m {
            for q in p + 1..m {
                let mut child = node.clone();
                let incumbent = shared.incumbent.load(Ordering::Relaxed);
                if !self.apply(&mut child, e, p, q) || child.classes as i64 <= incumbent {
                    shared.pruned.fetch_add(1, Ordering::Relaxed);
                    continue;
                }
                let d = self.bound(&child);
                if d as i64 <= incumbent {
                    shared.pruned.fetch_add(1, Ordering::Relaxed);
                    continue;
                }
                out.push((d, child));
            }
        }
        out
    }

    /// Upper bound on the dimension of any completion: each open equation
    /// still has to pin two of its terms together, so a family of open
    /// equations over pairwise disjoint classes costs one dimension each.
    fn bound(&self, node: &Node<W>) -> usize {
        let (label, dim) = node.dbm.classes();
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for (e, t) in self.eqs.iter().enumerate() {
            if node.pattern[e].is_some() {
                continue;
            }
            let mut s: Vec<usize> = t.iter().map(|(_, x)| label[*x]).collect();
            s.sort_unstable();
            let len = s.len();
            s.dedup();
            if s.len() == len {
                sets.push(s);
            }
        }
        sets.sort_by_key(|s| s.len());
        let mut used = vec![false; dim];
        let mut cost = 0;
        for s in &sets {
            if s.iter().all(|&c| !used[c]) {
                s.iter().for_each(|&c| used[c] = true);
                cost += 1;
            }
        }
        dim.saturating_sub(cost)
    }

    /// Whether choosing `(p, q)` keeps the cell nonempty. Every new edge
    /// touches `x_p`, so a negative cycle uses at most one edge into it and
    /// one out of it.
    fn pair_feasible(&self, dbm: &Dbm<W>, e: usize, p: usize, q: usize) -> bool {
        let t = &self.eqs[e];
        let (cp, xp) = &t[p];
        let (cq, xq) = &t[q];
        let a = cp.clone() + -cq.clone();
        let ok = |w: W, back: Option<&W>| back.is_none_or(|b| w + b.clone() >= W::zero());
        if !ok(a.clone(), dbm.get(*xq, *xp)) || !ok(-a.clone(), dbm.get(*xp, *xq)) {
            return false;
        }
        t.iter().enumerate().all(|(r, (cr, xr))| {
            if r == p || r == q {
                return true;
            }
            let b = cr.clone() + -cp.clone();
            ok(b.clone(), dbm.get(*xp, *xr)) && ok(a.clone() + b, dbm.get(*xq, *xr))
        })
    }

    /// Branches on the open equation with the fewest surviving children,
    /// looking only at the few with the fewest feasible pairs.
    fn children(&self, node: &Node<W>, shared: &Shared) -> Option<Vec<(usize, Node<W>)>> {
        let mut ranked: Vec<(usize, usize)> = Vec::new();
        for &e in self.order.iter().filter(|&&e| node.pattern[e].is_none()) {
            let m = self.eqs[e].len();
            let count = (0..m)
                .flat_map(|p| (p + 1..m).map(move |q| (p, q)))
                .filter(|&(p, q)| self.pair_feasible(&node.dbm, e, p, q))
                .count();
            ranked.push((count, e));
            if count == 0 {
                break;
            }
        }
        if ranked.is_empty() {
            return None;
        }
        ranked.sort_by_key(|&(c, _)| c);
        let mut best: Option<Vec<(usize, Node<W>)>> = None;
        for &(_, e) in ranked.iter().take(LOOKAHEAD) {
            let kids = self.expand(node, e, shared);
            if best.as_ref().is_none_or(|b| kids.len() < b.len()) {
                let done = kids.len() <= 1;
                best = Some(kids);
                if done {
                    break;
                }
            }
        }
        let mut out = best.expect("at least one candidate");
        out.sort_by_key(|c| std::cmp::Reverse(c.0));
        Some(out)
    }

    fn dfs(&self, mut node: Node<W>, shared: &Shared, par_depth: usize) {
        if !shared.tick() {
            return;
        }
        self.absorb(&mut node);
        let Some(children) = self.children(&node, shared) else {
            shared.offer(node.dbm.dim() as i64, &node.pattern);
            return;
        };
        let visit = |(bound, child): (usize, Node<W>)| {
            if bound as i64 > shared.incumbent.load(Ordering::Relaxed) {
                self.dfs(child, shared, par_depth.saturating_sub(1));
            } else {
                shared.pruned.fetch_add(1, Ordering::Relaxed);
            }
        };
        if par_depth > 0 {
            children.into_par_iter().for_each(visit);
        } else {
            children.into_iter().for_each(visit);
        }
    }
}

/// Fewest terms first; among equal sizes prefer equations touching variables
/// already in play.
fn equation_order(system: &TropicalLinearSystem) -> Vec<usize> {
    let m = system.equations.len();
    let mut touched = vec![false; system.ambient_dim()];
    let mut left: Vec<usize> = (0..m).collect();
    let mut order = Vec::with_capacity(m);
    while !left.is_empty() {
        let (pos, _) = left
            .iter()
            .enumerate()
            .min_by_key(|(_, &e)| {
                let eq = &system.equations[e];
                let fresh = eq.terms.iter().filter(|t| !touched[t.var]).count();
                (eq.len(), fresh, e)
            })
            .unwrap();
        let e = left.swap_remove(pos);
        for t in &system.equations[e].terms {
            touched[t.var] = true;
        }
        order.push(e);
    }
    order
}

fn run<W: Weight>(
    system: &TropicalLinearSystem,
    eqs: Vec<Vec<(W, usize)>>,
    opts: &SearchOptions,
    start: Instant,
) -> DimResult {
    let v = system.ambient_dim();
    let problem = Problem { v, eqs, order: equation_order(system) };
    let shared = Shared {
        incumbent: AtomicI64::new(-1),
        best: Mutex::new(None),
        explored: AtomicU64::new(0),
        pruned: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
        opts,
        start,
    };
    let root = Node {
        dbm: Dbm::unconstrained(problem.v),
        uf: (0..v).collect(),
        classes: v,
        pattern: vec![None; problem.eqs.len()],
    };
    let workers = opts.workers.max(1);
    if problem.eqs.iter().all(|t| t.len() >= 2) {
        if workers == 1 {
            problem.dfs(root, &shared, 0);
        } else {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
            pool.install(|| problem.dfs(root, &shared, 3));
        }
    }
    let dim = shared.incumbent.load(Ordering::Relaxed);
    let witness = shared.best.into_inner().unwrap().map(CellPattern);
    DimResult {
        dim,
        witness_pattern: witness,
        cells_explored: shared.explored.load(Ordering::Relaxed),
        cells_pruned: shared.pruned.load(Ordering::Relaxed),
        complete: !shared.exhausted.load(Ordering::Relaxed),
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

pub(super) fn search(system: &TropicalLinearSystem, opts: &SearchOptions) -> DimResult {
    let start = Instant::now();
    let lcm = system.equations.iter().flat_map(|e| &e.terms).fold(BigInt::one(), |acc, t| acc.lcm(t.constant.denom()));
    let scaled: Vec<Vec<BigInt>> = system
        .equations
        .iter()
        .map(|e| e.terms.iter().map(|t| t.constant.numer() * (&lcm / t.constant.denom())).collect())
        .collect();
    let small = scaled.iter().flatten().all(|x| x.abs() <= BigInt::from(I64_LIMIT));
    if small {
        let eqs = system
            .equations
            .iter()
            .zip(&scaled)
            .map(|(e, s)| e.terms.iter().zip(s).map(|(t, c)| (c.to_i64().unwrap(), t.var)).collect())
            .collect();
        run::<i64>(system, eqs, opts, start)
    } else {
        let eqs =
            system.equations.iter().map(|e| e.terms.iter().map(|t| (t.constant.clone(), t.var)).collect()).collect();
        run::<Rational>(system, eqs, opts, start)
    }
}
