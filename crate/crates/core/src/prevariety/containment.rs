use num_traits::Signed;
use serde::Serialize;

use crate::linearization::{Term, TropicalLinearEquation, TropicalLinearSystem};
use crate::polyhedra::{LinearForm, MaximizeResult, PreparedPolyhedron, RationalPolyhedron};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EquationCertificate {
    /// The polyhedron is empty.
    Vacuous,
    /// Terms `p` and `q` tie and are minimal on the whole polyhedron.
    UniformPair { p: usize, q: usize },
    /// No single pair works, but LPs show no term is ever the unique minimum.
    NoStrictMinimum,
    /// Some point has a unique minimizing term.
    Violated {
        term: usize,
        #[serde(with = "rational::serde_rational_vec")]
        point: Vec<Rational>,
    },
    /// No uniform pair found and the exact check was not requested.
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContainmentReport {
    pub contained: bool,
    /// Set when the outcome rests on an unresolved equation.
    pub unknown: bool,
    pub certificates: Vec<EquationCertificate>,
}

impl ContainmentReport {
    pub fn uniform_pairs(&self) -> Option<Vec<(usize, usize)>> {
        self.certificates
            .iter()
            .map(|c| match c {
                EquationCertificate::UniformPair { p, q } => Some((*p, *q)),
                _ => None,
            })
            .collect()
    }
}

fn term_gap(d: usize, a: &Term, b: &Term) -> LinearForm {
    // (c_a + u_a) - (c_b + u_b)
    LinearForm::difference(d, a.var, b.var, &a.constant - &b.constant)
}

fn at_most_zero(w: &PreparedPolyhedron, f: &LinearForm) -> bool {
    match w.maximize(f) {
        MaximizeResult::Optimum { value, .. } => !value.is_positive(),
        MaximizeResult::Infeasible => true,
        MaximizeResult::Unbounded => false,
    }
}

fn is_uniform(w: &PreparedPolyhedron, d: usize, eq: &TropicalLinearEquation, p: usize, q: usize) -> bool {
    let (tp, tq) = (&eq.terms[p], &eq.terms[q]);
    at_most_zero(w, &term_gap(d, tp, tq))
        && at_most_zero(w, &term_gap(d, tq, tp))
        && eq.terms.iter().enumerate().all(|(r, tr)| r == p || r == q || at_most_zero(w, &term_gap(d, tp, tr)))
}

fn strict_minimum(w: &PreparedPolyhedron, d: usize, eq: &TropicalLinearEquation) -> Option<(usize, Vec<Rational>)> {
    eq.terms.iter().enumerate().find_map(|(p, tp)| {
        let forms: Vec<LinearForm> =
            eq.terms.iter().enumerate().filter(|&(r, _)| r != p).map(|(_, tr)| term_gap(d, tr, tp)).collect();
        match w.max_common_margin(&forms) {
            Some((eps, x)) if eps.is_positive() => Some((p, x)),
            _ => None,
        }
    })
}

/// Checks `W ⊆ prevariety(system)` by finding, per equation, one pair of terms
/// that is jointly minimal over all of `W`. Candidate pairs come from `hints`
/// first, then from the minimizers at a sample point of `W`.
///
/// With `exact` set, equations without a uniform pair are settled by LPs
/// searching for a point with a unique minimizer. Otherwise they are reported
/// as unknown and the result is `contained == false`.
pub fn contains_polyhedron(
    system: &TropicalLinearSystem,
    w: &RationalPolyhedron,
    hints: Option<&[Option<(usize, usize)>]>,
    exact: bool,
) -> ContainmentReport {
    let d = system.ambient_dim();
    assert_eq!(w.dim, d, "polyhedron lives in the wrong space");
    let prepared = w.prepare().filter(|p| p.feasible());
    let Some(prepared) = prepared else {
        return ContainmentReport {
            contained: true,
            unknown: false,
            certificates: vec![EquationCertificate::Vacuous; system.equations.len()],
        };
    };
    let sample = match prepared.maximize(&LinearForm::zero(d)) {
        MaximizeResult::Optimum { point, .. } => point,
        _ => unreachable!("feasible polyhedron has a point"),
    };
    let mut certificates = Vec::with_capacity(system.equations.len());
    for (e, eq) in system.equations.iter().enumerate() {
        let values = eq.term_values(&sample);
        let min = values.iter().min().cloned();
        let argmin: Vec<usize> = (0..values.len()).filter(|&i| Some(&values[i]) == min.as_ref()).collect();
        if argmin.len() < 2 {
            certificates.push(EquationCertificate::Violated {
                term: argmin.first().copied().unwrap_or(0),
                point: sample.clone(),
            });
            continue;
        }
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        if let Some(&Some((p, q))) = hints.and_then(|h| h.get(e)) {
            if p < q && q < eq.len() {
                candidates.push((p, q));
            }
        }
        for (i, &p) in argmin.iter().enumerate() {
            for &q in &argmin[i + 1..] {
                if !candidates.contains(&(p, q)) {
                    candidates.push((p, q));
                }
            }
        }
        let cert = match candidates.into_iter().find(|&(p, q)| is_uniform(&prepared, d, eq, p, q)) {
            Some((p, q)) => EquationCertificate::UniformPair { p, q },
            None if exact => match strict_minimum(&prepared, d, eq) {
                Some((term, point)) => EquationCertificate::Violated { term, point },
                None => EquationCertificate::NoStrictMinimum,
            },
            None => EquationCertificate::Unknown,
        };
        certificates.push(cert);
    }
    let violated = certificates.iter().any(|c| matches!(c, EquationCertificate::Violated { .. }));
    let unknown = !violated && certificates.iter().any(|c| matches!(c, EquationCertificate::Unknown));
    ContainmentReport { contained: !violated && !unknown, unknown, certificates }
}
