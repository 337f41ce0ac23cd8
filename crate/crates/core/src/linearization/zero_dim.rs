//! Radical elements of a finite tropical prevariety built from the lattice
//! points of an upper polyhedron `Q = {Z >= L_i(X) + c_i}`.
//!
//! Sign convention: the prevariety point attached to the form `L_i` with
//! coefficient vector `l_i` is `-l_i`. At `X = -l_i` the term
//! `<a, X> + b` of a point `(a, b)` of `Q` equals `b - L_i(a) >= c_i`, with
//! equality exactly on the facet `Z = L_i + c_i`; two picks on that facet
//! make the minimum attained twice.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Window;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::tropical::{radical_member_zero_dim, TropicalMonomial, TropicalPolynomial};

/// `k` points of `R^n`, each encoded by the linear form whose coefficient
/// vector is the negated point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDimPrevariety {
    pub n: usize,
    /// `forms[i]` are the coefficients `l_i` of `L_i(X) = <l_i, X>`.
    #[serde(with = "forms_serde")]
    pub forms: Vec<Vec<Rational>>,
}

mod forms_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Row(#[serde(with = "crate::rational::serde_rational_vec")] Vec<Rational>);

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row> = v.iter().map(|r| Row(r.clone())).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        Ok(Vec::<Row>::deserialize(d)?.into_iter().map(|r| r.0).collect())
    }
}

impl ZeroDimPrevariety {
    pub fn from_forms(forms: Vec<Vec<Rational>>) -> Result<Self> {
        let n = forms.first().map(|f| f.len()).ok_or_else(|| Error::InvalidInput("at least one form".into()))?;
        if let Some(bad) = forms.iter().find(|f| f.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        Ok(Self { n, forms })
    }

    pub fn from_points(points: &[Vec<Rational>]) -> Result<Self> {
        Self::from_forms(points.iter().map(|p| p.iter().map(|v| -v).collect()).collect())
    }

    pub fn k(&self) -> usize {
        self.forms.len()
    }

    pub fn points(&self) -> Vec<Vec<Rational>> {
        self.forms.iter().map(|f| f.iter().map(|v| -v).collect()).collect()
    }

    /// `L_i(a)`.
    pub fn form_at(&self, i: usize, a: &[i64]) -> Rational {
        self.forms[i].iter().zip(a).fold(Rational::zero(), |acc, (l, &x)| acc + l * rational::int(x))
    }

    /// `max_i (L_i(a) + c_i)`.
    pub fn roof(&self, offsets: &[Rational], a: &[i64]) -> Rational {
        (0..self.k()).map(|i| self.form_at(i, a) + &offsets[i]).max().expect("k >= 1")
    }

    /// Window points whose roof value is attained by form `i`.
    pub fn facet_points(&self, offsets: &[Rational], window: Window, i: usize) -> Vec<Vec<i64>> {
        window.points().filter(|a| self.form_at(i, a) + &offsets[i] == self.roof(offsets, a)).collect()
    }
}

/// A lattice point `(a, roof(a) + lift)`; `lift = 0` puts it on the boundary
/// of `Q`, `lift > 0` strictly inside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pick {
    pub point: Vec<i64>,
    pub lift: Rational,
}

impl Pick {
    pub fn on_roof(point: Vec<i64>) -> Self {
        Self { point, lift: Rational::zero() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Picks {
    /// The two lexicographically smallest window points of every facet
    /// (grid order).
    Auto,
    Explicit(Vec<Pick>),
}

/// `min over picks of <a, X> + b`; verified to vanish at every point of the
/// prevariety before it is returned.
pub fn zero_dim_radical_generator(
    v: &ZeroDimPrevariety,
    offsets: &[Rational],
    side: usize,
    picks: &Picks,
) -> Result<TropicalPolynomial> {
    if offsets.len() != v.k() {
        return Err(Error::DimensionMismatch { expected: v.k(), found: offsets.len() });
    }
    let window = Window::new(v.n, side);
    let facets: Vec<Vec<Vec<i64>>> = (0..v.k()).map(|i| v.facet_points(offsets, window, i)).collect();
    for (i, pts) in facets.iter().enumerate() {
        if pts.len() < 2 {
            return Err(Error::FacetTooSmall { facet: i, found: pts.len() });
        }
    }
    let chosen: Vec<Pick> = match picks {
        Picks::Auto => {
            let mut all: Vec<Pick> = Vec::new();
            for pts in &facets {
                for p in pts.iter().take(2) {
                    let pick = Pick::on_roof(p.clone());
                    if !all.contains(&pick) {
                        all.push(pick);
                    }
                }
            }
            all
        }
        Picks::Explicit(list) => {
            for p in list {
                if !window.contains(&p.point) {
                    return Err(Error::InvalidInput(format!("pick {:?} outside the window", p.point)));
                }
                if p.lift.is_negative() {
                    return Err(Error::InvalidInput(format!("pick {:?} lies below the roof", p.point)));
                }
            }
            for (i, pts) in facets.iter().enumerate() {
                let on = list.iter().filter(|p| p.lift.is_zero() && pts.contains(&p.point)).count();
                if on < 2 {
                    return Err(Error::InvalidInput(format!("facet {i} has {on} pick(s), at least 2 are required")));
                }
            }
            list.clone()
        }
    };
    let monomials =
        chosen.iter().map(|p| TropicalMonomial::new(v.roof(offsets, &p.point) + &p.lift, p.point.clone())).collect();
    let g = TropicalPolynomial::new(v.n, monomials)?;
    if !radical_member_zero_dim(&g, &v.points())? {
        return Err(Error::GeneratorCheck("generator does not vanish on the prevariety".into()));
    }
    Ok(g)
}
