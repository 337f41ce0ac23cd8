use serde::Serialize;

use crate::linearization::Window;
use crate::polyhedra::{LinearForm, RationalPolyhedron};
use crate::rational::{self, Rational};

/// Explicit polyhedra in `R^{T_N}` (plane windows) used as lower-bound
/// witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessFamily {
    /// `u(2x, y) = 0`, `u(2x + 1, y) >= 0`.
    EvenColumn,
    /// `u(x, y) = c(x)` with `c` concave along the grid.
    ConcaveColumn,
    /// `u = t` off the diagonal and `u(x, x) >= t`.
    Diagonal,
}

/// Limit of `dim / N^2` for a family, as claimed by its formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymptoticClaim {
    pub family: WitnessFamily,
    #[serde(with = "rational::serde_rational")]
    pub density: Rational,
    pub formula: &'static str,
}

impl WitnessFamily {
    pub const ALL: [WitnessFamily; 3] = [Self::EvenColumn, Self::ConcaveColumn, Self::Diagonal];

    pub fn name(self) -> &'static str {
        match self {
            Self::EvenColumn => "even-column",
            Self::ConcaveColumn => "concave-column",
            Self::Diagonal => "diagonal",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn claimed_dim(self, side: usize) -> i64 {
        let n = side as i64;
        match self {
            Self::EvenColumn => n * (n / 2),
            Self::ConcaveColumn => n,
            Self::Diagonal => (n + 1).min(n * n),
        }
    }

    pub fn asymptotic(self) -> AsymptoticClaim {
        let (density, formula) = match self {
            Self::EvenColumn => (rational::ratio(1, 2), "N*floor(N/2)"),
            Self::ConcaveColumn => (rational::zero(), "N"),
            Self::Diagonal => (rational::zero(), "N+1"),
        };
        AsymptoticClaim { family: self, density, formula }
    }

    pub fn polyhedron(self, side: usize) -> RationalPolyhedron {
        let window = Window::new(2, side);
        let d = window.size();
        let at = |x: i64, y: i64| window.index(&[x, y]);
        let n = side as i64;
        let mut poly = RationalPolyhedron::new(d);
        let unit = |i: usize| {
            let mut f = LinearForm::zero(d);
            f.coeffs[i] = rational::one();
            f
        };
        match self {
            Self::EvenColumn => {
                for p in window.points() {
                    let f = unit(window.index(&p));
                    if p[0] % 2 == 0 {
                        poly.add_equality(f);
                    } else {
                        poly.add_inequality(f);
                    }
                }
            }
            Self::ConcaveColumn => {
                for x in 0..n {
                    for y in 1..n {
                        poly.add_equality(LinearForm::difference(d, at(x, y), at(x, 0), rational::zero()));
                    }
                }
                for x in 1..n - 1 {
                    // 2c(x) - c(x-1) - c(x+1) >= 0
                    let mut f = LinearForm::zero(d);
                    f.coeffs[at(x, 0)] = rational::int(2);
                    f.coeffs[at(x - 1, 0)] = rational::int(-1);
                    f.coeffs[at(x + 1, 0)] = rational::int(-1);
                    poly.add_inequality(f);
                }
            }
            Self::Diagonal => {
                if side >= 2 {
                    let t = at(1, 0);
                    for p in window.points() {
                        let i = window.index(&p);
                        if i == t {
                            continue;
                        }
                        let f = LinearForm::difference(d, i, t, rational::zero());
                        if p[0] == p[1] {
                            poly.add_inequality(f);
                        } else {
                            poly.add_equality(f);
                        }
                    }
                }
            }
        }
        poly
    }
}
