//! Reduction of `y^p - y = f(x)` to minimal form and its branch profile.

use std::fmt;

use serde::Serialize;

use super::field::{Field, Fq};
use super::partial_fraction::{partial_fractions, Decomposition, PrincipalPart};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::roots::roots_in;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BranchPoint {
    Finite(Fq),
    Infinity,
}

/// Branch points with their ramification jumps, sorted by point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchProfile {
    field: Field,
    pub points: Vec<(BranchPoint, u32)>,
}

impl BranchProfile {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Jumps sorted non-increasing.
    pub fn jumps(&self) -> Vec<u32> {
        let mut j: Vec<u32> = self.points.iter().map(|x| x.1).collect();
        j.sort_unstable_by(|a, b| b.cmp(a));
        j
    }

    pub fn jump_at(&self, pt: BranchPoint) -> Option<u32> {
        self.points.iter().find(|x| x.0 == pt).map(|x| x.1)
    }

    /// Pairs rendered as `(point, jump)` strings.
    pub fn describe(&self) -> Vec<ProfileEntry> {
        self.points
            .iter()
            .map(|&(pt, jump)| ProfileEntry {
                point: match pt {
                    BranchPoint::Finite(a) => self.field.format(a),
                    BranchPoint::Infinity => "inf".to_string(),
                },
                jump,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileEntry {
    pub point: String,
    pub jump: u32,
}

impl fmt::Display for BranchProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .describe()
            .iter()
            .map(|e| format!("({}, {})", e.point, e.jump))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Outcome of [`as_minimal_form`].
#[derive(Clone, Debug)]
pub struct MinimalForm {
    pub f_min: RatFunc,
    pub profile: BranchProfile,
    /// `f_min = f - (h^p - h)`.
    pub h: RatFunc,
    /// A correction term cancelled an existing nonzero coefficient, so the
    /// profile depends on the particular coefficients rather than only on
    /// the pole orders of `f`.
    pub accidental_cancellation: bool,
}

/// Applies the reduction loop to one principal part; `coeffs[j-1]` multiplies
/// `u^-j`. Returns the accumulated `h` coefficients in the same layout and
/// whether a cancellation occurred.
fn reduce_part(field: &Field, coeffs: &mut [Fq]) -> (Vec<Fq>, bool) {
    let p = field.characteristic() as usize;
    let mut h = vec![Fq::ZERO; coeffs.len()];
    let mut cancelled = false;
    loop {
        let Some(top) = coeffs.iter().rposition(|c| !c.is_zero()) else {
            break;
        };
        let order = top + 1;
        if order % p != 0 {
            break;
        }
        let s = order / p;
        let c = field.pth_root(coeffs[top]);
        coeffs[top] = Fq::ZERO;
        let before = coeffs[s - 1];
        coeffs[s - 1] = field.add(before, c);
        if !before.is_zero() && coeffs[s - 1].is_zero() {
            cancelled = true;
        }
        h[s - 1] = field.add(h[s - 1], c);
    }
    (h, cancelled)
}

/// Finite poles of `f` inside its own field, each with multiplicity; errors
/// if the denominator does not split there.
pub fn pole_factorization(f: &RatFunc) -> Result<Vec<(Fq, usize)>> {
    let roots = roots_in(f.den(), f.field())?;
    let found: usize = roots.iter().map(|r| r.1).sum();
    let deg = f.den().degree().unwrap_or(0);
    if found != deg {
        return Err(Error::PoleOutsideField {
            order: f.field().order(),
            missing: deg - found,
        });
    }
    Ok(roots)
}

/// Minimal form of `f`, locating poles by scanning the coefficient field.
pub fn as_minimal_form(f: &RatFunc) -> Result<MinimalForm> {
    let factors = pole_factorization(f)?;
    as_minimal_form_with_poles(f, &factors)
}

/// Minimal form of `f` given the full factorization of its denominator.
pub fn as_minimal_form_with_poles(f: &RatFunc, factors: &[(Fq, usize)]) -> Result<MinimalForm> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let field = f.field().clone();
    let Decomposition { poly_part, terms } = partial_fractions(f, factors)?;
    let mut cancelled = false;
    let mut points = Vec::new();
    let mut reduced_terms = Vec::new();
    let mut h_terms = Vec::new();

    for t in terms {
        let mut coeffs = t.coeffs.clone();
        let (h, c) = reduce_part(&field, &mut coeffs);
        cancelled |= c;
        let part = PrincipalPart {
            point: t.point,
            coeffs,
        };
        if part.order() > 0 {
            points.push((BranchPoint::Finite(t.point), part.order() as u32));
        }
        reduced_terms.push(part);
        h_terms.push(PrincipalPart {
            point: t.point,
            coeffs: h,
        });
    }

    // At infinity, in the coordinate u = 1/x, the polynomial part is the
    // principal part with coeffs[j-1] = coefficient of x^j.
    let mut inf: Vec<Fq> = poly_part.coeffs().iter().skip(1).copied().collect();
    let (h_inf, c) = reduce_part(&field, &mut inf);
    cancelled |= c;
    let order_inf = inf.iter().rposition(|c| !c.is_zero()).map_or(0, |k| k + 1);
    if order_inf > 0 {
        points.push((BranchPoint::Infinity, order_inf as u32));
    }
    let mut poly_coeffs = vec![poly_part.coeff(0)];
    poly_coeffs.extend(inf);
    let mut h_poly = vec![Fq::ZERO];
    h_poly.extend(h_inf);

    let f_min = Decomposition {
        poly_part: Poly::new(&field, poly_coeffs),
        terms: reduced_terms,
    }
    .recombine();
    let h = Decomposition {
        poly_part: Poly::new(&field, h_poly),
        terms: h_terms,
    }
    .recombine();
    points.sort();
    Ok(MinimalForm {
        f_min,
        profile: BranchProfile { field, points },
        h,
        accidental_cancellation: cancelled,
    })
}
