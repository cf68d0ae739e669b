//! Polynomials in `x` whose coefficients are polynomials in a parameter `t`,
//! and their ratios.

use std::fmt;

use super::field::{Field, Fq};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::{Error, Result};

/// `sum_k c_k(t) x^k`, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPoly {
    field: Field,
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Poly>) -> BiPoly {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> BiPoly {
        BiPoly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> BiPoly {
        BiPoly::constant(field, Fq::ONE)
    }

    pub fn constant(field: &Field, c: Fq) -> BiPoly {
        BiPoly::term(field, c, 0, 0)
    }

    /// `c * t^i * x^k`.
    pub fn term(field: &Field, c: Fq, i: usize, k: usize) -> BiPoly {
        let mut v = vec![Poly::zero(field); k + 1];
        v[k] = Poly::monomial(field, c, i);
        BiPoly::new(field, v)
    }

    pub fn x(field: &Field) -> BiPoly {
        BiPoly::term(field, Fq::ONE, 0, 1)
    }

    pub fn t(field: &Field) -> BiPoly {
        BiPoly::term(field, Fq::ONE, 1, 0)
    }

    /// A polynomial in `t` alone.
    pub fn from_t_poly(p: Poly) -> BiPoly {
        let f = p.field().clone();
        BiPoly::new(&f, vec![p])
    }

    /// A polynomial in `x` alone.
    pub fn from_x_poly(p: &Poly) -> BiPoly {
        let f = p.field().clone();
        BiPoly::new(
            &f,
            p.coeffs().iter().map(|&c| Poly::constant(&f, c)).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Poly::zero(&self.field);
        BiPoly::new(
            &self.field,
            (0..n)
                .map(|k| {
                    self.coeffs
                        .get(k)
                        .unwrap_or(&z)
                        .add(other.coeffs.get(k).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly::new(&self.field, self.coeffs.iter().map(Poly::neg).collect())
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fq) -> BiPoly {
        BiPoly::new(
            &self.field,
            self.coeffs.iter().map(|p| p.scale(c)).collect(),
        )
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero(&self.field);
        }
        let mut out = vec![Poly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(&self.field, out)
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Smallest power of `t` appearing in any coefficient.
    pub fn t_valuation(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::valuation).min()
    }

    fn divide_t_power(&self, k: usize) -> BiPoly {
        BiPoly::new(
            &self.field,
            self.coeffs
                .iter()
                .map(|c| Poly::new(&self.field, c.coeffs().iter().skip(k).copied().collect()))
                .collect(),
        )
    }

    /// Substitutes `t = t0` (with `t0` in `target`, which must contain the
    /// coefficients of `self`).
    pub fn at_t(&self, target: &Field, t0: Fq) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.lift_to(target)?.eval(t0));
        }
        Ok(Poly::new(target, out))
    }

    /// Canonical ASCII form in `x` and `t`.
    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xm = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let single = c.coeffs().iter().filter(|a| !a.is_zero()).count() == 1;
            let cs = c.format_var("t");
            terms.push(if k == 0 {
                cs
            } else if cs == "1" {
                xm
            } else if single {
                format!("{cs}*{xm}")
            } else {
                format!("({cs})*{xm}")
            });
        }
        terms.join(" + ")
    }
}

/// `num / den` with `den != 0` and no common power of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateRatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl BivariateRatFunc {
    pub fn new(num: BiPoly, den: BiPoly) -> Result<BivariateRatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = match num.t_valuation() {
            Some(vn) => vn.min(den.t_valuation().unwrap_or(0)),
            None => 0,
        };
        Ok(BivariateRatFunc {
            num: num.divide_t_power(k),
            den: den.divide_t_power(k),
        })
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    /// Equality as rational functions (cross-multiplication).
    pub fn equivalent(&self, other: &BivariateRatFunc) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for BivariateRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num.format(), self.den.format())
    }
}

/// Evaluates the family at the fiber `t = t0` in `target` and reduces.
pub fn specialize(func: &BivariateRatFunc, target: &Field, t0: Fq) -> Result<RatFunc> {
    let den = func.den.at_t(target, t0)?;
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    RatFunc::new(func.num.at_t(target, t0)?, den)
}
