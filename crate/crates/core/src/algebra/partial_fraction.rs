//! Partial fraction decomposition over a field where the denominator splits.

use super::field::{Field, Fq};
use super::poly::Poly;
use super::ratfunc::RatFunc;
use crate::{Error, Result};

/// Principal part at a finite point: `coeffs[j-1]` multiplies `(x - point)^-j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPart {
    pub point: Fq,
    pub coeffs: Vec<Fq>,
}

impl PrincipalPart {
    /// Pole order (index of the highest nonzero coefficient), 0 if none.
    pub fn order(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map_or(0, |k| k + 1)
    }
}

/// `f = poly_part + sum of principal parts`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub poly_part: Poly,
    pub terms: Vec<PrincipalPart>,
}

impl Decomposition {
    /// Sums the pieces back into a reduced rational function.
    pub fn recombine(&self) -> RatFunc {
        let field = self.poly_part.field();
        let mut acc = RatFunc::from_poly(self.poly_part.clone());
        for t in &self.terms {
            for (j, &c) in t.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let den = Poly::linear(field, t.point).pow(j as u32 + 1);
                acc = acc.add(&RatFunc::new(Poly::constant(field, c), den).expect("nonzero"));
            }
        }
        acc
    }
}

/// Power series quotient `a / b mod u^n`; requires `b(0) != 0`.
pub(crate) fn series_div(field: &Field, a: &Poly, b: &Poly, n: usize) -> Vec<Fq> {
    let b0inv = field
        .inv(b.coeff(0))
        .expect("series divisor must be a unit");
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = a.coeff(k);
        for i in 1..=k.min(b.coeffs().len().saturating_sub(1)) {
            s = field.sub(s, field.mul(b.coeff(i), out[k - i]));
        }
        out.push(field.mul(s, b0inv));
    }
    out
}

/// Decomposes `f` given the full factorization `den(f) = prod (x - a_i)^{m_i}`.
pub fn partial_fractions(f: &RatFunc, factors: &[(Fq, usize)]) -> Result<Decomposition> {
    let field = f.field();
    let mut prod = Poly::one(field);
    for &(a, m) in factors {
        prod = prod.mul(&Poly::linear(field, a).pow(m as u32));
    }
    if &prod != f.den() {
        return Err(Error::FactorizationMismatch);
    }
    let poly_part = f.num().divrem(f.den())?.0;
    let mut terms = Vec::with_capacity(factors.len());
    for (i, &(a, m)) in factors.iter().enumerate() {
        // f = N / ((x-a)^m * R); expand N(a+u)/R(a+u) to order m.
        let mut rest = Poly::one(field);
        for (k, &(b, mb)) in factors.iter().enumerate() {
            if k != i {
                rest = rest.mul(&Poly::linear(field, b).pow(mb as u32));
            }
        }
        let series = series_div(field, &f.num().taylor_shift(a), &rest.taylor_shift(a), m);
        // series[k] multiplies u^{k-m}.
        let coeffs = (1..=m).map(|j| series[m - j]).collect();
        terms.push(PrincipalPart { point: a, coeffs });
    }
    Ok(Decomposition { poly_part, terms })
}
