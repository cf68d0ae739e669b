//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use super::field::{Field, Fq};
use crate::{Error, Result};

/// A polynomial with coefficients stored low-to-high and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fq>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]({})", self.field, self)
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Fq>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given as integers reduced into the prime field, low-to-high.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.int(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Fq::ONE)
    }

    pub fn constant(field: &Field, c: Fq) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Fq, k: usize) -> Poly {
        let mut v = vec![Fq::ZERO; k + 1];
        v[k] = c;
        Poly::new(field, v)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Fq::ONE, 1)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Fq) -> Poly {
        Poly::new(field, vec![field.neg(a), Fq::ONE])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Fq {
        self.coeffs.get(k).copied().unwrap_or(Fq::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Fq {
        self.coeffs.last().copied().unwrap_or(Fq::ZERO)
    }

    /// Lowest index with a nonzero coefficient (order of vanishing at 0).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-reads the coefficients in a field of the same characteristic whose
    /// encoding contains them (prime-field data moves into any extension).
    pub fn lift_to(&self, field: &Field) -> Result<Poly> {
        if field.characteristic() != self.field.characteristic()
            || self.coeffs.iter().any(|c| c.index() >= field.order())
            || (self.field.degree() > 1 && field.degree() != self.field.degree())
        {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::new(field, self.coeffs.clone()))
    }

    fn check(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomials over different fields"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..n)
                .map(|k| f.add(self.coeff(k), other.coeff(k)))
                .collect(),
        )
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fq) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Fq::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        Poly::new(&self.field, v)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![Fq::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
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

    /// Euclidean division: `(q, r)` with `self = q*div + r`, `deg r < deg div`.
    pub fn divrem(&self, div: &Poly) -> Result<(Poly, Poly)> {
        self.check(div);
        let f = &self.field;
        let dd = div.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(div.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut q = vec![Fq::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &b) in div.coeffs.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, b));
            }
        }
        r.truncate(dd);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, div: &Poly) -> Result<Poly> {
        Ok(self.divrem(div)?.1)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, div: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(div)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::FactorizationMismatch)
        }
    }

    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| f.mul(f.int(k as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, a: Fq) -> Fq {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Fq::ZERO, |acc, &c| f.add(f.mul(acc, a), c))
    }

    /// `self(x + a)`.
    pub fn taylor_shift(&self, a: Fq) -> Poly {
        let f = &self.field;
        let mut c = self.coeffs.clone();
        let n = c.len();
        // Repeated synthetic division by (x - (-a)) in place.
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] = f.add(c[j], f.mul(a, c[j + 1]));
            }
        }
        Poly::new(f, c)
    }

    /// `x^n self(1/x)` for `n = deg self`.
    pub fn reverse(&self) -> Poly {
        let mut c = self.coeffs.clone();
        c.reverse();
        Poly::new(&self.field, c)
    }

    /// Multiplicity of `a` as a root.
    pub fn root_multiplicity(&self, a: Fq) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        self.taylor_shift(a).valuation().unwrap_or(0)
    }

    /// True iff `gcd(f, f') = 1`.
    pub fn is_separable(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Canonical ASCII form with terms in decreasing degree, e.g.
    /// `3*x^2 + 4*x + 1`; multi-term coefficients are parenthesized.
    pub fn format_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            terms.push(match (k, c == Fq::ONE) {
                (0, _) => f.format(c),
                (_, true) => mono,
                _ => format!("{}*{mono}", f.format_atom(c)),
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_var("x"))
    }
}
