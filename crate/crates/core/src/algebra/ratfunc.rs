//! Reduced rational functions `num/den` with monic denominator.

use std::fmt;

use super::field::{Field, Fq};
use super::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl RatFunc {
    /// Builds and reduces `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            let f = den.field().clone();
            return Ok(RatFunc {
                num: Poly::zero(&f),
                den: Poly::one(&f),
            });
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.div_exact(&g)?, den.div_exact(&g)?);
        let lc = d.leading();
        if lc != Fq::ONE {
            let inv = d.field().inv(lc).expect("nonzero");
            n = n.scale(inv);
            d = d.scale(inv);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let one = Poly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: &Field) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::new(n, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn scale(&self, c: Fq) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.field());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at `a`, `None` at a pole.
    pub fn eval(&self, a: Fq) -> Option<Fq> {
        let f = self.field();
        f.inv(self.den.eval(a)).map(|i| f.mul(self.num.eval(a), i))
    }

    /// `h^p - h`.
    pub fn artin_schreier_image(&self) -> RatFunc {
        self.pow(self.field().characteristic()).sub(self)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
