//! Recovers the two-point family by solving for the coefficients of
//! `G = sum_{i<e1} a_i / x^i + a_pw / x^pw + sum_{j<e2} b_j / (x - t)^j`
//! subject to `G` having numerator degree at most `pw - e1` over
//! `x^pw (x - t)^{e2-1}`.

use super::family::{build_family, FamilySpec};
use super::lemmas::{binom_mod, check_type1_params, round_up_multiple, type1_quantities};
use crate::algebra::{solve, specialize, Field, Fq, Poly, RatFunc};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CoefficientSolution {
    pub pw: u32,
    /// `a_1, ..., a_{e1-1}`.
    pub a: Vec<Fq>,
    pub a_pw: Fq,
    /// `b_1, ..., b_{e2-1}`.
    pub b: Vec<Fq>,
    pub g: RatFunc,
    /// `a_{e1-1} = C(e2-1, pw-e1+1) (-1)^{e1-pw} t^{-e2}`.
    pub a_top_matches: bool,
    /// `b_{e2-1} = Z t^{-e1}`.
    pub b_top_matches: bool,
    /// `G` is the type A family up to its normalizing constant.
    pub matches_family: bool,
}

impl CoefficientSolution {
    pub fn all_checks(&self) -> bool {
        self.a_top_matches && self.b_top_matches && self.matches_family
    }
}

fn signed(field: &Field, k: i64) -> Fq {
    if k.rem_euclid(2) == 0 {
        Fq::ONE
    } else {
        field.neg(Fq::ONE)
    }
}

pub fn solve_coefficient_system(
    p: u32,
    e1: u32,
    e2: u32,
    t0: Fq,
    field: &Field,
) -> Result<CoefficientSolution> {
    check_type1_params(p, e1, e2)?;
    if field.characteristic() != p {
        return Err(Error::FieldMismatch);
    }
    if t0.is_zero() {
        return Err(Error::Precondition("t0 must be nonzero".into()));
    }
    let e = e1 + e2;
    let pw = round_up_multiple(p, e1);
    let inv_t = field.inv(t0).expect("t0 != 0");
    let a_pw = field.pow(inv_t, (e - 1 - pw) as u64);

    let xt = Poly::linear(field, t0);
    let mono = |k: u32| Poly::monomial(field, Fq::ONE, k as usize);
    // Column polynomials, one per unknown.
    let mut cols: Vec<Poly> = (1..e1).map(|i| mono(pw - i).mul(&xt.pow(e2 - 1))).collect();
    cols.extend((1..e2).map(|j| mono(pw).mul(&xt.pow(e2 - 1 - j))));
    let fixed = xt.pow(e2 - 1).scale(a_pw);

    let lo = (pw - e1 + 1) as usize;
    let hi = (pw + e2 - 2) as usize;
    let rows: Vec<Vec<Fq>> = (lo..=hi)
        .map(|n| cols.iter().map(|c| c.coeff(n)).collect())
        .collect();
    let rhs: Vec<Fq> = (lo..=hi).map(|n| field.neg(fixed.coeff(n))).collect();
    let sol = solve(field, rows, rhs)?;
    let (a, b) = sol.split_at(e1 as usize - 1);

    let mut num = fixed.clone();
    for (c, &v) in cols.iter().zip(&sol) {
        num = num.add(&c.scale(v));
    }
    let g = RatFunc::new(num, mono(pw).mul(&xt.pow(e2 - 1)))?;

    let c1 = field.int(binom_mod(p, (e2 - 1) as u64, (pw - e1 + 1) as u64) as i64);
    let a_pred = field.mul(
        field.mul(c1, signed(field, e1 as i64 - pw as i64)),
        field.pow(inv_t, e2 as u64),
    );
    let q = type1_quantities(p, e1, e2)?;
    let z = field.int(super::lemmas::big_to_i64_mod(&q.z, p));
    let b_pred = field.mul(z, field.pow(inv_t, e1 as u64));

    let fam = build_family(&FamilySpec::A { p, e1, e2 })?;
    let f = specialize(fam.bivariate().expect("type A is bivariate"), field, t0)?;
    let k = field.mul(
        field.int(binom_mod(p, (e2 - 1) as u64, (pw - e1) as u64) as i64),
        signed(field, e as i64 - 1 - pw as i64),
    );
    let matches_family = f.scale(k) == g;

    Ok(CoefficientSolution {
        pw,
        a: a.to_vec(),
        a_pw,
        b: b.to_vec(),
        a_top_matches: a.last().copied() == Some(a_pred),
        b_top_matches: b.last().copied() == Some(b_pred),
        matches_family,
        g,
    })
}
