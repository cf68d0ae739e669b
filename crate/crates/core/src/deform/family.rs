//! The explicit one-parameter deformation families.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::lemmas::{binom_mod, check_type1_params, round_up_multiple, sign};
use crate::algebra::{
    roots_in, roots_up_to, specialize, BiPoly, BivariateRatFunc, Field, Fq, Poly, RatFunc,
};
use crate::{ensure_prime, Error, Result};

/// The largest extension degree searched for auxiliary roots at `t = 0`.
const AUX_ROOT_MAX_DEGREE: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum FamilySpec {
    /// `{e1 + e2} -> {e1, e2}` with a drop in the residue floors.
    A { p: u32, e1: u32, e2: u32 },
    /// `{e1 + e2 + e3} -> {e1, e2, e3}`, all parts `= (p+1)/2 mod p`.
    B { p: u32, e1: u32, e2: u32, e3: u32 },
    /// `{p - 1 + e1 + e2} -> {p - 1, e1, e2}`.
    C { p: u32, e1: u32, e2: u32 },
    /// `{(n+1)(p-n+1)} -> {n+1, ..., n+1}`.
    D { p: u32, n: u32 },
    /// `{9} -> {3,2,2,2}` in characteristic 5.
    E1 { p: u32 },
    /// `{10} -> {3,3,2,2}` in characteristic 5.
    E2 { p: u32 },
    /// `Z^p - Z = x / a^p`, `a = x^q + sum c_i t^i x^{q-i}`, `c_q != 0`.
    Oss1 { p: u32, q: u32, coeffs: Vec<u32> },
    /// `Z^p - Z = x^l / a^p`, `a = x^q + sum_{i<q} c_i t^i x^{q-i}`.
    Oss2 {
        p: u32,
        q: u32,
        l: u32,
        coeffs: Vec<u32>,
    },
    /// `1 / (x^{e2-1} (x - t)^{e1})` with `p | e1`.
    Pz { p: u32, e1: u32, e2: u32 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::A { p, e1, e2 } => write!(f, "A(p={p}, e1={e1}, e2={e2})"),
            FamilySpec::B { p, e1, e2, e3 } => write!(f, "B(p={p}, e1={e1}, e2={e2}, e3={e3})"),
            FamilySpec::C { p, e1, e2 } => write!(f, "C(p={p}, e1={e1}, e2={e2})"),
            FamilySpec::D { p, n } => write!(f, "D(p={p}, n={n})"),
            FamilySpec::E1 { p } => write!(f, "E1(p={p})"),
            FamilySpec::E2 { p } => write!(f, "E2(p={p})"),
            FamilySpec::Oss1 { p, q, coeffs } => write!(f, "OSS1(p={p}, q={q}, c={coeffs:?})"),
            FamilySpec::Oss2 { p, q, l, coeffs } => {
                write!(f, "OSS2(p={p}, q={q}, l={l}, c={coeffs:?})")
            }
            FamilySpec::Pz { p, e1, e2 } => write!(f, "PZ(p={p}, e1={e1}, e2={e2})"),
        }
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidFamily(msg)
}

/// `x^k + sum_{i=1}^{len} c_i t^i x^{k-i}` as a polynomial in `x` at `t = 1`.
fn oss_poly_at_one(field: &Field, k: u32, coeffs: &[u32]) -> Poly {
    let mut v = vec![Fq::ZERO; k as usize + 1];
    v[k as usize] = Fq::ONE;
    for (i, &c) in coeffs.iter().enumerate() {
        v[k as usize - i - 1] = field.int(c as i64);
    }
    Poly::new(field, v)
}

impl FamilySpec {
    pub fn p(&self) -> u32 {
        match *self {
            FamilySpec::A { p, .. }
            | FamilySpec::B { p, .. }
            | FamilySpec::C { p, .. }
            | FamilySpec::D { p, .. }
            | FamilySpec::E1 { p }
            | FamilySpec::E2 { p }
            | FamilySpec::Oss1 { p, .. }
            | FamilySpec::Oss2 { p, .. }
            | FamilySpec::Pz { p, .. } => p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.p();
        ensure_prime(p)?;
        let ok = |x: u32| x >= 2 && x % p != 1;
        match self {
            FamilySpec::A { e1, e2, .. } => {
                check_type1_params(p, *e1, *e2).map_err(|e| invalid(format!("type A: {e}")))?
            }
            FamilySpec::B { e1, e2, e3, .. } => {
                if p == 2 {
                    return Err(invalid("type B needs an odd prime".into()));
                }
                let h = (p + 1) / 2;
                if [e1, e2, e3].iter().any(|&&e| e < 2 || e % p != h % p) {
                    return Err(invalid(format!("type B parts must be = {h} mod {p}")));
                }
            }
            FamilySpec::C { e1, e2, .. } => {
                if p < 3 {
                    return Err(invalid("type C needs p >= 3".into()));
                }
                if !ok(*e1) || !ok(*e2) || (e1 + e2 - 1) % p == 1 {
                    return Err(invalid("type C needs e1, e2, e1+e2-1 not = 1 mod p".into()));
                }
            }
            FamilySpec::D { n, .. } => {
                if *n < 1 || *n >= p {
                    return Err(invalid(format!("type D needs 1 <= n <= {}", p - 1)));
                }
            }
            FamilySpec::E1 { .. } | FamilySpec::E2 { .. } => {
                if p != 5 {
                    return Err(invalid("types E1 and E2 exist only for p = 5".into()));
                }
            }
            FamilySpec::Oss1 { q, coeffs, .. } => {
                if *q < 1 || coeffs.len() != *q as usize {
                    return Err(invalid(
                        "OSS1 needs q >= 1 and exactly q coefficients".into(),
                    ));
                }
                if coeffs[*q as usize - 1] % p == 0 {
                    return Err(invalid("OSS1 needs a nonzero constant coefficient".into()));
                }
                let f = Field::prime(p)?;
                if !oss_poly_at_one(&f, *q, coeffs).is_separable() {
                    return Err(invalid("OSS1 needs a separable a(x)".into()));
                }
            }
            FamilySpec::Oss2 { q, l, coeffs, .. } => {
                if *q < 1 || coeffs.len() + 1 != *q as usize {
                    return Err(invalid(
                        "OSS2 needs q >= 1 and exactly q-1 coefficients".into(),
                    ));
                }
                if *l < 1 || *l >= p {
                    return Err(invalid(format!("OSS2 needs 1 <= l <= {}", p - 1)));
                }
                if *q >= 2 && coeffs[*q as usize - 2] % p == 0 {
                    return Err(invalid(
                        "OSS2 needs a(x)/x with nonzero constant term".into(),
                    ));
                }
                let f = Field::prime(p)?;
                if !oss_poly_at_one(&f, *q - 1, coeffs).is_separable() {
                    return Err(invalid("OSS2 needs a separable a(x)/x".into()));
                }
            }
            FamilySpec::Pz { e1, e2, .. } => {
                if *e1 == 0 || e1 % p != 0 || !ok(*e2) {
                    return Err(invalid("PZ needs p | e1 and a valid e2".into()));
                }
            }
        }
        Ok(())
    }

    /// `e`: the special fiber has a single pole of order `e - 1` at 0.
    pub fn e(&self) -> u32 {
        match *self {
            FamilySpec::A { e1, e2, .. } | FamilySpec::Pz { e1, e2, .. } => e1 + e2,
            FamilySpec::B { e1, e2, e3, .. } => e1 + e2 + e3,
            FamilySpec::C { p, e1, e2 } => p - 1 + e1 + e2,
            FamilySpec::D { p, n } => (n + 1) * (p - n + 1),
            FamilySpec::E1 { .. } => 9,
            FamilySpec::E2 { .. } => 10,
            FamilySpec::Oss1 { p, q, .. } => p * q,
            FamilySpec::Oss2 { p, q, l, .. } => p * q - l + 1,
        }
    }

    /// Generic jumps, sorted non-increasing.
    pub fn expected_generic_jumps(&self) -> Vec<u32> {
        let mut j = match self {
            FamilySpec::A { e1, e2, .. } | FamilySpec::Pz { e1, e2, .. } => vec![e1 - 1, e2 - 1],
            FamilySpec::B { e1, e2, e3, .. } => vec![e1 - 1, e2 - 1, e3 - 1],
            FamilySpec::C { p, e1, e2 } => vec![p - 2, e1 - 1, e2 - 1],
            FamilySpec::D { p, n } => vec![*n; (p - n + 1) as usize],
            FamilySpec::E1 { .. } => vec![2, 1, 1, 1],
            FamilySpec::E2 { .. } => vec![2, 2, 1, 1],
            FamilySpec::Oss1 { p, q, .. } => vec![p - 1; *q as usize],
            FamilySpec::Oss2 { p, q, l, .. } => {
                let mut v = vec![p - 1; *q as usize - 1];
                v.push(p - l);
                v
            }
        };
        j.sort_unstable_by(|a, b| b.cmp(a));
        j
    }

    /// Random OSS1 parameters: `c_q != 0`, `a(x)` separable.
    pub fn random_oss1<R: Rng>(p: u32, q: u32, rng: &mut R) -> Result<FamilySpec> {
        for _ in 0..10_000 {
            let mut coeffs: Vec<u32> = (0..q).map(|_| rng.gen_range(0..p)).collect();
            coeffs[q as usize - 1] = rng.gen_range(1..p);
            let s = FamilySpec::Oss1 { p, q, coeffs };
            if s.validate().is_ok() {
                return Ok(s);
            }
        }
        Err(invalid(format!(
            "no separable OSS1 parameters for p={p}, q={q}"
        )))
    }

    /// Random OSS2 parameters: `a(x)/x` separable with nonzero constant term.
    pub fn random_oss2<R: Rng>(p: u32, q: u32, l: u32, rng: &mut R) -> Result<FamilySpec> {
        for _ in 0..10_000 {
            let mut coeffs: Vec<u32> = (0..q.saturating_sub(1))
                .map(|_| rng.gen_range(0..p))
                .collect();
            if let Some(last) = coeffs.last_mut() {
                *last = rng.gen_range(1..p);
            }
            let s = FamilySpec::Oss2 { p, q, l, coeffs };
            if s.validate().is_ok() {
                return Ok(s);
            }
        }
        Err(invalid(format!(
            "no separable OSS2 parameters for p={p}, q={q}"
        )))
    }
}

/// Data for the family whose equation involves a root `r` of
/// `sum_{i+j=h} C(h,i) C(h,j) r^{e3-1-j} = t^2`.
#[derive(Clone, Debug)]
pub struct AuxiliaryB {
    h: u32,
    e1: u32,
    e2: u32,
    e3: u32,
    /// `sum_{i+j=k} C(h,i) C(h,j) r^{e3-1-j}` as polynomials in `r`, `k = 0..=h+1`.
    sums: Vec<Poly>,
    /// The chosen limit root at `t = 0` and its field.
    pub r0: Fq,
    pub r0_field: Field,
}

impl AuxiliaryB {
    fn new(p: u32, e1: u32, e2: u32, e3: u32) -> Result<AuxiliaryB> {
        let fp = Field::prime(p)?;
        let h = (p - 1) / 2;
        let sums: Vec<Poly> = (0..=h + 1)
            .map(|k| {
                let mut v = vec![Fq::ZERO; e3 as usize];
                for j in 0..=k.min(h) {
                    let i = k - j;
                    if i > h {
                        continue;
                    }
                    let c = binom_mod(p, h as u64, i as u64) as i64
                        * binom_mod(p, h as u64, j as u64) as i64;
                    let deg = (e3 - 1 - j) as usize;
                    v[deg] = fp.add(v[deg], fp.int(c));
                }
                Poly::new(&fp, v)
            })
            .collect();
        let p_poly = &sums[h as usize];
        let k0 = &sums[h as usize - 1];
        let root = roots_up_to(p_poly, AUX_ROOT_MAX_DEGREE)?
            .into_iter()
            .find(|r| {
                let k0 = k0.lift_to(&r.field).expect("prime field data");
                !r.root.is_zero() && !k0.eval(r.root).is_zero()
            })
            .ok_or(Error::NoAuxiliaryRoot {
                cap: (p as u64).pow(AUX_ROOT_MAX_DEGREE),
            })?;
        Ok(AuxiliaryB {
            h,
            e1,
            e2,
            e3,
            sums,
            r0: root.root,
            r0_field: root.field,
        })
    }

    /// The defining polynomial `P(r)` (whose roots at `t` solve `P(r) = t^2`).
    pub fn defining_poly(&self) -> &Poly {
        &self.sums[self.h as usize]
    }

    /// Numerator and denominator of the fiber at `(t0, r)` in `field`; `k0`
    /// is the normalizing constant placed in the denominator.
    fn fiber_parts(&self, field: &Field, t0: Fq, r: Fq, k0: Fq) -> Result<(Poly, Poly)> {
        let h = self.h as usize;
        let mut num = vec![Fq::ZERO; h + 1];
        for (n, slot) in num.iter_mut().enumerate().take(h) {
            let s = self.sums[n].lift_to(field)?.eval(r);
            let sg = field.int(sign((h - 1 - n) as i64));
            *slot = field.mul(field.mul(s, sg), field.pow(t0, (h - 1 - n) as u64));
        }
        num[h] = field.neg(t0);
        let pw = self.e1 + self.h;
        let den = Poly::monomial(field, k0, pw as usize)
            .mul(&Poly::linear(field, t0).pow(self.e2 - 1))
            .mul(&Poly::linear(field, field.mul(t0, r)).pow(self.e3 - 1));
        Ok((Poly::new(field, num), den))
    }
}

#[derive(Clone, Debug)]
enum Form {
    Bivariate(BivariateRatFunc),
    Auxiliary(AuxiliaryB),
}

/// A constructed family: its equation and its special fiber.
#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    form: Form,
    /// `F(x, 0)`, over `F_p` or the field of the auxiliary limit root.
    pub special: RatFunc,
}

/// A generic fiber ready for profile computation.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub field: Field,
    pub t0: Fq,
    pub f: RatFunc,
    /// Expected branch points with their jumps.
    pub expected: Vec<(Fq, u32)>,
}

#[derive(Clone, Debug)]
pub enum FiberOutcome {
    Ready(Fiber),
    /// The specialization is degenerate for a reason visible before any
    /// profile is computed.
    Skip(String),
}

fn ints(field: &Field, v: i64) -> Fq {
    field.int(v)
}

fn term(f: &Field, c: i64, ti: usize, xk: usize) -> BiPoly {
    BiPoly::term(f, f.int(c), ti, xk)
}

/// `x - c t^i`.
fn x_minus_t(f: &Field, c: i64, i: usize) -> BiPoly {
    BiPoly::x(f).sub(&term(f, c, i, 0))
}

/// `x^k + sum_{i=1}^{len} c_i t^i x^{k-i}`.
fn oss_bipoly(f: &Field, k: u32, coeffs: &[u32]) -> BiPoly {
    let mut a = term(f, 1, 0, k as usize);
    for (i, &c) in coeffs.iter().enumerate() {
        a = a.add(&term(f, c as i64, i + 1, k as usize - i - 1));
    }
    a
}

fn build_bivariate(spec: &FamilySpec, f: &Field) -> Result<BivariateRatFunc> {
    let p = spec.p();
    let x = BiPoly::x(f);
    let t = BiPoly::t(f);
    let (num, den) = match *spec {
        FamilySpec::A { e1, e2, .. } => {
            let e = e1 + e2;
            let pw = round_up_multiple(p, e1);
            let mut num = BiPoly::zero(f);
            for r in 0..=(pw - e1) {
                let c = binom_mod(p, (e2 - 1) as u64, r as u64) as i64 * sign((e2 - 1 - r) as i64);
                num = num.add(&term(f, c, (pw - e1 - r) as usize, r as usize));
            }
            let k = binom_mod(p, (e2 - 1) as u64, (pw - e1) as u64) as i64
                * sign(e as i64 - 1 - pw as i64);
            if ints(f, k).is_zero() {
                return Err(invalid("type A normalizing binomial vanishes mod p".into()));
            }
            let den = term(f, k, 0, pw as usize).mul(&x_minus_t(f, 1, 1).pow(e2 - 1));
            (num, den)
        }
        FamilySpec::C { e1, e2, .. } => {
            let inv = f.inv(f.int(e1 as i64 - 1)).expect("e1 != 1 mod p");
            // r(t) = (t^2 - e2 + 1) / (e1 - 1)
            let r = term(f, 1, 2, 0)
                .add(&term(f, 1 - e2 as i64, 0, 0))
                .scale(inv);
            let num = r.sub(&t.mul(&x));
            let lead = f.mul(f.int(1 - e2 as i64), inv);
            let den = BiPoly::term(f, lead, 0, p as usize)
                .mul(&x_minus_t(f, 1, 1).pow(e1 - 1))
                .mul(&x.sub(&t.mul(&r)).pow(e2 - 1));
            (num, den)
        }
        FamilySpec::D { n, .. } => {
            let inner = term(f, 1, 0, (p - n) as usize).sub(&term(f, 1, (p - n) as usize, 0));
            (BiPoly::one(f), term(f, 1, 0, p as usize).mul(&inner.pow(n)))
        }
        FamilySpec::E1 { .. } => {
            // r + s = t^3 - 1, rs = t^2 - t^3 + 1, r0 s0 = 1.
            let sum = term(f, 1, 3, 0).add(&term(f, -1, 0, 0));
            let prod = term(f, 1, 2, 0)
                .add(&term(f, -1, 3, 0))
                .add(&term(f, 1, 0, 0));
            let num = prod.neg().add(&t.mul(&x)).sub(&t.mul(&x.pow(2)));
            let quad = x.pow(2).sub(&t.mul(&sum).mul(&x)).add(&t.pow(2).mul(&prod));
            let den = term(f, -1, 0, 5).mul(&x_minus_t(f, 1, 1)).mul(&quad);
            (num, den)
        }
        FamilySpec::E2 { .. } => {
            // r + s = 2(2t^3 - t^2 - 2), rs = -2(t^3 - 2t^2 - 1), r0 s0 = 2.
            let sum = term(f, 4, 3, 0)
                .add(&term(f, -2, 2, 0))
                .add(&term(f, -4, 0, 0));
            let prod = term(f, -2, 3, 0)
                .add(&term(f, 4, 2, 0))
                .add(&term(f, 2, 0, 0));
            let num = prod.sub(&t.mul(&x)).add(&t.mul(&x.pow(2)));
            let quad = x.pow(2).sub(&t.mul(&sum).mul(&x)).add(&t.pow(2).mul(&prod));
            let den = term(f, 2, 0, 5).mul(&x_minus_t(f, 1, 1).pow(2)).mul(&quad);
            (num, den)
        }
        FamilySpec::Oss1 { q, ref coeffs, .. } => (x.clone(), oss_bipoly(f, q, coeffs).pow(p)),
        FamilySpec::Oss2 {
            q, l, ref coeffs, ..
        } => {
            // a(x) = x * b(x) with b = x^{q-1} + sum_{i<q} c_i t^i x^{q-1-i}.
            let a = x.mul(&oss_bipoly(f, q - 1, coeffs));
            (term(f, 1, 0, l as usize), a.pow(p))
        }
        FamilySpec::Pz { e1, e2, .. } => (
            BiPoly::one(f),
            term(f, 1, 0, e2 as usize - 1).mul(&x_minus_t(f, 1, 1).pow(e1)),
        ),
        FamilySpec::B { .. } => unreachable!("handled through the auxiliary root"),
    };
    BivariateRatFunc::new(num, den)
}

/// Builds the family `F(x, t)` and its special fiber.
pub fn build_family(spec: &FamilySpec) -> Result<Family> {
    spec.validate()?;
    let p = spec.p();
    let fp = Field::prime(p)?;
    if let FamilySpec::B { e1, e2, e3, .. } = *spec {
        let aux = AuxiliaryB::new(p, e1, e2, e3)?;
        let g = aux.r0_field.clone();
        let k0 = aux.sums[aux.h as usize - 1].lift_to(&g)?.eval(aux.r0);
        let (num, den) = aux.fiber_parts(&g, Fq::ZERO, aux.r0, k0)?;
        let special = RatFunc::new(num, den)?;
        return Ok(Family {
            spec: spec.clone(),
            form: Form::Auxiliary(aux),
            special,
        });
    }
    if matches!(spec, FamilySpec::E1 { .. } | FamilySpec::E2 { .. }) {
        // The limit roots r0, s0 must be distinct and nonzero.
        let q0 = match spec {
            FamilySpec::E1 { .. } => Poly::from_ints(&fp, &[1, 1, 1]),
            _ => Poly::from_ints(&fp, &[2, 4, 1]),
        };
        if !q0.is_separable() || q0.coeff(0).is_zero() {
            return Err(invalid("limit roots r0, s0 degenerate".into()));
        }
    }
    let func = build_bivariate(spec, &fp)?;
    let special = specialize(&func, &fp, Fq::ZERO)?;
    Ok(Family {
        spec: spec.clone(),
        form: Form::Bivariate(func),
        special,
    })
}

/// Distinct roots of `f` in `field`, or `None` unless `f` splits into
/// `expected` distinct linear factors there.
fn split_roots(f: &Poly, field: &Field, expected: usize) -> Result<Option<Vec<Fq>>> {
    let roots = roots_in(f, field)?;
    if roots.len() == expected && roots.iter().all(|r| r.1 == 1) {
        Ok(Some(roots.into_iter().map(|r| r.0).collect()))
    } else {
        Ok(None)
    }
}

impl Family {
    /// The bivariate equation, absent for the family defined through a
    /// root of a `t`-dependent polynomial.
    pub fn bivariate(&self) -> Option<&BivariateRatFunc> {
        match &self.form {
            Form::Bivariate(b) => Some(b),
            Form::Auxiliary(_) => None,
        }
    }

    pub fn auxiliary(&self) -> Option<&AuxiliaryB> {
        match &self.form {
            Form::Auxiliary(a) => Some(a),
            Form::Bivariate(_) => None,
        }
    }

    /// The fiber at `t = t0 != 0` over `field` with expected branch data.
    pub fn fiber(&self, field: &Field, t0: Fq) -> Result<FiberOutcome> {
        let p = self.spec.p();
        if t0.is_zero() {
            return Err(Error::Precondition("generic fibers need t0 != 0".into()));
        }
        let skip = |s: &str| Ok(FiberOutcome::Skip(s.to_string()));
        let lift = |c: i64| field.int(c);
        let tp = |k: u64| field.pow(t0, k);
        let (f, expected): (RatFunc, Vec<(Fq, u32)>) = match (&self.spec, &self.form) {
            (FamilySpec::B { e1, e2, e3, .. }, Form::Auxiliary(aux)) => {
                let target = aux
                    .defining_poly()
                    .lift_to(field)?
                    .sub(&Poly::constant(field, tp(2)));
                let Some(r) = roots_in(&target, field)?
                    .into_iter()
                    .map(|x| x.0)
                    .find(|&r| !r.is_zero() && r != Fq::ONE)
                else {
                    return skip("no usable auxiliary root r in this field");
                };
                let (num, den) = aux.fiber_parts(field, t0, r, Fq::ONE)?;
                let expected = vec![(Fq::ZERO, e1 - 1), (t0, e2 - 1), (field.mul(t0, r), e3 - 1)];
                (RatFunc::new(num, den)?, expected)
            }
            (spec, Form::Bivariate(func)) => {
                let f = specialize(func, field, t0)?;
                let expected = match *spec {
                    FamilySpec::A { e1, e2, .. } => vec![(Fq::ZERO, e1 - 1), (t0, e2 - 1)],
                    FamilySpec::Pz { e1, e2, .. } => vec![(Fq::ZERO, e2 - 1), (t0, e1 - 1)],
                    FamilySpec::C { e1, e2, .. } => {
                        let r =
                            field.div(field.add(tp(2), lift(1 - e2 as i64)), lift(e1 as i64 - 1));
                        vec![(Fq::ZERO, p - 2), (t0, e1 - 1), (field.mul(t0, r), e2 - 1)]
                    }
                    FamilySpec::D { n, .. } => {
                        let k = (p - n) as usize;
                        let g = Poly::monomial(field, Fq::ONE, k)
                            .sub(&Poly::constant(field, tp(k as u64)));
                        let Some(roots) = split_roots(&g, field, k)? else {
                            return skip("x^(p-n) - t0^(p-n) does not split");
                        };
                        let mut v = vec![(Fq::ZERO, n)];
                        v.extend(roots.into_iter().map(|a| (a, n)));
                        v
                    }
                    FamilySpec::E1 { .. } | FamilySpec::E2 { .. } => {
                        let e1 = matches!(spec, FamilySpec::E1 { .. });
                        let t3 = tp(3);
                        let t2 = tp(2);
                        let (sum, prod) = if e1 {
                            (
                                field.sub(t3, Fq::ONE),
                                field.add(field.sub(t2, t3), Fq::ONE),
                            )
                        } else {
                            let s = field.mul(
                                lift(2),
                                field.sub(field.sub(field.mul(lift(2), t3), t2), lift(2)),
                            );
                            let pr = field.mul(
                                lift(-2),
                                field.sub(field.sub(t3, field.mul(lift(2), t2)), Fq::ONE),
                            );
                            (s, pr)
                        };
                        let quad = Poly::new(field, vec![prod, field.neg(sum), Fq::ONE]);
                        let Some(rs) = split_roots(&quad, field, 2)? else {
                            return skip("auxiliary quadratic has no two distinct roots here");
                        };
                        let j_t = if e1 { 1 } else { 2 };
                        vec![
                            (Fq::ZERO, 2),
                            (t0, j_t),
                            (field.mul(t0, rs[0]), 1),
                            (field.mul(t0, rs[1]), 1),
                        ]
                    }
                    FamilySpec::Oss1 { q, ref coeffs, .. } => {
                        let a = oss_bipoly(&Field::prime(p)?, q, coeffs).at_t(field, t0)?;
                        let Some(roots) = split_roots(&a, field, q as usize)? else {
                            return skip("a(x) does not split into distinct factors");
                        };
                        roots.into_iter().map(|r| (r, p - 1)).collect()
                    }
                    FamilySpec::Oss2 {
                        q, l, ref coeffs, ..
                    } => {
                        let b = oss_bipoly(&Field::prime(p)?, q - 1, coeffs).at_t(field, t0)?;
                        let Some(roots) = split_roots(&b, field, q as usize - 1)? else {
                            return skip("a(x)/x does not split into distinct factors");
                        };
                        let mut v = vec![(Fq::ZERO, p - l)];
                        v.extend(roots.into_iter().map(|r| (r, p - 1)));
                        v
                    }
                    FamilySpec::B { .. } => unreachable!(),
                };
                (f, expected)
            }
            (_, Form::Auxiliary(_)) => {
                unreachable!("form matches spec")
            }
        };
        let mut locs: Vec<Fq> = expected.iter().map(|x| x.0).collect();
        locs.sort();
        locs.dedup();
        if locs.len() != expected.len() {
            return skip("expected branch points collide");
        }
        Ok(FiberOutcome::Ready(Fiber {
            field: field.clone(),
            t0,
            f,
            expected,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_worked_example() {
        let fam = build_family(&FamilySpec::A { p: 5, e1: 4, e2: 3 }).unwrap();
        let fp = Field::prime(5).unwrap();
        let x = BiPoly::x(&fp);
        let t = BiPoly::t(&fp);
        let num = t.sub(&x.scale(fp.int(2)));
        let den = x.pow(5).scale(fp.int(-2)).mul(&x.sub(&t).pow(2));
        let expected = BivariateRatFunc::new(num, den).unwrap();
        assert!(fam.bivariate().unwrap().equivalent(&expected));
        assert_eq!(fam.special.to_string(), "(1)/(x^6)");
    }

    #[test]
    fn type_d_and_pz_formulas() {
        let fp = Field::prime(5).unwrap();
        let d = build_family(&FamilySpec::D { p: 5, n: 2 }).unwrap();
        let x = BiPoly::x(&fp);
        let t = BiPoly::t(&fp);
        let den = x.pow(5).mul(&x.pow(3).sub(&t.pow(3)).pow(2));
        assert!(d
            .bivariate()
            .unwrap()
            .equivalent(&BivariateRatFunc::new(BiPoly::one(&fp), den).unwrap()));
        assert_eq!(d.special.den().degree(), Some(11));
        let pz = build_family(&FamilySpec::Pz { p: 5, e1: 5, e2: 3 }).unwrap();
        let den = x.pow(2).mul(&x.sub(&t).pow(5));
        assert!(pz
            .bivariate()
            .unwrap()
            .equivalent(&BivariateRatFunc::new(BiPoly::one(&fp), den).unwrap()));
    }

    #[test]
    fn gate_rejects_bad_parameters() {
        assert!(build_family(&FamilySpec::A { p: 5, e1: 7, e2: 6 }).is_err());
        assert!(build_family(&FamilySpec::B {
            p: 5,
            e1: 3,
            e2: 3,
            e3: 4
        })
        .is_err());
        assert!(build_family(&FamilySpec::D { p: 5, n: 5 }).is_err());
        assert!(build_family(&FamilySpec::E1 { p: 7 }).is_err());
        assert!(build_family(&FamilySpec::Pz { p: 5, e1: 4, e2: 3 }).is_err());
        assert!(build_family(&FamilySpec::Oss1 {
            p: 5,
            q: 2,
            coeffs: vec![1, 0]
        })
        .is_err());
    }
}
