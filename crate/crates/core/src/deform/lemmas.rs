//! Binomial-coefficient facts used by the deformation constructions,
//! checked in exact integer arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{Field, Poly};
use crate::partition::is_valid_entry;
use crate::{ensure_prime, Error, Result};

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k) mod p` as an integer in `[0, p)`.
pub fn binom_mod(p: u32, n: u64, k: u64) -> u32 {
    let r = binom(n, k) % BigInt::from(p);
    r.to_u32().expect("reduced residue")
}

/// Smallest multiple of `p` that is at least `e`.
pub fn round_up_multiple(p: u32, e: u32) -> u32 {
    e.div_ceil(p) * p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltBinomSum {
    /// `sum_{k=0}^{v} C(u,k) (-1)^k`.
    pub sum: BigInt,
    /// `(-1)^v / v! * prod_{l=1}^{v} (u - l)`.
    pub closed_form: BigRational,
    pub holds: bool,
}

pub fn alt_binom_sum(u: u64, v: u64) -> Result<AltBinomSum> {
    if v > u {
        return Err(Error::Precondition(format!("v = {v} exceeds u = {u}")));
    }
    let mut sum = BigInt::zero();
    for k in 0..=v {
        let c = binom(u, k);
        if k % 2 == 0 {
            sum += c;
        } else {
            sum -= c;
        }
    }
    let mut prod = BigInt::one();
    let mut fact = BigInt::one();
    for l in 1..=v {
        prod *= BigInt::from(u as i64 - l as i64);
        fact *= l;
    }
    if v % 2 == 1 {
        prod = -prod;
    }
    let closed_form = BigRational::new(prod, fact);
    let holds = closed_form == BigRational::from_integer(sum.clone());
    Ok(AltBinomSum {
        sum,
        closed_form,
        holds,
    })
}

/// The three binomial quantities whose non-divisibility by `p` makes the
/// two-point deformation work: `C(e2-1, pw-e1)`, `C(e2-1, pw-e1+1)` and
/// `Z = sum_{k=0}^{pw-e1} C(e2-1, k) (-1)^{e2-1-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Type1Quantities {
    pub pw: u32,
    pub c0: BigInt,
    pub c1: BigInt,
    pub z: BigInt,
}

/// Checks the split `{e1 + e2} -> {e1, e2}` satisfies the residue-drop
/// condition, with `e1 >= e2` and all three entries valid.
pub fn check_type1_params(p: u32, e1: u32, e2: u32) -> Result<()> {
    ensure_prime(p)?;
    let e = e1 + e2;
    for x in [e, e1, e2] {
        if !is_valid_entry(p, x) {
            return Err(Error::InvalidEntry { entry: x, p });
        }
    }
    if e1 < e2 {
        return Err(Error::Precondition(format!(
            "expected e1 >= e2, got {e1} < {e2}"
        )));
    }
    if (e - 1) / p <= (e1 - 1) / p + (e2 - 1) / p {
        return Err(Error::Precondition(format!(
            "floor((e-1)/p) does not exceed the parts' floors for ({e1}, {e2}) at p = {p}"
        )));
    }
    Ok(())
}

pub fn type1_quantities(p: u32, e1: u32, e2: u32) -> Result<Type1Quantities> {
    check_type1_params(p, e1, e2)?;
    let pw = round_up_multiple(p, e1);
    let (n, k0) = ((e2 - 1) as u64, (pw - e1) as u64);
    let mut z = BigInt::zero();
    for k in 0..=k0 {
        let c = binom(n, k);
        if (n - k) % 2 == 0 {
            z += c;
        } else {
            z -= c;
        }
    }
    Ok(Type1Quantities {
        pw,
        c0: binom(n, k0),
        c1: binom(n, k0 + 1),
        z,
    })
}

/// True iff `p` divides none of the [`Type1Quantities`].
pub fn check_type1_nondiv(p: u32, e1: u32, e2: u32) -> Result<bool> {
    let q = type1_quantities(p, e1, e2)?;
    let bp = BigInt::from(p);
    Ok([q.c0, q.c1, q.z].iter().all(|x| !(x % &bp).is_zero()))
}

/// `C(a, i) = C(a mod p, i) (mod p)` for `i < p`.
pub fn lucas_binom_check(p: u32, a: u64, i: u64) -> Result<bool> {
    ensure_prime(p)?;
    if i >= p as u64 {
        return Err(Error::Precondition(format!(
            "i = {i} must be below p = {p}"
        )));
    }
    let bp = BigInt::from(p);
    let lhs = (binom(a, i) % &bp + &bp) % &bp;
    let rhs = (binom(a % p as u64, i) % &bp + &bp) % &bp;
    Ok(lhs == rhs)
}

/// `S(x) = sum_{i=0}^{h} C(h, i)^2 x^{h-i}` with `h = (p-1)/2`, over `F_p`.
pub fn squared_binomial_poly(p: u32) -> Result<Poly> {
    if p == 2 {
        return Err(Error::Precondition("needs an odd prime".into()));
    }
    let f = Field::prime(p)?;
    let h = ((p - 1) / 2) as u64;
    let coeffs: Vec<i64> = (0..=h)
        .map(|k| {
            // coefficient of x^k comes from i = h - k
            let c = binom(h, h - k);
            ((&c * &c) % BigInt::from(p)).to_i64().expect("small")
        })
        .collect();
    Ok(Poly::from_ints(&f, &coeffs))
}

/// Krull dimension of the versal deformation component through a jump `m`:
/// write `m = pq - l` with `1 <= l < p`; the dimension is `q`, or `q + 1`
/// when `l = 1`.
pub fn osss_dimension(p: u32, m: u32) -> Result<u32> {
    ensure_prime(p)?;
    if m == 0 || m % p == 0 {
        return Err(Error::Precondition(format!("p = {p} divides m = {m}")));
    }
    let q = m.div_ceil(p);
    let l = p * q - m;
    Ok(if l == 1 { q + 1 } else { q })
}

/// Sign helper: `(-1)^k` as an element of `F_p`.
pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn big_to_i64_mod(x: &BigInt, p: u32) -> i64 {
    let bp = BigInt::from(p);
    let r: BigInt = ((x % &bp) + &bp) % &bp;
    r.abs().to_i64().expect("residue")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alt_sum_examples() {
        let r = alt_binom_sum(9, 1).unwrap();
        assert_eq!(r.sum, BigInt::from(-8));
        assert!(r.holds);
        assert_eq!(alt_binom_sum(6, 6).unwrap().sum, BigInt::zero());
        let r = alt_binom_sum(7, 3).unwrap();
        assert_eq!(r.sum, BigInt::from(-20));
        assert!(r.holds);
        assert!(alt_binom_sum(2, 3).is_err());
    }

    #[test]
    fn type1_example() {
        let q = type1_quantities(5, 4, 3).unwrap();
        assert_eq!(
            (q.pw, q.c0.clone(), q.c1.clone(), q.z.clone()),
            (5, 2.into(), 1.into(), (-1).into())
        );
        assert!(check_type1_nondiv(5, 4, 3).unwrap());
        assert!(check_type1_nondiv(5, 7, 6).is_err());
    }

    #[test]
    fn lucas_examples() {
        assert!(lucas_binom_check(5, 12, 3).unwrap());
        assert!(lucas_binom_check(7, 100, 0).unwrap());
        assert!(lucas_binom_check(5, 12, 5).is_err());
    }

    #[test]
    fn squared_poly_mod_5() {
        let s = squared_binomial_poly(5).unwrap();
        assert_eq!(s.to_string(), "x^2 + 4*x + 1");
        assert!(s.is_separable());
    }

    #[test]
    fn osss_examples() {
        assert_eq!(osss_dimension(5, 9).unwrap(), 3);
        assert_eq!(osss_dimension(5, 8).unwrap(), 2);
        assert_eq!(osss_dimension(7, 6).unwrap(), 2);
        assert!(osss_dimension(5, 10).is_err());
    }
}
