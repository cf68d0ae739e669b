//! Finite fields `F_{p^m}` with log/antilog tables.
//!
//! An element is stored as the base-`p` integer encoding of its coordinate
//! vector in the power basis `1, z, z^2, ...` where `z` is a root of the
//! field's modulus. With this encoding the prime field `F_p` is literally
//! the set of encodings `0..p` inside every extension, so prime-field data
//! embeds without conversion.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::{ensure_prime, Error, Result};

/// Default upper bound on field sizes scanned during searches (`5^6`).
pub const DEFAULT_FIELD_CAP: u64 = 15_625;

/// Hard limit on the order of a constructed field.
const MAX_ORDER: u64 = 1 << 22;

/// An element of some [`Field`]; meaningless without it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(u32);

impl Fq {
    pub const ZERO: Fq = Fq(0);
    pub const ONE: Fq = Fq(1);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldInner {
    p: u32,
    m: u32,
    order: u32,
    /// Monic modulus, low-to-high, `m + 1` coefficients.
    modulus: Vec<u32>,
    /// `p^i` for `i < m`.
    place: Vec<u32>,
    /// `exp[k] = g^k` for `k < 2(q-1)`.
    exp: Vec<u32>,
    /// Discrete log base `g`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field handle. Cheap to clone; equal iff same `(p, m)` since the
/// modulus is chosen deterministically.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.0.p, self.0.m)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.0.p, self.0.m)
    }
}

fn cache() -> &'static Mutex<HashMap<(u32, u32), Field>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Field>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1)
    }

    /// `F_{p^m}` with the lexicographically smallest monic irreducible
    /// modulus of degree `m`. Constructed fields are cached process-wide.
    pub fn new(p: u32, m: u32) -> Result<Field> {
        ensure_prime(p)?;
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })?;
        if let Some(f) = cache().lock().unwrap().get(&(p, m)) {
            return Ok(f.clone());
        }
        let field = Field(Arc::new(build(p, m, order as u32)));
        cache()
            .lock()
            .unwrap()
            .entry((p, m))
            .or_insert_with(|| field.clone());
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Modulus coefficients, low-to-high (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fq {
        Fq::ZERO
    }

    pub fn one(&self) -> Fq {
        Fq::ONE
    }

    /// The class of the root `z` of the modulus (equals `0` when `m = 1`).
    pub fn generator(&self) -> Fq {
        if self.0.m == 1 {
            Fq(0)
        } else {
            Fq(self.0.p)
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fq {
        Fq(self.0.exp[1])
    }

    /// Reduces an integer into the prime subfield.
    pub fn int(&self, k: i64) -> Fq {
        Fq(k.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element with the given encoding; panics if out of range.
    pub fn element(&self, index: u32) -> Fq {
        assert!(index < self.0.order, "element index out of range");
        Fq(index)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.0.order).map(Fq)
    }

    pub fn is_prime_subfield(&self, a: Fq) -> bool {
        a.0 < self.0.p
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Fq(if s >= p { s - p } else { s });
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0);
        for &w in &self.0.place {
            let s = x % p + y % p;
            out += if s >= p { s - p } else { s } * w;
            x /= p;
            y /= p;
        }
        Fq(out)
    }

    pub fn neg(&self, a: Fq) -> Fq {
        let p = self.0.p;
        if self.0.m == 1 {
            return Fq(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let (mut x, mut out) = (a.0, 0);
        for &w in &self.0.place {
            let c = x % p;
            out += if c == 0 { 0 } else { p - c } * w;
            x /= p;
        }
        Fq(out)
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a.0 == 0 || b.0 == 0 {
            return Fq::ZERO;
        }
        let l = self.0.log[a.0 as usize] + self.0.log[b.0 as usize];
        Fq(self.0.exp[l as usize])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a.0 == 0 {
            return None;
        }
        let n = self.0.order - 1;
        let l = (n - self.0.log[a.0 as usize]) % n;
        Some(Fq(self.0.exp[l as usize]))
    }

    /// `a / b`; panics on division by zero.
    pub fn div(&self, a: Fq, b: Fq) -> Fq {
        self.mul(a, self.inv(b).expect("division by zero in finite field"))
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if e == 0 {
            return Fq::ONE;
        }
        if a.0 == 0 {
            return Fq::ZERO;
        }
        let n = (self.0.order - 1) as u64;
        let l = (self.0.log[a.0 as usize] as u64 * (e % n)) % n;
        Fq(self.0.exp[l as usize])
    }

    /// Signed power; `None` for a negative power of zero.
    pub fn powi(&self, a: Fq, e: i64) -> Option<Fq> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|b| self.pow(b, e.unsigned_abs()))
        }
    }

    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.0.p as u64)
    }

    /// The unique `c` with `c^p = a` (Frobenius is bijective on a finite field).
    pub fn pth_root(&self, a: Fq) -> Fq {
        self.pow(a, (self.0.p as u64).pow(self.0.m - 1))
    }

    /// Degree over `F_p` of the smallest subfield containing `a`.
    pub fn degree_of(&self, a: Fq) -> u32 {
        let mut b = self.frobenius(a);
        let mut d = 1;
        while b != a {
            b = self.frobenius(b);
            d += 1;
        }
        d
    }

    /// Coordinates of `a` in the power basis, low-to-high.
    pub fn digits(&self, a: Fq) -> Vec<u32> {
        let p = self.0.p;
        let mut x = a.0;
        (0..self.0.m)
            .map(|_| {
                let c = x % p;
                x /= p;
                c
            })
            .collect()
    }

    /// Canonical text: an integer in the prime field, otherwise a
    /// polynomial in `z`.
    pub fn format(&self, a: Fq) -> String {
        if a.0 < self.0.p {
            return a.0.to_string();
        }
        let digits = self.digits(a);
        let mut terms = Vec::new();
        for (i, &c) in digits.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            terms.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// Like [`Field::format`] but parenthesized when it has several terms.
    pub fn format_atom(&self, a: Fq) -> String {
        let s = self.format(a);
        if s.contains(' ') {
            format!("({s})")
        } else {
            s
        }
    }
}

fn build(p: u32, m: u32, order: u32) -> FieldInner {
    let modulus = if m == 1 {
        vec![0, 1]
    } else {
        smallest_irreducible(p, m as usize)
    };
    let place: Vec<u32> = (0..m).map(|i| p.pow(i)).collect();
    let n = (order - 1) as usize;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; order as usize];
    if order == 2 {
        exp[0] = 1;
        exp[1] = 1;
    } else {
        'candidates: for g in 2..order {
            let mut x = 1u32;
            for k in 0..n {
                if k > 0 && x == 1 {
                    continue 'candidates;
                }
                exp[k] = x;
                x = slow_mul(p, &modulus, &place, x, g);
            }
            break;
        }
        for k in 0..n {
            exp[k + n] = exp[k];
            log[exp[k] as usize] = k as u32;
        }
    }
    FieldInner {
        p,
        m,
        order,
        modulus,
        place,
        exp,
        log,
    }
}

fn decode(p: u32, m: usize, mut x: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let c = x % p;
            x /= p;
            c
        })
        .collect()
}

/// Schoolbook product modulo the field polynomial; used only to build tables.
fn slow_mul(p: u32, modulus: &[u32], place: &[u32], a: u32, b: u32) -> u32 {
    let m = modulus.len() - 1;
    let (x, y) = (decode(p, m, a), decode(p, m, b));
    let mut prod = vec![0u64; 2 * m];
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p as u64;
        }
    }
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..m {
            let sub = c * modulus[i] as u64 % p as u64;
            prod[k - m + i] = (prod[k - m + i] + p as u64 - sub) % p as u64;
        }
    }
    (0..m).map(|i| prod[i] as u32 * place[i]).sum()
}

/// Remainder of `a` modulo monic `b` over `F_p`, both low-to-high.
fn rem_mod_p(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
        }
        r.pop();
    }
    r
}

fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    // Candidates ordered by (c_{m-1}, ..., c_0) read as a base-p number.
    let count = (p as u64).pow(m as u32);
    (0..count)
        .map(|k| {
            let mut f = decode(p, m, k as u32);
            f.push(1);
            f
        })
        .find(|f| f[0] != 0 && !has_factor_of_degree_at_most(p, f, m / 2))
        .expect("irreducible polynomials exist in every degree")
}

fn has_factor_of_degree_at_most(p: u32, f: &[u32], max_deg: usize) -> bool {
    (1..=max_deg).any(|deg| {
        (0..(p as u64).pow(deg as u32)).any(|k| {
            let mut g = decode(p, deg, k as u32);
            g.push(1);
            rem_mod_p(p, f, &g).iter().all(|&c| c == 0)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.add(f.int(5), f.int(4)), f.int(2));
        assert_eq!(f.mul(f.int(3), f.int(5)), f.int(1));
        assert_eq!(f.inv(f.int(3)), Some(f.int(5)));
        assert_eq!(f.neg(f.int(2)), f.int(5));
        assert_eq!(f.int(-1), f.int(6));
        assert_eq!(f.inv(Fq::ZERO), None);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(Field::prime(9).unwrap_err(), Error::NotPrime(9));
        assert_eq!(Field::new(5, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn f25_modulus_and_generator() {
        let f = Field::new(5, 2).unwrap();
        // x^2 + 2 is the first monic irreducible quadratic over F_5 in our order.
        assert_eq!(f.modulus(), &[2, 0, 1]);
        let z = f.generator();
        assert_eq!(f.mul(z, z), f.int(-2));
        assert_eq!(f.degree_of(z), 2);
        assert_eq!(f.degree_of(f.int(3)), 1);
        assert_eq!(f.format(f.add(z, f.int(3))), "z + 3");
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (7, 1)] {
            let f = Field::new(p, m).unwrap();
            let els: Vec<Fq> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), Fq::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fq::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in els.iter().step_by(5) {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn pth_roots_exist_and_are_unique_up_to_343() {
        for (p, m) in [(2, 1), (2, 8), (3, 5), (5, 3), (7, 3)] {
            let f = Field::new(p, m).unwrap();
            if f.order() > 343 && p != 2 && p != 3 {
                continue;
            }
            let mut seen = vec![false; f.order() as usize];
            for a in f.elements() {
                let c = f.pth_root(a);
                assert_eq!(f.frobenius(c), a);
                assert!(!seen[c.index() as usize], "p-th root not unique");
                seen[c.index() as usize] = true;
            }
        }
    }
}
