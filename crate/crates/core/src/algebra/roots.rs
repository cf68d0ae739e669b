//! Root finding by exhaustive scan of finite fields.

use super::field::{Field, Fq, DEFAULT_FIELD_CAP};
use super::poly::Poly;
use crate::Result;

/// A root together with the smallest field `F_{p^m}` (in the scanned tower)
/// containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundRoot {
    pub root: Fq,
    pub field: Field,
    pub multiplicity: usize,
}

/// Distinct roots of `f` in `field` with multiplicities, in encoding order.
pub fn roots_in(f: &Poly, field: &Field) -> Result<Vec<(Fq, usize)>> {
    let g = f.lift_to(field)?;
    assert!(!g.is_zero(), "roots of the zero polynomial");
    let mut out = Vec::new();
    let mut rest = g.clone();
    let mut remaining = g.degree().unwrap_or(0);
    for a in field.elements() {
        if remaining == 0 {
            break;
        }
        if rest.eval(a).is_zero() {
            let m = rest.root_multiplicity(a);
            let lin = Poly::linear(field, a).pow(m as u32);
            rest = rest.div_exact(&lin)?;
            remaining -= m;
            out.push((a, m));
        }
    }
    Ok(out)
}

/// Scans `F_{p^m}` for `m = 1..=max_degree` with `p^m <= cap`, reporting each
/// root in the smallest such field where it is defined. `f` must have
/// prime-field coefficients.
pub fn roots_in_extension(f: &Poly, max_degree: u32, cap: u64) -> Result<Vec<FoundRoot>> {
    let p = f.field().characteristic();
    let mut out = Vec::new();
    for m in 1..=max_degree {
        if (p as u64).checked_pow(m).is_none_or(|q| q > cap) {
            break;
        }
        let field = Field::new(p, m)?;
        for (root, multiplicity) in roots_in(f, &field)? {
            if field.degree_of(root) == m {
                out.push(FoundRoot {
                    root,
                    field: field.clone(),
                    multiplicity,
                });
            }
        }
    }
    Ok(out)
}

/// [`roots_in_extension`] with the default cap.
pub fn roots_up_to(f: &Poly, max_degree: u32) -> Result<Vec<FoundRoot>> {
    roots_in_extension(f, max_degree, DEFAULT_FIELD_CAP)
}

/// True iff `f` factors into linear factors over `field`.
pub fn splits_over(f: &Poly, field: &Field) -> Result<bool> {
    let total: usize = roots_in(f, field)?.iter().map(|r| r.1).sum();
    Ok(Some(total) == f.degree())
}
