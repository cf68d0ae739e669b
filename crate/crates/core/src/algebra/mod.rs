//! Exact arithmetic over finite fields: elements, polynomials, rational
//! functions, parameter families, and Artin-Schreier minimal forms.

mod artin_schreier;
mod bivariate;
mod field;
mod linalg;
mod partial_fraction;
mod poly;
mod ratfunc;
mod roots;

pub use artin_schreier::{
    as_minimal_form, as_minimal_form_with_poles, pole_factorization, BranchPoint, BranchProfile,
    MinimalForm, ProfileEntry,
};
pub use bivariate::{specialize, BiPoly, BivariateRatFunc};
pub use field::{Field, Fq, DEFAULT_FIELD_CAP};
pub use linalg::solve;
pub use partial_fraction::{partial_fractions, Decomposition, PrincipalPart};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use roots::{roots_in, roots_in_extension, roots_up_to, splits_over, FoundRoot};

/// True iff `gcd(f, f') = 1`.
pub fn is_separable(f: &Poly) -> bool {
    f.is_separable()
}
