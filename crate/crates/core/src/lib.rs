//! Exact combinatorics and finite-field algebra for the stratification of
//! the moduli space of Artin-Schreier curves of fixed genus.
//!
//! * [`partition`] enumerates the partition sets indexing the strata.
//! * [`strata`] computes stratum dimensions.
//! * [`graph`] builds the refinement graph `G_d` and the closure graph `C_d`
//!   and derives connectedness verdicts from them.
//! * [`algebra`] is the exact arithmetic tower used to check deformations:
//!   finite fields, polynomials, rational functions, minimal forms.
//! * [`deform`] constructs the explicit one-parameter deformation families
//!   and verifies their fibers, together with the binomial lemmas they rely on.
//! * [`sweep`] runs the above over many parameters, in parallel when the
//!   `parallel` feature is enabled.

pub mod algebra;
pub mod deform;
mod error;
pub mod graph;
pub mod partition;
pub mod strata;
pub mod sweep;

pub use error::{Error, Result};

/// Trial-division primality test; the primes used here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

pub(crate) fn ensure_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::NotPrime(p as u64))
    }
}
