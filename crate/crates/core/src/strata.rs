//! Stratum dimensions.

use serde::Serialize;

use crate::partition::{enumerate_omega, is_valid_entry, Partition};
use crate::{ensure_prime, Error, Result};

/// `d - 1 - sum floor((e_j - 1)/p)`.
pub fn dimension(part: &Partition) -> i64 {
    let p = part.p();
    let drop: u32 = part.entries().iter().map(|&e| (e - 1) / p).sum();
    part.d() as i64 - 1 - drop as i64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumDim {
    pub partition: Partition,
    pub dim: i64,
}

pub fn stratum_dims(p: u32, d: u32) -> Result<Vec<StratumDim>> {
    Ok(enumerate_omega(p, d)?
        .into_iter()
        .map(|partition| StratumDim {
            dim: dimension(&partition),
            partition,
        })
        .collect())
}

/// How the dimension changes along a two-part split `{e} -> {e1, e2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeDimCase {
    /// Both strata have the same dimension.
    EqualDims,
    /// The coarser stratum has dimension one less.
    DropByOne,
}

fn check_split(p: u32, e: u32, parts: [u32; 2]) -> Result<()> {
    ensure_prime(p)?;
    for x in [e, parts[0], parts[1]] {
        if !is_valid_entry(p, x) {
            return Err(Error::InvalidEntry { entry: x, p });
        }
    }
    if parts[0] + parts[1] != e {
        return Err(Error::Precondition(format!(
            "{} + {} != {e}",
            parts[0], parts[1]
        )));
    }
    Ok(())
}

/// Residue criterion: equal dimensions iff `2 < r1 + r2 <= p` with both
/// residues nonzero.
pub fn edge_dim_case(p: u32, e: u32, parts: [u32; 2]) -> Result<EdgeDimCase> {
    check_split(p, e, parts)?;
    let (r1, r2) = (parts[0] % p, parts[1] % p);
    Ok(if 2 < r1 + r2 && r1 + r2 <= p && r1 * r2 != 0 {
        EdgeDimCase::EqualDims
    } else {
        EdgeDimCase::DropByOne
    })
}

/// The criterion without the nonzero-residue clause and with the second
/// residue doubled, as it was once stated. Wrong; kept for regression tests.
pub fn edge_dim_case_uncorrected(p: u32, e: u32, parts: [u32; 2]) -> Result<EdgeDimCase> {
    check_split(p, e, parts)?;
    let r2 = parts[0].min(parts[1]) % p;
    Ok(if 2 < 2 * r2 && 2 * r2 <= p {
        EdgeDimCase::EqualDims
    } else {
        EdgeDimCase::DropByOne
    })
}

/// Dimension comparison computed directly from [`dimension`].
pub fn edge_dim_case_direct(p: u32, e: u32, parts: [u32; 2]) -> Result<EdgeDimCase> {
    check_split(p, e, parts)?;
    let diff = (parts[0] - 1) / p + (parts[1] - 1) / p;
    match (e - 1) / p - diff {
        0 => Ok(EdgeDimCase::EqualDims),
        1 => Ok(EdgeDimCase::DropByOne),
        k => Err(Error::Precondition(format!("dimension jumps by {k}"))),
    }
}

/// The moduli space is irreducible iff exactly one stratum has the top
/// dimension `d - 1`.
pub fn is_irreducible(p: u32, d: u32) -> Result<bool> {
    let top = d as i64 - 1;
    Ok(stratum_dims(p, d)?.iter().filter(|s| s.dim == top).count() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: u32, v: &[u32]) -> Partition {
        Partition::new(p, v.to_vec()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&part(5, &[7])), 3);
        assert_eq!(dimension(&part(5, &[5, 2])), 4);
        assert_eq!(dimension(&part(7, &[4])), 1);
        assert_eq!(dimension(&part(5, &[9])), 5);
    }

    #[test]
    fn edge_case_examples() {
        assert_eq!(edge_dim_case(5, 7, [5, 2]).unwrap(), EdgeDimCase::DropByOne);
        assert_eq!(edge_dim_case(5, 4, [2, 2]).unwrap(), EdgeDimCase::EqualDims);
        assert_eq!(edge_dim_case(5, 7, [4, 3]).unwrap(), EdgeDimCase::DropByOne);
        assert!(edge_dim_case(5, 8, [6, 2]).is_err());
    }

    #[test]
    fn uncorrected_criterion_is_wrong_on_seven() {
        let direct = edge_dim_case_direct(5, 7, [5, 2]).unwrap();
        assert_ne!(edge_dim_case_uncorrected(5, 7, [5, 2]).unwrap(), direct);
    }
}
