//! Dense Gaussian elimination over a finite field.

use super::field::{Field, Fq};
use crate::{Error, Result};

/// Solves `a * x = b` for square nonsingular `a` (row-major).
pub fn solve(field: &Field, mut a: Vec<Vec<Fq>>, mut b: Vec<Fq>) -> Result<Vec<Fq>> {
    let n = b.len();
    assert!(
        a.len() == n && a.iter().all(|r| r.len() == n),
        "system must be square"
    );
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = field.inv(a[col][col]).expect("nonzero pivot");
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = field.mul(a[r][col], inv);
            for c in col..n {
                let v = field.mul(factor, a[col][c]);
                a[r][c] = field.sub(a[r][c], v);
            }
            b[r] = field.sub(b[r], field.mul(factor, b[col]));
        }
    }
    Ok((0..n).map(|i| field.div(b[i], a[i][i])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_detects_singular() {
        let f = Field::prime(7).unwrap();
        let a = vec![vec![f.int(2), f.int(1)], vec![f.int(1), f.int(3)]];
        let x = solve(&f, a.clone(), vec![f.int(4), f.int(5)]).unwrap();
        assert_eq!(f.add(f.mul(a[0][0], x[0]), f.mul(a[0][1], x[1])), f.int(4));
        assert_eq!(f.add(f.mul(a[1][0], x[0]), f.mul(a[1][1], x[1])), f.int(5));
        let s = vec![vec![f.int(1), f.int(2)], vec![f.int(2), f.int(4)]];
        assert_eq!(
            solve(&f, s, vec![Fq::ONE, Fq::ONE]).unwrap_err(),
            Error::Singular
        );
    }
}
