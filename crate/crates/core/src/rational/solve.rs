//! Exact Gaussian elimination over the rational-function field.

use super::func::RationalFunction;
use crate::error::{Error, Result};

/// Solve `matrix * x = rhs` exactly. The matrix must be square and
/// nonsingular over the rational-function field.
pub fn solve_linear_system(
    matrix: &[Vec<RationalFunction>],
    rhs: &[RationalFunction],
) -> Result<Vec<RationalFunction>> {
    let n = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == n) && rhs.len() == n,
        "system must be square"
    );
    let mut a: Vec<Vec<RationalFunction>> = matrix.to_vec();
    let mut b: Vec<RationalFunction> = rhs.to_vec();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].reciprocal().expect("pivot nonzero");
        for cell in &mut a[col][col..] {
            *cell = &*cell * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot_row = a[col][col..].to_vec();
            for (cell, pivot) in a[r][col..].iter_mut().zip(&pivot_row) {
                *cell = &*cell - &(&factor * pivot);
            }
            b[r] = &b[r] - &(&factor * &b[col]);
        }
    }

    // Substituting back must reproduce the right-hand side identically.
    debug_assert!({
        (0..n).all(|r| {
            let mut acc = RationalFunction::zero();
            for c in 0..n {
                acc = &acc + &(&matrix[r][c] * &b[c]);
            }
            acc == rhs[r]
        })
    });
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::super::poly::Poly;
    use super::*;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_integers(num), Poly::from_integers(den))
    }

    #[test]
    fn identity_system() {
        let m = vec![
            vec![rf(&[1], &[1]), rf(&[0], &[1])],
            vec![rf(&[0], &[1]), rf(&[1], &[1])],
        ];
        let rhs = vec![rf(&[1, 2], &[1]), rf(&[0, 0, 3], &[1, 1])];
        assert_eq!(solve_linear_system(&m, &rhs).unwrap(), rhs);
    }

    #[test]
    fn one_by_one() {
        let m = vec![vec![rf(&[1, -2], &[1])]];
        let rhs = vec![rf(&[0, 0, 1], &[1])];
        let x = solve_linear_system(&m, &rhs).unwrap();
        assert_eq!(x[0], rf(&[0, 0, 1], &[1, -2]));
    }

    #[test]
    fn singular_rejected() {
        let m = vec![
            vec![rf(&[1], &[1]), rf(&[1], &[1])],
            vec![rf(&[2], &[1]), rf(&[2], &[1])],
        ];
        let rhs = vec![rf(&[1], &[1]), rf(&[2], &[1])];
        assert_eq!(
            solve_linear_system(&m, &rhs).unwrap_err(),
            Error::SingularSystem
        );
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let m = vec![
            vec![rf(&[0], &[1]), rf(&[1], &[1])],
            vec![rf(&[1], &[1]), rf(&[0], &[1])],
        ];
        let rhs = vec![rf(&[5], &[1]), rf(&[7], &[1])];
        let x = solve_linear_system(&m, &rhs).unwrap();
        assert_eq!(x, vec![rf(&[7], &[1]), rf(&[5], &[1])]);
    }
}
