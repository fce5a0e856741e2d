//! Exact Gaussian elimination.

use crate::error::SeriesError;
use crate::scalar::Scalar;

/// Solves `a x = b` for a system with at least as many equations as unknowns.
/// Every equation must hold exactly, and the solution must be unique.
pub fn solve<S: Scalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Result<Vec<S>, SeriesError> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(cols);
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return Err(SeriesError::Underdetermined);
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].try_inv().ok_or(SeriesError::NotInvertible)?;
        for c in col..cols {
            a[pivot_row][c] = a[pivot_row][c].times(&inv);
        }
        b[pivot_row] = b[pivot_row].times(&inv);
        for r in 0..rows {
            if r == pivot_row || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..cols {
                let t = a[pivot_row][c].times(&factor);
                a[r][c] = a[r][c].minus(&t);
            }
            let t = b[pivot_row].times(&factor);
            b[r] = b[r].minus(&t);
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|x| !x.is_zero()) {
        return Err(SeriesError::Inconsistent);
    }
    Ok(pivots.into_iter().map(|r| b[r].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rational};

    fn q(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn square_system() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
        let x = solve(a, vec![q(3), q(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)]];
        assert_eq!(solve(a.clone(), vec![q(1), q(2), q(3)]).unwrap(), vec![q(1), q(2)]);
        assert_eq!(solve(a, vec![q(1), q(2), q(4)]), Err(SeriesError::Inconsistent));
    }

    #[test]
    fn singular() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(solve(a, vec![q(1), q(2)]), Err(SeriesError::Underdetermined));
    }
}
