//! Exact Gaussian elimination over the rationals.
//!
//! Shared by the homology ranks in [`crate::simplex`] and the degreewise
//! Gaussian oracle in [`crate::gin`]. Rows are eliminated left to right, so
//! with columns pre-sorted by a term order the pivot columns are exactly the
//! greedy initial monomials.

use num_rational::BigRational;
use num_traits::Zero;

/// Reduces `mat` in place to row echelon form and returns the pivot column
/// indices in increasing order.
pub(crate) fn row_reduce(mat: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, pivot_row);
        let inv = mat[row][col].recip();
        for c in col..cols {
            let v = std::mem::take(&mut mat[row][c]);
            mat[row][c] = v * &inv;
        }
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &mat[row][c];
                    mat[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank(mat: &mut [Vec<BigRational>]) -> usize {
    row_reduce(mat).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_of_singular_matrix() {
        let mut m = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(&mut m), 2);
    }

    #[test]
    fn pivots_are_leftmost() {
        let mut m = vec![vec![q(0), q(1), q(1)], vec![q(0), q(2), q(3)]];
        assert_eq!(row_reduce(&mut m), vec![1, 2]);
        assert!(m[0][1].is_one());
    }
}
