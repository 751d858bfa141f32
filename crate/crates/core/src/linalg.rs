//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

/// Rank of the submatrix formed by the selected columns of a row-major matrix.
pub fn column_rank(rows: &[Vec<Rational>], columns: &[usize]) -> usize {
    if columns.is_empty() || rows.is_empty() {
        return 0;
    }
    // Work on the transpose so each selected column is a row vector.
    let mut m: Vec<Vec<Rational>> = columns
        .iter()
        .map(|&c| rows.iter().map(|row| row[c].clone()).collect())
        .collect();
    rank_in_place(&mut m)
}

pub fn rank_in_place(m: &mut [Vec<Rational>]) -> usize {
    let width = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn identity_plus_sum_column() {
        let m = mat(&[&[1, 0, 0, 1], &[0, 1, 0, 1], &[0, 0, 1, 0]]);
        assert_eq!(column_rank(&m, &[0, 1, 3]), 2);
        assert_eq!(column_rank(&m, &[0, 1, 2, 3]), 3);
        assert_eq!(column_rank(&m, &[3]), 1);
        assert_eq!(column_rank(&m, &[]), 0);
    }

    #[test]
    fn fractional_dependence_is_exact() {
        // Third column = 1/3 * first + 2/7 * second.
        let m = vec![
            vec![int(1), int(0), ratio(1, 3)],
            vec![int(0), int(1), ratio(2, 7)],
            vec![int(3), int(5), ratio(1, 1) + ratio(10, 7)],
        ];
        assert_eq!(column_rank(&m, &[0, 1, 2]), 2);
    }
}
