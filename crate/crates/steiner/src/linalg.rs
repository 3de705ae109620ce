//! Scalar linear algebra over the prime field: just enough Gaussian
//! elimination to measure ranks of coefficient matrices.

use fpcore::{PrimeField, Scalar};

/// Row rank of a dense scalar matrix.
pub(crate) fn rank(field: &PrimeField, mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("pivot is nonzero");
        for c in col..ncols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..ncols {
                    let t = field.mul(f, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_counts_independent_rows() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank(&f, vec![vec![1, 2], vec![2, 4], vec![0, 1]]), 2);
        assert_eq!(rank(&f, vec![vec![0, 0, 0]]), 0);
        assert_eq!(rank(&f, vec![vec![3, 1, 4], vec![2, 5, 1]]), 2);
        // (3,1,4) = 3·(1,5,6) mod 7.
        assert_eq!(rank(&f, vec![vec![3, 1, 4], vec![1, 5, 6]]), 1);
        // 2·(1,2,3) − (2,4,6) = 0 mod 7.
        assert_eq!(rank(&f, vec![vec![1, 2, 3], vec![2, 4, 6]]), 1);
    }
}
