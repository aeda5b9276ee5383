//! Dense Gaussian elimination over `F_p`.

use crate::field;

/// Rank of a dense matrix given as rows of canonical residues. The rows are consumed.
pub fn rank_mod_p(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field::inv(rows[rank][col], p);
        for x in rows[rank][col..].iter_mut() {
            *x = field::mul(*x, inv, p);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let nf = (p - f) as u64;
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if y != 0 {
                    *x = ((*x as u64 + nf * y as u64) % p as u64) as u32;
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

/// Inverse of a square matrix over `F_p`, `None` when singular.
pub fn inverse_mod_p(matrix: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<u32>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| aug[r][col] != 0)?;
        aug.swap(col, pivot);
        let inv = field::inv(aug[col][col], p);
        for x in aug[col].iter_mut() {
            *x = field::mul(*x, inv, p);
        }
        for r in 0..n {
            if r == col || aug[r][col] == 0 {
                continue;
            }
            let f = aug[r][col];
            let pivot_row = aug[col].clone();
            for (x, y) in aug[r].iter_mut().zip(pivot_row) {
                *x = field::sub(*x, field::mul(f, y, p), p);
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
