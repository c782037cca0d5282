//! Linear algebra over ℤ/p for prime p < 2^63.

use super::arith::{inv_mod, mul_mod};

/// Row-reduces in place; returns pivot columns.
fn reduce(rows: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c] % p, p).expect("p prime");
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x % p, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r {
                continue;
            }
            let factor = row[c] % p;
            if factor == 0 {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x % p + p - mul_mod(factor, *y, p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = rows.to_vec();
    reduce(&mut m, cols, p).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows of length `cols`.
pub fn nullspace_mod_p(rows: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = reduce(&mut m, cols, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u64; cols];
            x[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - m[r][f] % p) % p;
            }
            x
        })
        .collect()
}

/// Basis of `{a : Σ a_i rows_i = 0}`.
pub fn left_kernel_mod_p(rows: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let m = rows.len();
    let k = rows.first().map_or(0, Vec::len);
    let transposed: Vec<Vec<u64>> = (0..k).map(|j| (0..m).map(|i| rows[i][j] % p).collect()).collect();
    nullspace_mod_p(&transposed, m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_and_rank() {
        let rows = vec![vec![1, 0], vec![1, 0]];
        assert_eq!(left_kernel_mod_p(&rows, 2), vec![vec![1, 1]]);
        assert_eq!(rank_mod_p(&rows, 2), 1);
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ker = nullspace_mod_p(&a, 3, 7);
        assert_eq!(ker.len(), 2);
        for x in ker {
            for r in &a {
                let s: u64 = r.iter().zip(&x).map(|(u, v)| u * v).sum();
                assert_eq!(s % 7, 0);
            }
        }
    }
}
