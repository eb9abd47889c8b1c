//! Exact kernel vectors of rational matrices.
//!
//! Gauss-Jordan elimination with rational pivoting; the kernel vector is made
//! deterministic by setting the last free variable to one and clearing
//! denominators into a primitive integer vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form in place; returns the pivot column of each row.
fn rref(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                    let sub = &factor * pv;
                    row[c] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// A nonzero kernel vector of the matrix (more columns than the rank is
/// required, which holds for any underdetermined system). Convention: the
/// last free column is set to 1, all other free columns to 0, and the result
/// is scaled to a primitive integer vector whose free slot stays positive.
pub fn kernel_vector(matrix: &[Vec<BigRational>]) -> Option<Vec<BigInt>> {
    let ncols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut rows: Vec<Vec<BigRational>> = matrix.to_vec();
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let &last_free = free.last()?;
    let mut solution = vec![BigRational::zero(); ncols];
    solution[last_free] = BigRational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        solution[pc] = -rows[row][last_free].clone();
    }
    // clear denominators, then divide by the content
    let mut lcm = BigInt::one();
    for v in &solution {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = solution.iter().map(|v| (v * &lcm).to_integer()).collect();
    let mut content = BigInt::zero();
    for v in &ints {
        content = content.gcd(v);
    }
    if !content.is_zero() && !content.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
    }
    debug_assert!(ints[last_free].is_positive());
    Some(ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn check_in_kernel(matrix: &[Vec<BigRational>], v: &[BigInt]) {
        for row in matrix {
            let mut acc = BigRational::zero();
            for (a, b) in row.iter().zip(v) {
                acc += a * BigRational::from_integer(b.clone());
            }
            assert!(acc.is_zero(), "kernel vector fails a row");
        }
    }

    #[test]
    fn one_by_two() {
        let m = vec![vec![rat(1), rat(1)]];
        let v = kernel_vector(&m).unwrap();
        assert_eq!(v, vec![BigInt::from(-1), BigInt::from(1)]);
        let m2 = vec![vec![rat(1), rat(2)]];
        assert_eq!(
            kernel_vector(&m2).unwrap(),
            vec![BigInt::from(-2), BigInt::from(1)]
        );
    }

    #[test]
    fn geometric_two_by_three() {
        let m = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(0), rat(1), rat(1)],
        ];
        let v = kernel_vector(&m).unwrap();
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        check_in_kernel(&m, &v);
    }

    #[test]
    fn rank_deficient_rows() {
        // duplicated row: rank 1, kernel dimension 2; the convention picks
        // the last free column
        let m = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
        ];
        let v = kernel_vector(&m).unwrap();
        check_in_kernel(&m, &v);
        assert_eq!(v[2], BigInt::from(1));
    }

    #[test]
    fn determinism() {
        let m = vec![
            vec![rat(3), rat(1), rat(4), rat(1)],
            vec![rat(5), rat(9), rat(2), rat(6)],
            vec![rat(5), rat(3), rat(5), rat(8)],
        ];
        let a = kernel_vector(&m).unwrap();
        let b = kernel_vector(&m).unwrap();
        assert_eq!(a, b);
        check_in_kernel(&m, &a);
    }
}
