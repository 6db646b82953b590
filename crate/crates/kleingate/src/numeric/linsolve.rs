//! Dense complex linear solve by LU with partial pivoting.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Solves `A x = b` in place for a small dense complex system.
///
/// `a` is row-major, `n x n`; `b` has length `n`. Partial (row) pivoting on
/// the largest remaining |pivot|. A numerically singular matrix is reported
/// with a pivot-ratio condition estimate max|pivot|/min|pivot|.
pub fn solve_dense(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n, "shape mismatch");

    let mut max_pivot = 0.0_f64;
    let mut min_pivot = f64::INFINITY;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .expect("nonempty column");
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);

        let pivot = a[col][col];
        let pivot_mag = pivot.norm();
        max_pivot = max_pivot.max(pivot_mag);
        min_pivot = min_pivot.min(pivot_mag);
        if pivot_mag < f64::EPSILON * max_pivot.max(1.0) {
            let cond_estimate = if pivot_mag > 0.0 { max_pivot / pivot_mag } else { f64::INFINITY };
            return Err(Error::SingularSystem { cond_estimate });
        }

        for row in col + 1..n {
            let factor = a[row][col] / pivot;
            if factor == Complex64::ZERO {
                continue;
            }
            for k in col..n {
                let upper = a[col][k];
                a[row][k] -= factor * upper;
            }
            let rhs = b[col];
            b[row] -= factor * rhs;
        }
    }
    let _ = min_pivot;

    // back substitution
    let mut x = vec![Complex64::ZERO; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn solves_known_complex_system() {
        // [ 1+i  2 ] [x]   [ 3+i ]
        // [ 0    i ] [y] = [ 2i  ]
        let a = vec![vec![c(1.0, 1.0), c(2.0, 0.0)], vec![c(0.0, 0.0), c(0.0, 1.0)]];
        let b = vec![c(3.0, 1.0), c(0.0, 2.0)];
        let x = solve_dense(a, b).unwrap();
        // y = 2i/i = 2, x = (3+i-4)/(1+i) = (-1+i)/(1+i) = i
        assert!((x[1] - c(2.0, 0.0)).norm() < 1e-14);
        assert!((x[0] - c(0.0, 1.0)).norm() < 1e-14);
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let a = vec![vec![c(0.0, 0.0), c(1.0, 0.0)], vec![c(1.0, 0.0), c(0.0, 0.0)]];
        let b = vec![c(5.0, 0.0), c(7.0, 0.0)];
        let x = solve_dense(a, b).unwrap();
        assert!((x[0] - c(7.0, 0.0)).norm() < 1e-15);
        assert!((x[1] - c(5.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn singular_matrix_reports_condition_estimate() {
        let a = vec![vec![c(1.0, 0.0), c(2.0, 0.0)], vec![c(2.0, 0.0), c(4.0, 0.0)]];
        let b = vec![c(1.0, 0.0), c(2.0, 0.0)];
        match solve_dense(a, b) {
            Err(Error::SingularSystem { cond_estimate }) => assert!(cond_estimate > 1e10),
            other => panic!("expected singular-system error, got {other:?}"),
        }
    }

    #[test]
    fn random_residual_is_small() {
        // deterministic pseudo-random fill, residual check on an 8x8 solve
        let n = 8;
        let mut state = 0x12345678_u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        let a: Vec<Vec<Complex64>> =
            (0..n).map(|_| (0..n).map(|_| c(next(), next())).collect()).collect();
        let b: Vec<Complex64> = (0..n).map(|_| c(next(), next())).collect();
        let x = solve_dense(a.clone(), b.clone()).unwrap();
        for i in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..n {
                acc += a[i][j] * x[j];
            }
            assert!((acc - b[i]).norm() < 1e-12, "row {i} residual too large");
        }
    }
}
