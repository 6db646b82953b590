//! Eigenvalues of small complex Hermitian matrices by cyclic Jacobi sweeps.

use num_complex::Complex64;

/// Eigenvalues of a Hermitian `n x n` matrix, ascending.
///
/// Classical two-sided Jacobi with complex Givens rotations; the input is
/// symmetrized defensively on the strict assumption it is Hermitian up to
/// round-off. Intended for tiny `n` (density-matrix checks), not large systems.
pub fn hermitian_eigenvalues(matrix: &[Vec<Complex64>]) -> Vec<f64> {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| (0..n).map(|j| 0.5 * (matrix[i][j] + matrix[j][i].conj())).collect())
        .collect();

    for _sweep in 0..60 {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.norm() < 1e-300 {
                    continue;
                }
                // diagonalize the 2x2 Hermitian block [[app, apq],[apq*, aqq]]
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let phase = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // unitary column rotation: col_p' = c*col_p - s*conj(phase)*col_q, etc.
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * phase.conj() * aiq;
                    a[i][q] = s * phase * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * phase * aqj;
                    a[q][j] = s * phase.conj() * apj + c * aqj;
                }
            }
        }
    }

    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i].re).collect();
    eigs.sort_by(f64::total_cmp);
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_returns_sorted_diagonal() {
        let m = vec![
            vec![c(3.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
        ];
        assert_eq!(hermitian_eigenvalues(&m), vec![-1.0, 3.0]);
    }

    #[test]
    fn pauli_y_has_unit_eigenvalues() {
        let m = vec![
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ];
        let e = hermitian_eigenvalues(&m);
        assert_relative_eq!(e[0], -1.0, epsilon = 1e-12);
        assert_relative_eq!(e[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rank_one_projector_eigenvalues() {
        // |v><v| with v = (1, i, 0, 1)/sqrt(3): eigenvalues {1, 0, 0, 0}
        let v = [c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)];
        let norm = 3.0_f64.sqrt();
        let m: Vec<Vec<Complex64>> = (0..4)
            .map(|i| (0..4).map(|j| v[i] * v[j].conj() / (norm * norm)).collect())
            .collect();
        let e = hermitian_eigenvalues(&m);
        assert_relative_eq!(e[3], 1.0, epsilon = 1e-12);
        for ev in &e[..3] {
            assert!(ev.abs() < 1e-12);
        }
    }

    #[test]
    fn trace_and_sum_of_eigenvalues_agree() {
        let m = vec![
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -0.5)],
            vec![c(1.0, -1.0), c(0.5, 0.0), c(0.3, 0.0)],
            vec![c(0.0, 0.5), c(0.3, 0.0), c(-1.0, 0.0)],
        ];
        let e = hermitian_eigenvalues(&m);
        assert_relative_eq!(e.iter().sum::<f64>(), 1.5, epsilon = 1e-12);
    }
}
