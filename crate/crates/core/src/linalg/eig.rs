use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, MatrixKind};

const MAX_SWEEPS: usize = 100;
const HERMITICITY_TOL: f64 = 1e-12;
const OFF_DIAG_TOL: f64 = 1e-14;

/// Spectral factorization A = V diag(λ) V* of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues in non-increasing order; ties keep input-index order.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose columns pair with `eigenvalues`.
    pub eigenvectors: Matrix,
}

impl EigenDecomposition {
    /// V diag(λ) V*, for residual checks.
    pub fn reconstruct(&self) -> Matrix {
        let d = Matrix::diag(
            &self
                .eigenvalues
                .iter()
                .map(|&l| Complex64::new(l, 0.0))
                .collect::<Vec<_>>(),
        );
        let v = &self.eigenvectors;
        v.mul(&d).mul(&v.conj_transpose())
    }

    fn sorted_descending(eigenvalues: Vec<f64>, v: Matrix) -> EigenDecomposition {
        let n = eigenvalues.len();
        let mut order: Vec<usize> = (0..n).collect();
        // stable sort keeps input-index order on exact ties
        order.sort_by(|&a, &b| eigenvalues[b].partial_cmp(&eigenvalues[a]).unwrap());
        let mut sorted_vals = vec![0.0; n];
        let mut sorted_vecs = Matrix::zeros(n, n, MatrixKind::Complex);
        for (new_col, &old_col) in order.iter().enumerate() {
            sorted_vals[new_col] = eigenvalues[old_col];
            for r in 0..n {
                sorted_vecs[(r, new_col)] = v[(r, old_col)];
            }
        }
        EigenDecomposition {
            eigenvalues: sorted_vals,
            eigenvectors: sorted_vecs,
        }
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input is symmetrized as (A + A*)/2 first, which absorbs rounding from
/// the samplers; inputs farther than 1e-12·‖A‖ from Hermitian are rejected.
pub fn hermitian_eig(a: &Matrix) -> Result<EigenDecomposition> {
    let n = a.require_square("hermitian_eig")?;
    let norm_a = a.frobenius_norm();
    let defect = a.frobenius_distance(&a.conj_transpose());
    if defect > HERMITICITY_TOL * norm_a.max(1e-300) && defect > 1e-300 {
        return Err(Error::domain(format!(
            "hermitian_eig requires a Hermitian matrix; ‖A - A*‖ = {defect:.3e} vs ‖A‖ = {norm_a:.3e}"
        )));
    }

    // m <- (A + A*)/2
    let mut m = a
        .sub(&a.conj_transpose().scale(Complex64::new(-1.0, 0.0)))
        .scale(Complex64::new(0.5, 0.0));
    let mut v = Matrix::identity(n);
    v.set_kind(MatrixKind::Complex);

    let threshold = OFF_DIAG_TOL * norm_a.max(1e-300);
    for _sweep in 0..=MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            let eigenvalues: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
            return Ok(EigenDecomposition::sorted_descending(eigenvalues, v));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    Err(Error::Convergence {
        partial: off_diagonal_norm(&m),
        bound: threshold,
    })
}

fn off_diagonal_norm(m: &Matrix) -> f64 {
    let n = m.rows();
    let mut off = 0.0f64;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                off += m[(p, q)].norm_sqr();
            }
        }
    }
    off.sqrt()
}

/// One complex Jacobi rotation annihilating m[p][q].
///
/// R differs from the identity only in R[p][p] = R[q][q] = c,
/// R[p][q] = s e^{iφ}, R[q][p] = -s e^{-iφ}, where φ = arg m[p][q];
/// the update is M ← R* M R, V ← V R.
fn rotate(m: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let w = m[(p, q)];
    let u = w.norm();
    if u < 1e-300 {
        return;
    }
    let phase = w / u; // e^{i φ}
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    let theta = (aqq - app) / (2.0 * u);
    let t = if theta == 0.0 {
        1.0
    } else {
        let sign = if theta > 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let se = phase * s; // s e^{iφ}

    let n = m.rows();
    // columns: M <- M R
    for r in 0..n {
        let mrp = m[(r, p)];
        let mrq = m[(r, q)];
        m[(r, p)] = mrp * c - mrq * se.conj();
        m[(r, q)] = mrp * se + mrq * c;
    }
    // rows: M <- R* M
    for col in 0..n {
        let mpc = m[(p, col)];
        let mqc = m[(q, col)];
        m[(p, col)] = mpc * c - mqc * se;
        m[(q, col)] = mpc * se.conj() + mqc * c;
    }
    // eigenvector accumulation: V <- V R
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * c - vrq * se.conj();
        v[(r, q)] = vrp * se + vrq * c;
    }

    // pin the annihilated pair and the realness of the diagonal
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::MiniRng;
    use approx::assert_abs_diff_eq;

    #[test]
    fn diagonal_input() {
        let a = Matrix::from_rows_real(2, 2, &[3.0, 0.0, 0.0, 1.0]);
        let e = hermitian_eig(&a).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.eigenvalues[1], 1.0, epsilon = 1e-14);
        // eigenvector matrix is a permutation/identity up to phases
        assert_abs_diff_eq!(e.eigenvectors[(0, 0)].norm(), 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(e.eigenvectors[(1, 1)].norm(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn pauli_x() {
        // [[0,1],[1,0]]: eigenvalues ±1 from the characteristic polynomial λ²−1
        let a = Matrix::from_rows_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let e = hermitian_eig(&a).unwrap();
        assert_abs_diff_eq!(e.eigenvalues[0], 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(e.eigenvalues[1], -1.0, epsilon = 1e-13);
    }

    #[test]
    fn random_hermitian_residual_and_trace() {
        let mut rng = MiniRng(3);
        for n in [2usize, 3, 5, 8] {
            let a = rng.hermitian_matrix(n);
            let e = hermitian_eig(&a).unwrap();
            let resid = e.reconstruct().frobenius_distance(&a);
            assert!(
                resid <= 1e-10 * a.frobenius_norm(),
                "residual {resid} too large at n={n}"
            );
            assert!(
                e.eigenvectors.unitarity_defect() <= 1e-12 * (n as f64).sqrt(),
                "eigenvector matrix not unitary at n={n}"
            );
            let tr: f64 = a.trace().re;
            let sum: f64 = e.eigenvalues.iter().sum();
            assert_abs_diff_eq!(sum, tr, epsilon = 1e-10 * tr.abs().max(1.0));
            // sorted non-increasing
            for w in e.eigenvalues.windows(2) {
                assert!(w[0] >= w[1]);
            }
        }
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let a = Matrix::from_rows_real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(hermitian_eig(&a).is_err());
    }

    /// Companion-free oracle: counts eigenvalues below x through the inertia
    /// of A - xI (number of negative pivots in symmetric elimination), then
    /// bisects. Independent of the Jacobi path.
    fn bisection_eigenvalues(a: &Matrix) -> Vec<f64> {
        let n = a.rows();
        let bound = a.frobenius_norm() + 1.0;
        let count_below = |x: f64| -> usize {
            let mut m = a.clone();
            for i in 0..n {
                m[(i, i)] -= Complex64::new(x, 0.0);
            }
            // LDL*-style elimination without pivoting; a zero pivot is nudged
            let mut neg = 0usize;
            for k in 0..n {
                let mut piv = m[(k, k)].re;
                if piv.abs() < 1e-300 {
                    piv = 1e-300;
                }
                if piv < 0.0 {
                    neg += 1;
                }
                for i in k + 1..n {
                    let f = m[(i, k)] / Complex64::new(piv, 0.0);
                    for j in k + 1..n {
                        let upd = f * m[(k, j)];
                        m[(i, j)] -= upd;
                    }
                }
            }
            neg
        };
        (0..n)
            .map(|j| {
                // j-th largest eigenvalue: smallest x with count_below(x) >= n - j
                let (mut lo, mut hi) = (-bound, bound);
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if count_below(mid) >= n - j {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    }

    #[test]
    fn matches_characteristic_polynomial_oracle() {
        let mut rng = MiniRng(17);
        for n in [2usize, 4, 6, 8] {
            let a = rng.hermitian_matrix(n);
            let jac = hermitian_eig(&a).unwrap().eigenvalues;
            let ora = bisection_eigenvalues(&a);
            for (x, y) in jac.iter().zip(ora.iter()) {
                assert!(
                    (x - y).abs() <= 1e-8,
                    "eigenvalue mismatch at n={n}: jacobi {x} vs bisection {y}"
                );
            }
        }
    }
}
