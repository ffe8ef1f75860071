use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::Matrix;

/// Determinant via LU with partial pivoting.
pub fn determinant(a: &Matrix) -> Result<Complex64> {
    let n = a.require_square("determinant")?;
    let mut m = a.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        // pivot on the largest magnitude in column k
        let mut piv = k;
        let mut best = m[(k, k)].norm();
        for i in k + 1..n {
            let v = m[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if piv != k {
            for c in 0..n {
                let tmp = m[(k, c)];
                m[(k, c)] = m[(piv, c)];
                m[(piv, c)] = tmp;
            }
            det = -det;
        }
        let pivot = m[(k, k)];
        det *= pivot;
        for i in k + 1..n {
            let factor = m[(i, k)] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in k + 1..n {
                let upd = factor * m[(k, c)];
                m[(i, c)] -= upd;
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::MiniRng;
    use crate::linalg::{Matrix, MatrixKind};
    use approx::assert_abs_diff_eq;

    #[test]
    fn small_cases() {
        assert_abs_diff_eq!(determinant(&Matrix::identity(3)).unwrap().re, 1.0, epsilon = 1e-14);
        let a = Matrix::from_rows_real(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        assert_abs_diff_eq!(determinant(&a).unwrap().re, -2.0, epsilon = 1e-13);
    }

    #[test]
    fn vandermonde() {
        // nodes (0, 1, 2): det = (1-0)(2-0)(2-1) = 2
        let nodes = [0.0f64, 1.0, 2.0];
        let a = Matrix::from_fn(3, 3, MatrixKind::Real, |r, c| {
            Complex64::new(nodes[r].powi(c as i32), 0.0)
        });
        assert_abs_diff_eq!(determinant(&a).unwrap().re, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn multiplicativity() {
        let mut rng = MiniRng(11);
        for n in 2..=6usize {
            let a = rng.complex_matrix(n);
            let b = rng.complex_matrix(n);
            let lhs = determinant(&a.mul(&b)).unwrap();
            let rhs = determinant(&a).unwrap() * determinant(&b).unwrap();
            assert!(
                (lhs - rhs).norm() <= 1e-10 * rhs.norm().max(1e-30),
                "det(AB) != det(A)det(B) at n={n}"
            );
        }
    }

    #[test]
    fn triangular_input_is_diagonal_product() {
        let a = Matrix::from_rows_real(3, 3, &[2.0, 5.0, 1.0, 0.0, -3.0, 4.0, 0.0, 0.0, 7.0]);
        assert_abs_diff_eq!(determinant(&a).unwrap().re, -42.0, epsilon = 1e-12);
    }

    #[test]
    fn singular_matrix() {
        let a = Matrix::from_rows_real(2, 2, &[1.0, 2.0, 2.0, 4.0]);
        assert_abs_diff_eq!(determinant(&a).unwrap().norm(), 0.0, epsilon = 1e-14);
    }
}
