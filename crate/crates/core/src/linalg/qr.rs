use num_complex::Complex64;

use crate::error::Result;
use crate::linalg::{Matrix, MatrixKind};

/// QR factorization of a square matrix by Householder reflections.
///
/// Returns (Q, R) with A = QR, Q unitary and R upper-triangular. No phase or
/// sign normalization is applied to R's diagonal; the Haar samplers do that
/// themselves.
pub fn qr_decompose(a: &Matrix) -> Result<(Matrix, Matrix)> {
    let n = a.require_square("qr_decompose")?;
    let mut r = a.clone();
    r.set_kind(MatrixKind::Complex);

    // reflectors v_k, each of length n - k, with H = 1 - 2 v v*/(v* v)
    let mut reflectors: Vec<Vec<Complex64>> = Vec::with_capacity(n.saturating_sub(1));

    for k in 0..n.saturating_sub(1) {
        let m = n - k;
        let mut v: Vec<Complex64> = (0..m).map(|i| r[(k + i, k)]).collect();
        let normx = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if normx == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }
        let alpha = v[0];
        let phase = if alpha.norm() > 0.0 {
            alpha / alpha.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        v[0] += phase * normx;
        let vnorm_sq = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if vnorm_sq == 0.0 {
            reflectors.push(Vec::new());
            continue;
        }

        // R <- H R on the trailing block
        for c in k..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..m {
                dot += v[i].conj() * r[(k + i, c)];
            }
            let f = dot * (2.0 / vnorm_sq);
            for i in 0..m {
                let upd = v[i] * f;
                r[(k + i, c)] -= upd;
            }
        }
        reflectors.push(v);
    }

    // Q = H_0 H_1 ... H_{n-2}; build by applying reflectors to the identity
    // from the innermost outward.
    let mut q = Matrix::identity(n);
    q.set_kind(MatrixKind::Complex);
    for (k, v) in reflectors.iter().enumerate().rev() {
        if v.is_empty() {
            continue;
        }
        let m = n - k;
        let vnorm_sq = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
        for c in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for i in 0..m {
                dot += v[i].conj() * q[(k + i, c)];
            }
            let f = dot * (2.0 / vnorm_sq);
            for i in 0..m {
                let upd = v[i] * f;
                q[(k + i, c)] -= upd;
            }
        }
    }

    // scrub the numerically-zero subdiagonal of R
    for r_i in 1..n {
        for c_i in 0..r_i {
            r[(r_i, c_i)] = Complex64::new(0.0, 0.0);
        }
    }
    Ok((q, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::test_support::MiniRng;
    use approx::assert_abs_diff_eq;

    #[test]
    fn identity_input() {
        let (q, r) = qr_decompose(&Matrix::identity(2)).unwrap();
        let detq = crate::linalg::determinant(&q).unwrap();
        assert_abs_diff_eq!(detq.norm(), 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r[(0, 0)].norm(), 1.0, epsilon = 1e-13);
        assert_abs_diff_eq!(r[(1, 1)].norm(), 1.0, epsilon = 1e-13);
    }

    #[test]
    fn diagonal_input() {
        let a = Matrix::from_rows_real(2, 2, &[2.0, 0.0, 0.0, 3.0]);
        let (_, r) = qr_decompose(&a).unwrap();
        let mut mags = [r[(0, 0)].norm(), r[(1, 1)].norm()];
        mags.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert_abs_diff_eq!(mags[0], 2.0, epsilon = 1e-13);
        assert_abs_diff_eq!(mags[1], 3.0, epsilon = 1e-13);
    }

    #[test]
    fn random_complex_reconstruction() {
        let mut rng = MiniRng(7);
        for n in [2usize, 4, 8, 16] {
            let a = rng.complex_matrix(n);
            let (q, r) = qr_decompose(&a).unwrap();
            let qr = q.mul(&r);
            assert!(
                qr.frobenius_distance(&a) <= 1e-12 * a.frobenius_norm(),
                "reconstruction failed at n={n}"
            );
            assert!(
                q.unitarity_defect() <= 1e-12 * (n as f64).sqrt(),
                "Q not unitary at n={n}"
            );
            // R upper-triangular by construction
            for i in 1..n {
                for j in 0..i {
                    assert_eq!(r[(i, j)].norm(), 0.0);
                }
            }
        }
    }

    #[test]
    fn non_square_is_rejected() {
        let a = Matrix::zeros(2, 3, MatrixKind::Real);
        assert!(qr_decompose(&a).is_err());
    }
}
