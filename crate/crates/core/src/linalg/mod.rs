//! Self-contained dense linear algebra over complex machine floats: QR,
//! Hermitian eigendecomposition, determinants, Frobenius norms. Sized for the
//! n <= 64 matrices the samplers and the Bessel-determinant evaluator use.

mod eig;
mod lu;
mod qr;

pub use eig::{hermitian_eig, EigenDecomposition};
pub use lu::determinant;
pub use qr::qr_decompose;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Whether a matrix is known to have exactly zero imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Real,
    Complex,
}

/// Dense row-major matrix of complex machine floats.
///
/// A `Real`-tagged matrix carries imaginary parts that are exactly zero; the
/// tag is preserved by the arithmetic here whenever that is guaranteed.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    kind: MatrixKind,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, kind: MatrixKind) -> Matrix {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        Matrix {
            rows,
            cols,
            kind,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n, MatrixKind::Real);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        kind: MatrixKind,
        mut f: impl FnMut(usize, usize) -> Complex64,
    ) -> Matrix {
        let mut m = Matrix::zeros(rows, cols, kind);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        if kind == MatrixKind::Real {
            debug_assert!(m.data.iter().all(|z| z.im == 0.0), "real matrix with imaginary parts");
        }
        m
    }

    pub fn from_rows_complex(rows: usize, cols: usize, entries: &[Complex64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        let kind = if entries.iter().all(|z| z.im == 0.0) {
            MatrixKind::Real
        } else {
            MatrixKind::Complex
        };
        Matrix {
            rows,
            cols,
            kind,
            data: entries.to_vec(),
        }
    }

    pub fn from_rows_real(rows: usize, cols: usize, entries: &[f64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            rows,
            cols,
            kind: MatrixKind::Real,
            data: entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn diag(values: &[Complex64]) -> Matrix {
        let n = values.len();
        let mut m = Matrix::zeros(n, n, MatrixKind::Complex);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m.kind = if values.iter().all(|z| z.im == 0.0) {
            MatrixKind::Real
        } else {
            MatrixKind::Complex
        };
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub(crate) fn set_kind(&mut self, kind: MatrixKind) {
        self.kind = kind;
    }

    pub fn require_square(&self, what: &str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension {
                expected: format!("square matrix for {what}"),
                got: format!("{}x{}", self.rows, self.cols),
            })
        }
    }

    pub fn conj_transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.kind, |r, c| self[(c, r)].conj())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let kind = if self.kind == MatrixKind::Real && rhs.kind == MatrixKind::Real {
            MatrixKind::Real
        } else {
            MatrixKind::Complex
        };
        let mut out = Matrix::zeros(self.rows, rhs.cols, kind);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let kind = if self.kind == MatrixKind::Real && rhs.kind == MatrixKind::Real {
            MatrixKind::Real
        } else {
            MatrixKind::Complex
        };
        Matrix::from_fn(self.rows, self.cols, kind, |r, c| self[(r, c)] - rhs[(r, c)])
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        let kind = if self.kind == MatrixKind::Real && s.im == 0.0 {
            MatrixKind::Real
        } else {
            MatrixKind::Complex
        };
        Matrix::from_fn(self.rows, self.cols, kind, |r, c| self[(r, c)] * s)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// ‖A − B‖_F without materializing the difference.
    pub fn frobenius_distance(&self, rhs: &Matrix) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Deviation from unitarity, ‖U*U − 1‖_F.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.rows.min(self.cols);
        let gram = self.conj_transpose().mul(self);
        gram.frobenius_distance(&Matrix::identity(n))
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// √(Σ |U_ij − δ_ij|²), the Frobenius distance to the identity.
pub fn frobenius_distance_to_identity(u: &Matrix) -> f64 {
    let n = u.rows().min(u.cols());
    let mut acc = 0.0;
    for r in 0..u.rows() {
        for c in 0..u.cols() {
            let d = if r == c && r < n {
                u[(r, c)] - Complex64::new(1.0, 0.0)
            } else {
                u[(r, c)]
            };
            acc += d.norm_sqr();
        }
    }
    acc.sqrt()
}

#[cfg(test)]
pub(crate) mod test_support {
    use num_complex::Complex64;

    use super::{Matrix, MatrixKind};

    /// Tiny deterministic generator for test matrices; keeps this module's
    /// tests independent of the sampling module.
    pub struct MiniRng(pub u64);

    impl MiniRng {
        pub fn next_u64(&mut self) -> u64 {
            // splitmix64
            self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.0;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }

        pub fn uniform(&mut self) -> f64 {
            (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
        }

        pub fn centered(&mut self) -> f64 {
            2.0 * self.uniform() - 1.0
        }

        pub fn complex_matrix(&mut self, n: usize) -> Matrix {
            Matrix::from_fn(n, n, MatrixKind::Complex, |_, _| {
                Complex64::new(self.centered(), self.centered())
            })
        }

        pub fn hermitian_matrix(&mut self, n: usize) -> Matrix {
            let a = self.complex_matrix(n);
            let at = a.conj_transpose();
            a.sub(&at.scale(Complex64::new(-1.0, 0.0))).scale(Complex64::new(0.5, 0.0))
        }
    }
}
