//! First-principles random generation: Ginibre matrices, Haar-distributed
//! orthogonal and unitary matrices via phase-corrected QR, Hilbert-Schmidt
//! random density matrices, and eigenangle extraction for unitaries.

mod rng;

pub use rng::RngStream;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, qr_decompose, Matrix, MatrixKind};

/// Entry distribution for [`ginibre`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GinibreKind {
    /// Entries N(0,1).
    Real,
    /// Real and imaginary parts each N(0,1), so E|entry|² = 2.
    Complex,
}

/// n×n matrix of i.i.d. Gaussian entries.
pub fn ginibre(n: usize, kind: GinibreKind, rng: &mut RngStream) -> Matrix {
    assert!(n >= 1, "ginibre requires n >= 1");
    match kind {
        GinibreKind::Real => Matrix::from_fn(n, n, MatrixKind::Real, |_, _| {
            Complex64::new(rng.standard_normal(), 0.0)
        }),
        GinibreKind::Complex => Matrix::from_fn(n, n, MatrixKind::Complex, |_, _| {
            let re = rng.standard_normal();
            let im = rng.standard_normal();
            Complex64::new(re, im)
        }),
    }
}

/// Haar-distributed unitary matrix.
///
/// QR of a complex Ginibre draw, then U = Q·diag(R_jj/|R_jj|). The diagonal
/// correction makes R's diagonal positive, i.e. picks the canonical
/// representative of the coset A·T with T upper-triangular and positive
/// diagonal — exactly the factor whose distribution is Haar.
pub fn haar_unitary(n: usize, rng: &mut RngStream) -> Result<Matrix> {
    haar_unitary_impl(n, rng, true)
}

/// The uncorrected Q of the QR factorization, which is NOT Haar-distributed.
///
/// Kept as the negative control: the det-phase uniformity test must fail on
/// this variant for n >= 2, guarding against the classic naive-QR bias.
pub fn haar_unitary_without_phase_fix(n: usize, rng: &mut RngStream) -> Result<Matrix> {
    haar_unitary_impl(n, rng, false)
}

fn haar_unitary_impl(n: usize, rng: &mut RngStream, phase_fix: bool) -> Result<Matrix> {
    assert!(n >= 1, "haar_unitary requires n >= 1");
    for _attempt in 0..2 {
        let g = ginibre(n, GinibreKind::Complex, rng);
        let (q, r) = qr_decompose(&g)?;
        if (0..n).any(|j| r[(j, j)].norm() == 0.0) {
            continue; // singular draw; probability zero, resample once
        }
        if !phase_fix {
            return Ok(q);
        }
        let phases: Vec<Complex64> = (0..n).map(|j| r[(j, j)] / r[(j, j)].norm()).collect();
        let mut u = q;
        for c in 0..n {
            for row in 0..n {
                u[(row, c)] *= phases[c];
            }
        }
        return Ok(u);
    }
    Err(Error::domain(
        "haar_unitary drew a singular Ginibre matrix twice in a row",
    ))
}

/// Haar-distributed real orthogonal matrix: QR of a real Ginibre draw with
/// the sign correction U = Q·diag(sign(R_jj)).
pub fn haar_orthogonal(n: usize, rng: &mut RngStream) -> Result<Matrix> {
    assert!(n >= 1, "haar_orthogonal requires n >= 1");
    for _attempt in 0..2 {
        let g = ginibre(n, GinibreKind::Real, rng);
        let (q, r) = qr_decompose(&g)?;
        if (0..n).any(|j| r[(j, j)].re == 0.0) {
            continue;
        }
        let mut u = q;
        for c in 0..n {
            if r[(c, c)].re < 0.0 {
                for row in 0..n {
                    u[(row, c)] = -u[(row, c)];
                }
            }
        }
        u.set_kind(MatrixKind::Real);
        return Ok(u);
    }
    Err(Error::domain(
        "haar_orthogonal drew a singular Ginibre matrix twice in a row",
    ))
}

/// A trace-one positive semidefinite Hermitian matrix.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: Matrix,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Eigenvalues in non-increasing order.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eig(&self.matrix)?.eigenvalues)
    }

    /// Checks the defining invariants; used by tests.
    pub fn validate(&self) -> Result<()> {
        let m = &self.matrix;
        let defect = m.frobenius_distance(&m.conj_transpose());
        if defect > 1e-12 * m.frobenius_norm().max(1.0) {
            return Err(Error::domain(format!("density matrix not Hermitian: {defect:.3e}")));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > 1e-12 || tr.im.abs() > 1e-12 {
            return Err(Error::domain(format!("density matrix trace {tr} != 1")));
        }
        let min_eig = self.eigenvalues()?.last().copied().unwrap_or(0.0);
        if min_eig < -1e-12 {
            return Err(Error::domain(format!("density matrix has eigenvalue {min_eig}")));
        }
        Ok(())
    }
}

/// Hilbert-Schmidt random density matrix: ρ = GG*/tr(GG*) for a square
/// complex Ginibre G. The induced eigenvalue law is the fixed-trace density
/// ∝ δ(1−Σλ)·∏_{i<j}(λ_i−λ_j)², independent of the Ginibre scale.
pub fn random_density_hs(n: usize, rng: &mut RngStream) -> DensityMatrix {
    assert!(n >= 1, "random_density_hs requires n >= 1");
    let g = ginibre(n, GinibreKind::Complex, rng);
    let x = g.mul(&g.conj_transpose());
    let tr = x.trace().re;
    let mut rho = x.scale(Complex64::new(1.0 / tr, 0.0));
    // pin exact Hermiticity against rounding in the product
    for r in 0..n {
        for c in r..n {
            let avg = 0.5 * (rho[(r, c)] + rho[(c, r)].conj());
            rho[(r, c)] = avg;
            rho[(c, r)] = avg.conj();
        }
        rho[(r, r)] = Complex64::new(rho[(r, r)].re, 0.0);
    }
    DensityMatrix { matrix: rho }
}

/// Eigenangles θ_j ∈ [−π, π] of a unitary matrix, sorted ascending.
///
/// Computed from one Hermitian eigendecomposition of H = (U+U*)/2; the sine
/// of each angle is recovered from the quadratic form of K = (U−U*)/(2i) on
/// the eigenvector. H and K commute (U is normal), so inside any degenerate
/// eigenspace of H the restriction of K is rediagonalized to split the ±θ
/// pairs that share a cosine.
pub fn unitary_eigenangles(u: &Matrix) -> Result<Vec<f64>> {
    let n = u.require_square("unitary_eigenangles")?;
    let defect = u.unitarity_defect();
    if defect > 1e-8 * (n as f64).sqrt() {
        return Err(Error::domain(format!(
            "unitary_eigenangles requires a unitary input, defect {defect:.3e}"
        )));
    }
    let ut = u.conj_transpose();
    // H = (U + U*)/2, K = (U − U*)/(2i)
    let h = u.sub(&ut.scale(Complex64::new(-1.0, 0.0))).scale(Complex64::new(0.5, 0.0));
    let k = u.sub(&ut).scale(Complex64::new(0.0, -0.5));

    let eig = hermitian_eig(&h)?;
    let mut vectors = eig.eigenvectors;
    let cosines = eig.eigenvalues;

    // split (near-)degenerate cosine groups with K
    let group_tol = 1e-7;
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && (cosines[end] - cosines[start]).abs() <= group_tol {
            end += 1;
        }
        if end - start > 1 {
            rediagonalize_group(&mut vectors, &k, start, end)?;
        }
        start = end;
    }

    let mut angles: Vec<f64> = (0..n)
        .map(|j| {
            let col: Vec<Complex64> = (0..n).map(|r| vectors[(r, j)]).collect();
            let c = quadratic_form(&h, &col);
            let s = quadratic_form(&k, &col);
            s.atan2(c)
        })
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(angles)
}

/// v* M v for a Hermitian M (real by construction).
fn quadratic_form(m: &Matrix, v: &[Complex64]) -> f64 {
    let n = v.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..n {
        let mut mv = Complex64::new(0.0, 0.0);
        for c in 0..n {
            mv += m[(r, c)] * v[c];
        }
        acc += v[r].conj() * mv;
    }
    acc.re
}

/// Replace columns [start, end) of `vectors` by the eigenbasis of K
/// restricted to their span.
fn rediagonalize_group(vectors: &mut Matrix, k: &Matrix, start: usize, end: usize) -> Result<()> {
    let n = vectors.rows();
    let m = end - start;
    // B = V_g* K V_g (m×m Hermitian)
    let mut b = Matrix::zeros(m, m, MatrixKind::Complex);
    for i in 0..m {
        for j in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..n {
                let mut kv = Complex64::new(0.0, 0.0);
                for c in 0..n {
                    kv += k[(r, c)] * vectors[(c, start + j)];
                }
                acc += vectors[(r, start + i)].conj() * kv;
            }
            b[(i, j)] = acc;
        }
    }
    // symmetrize rounding before the eigensolve
    let bh = b
        .sub(&b.conj_transpose().scale(Complex64::new(-1.0, 0.0)))
        .scale(Complex64::new(0.5, 0.0));
    let w = hermitian_eig(&bh)?.eigenvectors;
    // V_g <- V_g W
    let mut rotated = vec![Complex64::new(0.0, 0.0); n * m];
    for r in 0..n {
        for j in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..m {
                acc += vectors[(r, start + i)] * w[(i, j)];
            }
            rotated[r * m + j] = acc;
        }
    }
    for r in 0..n {
        for j in 0..m {
            vectors[(r, start + j)] = rotated[r * m + j];
        }
    }
    Ok(())
}
