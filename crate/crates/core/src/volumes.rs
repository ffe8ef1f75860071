//! Closed-form volume catalog: spheres, orthogonal and unitary groups (flat
//! and Hilbert-Schmidt normalizations), real Stiefel manifolds, the flag
//! manifold U(n)/U(1)^n, the sets of complex and real density matrices, and
//! the boundary/hyperedge hyper-areas of the complex state set.
//!
//! Every formula that the source material states twice is computed through
//! both expressions and asserted equal in the log domain at construction,
//! which catches transcription slips.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{
    log_factorial, log_gamma, multivariate_gamma_complex, multivariate_gamma_real, LogValue,
};

/// Tolerance for the internal dual-expression assertions (log domain).
const DUAL_EXPR_TOL: f64 = 1e-12;

/// Which closed form produced a [`VolumeResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    Sphere,
    Orthogonal,
    Unitary,
    UnitaryHS,
    StiefelReal,
    CosetU1n,
    FlagHS,
    DensityComplex,
    DensityComplexHS,
    DensityReal,
    BoundaryHS,
    HyperedgeHS,
}

impl FormulaId {
    /// Human-readable statement of the closed form.
    pub fn formula(&self) -> &'static str {
        match self {
            FormulaId::Sphere => "vol(S^d) = 2 pi^((d+1)/2) / Gamma((d+1)/2)",
            FormulaId::Orthogonal => "vol(O(n)) = 2^n pi^(n^2/2) / Gamma_n(n/2)",
            FormulaId::Unitary => "vol(U(n)) = 2^n pi^(n^2) / cGamma_n(n)",
            FormulaId::UnitaryHS => "vol_HS(U(n)) = (2 pi)^(n(n+1)/2) / (1! 2! ... (n-1)!)",
            FormulaId::StiefelReal => "vol(O(p,n)) = 2^p pi^(pn/2) / Gamma_p(n/2)",
            FormulaId::CosetU1n => "vol(U(n)/U(1)^n) = pi^(n(n-1)) / cGamma_n(n)",
            FormulaId::FlagHS => "vol_HS(Fl(n)) = (2 pi)^(n(n-1)/2) / (1! 2! ... (n-1)!)",
            FormulaId::DensityComplex => {
                "vol(D(C^n)) = pi^(n(n-1)/2) Gamma(1)...Gamma(n) / Gamma(n^2)"
            }
            FormulaId::DensityComplexHS => {
                "vol_HS(D(C^n)) = sqrt(n) (2 pi)^(n(n-1)/2) Gamma(1)...Gamma(n) / Gamma(n^2)"
            }
            FormulaId::DensityReal => {
                "vol(D(R^n)) = (1/(2^n n!)) (1/C^(1,1)_n) vol(O(n))"
            }
            FormulaId::BoundaryHS => {
                "vol_HS^(n-1) = sqrt(n-1) (2 pi)^(n(n-1)/2) Gamma(1)...Gamma(n+1) / (Gamma(n) Gamma(n^2-1))"
            }
            FormulaId::HyperedgeHS => {
                "vol_HS^(n-m) = (sqrt(n-m)/(n-m)!) (1/C^(1+2m,2)_(n-m)) vol_HS(Fl(n)) / vol_HS(Fl(m))"
            }
        }
    }
}

/// A volume together with the identity that produced it.
#[derive(Debug, Clone)]
pub struct VolumeResult {
    pub value: LogValue,
    pub formula_id: FormulaId,
    /// n, then p or m where applicable.
    pub parameters: Vec<i64>,
}

impl VolumeResult {
    fn new(value: LogValue, formula_id: FormulaId, parameters: Vec<i64>) -> VolumeResult {
        debug_assert_eq!(value.sign(), 1, "volumes are positive");
        VolumeResult {
            value,
            formula_id,
            parameters,
        }
    }
}

fn assert_dual(label: &str, a: f64, b: f64) {
    let diff = (a - b).abs();
    let scale = a.abs().max(b.abs()).max(1.0);
    assert!(
        diff <= DUAL_EXPR_TOL * scale,
        "dual-expression mismatch for {label}: {a} vs {b}"
    );
}

/// Volume of the unit sphere S^d embedded in R^(d+1):
/// 2 π^((d+1)/2) / Γ((d+1)/2).
pub fn sphere_volume(d: u32) -> VolumeResult {
    let half = f64::from(d + 1) / 2.0;
    let log = (2.0f64).ln() + half * PI.ln() - log_gamma(half).expect("positive argument");
    VolumeResult::new(LogValue::from_log(log, 1), FormulaId::Sphere, vec![i64::from(d)])
}

/// vol(O(n)) = 2^n π^(n²/2) / Γ_n(n/2), equal to ∏_{k=1}^n vol(S^{k-1}).
pub fn orthogonal_group_volume(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("orthogonal_group_volume requires n >= 1"));
    }
    let nf = f64::from(n);
    let via_gamma = nf * (2.0f64).ln() + nf * nf / 2.0 * PI.ln()
        - multivariate_gamma_real(n, nf / 2.0)?.ln()?;
    let mut via_spheres = 0.0f64;
    for k in 1..=n {
        via_spheres += sphere_volume(k - 1).value.ln().expect("positive");
    }
    assert_dual("vol(O(n))", via_gamma, via_spheres);
    Ok(VolumeResult::new(
        LogValue::from_log(via_gamma, 1),
        FormulaId::Orthogonal,
        vec![i64::from(n)],
    ))
}

/// vol(U(n)) = 2^n π^(n²) / Γ̃_n(n) = 2^n π^(n(n+1)/2) / (1!2!⋯(n−1)!).
pub fn unitary_group_volume(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("unitary_group_volume requires n >= 1"));
    }
    let nf = f64::from(n);
    let via_gamma =
        nf * (2.0f64).ln() + nf * nf * PI.ln() - multivariate_gamma_complex(n, nf)?.ln()?;
    let via_product =
        nf * (2.0f64).ln() + nf * (nf + 1.0) / 2.0 * PI.ln() - superfactorial_log(n - 1);
    assert_dual("vol(U(n))", via_gamma, via_product);
    Ok(VolumeResult::new(
        LogValue::from_log(via_gamma, 1),
        FormulaId::Unitary,
        vec![i64::from(n)],
    ))
}

/// vol_HS(U(n)) = 2^(n(n−1)/2) vol(U(n)) = (2π)^(n(n+1)/2) / (1!2!⋯(n−1)!).
pub fn unitary_group_volume_hs(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("unitary_group_volume_hs requires n >= 1"));
    }
    let nf = f64::from(n);
    let direct = nf * (nf + 1.0) / 2.0 * (2.0 * PI).ln() - superfactorial_log(n - 1);
    let via_flat =
        nf * (nf - 1.0) / 2.0 * (2.0f64).ln() + unitary_group_volume(n)?.value.ln()?;
    assert_dual("vol_HS(U(n))", direct, via_flat);
    Ok(VolumeResult::new(
        LogValue::from_log(direct, 1),
        FormulaId::UnitaryHS,
        vec![i64::from(n)],
    ))
}

/// Surface area of the real Stiefel manifold O(p, n):
/// 2^p π^(pn/2) / Γ_p(n/2), for 1 ≤ p ≤ n.
pub fn stiefel_volume_real(p: u32, n: u32) -> Result<VolumeResult> {
    if p < 1 || p > n {
        return Err(Error::domain(format!(
            "stiefel_volume_real requires 1 <= p <= n, got p={p}, n={n}"
        )));
    }
    let (pf, nf) = (f64::from(p), f64::from(n));
    let log = pf * (2.0f64).ln() + pf * nf / 2.0 * PI.ln()
        - multivariate_gamma_real(p, nf / 2.0)?.ln()?;
    if p == n {
        assert_dual(
            "vol(O(n,n)) vs vol(O(n))",
            log,
            orthogonal_group_volume(n)?.value.ln()?,
        );
    }
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::StiefelReal,
        vec![i64::from(n), i64::from(p)],
    ))
}

/// vol(U(n)/U(1)^n) = π^(n(n−1)) / Γ̃_n(n) = π^(n(n−1)/2) / (1!2!⋯(n−1)!).
pub fn coset_volume_u1n(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("coset_volume_u1n requires n >= 1"));
    }
    let nf = f64::from(n);
    let log = nf * (nf - 1.0) * PI.ln() - multivariate_gamma_complex(n, nf)?.ln()?;
    // vol(U(n)) = (2π)^n vol(U(n)/U(1)^n)
    assert_dual(
        "vol(U(n)) vs (2 pi)^n vol(U(n)/U(1)^n)",
        unitary_group_volume(n)?.value.ln()?,
        nf * (2.0 * PI).ln() + log,
    );
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::CosetU1n,
        vec![i64::from(n)],
    ))
}

/// Hilbert-Schmidt volume of the complex flag manifold:
/// (2π)^(n(n−1)/2) / (1!2!⋯(n−1)!).
pub fn flag_manifold_volume_hs(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("flag_manifold_volume_hs requires n >= 1"));
    }
    let nf = f64::from(n);
    let log = nf * (nf - 1.0) / 2.0 * (2.0 * PI).ln() - superfactorial_log(n - 1);
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::FlagHS,
        vec![i64::from(n)],
    ))
}

/// Measure normalization for the set of complex density matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityMeasure {
    /// The flat measure [dX] on the trace-one slice.
    Flat,
    /// The Hilbert-Schmidt measure, √n 2^(n(n−1)/2) times the flat one.
    Hs,
}

/// Volume of the set of n×n complex density matrices.
///
/// Flat: π^(n(n−1)/2) Γ(1)⋯Γ(n) / Γ(n²).
/// HS: √n (2π)^(n(n−1)/2) Γ(1)⋯Γ(n) / Γ(n²).
pub fn density_set_volume(n: u32, measure: DensityMeasure) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("density_set_volume requires n >= 1"));
    }
    let nf = f64::from(n);
    let mut gammas = 0.0f64;
    for j in 1..=n {
        gammas += log_gamma(f64::from(j)).expect("positive");
    }
    let flat = nf * (nf - 1.0) / 2.0 * PI.ln() + gammas - log_gamma(nf * nf)?;
    let hs = 0.5 * nf.ln() + nf * (nf - 1.0) / 2.0 * (2.0 * PI).ln() + gammas - log_gamma(nf * nf)?;
    // ratio must be sqrt(n) 2^(n(n-1)/2)
    assert_dual(
        "HS/flat density ratio",
        hs - flat,
        0.5 * nf.ln() + nf * (nf - 1.0) / 2.0 * (2.0f64).ln(),
    );
    let (log, id) = match measure {
        DensityMeasure::Flat => (flat, FormulaId::DensityComplex),
        DensityMeasure::Hs => (hs, FormulaId::DensityComplexHS),
    };
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        id,
        vec![i64::from(n)],
    ))
}

/// Volume of the set of n×n real symmetric density matrices under the flat
/// measure, computed through the eigenvalue decomposition route
/// (1/(2ⁿ n!)) · (1/C^(1,1)_n) · vol(O(n)).
///
/// The one-line closed form printed alongside this quantity in the source
/// derivation does not reproduce its own Monte Carlo value (n = 1 gives
/// 1/√π instead of 1); the decomposition route does, exactly, so that is
/// what this returns. See the crate tests for the frozen oracle values.
pub fn density_set_volume_real(n: u32) -> Result<VolumeResult> {
    if n < 1 {
        return Err(Error::domain("density_set_volume_real requires n >= 1"));
    }
    let nf = f64::from(n);
    let simplex = crate::selberg::simplex_constant(n, 1.0, 1.0)?;
    let log = simplex.ln()? + orthogonal_group_volume(n)?.value.ln()?
        - nf * (2.0f64).ln()
        - log_factorial(n);
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::DensityReal,
        vec![i64::from(n)],
    ))
}

/// Hilbert-Schmidt hyper-area of the boundary of the complex state set:
/// √(n−1) (2π)^(n(n−1)/2) Γ(1)⋯Γ(n+1) / (Γ(n) Γ(n²−1)), for n ≥ 2.
pub fn boundary_hyperarea_hs(n: u32) -> Result<VolumeResult> {
    if n < 2 {
        return Err(Error::domain(
            "boundary_hyperarea_hs requires n >= 2 (no boundary of this type below)",
        ));
    }
    let nf = f64::from(n);
    let mut gammas = 0.0f64;
    for j in 1..=n + 1 {
        gammas += log_gamma(f64::from(j)).expect("positive");
    }
    let log = 0.5 * (nf - 1.0).ln() + nf * (nf - 1.0) / 2.0 * (2.0 * PI).ln() + gammas
        - log_gamma(nf)?
        - log_gamma(nf * nf - 1.0)?;
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::BoundaryHS,
        vec![i64::from(n)],
    ))
}

/// Hilbert-Schmidt volume of the order-m hyperedge of the complex state set
/// (states with an m-fold zero eigenvalue), for 1 ≤ m ≤ n−1:
/// (√(n−m)/(n−m)!) · (1/C^(1+2m,2)_(n−m)) · vol_HS(Fl(n)) / vol_HS(Fl(m)).
pub fn hyperedge_volume_hs(n: u32, m: u32) -> Result<VolumeResult> {
    if m < 1 || m + 1 > n {
        return Err(Error::domain(format!(
            "hyperedge_volume_hs requires 1 <= m <= n-1, got n={n}, m={m}"
        )));
    }
    let k = n - m;
    let kf = f64::from(k);
    let simplex = crate::selberg::simplex_constant(k, 1.0 + 2.0 * f64::from(m), 2.0)?;
    let log = 0.5 * kf.ln() - log_factorial(k) + simplex.ln()?
        + flag_manifold_volume_hs(n)?.value.ln()?
        - flag_manifold_volume_hs(m)?.value.ln()?;
    Ok(VolumeResult::new(
        LogValue::from_log(log, 1),
        FormulaId::HyperedgeHS,
        vec![i64::from(n), i64::from(m)],
    ))
}

/// ln(0! 1! ... k!) — the superfactorial that normalizes the unitary volumes.
fn superfactorial_log(k: u32) -> f64 {
    (1..=k).map(log_factorial).sum()
}
