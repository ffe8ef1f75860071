//! The Selberg integral family: the closed form on [0,1]^N, Aomoto's
//! correlation ratio, the Laguerre and Hermite limits, the fixed-trace
//! (eigenvalue simplex) constants, and the Laplace-transform bridge
//! connecting the last two.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{log_gamma, LogValue};

/// Parameters of S_N(α, β, γ) = ∫_{[0,1]^N} ∏ x^{α−1}(1−x)^{β−1} |Δ(x)|^{2γ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelbergParams {
    pub n: u32,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl SelbergParams {
    pub fn new(n: u32, alpha: f64, beta: f64, gamma: f64) -> Result<SelbergParams> {
        let p = SelbergParams { n, alpha, beta, gamma };
        p.validate()?;
        Ok(p)
    }

    /// Convergence domain: α > 0, β > 0, and for N ≥ 2
    /// γ > −min(1/N, α/(N−1), β/(N−1)); for N = 1 γ is unconstrained.
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::domain("Selberg N must be >= 1"));
        }
        if !(self.alpha > 0.0) || !(self.beta > 0.0) {
            return Err(Error::domain(format!(
                "Selberg requires alpha > 0 and beta > 0, got alpha={}, beta={}",
                self.alpha, self.beta
            )));
        }
        if self.n >= 2 {
            let nf = f64::from(self.n);
            let lower = -(1.0 / nf)
                .min(self.alpha / (nf - 1.0))
                .min(self.beta / (nf - 1.0));
            if !(self.gamma > lower) {
                return Err(Error::domain(format!(
                    "Selberg requires gamma > {lower}, got {}",
                    self.gamma
                )));
            }
        }
        Ok(())
    }
}

/// Closed form of Selberg's integral:
/// S_N = ∏_{j=0}^{N−1} Γ(α+γj) Γ(β+γj) Γ(1+γ+γj) / (Γ(α+β+γ(N+j−1)) Γ(1+γ)).
///
/// The j = 0 factor Γ(1+γ)/Γ(1+γ) is dropped analytically, so γ enters only
/// through well-defined positive gamma arguments inside the validity domain.
pub fn selberg_integral(p: &SelbergParams) -> Result<LogValue> {
    p.validate()?;
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let nf = f64::from(p.n);
    let mut log = 0.0f64;
    for j in 0..p.n {
        let jf = f64::from(j);
        log += log_gamma(a + g * jf)?;
        log += log_gamma(b + g * jf)?;
        log -= log_gamma(a + b + g * (nf + jf - 1.0))?;
        if j > 0 {
            // Γ(1+γ(1+j)) / Γ(1+γ); exact cancellation at j = 0
            log += log_gamma(1.0 + g * (1.0 + jf))?;
            log -= log_gamma(1.0 + g)?;
        }
    }
    Ok(LogValue::from_log(log, 1))
}

/// Aomoto's moment ⟨x₁⋯x_K⟩ under the Selberg density:
/// ∏_{j=1}^K (α+γ(N−j)) / (α+β+γ(2N−j−1)), for 1 ≤ K ≤ N.
pub fn aomoto_ratio(p: &SelbergParams, k: u32) -> Result<LogValue> {
    p.validate()?;
    if k < 1 || k > p.n {
        return Err(Error::domain(format!(
            "aomoto_ratio requires 1 <= K <= N, got K={k}, N={}",
            p.n
        )));
    }
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let nf = f64::from(p.n);
    let mut log = 0.0f64;
    for j in 1..=k {
        let jf = f64::from(j);
        let num = a + g * (nf - jf);
        let den = a + b + g * (2.0 * nf - jf - 1.0);
        debug_assert!(num > 0.0 && den > 0.0, "validated parameters keep factors positive");
        log += num.ln() - den.ln();
    }
    Ok(LogValue::from_log(log, 1))
}

/// Laguerre limit of Selberg's integral:
/// ∫_{(0,∞)^N} |Δ(x)|^{2γ} ∏ x^{α−1} e^{−x} [dx]
///   = ∏_{j=1}^N Γ(α+γ(j−1)) Γ(1+γj) / Γ(1+γ).
pub fn laguerre_selberg(n: u32, alpha: f64, gamma: f64) -> Result<LogValue> {
    if n < 1 {
        return Err(Error::domain("laguerre_selberg requires N >= 1"));
    }
    if !(alpha > 0.0) {
        return Err(Error::domain(format!(
            "laguerre_selberg requires alpha > 0, got {alpha}"
        )));
    }
    if !(gamma >= 0.0) {
        return Err(Error::domain(format!(
            "laguerre_selberg numerical scope is gamma >= 0, got {gamma}"
        )));
    }
    let mut log = 0.0f64;
    for j in 1..=n {
        let jf = f64::from(j);
        log += log_gamma(alpha + gamma * (jf - 1.0))?;
        log += log_gamma(1.0 + gamma * jf)?;
        log -= log_gamma(1.0 + gamma)?;
    }
    Ok(LogValue::from_log(log, 1))
}

/// Hermite limit of Selberg's integral:
/// ∫_{R^N} |Δ(x)|^{2γ} ∏ e^{−λx²} [dx]
///   = (2π)^{N/2} (2λ)^{−N(γ(N−1)+1)/2} ∏_{j=1}^N Γ(1+γj)/Γ(1+γ).
pub fn hermite_selberg(n: u32, gamma: f64, lambda: f64) -> Result<LogValue> {
    if n < 1 {
        return Err(Error::domain("hermite_selberg requires N >= 1"));
    }
    if !(lambda > 0.0) {
        return Err(Error::domain(format!(
            "hermite_selberg requires lambda > 0, got {lambda}"
        )));
    }
    if !(gamma >= 0.0) {
        return Err(Error::domain(format!(
            "hermite_selberg numerical scope is gamma >= 0, got {gamma}"
        )));
    }
    let nf = f64::from(n);
    let mut log = nf / 2.0 * (2.0 * PI).ln()
        - nf * (gamma * (nf - 1.0) + 1.0) / 2.0 * (2.0 * lambda).ln();
    for j in 1..=n {
        log += log_gamma(1.0 + gamma * f64::from(j))?;
        log -= log_gamma(1.0 + gamma)?;
    }
    Ok(LogValue::from_log(log, 1))
}

/// The fixed-trace eigenvalue-simplex integral
/// 1/C^(α,β)_N = ∫_{(0,∞)^N} δ(1−Σλ) ∏ λ^{α−1} |Δ(λ)|^β [dλ]
///   = (1/Γ(αN+βN(N−1)/2)) ∏_{j=1}^N Γ(1+jβ/2) Γ(α+(j−1)β/2) / Γ(1+β/2).
pub fn simplex_constant(n: u32, alpha: f64, beta: f64) -> Result<LogValue> {
    if n < 1 {
        return Err(Error::domain("simplex_constant requires N >= 1"));
    }
    if !(alpha > 0.0) {
        return Err(Error::domain(format!(
            "simplex_constant requires alpha > 0, got {alpha}"
        )));
    }
    if !(beta >= 0.0) {
        return Err(Error::domain(format!(
            "simplex_constant requires beta >= 0, got {beta}"
        )));
    }
    let nf = f64::from(n);
    let mut log = -log_gamma(alpha * nf + beta * nf * (nf - 1.0) / 2.0)?;
    for j in 1..=n {
        let jf = f64::from(j);
        log += log_gamma(1.0 + jf * beta / 2.0)?;
        log += log_gamma(alpha + (jf - 1.0) * beta / 2.0)?;
        log -= log_gamma(1.0 + beta / 2.0)?;
    }
    Ok(LogValue::from_log(log, 1))
}

/// The same fixed-trace integral computed through the Laplace-transform
/// bridge: the Laguerre closed form at γ = β/2, divided by
/// Γ(αN + βN(N−1)/2). Must agree with [`simplex_constant`] to 1e−11 in the
/// log domain; that agreement is this module's central cross-check.
pub fn fixed_trace_from_laguerre(n: u32, alpha: f64, beta: f64) -> Result<LogValue> {
    if !(beta >= 0.0) {
        return Err(Error::domain(format!(
            "fixed_trace_from_laguerre requires beta >= 0, got {beta}"
        )));
    }
    let nf = f64::from(n);
    let w = laguerre_selberg(n, alpha, beta / 2.0)?;
    let log = w.ln()? - log_gamma(alpha * nf + beta * nf * (nf - 1.0) / 2.0)?;
    Ok(LogValue::from_log(log, 1))
}
