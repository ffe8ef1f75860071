use crate::error::{Error, Result};
use crate::special::LogValue;

/// Lanczos coefficients for g = 7 with 9 terms (Godfrey's table).
/// Relative accuracy is ~1e-15 over the positive real axis.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for x > 0.
///
/// Lanczos approximation; no reflection branch because every caller in this
/// crate evaluates at positive arguments. For x < 0.5 one recurrence step
/// keeps the shifted argument in the well-conditioned region.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // ln Γ(x) = ln Γ(x+1) − ln x
        return Ok(lanczos(x + 1.0) - x.ln());
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    // Γ(x) = √(2π) (x+g-1/2)^(x-1/2) e^{-(x+g-1/2)} A_g(x)
    let z = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// ln k! for non-negative integer k.
pub fn log_factorial(k: u32) -> f64 {
    log_gamma(f64::from(k) + 1.0).expect("argument is positive")
}

/// Real multivariate gamma Γ_p(α) = π^{p(p−1)/4} ∏_{j=0}^{p−1} Γ(α − j/2),
/// defined for α > (p−1)/2.
pub fn multivariate_gamma_real(p: u32, alpha: f64) -> Result<LogValue> {
    if p < 1 {
        return Err(Error::domain("multivariate_gamma_real requires p >= 1"));
    }
    let pf = f64::from(p);
    if alpha <= (pf - 1.0) / 2.0 {
        return Err(Error::domain(format!(
            "multivariate_gamma_real requires alpha > (p-1)/2 = {}, got {alpha}",
            (pf - 1.0) / 2.0
        )));
    }
    let mut log = pf * (pf - 1.0) / 4.0 * std::f64::consts::PI.ln();
    for j in 0..p {
        log += log_gamma(alpha - f64::from(j) / 2.0)?;
    }
    Ok(LogValue::from_log(log, 1))
}

/// Complex multivariate gamma Γ̃_n(α) = π^{n(n−1)/2} ∏_{j=0}^{n−1} Γ(α − j),
/// defined for α > n − 1.
pub fn multivariate_gamma_complex(n: u32, alpha: f64) -> Result<LogValue> {
    if n < 1 {
        return Err(Error::domain("multivariate_gamma_complex requires n >= 1"));
    }
    let nf = f64::from(n);
    if alpha <= nf - 1.0 {
        return Err(Error::domain(format!(
            "multivariate_gamma_complex requires alpha > n-1 = {}, got {alpha}",
            nf - 1.0
        )));
    }
    let mut log = nf * (nf - 1.0) / 2.0 * std::f64::consts::PI.ln();
    for j in 0..n {
        log += log_gamma(alpha - f64::from(j))?;
    }
    Ok(LogValue::from_log(log, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn known_values() {
        assert_relative_eq!(log_gamma(1.0).unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(log_gamma(0.5).unwrap(), PI.sqrt().ln(), max_relative = 1e-13);
        assert_relative_eq!(log_gamma(6.0).unwrap(), 120.0f64.ln(), max_relative = 1e-13);
        // large argument in the Stirling-dominated regime: Γ(171) is near the
        // f64 overflow edge but its log is routine
        assert_relative_eq!(
            log_gamma(171.0).unwrap(),
            706.573_062_245_787_3,
            max_relative = 1e-12
        );
    }

    #[test]
    fn recurrence_over_random_arguments() {
        // ln Γ(x+1) = ln Γ(x) + ln x, 10^4 points spread over (0.1, 100)
        let mut x = 0.1f64;
        for i in 0..10_000 {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + x.ln();
            let scale = lhs.abs().max(1.0);
            assert!(
                (lhs - rhs).abs() <= 1e-12 * scale,
                "recurrence failed at x={x}: {lhs} vs {rhs}"
            );
            x = 0.1 + 99.9 * ((i as f64 * 0.618_033_988_749_894_9) % 1.0);
        }
    }

    #[test]
    fn duplication_formula() {
        // Γ(2n−1) = 2^{2n−2} Γ(n−1/2) Γ(n) / √π for n in {1.5, 2, ..., 20}
        // (n = 3/2 pins the √π on the denominator side: Γ(2) = 1 = 2·Γ(1)Γ(3/2)/√π)
        let mut n = 1.5f64;
        while n <= 20.0 {
            let lhs = log_gamma(2.0 * n - 1.0).unwrap();
            let rhs = -0.5 * PI.ln()
                + (2.0 * n - 2.0) * 2.0f64.ln()
                + log_gamma(n - 0.5).unwrap()
                + log_gamma(n).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-11 * lhs.abs().max(1.0),
                "duplication failed at n={n}"
            );
            n += 0.5;
        }
    }

    #[test]
    fn domain_errors() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-3.0).is_err());
        assert!(multivariate_gamma_real(2, 0.5).is_err());
        assert!(multivariate_gamma_complex(3, 2.0).is_err());
    }

    #[test]
    fn multivariate_real_small_cases() {
        // Γ_1 = Γ
        assert_relative_eq!(
            multivariate_gamma_real(1, 1.0).unwrap().linear().unwrap(),
            1.0,
            max_relative = 1e-13
        );
        // Γ_2(1) = π^{1/2} Γ(1) Γ(1/2) = π
        assert_relative_eq!(
            multivariate_gamma_real(2, 1.0).unwrap().linear().unwrap(),
            PI,
            max_relative = 1e-13
        );
        // Γ_2(3/2) = π^{1/2} Γ(3/2) Γ(1) = π/2
        assert_relative_eq!(
            multivariate_gamma_real(2, 1.5).unwrap().linear().unwrap(),
            PI / 2.0,
            max_relative = 1e-13
        );
    }

    #[test]
    fn multivariate_complex_small_cases() {
        assert_relative_eq!(
            multivariate_gamma_complex(1, 1.0).unwrap().linear().unwrap(),
            1.0,
            max_relative = 1e-13
        );
        // Γ̃_2(2) = π Γ(2)Γ(1) = π
        assert_relative_eq!(
            multivariate_gamma_complex(2, 2.0).unwrap().linear().unwrap(),
            PI,
            max_relative = 1e-13
        );
        // Γ̃_3(3) = π³ Γ(3)Γ(2)Γ(1) = 2π³
        assert_relative_eq!(
            multivariate_gamma_complex(3, 3.0).unwrap().linear().unwrap(),
            2.0 * PI.powi(3),
            max_relative = 1e-13
        );
    }
}
