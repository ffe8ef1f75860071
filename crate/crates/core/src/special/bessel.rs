use crate::error::{Error, Result};
use crate::special::gamma::log_gamma;

/// Hard ceiling on |x|; Miller recurrence cost grows linearly with it.
pub const BESSEL_MAX_X: f64 = 3.0e4;

/// Crossover between the ascending power series and Miller's recurrence.
/// Below this the series loses at most ~5 digits to cancellation.
const SERIES_MAX_X: f64 = 14.0;

/// Bessel function of the first kind J_k(x) for integer k >= 0.
///
/// J_{-k}(x) = (-1)^k J_k(x) is left to callers.
pub fn bessel_j(k: u32, x: f64) -> Result<f64> {
    Ok(bessel_j_row(k, x)?[k as usize])
}

/// J_0(x), ..., J_{k_max}(x) in one pass.
///
/// The ball-volume determinant needs a whole row of orders at the same
/// argument; Miller's downward recurrence produces them all at the cost of
/// one.
pub fn bessel_j_row(k_max: u32, x: f64) -> Result<Vec<f64>> {
    if !x.is_finite() || x.abs() > BESSEL_MAX_X {
        return Err(Error::domain(format!(
            "bessel_j requires |x| <= {BESSEL_MAX_X}, got {x}"
        )));
    }
    let ax = x.abs();
    let mut row = if ax == 0.0 {
        let mut r = vec![0.0; k_max as usize + 1];
        r[0] = 1.0;
        r
    } else if ax <= SERIES_MAX_X {
        (0..=k_max).map(|k| series(k, ax)).collect()
    } else {
        miller_row(k_max, ax)
    };
    if x < 0.0 {
        // J_k(-x) = (-1)^k J_k(x)
        for (k, v) in row.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
    Ok(row)
}

/// Ascending series Σ_j (-1)^j / (j! (j+k)!) (x/2)^{2j+k}, x > 0.
fn series(k: u32, x: f64) -> f64 {
    let half = x / 2.0;
    // leading term (x/2)^k / k! in log form; far above its argument the
    // function underflows to an honest zero
    let log_t0 = f64::from(k) * half.ln() - log_gamma(f64::from(k) + 1.0).expect("positive");
    if log_t0 < -745.0 {
        return 0.0;
    }
    let mut term = log_t0.exp();
    let mut sum = term;
    let q = half * half;
    for j in 1..200 {
        let jf = j as f64;
        term *= -q / (jf * (jf + f64::from(k)));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

/// Miller's downward recurrence normalized by J_0 + 2 Σ J_{2m} = 1, x > 0.
fn miller_row(k_max: u32, x: f64) -> Vec<f64> {
    // start above the turning point by a few Airy widths (~x^{1/3}); this
    // keeps the dominant-solution contamination at machine-epsilon level
    // across the whole admissible range
    let start = (x + 14.0 * x.cbrt()).ceil() as usize + k_max as usize + 20;
    let mut row = vec![0.0; k_max as usize + 1];
    let mut fp1 = 0.0f64; // f_{m+1}
    let mut fm = 1e-30f64; // f_m, starting at m = start
    let mut norm = 0.0f64;
    let mut m = start;
    loop {
        if m % 2 == 0 && m != 0 {
            norm += 2.0 * fm;
        }
        if m <= k_max as usize {
            row[m] = fm;
        }
        if m == 0 {
            break;
        }
        let fm1 = 2.0 * m as f64 / x * fm - fp1; // f_{m-1}
        fp1 = fm;
        fm = fm1;
        m -= 1;
        // rescale to dodge overflow on long recurrences
        if fm.abs() > 1e250 {
            let s = 1e-250;
            fm *= s;
            fp1 *= s;
            norm *= s;
            for v in row.iter_mut() {
                *v *= s;
            }
        }
    }
    norm += fm; // J_0 contribution
    for v in row.iter_mut() {
        *v /= norm;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn values_at_zero() {
        assert_abs_diff_eq!(bessel_j(0, 0.0).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bessel_j(1, 0.0).unwrap(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(bessel_j(7, 0.0).unwrap(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn reference_points() {
        // Abramowitz & Stegun table values
        assert_abs_diff_eq!(bessel_j(0, 1.0).unwrap(), 0.765_197_686_557_966_6, epsilon = 1e-12);
        assert_abs_diff_eq!(bessel_j(1, 1.0).unwrap(), 0.440_050_585_744_933_5, epsilon = 1e-12);
        assert_abs_diff_eq!(bessel_j(0, 5.0).unwrap(), -0.177_596_771_314_338_3, epsilon = 1e-12);
        assert_abs_diff_eq!(bessel_j(2, 10.0).unwrap(), 0.254_630_313_685_121_2, epsilon = 1e-11);
        assert_abs_diff_eq!(bessel_j(0, 50.0).unwrap(), 0.055_812_327_669_251_75, epsilon = 1e-11);
    }

    #[test]
    fn first_zero_of_j0() {
        // located independently by bisecting the ascending series
        let f = |x: f64| {
            let half = x / 2.0;
            let q = half * half;
            let mut term = 1.0f64;
            let mut sum = 1.0f64;
            for j in 1..60 {
                let jf = j as f64;
                term *= -q / (jf * jf);
                sum += term;
            }
            sum
        };
        let (mut lo, mut hi) = (2.0f64, 3.0f64);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let root = 0.5 * (lo + hi);
        assert_abs_diff_eq!(root, 2.404_825_557_695_773, epsilon = 1e-10);
        assert!(bessel_j(0, 2.404_825_557_695_773).unwrap().abs() < 1e-9);
    }

    #[test]
    fn parity_in_x() {
        for &x in &[0.7, 3.3, 25.0] {
            for k in 0..6u32 {
                let plus = bessel_j(k, x).unwrap();
                let minus = bessel_j(k, -x).unwrap();
                let expect = if k % 2 == 0 { plus } else { -plus };
                assert_abs_diff_eq!(minus, expect, epsilon = 1e-14);
            }
        }
    }

    #[test]
    fn three_term_recurrence() {
        // J_{k-1} + J_{k+1} = (2k/x) J_k over the spec's range
        let mut x = 0.1f64;
        while x < 50.0 {
            let row = bessel_j_row(13, x).unwrap();
            for k in 1..=12usize {
                let lhs = row[k - 1] + row[k + 1];
                let rhs = 2.0 * k as f64 / x * row[k];
                assert!(
                    (lhs - rhs).abs() <= 1e-9,
                    "recurrence failed at k={k}, x={x}: {lhs} vs {rhs}"
                );
            }
            x += 0.37;
        }
    }

    #[test]
    fn sum_normalization() {
        // J_0² + 2 Σ_{k≥1} J_k² = 1, truncated at k = 60
        let mut x = 0.5f64;
        while x <= 40.0 {
            let row = bessel_j_row(60, x).unwrap();
            let s = row[0] * row[0] + 2.0 * row[1..].iter().map(|v| v * v).sum::<f64>();
            assert!((s - 1.0).abs() <= 1e-8, "sum normalization failed at x={x}: {s}");
            x += 1.7;
        }
    }

    #[test]
    fn regimes_agree_on_the_crossover_strip() {
        // series vs Miller around |x| = 14
        for &x in &[13.0, 13.9, 14.1, 15.0] {
            for k in 0..8u32 {
                let s = series(k, x);
                let m = miller_row(8, x)[k as usize];
                assert_abs_diff_eq!(s, m, epsilon = 5e-11);
            }
        }
    }

    #[test]
    fn large_argument_within_extended_domain() {
        // envelope |J_k(x)| <= sqrt(2/(pi x)) approximately for x >> k
        let v = bessel_j(3, 5000.0).unwrap();
        assert!(v.abs() < 0.012);
        assert!(bessel_j(0, 2.0e4).is_err());
    }
}
