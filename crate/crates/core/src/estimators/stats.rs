//! Small statistical helpers for the verification suite: chi-square
//! uniformity statistics and the two-sample Kolmogorov-Smirnov distance.

/// Chi-square statistic of observed counts against the uniform expectation.
pub fn chi_square_uniform(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expect = total as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expect;
            d * d / expect
        })
        .sum()
}

/// Critical value of chi-square with 15 degrees of freedom at p = 0.001
/// (16-bin uniformity tests reject above this).
pub const CHI2_CRIT_DF15_P001: f64 = 37.697_298;

/// Two-sample Kolmogorov-Smirnov statistic D = sup |F_a - F_b|.
pub fn ks_statistic(a: &[f64], b: &[f64]) -> f64 {
    let mut xa = a.to_vec();
    let mut xb = b.to_vec();
    xa.sort_by(|x, y| x.partial_cmp(y).unwrap());
    xb.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let (na, nb) = (xa.len() as f64, xb.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < xa.len() && j < xb.len() {
        // step past ties in both samples together
        let x = xa[i].min(xb[j]);
        while i < xa.len() && xa[i] <= x {
            i += 1;
        }
        while j < xb.len() && xb[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

/// KS rejection threshold at level alpha = 0.001:
/// c(alpha) sqrt((n+m)/(nm)) with c = sqrt(-ln(alpha/2)/2).
pub fn ks_critical(n: usize, m: usize, alpha: f64) -> f64 {
    let c = (-(alpha / 2.0).ln() / 2.0).sqrt();
    c * (((n + m) as f64) / (n as f64 * m as f64)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_square_of_perfectly_uniform_counts_is_zero() {
        assert_eq!(chi_square_uniform(&[100; 16]), 0.0);
        assert!(chi_square_uniform(&[150, 50, 100, 100]) > 0.0);
    }

    #[test]
    fn ks_of_identical_samples_is_zero() {
        let a = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(ks_statistic(&a, &a), 0.0);
        let b = [10.0, 11.0, 12.0, 13.0];
        assert_eq!(ks_statistic(&a, &b), 1.0);
    }

    #[test]
    fn ks_critical_matches_known_constant() {
        // c(0.001) = 1.94947...
        let c = ks_critical(1, 1, 0.001) / (2.0f64).sqrt();
        assert!((c - 1.949_47).abs() < 1e-4);
    }
}
