//! The verification suite: every acceptance criterion of the toolkit as a
//! runnable check, grouped into the volumes / selberg / ball / sampling
//! suites the CLI `verify` subcommand exposes. Each check pins its seeds,
//! tolerances, and thresholds in code; output is deterministic given the
//! configuration.

use std::f64::consts::PI;

use crate::ballvol::{ball_volume_quadrature, bessel_toeplitz_det, BallQuery};
use crate::estimators::stats::{chi_square_uniform, CHI2_CRIT_DF15_P001};
use crate::estimators::{
    andreief_check, angle_histogram, brute_force_selberg, mc_ball_volume, mc_moment, AngleSource,
    Ensemble, Statistic,
};
use crate::sampling::RngStream;
use crate::selberg::{
    aomoto_ratio, fixed_trace_from_laguerre, selberg_integral, simplex_constant, SelbergParams,
};
use crate::special::{bessel_j, bessel_j_row, log_gamma};
use crate::volumes::{
    boundary_hyperarea_hs, coset_volume_u1n, density_set_volume, density_set_volume_real,
    hyperedge_volume_hs, orthogonal_group_volume, sphere_volume, unitary_group_volume,
    unitary_group_volume_hs, DensityMeasure,
};

/// Which checks to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Volumes,
    Selberg,
    Ball,
    Sampling,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        match name {
            "volumes" => Some(Suite::Volumes),
            "selberg" => Some(Suite::Selberg),
            "ball" => Some(Suite::Ball),
            "sampling" => Some(Suite::Sampling),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

/// Seeds and sample counts for the statistical checks.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: u64,
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> VerifyConfig {
        VerifyConfig {
            seed: 0x5EED_C0DE,
            samples: 100_000,
            workers: std::thread::available_parallelism().map_or(1, |p| p.get()),
        }
    }
}

/// Result of one criterion.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    /// Deterministic diagnostics: measured values and the failures, if any.
    pub detail: String,
}

/// Run the selected suite; outcomes come back in criterion order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    type CheckFn = fn(&VerifyConfig) -> CheckOutcome;
    let table: [(Suite, CheckFn); 10] = [
        (Suite::Volumes, check_closed_form_exactness),
        (Suite::Volumes, check_bloch_cross),
        (Suite::Selberg, check_selberg_oracle),
        (Suite::Selberg, check_fixed_trace_bridge),
        (Suite::Sampling, check_haar_statistics),
        (Suite::Sampling, check_ensemble_moments),
        (Suite::Ball, check_ball_volume),
        (Suite::Volumes, check_special_functions),
        (Suite::Ball, check_andreief),
        (Suite::Sampling, check_reproducibility),
    ];
    table
        .iter()
        .filter(|(s, _)| suite == Suite::All || suite == *s)
        .map(|(_, f)| f(cfg))
        .collect()
}

/// Accumulates comparisons for one criterion.
struct Gate {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Gate {
    fn new() -> Gate {
        Gate {
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// |got − expect| <= tol·max(1, |expect|)
    fn close(&mut self, label: &str, got: f64, expect: f64, tol: f64) {
        let diff = (got - expect).abs();
        let bound = tol * expect.abs().max(1.0);
        if diff <= bound {
            self.notes.push(format!("{label}: diff {diff:.3e}"));
        } else {
            self.failures
                .push(format!("{label}: got {got:.12e}, expected {expect:.12e}, diff {diff:.3e} > {bound:.3e}"));
        }
    }

    fn within(&mut self, label: &str, value: f64, bound: f64) {
        if value.abs() <= bound {
            self.notes.push(format!("{label}: {value:.3e} <= {bound:.3e}"));
        } else {
            self.failures.push(format!("{label}: {value:.3e} > {bound:.3e}"));
        }
    }

    fn check(&mut self, label: &str, ok: bool, detail: String) {
        if ok {
            self.notes.push(format!("{label}: {detail}"));
        } else {
            self.failures.push(format!("{label}: FAILED, {detail}"));
        }
    }

    fn outcome(self, id: &'static str, description: &'static str) -> CheckOutcome {
        let passed = self.failures.is_empty();
        let detail = if passed {
            self.notes.join("; ")
        } else {
            self.failures.join("; ")
        };
        CheckOutcome {
            id,
            description,
            passed,
            detail,
        }
    }
}

fn ln_of(v: crate::volumes::VolumeResult) -> f64 {
    v.value.ln().expect("volumes are positive")
}

/// Criterion 1: closed-form exactness and the internal dual-expression
/// assertions up to n = 20.
fn check_closed_form_exactness(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let cases: [(&str, f64, f64); 7] = [
        ("vol(S^1)", ln_of(sphere_volume(1)), (2.0 * PI).ln()),
        ("vol(S^2)", ln_of(sphere_volume(2)), (4.0 * PI).ln()),
        ("vol(O(1))", ln_of(orthogonal_group_volume(1).unwrap()), 2.0f64.ln()),
        ("vol(O(2))", ln_of(orthogonal_group_volume(2).unwrap()), (4.0 * PI).ln()),
        ("vol(U(1))", ln_of(unitary_group_volume(1).unwrap()), (2.0 * PI).ln()),
        ("vol(U(2))", ln_of(unitary_group_volume(2).unwrap()), (4.0 * PI.powi(3)).ln()),
        ("vol(U(2)/U(1)^2)", ln_of(coset_volume_u1n(2).unwrap()), PI.ln()),
    ];
    for (label, got, expect) in cases {
        g.close(label, got, expect, 1e-12);
    }
    // dual-expression assertions fire inside the constructors
    let duals = std::panic::catch_unwind(|| {
        for n in 1..=20u32 {
            let _ = unitary_group_volume(n).unwrap();
            let _ = orthogonal_group_volume(n).unwrap();
            let _ = unitary_group_volume_hs(n).unwrap();
            let _ = coset_volume_u1n(n).unwrap();
            let _ = density_set_volume(n, DensityMeasure::Hs).unwrap();
        }
    });
    g.check("dual-expression asserts n<=20", duals.is_ok(), "all passed".into());
    g.outcome("closed-form-exactness", "small-n catalog values and dual-expression identities")
}

/// Criterion 2: the n = 2 state-set values against independent Euclidean
/// geometry (ball and sphere of radius 1/√2).
fn check_bloch_cross(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let r = 1.0 / 2.0f64.sqrt();
    let bloch_ball = 4.0 / 3.0 * PI * r.powi(3);
    let bloch_sphere = 4.0 * PI * r * r;
    g.close(
        "vol_HS(D(C^2)) vs Bloch ball",
        ln_of(density_set_volume(2, DensityMeasure::Hs).unwrap()),
        bloch_ball.ln(),
        1e-12,
    );
    g.close(
        "boundary hyper-area n=2 vs Bloch sphere",
        ln_of(boundary_hyperarea_hs(2).unwrap()),
        bloch_sphere.ln(),
        1e-12,
    );
    // hyperedge normalization cross-check rides along (m = 1 must equal the boundary)
    for n in 2..=6u32 {
        g.close(
            &format!("hyperedge m=1 vs boundary, n={n}"),
            ln_of(hyperedge_volume_hs(n, 1).unwrap()),
            ln_of(boundary_hyperarea_hs(n).unwrap()),
            1e-10,
        );
    }
    // the real state-set values frozen against the MC oracle
    g.close("vol(D(R^1))", ln_of(density_set_volume_real(1).unwrap()), 0.0, 1e-12);
    g.close(
        "vol(D(R^2))",
        ln_of(density_set_volume_real(2).unwrap()),
        (PI / 4.0).ln(),
        1e-12,
    );
    g.outcome("bloch-ball-cross-check", "state-set volumes against Euclidean geometry")
}

/// Criterion 3: Selberg closed form vs brute-force quadrature, α↔β symmetry,
/// and the Aomoto telescoping identity.
fn check_selberg_oracle(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let p2 = SelbergParams::new(2, 1.0, 1.0, 1.0).unwrap();
    let oracle2 = brute_force_selberg(&p2, 128).unwrap();
    let closed2 = selberg_integral(&p2).unwrap().linear().unwrap();
    g.close("S_2(1,1,1) vs oracle", closed2, oracle2, 1e-6);
    g.close("S_2(1,1,1) value", closed2, 1.0 / 6.0, 1e-9);

    let p3 = SelbergParams::new(3, 1.0, 1.0, 1.0).unwrap();
    let oracle3 = brute_force_selberg(&p3, 128).unwrap();
    let closed3 = selberg_integral(&p3).unwrap().linear().unwrap();
    g.close("S_3(1,1,1) vs oracle", closed3, oracle3, 1e-3);

    let mut rng = RngStream::new(cfg.seed ^ 0xA0A0, 0);
    let mut worst_sym = 0.0f64;
    for _ in 0..1000 {
        let n = 1 + (rng.next_u64() % 5) as u32;
        let a = 0.2 + 4.0 * rng.uniform();
        let b = 0.2 + 4.0 * rng.uniform();
        let gm = 2.0 * rng.uniform();
        let s1 = selberg_integral(&SelbergParams::new(n, a, b, gm).unwrap()).unwrap().ln().unwrap();
        let s2 = selberg_integral(&SelbergParams::new(n, b, a, gm).unwrap()).unwrap().ln().unwrap();
        worst_sym = worst_sym.max((s1 - s2).abs() / s1.abs().max(1.0));
    }
    g.within("alpha-beta symmetry over 1e3 draws", worst_sym, 1e-13);

    let mut worst_tel = 0.0f64;
    for _ in 0..100 {
        let n = 1 + (rng.next_u64() % 4) as u32;
        let a = 0.3 + 3.0 * rng.uniform();
        let b = 0.3 + 3.0 * rng.uniform();
        let gm = 1.5 * rng.uniform();
        let p = SelbergParams::new(n, a, b, gm).unwrap();
        let p_up = SelbergParams::new(n, a + 1.0, b, gm).unwrap();
        let lhs = selberg_integral(&p_up).unwrap().ln().unwrap()
            - selberg_integral(&p).unwrap().ln().unwrap();
        let rhs = aomoto_ratio(&p, n).unwrap().ln().unwrap();
        worst_tel = worst_tel.max((lhs - rhs).abs() / lhs.abs().max(1.0));
    }
    g.within("Aomoto telescoping over 1e2 draws", worst_tel, 1e-11);
    g.outcome("selberg-vs-oracle", "closed form against quadrature, symmetry, telescoping")
}

/// Criterion 4: the Laplace-transform bridge and the β = 2 gamma-product
/// identity.
fn check_fixed_trace_bridge(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let mut worst = 0.0f64;
    for n in 1..=4u32 {
        for &a in &[1.0, 2.0, 3.0] {
            for &b in &[1.0, 2.0] {
                let lhs = fixed_trace_from_laguerre(n, a, b).unwrap().ln().unwrap();
                let rhs = simplex_constant(n, a, b).unwrap().ln().unwrap();
                worst = worst.max((lhs - rhs).abs() / lhs.abs().max(1.0));
            }
        }
    }
    g.within("bridge vs simplex over N<=4 grid", worst, 1e-11);

    let mut worst_prod = 0.0f64;
    for n in 1..=6u32 {
        let nf = f64::from(n);
        let mut expect = -log_gamma(nf * nf).unwrap();
        for j in 0..n {
            expect += log_gamma(nf - f64::from(j)).unwrap();
            expect += log_gamma(nf - f64::from(j) + 1.0).unwrap();
        }
        let got = simplex_constant(n, 1.0, 2.0).unwrap().ln().unwrap();
        worst_prod = worst_prod.max((got - expect).abs() / expect.abs().max(1.0));
    }
    g.within("1/C^(1,2)_n vs gamma product, n<=6", worst_prod, 1e-10);
    g.outcome("fixed-trace-bridge", "Laplace bridge and gamma-product identities")
}

/// Criterion 5: Haar sampling statistics with the phase-fix negative control.
fn check_haar_statistics(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    for &n in &[2usize, 4] {
        let r = mc_moment(
            Ensemble::HaarUnitaryAngles,
            Statistic::TraceSquare,
            n,
            cfg.samples,
            cfg.seed ^ 0x11,
            cfg.workers,
        )
        .unwrap();
        // reuse the trace-square machinery for |tr U|^2 = 1; |U11|^2 has its
        // own dedicated bound below
        g.check(
            &format!("E|tr U|^2 = 1 at n={n}"),
            (r.mean - 1.0).abs() < 5.0 * r.std_error,
            format!("mean {:.6}, se {:.2e}", r.mean, r.std_error),
        );
    }
    for &n in &[2usize, 4] {
        let (mean, se) = u11_moment(n, cfg.samples, cfg.seed ^ 0x12);
        let expect = 1.0 / n as f64;
        g.check(
            &format!("E|U11|^2 = 1/{n}"),
            (mean - expect).abs() < 5.0 * se,
            format!("mean {mean:.6}, se {se:.2e}"),
        );
    }

    let hist = angle_histogram(AngleSource::Eigenangles, 3, cfg.samples, 16, cfg.seed ^ 0x13, cfg.workers)
        .unwrap();
    let chi2 = chi_square_uniform(&hist);
    g.check(
        "eigenangle marginal uniform (chi2, 16 bins, n=3)",
        chi2 < CHI2_CRIT_DF15_P001,
        format!("chi2 {chi2:.3} vs crit {CHI2_CRIT_DF15_P001:.3}"),
    );

    let hist_det =
        angle_histogram(AngleSource::DetPhase, 3, cfg.samples, 16, cfg.seed ^ 0x14, cfg.workers)
            .unwrap();
    let chi2_det = chi_square_uniform(&hist_det);
    g.check(
        "det-phase uniform (chi2, 16 bins, n=3)",
        chi2_det < CHI2_CRIT_DF15_P001,
        format!("chi2 {chi2_det:.3}"),
    );

    // negative control: without the phase fix the det phase must NOT be uniform
    let hist_raw = angle_histogram(
        AngleSource::DetPhaseWithoutFix,
        3,
        cfg.samples,
        16,
        cfg.seed ^ 0x15,
        cfg.workers,
    )
    .unwrap();
    let chi2_raw = chi_square_uniform(&hist_raw);
    g.check(
        "phase-fix-disabled variant fails uniformity",
        chi2_raw > CHI2_CRIT_DF15_P001,
        format!("chi2 {chi2_raw:.3} (must exceed {CHI2_CRIT_DF15_P001:.3})"),
    );
    g.outcome("haar-sampling-statistics", "Haar moments, angle uniformity, negative control")
}

fn u11_moment(n: usize, samples: u64, seed: u64) -> (f64, f64) {
    // |U11|^2 via the generic moment runner, using a one-off closure through
    // the Wishart machinery would change its meaning; sample directly instead
    use crate::sampling::{haar_unitary, RngStream};
    let block = crate::estimators::BLOCK_SIZE;
    let n_blocks = samples.div_ceil(block) as usize;
    let mut s1 = 0.0f64;
    let mut s2 = 0.0f64;
    for b in 0..n_blocks {
        let lo = b as u64 * block;
        let hi = (lo + block).min(samples);
        let mut rng = RngStream::new(seed, (9 << 32) + b as u64);
        for _ in lo..hi {
            let u = haar_unitary(n, &mut rng).unwrap();
            let x = u[(0, 0)].norm_sqr();
            s1 += x;
            s2 += x * x;
        }
    }
    let nf = samples as f64;
    let mean = s1 / nf;
    let var = ((s2 - s1 * s1 / nf) / (nf - 1.0)).max(0.0);
    (mean, (var / nf).sqrt())
}

/// Criterion 6: determinant and purity moments of the matrix ensembles.
fn check_ensemble_moments(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    for n in 2..=5usize {
        let r = mc_moment(
            Ensemble::WishartEigs,
            Statistic::Det,
            n,
            cfg.samples,
            cfg.seed ^ 0x21,
            cfg.workers,
        )
        .unwrap();
        let expect = (1..=n).product::<usize>() as f64;
        g.check(
            &format!("E[det GG*] = {n}! "),
            (r.mean - expect).abs() < 5.0 * r.std_error,
            format!("mean {:.4}, se {:.2e}", r.mean, r.std_error),
        );
    }
    let det = mc_moment(
        Ensemble::HsDensityEigs,
        Statistic::Det,
        2,
        cfg.samples,
        cfg.seed ^ 0x22,
        cfg.workers,
    )
    .unwrap();
    g.check(
        "E[det rho] = 1/10 at n=2",
        (det.mean - 0.1).abs() < 5.0 * det.std_error,
        format!("mean {:.5}, se {:.2e}", det.mean, det.std_error),
    );
    let tr2 = mc_moment(
        Ensemble::HsDensityEigs,
        Statistic::TraceSquare,
        2,
        cfg.samples,
        cfg.seed ^ 0x22,
        cfg.workers,
    )
    .unwrap();
    g.check(
        "E[tr rho^2] = 4/5 at n=2",
        (tr2.mean - 0.8).abs() < 5.0 * tr2.std_error,
        format!("mean {:.5}, se {:.2e}", tr2.mean, tr2.std_error),
    );
    g.outcome("ensemble-moments", "Wishart determinant and density-matrix moments")
}

/// Criterion 7: deterministic ball volume against the analytic n=1 law, the
/// full-radius normalization, the MC cross-check grid, and evenness of D_n.
fn check_ball_volume(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    for &eps in &[0.5f64, 1.0, std::f64::consts::SQRT_2] {
        let q = BallQuery::new(1, eps).with_tolerance(2e-5).with_s_cap(6000.0);
        let v = ball_volume_quadrature(&q).unwrap();
        let expect = (2.0 / PI) * (eps / 2.0).asin();
        g.close(&format!("n=1 arcsine law at eps={eps}"), v, expect, 1e-4);
    }
    for n in 1..=4u32 {
        let q = BallQuery::new(n, 2.0 * f64::from(n).sqrt());
        let v = ball_volume_quadrature(&q).unwrap();
        g.close(&format!("vol(B_2sqrt(n)) = 1 at n={n}"), v, 1.0, 1e-3);
    }
    for n in 1..=3u32 {
        for &scale in &[0.5f64, 1.0, 1.5] {
            let eps = scale * f64::from(n).sqrt();
            let q = BallQuery::new(n, eps).with_tolerance(1e-4).with_s_cap(6000.0);
            let quad = ball_volume_quadrature(&q).unwrap();
            let mc = mc_ball_volume(n as usize, eps, cfg.samples, cfg.seed ^ 0x31, cfg.workers)
                .unwrap();
            let budget = 3.0 * mc.std_error + 1e-3;
            g.check(
                &format!("quadrature vs MC at n={n}, eps={eps:.4}"),
                (quad - mc.mean).abs() <= budget,
                format!("quad {quad:.6}, mc {:.6} ± {:.2e}", mc.mean, mc.std_error),
            );
        }
    }
    let mut worst_even = 0.0f64;
    for n in 1..=5u32 {
        for &s in &[0.9f64, 3.7, 18.1, 77.7] {
            let d = (bessel_toeplitz_det(n, s).unwrap() - bessel_toeplitz_det(n, -s).unwrap()).abs();
            worst_even = worst_even.max(d);
        }
    }
    g.within("D_n(-s) = D_n(s)", worst_even, 1e-12);
    g.outcome("ball-volume", "metric-ball quadrature against analytic law and MC")
}

/// Criterion 8: special-function identities at their stated tolerances.
fn check_special_functions(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let mut rng = RngStream::new(cfg.seed ^ 0x41, 0);
    let mut worst_rec = 0.0f64;
    for _ in 0..10_000 {
        let x = 0.1 + 99.9 * rng.uniform();
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        worst_rec = worst_rec.max((lhs - rhs).abs() / lhs.abs().max(1.0));
    }
    g.within("log-gamma recurrence over 1e4 draws", worst_rec, 1e-11);

    let mut worst_dup = 0.0f64;
    let mut nval = 1.5f64;
    while nval <= 20.0 {
        // Γ(2n−1) = 2^{2n−2} Γ(n−1/2) Γ(n) / √π
        let lhs = log_gamma(2.0 * nval - 1.0).unwrap();
        let rhs = -0.5 * PI.ln()
            + (2.0 * nval - 2.0) * 2.0f64.ln()
            + log_gamma(nval - 0.5).unwrap()
            + log_gamma(nval).unwrap();
        worst_dup = worst_dup.max((lhs - rhs).abs() / lhs.abs().max(1.0));
        nval += 0.5;
    }
    g.within("duplication formula", worst_dup, 1e-11);

    let mut worst_3term = 0.0f64;
    let mut x = 0.1;
    while x < 50.0 {
        let row = bessel_j_row(13, x).unwrap();
        for k in 1..=12usize {
            let lhs = row[k - 1] + row[k + 1];
            let rhs = 2.0 * k as f64 / x * row[k];
            worst_3term = worst_3term.max((lhs - rhs).abs());
        }
        x += 0.53;
    }
    g.within("Bessel three-term recurrence", worst_3term, 1e-9);

    let mut worst_norm = 0.0f64;
    let mut x = 0.5;
    while x <= 40.0 {
        let row = bessel_j_row(60, x).unwrap();
        let s = row[0] * row[0] + 2.0 * row[1..].iter().map(|v| v * v).sum::<f64>();
        worst_norm = worst_norm.max((s - 1.0).abs());
        x += 1.3;
    }
    g.within("Bessel sum normalization", worst_norm, 1e-8);

    let j0_zero = 2.404_825_557_7;
    g.within("J0 at its first zero", bessel_j(0, j0_zero).unwrap(), 1e-8);
    g.outcome("special-functions", "gamma and Bessel identities")
}

/// Criterion 9: Andreief identity on the monomial basis.
fn check_andreief(_cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    for n in 1..=3usize {
        for offset in [0u32, 1] {
            let diff = andreief_check(n, offset).unwrap();
            g.within(&format!("n={n}, offset={offset}"), diff, 1e-8);
        }
    }
    g.outcome("andreief-identity", "simplex quadrature vs moment determinant")
}

/// Criterion 10: bit-level reproducibility and worker-count independence.
fn check_reproducibility(cfg: &VerifyConfig) -> CheckOutcome {
    let mut g = Gate::new();
    let a = mc_moment(Ensemble::WishartEigs, Statistic::Det, 2, 20_000, cfg.seed, 1).unwrap();
    let b = mc_moment(Ensemble::WishartEigs, Statistic::Det, 2, 20_000, cfg.seed, 1).unwrap();
    g.check(
        "same seed twice is bit-identical",
        a.mean.to_bits() == b.mean.to_bits() && a.std_error.to_bits() == b.std_error.to_bits(),
        format!("mean {:.12e}", a.mean),
    );
    let c = mc_moment(Ensemble::WishartEigs, Statistic::Det, 2, 20_000, cfg.seed, 8).unwrap();
    let rel = (a.mean - c.mean).abs() / a.mean.abs().max(1e-300);
    g.within("1-worker vs 8-worker relative difference", rel, 1e-12);

    let ball1 = mc_ball_volume(2, 1.2, 20_000, cfg.seed, 1).unwrap();
    let ball8 = mc_ball_volume(2, 1.2, 20_000, cfg.seed, 8).unwrap();
    g.check(
        "ball estimator worker independence",
        ball1.mean.to_bits() == ball8.mean.to_bits(),
        format!("mean {:.12e}", ball1.mean),
    );
    g.outcome("reproducibility", "seeded determinism and worker-count independence")
}
