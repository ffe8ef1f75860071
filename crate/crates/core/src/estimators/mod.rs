//! Monte Carlo estimators with deterministic parallelism, brute-force
//! quadrature oracles for small-N Selberg integrals, and the Andreief
//! identity checker.
//!
//! Samples are generated in fixed-size blocks, one independent RNG stream per
//! block index, and block partials are reduced in index order. The estimate
//! is therefore bit-identical for any worker count, and reproducible from
//! (seed, parameters) alone.

mod quadrature;
pub mod stats;

pub use quadrature::{andreief_check, brute_force_selberg, gauss_legendre_unit};

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{determinant, frobenius_distance_to_identity};
use crate::sampling::{
    ginibre, haar_unitary, haar_unitary_without_phase_fix, random_density_hs, GinibreKind,
    RngStream,
};

/// Samples per RNG stream; the work unit handed to a worker.
pub const BLOCK_SIZE: u64 = 4096;

/// Stream-id namespaces, so different estimators never share a stream even
/// under the same master seed.
pub mod stream_tags {
    pub const BALL: u64 = 1 << 32;
    pub const MOMENT: u64 = 2 << 32;
    pub const HISTOGRAM: u64 = 3 << 32;
    pub const TRACE: u64 = 4 << 32;
}

/// One Monte Carlo answer.
#[derive(Debug, Clone, Copy)]
pub struct EstimatorResult {
    pub mean: f64,
    pub std_error: f64,
    pub n_samples: u64,
    pub master_seed: u64,
    pub elapsed_seconds: f64,
}

/// Mean and standard error of `f` over `n_samples` draws, partitioned into
/// deterministic blocks and evaluated on up to `workers` threads.
fn run_mean<F>(n_samples: u64, seed: u64, tag: u64, workers: usize, f: F) -> EstimatorResult
where
    F: Fn(&mut RngStream) -> f64 + Sync,
{
    let start = Instant::now();
    let n_blocks = n_samples.div_ceil(BLOCK_SIZE) as usize;
    let mut partials = vec![(0.0f64, 0.0f64); n_blocks];

    let run_block = |b: usize| -> (f64, f64) {
        let lo = b as u64 * BLOCK_SIZE;
        let hi = (lo + BLOCK_SIZE).min(n_samples);
        let mut rng = RngStream::new(seed, tag + b as u64);
        let (mut s1, mut s2) = (0.0f64, 0.0f64);
        for _ in lo..hi {
            let x = f(&mut rng);
            s1 += x;
            s2 += x * x;
        }
        (s1, s2)
    };

    let workers = workers.max(1).min(n_blocks.max(1));
    if workers == 1 {
        for (b, slot) in partials.iter_mut().enumerate() {
            *slot = run_block(b);
        }
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<(f64, f64)>> =
            (0..n_blocks).map(|_| std::sync::Mutex::new((0.0, 0.0))).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let b = next.fetch_add(1, Ordering::Relaxed);
                    if b >= n_blocks {
                        break;
                    }
                    *slots[b].lock().unwrap() = run_block(b);
                });
            }
        });
        for (b, slot) in slots.into_iter().enumerate() {
            partials[b] = slot.into_inner().unwrap();
        }
    }

    // pairwise reduction in block order: associativity is fixed, so any
    // worker count yields the same bits
    let sum1 = pairwise_sum(&partials, |p| p.0);
    let sum2 = pairwise_sum(&partials, |p| p.1);
    let nf = n_samples as f64;
    let mean = sum1 / nf;
    let var = ((sum2 - sum1 * sum1 / nf) / (nf - 1.0)).max(0.0);
    EstimatorResult {
        mean,
        std_error: (var / nf).sqrt(),
        n_samples,
        master_seed: seed,
        elapsed_seconds: start.elapsed().as_secs_f64(),
    }
}

fn pairwise_sum<T, F: Fn(&T) -> f64 + Copy>(items: &[T], get: F) -> f64 {
    match items.len() {
        0 => 0.0,
        1 => get(&items[0]),
        n => {
            let (a, b) = items.split_at(n / 2);
            pairwise_sum(a, get) + pairwise_sum(b, get)
        }
    }
}

/// Haar-measure volume of the Frobenius ball ‖U − 1‖_F ≤ eps on U(n),
/// estimated as the hit fraction of seeded Haar draws. Binomial standard
/// error.
pub fn mc_ball_volume(
    n: usize,
    eps: f64,
    n_samples: u64,
    seed: u64,
    workers: usize,
) -> Result<EstimatorResult> {
    let max_eps = 2.0 * (n as f64).sqrt();
    if !(0.0..=max_eps + 1e-12).contains(&eps) {
        return Err(Error::domain(format!(
            "mc_ball_volume requires 0 <= eps <= 2*sqrt(n) = {max_eps}, got {eps}"
        )));
    }
    if n_samples < 100 {
        return Err(Error::domain("mc_ball_volume requires n_samples >= 100"));
    }
    let mut result = run_mean(n_samples, seed, stream_tags::BALL, workers, |rng| {
        let u = haar_unitary(n, rng).expect("haar draw");
        f64::from(frobenius_distance_to_identity(&u) <= eps)
    });
    // binomial standard error
    let p = result.mean;
    result.std_error = (p * (1.0 - p) / n_samples as f64).sqrt();
    Ok(result)
}

/// Random-matrix ensembles whose spectral statistics have closed-form
/// moments in the Selberg family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ensemble {
    /// Eigenangles of Haar U(n).
    HaarUnitaryAngles,
    /// Eigenvalues of GG* with CN(0,1) entries (the e^{−tr XX*} measure).
    WishartEigs,
    /// Eigenvalues of Hilbert-Schmidt random density matrices.
    HsDensityEigs,
}

/// Spectral statistic to average.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// ∏ λ_j (the determinant, for real-spectrum ensembles).
    ProductOfEigs,
    /// tr of the square: |tr U|² for the unitary ensemble, Σλ² otherwise.
    TraceSquare,
    /// Alias for the determinant.
    Det,
}

/// Monte Carlo moment of an ensemble statistic.
///
/// Supported pairs: Wishart × det/product, HS density × det/product/trace²,
/// Haar angles × trace². Anything else is a usage error.
pub fn mc_moment(
    ensemble: Ensemble,
    statistic: Statistic,
    n: usize,
    n_samples: u64,
    seed: u64,
    workers: usize,
) -> Result<EstimatorResult> {
    if n < 1 {
        return Err(Error::domain("mc_moment requires n >= 1"));
    }
    if n_samples < 1000 {
        return Err(Error::domain("mc_moment requires n_samples >= 1000"));
    }
    let inv_sqrt2 = Complex64::new(1.0 / 2.0f64.sqrt(), 0.0);
    let sample: Box<dyn Fn(&mut RngStream) -> f64 + Sync> = match (ensemble, statistic) {
        (Ensemble::WishartEigs, Statistic::Det | Statistic::ProductOfEigs) => {
            Box::new(move |rng: &mut RngStream| {
                let g = ginibre(n, GinibreKind::Complex, rng).scale(inv_sqrt2);
                determinant(&g.mul(&g.conj_transpose())).expect("square").re
            })
        }
        (Ensemble::HsDensityEigs, Statistic::Det | Statistic::ProductOfEigs) => {
            Box::new(move |rng: &mut RngStream| {
                let rho = random_density_hs(n, rng);
                determinant(rho.matrix()).expect("square").re
            })
        }
        (Ensemble::HsDensityEigs, Statistic::TraceSquare) => {
            Box::new(move |rng: &mut RngStream| {
                // tr ρ² = Σ |ρ_ij|² for Hermitian ρ
                let rho = random_density_hs(n, rng);
                rho.matrix().entries().iter().map(|z| z.norm_sqr()).sum()
            })
        }
        (Ensemble::HaarUnitaryAngles, Statistic::TraceSquare) => {
            Box::new(move |rng: &mut RngStream| {
                let u = haar_unitary(n, rng).expect("haar draw");
                u.trace().norm_sqr()
            })
        }
        (e, s) => {
            return Err(Error::usage(format!(
                "unsupported ensemble/statistic combination: {e:?} x {s:?}"
            )))
        }
    };
    Ok(run_mean(n_samples, seed, stream_tags::MOMENT, workers, |rng| sample(rng)))
}

/// Angle statistics whose histograms the verification suite tests for
/// uniformity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleSource {
    /// All n eigenangles of each Haar draw.
    Eigenangles,
    /// arg det(U) of each Haar draw.
    DetPhase,
    /// arg det(Q) of the *uncorrected* QR factor — the negative control.
    DetPhaseWithoutFix,
}

/// Histogram of an angle statistic over [−π, π], with deterministic
/// block-parallel counting.
pub fn angle_histogram(
    source: AngleSource,
    n: usize,
    n_draws: u64,
    bins: usize,
    seed: u64,
    workers: usize,
) -> Result<Vec<u64>> {
    if bins < 2 {
        return Err(Error::domain("angle_histogram requires at least 2 bins"));
    }
    let n_blocks = n_draws.div_ceil(BLOCK_SIZE) as usize;
    let run_block = |b: usize| -> Result<Vec<u64>> {
        let lo = b as u64 * BLOCK_SIZE;
        let hi = (lo + BLOCK_SIZE).min(n_draws);
        let mut rng = RngStream::new(seed, stream_tags::HISTOGRAM + b as u64);
        let mut counts = vec![0u64; bins];
        let mut push = |theta: f64| {
            let t = (theta + std::f64::consts::PI) / (2.0 * std::f64::consts::PI);
            let idx = ((t * bins as f64) as usize).min(bins - 1);
            counts[idx] += 1;
        };
        for _ in lo..hi {
            match source {
                AngleSource::Eigenangles => {
                    let u = haar_unitary(n, &mut rng)?;
                    for theta in crate::sampling::unitary_eigenangles(&u)? {
                        push(theta);
                    }
                }
                AngleSource::DetPhase => {
                    let u = haar_unitary(n, &mut rng)?;
                    let d = determinant(&u)?;
                    push(d.im.atan2(d.re));
                }
                AngleSource::DetPhaseWithoutFix => {
                    let q = haar_unitary_without_phase_fix(n, &mut rng)?;
                    let d = determinant(&q)?;
                    push(d.im.atan2(d.re));
                }
            }
        }
        Ok(counts)
    };

    let workers = workers.max(1).min(n_blocks.max(1));
    let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); n_blocks];
    if workers == 1 {
        for (b, slot) in blocks.iter_mut().enumerate() {
            *slot = run_block(b)?;
        }
    } else {
        let next = AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Result<Vec<u64>>>> =
            (0..n_blocks).map(|_| std::sync::Mutex::new(Ok(Vec::new()))).collect();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let b = next.fetch_add(1, Ordering::Relaxed);
                    if b >= n_blocks {
                        break;
                    }
                    *slots[b].lock().unwrap() = run_block(b);
                });
            }
        });
        for (b, slot) in slots.into_iter().enumerate() {
            blocks[b] = slot.into_inner().unwrap()?;
        }
    }

    let mut total = vec![0u64; bins];
    for counts in blocks {
        for (t, c) in total.iter_mut().zip(counts.iter()) {
            *t += c;
        }
    }
    Ok(total)
}

/// Real parts of tr(V·U) over Haar draws U, for the invariance KS test;
/// `left` = None samples tr(U) itself.
pub fn trace_real_samples(
    n: usize,
    left: Option<&crate::linalg::Matrix>,
    n_draws: u64,
    seed: u64,
    stream_offset: u64,
) -> Result<Vec<f64>> {
    let mut rng = RngStream::new(seed, stream_tags::TRACE + stream_offset);
    let mut out = Vec::with_capacity(n_draws as usize);
    for _ in 0..n_draws {
        let u = haar_unitary(n, &mut rng)?;
        let t = match left {
            Some(v) => v.mul(&u).trace(),
            None => u.trace(),
        };
        out.push(t.re);
    }
    Ok(out)
}
