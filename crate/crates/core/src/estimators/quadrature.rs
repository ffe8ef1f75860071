use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix, MatrixKind};
use crate::selberg::SelbergParams;

/// Gauss-Legendre nodes and weights on [0, 1].
///
/// Newton iteration on P_n with the Chebyshev initial guess; standard
/// construction, accurate to machine precision for n <= 512.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!((2..=512).contains(&n), "gauss_legendre_unit supports 2..=512 nodes");
    let mut nodes = vec![0.0f64; n];
    let mut weights = vec![0.0f64; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // evaluate P_n(x) and P_n'(x) by the three-term recurrence
            let mut p0 = 1.0f64;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]; roots come in ± pairs
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

fn selberg_integrand(x: &[f64], alpha: f64, beta: f64, two_gamma: f64) -> f64 {
    let mut v = 1.0f64;
    for &xi in x {
        v *= xi.powf(alpha - 1.0) * (1.0 - xi).powf(beta - 1.0);
    }
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= (x[i] - x[j]).abs().powf(two_gamma);
        }
    }
    v
}

/// Direct tensor/simplex Gauss-Legendre quadrature of the defining Selberg
/// integral on [0,1]^N, the oracle the closed form is judged against.
///
/// Scope: N <= 3, alpha >= 1, beta >= 1, gamma >= 0 (bounded integrand).
/// When 2γ is an even integer the integrand is smooth on the cube and a
/// plain tensor rule is used; otherwise |Δ|^{2γ} has kinks at coincident
/// coordinates, so the domain is folded to the ordered simplex
/// x_1 < ... < x_N (where each chamber is smooth) and multiplied by N!.
pub fn brute_force_selberg(p: &SelbergParams, points_per_axis: usize) -> Result<f64> {
    p.validate()?;
    if p.n > 3 {
        return Err(Error::domain("brute_force_selberg oracle scope is N <= 3"));
    }
    if p.alpha < 1.0 || p.beta < 1.0 {
        return Err(Error::domain(
            "brute_force_selberg oracle scope is alpha >= 1 and beta >= 1",
        ));
    }
    if p.gamma < 0.0 {
        return Err(Error::domain("brute_force_selberg oracle scope is gamma >= 0"));
    }
    if !(2..=512).contains(&points_per_axis) {
        return Err(Error::domain("points_per_axis must be in 2..=512"));
    }
    let (nodes, weights) = gauss_legendre_unit(points_per_axis);
    let two_gamma = 2.0 * p.gamma;
    let n = p.n as usize;
    let smooth = (two_gamma - (two_gamma / 2.0).round() * 2.0).abs() < 1e-12;
    let value = if smooth || n == 1 {
        tensor_integral(n, &nodes, &weights, &|x| {
            selberg_integrand(x, p.alpha, p.beta, two_gamma)
        })
    } else {
        let folded = simplex_integral(n, 1.0, &mut vec![0.0; n], &nodes, &weights, &|x| {
            selberg_integrand(x, p.alpha, p.beta, two_gamma)
        });
        folded * (1..=n).product::<usize>() as f64
    };
    Ok(value)
}

fn tensor_integral(
    dims: usize,
    nodes: &[f64],
    weights: &[f64],
    f: &dyn Fn(&[f64]) -> f64,
) -> f64 {
    let mut point = vec![0.0f64; dims];
    fn recurse(
        level: usize,
        point: &mut Vec<f64>,
        nodes: &[f64],
        weights: &[f64],
        f: &dyn Fn(&[f64]) -> f64,
    ) -> f64 {
        if level == point.len() {
            return f(point);
        }
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(weights.iter()) {
            point[level] = *x;
            acc += w * recurse(level + 1, point, nodes, weights, f);
        }
        acc
    }
    recurse(0, &mut point, nodes, weights, f)
}

/// Integral over the ordered region 0 < x_1 < ... < x_dims < upper, with the
/// outermost coordinate integrated last.
fn simplex_integral(
    level: usize,
    upper: f64,
    point: &mut Vec<f64>,
    nodes: &[f64],
    weights: &[f64],
    f: &dyn Fn(&[f64]) -> f64,
) -> f64 {
    if level == 0 {
        return f(point);
    }
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(weights.iter()) {
        let xi = upper * x;
        point[level - 1] = xi;
        acc += upper * w * simplex_integral(level - 1, xi, point, nodes, weights, f);
    }
    acc
}

/// Andreief identity check on the monomial basis M_i(x) = x^{i-1},
/// N_j(x) = x^{j-1+offset}, w ≡ 1 on [0,1]:
/// the n-dimensional ordered-simplex quadrature of det(M)·det(N) against the
/// exact n×n moment determinant det[1/(i+j-1+offset)]. Returns |lhs − rhs|.
pub fn andreief_check(n: usize, basis_degree_offset: u32) -> Result<f64> {
    if n < 1 || n > 4 {
        return Err(Error::domain("andreief_check scope is 1 <= n <= 4"));
    }
    let offset = basis_degree_offset as f64;
    let (nodes, weights) = gauss_legendre_unit(48);

    let integrand = |x: &[f64]| -> f64 {
        let m = Matrix::from_fn(n, n, MatrixKind::Real, |i, j| {
            num_complex::Complex64::new(x[j].powi(i as i32), 0.0)
        });
        let nn = Matrix::from_fn(n, n, MatrixKind::Real, |i, j| {
            num_complex::Complex64::new(x[j].powf(i as f64 + offset), 0.0)
        });
        (determinant(&m).expect("square") * determinant(&nn).expect("square")).re
    };
    let lhs = simplex_integral(n, 1.0, &mut vec![0.0; n], &nodes, &weights, &integrand);

    let moments = Matrix::from_fn(n, n, MatrixKind::Real, |i, j| {
        num_complex::Complex64::new(1.0 / ((i + j + 1) as f64 + offset), 0.0)
    });
    let rhs = determinant(&moments)?.re;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn gauss_legendre_integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre_unit(8);
        // degree 15 exact: ∫ x^15 = 1/16
        let v: f64 = x.iter().zip(w.iter()).map(|(xi, wi)| wi * xi.powi(15)).sum();
        assert_abs_diff_eq!(v, 1.0 / 16.0, epsilon = 1e-14);
        let total: f64 = w.iter().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn beta_integral_n1() {
        let p = SelbergParams::new(1, 2.0, 3.0, 0.0).unwrap();
        let v = brute_force_selberg(&p, 32).unwrap();
        assert_abs_diff_eq!(v, 1.0 / 12.0, epsilon = 1e-12);
    }

    #[test]
    fn selberg_211_matches_sixth() {
        let p = SelbergParams::new(2, 1.0, 1.0, 1.0).unwrap();
        let v = brute_force_selberg(&p, 64).unwrap();
        assert_abs_diff_eq!(v, 1.0 / 6.0, epsilon = 1e-10);
    }

    #[test]
    fn oracle_vs_closed_form() {
        for &(n, a, b, g, tol) in &[
            (2u32, 2.0, 1.0, 1.0, 1e-6),
            (2, 1.0, 2.0, 0.5, 1e-6), // 2γ odd: simplex folding path
            (3, 1.0, 1.0, 1.0, 1e-3),
        ] {
            let p = SelbergParams::new(n, a, b, g).unwrap();
            let oracle = brute_force_selberg(&p, 128).unwrap();
            let closed = crate::selberg::selberg_integral(&p).unwrap().linear().unwrap();
            assert!(
                (oracle - closed).abs() <= tol * closed.abs(),
                "oracle {oracle} vs closed {closed} at N={n}, a={a}, b={b}, g={g}"
            );
        }
    }

    #[test]
    fn oracle_convergence_under_refinement() {
        // doubling the nodes moves the smooth N=2 result by < 1e-8
        let p = SelbergParams::new(2, 1.0, 1.0, 1.0).unwrap();
        let v64 = brute_force_selberg(&p, 64).unwrap();
        let v128 = brute_force_selberg(&p, 128).unwrap();
        assert!((v64 - v128).abs() < 1e-8);
    }

    #[test]
    fn scope_errors() {
        let p4 = SelbergParams::new(4, 1.0, 1.0, 1.0).unwrap();
        assert!(brute_force_selberg(&p4, 64).is_err());
        let p = SelbergParams::new(2, 0.5, 1.0, 1.0).unwrap();
        assert!(brute_force_selberg(&p, 64).is_err());
    }

    #[test]
    fn andreief_small_cases() {
        // n=1: both sides are 1/(1+offset)
        assert!(andreief_check(1, 0).unwrap() < 1e-14);
        // n=2, offset 0: right side det [[1,1/2],[1/2,1/3]] = 1/12
        assert!(andreief_check(2, 0).unwrap() < 1e-10);
        assert!(andreief_check(3, 1).unwrap() < 1e-8);
        assert!(andreief_check(5, 0).is_err());
    }
}
