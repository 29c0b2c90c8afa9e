//! Shared independent oracles for the integration tests.

use std::f64::consts::PI;

use bohr_lab::HarmonicModel;
use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
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
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `(1/π) ∫∫_{|z|<r} (|h'|^2 - |g'|^2) dA` by Gauss-Legendre in the radius
/// and the trapezoid rule in the angle.
pub fn area_by_quadrature(model: &HarmonicModel, r: f64) -> f64 {
    let radial = gauss_legendre(24);
    let angles = 128;
    let mut total = 0.0;
    for &(x, w) in &radial {
        let rho = 0.5 * r * (x + 1.0);
        let mut ring = 0.0;
        for j in 0..angles {
            let z = Complex64::from_polar(rho, 2.0 * PI * j as f64 / angles as f64);
            ring += model.h_prime(z).norm_sqr() - model.g_prime(z).norm_sqr();
        }
        total += 0.5 * r * w * rho * ring * (2.0 * PI / angles as f64);
    }
    total / PI
}

