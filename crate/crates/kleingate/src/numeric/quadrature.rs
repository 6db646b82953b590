//! Gauss-Legendre quadrature on rectangles.

use num_complex::Complex64;

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1].
///
/// Newton iteration on the Legendre polynomial from the Chebyshev-based
/// initial guess; exact for polynomials up to degree 2n-1.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // p_n(x) and p_n'(x) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Axis-aligned rectangle, in the length unit of the caller.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Rect {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Rect {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Self { x_min, x_max, y_min, y_max }
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn area(&self) -> f64 {
        self.width() * self.height()
    }
}

/// Tensor-product Gauss-Legendre integral of `f` over `rect`, `n` points per axis.
pub fn integrate_2d<F>(f: F, rect: Rect, n: usize) -> Complex64
where
    F: Fn(f64, f64) -> Complex64,
{
    let (nodes, weights) = gauss_legendre(n);
    let (cx, hx) = (0.5 * (rect.x_min + rect.x_max), 0.5 * rect.width());
    let (cy, hy) = (0.5 * (rect.y_min + rect.y_max), 0.5 * rect.height());
    let mut total = Complex64::ZERO;
    for (xi, wx) in nodes.iter().zip(&weights) {
        let x = cx + hx * xi;
        let mut row = Complex64::ZERO;
        for (yi, wy) in nodes.iter().zip(&weights) {
            row += wy * f(x, cy + hy * yi);
        }
        total += wx * row;
    }
    total * (hx * hy)
}

/// Doubles the per-axis order until successive estimates agree to `rel_tol`
/// (relative, with an absolute floor). Returns the value and the last change
/// as an error estimate.
pub fn integrate_2d_adaptive<F>(f: F, rect: Rect, rel_tol: f64) -> (Complex64, f64)
where
    F: Fn(f64, f64) -> Complex64,
{
    let mut n = 16;
    let mut prev = integrate_2d(&f, rect, n);
    loop {
        n *= 2;
        let next = integrate_2d(&f, rect, n);
        let change = (next - prev).norm();
        let scale = next.norm().max(1e-300);
        if change <= rel_tol * scale.max(1e-12) || n >= 512 {
            return (next, change);
        }
        prev = next;
    }
}
