//! Quadrature primitives shared across the crate: cached Gauss-Legendre
//! rules for panel integration and an adaptive Gauss-Kronrod 15(7) rule
//! for complex-valued integrands on real segments.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Gauss-Kronrod 15-point nodes on [-1, 1] (positive half; symmetric).
const GK_NODES: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];

const GK_WEIGHTS: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];

/// Weights of the embedded 7-point Gauss rule (nodes at odd GK indices).
const G7_WEIGHTS: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub abs_err: f64,
    pub converged: bool,
}

fn gk15_segment(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut kronrod = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    for (i, (&x, &wk)) in GK_NODES.iter().zip(GK_WEIGHTS.iter()).enumerate() {
        let contrib = if x == 0.0 {
            f(c)
        } else {
            f(c - h * x) + f(c + h * x)
        };
        kronrod += wk * contrib;
        if i % 2 == 1 {
            gauss += G7_WEIGHTS[i / 2] * contrib;
        }
    }
    let value = kronrod * h;
    let err = ((kronrod - gauss) * h).norm();
    // Standard conservative rescaling of the Gauss/Kronrod discrepancy.
    let err = (200.0 * err).powf(1.5).min(err.max(1e-300));
    (value, err)
}

/// Adaptive bisection driven by the Gauss/Kronrod error estimate.
pub fn adaptive_gk15(
    f: &mut dyn FnMut(f64) -> Complex64,
    a: f64,
    b: f64,
    abs_tol: f64,
    max_depth: u32,
) -> QuadResult {
    fn recurse(
        f: &mut dyn FnMut(f64) -> Complex64,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
        out: &mut QuadResult,
    ) {
        let (v, e) = gk15_segment(f, a, b);
        if e <= tol || depth == 0 {
            out.value += v;
            out.abs_err += e;
            if e > tol {
                out.converged = false;
            }
            return;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1, out);
        recurse(f, m, b, 0.5 * tol, depth - 1, out);
    }
    let mut out = QuadResult {
        value: Complex64::new(0.0, 0.0),
        abs_err: 0.0,
        converged: true,
    };
    recurse(f, a, b, abs_tol, max_depth, &mut out);
    out
}

static GL_CACHE: Lazy<Mutex<HashMap<usize, (Vec<f64>, Vec<f64>)>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence and cached.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    if let Some(hit) = GL_CACHE.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let mut p0 = 1.0;
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
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GL_CACHE
        .lock()
        .unwrap()
        .insert(n, (nodes.clone(), weights.clone()));
    (nodes, weights)
}

/// Fixed-order Gauss-Legendre integration of a complex integrand on [a, b].
pub fn gl_fixed(f: &mut dyn FnMut(f64) -> Complex64, a: f64, b: f64, order: usize) -> Complex64 {
    let (nodes, weights) = gauss_legendre(order);
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += w * f(c + h * x);
    }
    acc * h
}
