//! Special functions needed by the symbol and closed-form machinery:
//! complex log-gamma, the Riemann zeta function on the real line and the
//! polylogarithm evaluated on the unit circle.
//!
//! The polylogarithm uses the expansion around z = 1,
//!
//!   Li_s(e^μ) = Γ(1-s)(-μ)^(s-1) + Σ_{k≥0} ζ(s-k) μ^k / k!,   |μ| < 2π,
//!
//! (with the usual harmonic-number limit when s is a positive integer)
//! which converges geometrically for μ = iθ, |θ| ≤ π, and stays accurate
//! where the direct sine series is hopeless (s ≤ 1 near θ = 0).

use num_complex::Complex64;
use std::f64::consts::PI;

/// Lanczos coefficients, g = 7, n = 9.
const LANCZOS: [f64; 9] = [
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

/// Principal branch of log Γ(z) for Re z ≥ 0.5 (Lanczos); reflection
/// is applied for real arguments below the strip.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // reflection: Γ(z)Γ(1-z) = π / sin(πz); adequate here because the
        // callers only reach this branch with real z off the poles.
        let s = (PI * z).sin();
        return Complex64::new(PI, 0.0).ln() - s.ln() - ln_gamma(Complex64::new(1.0, 0.0) - z);
    }
    let zm1 = z - Complex64::new(1.0, 0.0);
    let mut acc = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (zm1 + Complex64::new(i as f64, 0.0));
    }
    let t = zm1 + Complex64::new(7.5, 0.0);
    (zm1 + Complex64::new(0.5, 0.0)) * t.ln() - t
        + Complex64::new(0.5 * (2.0 * PI).ln(), 0.0)
        + acc.ln()
}

/// Γ(x) for real x (poles excluded by callers).
pub fn gamma_real(x: f64) -> f64 {
    if x > 0.5 {
        ln_gamma(Complex64::new(x, 0.0)).re.exp()
    } else {
        // reflection keeps the sign information
        PI / ((PI * x).sin() * ln_gamma(Complex64::new(1.0 - x, 0.0)).re.exp())
    }
}

/// Dirichlet eta by Borwein's algorithm; machine precision for s > 0.
fn dirichlet_eta(s: f64) -> f64 {
    let n = 36usize;
    let mut d = vec![0.0f64; n + 1];
    let mut t = 1.0f64; // (n+i-1)! 4^i / ((n-i)! (2i)!), i = 0 term
    let nf = n as f64;
    d[0] = t;
    for i in 1..=n {
        let fi = i as f64;
        t *= (nf + fi - 1.0) * (nf - fi + 1.0) * 4.0 / ((2.0 * fi - 1.0) * (2.0 * fi));
        d[i] = d[i - 1] + t;
    }
    let dn = d[n];
    let mut acc = 0.0f64;
    let mut sign = 1.0f64;
    for k in 0..n {
        acc += sign * (d[k] - dn) / ((k + 1) as f64).powf(s);
        sign = -sign;
    }
    -acc / dn
}

/// Riemann zeta on the real line, s ≠ 1.
pub fn zeta(s: f64) -> f64 {
    assert!(s != 1.0, "zeta pole at s = 1");
    if s >= 0.0 {
        dirichlet_eta(s) / (1.0 - 2.0f64.powf(1.0 - s))
    } else {
        // functional equation ζ(s) = 2^s π^(s-1) sin(πs/2) Γ(1-s) ζ(1-s)
        let sin_term = (PI * s / 2.0).sin();
        if sin_term == 0.0 {
            return 0.0; // trivial zeros at negative even integers
        }
        2.0f64.powf(s) * PI.powf(s - 1.0) * sin_term * gamma_real(1.0 - s) * zeta(1.0 - s)
    }
}

const MAX_EXPANSION_TERMS: usize = 140;

/// Li_s(e^{iθ}) for real s and θ ∈ [-π, π], θ ≠ 0 when s ≤ 1.
///
/// Values on the lower half circle follow from Li_s(conj z) = conj Li_s(z).
pub fn li_on_circle(s: f64, theta: f64) -> Complex64 {
    assert!(theta.abs() <= PI + 1e-12, "theta must be normalized");
    if theta < 0.0 {
        return li_on_circle(s, -theta).conj();
    }
    if theta == 0.0 {
        assert!(s > 1.0, "polylog diverges at θ = 0 for s ≤ 1");
        return Complex64::new(zeta(s), 0.0);
    }
    let nearest = s.round();
    if (s - nearest).abs() < 1e-12 && nearest >= 0.0 {
        return li_integer_order(nearest as i64, theta);
    }
    let mu = Complex64::new(0.0, theta);
    // Γ(1-s)(-μ)^(s-1); -μ = θ e^{-iπ/2}
    let singular = Complex64::new(gamma_real(1.0 - s), 0.0)
        * (Complex64::new(theta.ln(), -PI / 2.0) * (s - 1.0)).exp();
    let mut acc = singular;
    let mut mu_pow = Complex64::new(1.0, 0.0);
    let mut kfact = 1.0f64;
    let mut small_streak = 0;
    for k in 0..MAX_EXPANSION_TERMS {
        if k > 0 {
            mu_pow *= mu;
            kfact *= k as f64;
        }
        let term = zeta(s - k as f64) * mu_pow / kfact;
        acc += term;
        // ζ vanishes at negative even integers, so a single tiny term is
        // not evidence of convergence.
        if k > 4 && term.norm() < 1e-17 * acc.norm().max(1.0) {
            small_streak += 1;
            if small_streak >= 3 {
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    acc
}

/// Positive integer order: series term k = s-1 degenerates into
/// μ^{s-1}/(s-1)! (H_{s-1} - log(-μ)).
fn li_integer_order(n: i64, theta: f64) -> Complex64 {
    let z = Complex64::new(theta.cos(), theta.sin());
    match n {
        0 => z / (Complex64::new(1.0, 0.0) - z),
        1 => -(Complex64::new(1.0, 0.0) - z).ln(),
        _ => {
            let mu = Complex64::new(0.0, theta);
            let log_neg_mu = Complex64::new(theta.ln(), -PI / 2.0);
            let mut harmonic = 0.0f64;
            for j in 1..n {
                harmonic += 1.0 / j as f64;
            }
            let mut fact = 1.0f64;
            for j in 2..n {
                fact *= j as f64;
            }
            let mut acc = mu.powi((n - 1) as i32) / fact * (Complex64::new(harmonic, 0.0) - log_neg_mu);
            let mut mu_pow = Complex64::new(1.0, 0.0);
            let mut kfact = 1.0f64;
            let mut small_streak = 0;
            for k in 0..MAX_EXPANSION_TERMS {
                if k > 0 {
                    mu_pow *= mu;
                    kfact *= k as f64;
                }
                if k as i64 == n - 1 {
                    continue;
                }
                let term = zeta((n - k as i64) as f64) * mu_pow / kfact;
                acc += term;
                if k > 4 && term.norm() < 1e-17 * acc.norm().max(1.0) {
                    small_streak += 1;
                    if small_streak >= 3 {
                        break;
                    }
                } else {
                    small_streak = 0;
                }
            }
            acc
        }
    }
}
