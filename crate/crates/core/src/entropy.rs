//! Rényi and von Neumann entropies from correlation spectra, together with
//! the contour-integral route and scaling fits.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EntropyError {
    #[error("f_alpha undefined: both powers vanish (x = {x}, y = {y})")]
    DomainError { x: f64, y: f64 },
    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("need at least 4 samples inside the fit window, found {0}")]
    InsufficientSamples(usize),
    #[error("contour quadrature failed to converge")]
    QuadratureFailure,
}

/// Entropy kernel f_α(x, y) = (1/(1-α)) log[((x+y)/2)^α + ((x-y)/2)^α].
///
/// At α = 1 the removable singularity is evaluated analytically as
/// -Σ p log p over p = (x±y)/2, with 0 log 0 = 0.
pub fn f_alpha(alpha: f64, x: f64, y: f64) -> Result<f64, EntropyError> {
    if alpha <= 0.0 {
        return Err(EntropyError::NonPositiveAlpha(alpha));
    }
    let p = 0.5 * (x + y);
    let q = 0.5 * (x - y);
    if p < -1e-14 || q < -1e-14 || (p <= 0.0 && q <= 0.0) {
        return Err(EntropyError::DomainError { x, y });
    }
    let p = p.max(0.0);
    let q = q.max(0.0);
    if alpha == 1.0 {
        let plogp = if p > 0.0 { p * p.ln() } else { 0.0 };
        let qlogq = if q > 0.0 { q * q.ln() } else { 0.0 };
        Ok(-(plogp + qlogq))
    } else {
        Ok((p.powf(alpha) + q.powf(alpha)).ln() / (1.0 - alpha))
    }
}

/// f_α continued to complex second argument (principal powers); used on
/// the integration contours, where x = 1 + ε keeps the arguments off the
/// branch cuts.
pub fn f_alpha_complex(alpha: f64, x: f64, lambda: Complex64) -> Complex64 {
    let p = 0.5 * (Complex64::new(x, 0.0) + lambda);
    let q = 0.5 * (Complex64::new(x, 0.0) - lambda);
    if alpha == 1.0 {
        let plogp = if p.norm() > 0.0 { p * p.ln() } else { Complex64::new(0.0, 0.0) };
        let qlogq = if q.norm() > 0.0 { q * q.ln() } else { Complex64::new(0.0, 0.0) };
        -(plogp + qlogq)
    } else {
        let pa = (p.ln() * alpha).exp();
        let qa = if q.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            (q.ln() * alpha).exp()
        };
        (pa + qa).ln() / (1.0 - alpha)
    }
}
