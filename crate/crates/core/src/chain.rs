//! Translation-invariant quadratic fermionic chains with finite-range or
//! power-law couplings.
//!
//! A chain is specified by hopping amplitudes A_l (A_{-l} = conj A_l, A_0
//! real) and pairing amplitudes B_l (B_{-l} = -B_l, B_0 = 0). The momentum
//! functions
//!
//!   F(θ) = Σ_l A_l e^{ilθ},   G(θ) = Σ_l B_l e^{ilθ} = 2i Σ_{l≥1} B_l sin lθ,
//!
//! split into F^S, F^A (even/odd parts of F) and yield the dispersion
//! Λ(θ) = Λ^S(θ) + F^A(θ) with Λ^S = sqrt((F^S)² + |G|²) ≥ 0. Negative
//! Λ modes fill the ground-state Dirac sea; everything downstream (symbol
//! classification, correlation matrices, entropies) is driven by these
//! few functions.

use crate::special;
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ChainError {
    #[error("A_0 must be real (|Im A_0| = {0:e} exceeds 1e-14)")]
    NonRealA0(f64),
    #[error("coupling range must be at least 1")]
    NonPositiveRange,
    #[error("polylog order {zeta} diverges at θ = 0")]
    DivergentPoint { zeta: f64 },
    #[error("pairing exponent must be positive, got {0}")]
    NonPositiveExponent(f64),
}

/// How the power-law pairing B_l = l^{-ζ} is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PowerLawEval {
    /// Keep couplings up to l_max and drop the rest (a finite-range chain).
    Truncated { l_max: usize },
    /// Thermodynamic-limit evaluation through the polylogarithm.
    Analytic,
}

/// Pairing sector of a chain.
#[derive(Debug, Clone, PartialEq)]
pub enum Pairing {
    /// Explicit amplitudes B_1..B_L.
    Finite(Vec<Complex64>),
    /// B_l = l^{-ζ}, l ≥ 1.
    PowerLaw { zeta: f64, eval: PowerLawEval },
}

/// Hopping and pairing amplitudes of a translation-invariant chain.
#[derive(Debug, Clone, PartialEq)]
pub struct CouplingSet {
    /// Real on-site term A_0 (chemical potential).
    a0: f64,
    /// Hopping amplitudes A_1..A_L; A_{-l} is implied as the conjugate.
    a: Vec<Complex64>,
    pairing: Pairing,
    /// Global pairing phase ψ; `validate` absorbs it into the B_l.
    global_phase: f64,
}

impl CouplingSet {
    pub fn new(a0: f64, a: Vec<Complex64>, b: Vec<Complex64>) -> Self {
        Self {
            a0,
            a,
            pairing: Pairing::Finite(b),
            global_phase: 0.0,
        }
    }

    pub fn with_phase(mut self, psi: f64) -> Self {
        self.global_phase = psi;
        self
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn hopping(&self) -> &[Complex64] {
        &self.a
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn global_phase(&self) -> f64 {
        self.global_phase
    }

    /// Hopping range (always finite).
    pub fn hopping_range(&self) -> usize {
        self.a.len()
    }

    /// Coupling range L, if the chain is finite ranged; power-law chains in
    /// truncated mode report their cutoff.
    pub fn range(&self) -> Option<usize> {
        match &self.pairing {
            Pairing::Finite(b) => Some(self.a.len().max(b.len()).max(1)),
            Pairing::PowerLaw {
                eval: PowerLawEval::Truncated { l_max },
                ..
            } => Some(self.a.len().max(*l_max)),
            Pairing::PowerLaw {
                eval: PowerLawEval::Analytic,
                ..
            } => None,
        }
    }

    pub fn is_long_range(&self) -> bool {
        matches!(self.pairing, Pairing::PowerLaw { .. })
    }

    /// Pairing exponent for power-law chains.
    pub fn power_law_zeta(&self) -> Option<f64> {
        match &self.pairing {
            Pairing::PowerLaw { zeta, .. } => Some(*zeta),
            Pairing::Finite(_) => None,
        }
    }

    /// B_l for l ≥ 1. Power-law chains honour their truncation.
    pub fn pairing_amplitude(&self, l: usize) -> Complex64 {
        match &self.pairing {
            Pairing::Finite(b) => b.get(l - 1).copied().unwrap_or_default(),
            Pairing::PowerLaw { zeta, eval } => {
                let cutoff = match eval {
                    PowerLawEval::Truncated { l_max } => *l_max,
                    PowerLawEval::Analytic => usize::MAX,
                };
                if l >= 1 && l <= cutoff {
                    Complex64::new((l as f64).powf(-zeta), 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
        }
    }

    /// F(θ) = A_0 + 2 Σ_{l≥1} Re(A_l e^{ilθ}); real by construction.
    pub fn f_at(&self, theta: f64) -> f64 {
        let mut f = self.a0;
        for (i, al) in self.a.iter().enumerate() {
            let l = (i + 1) as f64;
            f += 2.0 * (al * Complex64::from_polar(1.0, l * theta)).re;
        }
        f
    }

    /// G(θ) = 2i Σ_{l≥1} B_l sin lθ.
    pub fn g_at(&self, theta: f64) -> Complex64 {
        match &self.pairing {
            Pairing::Finite(b) => {
                let mut g = Complex64::new(0.0, 0.0);
                for (i, bl) in b.iter().enumerate() {
                    let l = (i + 1) as f64;
                    g += bl * Complex64::new(0.0, 2.0 * (l * theta).sin());
                }
                g
            }
            Pairing::PowerLaw { zeta, eval } => match eval {
                PowerLawEval::Truncated { l_max } => {
                    // Kahan-compensated sine series; exact for the truncated chain.
                    let mut sum = 0.0f64;
                    let mut comp = 0.0f64;
                    for l in 1..=*l_max {
                        let lf = l as f64;
                        let term = (lf * theta).sin() * lf.powf(-zeta);
                        let y = term - comp;
                        let t = sum + y;
                        comp = (t - sum) - y;
                        sum = t;
                    }
                    Complex64::new(0.0, 2.0 * sum)
                }
                PowerLawEval::Analytic => {
                    let th = normalize_angle(theta);
                    if th == 0.0 {
                        // odd series: 0 when convergent, otherwise the
                        // divergence that seeds an MM discontinuity
                        if *zeta > 1.0 {
                            Complex64::new(0.0, 0.0)
                        } else {
                            Complex64::new(0.0, f64::INFINITY)
                        }
                    } else {
                        Complex64::new(0.0, 2.0 * special::li_on_circle(*zeta, th).im)
                    }
                }
            },
        }
    }

    /// dF^S/dθ and dG/dθ, used to resolve lateral limits where Λ^S → 0.
    pub fn fs_g_derivatives(&self, theta: f64) -> (f64, Complex64) {
        let mut dfs = 0.0;
        for (i, al) in self.a.iter().enumerate() {
            let l = (i + 1) as f64;
            // d/dθ of 2 Re(A_l e^{ilθ}) keeping only the even part
            dfs += -2.0 * l * al.re * (l * theta).sin();
        }
        let dg = match &self.pairing {
            Pairing::Finite(b) => {
                let mut d = Complex64::new(0.0, 0.0);
                for (i, bl) in b.iter().enumerate() {
                    let l = (i + 1) as f64;
                    d += bl * Complex64::new(0.0, 2.0 * l * (l * theta).cos());
                }
                d
            }
            Pairing::PowerLaw { zeta, eval } => match eval {
                PowerLawEval::Truncated { l_max } => {
                    let mut sum = 0.0f64;
                    for l in 1..=*l_max {
                        let lf = l as f64;
                        sum += lf.powf(1.0 - zeta) * (lf * theta).cos();
                    }
                    Complex64::new(0.0, 2.0 * sum)
                }
                PowerLawEval::Analytic => {
                    // dG/dθ = 2i Re Li_{ζ-1}(e^{iθ})
                    let th = normalize_angle(theta);
                    Complex64::new(0.0, 2.0 * special::li_on_circle(zeta - 1.0, th).re)
                }
            },
        };
        (dfs, dg)
    }

    /// Tail bound on |G| dropped by a truncated power-law chain, relative to
    /// the full series, at angle θ.
    pub fn truncation_tail_bound(&self, theta: f64) -> f64 {
        match &self.pairing {
            Pairing::PowerLaw {
                zeta,
                eval: PowerLawEval::Truncated { l_max },
            } => {
                let s = (normalize_angle(theta) / 2.0).sin().abs();
                if s == 0.0 {
                    f64::INFINITY
                } else {
                    2.0 * ((*l_max + 1) as f64).powf(-zeta) / s
                }
            }
            _ => 0.0,
        }
    }
}

/// Normalize an angle into (-π, π].
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

/// Symbol data at one angle: F and its even/odd parts, G, and the
/// dispersion Λ = Λ^S + F^A.
#[derive(Debug, Clone, Copy)]
pub struct SymbolSlice {
    pub theta: f64,
    pub f: f64,
    pub fs: f64,
    pub fa: f64,
    pub g: Complex64,
    pub lambda_s: f64,
    pub lambda: f64,
}

/// Evaluate the symbol functions at θ ∈ (-π, π].
pub fn symbol_slice(c: &CouplingSet, theta: f64) -> SymbolSlice {
    let theta = normalize_angle(theta);
    let f = c.f_at(theta);
    let f_neg = c.f_at(-theta);
    let fs = 0.5 * (f + f_neg);
    let fa = 0.5 * (f - f_neg);
    let g = c.g_at(theta);
    let lambda_s = (fs * fs + g.norm_sqr()).sqrt();
    SymbolSlice {
        theta,
        f,
        fs,
        fa,
        g,
        lambda_s,
        lambda: lambda_s + fa,
    }
}

/// Check and normalize a coupling set: A_0 must be real, the range
/// positive, and the global phase ψ is absorbed into the pairing
/// amplitudes (B_l → e^{iψ/2} B_l, the redefinition a_n → e^{iψ/4} a_n).
pub fn validate(c: CouplingSet) -> Result<CouplingSet, ChainError> {
    if let Pairing::PowerLaw { zeta, .. } = &c.pairing {
        if *zeta <= 0.0 {
            return Err(ChainError::NonPositiveExponent(*zeta));
        }
    }
    if c.range().is_some_and(|l| l < 1) || (c.a.is_empty() && matches!(&c.pairing, Pairing::Finite(b) if b.is_empty()))
    {
        return Err(ChainError::NonPositiveRange);
    }
    let mut c = c;
    if c.global_phase != 0.0 {
        let phase = Complex64::from_polar(1.0, c.global_phase / 2.0);
        if let Pairing::Finite(b) = &mut c.pairing {
            for bl in b.iter_mut() {
                *bl *= phase;
            }
        }
        c.global_phase = 0.0;
    }
    Ok(c)
}

/// Validate the stored A_0 against the hermiticity requirement. Kept
/// separate so builders can pass complex intermediates around.
pub fn check_a0(a0: Complex64) -> Result<f64, ChainError> {
    if a0.im.abs() >= 1e-14 {
        return Err(ChainError::NonRealA0(a0.im.abs()));
    }
    Ok(a0.re)
}

/// Ground-state energy offset ℰ = ½ Σ_k F(θ_k) on an N-site chain.
pub fn energy_offset(c: &CouplingSet, n_sites: usize) -> f64 {
    let l = c.hopping_range();
    assert!(n_sites > 2 * l, "need N > 2L (N = {n_sites}, L = {l})");
    let mut acc = 0.0;
    for k in 0..n_sites {
        acc += c.f_at(2.0 * PI * k as f64 / n_sites as f64);
    }
    0.5 * acc
}

/// XY chain parameters with an added antisymmetric (Dzyaloshinski-Moriya)
/// exchange s and transverse field h; t is the symmetric hopping scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DmParams {
    pub t: f64,
    pub gamma: f64,
    pub s: f64,
    pub h: f64,
}

impl DmParams {
    pub fn new(gamma: f64, s: f64, h: f64) -> Self {
        Self {
            t: 1.0,
            gamma,
            s,
            h,
        }
    }
}

/// Fermionic couplings of the DM chain: A_0 = h, A_1 = t - i s, B_1 = γ,
/// so that F^S = h + 2t cos θ, F^A = 2s sin θ and |G|² = 4γ² sin²θ.
pub fn build_dm(p: &DmParams) -> CouplingSet {
    CouplingSet::new(
        p.h,
        vec![Complex64::new(p.t, -p.s)],
        vec![Complex64::new(p.gamma, 0.0)],
    )
}

/// Kitaev chain with power-law pairing B_l = l^{-ζ}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KitaevParams {
    pub h: f64,
    pub zeta: f64,
    pub eval: PowerLawEval,
}

pub fn build_kitaev(p: &KitaevParams) -> Result<CouplingSet, ChainError> {
    if p.zeta <= 0.0 {
        return Err(ChainError::NonPositiveExponent(p.zeta));
    }
    if let PowerLawEval::Truncated { l_max } = p.eval {
        assert!(l_max >= 1, "truncation cutoff must be at least 1");
    }
    Ok(CouplingSet {
        a0: p.h,
        a: vec![Complex64::new(1.0, 0.0)],
        pairing: Pairing::PowerLaw {
            zeta: p.zeta,
            eval: p.eval,
        },
        global_phase: 0.0,
    })
}

/// G_ζ(θ) = Li_ζ(e^{iθ}) - Li_ζ(e^{-iθ}) = 2i Σ_{l≥1} sin(lθ)/l^ζ.
///
/// Purely imaginary; the evaluation error is far below `tol` for any
/// θ ∈ (-π, π] away from the ζ ≤ 1 divergence at θ = 0.
pub fn polylog_g(zeta: f64, theta: f64, _tol: f64) -> Result<Complex64, ChainError> {
    if zeta <= 0.0 {
        return Err(ChainError::NonPositiveExponent(zeta));
    }
    let th = normalize_angle(theta);
    if th == 0.0 {
        if zeta <= 1.0 {
            return Err(ChainError::DivergentPoint { zeta });
        }
        return Ok(Complex64::new(0.0, 0.0));
    }
    Ok(Complex64::new(
        0.0,
        2.0 * special::li_on_circle(zeta, th).im,
    ))
}

/// Phase-diagram region of the DM chain at t = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DmRegion {
    /// Gapless, Dirac sea present (central charge 1).
    A,
    /// Gapless line h = 2, Δ < 0 (central charge 1/2).
    B,
    /// Gapped, 0 < x < 1, γ² > s².
    OneA,
    /// Gapped, x > 1, γ² > s².
    OneB,
    /// Gapped, x < 0, γ²(1 - x) > s².
    Two,
    /// On a phase boundary.
    Boundary,
}

impl std::fmt::Display for DmRegion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DmRegion::A => "A",
            DmRegion::B => "B",
            DmRegion::OneA => "1a",
            DmRegion::OneB => "1b",
            DmRegion::Two => "2",
            DmRegion::Boundary => "boundary",
        };
        write!(f, "{s}")
    }
}

/// x = (1 - (h/2)²)/γ²; labels the constant-entropy conics of the gapped
/// regions.
pub fn dm_x(p: &DmParams) -> f64 {
    (1.0 - (p.h / 2.0).powi(2)) / (p.gamma * p.gamma)
}

const H_LINE_TOL: f64 = 1e-12;

/// Region classification in the (γ, h) plane at fixed s, t = 1.
pub fn dm_region(p: &DmParams) -> DmRegion {
    assert!(
        (p.t - 1.0).abs() < 1e-12,
        "region classification assumes the rescaled t = 1 chain"
    );
    let delta = p.s * p.s - p.gamma * p.gamma;
    let half_h_sq = (p.h / 2.0) * (p.h / 2.0);
    if delta > 0.0 && half_h_sq - delta < 1.0 {
        return DmRegion::A;
    }
    if delta < 0.0 && (p.h - 2.0).abs() <= H_LINE_TOL {
        return DmRegion::B;
    }
    let x = dm_x(p);
    let g2 = p.gamma * p.gamma;
    let s2 = p.s * p.s;
    if x > 0.0 && x < 1.0 && g2 > s2 {
        DmRegion::OneA
    } else if x > 1.0 && g2 > s2 {
        DmRegion::OneB
    } else if x < 0.0 && g2 * (1.0 - x) > s2 {
        DmRegion::Two
    } else {
        DmRegion::Boundary
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() < tol, "{what}: {a} vs {b}");
    }

    #[test]
    fn validate_accepts_identity_case() {
        let c = CouplingSet::new(1.0, vec![Complex64::new(0.0, 0.0)], vec![]);
        let v = validate(c.clone()).unwrap();
        assert_eq!(v, c);
    }

    #[test]
    fn validate_rejects_complex_a0() {
        assert_eq!(
            check_a0(Complex64::new(1.0, 0.1)),
            Err(ChainError::NonRealA0(0.1))
        );
        assert!(check_a0(Complex64::new(1.0, 1e-15)).is_ok());
    }

    #[test]
    fn validate_phase_normalization_is_noop_at_zero() {
        let dm = build_dm(&DmParams::new(0.5, 0.75, 0.5));
        let v = validate(dm.clone()).unwrap();
        assert_eq!(v, dm);
    }

    #[test]
    fn validate_absorbs_global_phase() {
        let psi = 0.8;
        let c = CouplingSet::new(
            0.3,
            vec![Complex64::new(1.0, 0.0)],
            vec![Complex64::new(0.5, 0.2)],
        )
        .with_phase(psi);
        let v = validate(c).unwrap();
        assert_eq!(v.global_phase(), 0.0);
        let expected = Complex64::new(0.5, 0.2) * Complex64::from_polar(1.0, psi / 2.0);
        assert!((v.pairing_amplitude(1) - expected).norm() < 1e-15);
    }

    #[test]
    fn symbol_slice_xx_at_zero() {
        // A_0 = 0, A_1 = 1, no pairing: F(0) = 2, Λ(0) = 2
        let c = CouplingSet::new(0.0, vec![Complex64::new(1.0, 0.0)], vec![]);
        let s = symbol_slice(&c, 0.0);
        assert_close(s.f, 2.0, 1e-15, "F(0)");
        assert_close(s.lambda, 2.0, 1e-15, "Λ(0)");
        assert_eq!(s.g, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn symbol_slice_g_is_odd() {
        let c = CouplingSet::new(
            0.4,
            vec![Complex64::new(0.7, -0.2), Complex64::new(0.1, 0.3)],
            vec![Complex64::new(0.5, 0.1), Complex64::new(-0.2, 0.4)],
        );
        for &theta in &[0.3, 1.1, 2.9] {
            let sp = symbol_slice(&c, theta);
            let sm = symbol_slice(&c, -theta);
            assert!((sp.g + sm.g).norm() < 1e-12, "G odd at θ = {theta}");
            assert_close(sp.lambda_s, sm.lambda_s, 1e-12, "Λ^S even");
            assert_close(sp.fa, -sm.fa, 1e-12, "F^A odd");
            assert_close(sp.fs, 0.5 * (sp.f + sm.f), 1e-12, "F^S recombination");
        }
    }

    #[test]
    fn symbol_slice_dm_dirac_sea_angle() {
        // at θ = π/2: Λ^S = sqrt(h² + 4γ²) = sqrt(1.25), F^A = 2s = 1.5
        let c = build_dm(&DmParams::new(0.5, 0.75, 0.5));
        let s = symbol_slice(&c, PI / 2.0);
        assert_close(s.lambda_s, 1.25f64.sqrt(), 1e-14, "Λ^S(π/2)");
        assert_close(s.fa, 1.5, 1e-14, "F^A(π/2)");
        assert!(s.fa.abs() > s.lambda_s);
        // mirror angle dives below zero: the Dirac sea
        let m = symbol_slice(&c, -PI / 2.0);
        assert!(m.lambda < 0.0);
    }

    #[test]
    fn dm_dispersion_formula_holds_at_random_angles() {
        let p = DmParams::new(0.5, 0.75, 0.5);
        let c = build_dm(&p);
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..100 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let theta = (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 * PI - PI;
            let s = symbol_slice(&c, theta);
            let lam_s = ((p.h + 2.0 * p.t * theta.cos()).powi(2)
                + 4.0 * p.gamma * p.gamma * theta.sin().powi(2))
            .sqrt();
            assert_close(s.lambda_s, lam_s, 1e-12, "Λ^S");
            assert_close(s.lambda, lam_s + 2.0 * p.s * theta.sin(), 1e-12, "Λ");
            assert!(s.lambda_s >= 0.0);
            assert_close(s.f, s.fs + s.fa, 1e-12, "F = F^S + F^A");
        }
    }

    #[test]
    fn dm_limit_cases() {
        // γ = s = h = 0 is the XX chain: G ≡ 0
        let c = build_dm(&DmParams::new(0.0, 0.0, 0.0));
        for &theta in &[0.2, 1.0, 2.0] {
            assert_eq!(symbol_slice(&c, theta).g, Complex64::new(0.0, 0.0));
        }
        // region-B parameters close the gap at θ = π
        let c = build_dm(&DmParams::new(1.5, 0.75, 2.0));
        let s = symbol_slice(&c, PI);
        assert_close(s.lambda, 0.0, 1e-14, "Λ(π) at h = 2");
    }

    #[test]
    fn energy_offset_cases() {
        // constant F: ℰ = N h / 2
        let c = CouplingSet::new(3.0, vec![Complex64::new(0.0, 0.0)], vec![]);
        assert_close(energy_offset(&c, 4), 6.0, 1e-14, "constant F");
        // pure cosine sums to zero over a full period
        let c = CouplingSet::new(0.0, vec![Complex64::new(1.0, 0.0)], vec![]);
        assert_close(energy_offset(&c, 4), 0.0, 1e-13, "cosine sum");
        // DM chain against an independent term-by-term sum
        let p = DmParams::new(0.5, 0.75, 0.5);
        let c = build_dm(&p);
        let n = 8;
        let mut expect = 0.0;
        for k in 0..n {
            let th = 2.0 * PI * k as f64 / n as f64;
            expect += p.h + 2.0 * p.t * th.cos() + 2.0 * p.s * th.sin();
        }
        assert_close(energy_offset(&c, n), 0.5 * expect, 1e-12, "DM offset");
    }

    #[test]
    fn kitaev_damping_limit_is_short_ranged() {
        let c = build_kitaev(&KitaevParams {
            h: 0.0,
            zeta: 40.0,
            eval: PowerLawEval::Truncated { l_max: 64 },
        })
        .unwrap();
        assert_close(c.pairing_amplitude(1).re, 1.0, 1e-15, "B_1");
        assert!(c.pairing_amplitude(2).norm() < 1e-12, "B_2 ~ 0");
    }

    #[test]
    fn kitaev_small_angle_behaviour_tracks_zeta() {
        let fin = build_kitaev(&KitaevParams {
            h: 0.0,
            zeta: 1.5,
            eval: PowerLawEval::Analytic,
        })
        .unwrap();
        let div = build_kitaev(&KitaevParams {
            h: 0.0,
            zeta: 0.5,
            eval: PowerLawEval::Analytic,
        })
        .unwrap();
        let near = 1e-6;
        assert!(symbol_slice(&fin, near).g.norm() < 10.0, "ζ = 1.5 stays finite");
        assert!(
            symbol_slice(&div, near).g.norm() > 1e2,
            "ζ = 0.5 diverges towards θ = 0"
        );
    }

    #[test]
    fn polylog_g_basics() {
        // sin(lπ) = 0 term by term
        let v = polylog_g(2.0, PI, 1e-12).unwrap();
        assert!(v.norm() < 1e-13);
        // Catalan value at θ = π/2 (oracle: alternating series)
        let mut catalan = 0.0f64;
        let mut sign = 1.0f64;
        for k in 0..800_000u64 {
            catalan += sign / ((2 * k + 1) as f64).powi(2);
            sign = -sign;
        }
        let v = polylog_g(2.0, PI / 2.0, 1e-12).unwrap();
        assert_close(v.im, 2.0 * catalan, 2e-6, "2·Catalan (slow oracle)");
        assert_close(v.im, 1.8319311883544380, 1e-12, "2·Catalan");
        assert_eq!(v.re, 0.0, "purely imaginary");
        // divergence guard
        assert!(matches!(
            polylog_g(0.5, 0.0, 1e-10),
            Err(ChainError::DivergentPoint { .. })
        ));
        assert!(polylog_g(1.5, 0.0, 1e-10).is_ok());
    }

    #[test]
    fn truncated_polylog_matches_doubled_cutoff_within_tail_bound() {
        let zeta = 1.3;
        let c1 = build_kitaev(&KitaevParams {
            h: 0.0,
            zeta,
            eval: PowerLawEval::Truncated { l_max: 2000 },
        })
        .unwrap();
        let c2 = build_kitaev(&KitaevParams {
            h: 0.0,
            zeta,
            eval: PowerLawEval::Truncated { l_max: 4000 },
        })
        .unwrap();
        for &theta in &[0.4, 1.7, 2.6] {
            let g1 = symbol_slice(&c1, theta).g;
            let g2 = symbol_slice(&c2, theta).g;
            assert!(
                (g1 - g2).norm() <= c1.truncation_tail_bound(theta),
                "tail bound violated at θ = {theta}"
            );
        }
    }

    #[test]
    fn dm_regions() {
        assert_eq!(dm_region(&DmParams::new(0.5, 0.75, 0.5)), DmRegion::A);
        assert_eq!(dm_region(&DmParams::new(1.5, 0.75, 2.0)), DmRegion::B);
        let p = DmParams::new(1.0, 0.0, 1.0);
        assert_eq!(dm_region(&p), DmRegion::OneA);
        assert_close(dm_x(&p), 0.75, 1e-15, "x");
        assert_eq!(dm_region(&DmParams::new(0.5, 0.0, 1.0)), DmRegion::OneB); // x = 3
        assert_eq!(dm_region(&DmParams::new(1.0, 0.0, 3.0)), DmRegion::Two); // x < 0
        // Δ = 0 with the rest generic lands on a boundary
        assert_eq!(dm_region(&DmParams::new(0.75, 0.75, 0.5)), DmRegion::Boundary);
    }
}
