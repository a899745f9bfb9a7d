//! Pointwise classification of the ground-state symbol, location and
//! typing of its jump discontinuities, and the asymptotic determinant
//! coefficients they generate.
//!
//! The thermodynamic ground-state symbol takes one of three values,
//!
//!   Ĝ(θ) = -I   where F^A < -Λ^S,
//!   Ĝ(θ) = M(θ) where |F^A| < Λ^S,   M = [[F^S, G], [conj G, -F^S]]/Λ^S,
//!   Ĝ(θ) = +I   where F^A > Λ^S,
//!
//! so jumps come in three kinds: M↔±I (`MI`), -I↔+I (`II`) and a sign
//! flip of M itself where Λ^S hits zero (`MM`). Each jump with commuting
//! lateral limits contributes log|X| times a coefficient built from
//! b_MI(λ) = (1/4π²) log²((λ+1)/(λ-1)) to the log-determinant of the
//! correlation matrix.

use crate::chain::{self, CouplingSet, Pairing, PowerLawEval, SymbolSlice};
use crate::entropy::f_alpha_complex;
use crate::quad::adaptive_gk15;
use nalgebra::Matrix2;
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SymbolError {
    #[error("θ = {theta} sits on a symbol discontinuity")]
    OnDiscontinuity { theta: f64 },
    #[error("λ = {0} lies on the branch cut [-1, 1]")]
    BranchCut(Complex64),
    #[error("lateral limits do not commute (commutator norm {0:e}); unsupported")]
    NonCommutingLimits(f64),
    #[error("discontinuity multiset fits no archetype combination: {0}")]
    UnclassifiableConfiguration(String),
    #[error("contour quadrature failed to converge")]
    QuadratureFailure,
}

/// One of the three values the ground-state symbol can take.
#[derive(Debug, Clone, PartialEq)]
pub enum SymbolBranch {
    MinusI,
    M(Matrix2<Complex64>),
    PlusI,
}

impl SymbolBranch {
    pub fn matrix(&self) -> Matrix2<Complex64> {
        match self {
            SymbolBranch::MinusI => -Matrix2::identity(),
            SymbolBranch::PlusI => Matrix2::identity(),
            SymbolBranch::M(m) => *m,
        }
    }

    pub fn is_scalar(&self) -> bool {
        !matches!(self, SymbolBranch::M(_))
    }

    fn tag(&self) -> &'static str {
        match self {
            SymbolBranch::MinusI => "-I",
            SymbolBranch::M(_) => "M",
            SymbolBranch::PlusI => "+I",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JumpKind {
    /// M(θ) against ±I.
    MI,
    /// -I against +I.
    II,
    /// M(θ) against -M(θ): Λ^S vanishes with distinct lateral limits.
    MM,
}

impl std::fmt::Display for JumpKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            JumpKind::MI => "MI",
            JumpKind::II => "II",
            JumpKind::MM => "MM",
        };
        write!(f, "{s}")
    }
}

/// A located symbol jump with its lateral limits.
#[derive(Debug, Clone)]
pub struct Discontinuity {
    pub theta: f64,
    pub kind: JumpKind,
    pub left: SymbolBranch,
    pub right: SymbolBranch,
}

impl Discontinuity {
    /// Frobenius norm of the commutator of the lateral limits.
    pub fn commutator_norm(&self) -> f64 {
        let a = self.left.matrix();
        let b = self.right.matrix();
        (a * b - b * a).norm()
    }
}

/// Non-fatal findings of the discontinuity search.
#[derive(Debug, Clone)]
pub enum SearchWarning {
    /// Λ^S - |F^A| (or Λ^S itself) touches zero without the lateral
    /// limits separating; the symbol stays continuous there.
    UnresolvedDegeneracy { theta: f64 },
    /// G jumps at θ = 0 with non-commuting lateral limits of M (power-law
    /// pairing at ζ = 1); excluded from the discontinuity list.
    NonCommutingJump { theta: f64 },
}

#[derive(Debug, Clone, Default)]
pub struct DiscontinuitySet {
    pub discontinuities: Vec<Discontinuity>,
    pub warnings: Vec<SearchWarning>,
}

const ON_DISC_TOL: f64 = 1e-13;

/// Classify the symbol at one angle. Errors when θ is indistinguishable
/// from a discontinuity at working precision.
pub fn classify_symbol(c: &CouplingSet, theta: f64) -> Result<SymbolBranch, SymbolError> {
    let s = chain::symbol_slice(c, theta);
    if s.lambda_s < ON_DISC_TOL || (s.lambda_s - s.fa.abs()).abs() < ON_DISC_TOL {
        return Err(SymbolError::OnDiscontinuity { theta: s.theta });
    }
    Ok(branch_of_slice(&s))
}

fn branch_of_slice(s: &SymbolSlice) -> SymbolBranch {
    if s.fa > s.lambda_s {
        SymbolBranch::PlusI
    } else if s.fa < -s.lambda_s {
        SymbolBranch::MinusI
    } else {
        SymbolBranch::M(m_matrix(s))
    }
}

fn m_matrix(s: &SymbolSlice) -> Matrix2<Complex64> {
    let inv = 1.0 / s.lambda_s;
    Matrix2::new(
        Complex64::new(s.fs * inv, 0.0),
        s.g * inv,
        s.g.conj() * inv,
        Complex64::new(-s.fs * inv, 0.0),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BranchTag {
    Minus,
    Mid,
    Plus,
}

fn tag_of_slice(s: &SymbolSlice) -> BranchTag {
    if s.fa > s.lambda_s {
        BranchTag::Plus
    } else if s.fa < -s.lambda_s {
        BranchTag::Minus
    } else {
        BranchTag::Mid
    }
}

/// Locate every symbol discontinuity on (-π, π].
///
/// Branch changes are bracketed on a uniform grid (offset so that 0 and π
/// never land on a node) and bisected to `tol_theta`; zeros of Λ^S inside
/// the M region are found by golden-section refinement of local minima.
/// Power-law pairing with ζ < 1 injects its divergence-driven jump at
/// θ = 0 analytically, with lateral limits ±σ^y.
pub fn find_discontinuities(
    c: &CouplingSet,
    grid_n: usize,
    tol_theta: f64,
) -> Result<DiscontinuitySet, SymbolError> {
    assert!(grid_n >= 1024, "grid too coarse for reliable bracketing");
    let mut out = DiscontinuitySet::default();

    let analytic_divergence = matches!(
        c.pairing(),
        Pairing::PowerLaw {
            eval: PowerLawEval::Analytic,
            ..
        }
    );
    let zeta = c.power_law_zeta();
    if analytic_divergence {
        if let Some(z) = zeta {
            if (z - 1.0).abs() < 1e-9 {
                out.warnings.push(SearchWarning::NonCommutingJump { theta: 0.0 });
            } else if z < 1.0 {
                out.discontinuities.push(divergence_jump());
            }
        }
    }

    let step = 2.0 * PI / grid_n as f64;
    let angle = |i: usize| -PI + (i as f64 + 0.5) * step;
    let slices: Vec<SymbolSlice> = (0..grid_n).map(|i| chain::symbol_slice(c, angle(i))).collect();
    let tags: Vec<BranchTag> = slices.iter().map(tag_of_slice).collect();

    // Branch changes between (cyclically) adjacent nodes.
    for i in 0..grid_n {
        let j = (i + 1) % grid_n;
        if tags[i] == tags[j] {
            continue;
        }
        // unwrapped bracket [lo, hi]
        let lo = angle(i);
        let hi = if j == 0 { angle(j) + 2.0 * PI } else { angle(j) };
        // guard against the injected divergence point: it is already listed
        if analytic_divergence && zeta.is_some_and(|z| z < 1.0) && lo < 0.0 && hi > 0.0 {
            continue;
        }
        match (tags[i], tags[j]) {
            (BranchTag::Mid, _) | (_, BranchTag::Mid) => {
                let d = |t: f64| {
                    let s = chain::symbol_slice(c, t);
                    s.lambda_s - s.fa.abs()
                };
                let root = bisect(&d, lo, hi, tol_theta);
                out.discontinuities.push(mi_jump(c, root));
            }
            _ => {
                let fa = |t: f64| chain::symbol_slice(c, t).fa;
                let root = bisect(&fa, lo, hi, tol_theta);
                out.discontinuities.push(ii_jump(c, root));
            }
        }
    }

    // Zeros of Λ^S strictly inside the M region (MM jumps). H = (Λ^S)² is
    // smooth, so bracket its local minima on the grid and refine.
    let h_of = |t: f64| {
        let s = chain::symbol_slice(c, t);
        s.fs * s.fs + s.g.norm_sqr()
    };
    for i in 0..grid_n {
        let prev = (i + grid_n - 1) % grid_n;
        let next = (i + 1) % grid_n;
        if tags[prev] != BranchTag::Mid || tags[i] != BranchTag::Mid || tags[next] != BranchTag::Mid
        {
            continue;
        }
        let h_prev = slices[prev].lambda_s.powi(2);
        let h_here = slices[i].lambda_s.powi(2);
        let h_next = slices[next].lambda_s.powi(2);
        if !(h_here <= h_prev && h_here < h_next) {
            continue;
        }
        // unwrapped bracket around the minimum
        let mut lo = angle(i) - step;
        let mut hi = angle(i) + step;
        if i == 0 {
            lo = angle(0) - step;
        }
        if i == grid_n - 1 {
            hi = angle(grid_n - 1) + step;
        }
        let (theta_min, h_min) = golden_min(&h_of, lo, hi);
        if h_min.sqrt() >= 1e-10 {
            continue;
        }
        let theta0 = snap_axis(chain::normalize_angle(theta_min));
        if analytic_divergence && theta0 == 0.0 {
            continue; // covered by the injected jump (or its warning)
        }
        let (dfs, dg) = c.fs_g_derivatives(theta0);
        let dnorm = (dfs * dfs + dg.norm_sqr()).sqrt();
        if dnorm < 1e-8 {
            // even-order common zero: lateral limits coincide
            out.warnings
                .push(SearchWarning::UnresolvedDegeneracy { theta: theta0 });
            continue;
        }
        let dir = Matrix2::new(
            Complex64::new(dfs / dnorm, 0.0),
            dg / dnorm,
            dg.conj() / dnorm,
            Complex64::new(-dfs / dnorm, 0.0),
        );
        out.discontinuities.push(Discontinuity {
            theta: theta0,
            kind: JumpKind::MM,
            left: SymbolBranch::M(-dir),
            right: SymbolBranch::M(dir),
        });
    }

    // Tangential touching of Λ^S = |F^A| inside the M region: a warning,
    // not a discontinuity.
    for i in 0..grid_n {
        let prev = (i + grid_n - 1) % grid_n;
        let next = (i + 1) % grid_n;
        if tags[prev] != BranchTag::Mid || tags[i] != BranchTag::Mid || tags[next] != BranchTag::Mid
        {
            continue;
        }
        let d_at = |k: usize| slices[k].lambda_s - slices[k].fa.abs();
        if d_at(i) <= d_at(prev) && d_at(i) < d_at(next) && d_at(i) < 1e-6 && d_at(i) > 0.0 {
            let dfun = |t: f64| {
                let s = chain::symbol_slice(c, t);
                s.lambda_s - s.fa.abs()
            };
            let (theta_min, dmin) = golden_min(&dfun, angle(i) - step, angle(i) + step);
            if dmin.abs() < 1e-10 && slices[i].lambda_s > 1e-8 {
                out.warnings.push(SearchWarning::UnresolvedDegeneracy {
                    theta: snap_axis(chain::normalize_angle(theta_min)),
                });
            }
        }
    }

    out.discontinuities
        .sort_by(|a, b| a.theta.partial_cmp(&b.theta).unwrap());
    out.discontinuities.dedup_by(|a, b| (a.theta - b.theta).abs() < 1e-9);
    Ok(out)
}

/// Convenience wrapper with the default grid (4096 nodes, bisection to
/// 1e-12).
pub fn find_discontinuities_default(c: &CouplingSet) -> Result<DiscontinuitySet, SymbolError> {
    find_discontinuities(c, 4096, 1e-12)
}

fn divergence_jump() -> Discontinuity {
    // lateral limits of M at the ζ < 1 divergence: ∓(G/|G|)-type, i.e. ±σ^y
    let zero = Complex64::new(0.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let sigma_y_like = Matrix2::new(zero, -i, i, zero);
    Discontinuity {
        theta: 0.0,
        kind: JumpKind::MM,
        left: SymbolBranch::M(-sigma_y_like),
        right: SymbolBranch::M(sigma_y_like),
    }
}

fn mi_jump(c: &CouplingSet, root: f64) -> Discontinuity {
    let theta0 = snap_axis(chain::normalize_angle(root));
    // Lateral limits: M is continuous at the crossing (Λ^S = |F^A| > 0
    // there), the scalar side is fixed by the sign of F^A.
    let s = chain::symbol_slice(c, theta0);
    let m = SymbolBranch::M(m_matrix(&s));
    let scalar = if s.fa > 0.0 {
        SymbolBranch::PlusI
    } else {
        SymbolBranch::MinusI
    };
    // which side is scalar: probe slightly left of the root
    let probe = chain::symbol_slice(c, theta0 - 1e-7);
    if tag_of_slice(&probe) == BranchTag::Mid {
        Discontinuity {
            theta: theta0,
            kind: JumpKind::MI,
            left: m,
            right: scalar,
        }
    } else {
        Discontinuity {
            theta: theta0,
            kind: JumpKind::MI,
            left: scalar,
            right: m,
        }
    }
}

fn ii_jump(c: &CouplingSet, root: f64) -> Discontinuity {
    let theta0 = snap_axis(chain::normalize_angle(root));
    let right_sign = chain::symbol_slice(c, theta0 + 1e-7).fa > 0.0;
    let (left, right) = if right_sign {
        (SymbolBranch::MinusI, SymbolBranch::PlusI)
    } else {
        (SymbolBranch::PlusI, SymbolBranch::MinusI)
    };
    Discontinuity {
        theta: theta0,
        kind: JumpKind::II,
        left,
        right,
    }
}

/// Snap angles that bisection left within 1e-9 of the symmetry axes.
fn snap_axis(theta: f64) -> f64 {
    if theta.abs() < 1e-9 {
        0.0
    } else if (theta - PI).abs() < 1e-9 || (theta + PI).abs() < 1e-9 {
        PI
    } else {
        theta
    }
}

fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    let fhi = f(hi);
    debug_assert!(
        flo.signum() != fhi.signum(),
        "bisection bracket must change sign"
    );
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn golden_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..120 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if b - a < 1e-14 {
            break;
        }
    }
    let mid = 0.5 * (a + b);
    (mid, f(mid))
}

/// Multiplicities of the four archetypical jump configurations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArchetypeCount {
    /// Four MI jumps from a double sign change of Λ at θ > 0 (and mirror).
    pub n_a: usize,
    /// Two MI jumps plus one II jump at θ ∈ {0, π}.
    pub n_b: usize,
    /// A pair of MM jumps at ±θ.
    pub n_c: usize,
    /// A single MM jump at θ ∈ {0, π}.
    pub n_d: usize,
}

impl ArchetypeCount {
    /// Weighted jump count N_T: the log coefficient in units of b_MI.
    pub fn n_t(&self) -> usize {
        2 * (2 * self.n_a + 2 * self.n_b + 2 * self.n_c + self.n_d)
    }

    /// Effective central charge c = N_T/4 (so S₁ ~ (c/3) log|X|).
    pub fn central_charge(&self) -> f64 {
        self.n_t() as f64 / 4.0
    }
}

const AXIS_TOL: f64 = 1e-9;

fn on_axis(theta: f64) -> bool {
    theta.abs() < AXIS_TOL || (theta.abs() - PI).abs() < AXIS_TOL
}

/// Group located discontinuities into the archetype decomposition.
pub fn archetype_count(
    discs: &[Discontinuity],
    _c: &CouplingSet,
) -> Result<ArchetypeCount, SymbolError> {
    let mi: Vec<&Discontinuity> = discs.iter().filter(|d| d.kind == JumpKind::MI).collect();
    let ii: Vec<&Discontinuity> = discs.iter().filter(|d| d.kind == JumpKind::II).collect();
    let mm: Vec<&Discontinuity> = discs.iter().filter(|d| d.kind == JumpKind::MM).collect();

    for d in &ii {
        if !on_axis(d.theta) {
            return Err(SymbolError::UnclassifiableConfiguration(format!(
                "II jump off the symmetry axes at θ = {}",
                d.theta
            )));
        }
    }
    let n_d = mm.iter().filter(|d| on_axis(d.theta)).count();
    let mm_paired: Vec<f64> = mm
        .iter()
        .filter(|d| !on_axis(d.theta))
        .map(|d| d.theta)
        .collect();
    if mm_paired.len() % 2 != 0 {
        return Err(SymbolError::UnclassifiableConfiguration(
            "odd number of off-axis MM jumps".into(),
        ));
    }
    for &t in &mm_paired {
        if !mm_paired.iter().any(|&u| (u + t).abs() < 1e-7) {
            return Err(SymbolError::UnclassifiableConfiguration(format!(
                "MM jump at θ = {t} lacks its mirror"
            )));
        }
    }
    let n_c = mm_paired.len() / 2;
    let n_b = ii.len();
    if mi.len() < 2 * n_b || (mi.len() - 2 * n_b) % 4 != 0 {
        return Err(SymbolError::UnclassifiableConfiguration(format!(
            "{} MI and {} II jumps do not decompose into archetypes",
            mi.len(),
            n_b
        )));
    }
    for &t in mi.iter().map(|d| &d.theta) {
        if !on_axis(t) && !mi.iter().any(|d| (d.theta + t).abs() < 1e-7) {
            return Err(SymbolError::UnclassifiableConfiguration(format!(
                "MI jump at θ = {t} lacks its mirror"
            )));
        }
    }
    let n_a = (mi.len() - 2 * n_b) / 4;
    Ok(ArchetypeCount { n_a, n_b, n_c, n_d })
}

/// b_MI(λ) = (1/4π²) log²((λ+1)/(λ-1)), principal branch.
pub fn b_mi(lambda: Complex64) -> Result<Complex64, SymbolError> {
    if lambda.im == 0.0 && lambda.re.abs() <= 1.0 {
        return Err(SymbolError::BranchCut(lambda));
    }
    let r = ((lambda + 1.0) / (lambda - 1.0)).ln();
    Ok(r * r / (4.0 * PI * PI))
}

/// d b_MI / dλ, analytic off the cut.
pub fn b_mi_derivative(lambda: Complex64) -> Complex64 {
    let r = ((lambda + 1.0) / (lambda - 1.0)).ln();
    -r / (PI * PI * (lambda * lambda - 1.0))
}

/// Eigenbasis of a 2×2 Hermitian matrix as a unitary with eigenvector
/// columns.
fn hermitian_eigenbasis(m: &Matrix2<Complex64>) -> Matrix2<Complex64> {
    let p = m[(0, 0)].re;
    let q = m[(0, 1)];
    let r = m[(1, 1)].re;
    if q.norm() < 1e-14 {
        return Matrix2::identity();
    }
    let half = 0.5 * (p - r);
    let disc = (half * half + q.norm_sqr()).sqrt();
    // eigenvalue (p+r)/2 + disc has eigenvector (q, λ - p)ᵀ up to phase
    let w1 = 0.5 * (p + r) + disc;
    let v1 = nalgebra::Vector2::new(q, Complex64::new(w1 - p, 0.0));
    let v1 = v1 / Complex64::new(v1.norm(), 0.0);
    // orthogonal partner
    let v2 = nalgebra::Vector2::new(-v1[1].conj(), v1[0].conj());
    Matrix2::from_columns(&[v1, v2])
}

/// Contribution of one discontinuity to the log|X| coefficient of the
/// determinant: simultaneous eigenvalues of the commuting lateral limits
/// fed through the scalar jump formula.
pub fn jump_coefficient(d: &Discontinuity, lambda: Complex64) -> Result<Complex64, SymbolError> {
    let a = d.left.matrix();
    let b = d.right.matrix();
    let comm = (a * b - b * a).norm();
    if comm >= 1e-8 {
        return Err(SymbolError::NonCommutingLimits(comm));
    }
    if lambda.im == 0.0 && lambda.re.abs() <= 1.0 {
        return Err(SymbolError::BranchCut(lambda));
    }
    // A basis diagonalizing the non-scalar side diagonalizes both.
    let w = if !d.left.is_scalar() {
        hermitian_eigenbasis(&a)
    } else {
        hermitian_eigenbasis(&b)
    };
    let ad = w.adjoint() * a * w;
    let bd = w.adjoint() * b * w;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..2 {
        let tau_minus = ad[(i, i)];
        let tau_plus = bd[(i, i)];
        let r = ((lambda - tau_minus) / (lambda - tau_plus)).ln();
        acc += r * r;
    }
    Ok(acc / (4.0 * PI * PI))
}

/// Leading (linear-in-|X|) Szegő coefficient: (1/2π) ∫ log det[λI - Ĝ(θ)] dθ,
/// a measure-weighted mix of log(λ+1)², log(λ²-1) and log(λ-1)² over the
/// three branch arcs.
pub fn szego_linear_term(c: &CouplingSet, lambda: Complex64) -> Result<Complex64, SymbolError> {
    if lambda.im == 0.0 && lambda.re.abs() <= 1.0 {
        return Err(SymbolError::BranchCut(lambda));
    }
    let set = find_discontinuities_default(c)?;
    let log_plus = (lambda + 1.0).ln();
    let log_minus = (lambda - 1.0).ln();
    let piece = |branch: BranchTag| match branch {
        BranchTag::Minus => 2.0 * log_plus,
        BranchTag::Mid => log_plus + log_minus,
        BranchTag::Plus => 2.0 * log_minus,
    };
    if set.discontinuities.is_empty() {
        let s = chain::symbol_slice(c, 0.5);
        return Ok(piece(tag_of_slice(&s)));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let n = set.discontinuities.len();
    for i in 0..n {
        let a = set.discontinuities[i].theta;
        let b = if i + 1 < n {
            set.discontinuities[i + 1].theta
        } else {
            set.discontinuities[0].theta + 2.0 * PI
        };
        let mid = chain::normalize_angle(0.5 * (a + b));
        let s = chain::symbol_slice(c, mid);
        acc += ((b - a) / (2.0 * PI)) * piece(tag_of_slice(&s));
    }
    Ok(acc)
}

/// Predicted coefficient of log|X| in S_α: N_T (α+1)/(24α).
pub fn predicted_log_coefficient(ac: &ArchetypeCount, alpha: f64) -> f64 {
    assert!(alpha > 0.0);
    ac.n_t() as f64 * (alpha + 1.0) / (24.0 * alpha)
}

/// One rectangular-contour evaluation of
/// (1/4πi) ∮ f_α(1+ε, λ) db_MI/dλ dλ at fixed ε: vertical sides pinch
/// between the cut end ±1 and the kernel branch points ±(1+ε), horizontal
/// sides run at Im λ = ±ε.
pub fn identity_contour_value(alpha: f64, eps: f64, quad_tol: f64) -> Result<f64, SymbolError> {
    let x = 1.0 + eps;
    let integrand = |l: Complex64| f_alpha_complex(alpha, x, l) * b_mi_derivative(l);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut failed = false;
    let tol = quad_tol / 4.0;
    // bottom: left → right at Im = -ε
    let r = adaptive_gk15(
        &mut |t: f64| integrand(Complex64::new(t, -eps)),
        -x,
        x,
        tol,
        52,
    );
    failed |= !r.converged;
    acc += r.value;
    // right: up at Re = 1+ε
    let r = adaptive_gk15(
        &mut |t: f64| integrand(Complex64::new(x, t)) * Complex64::new(0.0, 1.0),
        -eps,
        eps,
        tol,
        52,
    );
    failed |= !r.converged;
    acc += r.value;
    // top: right → left at Im = +ε
    let r = adaptive_gk15(
        &mut |t: f64| -integrand(Complex64::new(t, eps)),
        -x,
        x,
        tol,
        52,
    );
    failed |= !r.converged;
    acc += r.value;
    // left: down at Re = -(1+ε)
    let r = adaptive_gk15(
        &mut |t: f64| -integrand(Complex64::new(-x, t)) * Complex64::new(0.0, 1.0),
        -eps,
        eps,
        tol,
        52,
    );
    failed |= !r.converged;
    acc += r.value;
    if failed {
        return Err(SymbolError::QuadratureFailure);
    }
    let v = acc / Complex64::new(0.0, 4.0 * PI);
    Ok(v.re)
}

/// ε → 0 limit of the contour integral above; must reproduce
/// (α+1)/(24α). Evaluated on a geometric ε ladder and extrapolated with
/// exponents matched to the endpoint behaviour of f_α.
pub fn coefficient_identity_check(alpha: f64, quad_tol: f64) -> Result<f64, SymbolError> {
    assert!(alpha > 0.0);
    let eps0 = 1e-2;
    let ratio: f64 = 4.0;
    let n_eval = 7;
    let vals: Vec<f64> = (0..n_eval)
        .map(|j| identity_contour_value(alpha, eps0 / ratio.powi(j as i32), quad_tol * 1e-3))
        .collect::<Result<_, _>>()?;
    // Error model: I(ε) = I₀ + Σ c_k φ_k(ε) with endpoint exponents of
    // f_α(1+ε, ·) near λ = ±1.
    let p = alpha.min(1.0);
    let mut basis: Vec<Box<dyn Fn(f64) -> f64>> = vec![
        Box::new(move |e: f64| e.powf(p)),
        Box::new(move |e: f64| e.powf(p) * e.ln()),
        Box::new(|e: f64| e),
        Box::new(move |e: f64| e.powf((2.0 * alpha).min(2.0))),
    ];
    if (p - 1.0).abs() < 1e-12 {
        // ε and ε^p coincide; replace one copy with the next order
        basis[2] = Box::new(|e: f64| e * e);
    }
    let m = basis.len();
    let mut a = nalgebra::DMatrix::<f64>::zeros(n_eval, m + 1);
    let mut rhs = nalgebra::DVector::<f64>::zeros(n_eval);
    for (j, &v) in vals.iter().enumerate() {
        let e = eps0 / ratio.powi(j as i32);
        a[(j, 0)] = 1.0;
        for (k, f) in basis.iter().enumerate() {
            a[(j, k + 1)] = f(e);
        }
        rhs[j] = v;
    }
    let svd = nalgebra::SVD::new(a, true, true);
    let sol = svd
        .solve(&rhs, 1e-14)
        .map_err(|_| SymbolError::QuadratureFailure)?;
    Ok(sol[0])
}
