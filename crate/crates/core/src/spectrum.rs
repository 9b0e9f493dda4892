//! Bound-state energies from the transcendental quantization condition.
//!
//! With the quadratic replacement of the effective term, the radial equation
//! in ρ = e^{-a(r-re)} is solved by ρ^{β̄₀} e^{-β̄₂ρ} Φ(-n, 2β̄₀+1; 2β̄₂ρ)
//! provided
//!
//! ```text
//! β̄₁ / (2 β̄₂) - β̄₀ = n + 1/2,       n = 0, 1, 2, ...
//! ```
//!
//! where, writing κ = 1/(a·ħc)² and α = a·re,
//!
//! ```text
//! β̄₀² = (m²c⁴ - E²) κ - A0/α²
//! β̄₁  = 4 E D0 κ    + A1/α²
//! β̄₂² = (2 E D0 - 4 D0²) κ - A2/α²
//! ```
//!
//! β̄₀ and β̄₂ take the positive root; energies where either square is
//! non-positive are outside the solvable domain and yield no residual.
//! Roots are located by a uniform bracketing scan over the bound window
//! (-m c², +m c²) followed by bisection; the domain can be disconnected in E,
//! so a global scan is preferred over local iteration.

use crate::model::{Coupling, ModelParams, PekerisCoefficients};
use thiserror::Error;

/// Scan resolution of the bracketing pass (MeV).
pub const SCAN_STEP_MEV: f64 = 0.01;
/// Margin kept from the window edges ±mc² (MeV).
pub const WINDOW_MARGIN_MEV: f64 = 1e-6;
/// Bisection termination width (MeV).
pub const BISECT_TOL_MEV: f64 = 1e-9;
/// Roots closer than this to a domain boundary are discarded (MeV).
pub const BOUNDARY_DISCARD_MEV: f64 = 1e-6;
/// Two roots closer than this are considered duplicates (MeV).
pub const DEDUP_TOL_MEV: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("the analytic spectrum is defined only for vector coupling")]
    AnalyticUnsupported,
    #[error("depth values must be positive, got {value}")]
    NonPositiveDepth { value: f64 },
}

/// Sign of a bound-state energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    Particle,
    Antiparticle,
}

impl Branch {
    pub fn of_energy(e: f64) -> Branch {
        if e >= 0.0 {
            Branch::Particle
        } else {
            Branch::Antiparticle
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Branch::Particle => "particle",
            Branch::Antiparticle => "antiparticle",
        }
    }

    /// +1 for particles, -1 for antiparticles.
    pub fn sign(&self) -> f64 {
        match self {
            Branch::Particle => 1.0,
            Branch::Antiparticle => -1.0,
        }
    }
}

/// The β̄ coefficients evaluated at a trial energy, positive-root convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSet {
    /// β̄₀ > 0.
    pub beta0: f64,
    /// β̄₁ (any sign).
    pub beta1: f64,
    /// β̄₂ > 0.
    pub beta2: f64,
    /// Energy (MeV) at which the set was evaluated.
    pub energy: f64,
}

impl BetaSet {
    /// Evaluate the β̄ set at energy `e`. Returns `None` when β̄₀² ≤ 0 or
    /// β̄₂² ≤ 0, i.e. when `e` lies outside the solvable domain. Not a fault.
    pub fn evaluate(p: &ModelParams, c: &PekerisCoefficients, e: f64) -> Option<BetaSet> {
        let kappa = p.inv_a2_hbar2();
        let alpha2 = c.alpha * c.alpha;
        let beta0_sq = (p.mc2 * p.mc2 - e * e) * kappa - c.a0 / alpha2;
        let beta2_sq = (2.0 * e * p.d0 - 4.0 * p.d0 * p.d0) * kappa - c.a2 / alpha2;
        if beta0_sq <= 0.0 || beta2_sq <= 0.0 {
            return None;
        }
        Some(BetaSet {
            beta0: beta0_sq.sqrt(),
            beta1: 4.0 * e * p.d0 * kappa + c.a1 / alpha2,
            beta2: beta2_sq.sqrt(),
            energy: e,
        })
    }

    /// Left side of the quantization condition minus (n + 1/2).
    pub fn residual(&self, n: u32) -> f64 {
        self.beta1 / (2.0 * self.beta2) - self.beta0 - (n as f64 + 0.5)
    }
}

/// A solved bound state together with the β̄ set frozen at its eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    /// Radial quantum number (node count of χ).
    pub n: u32,
    /// Orbital quantum number.
    pub ell: u32,
    /// Eigenvalue (MeV), strictly inside (-mc², +mc²).
    pub energy: f64,
    pub branch: Branch,
    pub betas: BetaSet,
}

/// One row of a depth sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthPoint {
    pub d0: f64,
    pub n: u32,
    pub ell: u32,
    pub branch: Branch,
    pub energy: f64,
}

/// g(E) = β̄₁/(2β̄₂) - β̄₀ - (n + 1/2), or `None` outside the solvable domain.
pub fn quantization_residual(p: &ModelParams, n: u32, e: f64) -> Option<f64> {
    let c = p.pekeris_coefficients();
    BetaSet::evaluate(p, &c, e).map(|b| b.residual(n))
}

/// Find every root of the quantization condition with n ≤ n_max and
/// ℓ ≤ ell_max inside the bound window, both energy branches included.
/// The `ell` field of `p` is ignored; ℓ is swept explicitly.
pub fn solve_spectrum(
    p: &ModelParams,
    n_max: u32,
    ell_max: u32,
) -> Result<Vec<BoundState>, SpectrumError> {
    if p.coupling != Coupling::VectorOnly {
        return Err(SpectrumError::AnalyticUnsupported);
    }
    let mut states = Vec::new();
    for ell in 0..=ell_max {
        let pl = p.with_ell(ell);
        let c = pl.pekeris_coefficients();
        scan_one_ell(&pl, &c, n_max, &mut states);
    }
    states.sort_by(|a, b| {
        (a.ell, a.n)
            .cmp(&(b.ell, b.n))
            .then(a.energy.total_cmp(&b.energy))
    });
    Ok(states)
}

/// Bracketing scan for a single ℓ. One pass over the energy grid serves all
/// n at once: the residuals differ only by the constant offset n + 1/2.
fn scan_one_ell(p: &ModelParams, c: &PekerisCoefficients, n_max: u32, out: &mut Vec<BoundState>) {
    let e_lo = -p.mc2 + WINDOW_MARGIN_MEV;
    let e_hi = p.mc2 - WINDOW_MARGIN_MEV;
    let steps = ((e_hi - e_lo) / SCAN_STEP_MEV).ceil() as u64;

    let mut prev: Option<(f64, BetaSet)> = None;
    for k in 0..=steps {
        let e = (e_lo + k as f64 * SCAN_STEP_MEV).min(e_hi);
        let cur = BetaSet::evaluate(p, c, e);
        if let (Some((e_prev, b_prev)), Some(b_cur)) = (&prev, &cur) {
            for n in 0..=n_max {
                let f_prev = b_prev.residual(n);
                let f_cur = b_cur.residual(n);
                if f_prev == 0.0 || f_prev.signum() != f_cur.signum() {
                    if let Some(root) = bisect_residual(p, c, n, *e_prev, e) {
                        push_root(p, c, n, root, out);
                    }
                }
            }
        }
        prev = cur.map(|b| (e, b));
    }
}

fn bisect_residual(
    p: &ModelParams,
    c: &PekerisCoefficients,
    n: u32,
    mut lo: f64,
    mut hi: f64,
) -> Option<f64> {
    let f = |e: f64| BetaSet::evaluate(p, c, e).map(|b| b.residual(n));
    let mut f_lo = f(lo)?;
    if f_lo == 0.0 {
        return Some(lo);
    }
    while hi - lo > BISECT_TOL_MEV {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Some(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

fn push_root(p: &ModelParams, c: &PekerisCoefficients, n: u32, e: f64, out: &mut Vec<BoundState>) {
    // Window and domain-boundary guards: the β̄ set must exist slightly on
    // both sides of the root, and the root must sit clear of ±mc².
    if e.abs() >= p.mc2 - BOUNDARY_DISCARD_MEV {
        return;
    }
    if BetaSet::evaluate(p, c, e - BOUNDARY_DISCARD_MEV).is_none()
        || BetaSet::evaluate(p, c, e + BOUNDARY_DISCARD_MEV).is_none()
    {
        return;
    }
    let Some(betas) = BetaSet::evaluate(p, c, e) else {
        return;
    };
    // A normalizable solution needs a positive left side in the quantization
    // condition, hence β̄₁ > 0 at an accepted root.
    if betas.beta1 <= 0.0 {
        return;
    }
    if out
        .iter()
        .any(|s| s.ell == p.ell && s.n == n && (s.energy - e).abs() < DEDUP_TOL_MEV)
    {
        return;
    }
    out.push(BoundState {
        n,
        ell: p.ell,
        energy: e,
        branch: Branch::of_energy(e),
        betas,
    });
}

/// Recompute the spectrum for each well depth. Depths producing no states
/// contribute no rows; that is not an error.
pub fn depth_sweep(
    p: &ModelParams,
    d0_values: &[f64],
    n_max: u32,
    ell_max: u32,
) -> Result<Vec<DepthPoint>, SpectrumError> {
    for &d0 in d0_values {
        if !(d0 > 0.0) {
            return Err(SpectrumError::NonPositiveDepth { value: d0 });
        }
    }
    let mut rows = Vec::new();
    for &d0 in d0_values {
        let pd = p.with_d0(d0);
        let states = solve_spectrum(&pd, n_max, ell_max)?;
        rows.extend(states.into_iter().map(|s| DepthPoint {
            d0,
            n: s.n,
            ell: s.ell,
            branch: s.branch,
            energy: s.energy,
        }));
    }
    Ok(rows)
}
