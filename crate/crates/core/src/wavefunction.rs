//! Radial wavefunctions and signed charge-density profiles.
//!
//! A bound state solves the approximated radial equation with
//!
//! ```text
//! χ(ρ) ∝ ρ^{β̄₀} e^{-β̄₂ ρ} Φ(-n, 2β̄₀ + 1; 2β̄₂ ρ),   ρ = e^{-a(r - re)}
//! ```
//!
//! so χ → 0 as r → ∞ (ρ → 0). χ is normalized to unit ∫|χ|² dr by trapezoid
//! quadrature on a wide default window, u = χ/r, and the signed charge
//! density is ϱ(r) = ± (|E|/mc²) |u|² in units of the elementary charge,
//! positive for the particle branch and negative for the antiparticle branch.

use crate::kummer::KummerPolynomial;
use crate::model::ModelParams;
use crate::spectrum::BoundState;
use thiserror::Error;

/// Points used for the normalization quadrature on the default window.
pub const NORM_POINTS: usize = 20001;
/// Stored-grid mass fraction below which profile construction is refused.
pub const MIN_MASS_FRACTION: f64 = 0.999;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProfileError {
    #[error("invalid grid: need 0 < r_min < r_max and at least 2 points")]
    InvalidGrid,
    #[error(
        "grid misses the localization region: it holds {fraction:.6} of the norm, need ≥ {MIN_MASS_FRACTION}"
    )]
    MissesLocalization { fraction: f64 },
    #[error("state has β̄₀ ≤ 0, no normalizable wavefunction")]
    InvalidState,
    #[error("grid too coarse to resolve nodes: sign changes {gap} steps apart at index {index}")]
    GridTooCoarse { index: usize, gap: usize },
}

/// Sampled radial profile of one bound state.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    /// Strictly increasing radial grid (fm).
    pub r: Vec<f64>,
    /// Normalized χ(r_i).
    pub chi: Vec<f64>,
    /// u(r_i) = χ(r_i)/r_i.
    pub u: Vec<f64>,
    /// Signed charge density ϱ(r_i) = ±(|E|/mc²)|u|² (e·fm⁻³).
    pub rho_charge: Vec<f64>,
    pub state: BoundState,
}

/// Normalization window wide enough to hold every bound state of the well:
/// [max(10⁻³, re - 15/a), re + 25/a].
pub fn default_window(p: &ModelParams) -> (f64, f64) {
    let lo = (p.re - 15.0 / p.a).max(1e-3);
    let hi = p.re + 25.0 / p.a;
    (lo, hi)
}

/// Unnormalized χ(r) of a bound state.
pub fn build_chi(state: &BoundState, p: &ModelParams, r: f64) -> f64 {
    let rho = (-p.a * (r - p.re)).exp();
    let b = &state.betas;
    let phi = KummerPolynomial::new(state.n, 2.0 * b.beta0 + 1.0)
        .expect("bound state carries β̄₀ > 0")
        .eval(2.0 * b.beta2 * rho);
    // ρ^{β̄₀} e^{-β̄₂ρ} written as a single exponential of the log.
    (-p.a * (r - p.re) * b.beta0 - b.beta2 * rho).exp() * phi
}

/// Sample χ, u and ϱ on a uniform grid and normalize χ against the
/// default-window quadrature. Errors if the requested grid holds less than
/// `MIN_MASS_FRACTION` of the total norm.
pub fn build_profile(
    state: &BoundState,
    p: &ModelParams,
    r_min: f64,
    r_max: f64,
    n_points: usize,
) -> Result<RadialProfile, ProfileError> {
    if !(r_min > 0.0) || !(r_max > r_min) || n_points < 2 {
        return Err(ProfileError::InvalidGrid);
    }
    if state.betas.beta0 <= 0.0 {
        return Err(ProfileError::InvalidState);
    }

    let (w_lo, w_hi) = default_window(p);
    let full_norm_sq = trapezoid_chi_sq(state, p, w_lo, w_hi, NORM_POINTS);
    if !(full_norm_sq > 0.0) || !full_norm_sq.is_finite() {
        return Err(ProfileError::InvalidState);
    }

    let grid_norm_sq = trapezoid_chi_sq(state, p, r_min, r_max, NORM_POINTS);
    let fraction = grid_norm_sq / full_norm_sq;
    if fraction < MIN_MASS_FRACTION {
        return Err(ProfileError::MissesLocalization { fraction });
    }

    let scale = 1.0 / full_norm_sq.sqrt();
    let step = (r_max - r_min) / (n_points - 1) as f64;
    let mut r = Vec::with_capacity(n_points);
    let mut chi = Vec::with_capacity(n_points);
    let mut u = Vec::with_capacity(n_points);
    let mut rho_charge = Vec::with_capacity(n_points);
    let density_factor = state.branch.sign() * state.energy.abs() / p.mc2;
    for i in 0..n_points {
        let ri = r_min + i as f64 * step;
        let c = scale * build_chi(state, p, ri);
        let ui = c / ri;
        r.push(ri);
        chi.push(c);
        u.push(ui);
        rho_charge.push(density_factor * ui * ui);
    }

    Ok(RadialProfile {
        r,
        chi,
        u,
        rho_charge,
        state: state.clone(),
    })
}

/// Profile on the default window.
pub fn build_default_profile(
    state: &BoundState,
    p: &ModelParams,
    n_points: usize,
) -> Result<RadialProfile, ProfileError> {
    let (lo, hi) = default_window(p);
    build_profile(state, p, lo, hi, n_points)
}

/// Number of strict interior sign changes of χ; equals the radial quantum
/// number of the state. Errors if two sign changes fall within two grid
/// steps of each other, which means the grid cannot resolve the nodes.
pub fn count_nodes(profile: &RadialProfile) -> Result<usize, ProfileError> {
    let max_abs = profile
        .chi
        .iter()
        .fold(0.0_f64, |acc, v| acc.max(v.abs()));
    let floor = max_abs * 1e-12;
    let mut nodes = 0;
    let mut last_sign = 0.0;
    let mut last_flip_index: Option<usize> = None;
    for (i, &v) in profile.chi.iter().enumerate() {
        if v.abs() <= floor {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            if let Some(prev) = last_flip_index {
                let gap = i - prev;
                if gap <= 2 {
                    return Err(ProfileError::GridTooCoarse { index: i, gap });
                }
            }
            nodes += 1;
            last_flip_index = Some(i);
        }
        last_sign = s;
    }
    Ok(nodes)
}

fn trapezoid_chi_sq(state: &BoundState, p: &ModelParams, lo: f64, hi: f64, n: usize) -> f64 {
    let step = (hi - lo) / (n - 1) as f64;
    let mut sum = 0.0;
    let mut prev = build_chi(state, p, lo).powi(2);
    for i in 1..n {
        let cur = build_chi(state, p, lo + i as f64 * step).powi(2);
        sum += 0.5 * (prev + cur) * step;
        prev = cur;
    }
    sum
}
