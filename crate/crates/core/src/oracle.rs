//! Independent numerical solution of the exact radial equation by two-sided
//! Numerov shooting with node counting.
//!
//! The equation integrated is χ'' + W(r) χ = 0 with
//!
//! ```text
//! W(r) = [(E - V_v)² - (m c² + V_s)²] / (ħc)² - ℓ(ℓ+1)/r²
//! ```
//!
//! where V_v is the shifted Morse well and V_s = 0 (vector coupling) or
//! V_s = V_v (equal scalar-vector coupling). No quadratic approximation of
//! the effective term enters anywhere; this module depends only on the model
//! parameters and serves as the cross-check for the analytic spectrum.
//!
//! Under pure vector coupling the well wall acts attractively on the
//! opposite-charge branch: (E - V)² exceeds m²c⁴ again once V ≫ E, so W > 0
//! in a thin region near the origin at every energy in the bound window,
//! with local wavenumbers of order V(0)/ħc ≈ 10²..10³ fm⁻¹. States of that
//! inner core are not resolvable at any reasonable step and are unrelated to
//! the well states being validated. The outward integration therefore seeds
//! a decaying solution inside the classically forbidden layer between the
//! core and the outer well whenever such a layer exists, and falls back to
//! the regular r^{ℓ+1} start at r_min otherwise (equal coupling, where the
//! origin region is forbidden and no such layer is needed).

use crate::constants::HBAR_C_SQ;
use crate::model::{Coupling, ModelParams};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid shooting configuration: {reason}")]
    InvalidConfig { reason: &'static str },
    #[error("energy {energy} MeV is not a bound-state candidate: W(r_max) = {w_at_rmax} ≥ 0")]
    NotBoundCandidate { energy: f64, w_at_rmax: f64 },
    #[error("no classically allowed region around the matching point at {energy} MeV")]
    NoClassicalRegion { energy: f64 },
    #[error("integration failed: {0}")]
    Numerical(String),
}

/// Fixed-step shooting setup. All lengths in fm, energies in MeV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    pub r_min: f64,
    pub r_max: f64,
    pub step: f64,
    pub match_point: f64,
    pub e_bracket_resolution: f64,
    pub tolerance: f64,
}

impl ShootingConfig {
    /// Defaults tied to the well geometry: integrate out to re + 30/a, match
    /// at the equilibrium distance, bracket on a 0.5 MeV grid and bisect to
    /// 1e-6 MeV.
    pub fn defaults_for(p: &ModelParams) -> Self {
        Self {
            r_min: 1e-3,
            r_max: p.re + 30.0 / p.a,
            step: 5e-3,
            match_point: p.re,
            e_bracket_resolution: 0.5,
            tolerance: 1e-6,
        }
    }

    /// Same configuration with a different integration step.
    pub fn with_step(mut self, step: f64) -> Self {
        self.step = step;
        self
    }

    fn validate(&self) -> Result<(), OracleError> {
        if !(self.r_min > 0.0 && self.r_min < self.match_point && self.match_point < self.r_max) {
            return Err(OracleError::InvalidConfig {
                reason: "need 0 < r_min < match_point < r_max",
            });
        }
        if !(self.step > 0.0) {
            return Err(OracleError::InvalidConfig {
                reason: "step must be positive",
            });
        }
        if !(self.tolerance > 0.0) {
            return Err(OracleError::InvalidConfig {
                reason: "tolerance must be positive",
            });
        }
        if !(self.e_bracket_resolution > 0.0) {
            return Err(OracleError::InvalidConfig {
                reason: "bracket resolution must be positive",
            });
        }
        Ok(())
    }
}

/// One labelled eigenvalue of the exact equation.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Radial quantum number, assigned from the node count.
    pub n: u32,
    pub ell: u32,
    /// Eigenvalue (MeV).
    pub energy: f64,
    /// Interior nodes of the converged wavefunction; equals `n`.
    pub node_count: u32,
    /// Log-derivative difference of the two solutions at the matching point
    /// after convergence.
    pub log_derivative_mismatch: f64,
}

/// Result of a single shot at a trial energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shot {
    /// Log-derivative mismatch at the matching point.
    pub mismatch: f64,
    /// Node count of the outward solution up to the matching point.
    pub nodes: u32,
}

/// Coefficient of χ in χ'' + Wχ = 0 (fm⁻²).
pub fn effective_w(p: &ModelParams, e: f64, r: f64) -> f64 {
    let vv = p.potential(r);
    let vs = match p.coupling {
        Coupling::VectorOnly => 0.0,
        Coupling::EqualScalarVector => vv,
    };
    let mass = p.mc2 + vs;
    ((e - vv) * (e - vv) - mass * mass) / HBAR_C_SQ - p.gamma() / (r * r)
}

/// Integrate from both ends at trial energy `e` and report the matching
/// mismatch and the outward node count.
pub fn shoot(p: &ModelParams, cfg: &ShootingConfig, e: f64) -> Result<Shot, OracleError> {
    cfg.validate()?;
    let run = integrate(p, cfg, e)?;
    Ok(Shot {
        mismatch: run.log_derivative_mismatch,
        nodes: run.outward_nodes,
    })
}

/// Bracket the matching determinant on the configured energy grid, refine
/// each sign change by bisection, and label every root by its node count.
/// Roots with more than `n_max` nodes are dropped. The `ell` field of `p` is
/// ignored; ℓ is swept explicitly.
pub fn oracle_spectrum(
    p: &ModelParams,
    cfg: &ShootingConfig,
    n_max: u32,
    ell_max: u32,
) -> Result<Vec<OracleResult>, OracleError> {
    cfg.validate()?;
    let mut results: Vec<OracleResult> = Vec::new();
    let margin = 1e-3;
    let e_lo = -p.mc2 + margin;
    let e_hi = p.mc2 - margin;
    let steps = ((e_hi - e_lo) / cfg.e_bracket_resolution).ceil() as u64;

    for ell in 0..=ell_max {
        let pl = p.with_ell(ell);
        let mut prev: Option<(f64, f64)> = None;
        for k in 0..=steps {
            let e = (e_lo + k as f64 * cfg.e_bracket_resolution).min(e_hi);
            let sample = integrate(&pl, cfg, e).ok().map(|run| run.determinant);
            if let (Some((e_prev, w_prev)), Some(w_cur)) = (prev, sample) {
                if w_prev == 0.0 || w_prev.signum() != w_cur.signum() {
                    if let Some(root) = bisect_determinant(&pl, cfg, e_prev, e) {
                        if let Ok(run) = integrate(&pl, cfg, root) {
                            let nodes = run.full_nodes;
                            let duplicate = results.iter().any(|r| {
                                r.ell == ell && (r.energy - root).abs() < 100.0 * cfg.tolerance
                            });
                            if nodes <= n_max && !duplicate {
                                results.push(OracleResult {
                                    n: nodes,
                                    ell,
                                    energy: root,
                                    node_count: nodes,
                                    log_derivative_mismatch: run.log_derivative_mismatch,
                                });
                            }
                        }
                    }
                }
            }
            prev = sample.map(|w| (e, w));
        }
    }
    results.sort_by(|a, b| {
        (a.ell, a.n)
            .cmp(&(b.ell, b.n))
            .then(a.energy.total_cmp(&b.energy))
    });
    Ok(results)
}

fn bisect_determinant(
    p: &ModelParams,
    cfg: &ShootingConfig,
    mut lo: f64,
    mut hi: f64,
) -> Option<f64> {
    let mut w_lo = integrate(p, cfg, lo).ok()?.determinant;
    if w_lo == 0.0 {
        return Some(lo);
    }
    while hi - lo > cfg.tolerance {
        let mid = 0.5 * (lo + hi);
        let w_mid = integrate(p, cfg, mid).ok()?.determinant;
        if w_mid == 0.0 {
            return Some(mid);
        }
        if w_mid.signum() == w_lo.signum() {
            lo = mid;
            w_lo = w_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

struct IntegrationRun {
    /// Scaled matching determinant; changes sign exactly at eigenvalues and
    /// stays finite where the log derivative has poles.
    determinant: f64,
    log_derivative_mismatch: f64,
    outward_nodes: u32,
    full_nodes: u32,
}

fn integrate(p: &ModelParams, cfg: &ShootingConfig, e: f64) -> Result<IntegrationRun, OracleError> {
    let w_tail = effective_w(p, e, cfg.r_max);
    if w_tail >= 0.0 {
        return Err(OracleError::NotBoundCandidate {
            energy: e,
            w_at_rmax: w_tail,
        });
    }
    if effective_w(p, e, cfg.match_point) <= 0.0 {
        return Err(OracleError::NoClassicalRegion { energy: e });
    }

    let (r_start, polynomial_seed) = locate_start(p, cfg, e)?;

    let h = cfg.step;
    let n = ((cfg.r_max - r_start) / h).ceil() as usize + 1;
    if n < 16 {
        return Err(OracleError::Numerical("grid shorter than 16 points".into()));
    }
    let m = ((cfg.match_point - r_start) / h).round() as usize;
    if m < 2 || m + 3 > n {
        return Err(OracleError::Numerical(
            "matching point too close to a grid end".into(),
        ));
    }

    let w: Vec<f64> = (0..n)
        .map(|i| effective_w(p, e, r_start + i as f64 * h))
        .collect();

    // Outward sweep, seeded either with the regular r^{ℓ+1} behavior at
    // r_min or with a decaying exponential inside the forbidden layer.
    let mut chi_out = vec![0.0; m + 2];
    if polynomial_seed {
        chi_out[0] = r_start.powi(p.ell as i32 + 1);
        chi_out[1] = (r_start + h).powi(p.ell as i32 + 1);
    } else {
        let kappa0 = (-w[0]).max(0.0).sqrt();
        let kappa1 = (-w[1]).max(0.0).sqrt();
        chi_out[0] = 1.0;
        chi_out[1] = (0.5 * (kappa0 + kappa1) * h).exp();
    }
    numerov_forward(&w, h, &mut chi_out)?;

    // Inward sweep from the exponentially forbidden tail.
    let mut chi_in = vec![0.0; n];
    let kappa_end = (-w[n - 1]).max(0.0).sqrt();
    let kappa_end2 = (-w[n - 2]).max(0.0).sqrt();
    chi_in[n - 1] = 1.0;
    chi_in[n - 2] = (0.5 * (kappa_end + kappa_end2) * h).exp();
    numerov_backward(&w, h, m, &mut chi_in)?;

    let so = chi_out[m - 1..=m + 1]
        .iter()
        .fold(0.0_f64, |a, v| a.max(v.abs()));
    let si = chi_in[m - 1..=m + 1]
        .iter()
        .fold(0.0_f64, |a, v| a.max(v.abs()));
    if so == 0.0 || si == 0.0 {
        return Err(OracleError::Numerical(
            "vanishing solution at the matching point".into(),
        ));
    }

    let d_out = chi_out[m + 1] - chi_out[m - 1];
    let d_in = chi_in[m + 1] - chi_in[m - 1];
    let determinant = (chi_out[m] * d_in - chi_in[m] * d_out) / (2.0 * h * so * si);
    let log_derivative_mismatch = d_out / (2.0 * h * chi_out[m]) - d_in / (2.0 * h * chi_in[m]);

    let outward_nodes = count_sign_changes(&chi_out[..=m]);

    // Assemble the full wavefunction for node labelling, scaling the inward
    // branch to the outward one at the best-conditioned index near m.
    let k_best = (m - 1..=m + 1)
        .max_by(|&a, &b| chi_in[a].abs().total_cmp(&chi_in[b].abs()))
        .expect("non-empty range");
    let ratio = chi_out[k_best] / chi_in[k_best];
    let mut full = Vec::with_capacity(n);
    full.extend_from_slice(&chi_out[..=m]);
    full.extend(chi_in[m + 1..].iter().map(|v| v * ratio));
    let full_nodes = count_sign_changes(&full);

    Ok(IntegrationRun {
        determinant,
        log_derivative_mismatch,
        outward_nodes,
        full_nodes,
    })
}

/// Pick the start radius of the outward sweep. Returns the radius and
/// whether the regular polynomial seed applies (start at r_min) instead of
/// the decaying-exponential seed (start inside the forbidden layer).
fn locate_start(
    p: &ModelParams,
    cfg: &ShootingConfig,
    e: f64,
) -> Result<(f64, bool), OracleError> {
    let w_at = |r: f64| effective_w(p, e, r);

    // March inward from the matching point until W turns negative: the inner
    // turning point of the well.
    let mut r = cfg.match_point;
    let t_in;
    loop {
        let next = r - cfg.step;
        if next <= cfg.r_min {
            // Well reaches the domain floor; start there with the regular seed.
            return Ok((cfg.r_min, true));
        }
        if w_at(next) <= 0.0 {
            t_in = bisect_zero(&w_at, next, r);
            break;
        }
        r = next;
    }

    // Keep marching while the region stays forbidden; stop at the core edge
    // (W ≥ 0 again) or at the domain floor.
    let mut inner_edge = cfg.r_min;
    let mut reached_floor = true;
    r = t_in;
    loop {
        let next = r - cfg.step;
        if next <= cfg.r_min {
            break;
        }
        if w_at(next) >= 0.0 {
            inner_edge = bisect_zero(&w_at, next, r);
            reached_floor = false;
            break;
        }
        r = next;
    }

    // Start where the layer is most strongly forbidden.
    let lo = inner_edge;
    let hi = t_in;
    if !(hi > lo) {
        return Err(OracleError::NoClassicalRegion { energy: e });
    }
    let samples = 128;
    let mut best_r = 0.5 * (lo + hi);
    let mut best_w = w_at(best_r);
    for k in 0..=samples {
        let rk = lo + (hi - lo) * k as f64 / samples as f64;
        if reached_floor && k == 0 {
            // include the floor itself as a candidate
        } else if k == 0 || k == samples {
            continue;
        }
        let wk = w_at(rk);
        if wk < best_w {
            best_w = wk;
            best_r = rk;
        }
    }
    if reached_floor && (best_r - cfg.r_min).abs() < 1e-12 {
        return Ok((cfg.r_min, true));
    }
    Ok((best_r, false))
}

fn bisect_zero(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    // W(lo) and W(hi) straddle zero by construction.
    let mut f_lo = f(lo);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Three-term Numerov recurrence for χ'' = -Wχ, forward over the seeded
/// first two entries of `chi`. Rescales when the amplitude spills.
fn numerov_forward(w: &[f64], h: f64, chi: &mut [f64]) -> Result<(), OracleError> {
    let h2_12 = h * h / 12.0;
    for i in 1..chi.len() - 1 {
        let f_next = 1.0 + h2_12 * w[i + 1];
        let value = (2.0 * (1.0 - 5.0 * h2_12 * w[i]) * chi[i]
            - (1.0 + h2_12 * w[i - 1]) * chi[i - 1])
            / f_next;
        if !value.is_finite() {
            return Err(OracleError::Numerical(format!(
                "outward sweep diverged at index {i}"
            )));
        }
        chi[i + 1] = value;
        if value.abs() > 1e250 {
            let scale = 1.0 / value.abs();
            for v in chi[..=i + 1].iter_mut() {
                *v *= scale;
            }
        }
    }
    Ok(())
}

/// Numerov recurrence run from the tail down to index `stop - 1`.
fn numerov_backward(w: &[f64], h: f64, stop: usize, chi: &mut [f64]) -> Result<(), OracleError> {
    let h2_12 = h * h / 12.0;
    let n = chi.len();
    for i in (stop..n - 1).rev() {
        let f_prev = 1.0 + h2_12 * w[i - 1];
        let value = (2.0 * (1.0 - 5.0 * h2_12 * w[i]) * chi[i]
            - (1.0 + h2_12 * w[i + 1]) * chi[i + 1])
            / f_prev;
        if !value.is_finite() {
            return Err(OracleError::Numerical(format!(
                "inward sweep diverged at index {i}"
            )));
        }
        chi[i - 1] = value;
        if value.abs() > 1e250 {
            let scale = 1.0 / value.abs();
            for v in chi[i - 1..].iter_mut() {
                *v *= scale;
            }
        }
    }
    Ok(())
}

fn count_sign_changes(values: &[f64]) -> u32 {
    let max_abs = values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
    let floor = max_abs * 1e-9;
    let mut changes = 0;
    let mut last_sign = 0.0;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            changes += 1;
        }
        last_sign = s;
    }
    changes
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn reference() -> ModelParams {
        ModelParams::reference()
    }

    #[test]
    fn w_at_equilibrium_vector_only() {
        // V(re) = -D0, so W(re) = [(E + D0)² - m²c⁴]/(ħc)² for ℓ = 0.
        let p = reference();
        let e = 220.0;
        let expected = ((e + p.d0).powi(2) - p.mc2 * p.mc2) / HBAR_C_SQ;
        assert_relative_eq!(effective_w(&p, e, p.re), expected, max_relative = 1e-12);
    }

    #[test]
    fn w_tends_to_the_free_value_at_infinity() {
        let p = reference();
        let e = 200.0;
        let expected = (e * e - p.mc2 * p.mc2) / HBAR_C_SQ;
        assert!(expected < 0.0);
        assert_relative_eq!(effective_w(&p, e, 500.0), expected, max_relative = 1e-9);
    }

    #[test]
    fn w_equal_coupling_substitution() {
        // Equal coupling at r = re: W = [(E + D0)² - (mc² - D0)²]/(ħc)².
        let p = reference().with_coupling(Coupling::EqualScalarVector);
        let e = 310.0;
        let expected = ((310.0_f64 + 90.0).powi(2) - (280.0_f64 - 90.0).powi(2)) / HBAR_C_SQ;
        assert_relative_eq!(effective_w(&p, e, p.re), expected, max_relative = 1e-12);
    }

    #[test]
    fn shoot_rejects_energies_outside_the_bound_window() {
        let p = reference();
        let cfg = ShootingConfig::defaults_for(&p);
        assert!(matches!(
            shoot(&p, &cfg, 285.0),
            Err(OracleError::NotBoundCandidate { .. })
        ));
    }

    #[test]
    fn shoot_rejects_energies_without_a_well() {
        // Far below the threshold mc² - D0 there is no allowed region around
        // the equilibrium distance under vector coupling.
        let p = reference();
        let cfg = ShootingConfig::defaults_for(&p);
        assert!(matches!(
            shoot(&p, &cfg, 50.0),
            Err(OracleError::NoClassicalRegion { .. })
        ));
        assert!(matches!(
            shoot(&p, &cfg, -8.0),
            Err(OracleError::NoClassicalRegion { .. })
        ));
    }

    #[test]
    fn mismatch_changes_sign_across_an_eigenvalue() {
        let p = reference();
        let cfg = ShootingConfig::defaults_for(&p);
        // The ℓ = 0 ground state lies between these energies.
        let lo = shoot(&p, &cfg, 215.0).unwrap();
        let hi = shoot(&p, &cfg, 225.0).unwrap();
        assert_eq!(lo.nodes, 0);
        assert!(lo.mismatch.signum() != hi.mismatch.signum());
    }

    #[test]
    fn outward_nodes_nondecreasing_in_energy() {
        let p = reference();
        let cfg = ShootingConfig::defaults_for(&p);
        let mut prev = 0;
        for e in [200.0, 215.0, 230.0, 245.0, 260.0, 270.0, 278.0] {
            let shot = shoot(&p, &cfg, e).unwrap();
            assert!(
                shot.nodes >= prev,
                "node count decreased at {e}: {} < {prev}",
                shot.nodes
            );
            prev = shot.nodes;
        }
    }

    #[test]
    fn config_validation() {
        let p = reference();
        let mut cfg = ShootingConfig::defaults_for(&p);
        cfg.step = 0.0;
        assert!(matches!(
            shoot(&p, &cfg, 220.0),
            Err(OracleError::InvalidConfig { .. })
        ));
        let mut cfg = ShootingConfig::defaults_for(&p);
        cfg.r_min = 10.0;
        assert!(matches!(
            oracle_spectrum(&p, &cfg, 1, 0),
            Err(OracleError::InvalidConfig { .. })
        ));
    }
}
