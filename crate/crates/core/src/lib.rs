//! Bound states of a relativistic spin-0 charged particle in a shifted
//! Morse well.
//!
//! Eigenvalues come from a transcendental quantization condition built on a
//! quadratic (Pekeris-type) approximation of the effective radial term;
//! wavefunctions are terminating Kummer polynomials times Morse-variable
//! exponentials, from which signed charge densities follow. An independent
//! Numerov shooting solver integrates the exact equation with no
//! approximation of the effective term and cross-checks the analytic
//! energies; it is also the only treatment of the equal scalar-vector
//! coupling case.
//!
//! ```
//! use kgmorse::{solve_spectrum, Branch, ModelParams};
//!
//! let params = ModelParams::reference();
//! let states = solve_spectrum(&params, 2, 1).unwrap();
//! for s in states.iter().filter(|s| s.branch == Branch::Particle) {
//!     println!("n={} l={} E={:.3} MeV", s.n, s.ell, s.energy);
//! }
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)] // !(x > 0.0) guards reject NaN

pub mod constants;
pub mod kummer;
pub mod model;
pub mod oracle;
pub mod spectrum;
pub mod wavefunction;

pub use constants::HBAR_C;
pub use kummer::{KummerError, KummerPolynomial};
pub use model::{Coupling, ModelError, ModelParams, PekerisCoefficients};
pub use oracle::{
    effective_w, oracle_spectrum, shoot, OracleError, OracleResult, ShootingConfig, Shot,
};
pub use spectrum::{
    depth_sweep, quantization_residual, solve_spectrum, BetaSet, BoundState, Branch, DepthPoint,
    SpectrumError,
};
pub use wavefunction::{
    build_chi, build_default_profile, build_profile, count_nodes, default_window, ProfileError,
    RadialProfile,
};
