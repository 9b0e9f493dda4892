//! Physical constants and unit conventions.
//!
//! All energies are in MeV and all lengths in fm throughout the crate.

/// ℏc — reduced Planck constant × speed of light (MeV·fm), CODATA 2018.
pub const HBAR_C: f64 = 197.3269804;

/// (ℏc)² in MeV²·fm².
pub const HBAR_C_SQ: f64 = HBAR_C * HBAR_C;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hbar_c_codata2018() {
        // CODATA 2018: ℏc = 197.3269804 ± 0.0000097 MeV·fm
        assert!((HBAR_C - 197.3269804).abs() < 1e-6);
        assert!((HBAR_C_SQ - HBAR_C * HBAR_C).abs() < 1e-12);
    }
}
