//! Terminating confluent hypergeometric function Φ(-n, b; z).
//!
//! With a nonpositive integer first argument the Kummer series terminates
//! after n + 1 terms and Φ is a degree-n polynomial:
//!
//! ```text
//! Φ(-n, b; z) = Σ_{k=0}^{n} (-n)_k / (b)_k · z^k / k!
//! ```
//!
//! where (·)_k is the rising factorial. For b > 0 it is proportional to the
//! generalized Laguerre polynomial L_n^{(b-1)}(z) and has exactly n positive
//! roots, which is what fixes the node structure of the radial wavefunctions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KummerError {
    #[error("second parameter must be positive, got b = {b}")]
    NonPositiveB { b: f64 },
}

/// Φ(-n, b; ·) for a fixed degree n and second parameter b > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerPolynomial {
    n: u32,
    b: f64,
}

impl KummerPolynomial {
    pub fn new(n: u32, b: f64) -> Result<Self, KummerError> {
        if !(b > 0.0) {
            return Err(KummerError::NonPositiveB { b });
        }
        Ok(Self { n, b })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn second_parameter(&self) -> f64 {
        self.b
    }

    /// Evaluate the terminating sum. The running coefficient follows
    /// c_{k+1} = c_k · (k - n) / ((b + k)(k + 1)), so the sum is exact after
    /// n + 1 terms with no cancellation issues at the small degrees used here.
    pub fn eval(&self, z: f64) -> f64 {
        let n = self.n as f64;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..self.n {
            let kf = k as f64;
            term *= (kf - n) * z / ((self.b + kf) * (kf + 1.0));
            sum += term;
        }
        sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn degree_zero_is_identically_one() {
        let k = KummerPolynomial::new(0, 1.7).unwrap();
        for z in [0.0, 0.3, 2.0, 9.5] {
            assert_eq!(k.eval(z), 1.0);
        }
    }

    #[test]
    fn degree_one_closed_form() {
        // Φ(-1, b; z) = 1 - z/b; at z = b = 3 this vanishes.
        let k = KummerPolynomial::new(1, 3.0).unwrap();
        assert_eq!(k.eval(3.0), 0.0);
        assert_relative_eq!(k.eval(1.2), 1.0 - 1.2 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn unit_value_at_origin() {
        for n in 0..=6 {
            let k = KummerPolynomial::new(n, 0.73).unwrap();
            assert_eq!(k.eval(0.0), 1.0);
        }
    }

    #[test]
    fn rejects_nonpositive_b() {
        assert!(KummerPolynomial::new(2, 0.0).is_err());
        assert!(KummerPolynomial::new(2, -1.0).is_err());
    }

    #[test]
    fn has_n_positive_roots() {
        // Count strict sign changes on a fine grid; the Laguerre-type zero
        // structure puts all n roots on z > 0.
        for (n, b) in [(1, 2.2), (2, 0.8), (3, 2.7), (4, 5.0), (6, 1.3)] {
            let k = KummerPolynomial::new(n, b).unwrap();
            let mut prev = k.eval(1e-9);
            let mut flips = 0;
            let mut z = 0.0;
            while z < 120.0 {
                z += 0.001;
                let v = k.eval(z);
                if prev != 0.0 && v != 0.0 && prev.signum() != v.signum() {
                    flips += 1;
                }
                if v != 0.0 {
                    prev = v;
                }
            }
            assert_eq!(flips, n, "Φ(-{n}, {b}; z) should have {n} positive roots");
        }
    }

    /// Independent generalized-Laguerre recurrence:
    /// L_0 = 1, L_1 = 1 + α - z,
    /// (k+1) L_{k+1} = (2k + 1 + α - z) L_k - (k + α) L_{k-1}.
    fn laguerre(n: u32, alpha: f64, z: f64) -> f64 {
        if n == 0 {
            return 1.0;
        }
        let mut lm = 1.0;
        let mut l = 1.0 + alpha - z;
        for k in 1..n {
            let kf = k as f64;
            let next = ((2.0 * kf + 1.0 + alpha - z) * l - (kf + alpha) * lm) / (kf + 1.0);
            lm = l;
            l = next;
        }
        l
    }

    proptest! {
        /// Φ(-n, b; z) = n! Γ(b)/Γ(n+b) · L_n^{(b-1)}(z); the prefactor is
        /// n!/[(b)(b+1)...(b+n-1)], no gamma evaluation needed.
        #[test]
        fn matches_laguerre_connection(n in 0u32..=6, b in 0.5f64..20.0, z in 0.0f64..10.0) {
            let k = KummerPolynomial::new(n, b).unwrap();
            let mut prefactor = 1.0;
            for j in 0..n {
                prefactor *= (j as f64 + 1.0) / (b + j as f64);
            }
            let expected = prefactor * laguerre(n, b - 1.0, z);
            let got = k.eval(z);
            // Both routes carry absolute rounding noise of a few ε times the
            // largest partial term, so near a root of the polynomial the
            // value itself is not a usable scale; floor it at the term scale.
            let term_scale = (0..=n)
                .scan(1.0_f64, |t, kk| {
                    if kk > 0 {
                        let kf = kk as f64 - 1.0;
                        *t *= (kf - n as f64) * z / ((b + kf) * (kf + 1.0));
                    }
                    Some(t.abs())
                })
                .fold(1.0_f64, f64::max);
            let scale = expected.abs().max(term_scale);
            prop_assert!(
                (got - expected).abs() / scale < 1e-12,
                "n={} b={} z={}: eval {} vs laguerre route {}", n, b, z, got, expected
            );
        }
    }
}
