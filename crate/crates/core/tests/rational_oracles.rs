//! Cross-checks of the f64 evaluation paths against exact rational
//! arithmetic. Inputs are converted from the same f64 values the library
//! sees, every intermediate is a `BigRational`, and the transcendental
//! pieces come from a truncated exponential series with a bounded remainder,
//! so the comparison is independent of the library's floating-point route.

use kgmorse::{BetaSet, Coupling, KummerPolynomial, ModelParams, HBAR_C};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

fn big(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// exp(x) as a partial Taylor sum; terms are added until they drop below
/// 10⁻³⁵, far beyond f64 resolution for the |x| ≲ 4 used here.
fn exp_rational(x: &BigRational) -> BigRational {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let threshold = BigRational::new(BigInt::from(1), BigInt::from(10).pow(35));
    for k in 1..400 {
        term = &term * x / int(k);
        sum += &term;
        if term.abs() < threshold {
            break;
        }
    }
    sum
}

fn assert_close(actual: f64, expected: &BigRational, rel: f64, what: &str) {
    let expected_f = expected.to_f64().expect("representable");
    let scale = expected_f.abs().max(1e-300);
    assert!(
        (actual - expected_f).abs() / scale < rel,
        "{what}: f64 route {actual} vs rational route {expected_f}"
    );
}

#[test]
fn morse_value_off_equilibrium() {
    let p = ModelParams::reference();
    let r = 5.0;
    // V = D0 (1 - e^{-a(r-re)})^2 - D0 with the exponent formed exactly.
    let exponent = -big(p.a) * (big(r) - big(p.re));
    let t = BigRational::one() - exp_rational(&exponent);
    let expected = big(p.d0) * &t * &t - big(p.d0);
    assert_close(p.potential(r), &expected, 1e-13, "Morse at r = 5 fm");
}

#[test]
fn effective_term_off_equilibrium() {
    let p = ModelParams::reference().with_ell(1);
    let r = 9.0;
    let x = (big(r) - big(p.re)) / big(p.re);
    let rho = exp_rational(&(-big(p.a) * (big(r) - big(p.re))));
    let dcap = {
        let s = big(p.d0) * big(p.re) / big(HBAR_C);
        &s * &s
    };
    let rho2 = &rho * &rho;
    let rho3 = &rho2 * &rho;
    let rho4 = &rho2 * &rho2;
    let one_plus_x = BigRational::one() + &x;
    let expected = &dcap * &rho4 - int(4) * &dcap * &rho3 - int(2) / (&one_plus_x * &one_plus_x);
    assert_close(
        p.effective_term(r),
        &expected,
        1e-12,
        "effective term at ell = 1, r = 9 fm",
    );
}

#[test]
fn beta_coefficients_at_200_mev() {
    let p = ModelParams::reference();
    let c = p.pekeris_coefficients();
    let e = 200.0;
    let b = BetaSet::evaluate(&p, &c, e).expect("inside the solvable domain");

    let kappa = BigRational::one() / {
        let s = big(p.a) * big(HBAR_C);
        &s * &s
    };
    let alpha_sq = {
        let a = big(p.a) * big(p.re);
        &a * &a
    };
    let dcap = {
        let s = big(p.d0) * big(p.re) / big(HBAR_C);
        &s * &s
    };
    // ℓ = 0: A0 = -D, A1 = 4D, A2 = -6D.
    let beta0_sq =
        (big(p.mc2) * big(p.mc2) - big(e) * big(e)) * &kappa + &dcap / &alpha_sq;
    let beta1 = int(4) * big(e) * big(p.d0) * &kappa + int(4) * &dcap / &alpha_sq;
    let beta2_sq = (int(2) * big(e) * big(p.d0) - int(4) * big(p.d0) * big(p.d0)) * &kappa
        + int(6) * &dcap / &alpha_sq;

    assert_close(b.beta0 * b.beta0, &beta0_sq, 1e-13, "β̄₀²");
    assert_close(b.beta1, &beta1, 1e-13, "β̄₁");
    assert_close(b.beta2 * b.beta2, &beta2_sq, 1e-13, "β̄₂²");
}

#[test]
fn kummer_against_exact_terminating_sum() {
    // Σ_{k=0}^{n} (-n)_k / (b)_k · z^k / k! in exact arithmetic.
    let rational_phi = |n: i64, b: f64, z: f64| -> BigRational {
        let mut term = BigRational::one();
        let mut sum = BigRational::one();
        for k in 0..n {
            term = term * (int(k) - int(n)) * big(z) / ((big(b) + int(k)) * int(k + 1));
            sum += &term;
        }
        sum
    };
    let k = KummerPolynomial::new(3, 2.7).unwrap();
    for z in [0.5, 1.0, 4.0] {
        let expected = rational_phi(3, 2.7, z);
        assert_close(k.eval(z), &expected, 1e-12, "Φ(-3, 2.7; z)");
    }
}

#[test]
fn equal_coupling_w_matches_rational_route() {
    // W(re) for equal coupling: [(E + D0)² - (mc² - D0)²] / (ħc)².
    let p = ModelParams::new(90.0, 0.43, 7.5, 280.0, 0, Coupling::EqualScalarVector).unwrap();
    let e = 310.0;
    let lhs = big(e) + big(p.d0);
    let rhs = big(p.mc2) - big(p.d0);
    let expected = (&lhs * &lhs - &rhs * &rhs) / (big(HBAR_C) * big(HBAR_C));
    assert_close(
        kgmorse::effective_w(&p, e, p.re),
        &expected,
        1e-12,
        "equal-coupling W at re",
    );
}
