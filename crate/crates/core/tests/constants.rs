use std::f64::consts::PI;

use proptest::prelude::*;

use qfield_core::special::EULER_GAMMA_REFERENCE;
use qfield_core::{
    constants_corollary1, constants_corollary2, constants_corollary3, main_term, ConstantSource, Discriminant, Error,
    Ingredients, ProductTruncation, QuadraticForm,
};

const FUNDAMENTAL_IDONEAL: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

fn d(v: i64) -> Discriminant {
    Discriminant::new(v).unwrap()
}

fn ln_gamma_quarter() -> f64 {
    let (mut a, mut b) = (1.0f64, 2f64.sqrt());
    for _ in 0..10 {
        (a, b) = ((a + b) / 2.0, (a * b).sqrt());
    }
    0.5 * (2.0 * (PI / a) * (2.0 * PI).sqrt()).ln()
}

fn catalan() -> f64 {
    let mut sum = 0.0;
    let mut central = 1.0;
    for k in 0..40 {
        let kk = k as f64;
        if k > 0 {
            central *= (2.0 * kk) * (2.0 * kk - 1.0) / (kk * kk);
        }
        sum += 1.0 / ((2.0 * kk + 1.0).powi(2) * central);
    }
    PI / 8.0 * (2.0 + 3f64.sqrt()).ln() + 3.0 / 8.0 * sum
}

#[test]
fn gaussian_leading_constant_is_exact() {
    let c = constants_corollary1(&d(-4)).unwrap();
    assert!((c.a - 0.25).abs() <= 1e-9);
    assert!((16.0 * c.a - 4.0).abs() <= 1e-9);
    assert_eq!(c.scaled(16).omega_scaling, 16);
}

#[test]
fn leading_constant_from_class_number_formula() {
    // h = 1 gives L(1) = 2 pi / (omega sqrt|D|), hence A1 = 24 / (omega^2 |D|) prod p/(p+1)
    for v in FUNDAMENTAL_IDONEAL {
        let disc = d(v);
        let omega = disc.unit_count().unwrap() as f64;
        let local: f64 = disc.ramified_primes().iter().map(|&p| p as f64 / (p as f64 + 1.0)).product();
        let expected = 24.0 / (omega * omega * v.unsigned_abs() as f64) * local;
        let a = constants_corollary1(&disc).unwrap().a;
        assert!((a - expected).abs() <= 1e-12, "D = {v}: {a} vs {expected}");
    }
}

#[test]
fn gaussian_secondary_constant_in_closed_form() {
    // 16 B1 = 4 (-1 + 2 gamma + ln 2 / 3 + 2 L'(1)/L(1) - 12 zeta'(2) / pi^2), with
    // L'(1)/L(1) = gamma + 2 ln 2 + 3 ln pi - 4 ln Gamma(1/4) and
    // zeta'(2) = (pi^2 / 6)(gamma + ln 2 pi - 12 ln A), A the Glaisher–Kinkelin constant
    let g = EULER_GAMMA_REFERENCE;
    let glaisher = 1.282_427_129_100_622_6_f64;
    let log_ratio = g + 2.0 * 2f64.ln() + 3.0 * PI.ln() - 4.0 * ln_gamma_quarter();
    let zeta_prime_2 = PI * PI / 6.0 * (g + (2.0 * PI).ln() - 12.0 * glaisher.ln());
    let expected =
        4.0 * (-1.0 + 2.0 * g + 2f64.ln() / 3.0 + 2.0 * log_ratio - 12.0 * zeta_prime_2 / (PI * PI));
    let b = constants_corollary1(&d(-4)).unwrap().b;
    assert!((16.0 * b - expected).abs() <= 1e-9, "{} vs {expected}", 16.0 * b);
}

#[test]
fn gaussian_cubic_leading_constant() {
    // 4 A2 = 9 G(1) / (pi^2 Catalan)
    let disc = d(-4);
    let trunc = ProductTruncation::default();
    let ing = Ingredients::compute(&disc, &trunc).unwrap();
    let c = constants_corollary2(&disc, &trunc).unwrap();
    assert!((4.0 * c.a - 9.0 * ing.g1 / (PI * PI * catalan())).abs() <= 1e-9);
}

#[test]
fn form_constants_scale_by_unit_count() {
    let trunc = ProductTruncation::default();
    for v in FUNDAMENTAL_IDONEAL {
        let disc = d(v);
        let q = QuadraticForm::principal(&disc).unwrap();
        let base = constants_corollary2(&disc, &trunc).unwrap();
        let form = constants_corollary3(&q, &trunc).unwrap();
        let omega = disc.unit_count().unwrap();
        assert_eq!(form.a.to_bits(), (base.a * omega as f64).to_bits());
        assert_eq!(form.b.to_bits(), (base.b * omega as f64).to_bits());
        assert_eq!(form.source, ConstantSource::Corollary3);
        assert_eq!(form.omega_scaling, omega);
    }
}

#[test]
fn non_fundamental_and_unsupported_discriminants() {
    let trunc = ProductTruncation::default();
    assert_eq!(constants_corollary1(&d(-12)), Err(Error::NotFundamental(-12)));
    assert_eq!(constants_corollary2(&d(-16), &trunc), Err(Error::NotFundamental(-16)));
    let q = QuadraticForm::positive_definite(1, 0, 7).unwrap();
    assert_eq!(constants_corollary3(&q, &trunc), Err(Error::NotFundamental(-28)));
    let q = QuadraticForm::positive_definite(1, 0, 5).unwrap();
    assert_eq!(constants_corollary3(&q, &trunc), Err(Error::ClassNumberNotOne(-20)));
}

#[test]
fn constants_exist_for_real_fields() {
    let trunc = ProductTruncation::default();
    for v in [5i64, 8, 12, 13] {
        let c1 = constants_corollary1(&d(v)).unwrap();
        let c2 = constants_corollary2(&d(v), &trunc).unwrap();
        assert!(c1.a > 0.0 && c1.b.is_finite() && c2.a > 0.0 && c2.b.is_finite(), "D = {v}");
    }
}

proptest! {
    #[test]
    fn main_term_is_linear_in_the_constants(x in 2.0f64..1e12, k in 1u64..100, i in 0usize..9) {
        let c = constants_corollary1(&d(FUNDAMENTAL_IDONEAL[i])).unwrap();
        let scaled = main_term(&c.scaled(k), x).unwrap();
        let base = main_term(&c, x).unwrap();
        prop_assert!((scaled - k as f64 * base).abs() <= 1e-12 * scaled.abs());
    }
}
