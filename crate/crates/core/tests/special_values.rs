use std::f64::consts::PI;

use qfield_core::special::{dedekind_zeta, dirichlet_l_pair_with, EvaluationParams, EULER_GAMMA_REFERENCE};
use qfield_core::{
    dirichlet_l, dirichlet_l_prime, euler_gamma, hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta, riemann_zeta_prime,
    CoefficientKind, Discriminant, SieveConfig, SummationEngine,
};

fn d(v: i64) -> Discriminant {
    Discriminant::new(v).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

/// `sum_{n > N} f(n)` by Euler–Maclaurin through the `f'` term, `F` an antiderivative tail.
fn em_tail(integral_tail: f64, f: f64, fprime: f64) -> f64 {
    integral_tail - f / 2.0 - fprime / 12.0
}

/// `-sum ln n / n^s` for integer `s >= 2`, directly plus an Euler–Maclaurin tail.
fn zeta_prime_direct(s: i32) -> f64 {
    let big_n = 200_000u32;
    let mut terms: Vec<f64> = (2..=big_n).map(|n| (n as f64).ln() / (n as f64).powi(s)).collect();
    terms.reverse();
    let head: f64 = terms.iter().sum();
    let n = big_n as f64;
    let ln_n = n.ln();
    let sm1 = (s - 1) as f64;
    // int_N^inf ln t / t^s dt
    let integral = n.powf(-sm1) * (ln_n / sm1 + 1.0 / (sm1 * sm1));
    let f = ln_n / n.powi(s);
    let fprime = (1.0 - s as f64 * ln_n) / n.powi(s + 1);
    -(head + em_tail(integral, f, fprime))
}

/// Catalan's constant from Ramanujan's series `pi/8 ln(2 + sqrt 3) + 3/8 sum 1 / ((2k+1)^2 C(2k, k))`.
fn catalan() -> f64 {
    let mut sum = 0.0;
    let mut central = 1.0; // C(2k, k)
    for k in 0..40 {
        let kk = k as f64;
        if k > 0 {
            central *= (2.0 * kk) * (2.0 * kk - 1.0) / (kk * kk);
        }
        sum += 1.0 / ((2.0 * kk + 1.0).powi(2) * central);
    }
    PI / 8.0 * (2.0 + 3f64.sqrt()).ln() + 3.0 / 8.0 * sum
}

/// `ln Gamma(1/4)` from `Gamma(1/4)^2 = 2 varpi sqrt(2 pi)`, `varpi = pi / agm(1, sqrt 2)`.
fn ln_gamma_quarter() -> f64 {
    let (mut a, mut b) = (1.0f64, 2f64.sqrt());
    for _ in 0..10 {
        (a, b) = ((a + b) / 2.0, (a * b).sqrt());
    }
    let varpi = PI / a;
    0.5 * (2.0 * varpi * (2.0 * PI).sqrt()).ln()
}

#[test]
fn euler_gamma_reference() {
    assert!(close(euler_gamma(), EULER_GAMMA_REFERENCE, 1e-12));
}

#[test]
fn zeta_derivatives_against_direct_sums() {
    assert!(close(riemann_zeta_prime(2.0).unwrap(), zeta_prime_direct(2), 1e-12));
    assert!(close(riemann_zeta_prime(3.0).unwrap(), zeta_prime_direct(3), 1e-12));
    assert!(close(riemann_zeta(2.0).unwrap(), PI * PI / 6.0, 1e-13));
    assert!(close(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0, 1e-13));
}

#[test]
fn hurwitz_half_is_three_zeta_two() {
    assert!(close(hurwitz_zeta(2.0, 0.5).unwrap(), PI * PI / 2.0, 1e-12));
}

#[test]
fn hurwitz_zeta_decreases_in_a() {
    for s in [1.5, 2.0, 3.0, 5.0] {
        let mut prev = f64::INFINITY;
        for k in 1..=40 {
            let v = hurwitz_zeta(s, k as f64 / 40.0).unwrap();
            assert!(v < prev, "s = {s}, a = {}", k as f64 / 40.0);
            prev = v;
        }
    }
}

#[test]
fn gaussian_character_values() {
    let disc = d(-4);
    assert!(close(dirichlet_l(1.0, &disc).unwrap(), PI / 4.0, 1e-14));
    assert!(close(dirichlet_l(2.0, &disc).unwrap(), catalan(), 1e-13));
    // L'(1) = (pi/4)(gamma + 2 ln 2 + 3 ln pi - 4 ln Gamma(1/4))
    let closed = PI / 4.0 * (EULER_GAMMA_REFERENCE + 2.0 * 2f64.ln() + 3.0 * PI.ln() - 4.0 * ln_gamma_quarter());
    assert!(close(dirichlet_l_prime(1.0, &disc).unwrap(), closed, 1e-13));
    // second route: partial sums of -sum chi(n) ln n / n, averaged over consecutive
    // pairs to cancel the alternating error
    let term = |n: u64| -> f64 {
        let sign = match n % 4 {
            1 => 1.0,
            3 => -1.0,
            _ => 0.0,
        };
        -sign * (n as f64).ln() / n as f64
    };
    let mut s = 0.0;
    let mut prev = 0.0;
    for n in 1..=2_000_001u64 {
        prev = s;
        s += term(n);
    }
    let averaged = 0.5 * (s + prev);
    assert!(close(dirichlet_l_prime(1.0, &disc).unwrap(), averaged, 1e-9), "{averaged}");
}

// 50-digit references from mpmath: L(1), L'(1), L(2), L'(2).
const REFERENCES: [(i64, [f64; 4]); 10] = [
    (-4, [0.785398163397448309616, 0.192901316796912429363, 0.915965594177219015055, 0.0815807361165927951029]),
    (-7, [1.18741041172372594878, 0.0185659810930280571716, 1.1519254705444910471, -0.0608556612241972305798]),
    (-8, [1.11072073453959156175, -0.0230045878627360103181, 1.06473417104350337039, -0.0482940088597470514374]),
    (-11, [0.94722582509948293643, -0.0797737527762439195431, 0.909539105323883701532, -0.000270829096882809631966]),
    (-19, [0.720730784145667945391, -0.0611999044595530963121, 0.768851274399246489688, 0.102276950617772755623]),
    (-43, [0.479088388239857211764, 0.119524085971490482139, 0.690541072225259027473, 0.209134477732413879805]),
    (-67, [0.383806628882915516388, 0.252684365584742257235, 0.67471820415503637397, 0.241596009380230305169]),
    (-163, [0.246068527552960243898, 0.533557063955933966045, 0.662386332699311209338, 0.274229175701149067728]),
    (5, [0.430408940964004038889, 0.356240647030761498865, 0.706211403259740969931, 0.202662114870808015275]),
    (8, [0.623225240140230513394, 0.393950001506418128768, 0.87235802495485994177, 0.141518322649956442034]),
];

#[test]
fn l_values_against_high_precision_references() {
    let params = EvaluationParams::default();
    for (v, [l1, l1p, l2, l2p]) in REFERENCES {
        let disc = d(v);
        let (a, ap) = dirichlet_l_pair_with(1.0, &disc, &params).unwrap();
        let (b, bp) = dirichlet_l_pair_with(2.0, &disc, &params).unwrap();
        for (got, want) in [(a, l1), (ap, l1p), (b, l2), (bp, l2p)] {
            assert!(close(got, want, 1e-13), "D = {v}: {got} vs {want}");
        }
    }
}

#[test]
fn l_at_two_against_direct_series() {
    // sum chi(n)/n^2 with the tail bounded by sum_{n > N} 1/n^2 < 1/N over full periods
    for v in [-3i64, -4, -7, -8, 5, 8] {
        let disc = d(v);
        let q = v.unsigned_abs();
        let periods = 200_000 / q;
        let direct: f64 = (1..=periods * q).rev().map(|n| disc.chi(n) as f64 / (n as f64).powi(2)).sum();
        // the tail over full periods is O(q / N^2)
        let bound = 4.0 * q as f64 / ((periods * q) as f64).powi(2);
        assert!(close(dirichlet_l(2.0, &disc).unwrap(), direct, bound), "D = {v}");
    }
}

#[test]
fn derivatives_agree_with_central_differences() {
    for h in [1e-5, 1e-6] {
        for (s, a) in [(2.0, 0.25), (1.5, 1.0), (3.0, 0.75), (1.2, 0.1)] {
            let fd = (hurwitz_zeta(s + h, a).unwrap() - hurwitz_zeta(s - h, a).unwrap()) / (2.0 * h);
            assert!(close(hurwitz_zeta_sderiv(s, a).unwrap(), fd, 1e-7 * fd.abs().max(1.0)), "s = {s}, a = {a}");
        }
        for v in [-4i64, -23, 5, -163] {
            let disc = d(v);
            for s in [1.5, 2.0] {
                let fd = (dirichlet_l(s + h, &disc).unwrap() - dirichlet_l(s - h, &disc).unwrap()) / (2.0 * h);
                assert!(close(dirichlet_l_prime(s, &disc).unwrap(), fd, 1e-7), "D = {v}, s = {s}");
            }
            // one-sided at the edge of the domain
            let l = |s: f64| dirichlet_l(s, &disc).unwrap();
            let fd = (-3.0 * l(1.0) + 4.0 * l(1.0 + h) - l(1.0 + 2.0 * h)) / (2.0 * h);
            assert!(close(dirichlet_l_prime(1.0, &disc).unwrap(), fd, 1e-7), "D = {v}, s = 1");
        }
    }
}

#[test]
fn dedekind_zeta_factorization() {
    let engine = SummationEngine::new(SieveConfig::default()).unwrap();
    for v in [-3i64, -4, -7, 5, 13] {
        let disc = d(v);
        for s in [3.0, 4.0] {
            let series = engine.dirichlet_partial_sum(CoefficientKind::IdealCount, &disc, s, 200_000).unwrap();
            assert!(close(series, dedekind_zeta(s, &disc).unwrap(), 1e-8), "D = {v}, s = {s}");
        }
    }
}

#[test]
fn rejects_out_of_domain_arguments() {
    assert!(riemann_zeta(1.0).is_err());
    assert!(hurwitz_zeta(2.0, 0.0).is_err());
    assert!(dirichlet_l(0.5, &d(-4)).is_err());
    assert!(dirichlet_l(1.0, &d(9)).is_err());
    assert!(EvaluationParams::new(5, 12).is_err());
    assert!(EvaluationParams::new(64, 30).is_err());
}
