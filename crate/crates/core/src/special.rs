//! Real-argument special values: Euler's constant, `zeta`, the Hurwitz zeta
//! function, Dirichlet L-functions of quadratic characters, and their
//! `s`-derivatives.
//!
//! Everything goes through one Euler–Maclaurin kernel for the regular part of
//! the Hurwitz zeta function,
//!
//! ```text
//! R(s, a) = zeta(s, a) - 1/(s - 1),
//! ```
//!
//! together with its `s`-derivative computed term by term. `R` is analytic at
//! `s = 1`, so `L(s, chi) = q^-s sum_a chi(a) R(s, a/q)` (the pole terms cancel
//! because the character sums to zero over a period) holds for all `s >= 1`,
//! including the edge of convergence.

use crate::compensated::CompensatedSum;
use crate::discriminant::Discriminant;
use crate::error::{Error, Result};

/// `B_{2j} / (2j)!` for `j = 1..=20`.
const BERNOULLI_OVER_FACTORIAL: [f64; 20] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
];

/// Euler's constant to 30 digits, for cross-checking the computed value.
pub const EULER_GAMMA_REFERENCE: f64 = 0.577_215_664_901_532_860_606_512_090_082;

/// Direct-sum length and number of Euler–Maclaurin corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvaluationParams {
    pub cutoff: usize,
    pub bernoulli_order: usize,
}

impl Default for EvaluationParams {
    fn default() -> Self {
        Self { cutoff: 64, bernoulli_order: 12 }
    }
}

impl EvaluationParams {
    pub fn new(cutoff: usize, bernoulli_order: usize) -> Result<Self> {
        let p = Self { cutoff, bernoulli_order };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.cutoff < 10 {
            return Err(Error::InvalidParams(format!("cutoff {} < 10", self.cutoff)));
        }
        if !(2..=BERNOULLI_OVER_FACTORIAL.len()).contains(&self.bernoulli_order) {
            return Err(Error::InvalidParams(format!(
                "bernoulli order {} outside [2, 20]",
                self.bernoulli_order
            )));
        }
        Ok(())
    }
}

/// `(R(s, a), dR/ds(s, a))` for `s >= 1`, `0 < a <= 1`.
fn regular_part(s: f64, a: f64, params: &EvaluationParams) -> (f64, f64) {
    let n = params.cutoff;
    let mut value = CompensatedSum::new();
    let mut deriv = CompensatedSum::new();
    for k in 0..n {
        let t = k as f64 + a;
        let ln_t = t.ln();
        let term = (-s * ln_t).exp();
        value += term;
        deriv += -ln_t * term;
    }

    let w = n as f64 + a;
    let ln_w = w.ln();
    let (pole_value, pole_deriv) = pole_remainder(s - 1.0, ln_w);
    value += pole_value;
    deriv += pole_deriv;

    let w_pow = (-s * ln_w).exp();
    value += 0.5 * w_pow;
    deriv += -0.5 * ln_w * w_pow;

    // T_j = B_{2j}/(2j)! * s(s+1)...(s+2j-2) * w^(-s-2j+1)
    let mut rising = s;
    let mut log_rising_deriv = 1.0 / s;
    let mut w_factor = w_pow / w;
    let w_inv2 = 1.0 / (w * w);
    for (j, &b) in BERNOULLI_OVER_FACTORIAL[..params.bernoulli_order].iter().enumerate() {
        if j > 0 {
            let i = (2 * j - 1) as f64;
            rising *= (s + i) * (s + i + 1.0);
            log_rising_deriv += 1.0 / (s + i) + 1.0 / (s + i + 1.0);
            w_factor *= w_inv2;
        }
        let term = b * rising * w_factor;
        value += term;
        deriv += term * (log_rising_deriv - ln_w);
    }
    (value.value(), deriv.value())
}

/// `g(u) = (w^-u - 1)/u` and `g'(u)` with `ln w` given, stable as `u -> 0`.
fn pole_remainder(u: f64, ln_w: f64) -> (f64, f64) {
    let x = u * ln_w;
    if x.abs() < 0.5 {
        // g = -L sum_{k>=1} (-x)^(k-1)/k!,  g' = L^2 sum_{k>=2} (-x)^(k-2) (k-1)/k!
        let mut g = 0.0;
        let mut dg = 0.0;
        let mut fact = 1.0;
        // (-x)^(k-2) before the update, (-x)^(k-1) after
        let mut power = 1.0;
        for k in 1..=30 {
            fact *= k as f64;
            if k >= 2 {
                dg += (k - 1) as f64 * power / fact;
                power *= -x;
            }
            g += power / fact;
        }
        (-ln_w * g, ln_w * ln_w * dg)
    } else {
        let e = (-x).exp();
        let g = (e - 1.0) / u;
        let dg = -(e * (1.0 + x) - 1.0) / (u * u);
        (g, dg)
    }
}

fn check_s_above_one(s: f64, what: &str) -> Result<()> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("{what} requires real s > 1, got {s}")));
    }
    Ok(())
}

fn check_hurwitz(s: f64, a: f64) -> Result<()> {
    check_s_above_one(s, "hurwitz_zeta")?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("hurwitz_zeta requires 0 < a <= 1, got {a}")));
    }
    Ok(())
}

/// Euler's constant, as the finite part of `zeta(s)` at `s = 1`.
pub fn euler_gamma() -> f64 {
    regular_part(1.0, 1.0, &EvaluationParams::default()).0
}

pub fn hurwitz_zeta_with(s: f64, a: f64, params: &EvaluationParams) -> Result<f64> {
    check_hurwitz(s, a)?;
    params.validate()?;
    Ok(regular_part(s, a, params).0 + 1.0 / (s - 1.0))
}

pub fn hurwitz_zeta_sderiv_with(s: f64, a: f64, params: &EvaluationParams) -> Result<f64> {
    check_hurwitz(s, a)?;
    params.validate()?;
    let u = s - 1.0;
    Ok(regular_part(s, a, params).1 - 1.0 / (u * u))
}

/// `zeta(s, a) = sum_{k>=0} (k + a)^-s`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta_with(s, a, &EvaluationParams::default())
}

/// `d/ds zeta(s, a)`.
pub fn hurwitz_zeta_sderiv(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta_sderiv_with(s, a, &EvaluationParams::default())
}

pub fn riemann_zeta(s: f64) -> Result<f64> {
    check_s_above_one(s, "riemann_zeta")?;
    hurwitz_zeta(s, 1.0)
}

pub fn riemann_zeta_prime(s: f64) -> Result<f64> {
    check_s_above_one(s, "riemann_zeta_prime")?;
    hurwitz_zeta_sderiv(s, 1.0)
}

/// `(L(s, chi_D), L'(s, chi_D))` for `s >= 1`.
pub fn dirichlet_l_pair_with(s: f64, disc: &Discriminant, params: &EvaluationParams) -> Result<(f64, f64)> {
    if !(s >= 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("dirichlet_L requires real s >= 1, got {s}")));
    }
    if disc.is_square() {
        return Err(Error::PrincipalCharacter(disc.value()));
    }
    params.validate()?;
    let q = disc.modulus();
    let qf = q as f64;
    let mut value = CompensatedSum::new();
    let mut deriv = CompensatedSum::new();
    for a in 1..q {
        let chi = disc.chi(a);
        if chi == 0 {
            continue;
        }
        let (r, dr) = regular_part(s, a as f64 / qf, params);
        let sign = f64::from(chi);
        value += sign * r;
        deriv += sign * dr;
    }
    let ln_q = qf.ln();
    let scale = (-s * ln_q).exp();
    let l = scale * value.value();
    let dl = scale * deriv.value() - ln_q * l;
    Ok((l, dl))
}

/// `L(s, chi_D)` for `s >= 1`.
pub fn dirichlet_l(s: f64, disc: &Discriminant) -> Result<f64> {
    dirichlet_l_pair_with(s, disc, &EvaluationParams::default()).map(|p| p.0)
}

/// `L'(s, chi_D)` for `s >= 1`.
pub fn dirichlet_l_prime(s: f64, disc: &Discriminant) -> Result<f64> {
    dirichlet_l_pair_with(s, disc, &EvaluationParams::default()).map(|p| p.1)
}

/// `zeta_K(s) = zeta(s) L(s, chi_D)` for `s > 1`.
pub fn dedekind_zeta(s: f64, disc: &Discriminant) -> Result<f64> {
    Ok(riemann_zeta(s)? * dirichlet_l(s, disc)?)
}
