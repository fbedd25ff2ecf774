//! Main-term constants `A`, `B` of `sum_{n <= x} a(n) = A x ln x + B x + error`
//! for `a(n) = r_K(n)^2` and `a(n) = r_K(n^3)`, assembled from special values and
//! Euler products.

use std::f64::consts::PI;

use serde::Serialize;

use crate::discriminant::Discriminant;
use crate::error::{Error, Result};
use crate::euler_products::{log_deriv_g_at_1, product_g, ramified_log_sum, ramified_product, ProductTruncation};
use crate::form::QuadraticForm;
use crate::special::{dirichlet_l_pair_with, euler_gamma, riemann_zeta_prime, EvaluationParams};

/// Which asymptotic formula a constant set instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ConstantSource {
    /// `sum r_K(n)^2`.
    Corollary1,
    /// `sum r_K(n^3)`.
    Corollary2,
    /// Solutions of `Q(u, v) = w^3`, scaled by the unit count.
    Corollary3,
    /// `A = B = 0`; compatible with every coefficient kind.
    Zero,
}

/// A main-term pair with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantSet {
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub source: ConstantSource,
    #[serde(rename = "D")]
    pub discriminant: i64,
    pub omega_scaling: u64,
}

impl ConstantSet {
    pub fn zero(disc: &Discriminant) -> Self {
        Self {
            a: 0.0,
            b: 0.0,
            source: ConstantSource::Zero,
            discriminant: disc.value(),
            omega_scaling: 1,
        }
    }

    /// Multiply both constants by `factor`, e.g. 16 to pass from `r_K(n)^2` to
    /// `r(n)^2` over `Q(i)`.
    pub fn scaled(&self, factor: u64) -> Self {
        Self {
            a: self.a * factor as f64,
            b: self.b * factor as f64,
            omega_scaling: self.omega_scaling * factor,
            ..self.clone()
        }
    }
}

/// Every constant that enters `A` and `B`, at one discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Ingredients {
    pub l1: f64,
    pub l1_prime: f64,
    pub l2: f64,
    pub l2_prime: f64,
    pub gamma: f64,
    pub zeta_prime_2: f64,
    pub ramified_product_1: f64,
    pub ramified_log_sum: f64,
    pub g1: f64,
    pub g_log_deriv_1: f64,
    pub g1_log_tail_bound: f64,
    pub g_log_deriv_tail_bound: f64,
}

impl Ingredients {
    /// Everything needed by the `r_K(n)^2` constants; the `G` fields are left NaN.
    pub fn without_product(disc: &Discriminant) -> Result<Self> {
        let params = EvaluationParams::default();
        let (l1, l1_prime) = dirichlet_l_pair_with(1.0, disc, &params)?;
        let (l2, l2_prime) = dirichlet_l_pair_with(2.0, disc, &params)?;
        Ok(Self {
            l1,
            l1_prime,
            l2,
            l2_prime,
            gamma: euler_gamma(),
            zeta_prime_2: riemann_zeta_prime(2.0)?,
            ramified_product_1: ramified_product(1.0, disc)?,
            ramified_log_sum: ramified_log_sum(disc),
            g1: f64::NAN,
            g_log_deriv_1: f64::NAN,
            g1_log_tail_bound: f64::NAN,
            g_log_deriv_tail_bound: f64::NAN,
        })
    }

    pub fn compute(disc: &Discriminant, trunc: &ProductTruncation) -> Result<Self> {
        require_fundamental(disc)?;
        let mut out = Self::without_product(disc)?;
        let g = product_g(1.0, disc, trunc)?;
        let dg = log_deriv_g_at_1(disc, trunc)?;
        out.g1 = g.value;
        out.g1_log_tail_bound = g.tail_bound;
        out.g_log_deriv_1 = dg.value;
        out.g_log_deriv_tail_bound = dg.tail_bound;
        Ok(out)
    }

    pub fn corollary1(&self, disc: &Discriminant) -> ConstantSet {
        let a = 6.0 / (PI * PI) * self.l1 * self.l1 * self.ramified_product_1;
        let bracket = -1.0 + 2.0 * self.gamma + self.ramified_log_sum + 2.0 * self.l1_prime / self.l1
            - 12.0 / (PI * PI) * self.zeta_prime_2;
        ConstantSet {
            a,
            b: a * bracket,
            source: ConstantSource::Corollary1,
            discriminant: disc.value(),
            omega_scaling: 1,
        }
    }

    pub fn corollary2(&self, disc: &Discriminant) -> ConstantSet {
        let a = 36.0 * self.l1 * self.l1 * self.g1 / (PI.powi(4) * self.l2);
        let bracket = 2.0 * self.l1_prime / self.l1 - 1.0 + 2.0 * self.gamma + self.g_log_deriv_1
            - 2.0 * self.l2_prime / self.l2
            - 24.0 * self.zeta_prime_2 / (PI * PI);
        ConstantSet {
            a,
            b: a * bracket,
            source: ConstantSource::Corollary2,
            discriminant: disc.value(),
            omega_scaling: 1,
        }
    }
}

fn require_fundamental(disc: &Discriminant) -> Result<()> {
    if !disc.is_fundamental() {
        return Err(Error::NotFundamental(disc.value()));
    }
    Ok(())
}

/// `A_1 = (6/pi^2) L(1)^2 prod_{p|D} p/(p+1)` and
/// `B_1 = A_1 (-1 + 2 gamma + sum_{p|D} ln p/(p+1) + 2 L'(1)/L(1) - (12/pi^2) zeta'(2))`.
pub fn constants_corollary1(disc: &Discriminant) -> Result<ConstantSet> {
    require_fundamental(disc)?;
    Ok(Ingredients::without_product(disc)?.corollary1(disc))
}

/// `A_2 = 36 L(1)^2 G(1) / (pi^4 L(2))` and
/// `B_2 = A_2 (2 L'(1)/L(1) - 1 + 2 gamma + G'(1)/G(1) - 2 L'(2)/L(2) - 24 zeta'(2)/pi^2)`.
pub fn constants_corollary2(disc: &Discriminant, trunc: &ProductTruncation) -> Result<ConstantSet> {
    Ok(Ingredients::compute(disc, trunc)?.corollary2(disc))
}

/// `omega_D (A_2, B_2)` for a class-number-one form of fundamental discriminant.
pub fn constants_corollary3(q: &QuadraticForm, trunc: &ProductTruncation) -> Result<ConstantSet> {
    q.require_class_number_one()?;
    let disc = q.discriminant();
    let base = constants_corollary2(disc, trunc)?;
    let omega = q.omega();
    Ok(ConstantSet {
        source: ConstantSource::Corollary3,
        ..base.scaled(omega)
    })
}

/// `A x ln x + B x`.
pub fn main_term(c: &ConstantSet, x: f64) -> Result<f64> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(Error::Domain(format!("main_term requires x >= 2, got {x}")));
    }
    Ok(c.a * x * x.ln() + c.b * x)
}
