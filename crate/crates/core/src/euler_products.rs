//! Truncated Euler products over primes for the correction factor `G(s)` of
//! the `r_K(n^3)` series, its logarithmic derivative at `s = 1`, and the finite
//! products over ramified primes.
//!
//! `G` has local factors, with `z = p^-s`,
//!
//! ```text
//! ramified:  (1 - z) / (1 - z^2)^2
//! split:     h(z) = (1 + 2z)(1 - z)^2 (1 - z^2)^-3 = 1 + z^3 (2 + z) / ((1 - z)(1 + z)^3)
//! inert:     (1 - z^4)^-1
//! ```
//!
//! so the unramified factors are `1 + O(p^-3s)` and truncating at a prime bound
//! `P` leaves a tail that is bounded explicitly below.

use serde::Serialize;

use crate::compensated::CompensatedSum;
use crate::discriminant::{primes_up_to, Discriminant, PrimeClass};
use crate::error::{Error, Result};

pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;
pub const MIN_PRIME_BOUND: u64 = 100;

// pi(t) < 1.25506 t / ln t for t > 1 (Rosser–Schoenfeld).
const PI_BOUND: f64 = 1.25506;
// theta(t) < 1.01624 t for t > 0 (Rosser–Schoenfeld).
const THETA_BOUND: f64 = 1.01624;
// For p > 100 and s >= 1 every unramified |log factor| is at most this times p^-3s.
const LOG_FACTOR_CONSTANT: f64 = 2.04;
// For p > 100 every unramified log-derivative summand is at most this times ln p / p^3.
const LOG_DERIV_CONSTANT: f64 = 6.0;

/// Include the primes up to `prime_bound`, plus every ramified prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductTruncation {
    pub prime_bound: u64,
}

impl Default for ProductTruncation {
    fn default() -> Self {
        Self { prime_bound: DEFAULT_PRIME_BOUND }
    }
}

impl ProductTruncation {
    pub fn new(prime_bound: u64) -> Result<Self> {
        if prime_bound < MIN_PRIME_BOUND {
            return Err(Error::Domain(format!(
                "prime bound {prime_bound} is below the minimum {MIN_PRIME_BOUND}"
            )));
        }
        Ok(Self { prime_bound })
    }

    /// Bound on `|log G(s) - log G_P(s)|`.
    ///
    /// `sum_{p > P} p^-sigma <= 1.25506 sigma P^(1 - sigma) / ((sigma - 1) ln P)` by
    /// partial summation against `pi(t)`, applied with `sigma = 3s`.
    pub fn product_tail_bound(&self, s: f64) -> f64 {
        let p = self.prime_bound as f64;
        let sigma = 3.0 * s;
        LOG_FACTOR_CONSTANT * PI_BOUND * sigma * p.powf(1.0 - sigma) / ((sigma - 1.0) * p.ln())
    }

    /// Bound on the omitted part of `G'(1)/G(1)`.
    ///
    /// `sum_{p > P} ln p / p^3 <= 3 * 1.01624 / (2 P^2)` by partial summation
    /// against `theta(t)`.
    pub fn log_deriv_tail_bound(&self) -> f64 {
        let p = self.prime_bound as f64;
        LOG_DERIV_CONSTANT * 1.5 * THETA_BOUND / (p * p)
    }
}

/// A truncated value with a rigorous bound on what was left out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Truncated {
    pub value: f64,
    /// For products, bounds the omitted tail of `log value`; for sums, the
    /// omitted tail of `value` itself.
    pub tail_bound: f64,
}

/// `prod_{p | D} (1 + p^-s)^-1`.
pub fn ramified_product(s: f64, disc: &Discriminant) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("ramified_product requires s > 0, got {s}")));
    }
    Ok(disc
        .ramified_primes()
        .iter()
        .map(|&p| 1.0 / (1.0 + (p as f64).powf(-s)))
        .product())
}

/// `sum_{p | D} ln p / (p + 1)`.
pub fn ramified_log_sum(disc: &Discriminant) -> f64 {
    disc.ramified_primes()
        .iter()
        .map(|&p| (p as f64).ln() / (p as f64 + 1.0))
        .sum()
}

/// `log` of the local factor of `G` at `p` (of the given class) and `s`.
pub fn local_log_factor(class: PrimeClass, p: u64, s: f64) -> f64 {
    let z = (p as f64).powf(-s);
    match class {
        PrimeClass::Ramified => (-z).ln_1p() - 2.0 * (-z * z).ln_1p(),
        PrimeClass::Split => split_factor_minus_one(z).ln_1p(),
        PrimeClass::Inert => -(-z.powi(4)).ln_1p(),
    }
}

/// `d/ds` of [`local_log_factor`].
pub fn local_log_derivative(class: PrimeClass, p: u64, s: f64) -> f64 {
    let ln_p = (p as f64).ln();
    let z = (p as f64).powf(-s);
    match class {
        PrimeClass::Ramified => ln_p * (z / (1.0 - z) - 4.0 * z * z / (1.0 - z * z)),
        PrimeClass::Split => -6.0 * z.powi(3) * ln_p / ((1.0 + 2.0 * z) * (1.0 - z * z)),
        PrimeClass::Inert => -4.0 * z.powi(4) * ln_p / (1.0 - z.powi(4)),
    }
}

/// The split-prime factor `h(z)` in closed form.
pub fn split_factor(z: f64) -> f64 {
    (1.0 + 2.0 * z) * (1.0 - z).powi(2) / (1.0 - z * z).powi(3)
}

/// `h(z) - 1 = z^3 (2 + z) / ((1 - z)(1 + z)^3)`, without cancellation.
pub fn split_factor_minus_one(z: f64) -> f64 {
    z * z * z * (2.0 + z) / ((1.0 - z) * (1.0 + z).powi(3))
}

fn primes_with_ramified(disc: &Discriminant, bound: u64) -> Vec<u64> {
    let mut primes = primes_up_to(bound);
    for &p in disc.ramified_primes() {
        if p > bound {
            primes.push(p);
        }
    }
    primes
}

fn sum_over_primes(disc: &Discriminant, bound: u64, f: impl Fn(PrimeClass, u64) -> f64) -> f64 {
    primes_with_ramified(disc, bound)
        .into_iter()
        .map(|p| f(PrimeClass::from_character(disc.chi(p)), p))
        .sum::<CompensatedSum>()
        .value()
}

/// `G(s)` truncated at `trunc.prime_bound`, accumulated in log space.
pub fn product_g(s: f64, disc: &Discriminant, trunc: &ProductTruncation) -> Result<Truncated> {
    if !(s >= 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("product_G requires real s >= 1, got {s}")));
    }
    let log_g = sum_over_primes(disc, trunc.prime_bound, |class, p| local_log_factor(class, p, s));
    Ok(Truncated {
        value: log_g.exp(),
        tail_bound: trunc.product_tail_bound(s),
    })
}

/// `G'(1) / G(1)` truncated at `trunc.prime_bound`.
pub fn log_deriv_g_at_1(disc: &Discriminant, trunc: &ProductTruncation) -> Result<Truncated> {
    let value = sum_over_primes(disc, trunc.prime_bound, |class, p| local_log_derivative(class, p, 1.0));
    Ok(Truncated {
        value,
        tail_bound: trunc.log_deriv_tail_bound(),
    })
}
