//! Dirichlet coefficients of the quadratic-field series: `r_K(n)`, `r_K(n)^2`
//! and `r_K(n^3)`, built multiplicatively from their prime-power values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::discriminant::{factorize, isqrt, kronecker_raw, Discriminant, PrimeClass};
use crate::error::{Error, Result};

/// Which arithmetic function is being summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientKind {
    /// `r_K(n)`, the number of ideals of norm `n`.
    IdealCount,
    /// `r_K(n)^2`.
    IdealCountSquared,
    /// `r_K(n^3)`.
    IdealCountCubeArg,
}

impl CoefficientKind {
    pub const ALL: [CoefficientKind; 3] = [
        CoefficientKind::IdealCount,
        CoefficientKind::IdealCountSquared,
        CoefficientKind::IdealCountCubeArg,
    ];

    /// Exponents `(m1, m2)` of `zeta(2s)` and `zeta_K(2s)` in the denominator of the
    /// generating identity. `IdealCount` has no such denominator.
    pub fn exponents(self) -> (u32, u32) {
        match self {
            CoefficientKind::IdealCount => (0, 0),
            CoefficientKind::IdealCountSquared => (1, 0),
            CoefficientKind::IdealCountCubeArg => (1, 1),
        }
    }

    pub fn m1(self) -> u32 {
        self.exponents().0
    }

    pub fn m2(self) -> u32 {
        self.exponents().1
    }

    /// Short name used on the command line and in reports.
    pub fn tag(self) -> &'static str {
        match self {
            CoefficientKind::IdealCount => "rk",
            CoefficientKind::IdealCountSquared => "rk2",
            CoefficientKind::IdealCountCubeArg => "rk3",
        }
    }
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CoefficientKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rk" | "ideal-count" => Ok(CoefficientKind::IdealCount),
            "rk2" | "ideal-count-squared" => Ok(CoefficientKind::IdealCountSquared),
            "rk3" | "ideal-count-cube-arg" => Ok(CoefficientKind::IdealCountCubeArg),
            other => Err(Error::Domain(format!(
                "unknown coefficient kind '{other}' (expected rk, rk2 or rk3)"
            ))),
        }
    }
}

/// Value of a coefficient of the given kind at `p^j`, `j >= 1`.
pub fn coeff_prime_power(kind: CoefficientKind, class: PrimeClass, j: u32) -> u64 {
    let ideal_count = |e: u64| -> u64 {
        match class {
            PrimeClass::Ramified => 1,
            PrimeClass::Split => e + 1,
            PrimeClass::Inert => u64::from(e % 2 == 0),
        }
    };
    let j = u64::from(j);
    match kind {
        CoefficientKind::IdealCount => ideal_count(j),
        CoefficientKind::IdealCountSquared => ideal_count(j).pow(2),
        CoefficientKind::IdealCountCubeArg => ideal_count(3 * j),
    }
}

/// A multiplicative function given by its values on prime powers.
pub trait LocalLaw: Sync {
    /// Value at `p^j` for prime `p` and `j >= 1`.
    fn prime_power(&self, p: u64, j: u32) -> u64;
}

/// The local law of a [`CoefficientKind`] over a fixed discriminant.
#[derive(Debug, Clone, Copy)]
pub struct KindLaw<'a> {
    pub kind: CoefficientKind,
    pub disc: &'a Discriminant,
}

impl LocalLaw for KindLaw<'_> {
    #[inline]
    fn prime_power(&self, p: u64, j: u32) -> u64 {
        coeff_prime_power(self.kind, PrimeClass::from_character(self.disc.chi(p)), j)
    }
}

/// Evaluate a multiplicative law at `n` by trial-division factorization.
pub fn evaluate_law<L: LocalLaw + ?Sized>(law: &L, n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .map(|(p, j)| law.prime_power(p, j))
        .product()
}

/// `a(n)` for the given kind and discriminant, `n >= 1`.
pub fn coefficient(kind: CoefficientKind, disc: &Discriminant, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("coefficient requires n >= 1".into()));
    }
    Ok(evaluate_law(&KindLaw { kind, disc }, n))
}

/// `sum_{d | n} (D | d)` by plain divisor enumeration. This equals `r_K(n)` for
/// fundamental `D` and shares no code with the factorization or sieve paths.
pub fn divisor_sum_oracle(disc: &Discriminant, n: u64) -> Result<u64> {
    if !disc.is_fundamental() {
        return Err(Error::NotFundamental(disc.value()));
    }
    if n == 0 {
        return Err(Error::Domain("divisor_sum_oracle requires n >= 1".into()));
    }
    let d = disc.value();
    let mut total: i64 = 0;
    for small in 1..=isqrt(n) {
        if n % small == 0 {
            total += i64::from(kronecker_raw(d, small));
            let large = n / small;
            if large != small {
                total += i64::from(kronecker_raw(d, large));
            }
        }
    }
    debug_assert!(total >= 0);
    Ok(total as u64)
}
