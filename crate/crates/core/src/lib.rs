//! Arithmetic of quadratic fields for second-moment and cubic-argument
//! summatory functions.
//!
//! * [`discriminant`]: discriminants, the Kronecker character, prime splitting.
//! * [`coefficients`] and [`sieve`]: `r_K(n)`, `r_K(n)^2`, `r_K(n^3)` one at a
//!   time or in segmented bulk, plus a divisor-sum oracle.
//! * [`form`]: positive definite binary forms, lattice-point counting.
//! * [`special`]: `gamma`, `zeta`, Hurwitz zeta, `L(s, chi_D)` and derivatives.
//! * [`euler_products`]: the correction product `G(s)` and its log-derivative.
//! * [`constants`]: main-term constants `A`, `B`.
//! * [`summation`]: exact partial sums, solution counts and residual reports.

pub mod coefficients;
pub mod compensated;
pub mod constants;
pub mod discriminant;
pub mod error;
pub mod euler_products;
pub mod form;
pub mod sieve;
pub mod special;
pub mod summation;

pub use coefficients::{coeff_prime_power, coefficient, divisor_sum_oracle, CoefficientKind};
pub use constants::{
    constants_corollary1, constants_corollary2, constants_corollary3, main_term, ConstantSet, ConstantSource,
    Ingredients,
};
pub use discriminant::{classify_prime, kronecker_symbol, Discriminant, PrimeClass, IDONEAL_DISCRIMINANTS};
pub use error::{Error, Result};
pub use euler_products::{log_deriv_g_at_1, product_g, ramified_log_sum, ramified_product, ProductTruncation};
pub use form::{lattice_repr_oracle, QuadraticForm};
pub use sieve::{SegmentedSieve, SieveConfig};
pub use special::{
    dedekind_zeta, dirichlet_l, dirichlet_l_prime, euler_gamma, hurwitz_zeta, hurwitz_zeta_sderiv, riemann_zeta,
    riemann_zeta_prime, EvaluationParams,
};
pub use summation::{count_solutions_bruteforce, dirichlet_series_closed_form, SolutionCount, SummationEngine, SummationReport};
