//! Positive definite binary quadratic forms and their representation numbers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coefficients::{coeff_prime_power, evaluate_law, CoefficientKind, LocalLaw};
use crate::discriminant::{isqrt, Discriminant, PrimeClass};
use crate::error::{Error, Result};

/// `Q(u, v) = a u^2 + b u v + c v^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    #[serde(skip)]
    disc: Discriminant,
}

impl QuadraticForm {
    /// Build a primitive form; definiteness is checked by the callers that need it.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let invalid = |reason| Error::InvalidForm { a, b, c, reason };
        let d = b
            .checked_mul(b)
            .and_then(|bb| a.checked_mul(c).and_then(|ac| ac.checked_mul(4)).and_then(|ac4| bb.checked_sub(ac4)))
            .ok_or_else(|| invalid("coefficients too large"))?;
        if gcd(gcd(a.unsigned_abs(), b.unsigned_abs()), c.unsigned_abs()) != 1 {
            return Err(invalid("not primitive"));
        }
        let disc = Discriminant::new(d).map_err(|_| invalid("degenerate discriminant"))?;
        Ok(Self { a, b, c, disc })
    }

    /// A primitive, positive definite form.
    pub fn positive_definite(a: i64, b: i64, c: i64) -> Result<Self> {
        let q = Self::new(a, b, c)?;
        if q.disc.value() > 0 {
            return Err(Error::IndefiniteForm(q.disc.value()));
        }
        if a <= 0 {
            return Err(Error::InvalidForm { a, b, c, reason: "negative definite" });
        }
        Ok(q)
    }

    /// The principal form of a negative discriminant: `u^2 + uv + ((1-D)/4) v^2`
    /// or `u^2 - (D/4) v^2`.
    pub fn principal(disc: &Discriminant) -> Result<Self> {
        let d = disc.value();
        if d > 0 {
            return Err(Error::IndefiniteForm(d));
        }
        if d.rem_euclid(4) == 0 {
            Self::positive_definite(1, 0, -d / 4)
        } else {
            Self::positive_definite(1, 1, (1 - d) / 4)
        }
    }

    pub fn discriminant(&self) -> &Discriminant {
        &self.disc
    }

    /// Number of automorphs of a definite form: 6, 4 or 2.
    pub fn omega(&self) -> u64 {
        self.disc.unit_count().unwrap_or(2)
    }

    pub fn eval(&self, u: i64, v: i64) -> i128 {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let (u, v) = (u as i128, v as i128);
        a * u * u + b * u * v + c * v * v
    }

    pub(crate) fn require_class_number_one(&self) -> Result<()> {
        if self.disc.value() > 0 {
            return Err(Error::IndefiniteForm(self.disc.value()));
        }
        if !self.disc.is_class_number_one() {
            return Err(Error::ClassNumberNotOne(self.disc.value()));
        }
        Ok(())
    }

    /// `r_Q(n)` for a class-number-one form via its multiplicative law.
    pub fn representation_count(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Ok(1);
        }
        let law = RepresentationLaw::new(self)?;
        Ok(self.omega() * evaluate_law(&law, n))
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for QuadraticForm {
    type Err = Error;

    /// Parses `"a,b,c"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Domain(format!("form '{s}' must be three integers 'a,b,c'")))?;
        match parts.as_slice() {
            &[a, b, c] => Self::positive_definite(a, b, c),
            _ => Err(Error::Domain(format!("form '{s}' must be three integers 'a,b,c'"))),
        }
    }
}

/// `r_Q(n) / omega` as a multiplicative function, for a class-number-one form.
///
/// Writing `D = f^2 D0`, representations by `Q` are elements of the order
/// `Z + f O_K` of norm `n`. For a fundamental `D` (`f = 1`) this is `r_K(n)`. For
/// the four non-fundamental class-number-one discriminants `f` is a prime `p`;
/// away from `p` the law is that of `D0`, and an element of the order with norm
/// divisible by `p` lies in `p O_K`, which gives `r_Q(p^e) = w_K r_K(p^(e-2))`.
#[derive(Debug, Clone)]
pub struct RepresentationLaw {
    field: Discriminant,
    conductor: u64,
    // w_K / omega_D
    unit_index: u64,
    cube_argument: bool,
}

impl RepresentationLaw {
    pub fn new(q: &QuadraticForm) -> Result<Self> {
        q.require_class_number_one()?;
        let (conductor, d0) = q.disc.conductor();
        let field = Discriminant::new(d0)?;
        let w_field = field.unit_count().expect("negative discriminant");
        Ok(Self {
            field,
            conductor,
            unit_index: w_field / q.omega(),
            cube_argument: false,
        })
    }

    /// The law of `n -> r_Q(n^3) / omega`.
    pub fn cube_argument(mut self) -> Self {
        self.cube_argument = true;
        self
    }

    /// Conductor `f` of the order.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }
}

impl LocalLaw for RepresentationLaw {
    fn prime_power(&self, p: u64, j: u32) -> u64 {
        let e = if self.cube_argument { 3 * j } else { j };
        let class = PrimeClass::from_character(self.field.chi(p));
        if p != self.conductor {
            return coeff_prime_power(CoefficientKind::IdealCount, class, e);
        }
        match e {
            1 => 0,
            2 => self.unit_index,
            _ => self.unit_index * coeff_prime_power(CoefficientKind::IdealCount, class, e - 2),
        }
    }
}

/// `#{(u, v) in Z^2 : Q(u, v) = n}` by direct enumeration over the ellipse.
///
/// For each `v` with `4an + D v^2 >= 0` the quadratic in `u` is solved exactly.
pub fn lattice_repr_oracle(q: &QuadraticForm, n: u64) -> Result<u64> {
    let d = q.disc.value();
    if d > 0 {
        return Err(Error::IndefiniteForm(d));
    }
    let (a, b) = (q.a as i128, q.b as i128);
    let four_an = 4 * a * n as i128;
    let abs_d = -(d as i128);
    let v_max = isqrt_i128(four_an / abs_d);
    let mut count = 0;
    for v in -v_max..=v_max {
        let delta = four_an - abs_d * v * v;
        if delta < 0 {
            continue;
        }
        let root = isqrt_i128(delta);
        if root * root != delta {
            continue;
        }
        let candidates = if root == 0 { [Some(-b * v), None] } else { [Some(-b * v + root), Some(-b * v - root)] };
        for num in candidates.into_iter().flatten() {
            if num % (2 * a) == 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn isqrt_i128(n: i128) -> i128 {
    debug_assert!(n >= 0);
    if n <= u64::MAX as i128 {
        return isqrt(n as u64) as i128;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
