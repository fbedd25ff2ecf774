//! Quadratic discriminants, the Kronecker character attached to them, and the
//! ramified / split / inert classification of rational primes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Negative discriminants of class number one.
pub const IDONEAL_DISCRIMINANTS: [i64; 13] =
    [-3, -4, -7, -8, -11, -12, -16, -19, -27, -28, -43, -67, -163];

/// Character values are tabulated over one period when |D| is at most this.
const CHARACTER_TABLE_LIMIT: u64 = 1 << 20;

/// A quadratic discriminant `D` together with the data derived from it.
#[derive(Clone)]
pub struct Discriminant {
    value: i64,
    is_fundamental: bool,
    is_class_number_one: bool,
    ramified_primes: Vec<u64>,
    // chi(n) for n in 0..|D|
    table: Option<Vec<i8>>,
}

impl Discriminant {
    pub fn new(value: i64) -> Result<Self> {
        if value == 0 || value == 1 || !matches!(value.rem_euclid(4), 0 | 1) {
            return Err(Error::InvalidDiscriminant(value));
        }
        let modulus = value.unsigned_abs();
        let ramified_primes = factorize(modulus).into_iter().map(|(p, _)| p).collect();
        let table = (modulus <= CHARACTER_TABLE_LIMIT)
            .then(|| (0..modulus).map(|n| kronecker_raw(value, n)).collect());
        Ok(Self {
            value,
            is_fundamental: is_fundamental(value),
            is_class_number_one: IDONEAL_DISCRIMINANTS.contains(&value),
            ramified_primes,
            table,
        })
    }

    /// Like [`Discriminant::new`] but additionally requires a field discriminant.
    pub fn fundamental(value: i64) -> Result<Self> {
        let d = Self::new(value)?;
        if !d.is_fundamental {
            return Err(Error::NotFundamental(value));
        }
        Ok(d)
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    /// `|D|`, the modulus of the character.
    pub fn modulus(&self) -> u64 {
        self.value.unsigned_abs()
    }

    pub fn is_fundamental(&self) -> bool {
        self.is_fundamental
    }

    pub fn is_class_number_one(&self) -> bool {
        self.is_class_number_one
    }

    pub fn is_negative(&self) -> bool {
        self.value < 0
    }

    /// True when `D` is a perfect square, in which case `chi_D` is principal.
    pub fn is_square(&self) -> bool {
        self.value > 0 && {
            let r = isqrt(self.value as u64);
            r * r == self.value as u64
        }
    }

    /// Primes dividing `D`.
    pub fn ramified_primes(&self) -> &[u64] {
        &self.ramified_primes
    }

    /// Number of units of the order of discriminant `D` (negative `D` only).
    pub fn unit_count(&self) -> Option<u64> {
        match self.value {
            -3 => Some(6),
            -4 => Some(4),
            v if v < 0 => Some(2),
            _ => None,
        }
    }

    /// Write `D = f^2 D0` with `D0` fundamental; returns `(f, D0)`.
    pub fn conductor(&self) -> (u64, i64) {
        let modulus = self.modulus();
        let mut best = (1, self.value);
        let mut f = 2;
        while f * f <= modulus {
            let sq = (f * f) as i64;
            if self.value % sq == 0 && is_fundamental(self.value / sq) {
                best = (f, self.value / sq);
            }
            f += 1;
        }
        best
    }

    /// The Kronecker symbol `(D | n)` for `n >= 1`.
    #[inline]
    pub fn chi(&self, n: u64) -> i8 {
        match &self.table {
            Some(t) => t[(n % t.len() as u64) as usize],
            None => kronecker_raw(self.value, n),
        }
    }
}

impl fmt::Debug for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Discriminant")
            .field("value", &self.value)
            .field("is_fundamental", &self.is_fundamental)
            .field("is_class_number_one", &self.is_class_number_one)
            .field("ramified_primes", &self.ramified_primes)
            .finish()
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for Discriminant {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for Discriminant {}

impl Serialize for Discriminant {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value)
    }
}

/// Splitting behaviour of a rational prime in the quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeClass {
    /// `p | D`, `(p) = P^2`.
    Ramified,
    /// `(p) = P1 P2` with distinct factors of norm `p`.
    Split,
    /// `(p)` stays prime, of norm `p^2`.
    Inert,
}

impl PrimeClass {
    #[inline]
    pub fn from_character(chi: i8) -> Self {
        match chi {
            0 => PrimeClass::Ramified,
            1 => PrimeClass::Split,
            _ => PrimeClass::Inert,
        }
    }
}

/// `(D | n)`; `n` must be positive.
pub fn kronecker_symbol(d: &Discriminant, n: u64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Domain("kronecker_symbol requires n >= 1".into()));
    }
    Ok(d.chi(n))
}

/// Classify the prime `p` by the value of `chi_D(p)`.
pub fn classify_prime(d: &Discriminant, p: u64) -> Result<PrimeClass> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(PrimeClass::from_character(d.chi(p)))
}

/// Kronecker symbol `(a | n)` for `n >= 0`, no table.
pub(crate) fn kronecker_raw(a: i64, n: u64) -> i8 {
    if n == 0 {
        return i8::from(a == 1 || a == -1);
    }
    let twos = n.trailing_zeros();
    let odd = n >> twos;
    let mut result = 1i8;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a | 2) = 1 for a = +-1 mod 8, -1 for a = +-3 mod 8
        if matches!(a.rem_euclid(8), 3 | 5) && twos % 2 == 1 {
            result = -result;
        }
    }
    if odd == 1 {
        return result;
    }
    result * jacobi(a.rem_euclid(odd as i64) as u64, odd)
}

/// Jacobi symbol `(a | n)` for odd `n`.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut result = 1i8;
    a %= n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Trial-division factorization, ascending primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut push = |n: &mut u64, p: u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut p = 5;
    while p * p <= n {
        push(&mut n, p);
        push(&mut n, p + 2);
        p += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}
