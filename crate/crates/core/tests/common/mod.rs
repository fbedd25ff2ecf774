//! Independent reference implementations used across the integration tests.
#![allow(dead_code)]

pub fn small_primes(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// `chi_D(p)` by Euler's criterion (odd p) or by `D mod 8` (p = 2).
pub fn chi_prime(d: i64, p: u64) -> i64 {
    if d.rem_euclid(p as i64) == 0 {
        return 0;
    }
    if p == 2 {
        return if matches!(d.rem_euclid(8), 1 | 7) { 1 } else { -1 };
    }
    let a = d.rem_euclid(p as i64) as u128;
    if pow_mod(a, (p as u128 - 1) / 2, p as u128) == 1 {
        1
    } else {
        -1
    }
}

/// `chi_D(n)`, extended completely multiplicatively from the primes.
pub fn chi(d: i64, n: u64) -> i64 {
    factor(n).into_iter().map(|(p, e)| chi_prime(d, p).pow(e)).product()
}

pub fn divisors_of(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factor(n) {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs
}

/// `r_K(n) = sum_{k | n} chi(k)`.
pub fn ideal_count(d: i64, n: u64) -> u64 {
    let s: i64 = divisors_of(n).into_iter().map(|k| chi(d, k)).sum();
    assert!(s >= 0);
    s as u64
}

/// Number of `(u, v)` in a generous box with `a u^2 + b u v + c v^2 = n`.
pub fn box_count(a: i64, b: i64, c: i64, n: i64) -> u64 {
    let disc = (4 * a * c - b * b) as f64;
    let bound = ((4.0 * c as f64 * n as f64 / disc).sqrt().max((4.0 * a as f64 * n as f64 / disc).sqrt()) as i64) + 2;
    let mut count = 0;
    for u in -bound..=bound {
        for v in -bound..=bound {
            if a * u * u + b * u * v + c * v * v == n {
                count += 1;
            }
        }
    }
    count
}

/// `r_K(n^k)`, enumerating the divisors of `n^k` from the factorization of `n`.
pub fn ideal_count_of_power(d: i64, n: u64, k: u32) -> u64 {
    let mut divs = vec![1u64];
    for (p, e) in factor(n) {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e * k {
            pk *= p;
            divs.extend(current.iter().map(|x| x * pk));
        }
    }
    let s: i64 = divs.into_iter().map(|x| chi(d, x)).sum();
    s as u64
}

/// Points `(u, v)` with `a u^2 + b u v + c v^2 = n`, solving the quadratic in `u` for each `v`.
pub fn form_points(a: i64, b: i64, c: i64, n: i64) -> u64 {
    let disc = 4 * a * c - b * b;
    let v_max = ((4 * a * n) as f64 / disc as f64).sqrt() as i64 + 1;
    let mut count = 0;
    for v in -v_max..=v_max {
        // a u^2 + (b v) u + (c v^2 - n) = 0
        let delta = (b * v) * (b * v) - 4 * a * (c * v * v - n);
        if delta < 0 {
            continue;
        }
        let r = (delta as f64).sqrt().round() as i64;
        for root in [r - 1, r, r + 1] {
            if root >= 0 && root * root == delta {
                let roots = if root == 0 { vec![-b * v] } else { vec![-b * v + root, -b * v - root] };
                count += roots.into_iter().filter(|num| num % (2 * a) == 0).count() as u64;
            }
        }
    }
    count
}
