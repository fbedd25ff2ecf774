//! Segmented factor sieve producing multiplicative coefficients in bulk.
//!
//! Each segment `[lo, hi]` keeps the unfactored part of every entry. Primes up to
//! `sqrt(hi)` are divided out in turn, multiplying the prime-power value of the
//! law into the entry; whatever remains above 1 is a single large prime.

use rayon::prelude::*;

use crate::coefficients::{CoefficientKind, KindLaw, LocalLaw};
use crate::discriminant::{isqrt, primes_up_to, Discriminant};
use crate::error::{Error, Result};

pub const DEFAULT_SEGMENT_SIZE: usize = 1 << 20;
pub const DEFAULT_MAX_N: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Entries per segment.
    pub segment_size: usize,
    /// Largest `n` the sieve will produce.
    pub max_n: u64,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            segment_size: DEFAULT_SEGMENT_SIZE,
            max_n: DEFAULT_MAX_N,
            workers: None,
        }
    }
}

impl SieveConfig {
    pub fn with_segment_size(mut self, segment_size: usize) -> Self {
        self.segment_size = segment_size;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_max_n(mut self, max_n: u64) -> Self {
        self.max_n = max_n;
        self
    }
}

#[derive(Debug, Clone)]
pub struct SegmentedSieve {
    config: SieveConfig,
    primes: Vec<u64>,
}

impl SegmentedSieve {
    pub fn new(config: SieveConfig) -> Result<Self> {
        if config.segment_size == 0 {
            return Err(Error::Domain("segment size must be positive".into()));
        }
        if config.workers == Some(0) {
            return Err(Error::Domain("worker count must be positive".into()));
        }
        Ok(Self {
            config,
            primes: primes_up_to(isqrt(config.max_n) + 1),
        })
    }

    pub fn config(&self) -> &SieveConfig {
        &self.config
    }

    fn check_range(&self, lo: u64, hi: u64) -> Result<()> {
        if lo == 0 || lo > hi {
            return Err(Error::Domain(format!("block bounds must satisfy 1 <= lo <= hi, got [{lo}, {hi}]")));
        }
        if hi > self.config.max_n {
            return Err(Error::ScaleLimit { what: "n", value: hi, max: self.config.max_n });
        }
        let len = hi - lo + 1;
        if len > self.config.segment_size as u64 {
            return Err(Error::ScaleLimit {
                what: "block length",
                value: len,
                max: self.config.segment_size as u64,
            });
        }
        Ok(())
    }

    /// Coefficients `a(n)` for `n` in `[lo, hi]`.
    pub fn coefficient_block(&self, kind: CoefficientKind, disc: &Discriminant, lo: u64, hi: u64) -> Result<Vec<u64>> {
        self.block(&KindLaw { kind, disc }, lo, hi)
    }

    /// Values of an arbitrary multiplicative law on `[lo, hi]`.
    pub fn block<L: LocalLaw + ?Sized>(&self, law: &L, lo: u64, hi: u64) -> Result<Vec<u64>> {
        self.check_range(lo, hi)?;
        let len = (hi - lo + 1) as usize;
        let mut rest: Vec<u64> = (lo..=hi).collect();
        let mut values = vec![1u64; len];
        for &p in &self.primes {
            if p * p > hi {
                break;
            }
            let first = lo.div_ceil(p) * p;
            let mut idx = (first - lo) as usize;
            while idx < len {
                let r = &mut rest[idx];
                let mut j = 0;
                while *r % p == 0 {
                    *r /= p;
                    j += 1;
                }
                values[idx] *= law.prime_power(p, j);
                idx += p as usize;
            }
        }
        for (value, &r) in values.iter_mut().zip(&rest) {
            if r > 1 {
                *value *= law.prime_power(r, 1);
            }
        }
        Ok(values)
    }

    /// Split `[1, x]` into segment ranges.
    pub fn segments(&self, x: u64) -> Vec<(u64, u64)> {
        let step = self.config.segment_size as u64;
        (0..x.div_ceil(step))
            .map(|k| (k * step + 1, ((k + 1) * step).min(x)))
            .collect()
    }

    /// Apply `f(lo, block)` to every segment of `[1, x]`, concurrently, and return
    /// the results in segment order.
    pub fn map_segments<L, T, F>(&self, law: &L, x: u64, f: F) -> Result<Vec<T>>
    where
        L: LocalLaw + ?Sized,
        T: Send,
        F: Fn(u64, &[u64]) -> T + Sync,
    {
        if x > self.config.max_n {
            return Err(Error::ScaleLimit { what: "x", value: x, max: self.config.max_n });
        }
        let segments = self.segments(x);
        let work = || -> Result<Vec<T>> {
            segments
                .par_iter()
                .map(|&(lo, hi)| self.block(law, lo, hi).map(|b| f(lo, &b)))
                .collect()
        };
        match self.config.workers {
            None => work(),
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
                .install(work),
        }
    }
}
