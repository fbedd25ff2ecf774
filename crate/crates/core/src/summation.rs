//! Exact partial sums of the coefficient sequences, solution counts for
//! `Q(u, v) = w^3`, Dirichlet-series partial sums, and residuals against the
//! main term.

use serde::{Deserialize, Serialize};

use crate::coefficients::{CoefficientKind, KindLaw, LocalLaw};
use crate::compensated::CompensatedSum;
use crate::constants::{main_term, ConstantSet, ConstantSource};
use crate::discriminant::Discriminant;
use crate::euler_products::{product_g, ramified_product, ProductTruncation};
use crate::error::{Error, Result};
use crate::form::{lattice_repr_oracle, QuadraticForm, RepresentationLaw};
use crate::sieve::{SegmentedSieve, SieveConfig};
use crate::special::{dedekind_zeta, riemann_zeta};

/// Largest `x` accepted by [`count_solutions_bruteforce`].
pub const BRUTEFORCE_MAX_X: f64 = 1000.0;
/// Smallest grid point of a residual report; keeps `ln ln x > 1`.
pub const MIN_GRID_X: u64 = 16;

/// Number of integer triples `(u, v, w)` with `Q(u, v) = w^3` and `w <= x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolutionCount {
    pub x: f64,
    pub count: u128,
    /// Whether `count` includes the triple `(0, 0, 0)`.
    pub includes_origin: bool,
}

/// One grid point of a residual report; also the CSV row layout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub x: u64,
    pub exact_sum: u128,
    pub main_term: f64,
    pub residual: f64,
    pub normalized_residual: f64,
}

/// Exact sums on a grid, compared with a main term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummationReport {
    pub kind: CoefficientKind,
    #[serde(rename = "D")]
    pub discriminant: i64,
    pub m1: u32,
    pub m2: u32,
    #[serde(rename = "A")]
    pub a: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub grid: Vec<u64>,
    pub exact_sums: Vec<u128>,
    pub main_terms: Vec<f64>,
    pub residuals: Vec<f64>,
    pub normalized: Vec<f64>,
}

impl SummationReport {
    pub fn rows(&self) -> Vec<ReportRow> {
        (0..self.grid.len())
            .map(|i| ReportRow {
                x: self.grid[i],
                exact_sum: self.exact_sums[i],
                main_term: self.main_terms[i],
                residual: self.residuals[i],
                normalized_residual: self.normalized[i],
            })
            .collect()
    }

    /// `|S(x) / main(x) - 1|` at each grid point.
    pub fn relative_errors(&self) -> Vec<f64> {
        self.exact_sums
            .iter()
            .zip(&self.main_terms)
            .map(|(&s, &m)| (s as f64 / m - 1.0).abs())
            .collect()
    }

    /// CSV with header `x,exact_sum,main_term,residual,normalized_residual`.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for row in self.rows() {
            writer.serialize(row).map_err(|e| Error::Report(e.to_string()))?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Report(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn rows_from_csv(text: &str) -> Result<Vec<ReportRow>> {
        csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Report(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
    }
}

/// `sqrt(x) (ln x)^3 (ln ln x)^(m1 + m2)`.
pub fn error_envelope(x: f64, m1: u32, m2: u32) -> f64 {
    let ln_x = x.ln();
    x.sqrt() * ln_x.powi(3) * ln_x.ln().powi((m1 + m2) as i32)
}

/// Summation over a segmented sieve.
#[derive(Debug, Clone)]
pub struct SummationEngine {
    sieve: SegmentedSieve,
}

impl SummationEngine {
    pub fn new(config: SieveConfig) -> Result<Self> {
        Ok(Self { sieve: SegmentedSieve::new(config)? })
    }

    pub fn sieve(&self) -> &SegmentedSieve {
        &self.sieve
    }

    fn check_x(&self, x: u64) -> Result<()> {
        let max = self.sieve.config().max_n;
        if x > max {
            return Err(Error::ScaleLimit { what: "x", value: x, max });
        }
        Ok(())
    }

    /// `sum_{n <= x} law(n)`, exact.
    pub fn sum_law<L: LocalLaw + ?Sized>(&self, law: &L, x: u64) -> Result<u128> {
        self.check_x(x)?;
        let partials = self
            .sieve
            .map_segments(law, x, |_, block| block.iter().map(|&v| u128::from(v)).sum::<u128>())?;
        partials
            .into_iter()
            .try_fold(0u128, |acc, v| acc.checked_add(v))
            .ok_or(Error::Overflow("coefficient sum"))
    }

    /// `sum_{n <= x} a(n)`, exact.
    pub fn sum_coefficients(&self, kind: CoefficientKind, disc: &Discriminant, x: u64) -> Result<u128> {
        if x == 0 {
            return Err(Error::Domain("sum_coefficients requires x >= 1".into()));
        }
        self.sum_law(&KindLaw { kind, disc }, x)
    }

    /// `1 + sum_{1 <= n <= x} r_Q(n^3)`: integer triples on `Q(u, v) = w^3`, `w <= x`.
    pub fn count_solutions(&self, q: &QuadraticForm, x: f64) -> Result<SolutionCount> {
        if !(x >= 0.0) || !x.is_finite() {
            return Err(Error::Domain(format!("count_solutions requires x >= 0, got {x}")));
        }
        let law = RepresentationLaw::new(q)?.cube_argument();
        let n = x.floor() as u64;
        let inner = if n == 0 { 0 } else { self.sum_law(&law, n)? };
        let count = inner
            .checked_mul(u128::from(q.omega()))
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::Overflow("solution count"))?;
        Ok(SolutionCount { x, count, includes_origin: true })
    }

    /// `sum_{n <= big_n} a(n) n^-s`, compensated, reduced in segment order.
    pub fn dirichlet_partial_sum(&self, kind: CoefficientKind, disc: &Discriminant, s: f64, big_n: u64) -> Result<f64> {
        if !(s > 1.0) || !s.is_finite() {
            return Err(Error::Domain(format!("dirichlet_partial_sum requires s > 1, got {s}")));
        }
        if big_n == 0 {
            return Err(Error::Domain("dirichlet_partial_sum requires N >= 1".into()));
        }
        self.check_x(big_n)?;
        let law = KindLaw { kind, disc };
        let partials = self.sieve.map_segments(&law, big_n, |lo, block| {
            let mut acc = CompensatedSum::new();
            for (k, &v) in block.iter().enumerate() {
                if v != 0 {
                    acc += v as f64 * ((lo + k as u64) as f64).powf(-s);
                }
            }
            acc
        })?;
        let mut total = CompensatedSum::new();
        for p in &partials {
            total.merge(p);
        }
        Ok(total.value())
    }

    /// Exact sums on `grid` in one pass, with main terms and residuals.
    pub fn residual_series(
        &self,
        kind: CoefficientKind,
        disc: &Discriminant,
        c: &ConstantSet,
        grid: &[u64],
    ) -> Result<SummationReport> {
        check_provenance(kind, disc, c)?;
        check_grid(grid)?;
        let x_max = *grid.last().expect("grid checked non-empty");
        self.check_x(x_max)?;

        let law = KindLaw { kind, disc };
        // per segment: total, and partial sums up to each grid point inside it
        let partials = self.sieve.map_segments(&law, x_max, |lo, block| {
            let hi = lo + block.len() as u64 - 1;
            let mut marks = Vec::new();
            let mut acc = 0u128;
            let mut next = grid.partition_point(|&g| g < lo);
            for (k, &v) in block.iter().enumerate() {
                acc += u128::from(v);
                while next < grid.len() && grid[next] == lo + k as u64 {
                    marks.push(acc);
                    next += 1;
                }
            }
            debug_assert!(next == grid.len() || grid[next] > hi);
            (acc, marks)
        })?;

        let mut exact_sums = Vec::with_capacity(grid.len());
        let mut offset = 0u128;
        for (total, marks) in partials {
            exact_sums.extend(marks.into_iter().map(|m| offset + m));
            offset = offset.checked_add(total).ok_or(Error::Overflow("coefficient sum"))?;
        }
        debug_assert_eq!(exact_sums.len(), grid.len());

        let (m1, m2) = kind.exponents();
        let mut main_terms = Vec::with_capacity(grid.len());
        let mut residuals = Vec::with_capacity(grid.len());
        let mut normalized = Vec::with_capacity(grid.len());
        for (&x, &s) in grid.iter().zip(&exact_sums) {
            let xf = x as f64;
            let main = main_term(c, xf)?;
            let r = s as f64 - main;
            main_terms.push(main);
            residuals.push(r);
            normalized.push(r / error_envelope(xf, m1, m2));
        }
        Ok(SummationReport {
            kind,
            discriminant: disc.value(),
            m1,
            m2,
            a: c.a,
            b: c.b,
            grid: grid.to_vec(),
            exact_sums,
            main_terms,
            residuals,
            normalized,
        })
    }
}

fn check_provenance(kind: CoefficientKind, disc: &Discriminant, c: &ConstantSet) -> Result<()> {
    if c.discriminant != disc.value() {
        return Err(Error::ConstantMismatch(format!(
            "constants are for D = {}, sums for D = {}",
            c.discriminant,
            disc.value()
        )));
    }
    let expected = match kind {
        CoefficientKind::IdealCountSquared => Some(ConstantSource::Corollary1),
        CoefficientKind::IdealCountCubeArg => Some(ConstantSource::Corollary2),
        CoefficientKind::IdealCount => None,
    };
    let ok = c.source == ConstantSource::Zero || (Some(c.source) == expected && c.omega_scaling == 1);
    if !ok {
        return Err(Error::ConstantMismatch(format!(
            "{:?} constants (scaling {}) do not describe sums of {kind}",
            c.source, c.omega_scaling
        )));
    }
    Ok(())
}

fn check_grid(grid: &[u64]) -> Result<()> {
    match grid.first() {
        None => return Err(Error::Domain("grid is empty".into())),
        Some(&x) if x < MIN_GRID_X => {
            return Err(Error::Domain(format!("grid starts at {x}, below the minimum {MIN_GRID_X}")))
        }
        _ => {}
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Closed form of `sum_n a(n) n^-s` for `s > 1`:
///
/// ```text
/// rk:   zeta(s) L(s)
/// rk2:  zeta_K(s)^2 / zeta(2s) * prod_{p | D} (1 + p^-s)^-1
/// rk3:  zeta_K(s)^2 / (zeta(2s) zeta_K(2s)) * G(s)
/// ```
pub fn dirichlet_series_closed_form(
    kind: CoefficientKind,
    disc: &Discriminant,
    s: f64,
    trunc: &ProductTruncation,
) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::Domain(format!("closed form requires s > 1, got {s}")));
    }
    let zk = dedekind_zeta(s, disc)?;
    Ok(match kind {
        CoefficientKind::IdealCount => zk,
        CoefficientKind::IdealCountSquared => zk * zk / riemann_zeta(2.0 * s)? * ramified_product(s, disc)?,
        CoefficientKind::IdealCountCubeArg => {
            zk * zk / (riemann_zeta(2.0 * s)? * dedekind_zeta(2.0 * s, disc)?) * product_g(s, disc, trunc)?.value
        }
    })
}

/// Count triples on `Q(u, v) = w^3`, `0 <= w <= x`, by enumerating each `w`.
pub fn count_solutions_bruteforce(q: &QuadraticForm, x: f64) -> Result<SolutionCount> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("count_solutions_bruteforce requires x >= 0, got {x}")));
    }
    if x > BRUTEFORCE_MAX_X {
        return Err(Error::ScaleLimit { what: "x", value: x as u64, max: BRUTEFORCE_MAX_X as u64 });
    }
    let mut count = 0u128;
    for w in 0..=x.floor() as u64 {
        count += u128::from(lattice_repr_oracle(q, w * w * w)?);
    }
    Ok(SolutionCount { x, count, includes_origin: true })
}
