//! Command execution and rendering of each report in csv, json or human form.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use serde::Serialize;

use qfield_core::special::EULER_GAMMA_REFERENCE;
use qfield_core::{
    constants_corollary1, constants_corollary2, constants_corollary3, dirichlet_series_closed_form, euler_gamma,
    riemann_zeta, CoefficientKind, ConstantSet, ConstantSource, Discriminant, Ingredients, ProductTruncation,
    QuadraticForm, SieveConfig, SummationEngine, SummationReport,
};

use crate::args::{Command, Common, ConstantsArgs, CountArgs, Format, IdentityArgs, SumArgs, VerifyArgs};
use crate::grid::parse_grid;
use crate::CliError;

/// Accuracy of the Euler–Maclaurin special values at the default parameters.
const SPECIAL_VALUE_TOLERANCE: f64 = 1e-12;
/// Accuracy of finite products and sums over the ramified primes.
const FINITE_TOLERANCE: f64 = 1e-15;

/// Self-check budgets; exceeding one exits with status 5.
const GAMMA_BUDGET: f64 = 1e-12;
const ZETA2_BUDGET: f64 = 1e-10;
const PRODUCT_BUDGET: f64 = 5e-5;

pub fn render(command: &Command, common: &Common, format: Format) -> Result<String, CliError> {
    match command {
        Command::Constants(a) => constants(a, common, format),
        Command::Sum(a) => sum(a, common, format),
        Command::Count(a) => count(a, common, format),
        Command::Identity(a) => identity(a, common, format),
        Command::Verify(a) => verify(a, common, format),
    }
}

fn engine(common: &Common) -> Result<SummationEngine, CliError> {
    let mut config = SieveConfig::default()
        .with_segment_size(common.segment_size)
        .with_max_n(common.max_x);
    if let Some(w) = common.workers {
        config = config.with_workers(w);
    }
    Ok(SummationEngine::new(config)?)
}

fn truncation(common: &Common) -> Result<ProductTruncation, CliError> {
    Ok(ProductTruncation::new(common.prime_bound)?)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| CliError::Config(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

/// Ten significant digits, fixed-point where that stays readable.
fn sig10(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..10).contains(&exp) {
        format!("{:.*}", (9 - exp).max(0) as usize, v)
    } else {
        format!("{v:.9e}")
    }
}

fn check_budget(name: &str, error: f64, budget: f64) -> Result<(), CliError> {
    if !(error <= budget) {
        return Err(CliError::SelfCheck(format!("{name} = {error:e} exceeds budget {budget:e}")));
    }
    Ok(())
}

fn check_special_values() -> Result<(), CliError> {
    check_budget("|gamma - reference|", (euler_gamma() - EULER_GAMMA_REFERENCE).abs(), GAMMA_BUDGET)?;
    let zeta2 = riemann_zeta(2.0)?;
    check_budget("|zeta(2) - pi^2/6|", (zeta2 - PI * PI / 6.0).abs(), ZETA2_BUDGET)
}

fn check_product(ing: &Ingredients) -> Result<(), CliError> {
    check_budget("G(1) tail bound", ing.g1 * ing.g1_log_tail_bound.exp_m1(), PRODUCT_BUDGET)?;
    check_budget("G'(1)/G(1) tail bound", ing.g_log_deriv_tail_bound, PRODUCT_BUDGET)
}

// ---------------------------------------------------------------------------
// constants

#[derive(Serialize)]
struct ConstantsReport {
    corollary: u8,
    #[serde(rename = "D")]
    discriminant: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    form: Option<String>,
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: f64,
    source: ConstantSource,
    omega_scaling: u64,
    prime_bound: Option<u64>,
    ingredients: BTreeMap<&'static str, f64>,
    tolerances: BTreeMap<&'static str, f64>,
    /// Normalisations for `D = -4`: `16 A1`, `16 B1`, `4 A2`, `4 B2`.
    #[serde(flatten)]
    scaled: BTreeMap<&'static str, f64>,
}

/// Propagated error bounds for `A` and `B`.
fn constant_tolerances(set: &ConstantSet, ing: &Ingredients) -> (f64, f64) {
    let t = SPECIAL_VALUE_TOLERANCE;
    let ratio_tol = |v: f64, dv: f64| t / v.abs() + dv.abs() * t / (v * v);
    let zeta_term = |c: f64| c / (PI * PI) * t;
    let (rel_a, bracket_tol) = match set.source {
        ConstantSource::Corollary1 => (
            2.0 * t / ing.l1.abs() + FINITE_TOLERANCE,
            2.0 * t + FINITE_TOLERANCE + 2.0 * ratio_tol(ing.l1, ing.l1_prime) + zeta_term(12.0),
        ),
        _ => (
            2.0 * t / ing.l1.abs() + t / ing.l2.abs() + ing.g1_log_tail_bound.exp_m1(),
            2.0 * ratio_tol(ing.l1, ing.l1_prime)
                + 2.0 * t
                + ing.g_log_deriv_tail_bound
                + 2.0 * ratio_tol(ing.l2, ing.l2_prime)
                + zeta_term(24.0),
        ),
    };
    let rel_a = rel_a + f64::EPSILON;
    (set.a.abs() * rel_a, set.b.abs() * rel_a + set.a.abs() * bracket_tol)
}

fn constants(args: &ConstantsArgs, common: &Common, format: Format) -> Result<String, CliError> {
    check_special_values()?;
    let trunc = truncation(common)?;
    let (set, ing, form) = match args.corollary {
        1 | 2 => {
            let d = args
                .discriminant
                .ok_or_else(|| CliError::Config(format!("corollary {} requires --D", args.corollary)))?;
            let disc = Discriminant::new(d)?;
            if args.corollary == 1 {
                let set = constants_corollary1(&disc)?;
                (set, Ingredients::without_product(&disc)?, None)
            } else {
                let set = constants_corollary2(&disc, &trunc)?;
                (set, Ingredients::compute(&disc, &trunc)?, None)
            }
        }
        _ => {
            let q = match (&args.form, args.discriminant) {
                (Some(f), _) => f.parse::<QuadraticForm>()?,
                (None, Some(d)) => QuadraticForm::principal(&Discriminant::new(d)?)?,
                (None, None) => return Err(CliError::Config("corollary 3 requires --form or --D".into())),
            };
            let set = constants_corollary3(&q, &trunc)?;
            (set, Ingredients::compute(q.discriminant(), &trunc)?, Some(q.to_string()))
        }
    };
    let with_product = args.corollary != 1;
    if with_product {
        check_product(&ing)?;
    }

    let (tol_a, tol_b) = constant_tolerances(&set, &ing);
    let mut ingredients = BTreeMap::from([
        ("L1", ing.l1),
        ("L1_prime", ing.l1_prime),
        ("L2", ing.l2),
        ("L2_prime", ing.l2_prime),
        ("gamma", ing.gamma),
        ("zeta_prime_2", ing.zeta_prime_2),
        ("ramified_product_1", ing.ramified_product_1),
        ("ramified_log_sum", ing.ramified_log_sum),
    ]);
    let mut tolerances = BTreeMap::from([
        ("A", tol_a),
        ("B", tol_b),
        ("L1", SPECIAL_VALUE_TOLERANCE),
        ("L1_prime", SPECIAL_VALUE_TOLERANCE),
        ("L2", SPECIAL_VALUE_TOLERANCE),
        ("L2_prime", SPECIAL_VALUE_TOLERANCE),
        ("gamma", SPECIAL_VALUE_TOLERANCE),
        ("zeta_prime_2", SPECIAL_VALUE_TOLERANCE),
        ("ramified_product_1", FINITE_TOLERANCE),
        ("ramified_log_sum", FINITE_TOLERANCE),
    ]);
    if with_product {
        ingredients.insert("G1", ing.g1);
        ingredients.insert("G_log_deriv_1", ing.g_log_deriv_1);
        tolerances.insert("G1", ing.g1 * ing.g1_log_tail_bound.exp_m1());
        tolerances.insert("G_log_deriv_1", ing.g_log_deriv_tail_bound);
    }

    let mut scaled = BTreeMap::new();
    if set.discriminant == -4 {
        match set.source {
            ConstantSource::Corollary1 => {
                scaled.insert("16A1", 16.0 * set.a);
                scaled.insert("16B1", 16.0 * set.b);
            }
            ConstantSource::Corollary2 => {
                scaled.insert("4A2", 4.0 * set.a);
                scaled.insert("4B2", 4.0 * set.b);
            }
            _ => {}
        }
    }

    let report = ConstantsReport {
        corollary: args.corollary,
        discriminant: set.discriminant,
        form,
        a: set.a,
        b: set.b,
        source: set.source,
        omega_scaling: set.omega_scaling,
        prime_bound: with_product.then_some(trunc.prime_bound),
        ingredients,
        tolerances,
        scaled,
    };
    match format {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut out = String::from("name,value,tolerance\n");
            for (name, value, tol) in constant_lines(&report) {
                out.push_str(&format!("{name},{value},{}\n", tol.map_or(String::new(), |t| t.to_string())));
            }
            Ok(out)
        }
        Format::Human => {
            let mut out = format!(
                "corollary {}  D = {}{}  source = {:?}  omega scaling = {}\n",
                report.corollary,
                report.discriminant,
                report.form.as_deref().map_or(String::new(), |f| format!("  form = {f}")),
                report.source,
                report.omega_scaling,
            );
            if let Some(p) = report.prime_bound {
                out.push_str(&format!("Euler products over p <= {p}\n"));
            }
            for (name, value, tol) in constant_lines(&report) {
                let tol = tol.map_or(String::new(), |t| format!("  ± {t:.1e}"));
                out.push_str(&format!("{name:<20} {:>18}{tol}\n", sig10(value)));
            }
            Ok(out)
        }
    }
}

fn constant_lines(r: &ConstantsReport) -> Vec<(&'static str, f64, Option<f64>)> {
    let mut lines = vec![("A", r.a, r.tolerances.get("A").copied()), ("B", r.b, r.tolerances.get("B").copied())];
    for (&name, &value) in &r.scaled {
        let base = if name.contains('A') { "A" } else { "B" };
        let factor = if name.starts_with("16") { 16.0 } else { 4.0 };
        lines.push((name, value, r.tolerances.get(base).map(|t| t * factor)));
    }
    for (&name, &value) in &r.ingredients {
        lines.push((name, value, r.tolerances.get(name).copied()));
    }
    lines
}

// ---------------------------------------------------------------------------
// sum, count

#[derive(Serialize)]
struct SumReport {
    kind: &'static str,
    #[serde(rename = "D")]
    discriminant: i64,
    x: u64,
    sum: u128,
}

fn sum(args: &SumArgs, common: &Common, format: Format) -> Result<String, CliError> {
    let kind: CoefficientKind = args.kind.parse()?;
    let disc = Discriminant::new(args.discriminant)?;
    let total = engine(common)?.sum_coefficients(kind, &disc, args.x)?;
    let report = SumReport { kind: kind.tag(), discriminant: disc.value(), x: args.x, sum: total };
    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Csv => format!("kind,D,x,sum\n{},{},{},{}\n", report.kind, report.discriminant, report.x, report.sum),
        Format::Human => format!("{total}\n"),
    })
}

#[derive(Serialize)]
struct CountReport {
    form: String,
    #[serde(rename = "D")]
    discriminant: i64,
    x: f64,
    count: u128,
    includes_origin: bool,
}

fn count(args: &CountArgs, common: &Common, format: Format) -> Result<String, CliError> {
    let q: QuadraticForm = args.form.parse()?;
    let c = engine(common)?.count_solutions(&q, args.x)?;
    let report = CountReport {
        form: q.to_string(),
        discriminant: q.discriminant().value(),
        x: c.x,
        count: c.count,
        includes_origin: c.includes_origin,
    };
    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "form,D,x,count,includes_origin\n\"{}\",{},{},{},{}\n",
            report.form, report.discriminant, report.x, report.count, report.includes_origin
        ),
        Format::Human => format!("{}\n", c.count),
    })
}

// ---------------------------------------------------------------------------
// identity

#[derive(Serialize)]
struct IdentityReport {
    kind: &'static str,
    #[serde(rename = "D")]
    discriminant: i64,
    s: f64,
    #[serde(rename = "N")]
    terms: u64,
    left: f64,
    right: f64,
    gap: f64,
}

fn identity(args: &IdentityArgs, common: &Common, format: Format) -> Result<String, CliError> {
    let kind: CoefficientKind = args.kind.parse()?;
    let disc = Discriminant::new(args.discriminant)?;
    let trunc = truncation(common)?;
    let right = dirichlet_series_closed_form(kind, &disc, args.s, &trunc)?;
    if kind == CoefficientKind::IdealCountCubeArg {
        let tail = trunc.product_tail_bound(args.s).exp_m1();
        check_budget("G(s) tail bound", tail, PRODUCT_BUDGET)?;
    }
    let left = engine(common)?.dirichlet_partial_sum(kind, &disc, args.s, args.terms)?;
    let report = IdentityReport {
        kind: kind.tag(),
        discriminant: disc.value(),
        s: args.s,
        terms: args.terms,
        left,
        right,
        gap: (left - right).abs(),
    };
    Ok(match format {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "kind,D,s,N,left,right,gap\n{},{},{},{},{},{},{}\n",
            report.kind, report.discriminant, report.s, report.terms, report.left, report.right, report.gap
        ),
        Format::Human => format!(
            "kind {}  D = {}  s = {}  N = {}\nleft   {}\nright  {}\ngap    {:.3e}\n",
            report.kind,
            report.discriminant,
            report.s,
            report.terms,
            sig10(left),
            sig10(right),
            report.gap
        ),
    })
}

// ---------------------------------------------------------------------------
// verify

/// The constants a residual report is measured against.
fn report_constants(kind: CoefficientKind, disc: &Discriminant, common: &Common) -> Result<ConstantSet, CliError> {
    Ok(match kind {
        CoefficientKind::IdealCount => ConstantSet::zero(disc),
        CoefficientKind::IdealCountSquared => constants_corollary1(disc)?,
        CoefficientKind::IdealCountCubeArg => constants_corollary2(disc, &truncation(common)?)?,
    })
}

fn verify(args: &VerifyArgs, common: &Common, format: Format) -> Result<String, CliError> {
    let kind: CoefficientKind = args.kind.parse()?;
    let disc = Discriminant::new(args.discriminant)?;
    let grid = parse_grid(&args.grid).map_err(CliError::Config)?;
    let c = report_constants(kind, &disc, common)?;
    let report: SummationReport = engine(common)?.residual_series(kind, &disc, &c, &grid)?;
    Ok(match format {
        Format::Csv => report.to_csv()?,
        Format::Json => {
            let mut text = report.to_json()?;
            text.push('\n');
            text
        }
        Format::Human => {
            let mut out = format!(
                "kind {}  D = {}  A = {}  B = {}\n{:>12} {:>22} {:>22} {:>16} {:>12}\n",
                kind.tag(),
                report.discriminant,
                sig10(report.a),
                sig10(report.b),
                "x",
                "exact sum",
                "main term",
                "residual",
                "normalized"
            );
            for row in report.rows() {
                out.push_str(&format!(
                    "{:>12} {:>22} {:>22} {:>16} {:>12}\n",
                    row.x,
                    row.exact_sum,
                    sig10(row.main_term),
                    sig10(row.residual),
                    format!("{:.4e}", row.normalized_residual)
                ));
            }
            out
        }
    })
}
