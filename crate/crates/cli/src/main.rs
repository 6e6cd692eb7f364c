//! Command-line front end: curvature reports as JSON on stdout, parameter
//! sweeps as CSV files.
//!
//! Exit codes: 0 success, 2 usage error, 3 numerical failure, 4 degenerate
//! geometry (the report is still emitted).

use std::fmt::Display;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

use infogeom::beta::{beta_asymptote, beta_curvature, beta_metric, AsymptoteDirection, BetaPoint};
use infogeom::expfam::{ef_curvature, ef_flatness_criteria, Dependence, ExpFamilySpec};
use infogeom::expr::Expr;
use infogeom::geometry::{GeomError, MetricField};
use infogeom::locscale::{
    builtin, ls_coefficients, ls_curvature, ls_metric_at, Generatrix, GeneratrixBuilder,
    LocScaleError, LsCoefficients,
};
use infogeom::quad::SupportSpec;
use infogeom::report::{Classification, Payload, Pipeline};
use infogeom::Metric2;

mod document;
mod sweep;

use document::{float, float_opt, print_document};
use sweep::{GridAxis, Row};

/// Fisher-metric curvature reports for two-parameter probability manifolds.
#[derive(Parser)]
#[command(name = "infogeom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Location-scale family built from a generatrix density in x.
    Locscale(LocscaleArgs),
    /// Exponential family given its log-partition function in t1, t2.
    Expfam(ExpfamArgs),
    /// Beta shape-parameter manifold.
    Beta(BetaArgs),
    /// Arbitrary metric given entry expressions in t1, t2.
    Metric(MetricArgs),
    /// Evaluate a family over a parameter grid and write a CSV.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct LocscaleArgs {
    /// Built-in generatrix: gaussian, cauchy, exponential, laplace
    #[arg(long, conflicts_with = "density_expr")]
    generatrix: Option<String>,
    /// Density expression in x, e.g. "exp(-x^2)/sqrt(pi)"
    #[arg(long, requires = "support")]
    density_expr: Option<String>,
    /// Support intervals, e.g. "(0,inf)" or "(-inf,0),(0,inf)"
    #[arg(long)]
    support: Option<String>,
    /// Comma-separated interior breakpoints of the density
    #[arg(long, allow_hyphen_values = true)]
    breakpoints: Option<String>,
    /// Rescale the density to unit mass if its integral is off
    #[arg(long)]
    normalize: bool,
}

#[derive(Args)]
struct ExpfamArgs {
    /// Log-partition expression in t1, t2
    #[arg(long)]
    psi_expr: String,
    /// Evaluation point "t1,t2"
    #[arg(long, allow_hyphen_values = true)]
    theta: String,
    /// Grid "lo:hi:steps,lo:hi:steps" for the flatness-criteria scan
    #[arg(long, allow_hyphen_values = true)]
    flatness_grid: Option<String>,
}

#[derive(Args)]
struct BetaArgs {
    /// First shape parameter
    #[arg(long, allow_hyphen_values = true, requires = "beta", conflicts_with = "asymptote")]
    alpha: Option<f64>,
    /// Second shape parameter
    #[arg(long, allow_hyphen_values = true, requires = "alpha")]
    beta: Option<f64>,
    /// Extrapolate the curvature limit along a ray: both-large, both-small, mixed
    #[arg(long)]
    asymptote: Option<String>,
}

#[derive(Args)]
struct MetricArgs {
    /// Expression for the (1,1) metric entry
    #[arg(long)]
    g11: String,
    /// Expression for the off-diagonal entry
    #[arg(long)]
    g12: String,
    /// Expression for the (2,2) metric entry
    #[arg(long)]
    g22: String,
    /// Evaluation point "t1,t2"
    #[arg(long, allow_hyphen_values = true)]
    theta: String,
}

#[derive(Args)]
struct SweepArgs {
    #[command(subcommand)]
    family: SweepFamily,
}

#[derive(Subcommand)]
enum SweepFamily {
    /// Sweep a location-scale family over (location, scale).
    Locscale {
        #[command(flatten)]
        family: LocscaleArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Sweep an exponential family over (t1, t2).
    Expfam {
        /// Log-partition expression in t1, t2
        #[arg(long)]
        psi_expr: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Sweep the beta manifold over (alpha, beta).
    Beta {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Sweep an explicit metric over (t1, t2).
    Metric {
        /// Expression for the (1,1) metric entry
        #[arg(long)]
        g11: String,
        /// Expression for the off-diagonal entry
        #[arg(long)]
        g12: String,
        /// Expression for the (2,2) metric entry
        #[arg(long)]
        g22: String,
        #[command(flatten)]
        grid: GridArgs,
    },
}

#[derive(Args)]
struct GridArgs {
    /// First parameter axis "lo:hi:steps"
    #[arg(long, allow_hyphen_values = true)]
    grid1: String,
    /// Second parameter axis "lo:hi:steps"
    #[arg(long, allow_hyphen_values = true)]
    grid2: String,
    /// Space the first axis geometrically
    #[arg(long)]
    log1: bool,
    /// Space the second axis geometrically
    #[arg(long)]
    log2: bool,
    /// CSV output path
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
    #[error("cannot write output: {0}")]
    Output(io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Output(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

fn usage(err: impl Display) -> CliError {
    CliError::Usage(err.to_string())
}

fn numerical(err: impl Display) -> CliError {
    CliError::Numerical(err.to_string())
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Locscale(args) => run_locscale(&args),
        Command::Expfam(args) => run_expfam(&args),
        Command::Beta(args) => run_beta(&args),
        Command::Metric(args) => run_metric(&args),
        Command::Sweep(args) => run_sweep(&args),
    }
}

/// Exit code implied by a classification: degenerate geometry is reported
/// but flagged.
fn exit_for(classification: Classification) -> i32 {
    match classification {
        Classification::Degenerate | Classification::FlatSingular => 4,
        _ => 0,
    }
}

fn document_head(command: &str) -> Value {
    json!({
        "tool": "infogeom",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
    })
}

fn insert(doc: &mut Value, key: &str, value: Value) {
    doc.as_object_mut()
        .expect("document is an object")
        .insert(key.to_string(), value);
}

fn metric_json(m: &Metric2) -> Value {
    json!({
        "g11": float(m.g11),
        "g12": float(m.g12),
        "g22": float(m.g22),
        "det": float(m.det()),
    })
}

fn parse_pair(text: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [a, b] = parts.as_slice() else {
        return Err(CliError::Usage(format!(
            "expected two comma-separated numbers, got `{text}`"
        )));
    };
    let a: f64 = a
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid number `{a}` in `{text}`")))?;
    let b: f64 = b
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid number `{b}` in `{text}`")))?;
    Ok((a, b))
}

fn parse_float_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid number `{piece}` in `{text}`")))
        })
        .collect()
}

fn locscale_error(err: LocScaleError) -> CliError {
    match err {
        LocScaleError::UnknownGeneratrix(_) => usage(err),
        _ => numerical(err),
    }
}

fn build_generatrix(args: &LocscaleArgs) -> Result<Generatrix, CliError> {
    match (&args.generatrix, &args.density_expr) {
        (Some(name), None) => builtin(name).map_err(locscale_error),
        (None, Some(text)) => {
            let support_text = args
                .support
                .as_deref()
                .ok_or_else(|| CliError::Usage("--density-expr requires --support".into()))?;
            let density: Expr = text.parse().map_err(usage)?;
            let mut support: SupportSpec = support_text.parse().map_err(usage)?;
            if let Some(list) = &args.breakpoints {
                support = support
                    .with_breakpoints(parse_float_list(list)?)
                    .map_err(usage)?;
            }
            let mut builder = GeneratrixBuilder::new(density, support).name("custom");
            if args.normalize {
                builder = builder.auto_normalize();
            }
            builder.build().map_err(locscale_error)
        }
        _ => Err(CliError::Usage(
            "exactly one of --generatrix or --density-expr is required".into(),
        )),
    }
}

fn coefficients_json(coeffs: &LsCoefficients) -> Value {
    json!({
        "a2": float(coeffs.a2),
        "b2": float(coeffs.b2),
        "c": float(coeffs.c),
        "a2_error": float(coeffs.a2_error),
        "b2_error": float(coeffs.b2_error),
        "c_error": float(coeffs.c_error),
        "det": float(coeffs.det()),
    })
}

fn run_locscale(args: &LocscaleArgs) -> Result<i32, CliError> {
    let gen = build_generatrix(args)?;
    let coeffs = ls_coefficients(&gen).map_err(locscale_error)?;
    let report = ls_curvature(&coeffs);
    let mut doc = document_head("locscale");
    insert(
        &mut doc,
        "input",
        json!({
            "family": gen.name(),
            "density": gen.density().to_string(),
            "support": gen.support().to_string(),
            "breakpoints": gen.support().breakpoints().iter().map(|&b| float(b)).collect::<Vec<_>>(),
            "normalization": float(gen.normalization()),
        }),
    );
    insert(&mut doc, "coefficients", coefficients_json(&coeffs));
    insert(&mut doc, "curvature", float_opt(report.curvature));
    insert(&mut doc, "classification", json!(report.classification.as_str()));
    insert(&mut doc, "pipeline", json!(report.pipeline.as_str()));
    print_document(&doc).map_err(CliError::Output)?;
    Ok(exit_for(report.classification))
}

fn parse_flatness_grid(text: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [first, second] = parts.as_slice() else {
        return Err(CliError::Usage(format!(
            "flatness grid must be lo:hi:steps,lo:hi:steps, got `{text}`"
        )));
    };
    let axis1 = GridAxis::parse(first, false).map_err(CliError::Usage)?;
    let axis2 = GridAxis::parse(second, false).map_err(CliError::Usage)?;
    let mut grid = Vec::new();
    for &t1 in &axis1.points() {
        for &t2 in &axis2.points() {
            grid.push((t1, t2));
        }
    }
    Ok(grid)
}

fn dependence_str(dep: Dependence) -> &'static str {
    match dep {
        Dependence::Theta1Only => "theta1-only",
        Dependence::Theta2Only => "theta2-only",
        Dependence::Constant => "constant",
    }
}

fn run_expfam(args: &ExpfamArgs) -> Result<i32, CliError> {
    let psi: Expr = args.psi_expr.parse().map_err(usage)?;
    let (t1, t2) = parse_pair(&args.theta)?;
    let spec = ExpFamilySpec::new(psi);
    let report = ef_curvature(&spec, t1, t2).map_err(numerical)?;
    let Payload::MetricAt { metric, .. } = report.payload else {
        unreachable!("exponential-family reports carry the metric");
    };
    let mut doc = document_head("expfam");
    insert(
        &mut doc,
        "input",
        json!({
            "psi": args.psi_expr,
            "theta": [float(t1), float(t2)],
        }),
    );
    insert(&mut doc, "metric", metric_json(&metric));
    insert(&mut doc, "curvature", float_opt(report.curvature));
    insert(&mut doc, "classification", json!(report.classification.as_str()));
    insert(&mut doc, "pipeline", json!(report.pipeline.as_str()));
    if let Some(grid_text) = &args.flatness_grid {
        let grid = parse_flatness_grid(grid_text)?;
        let fl = ef_flatness_criteria(&spec, &grid).map_err(numerical)?;
        insert(
            &mut doc,
            "flatness",
            json!({
                "zero_entry": fl.zero_entry.map(|e| e.as_str()),
                "proportional": fl.proportional.map(|p| json!({
                    "from": p.from.as_str(),
                    "to": p.to.as_str(),
                    "lambda": float(p.lambda),
                })),
                "single_parameter": fl.single_parameter.map(dependence_str),
                "any_criterion_holds": fl.any_criterion_holds(),
                "max_abs_curvature": float(fl.max_abs_curvature),
                "positive_definite": fl.positive_definite,
                "grid_points": fl.grid_points,
            }),
        );
    }
    print_document(&doc).map_err(CliError::Output)?;
    Ok(exit_for(report.classification))
}

fn parse_direction(text: &str) -> Result<AsymptoteDirection, CliError> {
    match text {
        "both-large" => Ok(AsymptoteDirection::BothLarge),
        "both-small" => Ok(AsymptoteDirection::BothSmall),
        "mixed" => Ok(AsymptoteDirection::Mixed),
        other => Err(CliError::Usage(format!(
            "unknown asymptote direction `{other}` (expected both-large, both-small, or mixed)"
        ))),
    }
}

fn run_beta(args: &BetaArgs) -> Result<i32, CliError> {
    match (&args.asymptote, args.alpha, args.beta) {
        (Some(direction), None, None) => {
            let direction = parse_direction(direction)?;
            let est = beta_asymptote(direction).map_err(numerical)?;
            let mut doc = document_head("beta");
            insert(&mut doc, "input", json!({ "asymptote": direction.as_str() }));
            insert(
                &mut doc,
                "samples",
                Value::Array(
                    est.samples
                        .iter()
                        .map(|&(t, s)| json!({ "t": float(t), "curvature": float(s) }))
                        .collect(),
                ),
            );
            insert(&mut doc, "limit", float(est.limit));
            insert(&mut doc, "monotone_tail", json!(est.monotone_tail));
            insert(&mut doc, "pipeline", json!(Pipeline::BetaRicci.as_str()));
            print_document(&doc).map_err(CliError::Output)?;
            Ok(0)
        }
        (None, Some(alpha), Some(beta)) => {
            let point = BetaPoint::new(alpha, beta).map_err(usage)?;
            let report = beta_curvature(point).map_err(numerical)?;
            let Payload::Beta {
                metric,
                closed_form,
                ..
            } = report.payload
            else {
                unreachable!("beta reports carry the metric and closed form");
            };
            let mut doc = document_head("beta");
            insert(
                &mut doc,
                "input",
                json!({ "alpha": float(alpha), "beta": float(beta) }),
            );
            insert(&mut doc, "metric", metric_json(&metric));
            insert(&mut doc, "curvature", float_opt(report.curvature));
            insert(&mut doc, "classification", json!(report.classification.as_str()));
            insert(&mut doc, "pipeline", json!(report.pipeline.as_str()));
            insert(&mut doc, "closed_form_reference", float(closed_form));
            print_document(&doc).map_err(CliError::Output)?;
            Ok(exit_for(report.classification))
        }
        _ => Err(CliError::Usage(
            "either --alpha with --beta, or --asymptote, is required".into(),
        )),
    }
}

fn run_metric(args: &MetricArgs) -> Result<i32, CliError> {
    let g11: Expr = args.g11.parse().map_err(usage)?;
    let g12: Expr = args.g12.parse().map_err(usage)?;
    let g22: Expr = args.g22.parse().map_err(usage)?;
    let (t1, t2) = parse_pair(&args.theta)?;
    let field = MetricField::from_exprs(g11, g12, g22, ["t1", "t2"]);
    let metric = field.components(t1, t2).map_err(numerical)?;
    let (curvature, classification) = match field.scalar_curvature(t1, t2) {
        Ok(s) => (Some(s), Classification::from_curvature(s)),
        Err(GeomError::DegenerateMetric { .. }) => (None, Classification::Degenerate),
        Err(err) => return Err(numerical(err)),
    };
    let mut doc = document_head("metric");
    insert(
        &mut doc,
        "input",
        json!({
            "g11": args.g11,
            "g12": args.g12,
            "g22": args.g22,
            "theta": [float(t1), float(t2)],
        }),
    );
    insert(&mut doc, "metric", metric_json(&metric));
    insert(&mut doc, "curvature", float_opt(curvature));
    insert(&mut doc, "classification", json!(classification.as_str()));
    insert(&mut doc, "pipeline", json!(Pipeline::RicciGeneral.as_str()));
    print_document(&doc).map_err(CliError::Output)?;
    Ok(exit_for(classification))
}

fn axis_points(spec: &str, log: bool) -> Result<Vec<f64>, CliError> {
    Ok(GridAxis::parse(spec, log).map_err(CliError::Usage)?.points())
}

fn locscale_rows(args: &LocscaleArgs, grid: &GridArgs) -> Result<Vec<Row>, CliError> {
    let gen = build_generatrix(args)?;
    let coeffs = ls_coefficients(&gen).map_err(locscale_error)?;
    let report = ls_curvature(&coeffs);
    let locations = axis_points(&grid.grid1, grid.log1)?;
    let scales = axis_points(&grid.grid2, grid.log2)?;
    let mut rows = Vec::new();
    for &l in &locations {
        for &s in &scales {
            rows.push(match ls_metric_at(&coeffs, s) {
                Ok(m) => Row {
                    p1: l,
                    p2: s,
                    curvature: report.curvature,
                    classification: report.classification.as_str().to_string(),
                    det: Some(m.det()),
                },
                Err(_) => Row::error(l, s),
            });
        }
    }
    Ok(rows)
}

fn expfam_rows(psi_expr: &str, grid: &GridArgs) -> Result<Vec<Row>, CliError> {
    let psi: Expr = psi_expr.parse().map_err(usage)?;
    let spec = ExpFamilySpec::new(psi);
    let axis1 = axis_points(&grid.grid1, grid.log1)?;
    let axis2 = axis_points(&grid.grid2, grid.log2)?;
    let mut rows = Vec::new();
    for &t1 in &axis1 {
        for &t2 in &axis2 {
            rows.push(match ef_curvature(&spec, t1, t2) {
                Ok(report) => {
                    let Payload::MetricAt { metric, .. } = report.payload else {
                        unreachable!("exponential-family reports carry the metric");
                    };
                    Row {
                        p1: t1,
                        p2: t2,
                        curvature: report.curvature,
                        classification: report.classification.as_str().to_string(),
                        det: Some(metric.det()),
                    }
                }
                Err(_) => Row::error(t1, t2),
            });
        }
    }
    Ok(rows)
}

fn beta_rows(grid: &GridArgs) -> Result<Vec<Row>, CliError> {
    let alphas = axis_points(&grid.grid1, grid.log1)?;
    let betas = axis_points(&grid.grid2, grid.log2)?;
    let mut rows = Vec::new();
    for &a in &alphas {
        for &b in &betas {
            let row = BetaPoint::new(a, b)
                .and_then(|point| Ok((beta_metric(point)?, beta_curvature(point)?)))
                .map(|(metric, report)| Row {
                    p1: a,
                    p2: b,
                    curvature: report.curvature,
                    classification: report.classification.as_str().to_string(),
                    det: Some(metric.det()),
                })
                .unwrap_or_else(|_| Row::error(a, b));
            rows.push(row);
        }
    }
    Ok(rows)
}

fn metric_rows(g11: &str, g12: &str, g22: &str, grid: &GridArgs) -> Result<Vec<Row>, CliError> {
    let g11: Expr = g11.parse().map_err(usage)?;
    let g12: Expr = g12.parse().map_err(usage)?;
    let g22: Expr = g22.parse().map_err(usage)?;
    let field = MetricField::from_exprs(g11, g12, g22, ["t1", "t2"]);
    let axis1 = axis_points(&grid.grid1, grid.log1)?;
    let axis2 = axis_points(&grid.grid2, grid.log2)?;
    let mut rows = Vec::new();
    for &t1 in &axis1 {
        for &t2 in &axis2 {
            let Ok(metric) = field.components(t1, t2) else {
                rows.push(Row::error(t1, t2));
                continue;
            };
            rows.push(match field.scalar_curvature(t1, t2) {
                Ok(s) => Row {
                    p1: t1,
                    p2: t2,
                    curvature: Some(s),
                    classification: Classification::from_curvature(s).as_str().to_string(),
                    det: Some(metric.det()),
                },
                Err(GeomError::DegenerateMetric { .. }) => Row {
                    p1: t1,
                    p2: t2,
                    curvature: None,
                    classification: Classification::Degenerate.as_str().to_string(),
                    det: Some(metric.det()),
                },
                Err(_) => Row::error(t1, t2),
            });
        }
    }
    Ok(rows)
}

fn run_sweep(args: &SweepArgs) -> Result<i32, CliError> {
    let (family, grid, rows) = match &args.family {
        SweepFamily::Locscale { family, grid } => ("locscale", grid, locscale_rows(family, grid)?),
        SweepFamily::Expfam { psi_expr, grid } => ("expfam", grid, expfam_rows(psi_expr, grid)?),
        SweepFamily::Beta { grid } => ("beta", grid, beta_rows(grid)?),
        SweepFamily::Metric { g11, g12, g22, grid } => {
            ("metric", grid, metric_rows(g11, g12, g22, grid)?)
        }
    };
    let count = sweep::write_csv(&grid.output, &rows).map_err(CliError::Output)?;
    let mut doc = document_head("sweep");
    insert(&mut doc, "family", json!(family));
    insert(&mut doc, "rows", json!(count));
    insert(&mut doc, "output", json!(grid.output.display().to_string()));
    print_document(&doc).map_err(CliError::Output)?;
    Ok(0)
}
