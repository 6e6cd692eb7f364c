//! Two-parameter exponential families described by their log-partition
//! function psi(t1, t2).
//!
//! The information metric is the Hessian of psi, and the scalar curvature
//! has the determinant form
//!
//! ```text
//! S = det3 / (4 det2^2)
//!
//!        | g11  d2 g11  d1 g11 |
//! det3 = | g12  d2 g12  d1 g12 |,   det2 = det g
//!        | g22  d2 g22  d1 g22 |
//! ```
//!
//! in terms of second and third partials of psi, all of which are taken
//! symbolically here. The module also assesses three sufficient flatness
//! conditions on a parameter grid: a metric entry vanishing identically,
//! two entries proportional with a single constant, or every entry
//! depending on at most one of the two parameters. Each one forces two
//! columns or rows of det3 to be linearly dependent, so the curvature
//! vanishes wherever the metric is non-degenerate.

use thiserror::Error;

use crate::expr::{EvalError, Expr};
use crate::geometry::{Metric2, MetricField};
use crate::report::{CurvatureReport, Payload, Pipeline};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExpFamError {
    #[error("log-partition evaluation failed at ({t1}, {t2}): {source}")]
    Evaluation {
        t1: f64,
        t2: f64,
        #[source]
        source: EvalError,
    },
    #[error("log-partition derivatives are non-finite at ({t1}, {t2})")]
    NonFinite { t1: f64, t2: f64 },
    #[error("flatness assessment needs at least one grid point")]
    EmptyGrid,
}

/// A log-partition function with all partial derivatives up to third order
/// precomputed symbolically.
pub struct ExpFamilySpec {
    psi: Expr,
    vars: [String; 2],
    d11: Expr,
    d12: Expr,
    d22: Expr,
    d111: Expr,
    d112: Expr,
    d122: Expr,
    d222: Expr,
}

impl ExpFamilySpec {
    /// Family in the default natural coordinates `t1`, `t2`.
    pub fn new(psi: Expr) -> ExpFamilySpec {
        ExpFamilySpec::with_variables(psi, ["t1", "t2"])
    }

    pub fn with_variables(psi: Expr, vars: [&str; 2]) -> ExpFamilySpec {
        let d1 = psi.differentiate(vars[0]);
        let d2 = psi.differentiate(vars[1]);
        let d11 = d1.differentiate(vars[0]);
        let d12 = d1.differentiate(vars[1]);
        let d22 = d2.differentiate(vars[1]);
        let d111 = d11.differentiate(vars[0]);
        let d112 = d11.differentiate(vars[1]);
        let d122 = d12.differentiate(vars[1]);
        let d222 = d22.differentiate(vars[1]);
        ExpFamilySpec {
            psi,
            vars: [vars[0].to_string(), vars[1].to_string()],
            d11,
            d12,
            d22,
            d111,
            d112,
            d122,
            d222,
        }
    }

    pub fn psi(&self) -> &Expr {
        &self.psi
    }

    pub fn variables(&self) -> [&str; 2] {
        [&self.vars[0], &self.vars[1]]
    }

    fn eval(&self, e: &Expr, t1: f64, t2: f64) -> Result<f64, ExpFamError> {
        let bindings = [(self.vars[0].as_str(), t1), (self.vars[1].as_str(), t2)];
        let v = e
            .evaluate(&bindings)
            .map_err(|source| ExpFamError::Evaluation { t1, t2, source })?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ExpFamError::NonFinite { t1, t2 })
        }
    }
}

/// The Hessian metric at a parameter point.
pub fn ef_metric(spec: &ExpFamilySpec, t1: f64, t2: f64) -> Result<Metric2, ExpFamError> {
    Ok(Metric2::new(
        spec.eval(&spec.d11, t1, t2)?,
        spec.eval(&spec.d12, t1, t2)?,
        spec.eval(&spec.d22, t1, t2)?,
    ))
}

/// Scalar curvature at a point by the determinant formula. A degenerate
/// Hessian yields a degenerate report (no curvature value) rather than an
/// error.
pub fn ef_curvature(
    spec: &ExpFamilySpec,
    t1: f64,
    t2: f64,
) -> Result<CurvatureReport, ExpFamError> {
    let metric = ef_metric(spec, t1, t2)?;
    let payload = Payload::MetricAt {
        theta: [t1, t2],
        metric,
    };
    let pipeline = Pipeline::ExpFamilyDeterminant;
    if metric.is_degenerate() {
        return Ok(CurvatureReport::degenerate(pipeline, payload));
    }
    let d111 = spec.eval(&spec.d111, t1, t2)?;
    let d112 = spec.eval(&spec.d112, t1, t2)?;
    let d122 = spec.eval(&spec.d122, t1, t2)?;
    let d222 = spec.eval(&spec.d222, t1, t2)?;
    let rows = [
        [metric.g11, d112, d111],
        [metric.g12, d122, d112],
        [metric.g22, d222, d122],
    ];
    let det3 = det3x3(&rows);
    let det2 = metric.det();
    let s = det3 / (4.0 * det2 * det2);
    if !s.is_finite() {
        return Err(ExpFamError::NonFinite { t1, t2 });
    }
    Ok(CurvatureReport::from_curvature(s, pipeline, payload))
}

fn det3x3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// The Hessian metric as a field, for cross-checking against the general
/// curvature machinery.
pub fn ef_metric_field(spec: &ExpFamilySpec) -> MetricField {
    MetricField::from_exprs(
        spec.d11.clone(),
        spec.d12.clone(),
        spec.d22.clone(),
        [&spec.vars[0], &spec.vars[1]],
    )
}

/// Which metric entry a flatness observation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricEntry {
    G11,
    G12,
    G22,
}

impl MetricEntry {
    pub fn as_str(self) -> &'static str {
        match self {
            MetricEntry::G11 => "g11",
            MetricEntry::G12 => "g12",
            MetricEntry::G22 => "g22",
        }
    }
}

/// Observed proportionality `to = lambda * from` across the whole grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Proportionality {
    pub from: MetricEntry,
    pub to: MetricEntry,
    pub lambda: f64,
}

/// Which single parameter the metric entries depend on, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dependence {
    Theta1Only,
    Theta2Only,
    Constant,
}

/// Grid assessment of the three sufficient flatness conditions.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatnessReport {
    /// A metric entry that vanishes at every grid point.
    pub zero_entry: Option<MetricEntry>,
    /// A fitted single-constant proportionality between two entries that
    /// holds at every grid point.
    pub proportional: Option<Proportionality>,
    /// Whether the entries depend on at most one parameter (detected from
    /// third partials vanishing on the grid).
    pub single_parameter: Option<Dependence>,
    /// Largest |S| seen on the grid (degenerate points skipped).
    pub max_abs_curvature: f64,
    /// Whether the metric was positive definite at every grid point.
    pub positive_definite: bool,
    pub grid_points: usize,
}

impl FlatnessReport {
    pub fn any_criterion_holds(&self) -> bool {
        self.zero_entry.is_some() || self.proportional.is_some() || self.single_parameter.is_some()
    }
}

const ENTRIES: [MetricEntry; 3] = [MetricEntry::G11, MetricEntry::G12, MetricEntry::G22];

/// Evaluate the flatness conditions on a grid of parameter points.
pub fn ef_flatness_criteria(
    spec: &ExpFamilySpec,
    grid: &[(f64, f64)],
) -> Result<FlatnessReport, ExpFamError> {
    if grid.is_empty() {
        return Err(ExpFamError::EmptyGrid);
    }
    let n = grid.len();
    // entries[e][p]: value of metric entry e at grid point p.
    let mut entries = [vec![0.0; n], vec![0.0; n], vec![0.0; n]];
    let mut third = [vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]];
    let mut positive_definite = true;
    let mut max_abs_curvature = 0.0f64;
    for (p, &(t1, t2)) in grid.iter().enumerate() {
        let metric = ef_metric(spec, t1, t2)?;
        entries[0][p] = metric.g11;
        entries[1][p] = metric.g12;
        entries[2][p] = metric.g22;
        third[0][p] = spec.eval(&spec.d111, t1, t2)?;
        third[1][p] = spec.eval(&spec.d112, t1, t2)?;
        third[2][p] = spec.eval(&spec.d122, t1, t2)?;
        third[3][p] = spec.eval(&spec.d222, t1, t2)?;
        positive_definite &= metric.is_positive_definite();
        if let Some(s) = ef_curvature(spec, t1, t2)?.curvature {
            max_abs_curvature = max_abs_curvature.max(s.abs());
        }
    }

    let scale = entries
        .iter()
        .flat_map(|v| v.iter())
        .fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let tol = 1e-8 * (1.0 + scale);

    let zero_entry = ENTRIES
        .into_iter()
        .enumerate()
        .find(|&(e, _)| entries[e].iter().all(|&v| v.abs() <= tol))
        .map(|(_, name)| name);

    let mut proportional = None;
    'pairs: for from in 0..3 {
        for to in 0..3 {
            if from == to {
                continue;
            }
            let sum_ff: f64 = entries[from].iter().map(|&v| v * v).sum();
            if sum_ff <= tol * tol {
                continue; // the zero-entry condition covers this
            }
            let sum_ft: f64 = entries[from]
                .iter()
                .zip(&entries[to])
                .map(|(&f, &t)| f * t)
                .sum();
            let lambda = sum_ft / sum_ff;
            if !lambda.is_finite() {
                continue;
            }
            let residual = entries[from]
                .iter()
                .zip(&entries[to])
                .fold(0.0f64, |acc, (&f, &t)| acc.max((t - lambda * f).abs()));
            if residual <= tol {
                proportional = Some(Proportionality {
                    from: ENTRIES[from],
                    to: ENTRIES[to],
                    lambda,
                });
                break 'pairs;
            }
        }
    }

    // Third partials with a d1 (indices 0..=2) govern theta_1 dependence of
    // the entries; those with a d2 (indices 1..=3) govern theta_2.
    let third_tol = 1e-8 * (1.0 + third.iter().flat_map(|v| v.iter()).fold(0.0f64, |a, &v| a.max(v.abs())));
    let no_t1_dependence = third[..3]
        .iter()
        .all(|v| v.iter().all(|&x| x.abs() <= third_tol));
    let no_t2_dependence = third[1..]
        .iter()
        .all(|v| v.iter().all(|&x| x.abs() <= third_tol));
    let single_parameter = match (no_t1_dependence, no_t2_dependence) {
        (true, true) => Some(Dependence::Constant),
        (true, false) => Some(Dependence::Theta2Only),
        (false, true) => Some(Dependence::Theta1Only),
        (false, false) => None,
    };

    Ok(FlatnessReport {
        zero_entry,
        proportional,
        single_parameter,
        max_abs_curvature,
        positive_definite,
        grid_points: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Classification;

    fn normal_family() -> ExpFamilySpec {
        let psi: Expr = "t1^2/(4*t2) - (1/2)*log(t2) + (1/2)*log(pi)"
            .parse()
            .unwrap();
        ExpFamilySpec::new(psi)
    }

    fn square_grid(lo: f64, hi: f64, steps: usize) -> Vec<(f64, f64)> {
        let mut grid = Vec::new();
        for i in 0..steps {
            for j in 0..steps {
                let f = |k: usize| lo + (hi - lo) * k as f64 / (steps - 1) as f64;
                grid.push((f(i), f(j)));
            }
        }
        grid
    }

    #[test]
    fn normal_family_metric_and_curvature() {
        let spec = normal_family();
        for (t1, t2) in [(1.0, 0.5), (-2.0, 3.0), (0.0, 1.0)] {
            let g = ef_metric(&spec, t1, t2).unwrap();
            assert!((g.g11 - 1.0 / (2.0 * t2)).abs() < 1e-12);
            assert!((g.g12 - (-t1 / (2.0 * t2 * t2))).abs() < 1e-12);
            let want_g22 = t1 * t1 / (2.0 * t2.powi(3)) + 1.0 / (2.0 * t2 * t2);
            assert!((g.g22 - want_g22).abs() < 1e-12 * (1.0 + want_g22.abs()));

            let report = ef_curvature(&spec, t1, t2).unwrap();
            let s = report.curvature.unwrap();
            assert!((s - (-0.5)).abs() < 1e-10, "S = {s} at ({t1},{t2})");
            assert_eq!(report.classification, Classification::Hyperbolic);
            assert_eq!(report.pipeline, Pipeline::ExpFamilyDeterminant);
        }
    }

    #[test]
    fn quadratic_psi_is_flat_by_zero_entry_and_constancy() {
        let psi: Expr = "t1^2 + t1*t2".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_flatness_criteria(&spec, &square_grid(-1.0, 1.0, 4)).unwrap();
        assert_eq!(report.zero_entry, Some(MetricEntry::G22));
        assert_eq!(report.single_parameter, Some(Dependence::Constant));
        assert!(report.max_abs_curvature <= 1e-8);
        assert!(!report.positive_definite);
        assert!(report.any_criterion_holds());
    }

    #[test]
    fn separable_psi_is_flat_by_vanishing_cross_entry() {
        let psi: Expr = "exp(t1) + exp(t2)".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_flatness_criteria(&spec, &square_grid(0.1, 1.5, 4)).unwrap();
        assert_eq!(report.zero_entry, Some(MetricEntry::G12));
        assert!(report.max_abs_curvature <= 1e-8);
        assert!(report.positive_definite);
    }

    #[test]
    fn shifted_argument_psi_is_flat_by_proportionality() {
        // psi = A(t1) + B(t1 + lambda t2) gives g22 = lambda * g12.
        let psi: Expr = "exp(t1) + exp(t1 + 0.7*t2)".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_flatness_criteria(&spec, &square_grid(0.2, 1.2, 4)).unwrap();
        let prop = report.proportional.expect("proportionality detected");
        assert!((prop.lambda - 0.7).abs() < 1e-8 || (prop.lambda - 1.0 / 0.7).abs() < 1e-8);
        assert!(report.zero_entry.is_none());
        assert!(report.max_abs_curvature <= 1e-8);
        assert!(report.positive_definite);
    }

    #[test]
    fn single_parameter_dependence_is_flat() {
        // Entries (2c, d, G''(t2)) depend on t2 alone.
        let psi: Expr = "0.3*t1^2 + 0.4*t1*t2 + exp(t2)".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_flatness_criteria(&spec, &square_grid(0.1, 1.0, 4)).unwrap();
        assert_eq!(report.single_parameter, Some(Dependence::Theta2Only));
        assert!(report.max_abs_curvature <= 1e-8);
    }

    #[test]
    fn curved_family_triggers_no_criterion() {
        let spec = normal_family();
        let grid: Vec<(f64, f64)> = square_grid(0.5, 2.0, 4);
        let report = ef_flatness_criteria(&spec, &grid).unwrap();
        assert!(!report.any_criterion_holds());
        assert!((report.max_abs_curvature - 0.5).abs() < 1e-8);
        assert!(report.positive_definite);
    }

    #[test]
    fn mixed_partials_commute() {
        let spec = normal_family();
        let alt = spec.d12.differentiate("t1"); // d(d12)/dt1 == d112
        for (t1, t2) in [(1.0, 0.5), (-2.0, 3.0)] {
            let a = spec.eval(&spec.d112, t1, t2).unwrap();
            let b = spec.eval(&alt, t1, t2).unwrap();
            assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn determinant_formula_matches_general_machinery() {
        let psi: Expr = "t1^4 + t1*t2 + t2^4".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_curvature(&spec, 1.0, 1.0).unwrap();
        let s = report.curvature.unwrap();
        // Hand evaluation: det3 = 576, det2 = 143.
        assert!((s - 576.0 / (4.0 * 143.0 * 143.0)).abs() < 1e-12);
        assert_eq!(report.classification, Classification::Spherical);
        let field = ef_metric_field(&spec);
        let via_ricci = field.scalar_curvature(1.0, 1.0).unwrap();
        assert!(
            (s - via_ricci).abs() <= 1e-8 * (1.0 + s.abs()),
            "determinant {s} vs contraction {via_ricci}"
        );
    }

    #[test]
    fn degenerate_hessian_yields_degenerate_report() {
        // det = 4 t1 - 4 t2^2 vanishes on t1 = t2^2.
        let psi: Expr = "t1^2 + t2^2*t1".parse().unwrap();
        let spec = ExpFamilySpec::new(psi);
        let report = ef_curvature(&spec, 1.0, 1.0).unwrap();
        assert_eq!(report.classification, Classification::Degenerate);
        assert_eq!(report.curvature, None);
        // Off the degenerate locus the curvature exists.
        assert!(ef_curvature(&spec, 2.0, 1.0).unwrap().curvature.is_some());
    }

    #[test]
    fn empty_grid_is_rejected() {
        let spec = normal_family();
        assert!(matches!(
            ef_flatness_criteria(&spec, &[]),
            Err(ExpFamError::EmptyGrid)
        ));
    }
}
