//! The two-shape family on (0, 1) with density proportional to
//! x^(a-1) (1-x)^(b-1): its information metric in the shape parameters,
//! curvature through the general Ricci machinery, a printed closed-form
//! expression kept for side-by-side comparison, and extrapolated limits of
//! the curvature along parameter rays.
//!
//! The metric comes from trigamma values,
//!
//! ```text
//! g11 = psi'(a) - psi'(a+b)    g12 = -psi'(a+b)
//! g22 = psi'(b) - psi'(a+b)
//! ```
//!
//! and its first parameter derivatives from tetragamma, so only the second
//! derivative level of the curvature computation needs finite differences.
//! Steps scale relatively here because interesting shape values span many
//! orders of magnitude.

use thiserror::Error;

use crate::geometry::{GeomError, Metric2, MetricField, StepRule};
use crate::report::{CurvatureReport, Payload, Pipeline};
use crate::specfun::{tetragamma, trigamma, SpecFunError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BetaError {
    #[error("shape parameters must be positive and finite, got ({0}, {1})")]
    InvalidShape(f64, f64),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// A validated point in the positive shape quadrant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaPoint {
    alpha: f64,
    beta: f64,
}

impl BetaPoint {
    pub fn new(alpha: f64, beta: f64) -> Result<BetaPoint, BetaError> {
        if alpha > 0.0 && alpha.is_finite() && beta > 0.0 && beta.is_finite() {
            Ok(BetaPoint { alpha, beta })
        } else {
            Err(BetaError::InvalidShape(alpha, beta))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// The information metric at a shape point.
pub fn beta_metric(point: BetaPoint) -> Result<Metric2, BetaError> {
    let s = point.alpha + point.beta;
    let tg_a = trigamma(point.alpha)?;
    let tg_b = trigamma(point.beta)?;
    let tg_s = trigamma(s)?;
    Ok(Metric2::new(tg_a - tg_s, -tg_s, tg_b - tg_s))
}

/// The metric as a field over the shape quadrant, with analytic first
/// derivatives and relative finite-difference steps.
pub fn beta_metric_field() -> MetricField {
    let components = |a: f64, b: f64| -> Metric2 {
        match BetaPoint::new(a, b).and_then(beta_metric) {
            Ok(m) => m,
            Err(_) => Metric2::new(f64::NAN, f64::NAN, f64::NAN),
        }
    };
    let gradient = |a: f64, b: f64| -> [Metric2; 2] {
        let bad = [Metric2::new(f64::NAN, f64::NAN, f64::NAN); 2];
        let s = a + b;
        let (Ok(t4_a), Ok(t4_b), Ok(t4_s)) = (tetragamma(a), tetragamma(b), tetragamma(s))
        else {
            return bad;
        };
        [
            Metric2::new(t4_a - t4_s, -t4_s, -t4_s),
            Metric2::new(-t4_s, -t4_s, t4_b - t4_s),
        ]
    };
    MetricField::from_fn_with_gradient(components, gradient)
        .with_step_rule(StepRule::Relative { scale: 1e-5 })
}

/// Scalar curvature at a shape point through the general Ricci machinery,
/// reported alongside the printed closed-form value.
pub fn beta_curvature(point: BetaPoint) -> Result<CurvatureReport, BetaError> {
    let metric = beta_metric(point)?;
    let closed_form = beta_closed_form(point)?;
    let payload = Payload::Beta {
        point: [point.alpha, point.beta],
        metric,
        closed_form,
    };
    let field = beta_metric_field();
    match field.scalar_curvature(point.alpha, point.beta) {
        Ok(s) => Ok(CurvatureReport::from_curvature(
            s,
            Pipeline::BetaRicci,
            payload,
        )),
        Err(GeomError::DegenerateMetric { .. }) => {
            Ok(CurvatureReport::degenerate(Pipeline::BetaRicci, payload))
        }
        Err(e) => Err(BetaError::Geometry(e)),
    }
}

/// The closed-form curvature expression as printed in its source, evaluated
/// verbatim. It disagrees with the Ricci pipeline (see the comparison data
/// in the curvature report), so it is reported for reference, never used as
/// the headline value.
pub fn beta_closed_form(point: BetaPoint) -> Result<f64, BetaError> {
    let (a, b) = (point.alpha, point.beta);
    let s = a + b;
    let tg_a = trigamma(a)?;
    let tg_b = trigamma(b)?;
    let tg_s = trigamma(s)?;
    let t4_a = tetragamma(a)?;
    let t4_b = tetragamma(b)?;
    let t4_s = tetragamma(s)?;
    let num = t4_a * t4_b * tg_s - tg_a * t4_b * t4_s - t4_a * tg_b * t4_s;
    let den = 4.0 * (tg_a * tg_s + tg_b * tg_s - tg_a * tg_b);
    Ok(num / den)
}

/// Rays along which the curvature limit is extrapolated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoteDirection {
    /// (t, t) as t grows.
    BothLarge,
    /// (1/t, 1/t) as t grows.
    BothSmall,
    /// (t, 1/t) as t grows.
    Mixed,
}

impl AsymptoteDirection {
    fn point(self, t: f64) -> (f64, f64) {
        match self {
            AsymptoteDirection::BothLarge => (t, t),
            AsymptoteDirection::BothSmall => (1.0 / t, 1.0 / t),
            AsymptoteDirection::Mixed => (t, 1.0 / t),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AsymptoteDirection::BothLarge => "both-large",
            AsymptoteDirection::BothSmall => "both-small",
            AsymptoteDirection::Mixed => "mixed",
        }
    }
}

/// Curvature samples along a ray and their Richardson-extrapolated limit.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoteEstimate {
    pub direction: AsymptoteDirection,
    /// (ray parameter t, curvature at the ray point) for t = 10^1..10^4.
    pub samples: [(f64, f64); 4],
    /// Two-stage Richardson extrapolation of the samples in 1/t.
    pub limit: f64,
    /// Whether consecutive sample differences kept one sign, i.e. the tail
    /// approached its limit monotonically.
    pub monotone_tail: bool,
}

/// Sample the curvature at t = 10, 100, 1000, 10000 along a ray and
/// extrapolate the limit, assuming an expansion in powers of 1/t.
pub fn beta_asymptote(direction: AsymptoteDirection) -> Result<AsymptoteEstimate, BetaError> {
    let mut samples = [(0.0, 0.0); 4];
    for (k, slot) in samples.iter_mut().enumerate() {
        let t = 10f64.powi(k as i32 + 1);
        let (a, b) = direction.point(t);
        let point = BetaPoint::new(a, b)?;
        let report = beta_curvature(point)?;
        let Some(s) = report.curvature else {
            return Err(BetaError::Geometry(GeomError::DegenerateMetric {
                t1: a,
                t2: b,
                det: beta_metric(point)?.det(),
            }));
        };
        *slot = (t, s);
    }
    let v: Vec<f64> = samples.iter().map(|&(_, s)| s).collect();
    // First stage removes the 1/t term (ratio 10 between consecutive t),
    // the second removes 1/t^2.
    let r1: Vec<f64> = (0..3).map(|k| (10.0 * v[k + 1] - v[k]) / 9.0).collect();
    let r2: Vec<f64> = (0..2)
        .map(|k| (100.0 * r1[k + 1] - r1[k]) / 99.0)
        .collect();
    let limit = r2[1];
    let d1 = v[1] - v[0];
    let d2 = v[2] - v[1];
    let d3 = v[3] - v[2];
    let monotone_tail = (d1 >= 0.0 && d2 >= 0.0 && d3 >= 0.0) || (d1 <= 0.0 && d2 <= 0.0 && d3 <= 0.0);
    Ok(AsymptoteEstimate {
        direction,
        samples,
        limit,
        monotone_tail,
    })
}
