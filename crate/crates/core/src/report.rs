//! Shared result types: how a computed scalar curvature is classified and
//! reported, independent of which pipeline produced it.

use std::fmt;

use crate::geometry::Metric2;
use crate::locscale::LsCoefficients;

/// Half-width of the band around zero treated as flat.
pub const CLASSIFICATION_TOL: f64 = 1e-8;

/// Sign-based classification of the scalar curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// S < 0: locally saddle-like geometry.
    Hyperbolic,
    /// |S| within the classification band around zero.
    Flat,
    /// S > 0.
    Spherical,
    /// The metric determinant vanished; no curvature value exists.
    Degenerate,
    /// The location score vanished identically, so the family carries no
    /// information about the first parameter; curvature is reported as zero
    /// in a degenerate limiting sense.
    FlatSingular,
}

impl Classification {
    /// Classify a finite curvature value by sign with the standard band.
    pub fn from_curvature(s: f64) -> Classification {
        if s.abs() <= CLASSIFICATION_TOL {
            Classification::Flat
        } else if s < 0.0 {
            Classification::Hyperbolic
        } else {
            Classification::Spherical
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Hyperbolic => "hyperbolic",
            Classification::Flat => "flat",
            Classification::Spherical => "spherical",
            Classification::Degenerate => "degenerate",
            Classification::FlatSingular => "flat-singular",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which computational route produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pipeline {
    /// Closed-form coefficients from score integrals of a location-scale
    /// generatrix.
    LocationScaleClosedForm,
    /// Determinant formula on the Hessian metric of a log-partition
    /// function.
    ExpFamilyDeterminant,
    /// General Ricci-scalar contraction from metric components.
    RicciGeneral,
    /// Ricci pipeline on the trigamma metric of the two-shape family.
    BetaRicci,
}

impl Pipeline {
    pub fn as_str(self) -> &'static str {
        match self {
            Pipeline::LocationScaleClosedForm => "location-scale-closed-form",
            Pipeline::ExpFamilyDeterminant => "exp-family-determinant",
            Pipeline::RicciGeneral => "ricci-general",
            Pipeline::BetaRicci => "beta-ricci",
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Pipeline-specific data carried alongside the headline number.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    /// Score integrals of a location-scale family.
    LocationScale(LsCoefficients),
    /// The metric evaluated at the reported parameter point.
    MetricAt { theta: [f64; 2], metric: Metric2 },
    /// Two-shape family: metric plus the printed closed-form value for
    /// side-by-side comparison (the Ricci value is the headline number).
    Beta {
        point: [f64; 2],
        metric: Metric2,
        closed_form: f64,
    },
    None,
}

/// A scalar-curvature result with its classification and the pipeline that
/// produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureReport {
    /// The scalar curvature; `None` when the metric is degenerate.
    pub curvature: Option<f64>,
    pub classification: Classification,
    pub pipeline: Pipeline,
    pub payload: Payload,
}

impl CurvatureReport {
    /// Report a finite curvature value, classifying it by sign.
    pub fn from_curvature(s: f64, pipeline: Pipeline, payload: Payload) -> CurvatureReport {
        CurvatureReport {
            curvature: Some(s),
            classification: Classification::from_curvature(s),
            pipeline,
            payload,
        }
    }

    /// Report a degenerate metric (no curvature value).
    pub fn degenerate(pipeline: Pipeline, payload: Payload) -> CurvatureReport {
        CurvatureReport {
            curvature: None,
            classification: Classification::Degenerate,
            pipeline,
            payload,
        }
    }

    /// Report the vanishing-location-score limit as flat.
    pub fn flat_singular(pipeline: Pipeline, payload: Payload) -> CurvatureReport {
        CurvatureReport {
            curvature: Some(0.0),
            classification: Classification::FlatSingular,
            pipeline,
            payload,
        }
    }
}
