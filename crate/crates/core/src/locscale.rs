//! Location-scale families built from a generatrix density p(x): the family
//! is (1/s) p((x-l)/s) over location l and scale s > 0.
//!
//! The information metric of such a family is determined by three integrals
//! of the standardized density,
//!
//! ```text
//! a^2 = integral of p'(x)^2 / p(x)
//! b^2 = integral of (p(x) + x p'(x))^2 / p(x)
//! c   = integral of p'(x) (p(x) + x p'(x)) / p(x)
//! ```
//!
//! giving g = (1/s^2) [[a^2, c], [c, b^2]] in (l, s) coordinates and the
//! scalar curvature S = -a^2 / (a^2 b^2 - c^2), constant over the whole
//! family. Densities are expressions in the variable `x`.

use std::cell::Cell;

use thiserror::Error;

use crate::expr::Expr;
use crate::geometry::{Metric2, MetricField};
use crate::quad::{integrate, QuadError, SupportSpec, DEFAULT_ABS_TOL, DEFAULT_REL_TOL};
use crate::report::{CurvatureReport, Payload, Pipeline};

/// |integral - 1| must be within this for a density to count as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-6;
/// Below this, a^2 is treated as identically zero (location carries no
/// information) and the family is reported flat-singular.
pub const A2_SINGULAR_TOL: f64 = 1e-10;
/// The metric determinant is degenerate below this relative threshold.
pub const DEGENERACY_REL_TOL: f64 = 1e-8;
/// Sampled density values below this are treated as genuinely negative.
const NEGATIVITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LocScaleError {
    #[error("density must be nonnegative on its support; sampled p({x}) = {value}")]
    NegativeDensity { x: f64, value: f64 },
    #[error("density integrates to {integral} rather than 1; enable auto-normalization to rescale")]
    NotNormalized { integral: f64 },
    #[error("scale parameter must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("unknown generatrix `{0}`; available: gaussian, cauchy, exponential, laplace")]
    UnknownGeneratrix(String),
    #[error("invalid mixture: {0}")]
    InvalidMixture(&'static str),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

/// A validated standardized density: nonnegative, unit mass, with its
/// derivative and support attached.
#[derive(Debug, Clone)]
pub struct Generatrix {
    name: String,
    density: Expr,
    derivative: Expr,
    support: SupportSpec,
    normalization: f64,
}

impl Generatrix {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The density as an expression in `x` (already rescaled if the builder
    /// normalized it).
    pub fn density(&self) -> &Expr {
        &self.density
    }

    pub fn derivative(&self) -> &Expr {
        &self.derivative
    }

    pub fn support(&self) -> &SupportSpec {
        &self.support
    }

    /// The constant the raw density was divided by (1 when it was already
    /// normalized).
    pub fn normalization(&self) -> f64 {
        self.normalization
    }
}

/// Builds a [`Generatrix`], checking nonnegativity and total mass by
/// quadrature. The derivative defaults to the symbolic derivative of the
/// density and can be overridden for densities whose automatic derivative
/// is awkward.
pub struct GeneratrixBuilder {
    name: Option<String>,
    density: Expr,
    derivative: Option<Expr>,
    support: SupportSpec,
    auto_normalize: bool,
}

impl GeneratrixBuilder {
    pub fn new(density: Expr, support: SupportSpec) -> GeneratrixBuilder {
        GeneratrixBuilder {
            name: None,
            density,
            derivative: None,
            support,
            auto_normalize: false,
        }
    }

    pub fn name(mut self, name: impl Into<String>) -> GeneratrixBuilder {
        self.name = Some(name.into());
        self
    }

    pub fn derivative(mut self, derivative: Expr) -> GeneratrixBuilder {
        self.derivative = Some(derivative);
        self
    }

    /// Rescale the density by its computed integral instead of rejecting an
    /// unnormalized one.
    pub fn auto_normalize(mut self) -> GeneratrixBuilder {
        self.auto_normalize = true;
        self
    }

    pub fn build(self) -> Result<Generatrix, LocScaleError> {
        let derivative = self
            .derivative
            .unwrap_or_else(|| self.density.differentiate("x"));

        // One pass computes the total mass and watches for negative samples;
        // a negative sample aborts the quadrature via NaN and wins over the
        // resulting quadrature error.
        let negative: Cell<Option<(f64, f64)>> = Cell::new(None);
        let density = &self.density;
        let mass = integrate(
            |x| {
                let p = match density.evaluate(&[("x", x)]) {
                    Ok(v) => v,
                    Err(_) => return f64::NAN,
                };
                if p < -NEGATIVITY_TOL {
                    if negative.get().is_none() {
                        negative.set(Some((x, p)));
                    }
                    return f64::NAN;
                }
                p
            },
            &self.support,
            DEFAULT_ABS_TOL,
            DEFAULT_REL_TOL,
        );
        if let Some((x, value)) = negative.get() {
            return Err(LocScaleError::NegativeDensity { x, value });
        }
        let z = mass?.value;

        let (density, derivative, normalization) = if (z - 1.0).abs() <= NORMALIZATION_TOL {
            (self.density, derivative, 1.0)
        } else if self.auto_normalize && z > 0.0 && z.is_finite() {
            (
                self.density / Expr::constant(z),
                derivative / Expr::constant(z),
                z,
            )
        } else {
            return Err(LocScaleError::NotNormalized { integral: z });
        };

        Ok(Generatrix {
            name: self.name.unwrap_or_else(|| "custom".to_string()),
            density,
            derivative,
            support: self.support,
            normalization,
        })
    }
}

/// Standard normal-shape generatrix exp(-x^2)/sqrt(pi).
pub fn gaussian() -> Generatrix {
    let density: Expr = "exp(-x^2)/sqrt(pi)".parse().expect("valid density");
    GeneratrixBuilder::new(density, SupportSpec::real_line())
        .name("gaussian")
        .build()
        .expect("catalog density is normalized")
}

/// Standard Cauchy generatrix 1/(pi (1+x^2)).
pub fn cauchy() -> Generatrix {
    let density: Expr = "1/(pi*(1+x^2))".parse().expect("valid density");
    GeneratrixBuilder::new(density, SupportSpec::real_line())
        .name("cauchy")
        .build()
        .expect("catalog density is normalized")
}

/// Unit exponential generatrix exp(-x) on (0, inf).
pub fn exponential() -> Generatrix {
    let density: Expr = "exp(-x)".parse().expect("valid density");
    let support = SupportSpec::interval(0.0, f64::INFINITY).expect("valid support");
    GeneratrixBuilder::new(density, support)
        .name("exponential")
        .build()
        .expect("catalog density is normalized")
}

/// Standard Laplace generatrix exp(-|x|)/2, with the kink at zero declared
/// as a breakpoint.
pub fn laplace() -> Generatrix {
    let density: Expr = "(1/2)*exp(-abs(x))".parse().expect("valid density");
    let support = SupportSpec::real_line()
        .with_breakpoints(vec![0.0])
        .expect("valid support");
    GeneratrixBuilder::new(density, support)
        .name("laplace")
        .build()
        .expect("catalog density is normalized")
}

/// Look up a catalog generatrix by name.
pub fn builtin(name: &str) -> Result<Generatrix, LocScaleError> {
    match name {
        "gaussian" => Ok(gaussian()),
        "cauchy" => Ok(cauchy()),
        "exponential" => Ok(exponential()),
        "laplace" => Ok(laplace()),
        other => Err(LocScaleError::UnknownGeneratrix(other.to_string())),
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["gaussian", "cauchy", "exponential", "laplace"]
}

/// One component of a Gaussian mixture generatrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianComponent {
    pub weight: f64,
    pub mean: f64,
    pub std_dev: f64,
}

/// Build a mixture of Gaussians as a generatrix. Weights are rescaled to
/// sum to one, so any positive weights are accepted.
pub fn gaussian_mixture(components: &[GaussianComponent]) -> Result<Generatrix, LocScaleError> {
    if components.is_empty() {
        return Err(LocScaleError::InvalidMixture(
            "mixture needs at least one component",
        ));
    }
    for c in components {
        if !(c.weight > 0.0 && c.weight.is_finite()) {
            return Err(LocScaleError::InvalidMixture(
                "component weights must be positive and finite",
            ));
        }
        if !(c.std_dev > 0.0 && c.std_dev.is_finite()) {
            return Err(LocScaleError::InvalidMixture(
                "component standard deviations must be positive and finite",
            ));
        }
        if !c.mean.is_finite() {
            return Err(LocScaleError::InvalidMixture(
                "component means must be finite",
            ));
        }
    }
    let total: f64 = components.iter().map(|c| c.weight).sum();
    let sqrt_2pi = (2.0 * std::f64::consts::PI).sqrt();
    let mut density: Option<Expr> = None;
    for c in components {
        let coef = c.weight / (total * c.std_dev * sqrt_2pi);
        let z = (Expr::variable("x") - Expr::constant(c.mean)) / Expr::constant(c.std_dev);
        let term =
            Expr::constant(coef) * (Expr::constant(-0.5) * z.clone() * z).exp();
        density = Some(match density {
            None => term,
            Some(acc) => acc + term,
        });
    }
    GeneratrixBuilder::new(density.expect("nonempty mixture"), SupportSpec::real_line())
        .name("gaussian-mixture")
        .build()
}

/// The three information integrals of a generatrix, with the quadrature
/// error estimates alongside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LsCoefficients {
    pub a2: f64,
    pub b2: f64,
    pub c: f64,
    pub a2_error: f64,
    pub b2_error: f64,
    pub c_error: f64,
}

impl LsCoefficients {
    /// Coefficients with no attached error estimates (for hand-specified
    /// values).
    pub fn new(a2: f64, b2: f64, c: f64) -> LsCoefficients {
        LsCoefficients {
            a2,
            b2,
            c,
            a2_error: 0.0,
            b2_error: 0.0,
            c_error: 0.0,
        }
    }

    /// Determinant of the unscaled coefficient matrix, a^2 b^2 - c^2.
    pub fn det(&self) -> f64 {
        self.a2 * self.b2 - self.c * self.c
    }
}

/// Compute the three information integrals by adaptive quadrature.
///
/// Points where the density has underflowed to zero contribute nothing (the
/// integrands all carry a factor of the density), so they are clamped to
/// zero rather than dividing 0 by 0.
pub fn ls_coefficients(gen: &Generatrix) -> Result<LsCoefficients, LocScaleError> {
    let sample = |x: f64| -> Option<(f64, f64)> {
        let p = gen.density.evaluate(&[("x", x)]).ok()?;
        let dp = gen.derivative.evaluate(&[("x", x)]).ok()?;
        Some((p, dp))
    };
    let run = |f: &dyn Fn(f64, f64, f64) -> f64| -> Result<(f64, f64), LocScaleError> {
        let r = integrate(
            |x| match sample(x) {
                None => f64::NAN,
                Some((p, dp)) => {
                    if p == 0.0 {
                        0.0
                    } else {
                        f(x, p, dp)
                    }
                }
            },
            &gen.support,
            DEFAULT_ABS_TOL,
            DEFAULT_REL_TOL,
        )?;
        Ok((r.value, r.error_estimate))
    };
    let (a2, a2_error) = run(&|_x, p, dp| dp * dp / p)?;
    let (b2, b2_error) = run(&|x, p, dp| {
        let m = p + x * dp;
        m * m / p
    })?;
    let (c, c_error) = run(&|x, p, dp| dp * (p + x * dp) / p)?;
    Ok(LsCoefficients {
        a2,
        b2,
        c,
        a2_error,
        b2_error,
        c_error,
    })
}

/// The metric at scale s: (1/s^2) [[a^2, c], [c, b^2]]. The location
/// coordinate does not appear.
pub fn ls_metric_at(coeffs: &LsCoefficients, scale: f64) -> Result<Metric2, LocScaleError> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(LocScaleError::NonPositiveScale(scale));
    }
    let inv = 1.0 / (scale * scale);
    Ok(Metric2::new(
        coeffs.a2 * inv,
        coeffs.c * inv,
        coeffs.b2 * inv,
    ))
}

/// The full metric field over (location, scale) = (t1, t2), for feeding the
/// general curvature machinery.
pub fn ls_metric_field(coeffs: &LsCoefficients) -> MetricField {
    let t2 = Expr::variable("t2");
    let s2 = t2.clone() * t2;
    MetricField::from_exprs(
        Expr::constant(coeffs.a2) / s2.clone(),
        Expr::constant(coeffs.c) / s2.clone(),
        Expr::constant(coeffs.b2) / s2,
        ["t1", "t2"],
    )
}

/// Closed-form curvature report for a location-scale family.
///
/// The curvature S = -a^2/(a^2 b^2 - c^2) is constant over the family, so
/// no parameter point is needed. A vanishing a^2 (the density carries no
/// location information) is reported as flat-singular; a vanishing
/// determinant with a^2 > 0 is degenerate and carries no curvature value.
pub fn ls_curvature(coeffs: &LsCoefficients) -> CurvatureReport {
    let payload = Payload::LocationScale(*coeffs);
    let pipeline = Pipeline::LocationScaleClosedForm;
    if coeffs.a2 <= A2_SINGULAR_TOL {
        return CurvatureReport::flat_singular(pipeline, payload);
    }
    let det = coeffs.det();
    if det <= DEGENERACY_REL_TOL * coeffs.a2 * coeffs.b2 {
        return CurvatureReport::degenerate(pipeline, payload);
    }
    CurvatureReport::from_curvature(-coeffs.a2 / det, pipeline, payload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Classification;

    fn mass(gen: &Generatrix) -> f64 {
        integrate(
            |x| gen.density().evaluate(&[("x", x)]).unwrap_or(f64::NAN),
            gen.support(),
            1e-12,
            1e-12,
        )
        .unwrap()
        .value
    }

    #[test]
    fn catalog_densities_are_normalized() {
        for name in builtin_names() {
            let gen = builtin(name).unwrap();
            let m = mass(&gen);
            assert!((m - 1.0).abs() <= 1e-8, "{name} integrates to {m}");
            assert_eq!(gen.normalization(), 1.0);
        }
    }

    #[test]
    fn gaussian_coefficients_and_curvature() {
        let coeffs = ls_coefficients(&gaussian()).unwrap();
        assert!((coeffs.a2 - 2.0).abs() <= 1e-9, "a2 = {}", coeffs.a2);
        assert!((coeffs.b2 - 2.0).abs() <= 1e-9, "b2 = {}", coeffs.b2);
        assert!(coeffs.c.abs() <= 1e-9, "c = {}", coeffs.c);
        let report = ls_curvature(&coeffs);
        let s = report.curvature.unwrap();
        assert!((s - (-0.5)).abs() <= 1e-8);
        assert_eq!(report.classification, Classification::Hyperbolic);
        assert_eq!(report.pipeline, Pipeline::LocationScaleClosedForm);
        assert!(matches!(report.payload, Payload::LocationScale(_)));
    }

    #[test]
    fn heavy_tailed_catalog_values() {
        let coeffs = ls_coefficients(&cauchy()).unwrap();
        assert!((coeffs.a2 - 0.5).abs() <= 1e-9);
        assert!((coeffs.b2 - 0.5).abs() <= 1e-9);
        let s = ls_curvature(&coeffs).curvature.unwrap();
        assert!((s - (-2.0)).abs() <= 1e-7);
    }

    #[test]
    fn one_sided_support_catalog_values() {
        let coeffs = ls_coefficients(&exponential()).unwrap();
        assert!((coeffs.a2 - 1.0).abs() <= 1e-9);
        assert!((coeffs.b2 - 1.0).abs() <= 1e-9);
        assert!(coeffs.c.abs() <= 1e-9);
        let s = ls_curvature(&coeffs).curvature.unwrap();
        assert!((s - (-1.0)).abs() <= 1e-8);
    }

    #[test]
    fn kinked_density_catalog_values() {
        let coeffs = ls_coefficients(&laplace()).unwrap();
        assert!((coeffs.a2 - 1.0).abs() <= 1e-9, "a2 = {}", coeffs.a2);
        assert!((coeffs.b2 - 1.0).abs() <= 1e-9, "b2 = {}", coeffs.b2);
        let s = ls_curvature(&coeffs).curvature.unwrap();
        assert!((s - (-1.0)).abs() <= 1e-8);
    }

    #[test]
    fn even_densities_have_vanishing_cross_term() {
        let mix = gaussian_mixture(&[
            GaussianComponent {
                weight: 0.5,
                mean: -1.0,
                std_dev: 1.0,
            },
            GaussianComponent {
                weight: 0.5,
                mean: 1.0,
                std_dev: 1.0,
            },
        ])
        .unwrap();
        for gen in [gaussian(), cauchy(), laplace(), mix] {
            let coeffs = ls_coefficients(&gen).unwrap();
            assert!(
                coeffs.c.abs() <= 1e-7,
                "{}: c = {}",
                gen.name(),
                coeffs.c
            );
        }
    }

    #[test]
    fn metric_at_a_point() {
        let coeffs = LsCoefficients::new(2.0, 2.0, 0.0);
        let g = ls_metric_at(&coeffs, 2.0).unwrap();
        assert_eq!(g.g11, 0.5);
        assert_eq!(g.g12, 0.0);
        assert_eq!(g.g22, 0.5);
        assert!(matches!(
            ls_metric_at(&coeffs, 0.0),
            Err(LocScaleError::NonPositiveScale(_))
        ));
    }

    #[test]
    fn coefficient_metric_curvature_is_constant_and_matches_closed_form() {
        for (a2, b2, c) in [(2.0, 2.0, 0.0), (1.0, 1.0, 0.0), (2.0, 3.0, 0.5)] {
            let coeffs = LsCoefficients::new(a2, b2, c);
            let expected = -a2 / (a2 * b2 - c * c);
            let field = ls_metric_field(&coeffs);
            for i in 0..5 {
                for j in 0..5 {
                    let l = -2.0 + i as f64;
                    let s = 0.5 + 0.75 * j as f64;
                    let got = field.scalar_curvature(l, s).unwrap();
                    assert!(
                        (got - expected).abs() <= 1e-6 * (1.0 + expected.abs()),
                        "(a2,b2,c)=({a2},{b2},{c}) at ({l},{s}): {got} vs {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn rank_one_family_is_degenerate() {
        // p(x) = 1/((3-x) log 2) on (1,2) has its scale score proportional
        // to its location score, so the metric drops rank.
        let density: Expr = "1/(3-x)".parse().unwrap();
        let gen = GeneratrixBuilder::new(density, SupportSpec::interval(1.0, 2.0).unwrap())
            .name("truncated-reciprocal")
            .auto_normalize()
            .build()
            .unwrap();
        assert!((gen.normalization() - std::f64::consts::LN_2).abs() <= 1e-10);
        let coeffs = ls_coefficients(&gen).unwrap();
        let expected_a2 = 0.375 / std::f64::consts::LN_2;
        assert!((coeffs.a2 - expected_a2).abs() <= 1e-8, "a2 = {}", coeffs.a2);
        assert!((coeffs.b2 - 9.0 * coeffs.a2).abs() <= 1e-8);
        assert!((coeffs.c - 3.0 * coeffs.a2).abs() <= 1e-8);
        let report = ls_curvature(&coeffs);
        assert_eq!(report.classification, Classification::Degenerate);
        assert_eq!(report.curvature, None);
    }

    #[test]
    fn constant_density_is_flat_singular() {
        let gen = GeneratrixBuilder::new(
            Expr::constant(1.0),
            SupportSpec::interval(-0.5, 0.5).unwrap(),
        )
        .build()
        .unwrap();
        let coeffs = ls_coefficients(&gen).unwrap();
        assert!(coeffs.a2.abs() <= A2_SINGULAR_TOL);
        let report = ls_curvature(&coeffs);
        assert_eq!(report.classification, Classification::FlatSingular);
        assert_eq!(report.curvature, Some(0.0));
    }

    #[test]
    fn unnormalized_density_is_rejected_without_opt_in() {
        let density: Expr = "2*exp(-x)".parse().unwrap();
        let support = SupportSpec::interval(0.0, f64::INFINITY).unwrap();
        match GeneratrixBuilder::new(density, support).build() {
            Err(LocScaleError::NotNormalized { integral }) => {
                assert!((integral - 2.0).abs() <= 1e-8)
            }
            other => panic!("expected normalization rejection, got {other:?}"),
        }
    }

    #[test]
    fn negative_density_is_rejected() {
        let density: Expr = "x".parse().unwrap();
        let err = GeneratrixBuilder::new(density, SupportSpec::interval(-1.0, 1.0).unwrap())
            .build()
            .unwrap_err();
        match err {
            LocScaleError::NegativeDensity { x, value } => {
                assert!(x < 0.0);
                assert!(value < 0.0);
            }
            other => panic!("expected negativity rejection, got {other:?}"),
        }
    }

    #[test]
    fn mixture_validation() {
        assert!(matches!(
            gaussian_mixture(&[]),
            Err(LocScaleError::InvalidMixture(_))
        ));
        assert!(matches!(
            gaussian_mixture(&[GaussianComponent {
                weight: -1.0,
                mean: 0.0,
                std_dev: 1.0
            }]),
            Err(LocScaleError::InvalidMixture(_))
        ));
        assert!(matches!(
            gaussian_mixture(&[GaussianComponent {
                weight: 1.0,
                mean: 0.0,
                std_dev: 0.0
            }]),
            Err(LocScaleError::InvalidMixture(_))
        ));
        // Weights need not sum to one; they are rescaled.
        let gen = gaussian_mixture(&[
            GaussianComponent {
                weight: 3.0,
                mean: 0.0,
                std_dev: 2.0,
            },
            GaussianComponent {
                weight: 1.0,
                mean: 4.0,
                std_dev: 0.5,
            },
        ])
        .unwrap();
        assert!((mass(&gen) - 1.0).abs() <= 1e-8);
    }

    #[test]
    fn closed_form_matches_general_machinery_for_a_mixture() {
        let gen = gaussian_mixture(&[
            GaussianComponent {
                weight: 0.7,
                mean: -0.5,
                std_dev: 1.2,
            },
            GaussianComponent {
                weight: 0.3,
                mean: 1.5,
                std_dev: 0.6,
            },
        ])
        .unwrap();
        let coeffs = ls_coefficients(&gen).unwrap();
        assert!(coeffs.det() > 0.0);
        let closed = ls_curvature(&coeffs).curvature.unwrap();
        assert!(closed < 0.0);
        let field = ls_metric_field(&coeffs);
        let general = field.scalar_curvature(0.3, 1.7).unwrap();
        assert!(
            (closed - general).abs() <= 1e-6 * (1.0 + closed.abs()),
            "closed {closed} vs general {general}"
        );
    }
}
