//! Information metrics and scalar curvature for two-parameter probability
//! manifolds.
//!
//! Three mutually checking computational routes are provided:
//!
//! * **Location-scale families** ([`locscale`]): the metric and curvature of
//!   a family (1/s) p((x-l)/s) come from three quadrature integrals of the
//!   generatrix density p, giving a curvature that is constant over the
//!   family.
//! * **Exponential families** ([`expfam`]): the metric is the Hessian of the
//!   log-partition function and the curvature follows from a ratio of
//!   determinants built out of second and third partials, all taken
//!   symbolically.
//! * **General metrics** ([`geometry`]): Christoffel symbols and the Ricci
//!   contraction for any 2x2 metric field, symbolic or numeric, used both
//!   directly and as the cross-check for the closed forms above.
//!
//! Supporting pieces: a small symbolic expression engine ([`expr`]), adaptive
//! Gauss–Kronrod quadrature ([`quad`]), trigamma/tetragamma evaluation
//! ([`specfun`]), the two-shape family on the unit interval ([`beta`]), and
//! shared result types ([`report`]).
//!
//! ```
//! use infogeom::locscale::{gaussian, ls_coefficients, ls_curvature};
//!
//! let coeffs = ls_coefficients(&gaussian()).unwrap();
//! let s = ls_curvature(&coeffs).curvature.unwrap();
//! assert!((s - (-0.5)).abs() < 1e-8);
//! ```

pub mod beta;
pub mod expfam;
pub mod expr;
pub mod geometry;
pub mod locscale;
pub mod quad;
pub mod report;
pub mod specfun;

pub use expr::Expr;
pub use geometry::{Metric2, MetricField};
pub use quad::SupportSpec;
pub use report::{Classification, CurvatureReport, Pipeline};
