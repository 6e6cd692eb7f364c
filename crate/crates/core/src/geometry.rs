//! Riemannian machinery for two-parameter metrics: Christoffel symbols and
//! the scalar curvature, computed either from closed-form component
//! expressions (differentiated symbolically) or from black-box component
//! functions (differentiated by central differences).
//!
//! Curvature here means half the Ricci scalar, which in two dimensions is
//! the Gaussian curvature. The contraction used is
//!
//! ```text
//! Gamma^i_jk = 1/2 g^il (d_k g_lj + d_j g_lk - d_l g_jk)
//! R = g^mn (d_l Gamma^l_mn - d_n Gamma^l_ml
//!           + Gamma^s_mn Gamma^l_ls - Gamma^s_ml Gamma^l_ns)
//! ```
//!
//! with the returned value R/2.

use thiserror::Error;

use crate::expr::{EvalError, Expr};

/// Relative metric-degeneracy threshold: a metric counts as degenerate when
/// |det g| <= this times (|g11*g22| + g12^2). The determinant is the
/// difference of those two products, so its double-precision rounding noise
/// scales with their combined magnitude — not with the Frobenius norm, which
/// overstates the floor by orders of magnitude when the diagonal entries
/// have very different sizes.
pub const DEGENERACY_REL_TOL: f64 = 1e-12;

/// Default scale for finite-difference steps.
pub const DEFAULT_FD_SCALE: f64 = 1e-5;

/// A symmetric 2x2 metric at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric2 {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

impl Metric2 {
    pub fn new(g11: f64, g12: f64, g22: f64) -> Metric2 {
        Metric2 { g11, g12, g22 }
    }

    pub fn det(&self) -> f64 {
        self.g11 * self.g22 - self.g12 * self.g12
    }

    /// Squared Frobenius norm of the full symmetric matrix.
    pub fn norm_sq(&self) -> f64 {
        self.g11 * self.g11 + 2.0 * self.g12 * self.g12 + self.g22 * self.g22
    }

    /// Degeneracy test with a threshold relative to the determinant's own
    /// noise floor, |g11*g22| + g12^2.
    pub fn is_degenerate(&self) -> bool {
        let scale = (self.g11 * self.g22).abs() + self.g12 * self.g12;
        self.det().abs() <= DEGENERACY_REL_TOL * scale
    }

    pub fn is_positive_definite(&self) -> bool {
        self.g11 > 0.0 && self.det() > 0.0
    }

    /// Inverse as a full matrix, or `None` when degenerate.
    pub fn inverse(&self) -> Option<[[f64; 2]; 2]> {
        if self.is_degenerate() {
            return None;
        }
        let d = self.det();
        Some([
            [self.g22 / d, -self.g12 / d],
            [-self.g12 / d, self.g11 / d],
        ])
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        match (i, j) {
            (0, 0) => self.g11,
            (1, 1) => self.g22,
            (0, 1) | (1, 0) => self.g12,
            _ => panic!("metric index out of range: ({i}, {j})"),
        }
    }

    fn all_finite(&self) -> bool {
        self.g11.is_finite() && self.g12.is_finite() && self.g22.is_finite()
    }
}

/// The eight Christoffel symbols of the second kind at one point,
/// symmetric in the lower index pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChristoffelAt {
    symbols: [[[f64; 2]; 2]; 2],
}

impl ChristoffelAt {
    /// Gamma^i_jk with zero-based indices.
    pub fn gamma(&self, i: usize, j: usize, k: usize) -> f64 {
        self.symbols[i][j][k]
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("metric is degenerate at ({t1}, {t2}): det = {det:e}")]
    DegenerateMetric { t1: f64, t2: f64, det: f64 },
    #[error("metric evaluation failed at ({t1}, {t2}): {source}")]
    Evaluation {
        t1: f64,
        t2: f64,
        #[source]
        source: EvalError,
    },
    #[error("metric produced a non-finite value at ({t1}, {t2})")]
    NonFinite { t1: f64, t2: f64 },
}

/// How finite-difference steps scale with the coordinate they perturb.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepRule {
    /// h = scale * (1 + |theta|): safe default away from zero.
    Absolute { scale: f64 },
    /// h = scale * |theta| (or scale itself at zero): keeps the relative
    /// perturbation fixed, which matters when coordinates span orders of
    /// magnitude.
    Relative { scale: f64 },
}

impl StepRule {
    fn step(self, theta: f64) -> f64 {
        match self {
            StepRule::Absolute { scale } => scale * (1.0 + theta.abs()),
            StepRule::Relative { scale } => {
                if theta == 0.0 {
                    scale
                } else {
                    scale * theta.abs()
                }
            }
        }
    }
}

impl Default for StepRule {
    fn default() -> Self {
        StepRule::Absolute {
            scale: DEFAULT_FD_SCALE,
        }
    }
}

/// Symbolic metric with every derived expression built once, up front.
struct SymbolicMetric {
    vars: [String; 2],
    g: [[Expr; 2]; 2],
    /// gamma[i][j][k] = Gamma^i_jk as a closed-form expression
    gamma: [[[Expr; 2]; 2]; 2],
    /// dgamma[l][i][j][k] = d Gamma^i_jk / d theta_l
    dgamma: [[[[Expr; 2]; 2]; 2]; 2],
}

type ComponentsFn = dyn Fn(f64, f64) -> Metric2 + Send + Sync;
type GradientFn = dyn Fn(f64, f64) -> [Metric2; 2] + Send + Sync;

enum Repr {
    Symbolic(Box<SymbolicMetric>),
    Numeric {
        components: Box<ComponentsFn>,
        gradient: Option<Box<GradientFn>>,
    },
}

/// A field of 2x2 metrics over a two-parameter chart.
pub struct MetricField {
    repr: Repr,
    step: StepRule,
}

impl SymbolicMetric {
    fn build(g11: Expr, g12: Expr, g22: Expr, vars: [&str; 2]) -> SymbolicMetric {
        let half = || Expr::constant(0.5);
        let g = [[g11.clone(), g12.clone()], [g12, g22]];
        let det = g[0][0].clone() * g[1][1].clone() - g[0][1].clone() * g[1][0].clone();
        // Adjugate over determinant; shared det subtree is cloned per entry.
        let ginv = [
            [
                g[1][1].clone() / det.clone(),
                -(g[0][1].clone()) / det.clone(),
            ],
            [
                -(g[1][0].clone()) / det.clone(),
                g[0][0].clone() / det.clone(),
            ],
        ];
        let dg: Vec<Vec<Vec<Expr>>> = (0..2)
            .map(|l| {
                (0..2)
                    .map(|j| (0..2).map(|k| g[j][k].differentiate(vars[l])).collect())
                    .collect()
            })
            .collect();
        let gamma_vec: Vec<Vec<Vec<Expr>>> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| {
                        (0..2)
                            .map(|k| {
                                let mut sum: Option<Expr> = None;
                                for l in 0..2 {
                                    let bracket = dg[k][l][j].clone() + dg[j][l][k].clone()
                                        - dg[l][j][k].clone();
                                    let term = ginv[i][l].clone() * bracket;
                                    sum = Some(match sum {
                                        None => term,
                                        Some(acc) => acc + term,
                                    });
                                }
                                half() * sum.expect("two summands")
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let dgamma_vec: Vec<Vec<Vec<Vec<Expr>>>> = (0..2)
            .map(|l| {
                (0..2)
                    .map(|i| {
                        (0..2)
                            .map(|j| {
                                (0..2)
                                    .map(|k| gamma_vec[i][j][k].differentiate(vars[l]))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let expr3 = |v: &Vec<Vec<Vec<Expr>>>| -> [[[Expr; 2]; 2]; 2] {
            std::array::from_fn(|a| {
                std::array::from_fn(|b| std::array::from_fn(|c| v[a][b][c].clone()))
            })
        };
        SymbolicMetric {
            vars: [vars[0].to_string(), vars[1].to_string()],
            g: std::array::from_fn(|j| std::array::from_fn(|k| g[j][k].clone())),
            gamma: expr3(&gamma_vec),
            dgamma: std::array::from_fn(|l| {
                std::array::from_fn(|i| {
                    std::array::from_fn(|j| std::array::from_fn(|k| dgamma_vec[l][i][j][k].clone()))
                })
            }),
        }
    }

    fn eval(&self, e: &Expr, t1: f64, t2: f64) -> Result<f64, GeomError> {
        let bindings = [(self.vars[0].as_str(), t1), (self.vars[1].as_str(), t2)];
        let v = e
            .evaluate(&bindings)
            .map_err(|source| GeomError::Evaluation { t1, t2, source })?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(GeomError::NonFinite { t1, t2 })
        }
    }
}

impl MetricField {
    /// Metric from closed-form component expressions in the two named
    /// coordinates. All derivatives are taken symbolically.
    pub fn from_exprs(g11: Expr, g12: Expr, g22: Expr, vars: [&str; 2]) -> MetricField {
        MetricField {
            repr: Repr::Symbolic(Box::new(SymbolicMetric::build(g11, g12, g22, vars))),
            step: StepRule::default(),
        }
    }

    /// Metric from a black-box component function; derivatives fall back to
    /// central differences. Non-finite entries signal evaluation failure.
    pub fn from_fn<F>(components: F) -> MetricField
    where
        F: Fn(f64, f64) -> Metric2 + Send + Sync + 'static,
    {
        MetricField {
            repr: Repr::Numeric {
                components: Box::new(components),
                gradient: None,
            },
            step: StepRule::default(),
        }
    }

    /// Black-box components with an analytic first derivative: the gradient
    /// callback returns [d g / d theta_1, d g / d theta_2]. Only the second
    /// derivative level is then differenced.
    pub fn from_fn_with_gradient<F, G>(components: F, gradient: G) -> MetricField
    where
        F: Fn(f64, f64) -> Metric2 + Send + Sync + 'static,
        G: Fn(f64, f64) -> [Metric2; 2] + Send + Sync + 'static,
    {
        MetricField {
            repr: Repr::Numeric {
                components: Box::new(components),
                gradient: Some(Box::new(gradient)),
            },
            step: StepRule::default(),
        }
    }

    /// Override the finite-difference step rule.
    pub fn with_step_rule(mut self, step: StepRule) -> MetricField {
        self.step = step;
        self
    }

    /// The metric at a point, validated finite.
    pub fn components(&self, t1: f64, t2: f64) -> Result<Metric2, GeomError> {
        match &self.repr {
            Repr::Symbolic(sym) => Ok(Metric2 {
                g11: sym.eval(&sym.g[0][0], t1, t2)?,
                g12: sym.eval(&sym.g[0][1], t1, t2)?,
                g22: sym.eval(&sym.g[1][1], t1, t2)?,
            }),
            Repr::Numeric { components, .. } => {
                let m = components(t1, t2);
                if m.all_finite() {
                    Ok(m)
                } else {
                    Err(GeomError::NonFinite { t1, t2 })
                }
            }
        }
    }

    /// First derivatives of the metric: `[d g/d theta_1, d g/d theta_2]`.
    pub fn gradient(&self, t1: f64, t2: f64) -> Result<[Metric2; 2], GeomError> {
        match &self.repr {
            Repr::Symbolic(sym) => {
                let mut out = [Metric2::new(0.0, 0.0, 0.0); 2];
                for l in 0..2 {
                    let d11 = sym.g[0][0].differentiate(&sym.vars[l]);
                    let d12 = sym.g[0][1].differentiate(&sym.vars[l]);
                    let d22 = sym.g[1][1].differentiate(&sym.vars[l]);
                    out[l] = Metric2 {
                        g11: sym.eval(&d11, t1, t2)?,
                        g12: sym.eval(&d12, t1, t2)?,
                        g22: sym.eval(&d22, t1, t2)?,
                    };
                }
                Ok(out)
            }
            Repr::Numeric {
                gradient: Some(grad),
                ..
            } => {
                let g = grad(t1, t2);
                if g[0].all_finite() && g[1].all_finite() {
                    Ok(g)
                } else {
                    Err(GeomError::NonFinite { t1, t2 })
                }
            }
            Repr::Numeric { .. } => {
                let mut out = [Metric2::new(0.0, 0.0, 0.0); 2];
                for l in 0..2 {
                    out[l] = self.central_difference(l, t1, t2, |a, b| self.components(a, b))?;
                }
                Ok(out)
            }
        }
    }

    fn central_difference<F>(
        &self,
        l: usize,
        t1: f64,
        t2: f64,
        f: F,
    ) -> Result<Metric2, GeomError>
    where
        F: Fn(f64, f64) -> Result<Metric2, GeomError>,
    {
        let theta = [t1, t2];
        let h = self.step.step(theta[l]);
        let mut up = theta;
        let mut dn = theta;
        up[l] += h;
        dn[l] -= h;
        let mu = f(up[0], up[1])?;
        let md = f(dn[0], dn[1])?;
        let inv = 1.0 / (2.0 * h);
        Ok(Metric2 {
            g11: (mu.g11 - md.g11) * inv,
            g12: (mu.g12 - md.g12) * inv,
            g22: (mu.g22 - md.g22) * inv,
        })
    }

    /// Christoffel symbols of the second kind at a point.
    pub fn christoffel(&self, t1: f64, t2: f64) -> Result<ChristoffelAt, GeomError> {
        let g = self.components(t1, t2)?;
        let Some(ginv) = g.inverse() else {
            return Err(GeomError::DegenerateMetric {
                t1,
                t2,
                det: g.det(),
            });
        };
        match &self.repr {
            Repr::Symbolic(sym) => {
                let mut symbols = [[[0.0; 2]; 2]; 2];
                for (i, plane) in symbols.iter_mut().enumerate() {
                    for (j, row) in plane.iter_mut().enumerate() {
                        for (k, slot) in row.iter_mut().enumerate() {
                            *slot = sym.eval(&sym.gamma[i][j][k], t1, t2)?;
                        }
                    }
                }
                Ok(ChristoffelAt { symbols })
            }
            Repr::Numeric { .. } => {
                let dg = self.gradient(t1, t2)?;
                Ok(christoffel_from_gradient(&ginv, &dg))
            }
        }
    }

    /// d Gamma / d theta_l for both l, as raw symbol arrays.
    fn christoffel_gradient(&self, t1: f64, t2: f64) -> Result<[[[[f64; 2]; 2]; 2]; 2], GeomError> {
        match &self.repr {
            Repr::Symbolic(sym) => {
                let mut out = [[[[0.0; 2]; 2]; 2]; 2];
                for (l, block) in out.iter_mut().enumerate() {
                    for (i, plane) in block.iter_mut().enumerate() {
                        for (j, row) in plane.iter_mut().enumerate() {
                            for (k, slot) in row.iter_mut().enumerate() {
                                *slot = sym.eval(&sym.dgamma[l][i][j][k], t1, t2)?;
                            }
                        }
                    }
                }
                Ok(out)
            }
            Repr::Numeric { .. } => {
                let theta = [t1, t2];
                let mut out = [[[[0.0; 2]; 2]; 2]; 2];
                for l in 0..2 {
                    let h = self.step.step(theta[l]);
                    let mut up = theta;
                    let mut dn = theta;
                    up[l] += h;
                    dn[l] -= h;
                    let cu = self.christoffel(up[0], up[1])?;
                    let cd = self.christoffel(dn[0], dn[1])?;
                    let inv = 1.0 / (2.0 * h);
                    for i in 0..2 {
                        for j in 0..2 {
                            for k in 0..2 {
                                out[l][i][j][k] =
                                    (cu.gamma(i, j, k) - cd.gamma(i, j, k)) * inv;
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// The scalar curvature (half the Ricci scalar) at a point.
    pub fn scalar_curvature(&self, t1: f64, t2: f64) -> Result<f64, GeomError> {
        let g = self.components(t1, t2)?;
        let Some(ginv) = g.inverse() else {
            return Err(GeomError::DegenerateMetric {
                t1,
                t2,
                det: g.det(),
            });
        };
        let gamma = self.christoffel(t1, t2)?;
        let dgamma = self.christoffel_gradient(t1, t2)?;

        let mut ricci_scalar = 0.0;
        for m in 0..2 {
            for n in 0..2 {
                let mut term = 0.0;
                for l in 0..2 {
                    // d_l Gamma^l_mn - d_n Gamma^l_ml
                    term += dgamma[l][l][m][n] - dgamma[n][l][m][l];
                    for s in 0..2 {
                        term += gamma.gamma(s, m, n) * gamma.gamma(l, l, s)
                            - gamma.gamma(s, m, l) * gamma.gamma(l, n, s);
                    }
                }
                ricci_scalar += ginv[m][n] * term;
            }
        }
        let s = 0.5 * ricci_scalar;
        if s.is_finite() {
            Ok(s)
        } else {
            Err(GeomError::NonFinite { t1, t2 })
        }
    }
}

fn christoffel_from_gradient(ginv: &[[f64; 2]; 2], dg: &[Metric2; 2]) -> ChristoffelAt {
    let mut symbols = [[[0.0; 2]; 2]; 2];
    for (i, plane) in symbols.iter_mut().enumerate() {
        for (j, row) in plane.iter_mut().enumerate() {
            for (k, slot) in row.iter_mut().enumerate() {
                let mut sum = 0.0;
                for l in 0..2 {
                    let bracket = dg[k].entry(l, j) + dg[j].entry(l, k) - dg[l].entry(j, k);
                    sum += ginv[i][l] * bracket;
                }
                *slot = 0.5 * sum;
            }
        }
    }
    ChristoffelAt { symbols }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poincare_like(k: f64) -> MetricField {
        let t2 = Expr::variable("t2");
        let conf = Expr::constant(k) / (t2.clone() * t2);
        MetricField::from_exprs(conf.clone(), Expr::constant(0.0), conf, ["t1", "t2"])
    }

    fn gaussian_symbolic() -> MetricField {
        // Coordinates (mean, variance): diag(1/v, 1/(2 v^2)).
        let v = Expr::variable("t2");
        let g11 = Expr::constant(1.0) / v.clone();
        let g22 = Expr::constant(0.5) / (v.clone() * v);
        MetricField::from_exprs(g11, Expr::constant(0.0), g22, ["t1", "t2"])
    }

    #[test]
    fn flat_metric_has_zero_symbols_and_curvature() {
        let field = MetricField::from_exprs(
            Expr::constant(1.0),
            Expr::constant(0.0),
            Expr::constant(1.0),
            ["t1", "t2"],
        );
        let c = field.christoffel(0.3, -1.2).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert_eq!(c.gamma(i, j, k), 0.0);
                }
            }
        }
        assert_eq!(field.scalar_curvature(0.3, -1.2).unwrap(), 0.0);
    }

    #[test]
    fn conformal_half_plane_christoffel_symbols() {
        let field = poincare_like(1.0);
        let c = field.christoffel(0.0, 1.0).unwrap();
        assert!((c.gamma(0, 0, 1) - (-1.0)).abs() < 1e-12);
        assert!((c.gamma(0, 1, 0) - (-1.0)).abs() < 1e-12);
        assert!((c.gamma(1, 0, 0) - 1.0).abs() < 1e-12);
        assert!((c.gamma(1, 1, 1) - (-1.0)).abs() < 1e-12);
        assert!(c.gamma(0, 0, 0).abs() < 1e-12);
        assert!(c.gamma(0, 1, 1).abs() < 1e-12);
        assert!(c.gamma(1, 0, 1).abs() < 1e-12);
    }

    #[test]
    fn conformal_half_plane_curvature_is_minus_one_over_k() {
        for k in [0.5, 1.0, 2.0, 3.0] {
            let field = poincare_like(k);
            for (t1, t2) in [(0.0, 1.0), (2.0, 0.5), (-1.0, 4.0)] {
                let s = field.scalar_curvature(t1, t2).unwrap();
                assert!(
                    (s - (-1.0 / k)).abs() < 1e-10,
                    "k={k} at ({t1},{t2}): S={s}"
                );
            }
        }
    }

    #[test]
    fn gaussian_metric_curvature_symbolic() {
        let field = gaussian_symbolic();
        for (m, v) in [(0.0, 1.0), (3.0, 0.25), (-2.0, 10.0)] {
            let s = field.scalar_curvature(m, v).unwrap();
            assert!((s - (-0.5)).abs() < 1e-10, "at ({m},{v}): S={s}");
        }
    }

    #[test]
    fn gaussian_metric_curvature_finite_difference() {
        let field = MetricField::from_fn(|_m, v| Metric2::new(1.0 / v, 0.0, 0.5 / (v * v)));
        for (m, v) in [(0.0, 1.0), (3.0, 0.25), (-2.0, 10.0)] {
            let s = field.scalar_curvature(m, v).unwrap();
            assert!((s - (-0.5)).abs() < 1e-6, "at ({m},{v}): S={s}");
        }
    }

    #[test]
    fn gaussian_christoffel_matches_hand_derivation() {
        // Nonzero symbols for diag(1/v, 1/(2v^2)):
        // Gamma^1_12 = -1/(2v), Gamma^2_11 = 1, Gamma^2_22 = -1/v.
        let field = gaussian_symbolic();
        for v in [0.5, 1.0, 2.0] {
            let c = field.christoffel(0.7, v).unwrap();
            assert!((c.gamma(0, 0, 1) - (-0.5 / v)).abs() < 1e-12);
            assert!((c.gamma(1, 0, 0) - 1.0).abs() < 1e-12);
            assert!((c.gamma(1, 1, 1) - (-1.0 / v)).abs() < 1e-12);
            assert!(c.gamma(0, 0, 0).abs() < 1e-12);
            assert!(c.gamma(0, 1, 1).abs() < 1e-12);
            assert!(c.gamma(1, 0, 1).abs() < 1e-12);
        }
    }

    #[test]
    fn finite_difference_gradient_agrees_with_symbolic() {
        let sym = gaussian_symbolic();
        let num = MetricField::from_fn(|_m, v| Metric2::new(1.0 / v, 0.0, 0.5 / (v * v)));
        for (m, v) in [(0.0, 1.0), (1.5, 2.0)] {
            let a = sym.gradient(m, v).unwrap();
            let b = num.gradient(m, v).unwrap();
            for l in 0..2 {
                for (x, y) in [
                    (a[l].g11, b[l].g11),
                    (a[l].g12, b[l].g12),
                    (a[l].g22, b[l].g22),
                ] {
                    assert!(
                        (x - y).abs() <= 1e-5 * (1.0 + x.abs()),
                        "gradient mismatch: {x} vs {y}"
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_metric_is_an_error() {
        let field = MetricField::from_fn(|_a, _b| Metric2::new(1.0, 1.0, 1.0));
        match field.scalar_curvature(0.0, 0.0) {
            Err(GeomError::DegenerateMetric { det, .. }) => assert_eq!(det, 0.0),
            other => panic!("expected degenerate metric, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_components_are_an_error() {
        let field = MetricField::from_fn(|_a, _b| Metric2::new(f64::NAN, 0.0, 1.0));
        assert!(matches!(
            field.components(0.0, 0.0),
            Err(GeomError::NonFinite { .. })
        ));
    }

    #[test]
    fn symbolic_division_by_zero_surfaces_as_evaluation_error() {
        let t2 = Expr::variable("t2");
        let field = MetricField::from_exprs(
            Expr::constant(1.0) / t2,
            Expr::constant(0.0),
            Expr::constant(1.0),
            ["t1", "t2"],
        );
        assert!(matches!(
            field.components(0.0, 0.0),
            Err(GeomError::Evaluation { .. })
        ));
    }

    #[test]
    fn relative_step_rule_tracks_coordinate_scale() {
        let rule = StepRule::Relative { scale: 1e-5 };
        assert!((rule.step(1e-4) - 1e-9).abs() < 1e-24);
        assert_eq!(rule.step(0.0), 1e-5);
        let abs = StepRule::default();
        assert!((abs.step(1e-4) - 1e-5 * (1.0 + 1e-4)).abs() < 1e-20);
    }

    #[test]
    fn constant_coefficient_metric_is_flat_everywhere() {
        // Any constant positive-definite metric has vanishing curvature.
        let field = MetricField::from_exprs(
            Expr::constant(2.0),
            Expr::constant(0.3),
            Expr::constant(1.5),
            ["t1", "t2"],
        );
        for (a, b) in [(0.0, 0.0), (5.0, -3.0)] {
            assert_eq!(field.scalar_curvature(a, b).unwrap(), 0.0);
        }
    }
}
