//! Minimal symbolic expression engine: parse textual formulas, differentiate
//! symbolically, and evaluate numerically.
//!
//! [`Expr`] is an immutable tree over named variables, with the named
//! constants `pi` and `e`. Differentiation follows the usual calculus rules
//! together with the almost-everywhere conventions `d|u|/dx = sign(u)·u'` and
//! `d sign(u)/dx = 0` (and `sign(0) = 0`). There is no rewriting or
//! canonicalization pass; [`Expr::differentiate`] folds constants to keep
//! derivative trees small, but correctness is defined by evaluation, not by
//! shape.
//!
//! Expressions are immutable after construction and safe to share and
//! evaluate from multiple threads.

mod parse;

pub use parse::{parse, ParseError, ParseErrorKind};

use std::fmt;
use std::ops;

use thiserror::Error;

/// Unary operations. `Neg` prints as a prefix `-`; the rest print as
/// function applications.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Exp,
    Log,
    Sqrt,
    Abs,
    Sign,
    Atan,
}

impl UnaryOp {
    /// Function-call name used by the parser and printer (`Neg` has none).
    pub(crate) fn function_name(self) -> Option<&'static str> {
        match self {
            UnaryOp::Neg => None,
            UnaryOp::Exp => Some("exp"),
            UnaryOp::Log => Some("log"),
            UnaryOp::Sqrt => Some("sqrt"),
            UnaryOp::Abs => Some("abs"),
            UnaryOp::Sign => Some("sign"),
            UnaryOp::Atan => Some("atan"),
        }
    }
}

/// Infix binary operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

/// Built-in named constants recognized by the parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConst {
    Pi,
    E,
}

impl NamedConst {
    pub fn value(self) -> f64 {
        match self {
            NamedConst::Pi => std::f64::consts::PI,
            NamedConst::E => std::f64::consts::E,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedConst::Pi => "pi",
            NamedConst::E => "e",
        }
    }
}

/// A symbolic expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// Literal real constant.
    Const(f64),
    /// Named constant (`pi`, `e`).
    Named(NamedConst),
    /// Free variable, bound at evaluation time.
    Var(String),
    Unary(UnaryOp, Box<Expr>),
    Binary(BinaryOp, Box<Expr>, Box<Expr>),
}

/// Evaluation failure: an unbound variable or an operation applied outside
/// its domain. Domain errors carry a rendering of the offending
/// subexpression.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("log of non-positive value {arg} in `{expr}`")]
    LogNonPositive { arg: f64, expr: String },
    #[error("square root of negative value {arg} in `{expr}`")]
    SqrtNegative { arg: f64, expr: String },
    #[error("division by zero in `{expr}`")]
    DivisionByZero { expr: String },
    #[error("cannot raise {base} to power {exponent} in `{expr}`")]
    PowDomain { base: f64, exponent: f64, expr: String },
}

fn sign(x: f64) -> f64 {
    if x.is_nan() {
        x
    } else if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// `base^exponent` with the conventions used throughout this crate: integer
/// exponents work for any base (except `0^negative`), non-integer exponents
/// require a non-negative base (and a positive one when the exponent is
/// negative).
fn pow_value(base: f64, exponent: f64) -> Option<f64> {
    if base == 0.0 && exponent < 0.0 {
        return None;
    }
    if base < 0.0 && exponent.fract() != 0.0 {
        return None;
    }
    Some(base.powf(exponent))
}

impl Expr {
    pub fn constant(c: f64) -> Expr {
        Expr::Const(c)
    }

    pub fn variable(name: impl Into<String>) -> Expr {
        Expr::Var(name.into())
    }

    pub fn pi() -> Expr {
        Expr::Named(NamedConst::Pi)
    }

    pub fn euler() -> Expr {
        Expr::Named(NamedConst::E)
    }

    pub fn exp(self) -> Expr {
        Expr::Unary(UnaryOp::Exp, Box::new(self))
    }

    pub fn log(self) -> Expr {
        Expr::Unary(UnaryOp::Log, Box::new(self))
    }

    pub fn sqrt(self) -> Expr {
        Expr::Unary(UnaryOp::Sqrt, Box::new(self))
    }

    pub fn abs(self) -> Expr {
        Expr::Unary(UnaryOp::Abs, Box::new(self))
    }

    pub fn sign(self) -> Expr {
        Expr::Unary(UnaryOp::Sign, Box::new(self))
    }

    pub fn atan(self) -> Expr {
        Expr::Unary(UnaryOp::Atan, Box::new(self))
    }

    pub fn pow(self, exponent: Expr) -> Expr {
        Expr::Binary(BinaryOp::Pow, Box::new(self), Box::new(exponent))
    }

    /// Evaluate at a point. `bindings` maps variable names to values; a
    /// missing binding or a domain violation is an error naming the
    /// offending variable or subexpression.
    pub fn evaluate(&self, bindings: &[(&str, f64)]) -> Result<f64, EvalError> {
        match self {
            Expr::Const(c) => Ok(*c),
            Expr::Named(n) => Ok(n.value()),
            Expr::Var(name) => bindings
                .iter()
                .find(|(k, _)| k == name)
                .map(|(_, v)| *v)
                .ok_or_else(|| EvalError::UnboundVariable(name.clone())),
            Expr::Unary(op, a) => {
                let x = a.evaluate(bindings)?;
                match op {
                    UnaryOp::Neg => Ok(-x),
                    UnaryOp::Exp => Ok(x.exp()),
                    UnaryOp::Log => {
                        if x > 0.0 {
                            Ok(x.ln())
                        } else {
                            Err(EvalError::LogNonPositive {
                                arg: x,
                                expr: self.to_string(),
                            })
                        }
                    }
                    UnaryOp::Sqrt => {
                        if x >= 0.0 {
                            Ok(x.sqrt())
                        } else {
                            Err(EvalError::SqrtNegative {
                                arg: x,
                                expr: self.to_string(),
                            })
                        }
                    }
                    UnaryOp::Abs => Ok(x.abs()),
                    UnaryOp::Sign => Ok(sign(x)),
                    UnaryOp::Atan => Ok(x.atan()),
                }
            }
            Expr::Binary(op, a, b) => {
                let x = a.evaluate(bindings)?;
                let y = b.evaluate(bindings)?;
                match op {
                    BinaryOp::Add => Ok(x + y),
                    BinaryOp::Sub => Ok(x - y),
                    BinaryOp::Mul => Ok(x * y),
                    BinaryOp::Div => {
                        if y == 0.0 {
                            Err(EvalError::DivisionByZero {
                                expr: self.to_string(),
                            })
                        } else {
                            Ok(x / y)
                        }
                    }
                    BinaryOp::Pow => pow_value(x, y).ok_or_else(|| EvalError::PowDomain {
                        base: x,
                        exponent: y,
                        expr: self.to_string(),
                    }),
                }
            }
        }
    }

    /// Symbolic derivative with respect to `var`. Total: every expression has
    /// a derivative tree, valid wherever the expression itself is
    /// differentiable.
    pub fn differentiate(&self, var: &str) -> Expr {
        match self {
            Expr::Const(_) | Expr::Named(_) => Expr::Const(0.0),
            Expr::Var(name) => Expr::Const(if name == var { 1.0 } else { 0.0 }),
            Expr::Unary(op, a) => {
                let da = a.differentiate(var);
                match op {
                    UnaryOp::Neg => neg_s(da),
                    UnaryOp::Exp => mul_s(self.clone(), da),
                    UnaryOp::Log => div_s(da, (**a).clone()),
                    UnaryOp::Sqrt => div_s(da, mul_s(Expr::Const(2.0), self.clone())),
                    UnaryOp::Abs => mul_s(Expr::Unary(UnaryOp::Sign, a.clone()), da),
                    UnaryOp::Sign => Expr::Const(0.0),
                    UnaryOp::Atan => div_s(
                        da,
                        add_s(
                            Expr::Const(1.0),
                            mul_s((**a).clone(), (**a).clone()),
                        ),
                    ),
                }
            }
            Expr::Binary(op, a, b) => match op {
                BinaryOp::Add => add_s(a.differentiate(var), b.differentiate(var)),
                BinaryOp::Sub => sub_s(a.differentiate(var), b.differentiate(var)),
                BinaryOp::Mul => add_s(
                    mul_s(a.differentiate(var), (**b).clone()),
                    mul_s((**a).clone(), b.differentiate(var)),
                ),
                BinaryOp::Div => div_s(
                    sub_s(
                        mul_s(a.differentiate(var), (**b).clone()),
                        mul_s((**a).clone(), b.differentiate(var)),
                    ),
                    pow_s((**b).clone(), Expr::Const(2.0)),
                ),
                BinaryOp::Pow => {
                    let da = a.differentiate(var);
                    if let Expr::Const(c) = **b {
                        // d(u^c) = c·u^(c-1)·u'
                        mul_s(
                            mul_s(Expr::Const(c), pow_s((**a).clone(), Expr::Const(c - 1.0))),
                            da,
                        )
                    } else {
                        // d(u^v) = u^v·(v'·log u + v·u'/u)
                        let db = b.differentiate(var);
                        mul_s(
                            self.clone(),
                            add_s(
                                mul_s(db, Expr::Unary(UnaryOp::Log, a.clone())),
                                div_s(mul_s((**b).clone(), da), (**a).clone()),
                            ),
                        )
                    }
                }
            },
        }
    }
}

fn is_const(e: &Expr, v: f64) -> bool {
    matches!(e, Expr::Const(c) if *c == v)
}

// Folding constructors used by `differentiate`. They drop additive zeros and
// multiplicative ones and fold constant subtrees when the result is finite;
// folded forms agree with the unfolded ones wherever the latter are defined.

fn add_s(a: Expr, b: Expr) -> Expr {
    if is_const(&a, 0.0) {
        return b;
    }
    if is_const(&b, 0.0) {
        return a;
    }
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        let v = x + y;
        if v.is_finite() {
            return Expr::Const(v);
        }
    }
    Expr::Binary(BinaryOp::Add, Box::new(a), Box::new(b))
}

fn sub_s(a: Expr, b: Expr) -> Expr {
    if is_const(&b, 0.0) {
        return a;
    }
    if is_const(&a, 0.0) {
        return neg_s(b);
    }
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        let v = x - y;
        if v.is_finite() {
            return Expr::Const(v);
        }
    }
    Expr::Binary(BinaryOp::Sub, Box::new(a), Box::new(b))
}

fn mul_s(a: Expr, b: Expr) -> Expr {
    if is_const(&a, 0.0) || is_const(&b, 0.0) {
        return Expr::Const(0.0);
    }
    if is_const(&a, 1.0) {
        return b;
    }
    if is_const(&b, 1.0) {
        return a;
    }
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        let v = x * y;
        if v.is_finite() {
            return Expr::Const(v);
        }
    }
    Expr::Binary(BinaryOp::Mul, Box::new(a), Box::new(b))
}

fn div_s(a: Expr, b: Expr) -> Expr {
    if is_const(&a, 0.0) {
        return Expr::Const(0.0);
    }
    if is_const(&b, 1.0) {
        return a;
    }
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        if *y != 0.0 {
            let v = x / y;
            if v.is_finite() {
                return Expr::Const(v);
            }
        }
    }
    Expr::Binary(BinaryOp::Div, Box::new(a), Box::new(b))
}

fn pow_s(a: Expr, b: Expr) -> Expr {
    if is_const(&b, 1.0) {
        return a;
    }
    if is_const(&b, 0.0) {
        return Expr::Const(1.0);
    }
    if let (Expr::Const(x), Expr::Const(y)) = (&a, &b) {
        if let Some(v) = pow_value(*x, *y) {
            if v.is_finite() {
                return Expr::Const(v);
            }
        }
    }
    Expr::Binary(BinaryOp::Pow, Box::new(a), Box::new(b))
}

fn neg_s(a: Expr) -> Expr {
    match a {
        Expr::Const(c) => Expr::Const(-c),
        Expr::Unary(UnaryOp::Neg, inner) => *inner,
        other => Expr::Unary(UnaryOp::Neg, Box::new(other)),
    }
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Binary(BinaryOp::Add, Box::new(self), Box::new(rhs))
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Binary(BinaryOp::Sub, Box::new(self), Box::new(rhs))
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Binary(BinaryOp::Mul, Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Binary(BinaryOp::Div, Box::new(self), Box::new(rhs))
    }
}

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Unary(UnaryOp::Neg, Box::new(self))
    }
}

// Precedence levels for printing: additive 1, multiplicative 2, unary minus
// 3, power 4. `write_prec` parenthesizes a node whenever the context
// requires a tighter level, chosen so that reparsing the output rebuilds the
// same tree shape (up to `-c` constants reading back as negated positives).
const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;

fn binary_prec(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::Add | BinaryOp::Sub => PREC_ADD,
        BinaryOp::Mul | BinaryOp::Div => PREC_MUL,
        BinaryOp::Pow => PREC_POW,
    }
}

fn binary_symbol(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Add => "+",
        BinaryOp::Sub => "-",
        BinaryOp::Mul => "*",
        BinaryOp::Div => "/",
        BinaryOp::Pow => "^",
    }
}

fn write_prec(e: &Expr, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
    match e {
        Expr::Const(c) => {
            if *c < 0.0 && min_prec > PREC_NEG {
                write!(f, "({c})")
            } else {
                write!(f, "{c}")
            }
        }
        Expr::Named(n) => f.write_str(n.name()),
        Expr::Var(name) => f.write_str(name),
        Expr::Unary(UnaryOp::Neg, a) => {
            let parens = min_prec > PREC_NEG;
            if parens {
                f.write_str("(")?;
            }
            f.write_str("-")?;
            write_prec(a, f, PREC_NEG)?;
            if parens {
                f.write_str(")")?;
            }
            Ok(())
        }
        Expr::Unary(op, a) => {
            // Function application; always unambiguous.
            f.write_str(op.function_name().expect("negation handled above"))?;
            f.write_str("(")?;
            write_prec(a, f, 0)?;
            f.write_str(")")
        }
        Expr::Binary(op, a, b) => {
            let p = binary_prec(*op);
            let parens = min_prec > p;
            if parens {
                f.write_str("(")?;
            }
            // Power is right-associative; everything else associates left.
            // Require one level tighter on the opposite side so the printed
            // form reparses to exactly this tree.
            let (left_min, right_min) = match op {
                BinaryOp::Pow => (p + 1, PREC_NEG),
                _ => (p, p + 1),
            };
            write_prec(a, f, left_min)?;
            f.write_str(binary_symbol(*op))?;
            write_prec(b, f, right_min)?;
            if parens {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> Expr {
        Expr::variable("x")
    }

    fn eval_at(e: &Expr, v: f64) -> f64 {
        e.evaluate(&[("x", v)]).unwrap()
    }

    #[test]
    fn evaluates_gaussian_density_at_zero() {
        let e = parse("exp(-x^2)/sqrt(pi)").unwrap();
        let v = eval_at(&e, 0.0);
        assert!((v - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert!((v - 0.5641895835477563).abs() < 1e-15);
    }

    #[test]
    fn evaluates_cauchy_density_at_zero() {
        let e = parse("1/(pi*(1+x^2))").unwrap();
        let v = eval_at(&e, 0.0);
        assert!((v - std::f64::consts::FRAC_1_PI).abs() < 1e-15);
    }

    #[test]
    fn log_of_zero_is_a_domain_error() {
        let e = parse("log(x)").unwrap();
        let err = e.evaluate(&[("x", 0.0)]).unwrap_err();
        assert!(matches!(err, EvalError::LogNonPositive { arg, .. } if arg == 0.0));
    }

    #[test]
    fn unbound_variable_is_reported_by_name() {
        let e = parse("x+y").unwrap();
        let err = e.evaluate(&[("x", 1.0)]).unwrap_err();
        assert_eq!(err, EvalError::UnboundVariable("y".into()));
    }

    #[test]
    fn division_by_zero_names_the_subexpression() {
        let e = parse("1/(x-1)").unwrap();
        let err = e.evaluate(&[("x", 1.0)]).unwrap_err();
        match err {
            EvalError::DivisionByZero { expr } => assert_eq!(expr, "1/(x-1)"),
            other => panic!("expected division error, got {other:?}"),
        }
    }

    #[test]
    fn pow_follows_integer_and_fractional_conventions() {
        let p = parse("x^3").unwrap();
        assert_eq!(eval_at(&p, -2.0), -8.0);
        let q = parse("x^0.5").unwrap();
        assert!(q.evaluate(&[("x", -1.0)]).is_err());
        assert_eq!(eval_at(&q, 4.0), 2.0);
        let r = parse("x^-2").unwrap();
        assert!(r.evaluate(&[("x", 0.0)]).is_err());
    }

    #[test]
    fn sign_is_zero_at_zero() {
        let e = parse("sign(x)").unwrap();
        assert_eq!(eval_at(&e, 0.0), 0.0);
        assert_eq!(eval_at(&e, 3.5), 1.0);
        assert_eq!(eval_at(&e, -0.1), -1.0);
    }

    #[test]
    fn derivative_of_gaussian_kernel() {
        // d/dx exp(-x^2) = -2x·exp(-x^2)
        let e = parse("exp(-x^2)").unwrap();
        let d = e.differentiate("x");
        for &v in &[-2.0f64, -0.5, 0.0, 0.3, 1.7] {
            let expected = -2.0 * v * (-v * v).exp();
            assert!((eval_at(&d, v) - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn derivative_of_abs_is_sign() {
        let d = x().abs().differentiate("x");
        assert_eq!(eval_at(&d, 2.0), 1.0);
        assert_eq!(eval_at(&d, -2.0), -1.0);
        assert_eq!(eval_at(&d, 0.0), 0.0);
    }

    #[test]
    fn partial_derivative_treats_other_variables_as_constant() {
        // ∂/∂t1 of t1^2/(4·t2) = t1/(2·t2)
        let e = parse("t1^2/(4*t2)").unwrap();
        let d = e.differentiate("t1");
        for &(a, b) in &[(1.0, 0.5), (-2.0, 3.0), (0.25, 1.0)] {
            let got = d.evaluate(&[("t1", a), ("t2", b)]).unwrap();
            assert!((got - a / (2.0 * b)).abs() < 1e-14);
        }
    }

    #[test]
    fn derivative_of_sign_vanishes() {
        let d = x().sign().differentiate("x");
        assert_eq!(d, Expr::Const(0.0));
    }

    #[test]
    fn named_constants_evaluate() {
        let e = parse("pi*e").unwrap();
        let v = e.evaluate(&[]).unwrap();
        assert!((v - std::f64::consts::PI * std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn general_power_rule_handles_variable_exponent() {
        // d/dx x^x = x^x (log x + 1)
        let e = x().pow(x());
        let d = e.differentiate("x");
        for &v in &[0.5f64, 1.0, 2.0, 3.3] {
            let expected = v.powf(v) * (v.ln() + 1.0);
            assert!((eval_at(&d, v) - expected).abs() < 1e-12 * (1.0 + expected.abs()));
        }
    }

    // Strategy for random smooth expressions that are total on all of R.
    // Compositions are kept bounded (exp through atan) so central
    // differences stay well-conditioned.
    fn smooth_expr() -> impl Strategy<Value = Expr> {
        let leaf = prop_oneof![
            Just(x()),
            (-2.0..2.0f64).prop_map(Expr::constant),
        ];
        leaf.prop_recursive(4, 24, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
                (inner.clone(), inner.clone())
                    .prop_map(|(a, b)| a / (Expr::constant(1.0) + b.clone() * b)),
                inner.clone().prop_map(|a| a.atan().exp()),
                inner.clone().prop_map(|a| (Expr::constant(1.0) + a.clone() * a).log()),
                inner.clone().prop_map(|a| (Expr::constant(1.0) + a.clone() * a).sqrt()),
                inner.clone().prop_map(|a| a.atan()),
                inner.clone().prop_map(|a| a.pow(Expr::constant(2.0))),
                inner.prop_map(|a| a.pow(Expr::constant(3.0))),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn derivative_matches_central_difference(e in smooth_expr(), v in -3.0..3.0f64) {
            let d = e.differentiate("x");
            let h = 1e-5;
            let up = eval_at(&e, v + h);
            let down = eval_at(&e, v - h);
            let numeric = (up - down) / (2.0 * h);
            let symbolic = eval_at(&d, v);
            prop_assert!(
                (symbolic - numeric).abs() / (1.0 + symbolic.abs()) <= 1e-6,
                "symbolic {} vs numeric {} for {}", symbolic, numeric, e
            );
        }

        #[test]
        fn differentiation_is_linear(
            e1 in smooth_expr(),
            e2 in smooth_expr(),
            a in -2.0..2.0f64,
            b in -2.0..2.0f64,
            v in -3.0..3.0f64,
        ) {
            let combo = Expr::constant(a) * e1.clone() + Expr::constant(b) * e2.clone();
            let lhs = eval_at(&combo.differentiate("x"), v);
            let rhs = a * eval_at(&e1.differentiate("x"), v) + b * eval_at(&e2.differentiate("x"), v);
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
        }

        #[test]
        fn printed_form_reparses_and_evaluates_identically(e in smooth_expr(), v in -3.0..3.0f64) {
            let printed = e.to_string();
            let reparsed = parse(&printed).unwrap_or_else(|err| panic!("could not reparse `{printed}`: {err}"));
            let original = eval_at(&e, v);
            let round_tripped = eval_at(&reparsed, v);
            prop_assert!(
                original == round_tripped || (original - round_tripped).abs() <= 1e-14 * (1.0 + original.abs()),
                "`{}` evaluated to {} but reparse gave {}", printed, original, round_tripped
            );
        }
    }

    #[test]
    fn printer_parenthesizes_structure() {
        let e = (x() + Expr::constant(1.0)) * x();
        assert_eq!(e.to_string(), "(x+1)*x");
        let p = (-x()).pow(Expr::constant(2.0));
        assert_eq!(p.to_string(), "(-x)^2");
        let n = -(x().pow(Expr::constant(2.0)));
        assert_eq!(n.to_string(), "-x^2");
    }
}
