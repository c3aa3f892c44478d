//! A small expression language over exact rationals and booleans.
//!
//! Expressions are interpreted against the flat variable bindings of a
//! behavior: grid variables bind under their own names, trajectory
//! components under `"{var}{t}"`, and `name[i]` is sugar for looking up
//! the flat name `"{name}{i}"`. Quantifiers range over bounded integer
//! intervals only.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::behavior::Rational;
use crate::span::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnOp {
    Neg,
    Not,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    Implies,
}

impl BinOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Eq => "=",
            BinOp::Ne => "!=",
            BinOp::Lt => "<",
            BinOp::Le => "<=",
            BinOp::Gt => ">",
            BinOp::Ge => ">=",
            BinOp::And => "and",
            BinOp::Or => "or",
            BinOp::Implies => "implies",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantifier {
    Forall,
    Exists,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Num(Rational),
    Bool(bool),
    Var(String),
    /// `name[index]`: time-indexed access to a flat binding.
    Index(String, Box<Expr>),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    /// `forall v in lo to hi . body`
    Quant {
        quantifier: Quantifier,
        var: String,
        lo: Box<Expr>,
        hi: Box<Expr>,
        body: Box<Expr>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Expr {
        Expr { kind, span }
    }

    pub fn num(value: Rational) -> Expr {
        Expr::new(ExprKind::Num(value), Span::synthetic())
    }

    pub fn var(name: impl Into<String>) -> Expr {
        Expr::new(ExprKind::Var(name.into()), Span::synthetic())
    }

    pub fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
        let span = lhs.span.merge(&rhs.span);
        Expr::new(ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)), span)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(Rational),
    Bool(bool),
}

impl Value {
    fn type_name(&self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Bool(_) => "boolean",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    pub message: String,
    pub span: Span,
}

impl std::fmt::Display for EvalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn err<T>(span: Span, message: impl Into<String>) -> Result<T, EvalError> {
    Err(EvalError { message: message.into(), span })
}

/// Evaluate against base bindings, with quantifier-bound locals on top.
pub struct Env<'a> {
    base: &'a [(String, Rational)],
    locals: Vec<(String, Rational)>,
}

impl<'a> Env<'a> {
    pub fn new(base: &'a [(String, Rational)]) -> Env<'a> {
        Env { base, locals: Vec::new() }
    }

    fn lookup(&self, name: &str) -> Option<&Rational> {
        self.locals
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .or_else(|| self.base.iter().find(|(n, _)| n == name))
            .map(|(_, v)| v)
    }
}

pub fn eval(expr: &Expr, env: &mut Env<'_>) -> Result<Value, EvalError> {
    match &expr.kind {
        ExprKind::Num(r) => Ok(Value::Num(r.clone())),
        ExprKind::Bool(b) => Ok(Value::Bool(*b)),
        ExprKind::Var(name) => match env.lookup(name) {
            Some(v) => Ok(Value::Num(v.clone())),
            None => err(expr.span, format!("unknown variable `{name}`")),
        },
        ExprKind::Index(name, index) => {
            let idx = eval_num(index, env)?;
            if !idx.is_integer() || idx.is_negative() {
                return err(
                    index.span,
                    format!("index into `{name}` must be a non-negative integer, got {idx}"),
                );
            }
            let i = match idx.to_integer().to_u64() {
                Some(i) => i,
                None => return err(index.span, format!("index into `{name}` is too large")),
            };
            let flat = format!("{name}{i}");
            match env.lookup(&flat) {
                Some(v) => Ok(Value::Num(v.clone())),
                None => err(expr.span, format!("unknown variable `{flat}`")),
            }
        }
        ExprKind::Unary(op, inner) => match op {
            UnOp::Neg => Ok(Value::Num(-eval_num(inner, env)?)),
            UnOp::Not => Ok(Value::Bool(!eval_bool(inner, env)?)),
        },
        ExprKind::Binary(op, lhs, rhs) => match op {
            BinOp::Add => Ok(Value::Num(eval_num(lhs, env)? + eval_num(rhs, env)?)),
            BinOp::Sub => Ok(Value::Num(eval_num(lhs, env)? - eval_num(rhs, env)?)),
            BinOp::Mul => Ok(Value::Num(eval_num(lhs, env)? * eval_num(rhs, env)?)),
            BinOp::Div => {
                let denom = eval_num(rhs, env)?;
                if denom.is_zero() {
                    return err(rhs.span, "division by zero");
                }
                Ok(Value::Num(eval_num(lhs, env)? / denom))
            }
            BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => {
                let l = eval_num(lhs, env)?;
                let r = eval_num(rhs, env)?;
                let result = match op {
                    BinOp::Eq => l == r,
                    BinOp::Ne => l != r,
                    BinOp::Lt => l < r,
                    BinOp::Le => l <= r,
                    BinOp::Gt => l > r,
                    BinOp::Ge => l >= r,
                    _ => unreachable!(),
                };
                Ok(Value::Bool(result))
            }
            BinOp::And => Ok(Value::Bool(eval_bool(lhs, env)? && eval_bool(rhs, env)?)),
            BinOp::Or => Ok(Value::Bool(eval_bool(lhs, env)? || eval_bool(rhs, env)?)),
            BinOp::Implies => Ok(Value::Bool(!eval_bool(lhs, env)? || eval_bool(rhs, env)?)),
        },
        ExprKind::Quant { quantifier, var, lo, hi, body } => {
            let lo = eval_int(lo, env)?;
            let hi = eval_int(hi, env)?;
            let mut result = matches!(quantifier, Quantifier::Forall);
            let mut i = lo;
            while i <= hi {
                env.locals.push((var.clone(), Rational::from_integer(i.clone().into())));
                let hold = eval_bool(body, env);
                env.locals.pop();
                let hold = hold?;
                match quantifier {
                    Quantifier::Forall if !hold => {
                        result = false;
                        break;
                    }
                    Quantifier::Exists if hold => {
                        result = true;
                        break;
                    }
                    _ => {}
                }
                i += 1;
            }
            Ok(Value::Bool(result))
        }
    }
}

pub fn eval_num(expr: &Expr, env: &mut Env<'_>) -> Result<Rational, EvalError> {
    match eval(expr, env)? {
        Value::Num(r) => Ok(r),
        v => err(expr.span, format!("expected a number, got a {}", v.type_name())),
    }
}

pub fn eval_bool(expr: &Expr, env: &mut Env<'_>) -> Result<bool, EvalError> {
    match eval(expr, env)? {
        Value::Bool(b) => Ok(b),
        v => err(expr.span, format!("expected a boolean, got a {}", v.type_name())),
    }
}

fn eval_int(expr: &Expr, env: &mut Env<'_>) -> Result<i64, EvalError> {
    let r = eval_num(expr, env)?;
    if !r.is_integer() {
        return err(expr.span, format!("quantifier bound must be an integer, got {r}"));
    }
    match r.to_integer().to_i64() {
        Some(i) => Ok(i),
        None => err(expr.span, "quantifier bound is too large"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behavior::{int, rat};

    fn eval_str_env(expr: Expr, base: &[(String, Rational)]) -> Result<Value, EvalError> {
        eval(&expr, &mut Env::new(base))
    }

    #[test]
    fn arithmetic_is_exact() {
        let e = Expr::binary(
            BinOp::Div,
            Expr::num(int(1)),
            Expr::num(int(3)),
        );
        assert_eq!(eval_str_env(e, &[]), Ok(Value::Num(rat(1, 3))));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = Expr::binary(BinOp::Div, Expr::num(int(1)), Expr::num(int(0)));
        assert!(eval_str_env(e, &[]).is_err());
    }

    #[test]
    fn indexed_access_resolves_flat_names() {
        let base = vec![("T0".to_string(), int(10)), ("T1".to_string(), int(15))];
        let e = Expr::new(
            ExprKind::Index("T".into(), Box::new(Expr::num(int(1)))),
            Span::synthetic(),
        );
        assert_eq!(eval_str_env(e, &base), Ok(Value::Num(int(15))));
    }

    #[test]
    fn bounded_quantifiers() {
        let base = vec![
            ("r0".to_string(), int(5)),
            ("r1".to_string(), int(6)),
            ("r2".to_string(), int(7)),
        ];
        let body = Expr::binary(
            BinOp::Lt,
            Expr::new(
                ExprKind::Index("r".into(), Box::new(Expr::var("t"))),
                Span::synthetic(),
            ),
            Expr::num(int(7)),
        );
        let all = Expr::new(
            ExprKind::Quant {
                quantifier: Quantifier::Forall,
                var: "t".into(),
                lo: Box::new(Expr::num(int(0))),
                hi: Box::new(Expr::num(int(2))),
                body: Box::new(body.clone()),
            },
            Span::synthetic(),
        );
        assert_eq!(eval_str_env(all, &base), Ok(Value::Bool(false)));
        let some = Expr::new(
            ExprKind::Quant {
                quantifier: Quantifier::Exists,
                var: "t".into(),
                lo: Box::new(Expr::num(int(0))),
                hi: Box::new(Expr::num(int(2))),
                body: Box::new(body),
            },
            Span::synthetic(),
        );
        assert_eq!(eval_str_env(some, &base), Ok(Value::Bool(true)));
        // Empty range: forall is vacuously true.
        let vacuous = Expr::new(
            ExprKind::Quant {
                quantifier: Quantifier::Forall,
                var: "t".into(),
                lo: Box::new(Expr::num(int(3))),
                hi: Box::new(Expr::num(int(1))),
                body: Box::new(Expr::new(ExprKind::Bool(false), Span::synthetic())),
            },
            Span::synthetic(),
        );
        assert_eq!(eval_str_env(vacuous, &base), Ok(Value::Bool(true)));
    }

    #[test]
    fn type_errors_carry_spans() {
        let e = Expr::binary(
            BinOp::Add,
            Expr::new(ExprKind::Bool(true), Span::new(0, 4, 1, 1)),
            Expr::num(int(1)),
        );
        let err = eval_str_env(e, &[]).unwrap_err();
        assert!(err.message.contains("expected a number"));
        assert_eq!(err.span.line, 1);
    }
}
