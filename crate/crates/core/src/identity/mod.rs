//! Named identities, their verification, and machine-readable reports.

mod registry;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{eval, parse, render, Expr};
use crate::monomial::Monomial;
use crate::series::{first_mismatch, render_coefficient, EvalContext, LaurentSeries};

pub use registry::builtin_registry;

/// Direct Rust construction of both sides, mirroring the stored text.
pub type Builder = fn(&EvalContext) -> Result<(LaurentSeries, LaurentSeries)>;

#[derive(Clone, Debug)]
pub struct Identity {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub min_order: i64,
    pub source: String,
    pub builtin: Option<Builder>,
}

impl Identity {
    /// An identity from text, outside the registry.
    pub fn adhoc(name: &str, lhs: &str, rhs: &str) -> std::result::Result<Self, crate::expr::ParseError> {
        Ok(Self {
            name: name.to_string(),
            lhs: parse(lhs)?,
            rhs: parse(rhs)?,
            min_order: 1,
            source: "ad hoc".to_string(),
            builtin: None,
        })
    }

    /// `lhs = rhs` as text.
    pub fn text(&self) -> String {
        format!("{} = {}", render(&self.lhs), render(&self.rhs))
    }
}

/// Looks up a registry entry by name.
pub fn lookup<'a>(registry: &'a [Identity], name: &str) -> Option<&'a Identity> {
    registry.iter().find(|id| id.name == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchDetail {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub order_requested: i64,
    pub order_effective: i64,
    pub status: Status,
    pub mismatch: Option<MismatchDetail>,
    pub error: Option<String>,
    pub millis: u64,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::Equal
    }

    /// One human-readable line.
    pub fn plain(&self) -> String {
        let mut line = match self.status {
            Status::Equal => format!("{}: equal below q^{}", self.name, self.order_effective),
            Status::Mismatch => {
                let m = self.mismatch.as_ref().expect("mismatch detail");
                format!("{}: mismatch at q^{}: lhs {}, rhs {}", self.name, m.exponent, m.lhs, m.rhs)
            }
            Status::Error => {
                format!("{}: error: {}", self.name, self.error.as_deref().unwrap_or("unknown"))
            }
        };
        if self.status != Status::Error && self.order_effective < self.order_requested {
            line.push_str(&format!(
                " (effective order {} < requested {})",
                self.order_effective, self.order_requested
            ));
        }
        line.push_str(&format!(" [{} ms]", self.millis));
        line
    }
}

/// A report together with the series it was computed from.
#[derive(Clone, Debug)]
pub struct Verification {
    pub report: VerificationReport,
    pub lhs: Option<LaurentSeries>,
    pub rhs: Option<LaurentSeries>,
}

fn check_order(id: &Identity, ctx: &EvalContext) -> Result<()> {
    if ctx.order() < id.min_order {
        return Err(Error::BelowMinOrder {
            name: id.name.clone(),
            order: ctx.order(),
            min_order: id.min_order,
        });
    }
    Ok(())
}

/// Evaluates both sides from their expression trees.
pub fn evaluate_sides(id: &Identity, ctx: &EvalContext) -> std::result::Result<(LaurentSeries, LaurentSeries), String> {
    let lhs = eval(&id.lhs, ctx).map_err(|e| format!("lhs: {e}"))?;
    let rhs = eval(&id.rhs, ctx).map_err(|e| format!("rhs: {e}"))?;
    Ok((lhs, rhs))
}

/// Verifies one identity, keeping the evaluated sides.
pub fn verify_detailed(id: &Identity, ctx: &EvalContext) -> Result<Verification> {
    check_order(id, ctx)?;
    let started = Instant::now();
    let requested = ctx.order();
    let outcome = evaluate_sides(id, ctx);
    let millis = started.elapsed().as_millis() as u64;
    let mut report = VerificationReport {
        name: id.name.clone(),
        order_requested: requested,
        order_effective: requested,
        status: Status::Error,
        mismatch: None,
        error: None,
        millis,
    };
    let (lhs, rhs) = match outcome {
        Ok(sides) => sides,
        Err(msg) => {
            report.error = Some(msg);
            return Ok(Verification { report, lhs: None, rhs: None });
        }
    };
    let effective = requested.min(lhs.valid_to()).min(rhs.valid_to());
    report.order_effective = effective;
    match first_mismatch(&lhs, &rhs, effective) {
        Ok(None) => report.status = Status::Equal,
        Ok(Some(m)) => {
            report.status = Status::Mismatch;
            report.mismatch = Some(MismatchDetail {
                exponent: m.exponent,
                lhs: render_coefficient(&m.lhs),
                rhs: render_coefficient(&m.rhs),
            });
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report.millis = started.elapsed().as_millis() as u64;
    Ok(Verification { report, lhs: Some(lhs), rhs: Some(rhs) })
}

/// Verifies one identity at the context's order.
pub fn verify(id: &Identity, ctx: &EvalContext) -> Result<VerificationReport> {
    verify_detailed(id, ctx).map(|v| v.report)
}

/// Verifies every identity concurrently; reports come back in input order.
pub fn verify_all_of(ids: &[Identity], ctx: &EvalContext) -> Result<Vec<Verification>> {
    for id in ids {
        check_order(id, ctx)?;
    }
    ids.par_iter().map(|id| verify_detailed(id, ctx)).collect()
}

/// Verifies the built-in registry.
pub fn verify_all(ctx: &EvalContext) -> Result<Vec<VerificationReport>> {
    Ok(verify_all_of(&builtin_registry(), ctx)?.into_iter().map(|v| v.report).collect())
}

/// Variants of an expression with one monomial prefactor `±q^e` (any
/// monomial literal outside a function's argument list) replaced by
/// `±q^(e+1)`. Used for fault injection.
pub fn prefactor_perturbations(e: &Expr) -> Vec<Expr> {
    (0..count_prefactors(e))
        .map(|target| {
            let mut seen = 0;
            perturb(e, target, &mut seen)
        })
        .collect()
}

fn count_prefactors(e: &Expr) -> usize {
    match e {
        Expr::Mono(_) => 1,
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            count_prefactors(a) + count_prefactors(b)
        }
        Expr::Neg(a) | Expr::Pow(a, _) => count_prefactors(a),
        Expr::Int(_) | Expr::Call(_) => 0,
    }
}

fn perturb(e: &Expr, target: usize, seen: &mut usize) -> Expr {
    let both = |a: &Expr, b: &Expr, seen: &mut usize| {
        let a = perturb(a, target, seen);
        (a, perturb(b, target, seen))
    };
    match e {
        Expr::Mono(m) => {
            let hit = *seen == target;
            *seen += 1;
            Expr::Mono(if hit { *m * Monomial::q(1) } else { *m })
        }
        Expr::Add(a, b) => {
            let (a, b) = both(a, b, seen);
            Expr::add(a, b)
        }
        Expr::Sub(a, b) => {
            let (a, b) = both(a, b, seen);
            Expr::sub(a, b)
        }
        Expr::Mul(a, b) => {
            let (a, b) = both(a, b, seen);
            Expr::mul(a, b)
        }
        Expr::Div(a, b) => {
            let (a, b) = both(a, b, seen);
            Expr::div(a, b)
        }
        Expr::Neg(a) => Expr::Neg(Box::new(perturb(a, target, seen))),
        Expr::Pow(a, k) => Expr::Pow(Box::new(perturb(a, target, seen)), *k),
        Expr::Int(_) | Expr::Call(_) => e.clone(),
    }
}
