//! Evaluation of expressions such as `omega^3 M(2)`, `sigma Lambda`,
//! `ext M(2)` or `dell_upper S`.
//!
//! Grammar: `[ext | pdim | dell_upper] (omega[^n] | sigma[^n] | tr | top |
//! torsionless)* atom`, where atom is `M(a)`, `Lambda`, `S`, `S<i>` (the
//! simple at idempotent `i`) or `module` (the `--module` file). Operators
//! apply right to left.

use std::fmt::Write as _;
use std::sync::Arc;

use deloop_core::algebra::{build_gamma, build_lambda};
use deloop_core::dell::{dell_upper, DellOutcome, SummandContext};
use deloop_core::homological::{ext_against_algebra, pdim_report, sigma, syzygy, torsionless_quotient, transpose};
use deloop_core::module::{build_m_alpha, is_isomorphic};
use deloop_core::{Algebra, ModuleRep, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum ComputeError {
    #[error("cannot parse expression: {0}")]
    Parse(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Core(#[from] deloop_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Omega(usize),
    Sigma(usize),
    Tr,
    Top,
    Torsionless,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    M(Scalar),
    Regular,
    Simple(usize),
    ModuleFile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Query {
    Module,
    Ext,
    Pdim,
    DellUpper,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub query: Query,
    /// Outermost first.
    pub steps: Vec<Step>,
    pub atom: Atom,
}

fn power(tok: &str, name: &str) -> Result<Option<usize>, ComputeError> {
    let Some(rest) = tok.strip_prefix(name) else { return Ok(None) };
    if rest.is_empty() {
        return Ok(Some(1));
    }
    let n = rest.strip_prefix('^').ok_or_else(|| ComputeError::Parse(tok.into()))?;
    n.parse().map(Some).map_err(|_| ComputeError::Parse(tok.into()))
}

pub fn parse(expr: &str) -> Result<Expr, ComputeError> {
    let mut toks: Vec<&str> = expr.split_whitespace().collect();
    let atom_tok = toks.pop().ok_or_else(|| ComputeError::Parse("empty expression".into()))?;
    let atom = if let Some(a) = atom_tok.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
        Atom::M(a.parse().map_err(|_| ComputeError::Parse(format!("bad parameter in {atom_tok}")))?)
    } else {
        match atom_tok {
            "Lambda" | "A" => Atom::Regular,
            "S" => Atom::Simple(0),
            "module" => Atom::ModuleFile,
            s if s.starts_with('S') => Atom::Simple(s[1..].parse().map_err(|_| ComputeError::Parse(s.into()))?),
            s => return Err(ComputeError::Parse(format!("unknown module {s:?}"))),
        }
    };
    let query = match toks.first().copied() {
        Some("ext") => Query::Ext,
        Some("pdim") => Query::Pdim,
        Some("dell_upper") => Query::DellUpper,
        _ => Query::Module,
    };
    if query != Query::Module {
        toks.remove(0);
    }
    let mut steps = Vec::new();
    for t in toks {
        let step = if let Some(n) = power(t, "omega")? {
            Step::Omega(n)
        } else if let Some(n) = power(t, "sigma")? {
            Step::Sigma(n)
        } else {
            match t {
                "tr" => Step::Tr,
                "top" => Step::Top,
                "torsionless" => Step::Torsionless,
                _ => return Err(ComputeError::Parse(format!("unknown operator {t:?}"))),
            }
        };
        steps.push(step);
    }
    Ok(Expr { query, steps, atom })
}

pub struct ComputeInput {
    pub algebra: Option<Arc<Algebra>>,
    pub module: Option<ModuleRep>,
    pub q: Scalar,
    pub n_max: usize,
    pub seed: u64,
}

fn is_lambda(alg: &Arc<Algebra>) -> Option<Scalar> {
    let q = alg.param("q")?.clone();
    let l = build_lambda(&q).ok()?;
    l.same_as(alg).then_some(q)
}

/// Evaluates the expression and returns the printed result.
pub fn compute(expr: &str, input: &ComputeInput) -> Result<String, ComputeError> {
    let e = parse(expr)?;
    let alg = match (&input.algebra, &input.module) {
        (Some(a), _) => a.clone(),
        (None, Some(m)) => m.algebra().clone(),
        (None, None) => build_lambda(&input.q)?,
    };
    let q = is_lambda(&alg);
    let mut m = match &e.atom {
        Atom::M(a) => {
            if q.is_none() {
                return Err(ComputeError::Unsupported("M(a) needs the algebra Lambda(q)".into()));
            }
            build_m_alpha(&alg, a)?
        }
        Atom::Regular => ModuleRep::regular(&alg),
        Atom::Simple(i) => {
            let ps = ModuleRep::projective_summands(&alg);
            let (_, p) = ps
                .iter()
                .find(|(t, _)| t == i)
                .ok_or_else(|| ComputeError::Unsupported(format!("no idempotent {i}")))?;
            p.top().0
        }
        Atom::ModuleFile => input
            .module
            .clone()
            .ok_or_else(|| ComputeError::Unsupported("expression uses `module` but no --module was given".into()))?,
    };
    // M(a) -> M(qa) under Omega and M(a) -> M(a/q) under Sigma, away from
    // the exceptional parameters.
    let mut predicted = match (&e.atom, &q) {
        (Atom::M(a), Some(_)) => Some(a.clone()),
        _ => None,
    };
    let mut out = String::new();
    let _ = writeln!(out, "start: dim {}", m.dim());
    for step in e.steps.iter().rev() {
        match step {
            Step::Omega(n) => {
                for _ in 0..*n {
                    m = syzygy(&m);
                    predicted = match (predicted, &q) {
                        (Some(a), Some(q)) if !a.is_one() => Some(&a * q),
                        _ => None,
                    };
                }
            }
            Step::Sigma(n) => {
                for _ in 0..*n {
                    m = sigma(&m)?;
                    predicted = match (predicted, &q) {
                        (Some(a), Some(q)) if a != *q => Some(&a / q),
                        _ => None,
                    };
                }
            }
            Step::Tr => {
                m = transpose(&m)?;
                predicted = None;
            }
            Step::Top => {
                m = m.top().0;
                predicted = None;
            }
            Step::Torsionless => {
                m = torsionless_quotient(&m)?.module;
                predicted = None;
            }
        }
        let _ = writeln!(out, "{step:?}: dim {}", m.dim());
    }
    if let (Some(b), true) = (&predicted, e.query == Query::Module) {
        let target = build_m_alpha(m.algebra(), b)?;
        match is_isomorphic(&m, &target, input.seed)?.witness() {
            Some(w) => {
                let _ = writeln!(out, "isomorphic to M({b}); witness rows:");
                for r in w.matrix().row_iter() {
                    let _ = writeln!(out, "  [{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
                }
            }
            None => {
                let _ = writeln!(out, "not isomorphic to M({b})");
            }
        }
    }
    match e.query {
        Query::Module => {
            let _ = writeln!(out, "result: dim {}", m.dim());
        }
        Query::Ext => {
            let dims = ext_against_algebra(&m, input.n_max);
            let _ = writeln!(out, "dim Ext^i(-, A) for i = 1..{}: {dims:?}", input.n_max);
        }
        Query::Pdim => {
            let r = pdim_report(&m, input.n_max);
            let _ = writeln!(out, "pdim: {:?} ({:?})", r.bound, r.evidence);
        }
        Query::DellUpper => {
            let gamma = build_gamma(m.algebra()).ok();
            let ctx = SummandContext::new(gamma.as_ref(), input.seed);
            let d = dell_upper(&m, input.n_max, &ctx)?;
            for c in &d.checks {
                let _ = writeln!(out, "n = {}: {} ({})", c.n, c.certificate.kind(), c.certificate.statement());
            }
            let verdict = match d.outcome {
                DellOutcome::Exactly(n) => format!("exactly {n}"),
                DellOutcome::GreaterThan(n) => format!("greater than {n}"),
                DellOutcome::Undecided(n) => format!("undecided at {n}"),
            };
            let _ = writeln!(out, "dell_upper: {verdict}");
            if let Some(note) = d.note() {
                let _ = writeln!(out, "note: {note}");
            }
        }
    }
    Ok(out)
}
