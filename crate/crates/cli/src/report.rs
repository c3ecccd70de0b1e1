//! Verification report: check records with embedded evidence, and replay
//! of that evidence from the report alone.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use deloop_core::algebra::{lambda_relations, Algebra};
use deloop_core::dell::{stable_hom, Certificate, ModulePayload};
use deloop_core::homological::{ext_against_algebra, PdimReport};
use deloop_core::io::{algebra_from_json, table_from_json};
use deloop_core::linalg::sparse;
use deloop_core::{Matrix, ModuleMorphism, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undecided => "UNDECIDED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionPair {
    pub x: String,
    pub y: String,
    pub sigma_x: ModulePayload,
    pub y_module: ModulePayload,
    pub x_module: ModulePayload,
    pub omega_y: ModulePayload,
    /// `dim stable Hom(Sigma X, Y)`
    pub left: usize,
    /// `dim stable Hom(X, Omega Y)`
    pub right: usize,
}

/// Data backing a check. Each variant names the algebra it lives over by
/// its key in [`Report::algebras`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    Validation {
        algebra: String,
        associativity_triples: usize,
        violations: Vec<String>,
        /// Defining relations of `Lambda(q)` that fail on the table, when
        /// the table is meant to present `Lambda(q)`.
        relation_failures: Option<Vec<String>>,
    },
    Isomorphism {
        algebra: String,
        claim: String,
        source: ModulePayload,
        target: ModulePayload,
        matrix: Matrix,
    },
    Summand {
        algebra: String,
        claim: String,
        statement: String,
        certificate: Certificate,
    },
    Pdim {
        algebra: String,
        claim: String,
        module: ModulePayload,
        n_max: usize,
        report: PdimReport,
    },
    GammaFree {
        algebra: String,
        claim: String,
        module: ModulePayload,
        generator: Vec<Scalar>,
        rank: usize,
    },
    /// Recomputed on replay.
    Ext {
        algebra: String,
        claim: String,
        module: ModulePayload,
        dims: Vec<usize>,
    },
    /// The intersection of kernels of the given maps into the regular
    /// module.
    EvaluationKernel {
        algebra: String,
        claim: String,
        module: ModulePayload,
        #[serde(with = "sparse")]
        evaluation: Matrix,
        kernel_dim: usize,
    },
    /// Recomputed on replay.
    Adjunction {
        algebra: String,
        pairs: Vec<AdjunctionPair>,
    },
}

impl Evidence {
    fn algebra_key(&self) -> &str {
        match self {
            Evidence::Validation { algebra, .. }
            | Evidence::Isomorphism { algebra, .. }
            | Evidence::Summand { algebra, .. }
            | Evidence::Pdim { algebra, .. }
            | Evidence::GammaFree { algebra, .. }
            | Evidence::Ext { algebra, .. }
            | Evidence::EvaluationKernel { algebra, .. }
            | Evidence::Adjunction { algebra, .. } => algebra,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub detail: String,
    pub evidence: Vec<Evidence>,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub q: Scalar,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub parameters: Parameters,
    pub algebras: BTreeMap<String, Value>,
    pub checks: Vec<CheckRecord>,
    pub notes: Vec<String>,
    pub aborted: Option<String>,
}

impl Report {
    pub fn new(parameters: Parameters) -> Self {
        Report {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            algebras: BTreeMap::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            aborted: None,
        }
    }

    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn all_passed(&self) -> bool {
        self.aborted.is_none() && self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// The report with wall times zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.wall_time_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = &self.parameters;
        let _ = writeln!(out, "{} {}  q = {}  n_max = {}  seed = {}", self.tool, self.version, p.q, p.n_max, p.seed);
        for c in &self.checks {
            let _ = writeln!(out, "[{:>9}] {}  ({} ms)", c.status.label(), c.id, c.wall_time_ms);
            let _ = writeln!(out, "            {}", c.statement);
            if !c.detail.is_empty() {
                let _ = writeln!(out, "            {}", c.detail);
            }
        }
        if let Some(why) = &self.aborted {
            let _ = writeln!(out, "run aborted: {why}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} undecided",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Undecided)
        );
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReplayOutcome {
    pub replayed: usize,
    /// `(check id, evidence index, reason)`
    pub failures: Vec<(String, usize, String)>,
}

impl ReplayOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Algebras<'a> {
    json: &'a BTreeMap<String, Value>,
    built: BTreeMap<String, Arc<Algebra>>,
}

impl Algebras<'_> {
    fn get(&mut self, key: &str) -> Result<Arc<Algebra>, String> {
        if let Some(a) = self.built.get(key) {
            return Ok(a.clone());
        }
        let v = self.json.get(key).ok_or_else(|| format!("unknown algebra key {key:?}"))?;
        let a = algebra_from_json(v, key).map_err(|e| e.to_string())?;
        self.built.insert(key.to_string(), a.clone());
        Ok(a)
    }
}

fn replay_one(ev: &Evidence, algs: &mut Algebras) -> Result<(), String> {
    let e = |x: deloop_core::Error| x.to_string();
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
    match ev {
        Evidence::Validation { algebra, associativity_triples, violations, relation_failures } => {
            let v = algs.json.get(algebra).ok_or("unknown algebra key")?;
            let table = table_from_json(v, algebra).map_err(e)?;
            let rep = table.validate();
            let found: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
            check(rep.associativity_triples == *associativity_triples && found == *violations, "validation differs")?;
            if let (true, Some(expected)) = (rep.passed(), relation_failures) {
                let alg = Algebra::new(table.clone()).map_err(e)?;
                let q = table.params.get("q").cloned().ok_or("no parameter q")?;
                let fails: Vec<String> = lambda_relations(&alg, &q)
                    .into_iter()
                    .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
                    .map(|(n, _)| n.to_string())
                    .collect();
                check(fails == *expected, "relation failures differ")?;
            }
            Ok(())
        }
        Evidence::Isomorphism { algebra, source, target, matrix, .. } => {
            let alg = algs.get(algebra)?;
            let (s, t) = (source.load(&alg).map_err(e)?, target.load(&alg).map_err(e)?);
            let m = matrix.clone().with_shape(s.dim(), t.dim()).ok_or("witness has the wrong shape")?;
            let f = ModuleMorphism::new(s, t, m).map_err(e)?;
            check(f.is_iso(), "witness is not invertible")
        }
        Evidence::Summand { algebra, certificate, .. } => {
            let alg = algs.get(algebra)?;
            check(certificate.replay(&alg).map_err(e)?, "certificate does not replay")
        }
        Evidence::Pdim { algebra, module, n_max, report, .. } => {
            let alg = algs.get(algebra)?;
            let m = module.load(&alg).map_err(e)?;
            check(report.replay(&m, *n_max), "pdim evidence does not replay")
        }
        Evidence::GammaFree { algebra, module, generator, rank, .. } => {
            let alg = algs.get(algebra)?;
            let m = module.load(&alg).map_err(e)?;
            check(generator.len() == alg.dim(), "generator has the wrong length")?;
            check(alg.mul(generator, generator).iter().all(Scalar::is_zero), "generator does not square to zero")?;
            check(m.act_elem(generator).rank() == *rank, "rank differs")
        }
        Evidence::Ext { algebra, module, dims, .. } => {
            let alg = algs.get(algebra)?;
            let m = module.load(&alg).map_err(e)?;
            check(ext_against_algebra(&m, dims.len()) == *dims, "Ext dimensions differ")
        }
        Evidence::EvaluationKernel { algebra, module, evaluation, kernel_dim, .. } => {
            let alg = algs.get(algebra)?;
            let m = module.load(&alg).map_err(e)?;
            check(evaluation.rows() == m.dim(), "evaluation has the wrong shape")?;
            check(evaluation.kernel_basis().rows() == *kernel_dim, "kernel dimension differs")?;
            let reg = deloop_core::ModuleRep::regular(&alg);
            let n = alg.dim();
            check(evaluation.cols() % n == 0, "evaluation is not a block of maps into A")?;
            for b in 0..evaluation.cols() / n {
                let idx: Vec<usize> = (b * n..(b + 1) * n).collect();
                ModuleMorphism::new(m.clone(), reg.clone(), evaluation.select_cols(&idx)).map_err(e)?;
            }
            Ok(())
        }
        Evidence::Adjunction { algebra, pairs } => {
            let alg = algs.get(algebra)?;
            for p in pairs {
                let load = |x: &ModulePayload| x.load(&alg).map_err(e);
                let (sx, y, x, oy) = (load(&p.sigma_x)?, load(&p.y_module)?, load(&p.x_module)?, load(&p.omega_y)?);
                let l = stable_hom(&sx, &y).map_err(e)?.quotient_dim();
                let r = stable_hom(&x, &oy).map_err(e)?.quotient_dim();
                check(l == p.left && r == p.right && l == r, "adjunction dimensions differ")?;
            }
            Ok(())
        }
    }
}

/// Re-checks every piece of evidence in the report.
pub fn replay(report: &Report) -> ReplayOutcome {
    let mut algs = Algebras { json: &report.algebras, built: BTreeMap::new() };
    let mut out = ReplayOutcome::default();
    for c in &report.checks {
        for (i, ev) in c.evidence.iter().enumerate() {
            let k = ev.algebra_key();
            if !report.algebras.contains_key(k) {
                out.failures.push((c.id.clone(), i, format!("unknown algebra key {k:?}")));
                continue;
            }
            match replay_one(ev, &mut algs) {
                Ok(()) => out.replayed += 1,
                Err(why) => out.failures.push((c.id.clone(), i, why)),
            }
        }
    }
    out
}
