//! The registered checks of `verify-all`.

use std::sync::Arc;
use std::time::Instant;

use deloop_core::algebra::{build_gamma, lambda, lambda_relations, lambda_table, Algebra, AlgebraTable};
use deloop_core::constructions::{
    base_part_over_opposite, inflate, one_point_extension, simple_at_extension_vertex, OnePointExtension,
};
use deloop_core::dell::{
    dell_upper, gamma_generator, gamma_parity_report, stable_hom, Certificate, DellOutcome, ModulePayload,
    SummandContext, NEGATIVE_DEPENDENCE,
};
use deloop_core::homological::{
    ext_against_algebra, pdim_by_syzygies, pdim_report, sigma, syzygy, torsionless_quotient, PdimBound,
};
use deloop_core::io::table_to_json;
use deloop_core::module::{build_m_alpha, hom_space, is_isomorphic};
use deloop_core::{Matrix, ModuleRep, RowSpace, Scalar, SubalgebraEmbedding};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{AdjunctionPair, CheckRecord, Evidence, Parameters, Report, Status};

pub const EXT_DEPTH: usize = 10;
pub const TRACK_DEPTH: usize = 20;
pub const TRANSPORT_DEPTH: usize = 10;
pub const PDIM_DEPTH: usize = 12;
pub const GRID: std::ops::RangeInclusive<i32> = -5..=5;

pub const OUT_OF_SCOPE: &str = "the derived-category consequence of Omega M(0) = M(0) (generation of the derived \
category by injectives) is out of scope; only the module isomorphism is checked";

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub q: Scalar,
    pub n_max: usize,
    pub seed: u64,
    /// Flip the sign of `x*y` in the table of `Lambda(q)`.
    pub corrupt_sign: bool,
}

impl VerifyOptions {
    pub fn new(q: Scalar, n_max: usize, seed: u64) -> Self {
        VerifyOptions { q, n_max, seed, corrupt_sign: false }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("q = {0} must be nonzero and different from 1 and -1")]
    InvalidQ(Scalar),
    #[error(transparent)]
    Core(#[from] deloop_core::Error),
}

/// The table of `Lambda(q)` with the sign of `x*y` dropped.
pub fn sign_dropped_table(q: &Scalar) -> AlgebraTable {
    let mut t = lambda_table(q);
    let n = t.dim();
    t.constants[lambda::X * n + lambda::Y][lambda::YX] = q.inv().expect("q != 0");
    t
}

pub fn failing_relations(alg: &Algebra, q: &Scalar) -> Vec<String> {
    lambda_relations(alg, q)
        .into_iter()
        .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
        .map(|(n, _)| n.to_string())
        .collect()
}

pub fn m_name(a: &Scalar) -> String {
    format!("M({a})")
}

/// Objects shared by the checks.
pub struct Fixtures {
    pub opts: VerifyOptions,
    pub table: AlgebraTable,
    pub lambda: Arc<Algebra>,
    pub lambda_op: Arc<Algebra>,
    pub gamma: SubalgebraEmbedding,
    pub m_q: ModuleRep,
    pub extension: OnePointExtension,
    pub extension_op: Arc<Algebra>,
}

impl Fixtures {
    fn q(&self) -> &Scalar {
        &self.opts.q
    }

    fn q_pow(&self, j: i32) -> Scalar {
        self.q().pow(j).expect("q != 0")
    }

    fn m(&self, a: &Scalar) -> Result<ModuleRep, VerifyError> {
        Ok(build_m_alpha(&self.lambda, a)?)
    }

    fn ctx(&self) -> SummandContext<'_> {
        SummandContext::new(Some(&self.gamma), self.opts.seed)
    }
}

pub struct Outcome {
    pub status: Status,
    pub detail: String,
    pub evidence: Vec<Evidence>,
}

impl Outcome {
    fn from_failures(failures: Vec<String>, ok: String, evidence: Vec<Evidence>) -> Self {
        if failures.is_empty() {
            Outcome { status: Status::Pass, detail: ok, evidence }
        } else {
            Outcome { status: Status::Fail, detail: failures.join("; "), evidence }
        }
    }
}

type CheckFn = fn(&Fixtures) -> Result<Outcome, VerifyError>;

pub struct CheckSpec {
    pub id: &'static str,
    pub statement: &'static str,
    pub run: CheckFn,
}

pub const CHECKS: &[CheckSpec] = &[
    CheckSpec {
        id: "01-algebra",
        statement: "Lambda(q) = k<x,y,z>/(x^2, y^2, z^2, zy, yx + q xy, zx - xz, yz - xz) is a 6-dimensional \
                    associative algebra with basis 1, x, y, z, yx, zx, radical of dimension 5 and J^3 = 0",
        run: check_algebra,
    },
    CheckSpec {
        id: "02-omega-shift",
        statement: "Omega M(a) is isomorphic to M(qa) for a = q^j, -5 <= j <= 5, a != 1",
        run: check_omega_shift,
    },
    CheckSpec {
        id: "03-sigma-shift",
        statement: "Sigma M(a) is isomorphic to M(a/q) for a = q^j, -5 <= j <= 5, a != q",
        run: check_sigma_shift,
    },
    CheckSpec {
        id: "04-adjunction",
        statement: "dim stable Hom(Sigma X, Y) = dim stable Hom(X, Omega Y) on a grid of pairs over Lambda(q) and \
                    over Lambda(q)[M(q)]",
        run: check_adjunction,
    },
    CheckSpec {
        id: "05-omega-sigma",
        statement: "Omega Sigma M(q) is 2-dimensional and free of rank 1 over Gamma = k[x]/(x^2)",
        run: check_omega_sigma,
    },
    CheckSpec {
        id: "06-torsionless-quotient",
        statement: "the maximal torsionless quotient of M(q) is isomorphic to M(q)/M(q)z and to Omega Sigma M(q)",
        run: check_torsionless_quotient,
    },
    CheckSpec {
        id: "07-ext-vanishing",
        statement: "Ext^i(M(q), Lambda) = 0 for 1 <= i <= 10",
        run: check_ext,
    },
    CheckSpec {
        id: "08-not-torsionless",
        statement: "M(q) is not torsionless: the maps M(q) -> Lambda have a common kernel of dimension 1",
        run: check_not_torsionless,
    },
    CheckSpec {
        id: "09-parity-chain",
        statement: "for 0 <= n <= n_max, Omega^n M(q) = M(q^(n+1)) is 3-dimensional and Omega^n Omega Sigma M(q) is \
                    Gamma-free, so Omega^n M(q) is not a stable summand of Omega^n Omega Sigma M(q)",
        run: check_parity_chain,
    },
    CheckSpec {
        id: "10-syzygy-tracking",
        statement: "Omega^n M(q) is isomorphic to M(q^(n+1)) for 0 <= n <= 20",
        run: check_tracking,
    },
    CheckSpec {
        id: "11-delooping-bound",
        statement: "for 0 <= n <= n_max, Omega^n M(q) is not a stable summand of Omega^(n+1) Sigma^(n+1) Omega^n M(q), \
                    so dell M(q) > n_max",
        run: check_dell,
    },
    CheckSpec {
        id: "12-extension-transport",
        statement: "B = Lambda(q)[M(q)] is a 10-dimensional associative algebra and, for the simple B-module S at the \
                    extension vertex, Omega^n S is isomorphic to (0, Omega^(n-1) M(q)) for 1 <= n <= 10",
        run: check_transport,
    },
    CheckSpec {
        id: "13-extension-pdim",
        statement: "the B^op-module (0 Lambda^op) has projective dimension exactly 1",
        run: check_extension_pdim,
    },
    CheckSpec {
        id: "14-opposite-pdim-samples",
        statement: "sample non-projective Lambda(q)^op-modules have projective dimension at least 13 and the regular \
                    module has projective dimension 0",
        run: check_opposite_samples,
    },
    CheckSpec {
        id: "15-m-zero",
        statement: "Omega M(0) is isomorphic to M(0)",
        run: check_m_zero,
    },
];

fn iso_evidence(
    key: &str,
    claim: String,
    x: &ModuleRep,
    y: &ModuleRep,
    seed: u64,
    failures: &mut Vec<String>,
    evidence: &mut Vec<Evidence>,
) -> Result<(), VerifyError> {
    match is_isomorphic(x, y, seed)?.witness() {
        Some(w) => evidence.push(Evidence::Isomorphism {
            algebra: key.to_string(),
            claim,
            source: ModulePayload::of(x),
            target: ModulePayload::of(y),
            matrix: w.matrix().clone(),
        }),
        None => failures.push(format!("{claim}: no isomorphism (dims {} and {})", x.dim(), y.dim())),
    }
    Ok(())
}

fn check_algebra(f: &Fixtures) -> Result<Outcome, VerifyError> {
    algebra_outcome(&f.table, f.q())
}

fn algebra_outcome(table: &AlgebraTable, q: &Scalar) -> Result<Outcome, VerifyError> {
    let rep = table.validate();
    let mut failures: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
    let mut relation_failures = None;
    if rep.passed() {
        let alg = Algebra::new(table.clone())?;
        let bad = failing_relations(&alg, q);
        if !bad.is_empty() {
            failures.push(format!("relations fail on the table: {}", bad.join(", ")));
        }
        relation_failures = Some(bad);
        if alg.dim() != 6 || alg.radical().dim() != 5 || alg.radical_power(3).dim() != 0 {
            failures.push(format!(
                "dim {}, radical dim {}, dim J^3 = {}",
                alg.dim(),
                alg.radical().dim(),
                alg.radical_power(3).dim()
            ));
        }
    }
    let evidence = vec![Evidence::Validation {
        algebra: "lambda".into(),
        associativity_triples: rep.associativity_triples,
        violations: rep.violations.iter().map(|v| v.to_string()).collect(),
        relation_failures,
    }];
    let ok = format!("{} associativity triples, all relations hold, dim 6, radical dim 5, J^3 = 0", rep.associativity_triples);
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_omega_shift(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let (mut failures, mut evidence) = (Vec::new(), Vec::new());
    for j in GRID.filter(|&j| j != 0) {
        let a = f.q_pow(j);
        let b = f.q_pow(j + 1);
        let o = syzygy(&f.m(&a)?);
        let claim = format!("Omega {} = {}", m_name(&a), m_name(&b));
        iso_evidence("lambda", claim, &o, &f.m(&b)?, f.opts.seed, &mut failures, &mut evidence)?;
    }
    let ok = format!("{} witnesses", evidence.len());
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_sigma_shift(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let (mut failures, mut evidence) = (Vec::new(), Vec::new());
    for j in GRID.filter(|&j| j != 1) {
        let a = f.q_pow(j);
        let b = f.q_pow(j - 1);
        let s = sigma(&f.m(&a)?)?;
        let claim = format!("Sigma {} = {}", m_name(&a), m_name(&b));
        iso_evidence("lambda", claim, &s, &f.m(&b)?, f.opts.seed, &mut failures, &mut evidence)?;
    }
    let ok = format!("{} witnesses", evidence.len());
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn adjunction_pairs(
    xs: &[(String, ModuleRep)],
    ys: &[(String, ModuleRep)],
    failures: &mut Vec<String>,
) -> Result<Vec<AdjunctionPair>, VerifyError> {
    let mut pairs = Vec::new();
    for (xn, x) in xs {
        let sx = sigma(x)?;
        for (yn, y) in ys {
            let oy = syzygy(y);
            let left = stable_hom(&sx, y)?.quotient_dim();
            let right = stable_hom(x, &oy)?.quotient_dim();
            if left != right {
                failures.push(format!("X = {xn}, Y = {yn}: {left} != {right}"));
            }
            pairs.push(AdjunctionPair {
                x: xn.clone(),
                y: yn.clone(),
                sigma_x: ModulePayload::of(&sx),
                y_module: ModulePayload::of(y),
                x_module: ModulePayload::of(x),
                omega_y: ModulePayload::of(&oy),
                left,
                right,
            });
        }
    }
    Ok(pairs)
}

fn check_adjunction(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let named = |a: Scalar| -> Result<(String, ModuleRep), VerifyError> { Ok((m_name(&a), f.m(&a)?)) };
    let simple = ("S".to_string(), ModuleRep::regular(&f.lambda).top().0);
    let omega_sigma = ("Omega Sigma M(q)".to_string(), syzygy(&sigma(&f.m_q)?));
    let xs = vec![
        named(f.q().clone())?,
        named(Scalar::one())?,
        named(Scalar::zero())?,
        named(f.q_pow(2))?,
        simple.clone(),
    ];
    let ys = vec![named(f.q().clone())?, named(Scalar::zero())?, named(f.q_pow(-1))?, simple, omega_sigma];
    let mut failures = Vec::new();
    let lambda_pairs = adjunction_pairs(&xs, &ys, &mut failures)?;

    let b = &f.extension;
    let s = ("S".to_string(), simple_at_extension_vertex(b));
    let inf = |a: Scalar| -> Result<(String, ModuleRep), VerifyError> {
        Ok((format!("(0 {})", m_name(&a)), inflate(&f.m(&a)?, b)?))
    };
    let bx = vec![s.clone(), inf(f.q().clone())?, inf(Scalar::zero())?];
    let by = vec![s, inf(f.q().clone())?];
    let b_pairs = adjunction_pairs(&bx, &by, &mut failures)?;

    let ok = format!("{} pairs over Lambda, {} over B, all equal", lambda_pairs.len(), b_pairs.len());
    let evidence = vec![
        Evidence::Adjunction { algebra: "lambda".into(), pairs: lambda_pairs },
        Evidence::Adjunction { algebra: "extension".into(), pairs: b_pairs },
    ];
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_omega_sigma(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let os = syzygy(&sigma(&f.m_q)?);
    let t = gamma_generator(&f.gamma)?;
    let rank = os.act_elem(&t).rank();
    let mut failures = Vec::new();
    if os.dim() != 2 || rank != 1 {
        failures.push(format!("dim {}, rank of x {}", os.dim(), rank));
    }
    let evidence = vec![Evidence::GammaFree {
        algebra: "lambda".into(),
        claim: "Omega Sigma M(q) is Gamma-free of rank 1".into(),
        module: ModulePayload::of(&os),
        generator: t,
        rank,
    }];
    Ok(Outcome::from_failures(failures, "dim 2, x acts with rank 1".into(), evidence))
}

fn check_torsionless_quotient(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let tq = torsionless_quotient(&f.m_q)?;
    let mz = RowSpace::new(f.m_q.act(lambda::Z));
    let (by_z, _) = f.m_q.quotient(&mz)?;
    let os = syzygy(&sigma(&f.m_q)?);
    let (mut failures, mut evidence) = (Vec::new(), Vec::new());
    let seed = f.opts.seed;
    iso_evidence("lambda", "torsionless quotient = M(q)/M(q)z".into(), &tq.module, &by_z, seed, &mut failures, &mut evidence)?;
    iso_evidence("lambda", "torsionless quotient = Omega Sigma M(q)".into(), &tq.module, &os, seed, &mut failures, &mut evidence)?;
    let ok = format!("all three are {}-dimensional and isomorphic", tq.module.dim());
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_ext(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let dims = ext_against_algebra(&f.m_q, EXT_DEPTH);
    let failures = if dims.iter().all(|&d| d == 0) { vec![] } else { vec![format!("Ext dimensions {dims:?}")] };
    let evidence = vec![Evidence::Ext {
        algebra: "lambda".into(),
        claim: format!("Ext^i(M(q), Lambda) = 0 for 1 <= i <= {EXT_DEPTH}"),
        module: ModulePayload::of(&f.m_q),
        dims,
    }];
    Ok(Outcome::from_failures(failures, format!("all {EXT_DEPTH} Ext groups vanish"), evidence))
}

fn check_not_torsionless(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let reg = ModuleRep::regular(&f.lambda);
    let homs = hom_space(&f.m_q, &reg)?;
    let eval = Matrix::hstack(f.m_q.dim(), &homs.iter().map(|h| h.matrix()).collect::<Vec<_>>());
    let kernel_dim = eval.kernel_basis().rows();
    let failures = if kernel_dim == 1 { vec![] } else { vec![format!("kernel dimension {kernel_dim}")] };
    let evidence = vec![Evidence::EvaluationKernel {
        algebra: "lambda".into(),
        claim: "the maps M(q) -> Lambda have a 1-dimensional common kernel".into(),
        module: ModulePayload::of(&f.m_q),
        evaluation: eval,
        kernel_dim,
    }];
    Ok(Outcome::from_failures(failures, format!("{} maps to Lambda, common kernel dim 1", homs.len()), evidence))
}

fn certificate_status(certs: &[&Certificate]) -> Status {
    if certs.iter().any(|c| c.is_positive()) {
        Status::Fail
    } else if certs.iter().any(|c| c.is_inconclusive()) {
        Status::Undecided
    } else {
        Status::Pass
    }
}

fn check_parity_chain(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let rows = gamma_parity_report(&f.m_q, f.opts.n_max, &f.gamma)?;
    let mut failures = Vec::new();
    let mut evidence = Vec::new();
    for r in &rows {
        let target = m_name(&f.q_pow(r.n as i32 + 1));
        match &r.omega_iso {
            Some(w) => evidence.push(Evidence::Isomorphism {
                algebra: "lambda".into(),
                claim: format!("Omega^{} M(q) = {target}", r.n),
                source: ModulePayload::of(&r.omega),
                target: ModulePayload::of(w.target()),
                matrix: w.matrix().clone(),
            }),
            None => failures.push(format!("n = {}: Omega^n M(q) is not isomorphic to {target}", r.n)),
        }
        if r.omega.dim() % 2 == 0 {
            failures.push(format!("n = {}: Omega^n M(q) has even dimension {}", r.n, r.omega.dim()));
        }
        if !r.y_is_gamma_free() {
            failures.push(format!("n = {}: Y of dim {} is not Gamma-free (rank {})", r.n, r.y.dim(), r.y_gamma_rank));
        }
        evidence.push(Evidence::Summand {
            algebra: "lambda".into(),
            claim: format!("n = {}", r.n),
            statement: r.certificate.statement(),
            certificate: r.certificate.clone(),
        });
    }
    let certs: Vec<&Certificate> = rows.iter().map(|r| &r.certificate).collect();
    let dims: Vec<String> = rows.iter().map(|r| r.y.dim().to_string()).collect();
    let status = certificate_status(&certs);
    let detail = if !failures.is_empty() {
        failures.join("; ")
    } else if status == Status::Pass {
        format!("parity obstructions for n = 0..={}; dims of Y: {}", f.opts.n_max, dims.join(", "))
    } else {
        certs.iter().map(|c| format!("{}: {}", c.kind(), c.statement())).collect::<Vec<_>>().join("; ")
    };
    let status = if failures.is_empty() { status } else { Status::Fail };
    Ok(Outcome { status, detail, evidence })
}

fn check_tracking(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let (mut failures, mut evidence) = (Vec::new(), Vec::new());
    let mut x = f.m_q.clone();
    let mut dims = Vec::new();
    for n in 0..=TRACK_DEPTH {
        if n > 0 {
            x = syzygy(&x);
        }
        dims.push(x.dim());
        let target = f.q_pow(n as i32 + 1);
        let claim = format!("Omega^{n} M(q) = {}", m_name(&target));
        iso_evidence("lambda", claim, &x, &f.m(&target)?, f.opts.seed, &mut failures, &mut evidence)?;
    }
    let ok = format!("dimension 3 at every step up to n = {TRACK_DEPTH}");
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_dell(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let d = dell_upper(&f.m_q, f.opts.n_max, &f.ctx())?;
    let evidence = d
        .checks
        .iter()
        .map(|c| Evidence::Summand {
            algebra: "lambda".into(),
            claim: format!("n = {}, dim X = {}, dim Y = {}", c.n, c.x.dim(), c.y.dim()),
            statement: c.certificate.statement(),
            certificate: c.certificate.clone(),
        })
        .collect();
    let (status, detail) = match d.outcome {
        DellOutcome::GreaterThan(n) => (Status::Pass, format!("dell M(q) > {n}")),
        DellOutcome::Exactly(n) => (Status::Fail, format!("dell M(q) = {n}")),
        DellOutcome::Undecided(n) => (Status::Undecided, format!("undecided at n = {n}")),
    };
    Ok(Outcome { status, detail, evidence })
}

fn check_transport(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let b = &f.extension;
    let rep = b.algebra().table().validate();
    let mut failures: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
    if b.algebra().dim() != 10 {
        failures.push(format!("dim B = {}", b.algebra().dim()));
    }
    let mut evidence = vec![Evidence::Validation {
        algebra: "extension".into(),
        associativity_triples: rep.associativity_triples,
        violations: rep.violations.iter().map(|v| v.to_string()).collect(),
        relation_failures: None,
    }];
    let mut x = simple_at_extension_vertex(b);
    let mut m = f.m_q.clone();
    for n in 1..=TRANSPORT_DEPTH {
        x = syzygy(&x);
        if n > 1 {
            m = syzygy(&m);
        }
        let claim = format!("Omega^{n} S = (0, Omega^{} M(q))", n - 1);
        iso_evidence("extension", claim, &x, &inflate(&m, b)?, f.opts.seed, &mut failures, &mut evidence)?;
    }
    let ok = format!("{} triples, {} witnesses", rep.associativity_triples, TRANSPORT_DEPTH);
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_extension_pdim(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let x = base_part_over_opposite(&f.extension, &f.extension_op)?;
    let report = pdim_report(&x, PDIM_DEPTH);
    let failures =
        if report.bound == PdimBound::Exactly(1) { vec![] } else { vec![format!("bound {:?}", report.bound)] };
    let evidence = vec![Evidence::Pdim {
        algebra: "extension_op".into(),
        claim: "pdim (0 Lambda^op) = 1".into(),
        module: ModulePayload::of(&x),
        n_max: PDIM_DEPTH,
        report,
    }];
    Ok(Outcome::from_failures(failures, "exactly 1".into(), evidence))
}

/// `Lambda^op / (x - a y) Lambda^op`.
fn cyclic_quotient(op: &Arc<Algebra>, a: &Scalar) -> Result<ModuleRep, VerifyError> {
    let reg = ModuleRep::regular(op);
    let mut g = vec![Scalar::zero(); op.dim()];
    g[lambda::X] = Scalar::one();
    g[lambda::Y] = -a;
    let (_, incl) = reg.submodule_generated(&Matrix::row_vector(g))?;
    Ok(reg.quotient(&incl.image())?.0)
}

fn check_opposite_samples(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let op = &f.lambda_op;
    let mut rng = ChaCha8Rng::seed_from_u64(f.opts.seed);
    let random_a = loop {
        let a = Scalar::from_int(rng.gen_range(-9..=9));
        if !a.is_zero() {
            break a;
        }
    };
    let mut samples: Vec<(String, ModuleRep, bool)> = vec![
        ("simple".into(), ModuleRep::regular(op).top().0, false),
        ("D M(0)".into(), f.m(&Scalar::zero())?.dual_over(op)?, false),
        ("D M(q)".into(), f.m_q.dual_over(op)?, false),
        ("Lambda^op/(x - q y)".into(), cyclic_quotient(op, f.q())?, true),
        (format!("Lambda^op/(x - ({random_a}) y)"), cyclic_quotient(op, &random_a)?, true),
    ];
    let (mut failures, mut evidence, mut parts) = (Vec::new(), Vec::new(), Vec::new());
    let expected = PdimBound::AtLeast(PDIM_DEPTH + 1);
    for (name, m, iterate) in samples.drain(..) {
        let report = if iterate { pdim_by_syzygies(&m, PDIM_DEPTH) } else { pdim_report(&m, PDIM_DEPTH) };
        if report.bound != expected {
            failures.push(format!("{name}: {:?}", report.bound));
        }
        parts.push(format!("{name} (dim {})", m.dim()));
        evidence.push(Evidence::Pdim {
            algebra: "lambda_op".into(),
            claim: format!("pdim {name} >= {}", PDIM_DEPTH + 1),
            module: ModulePayload::of(&m),
            n_max: PDIM_DEPTH,
            report,
        });
    }
    let reg = ModuleRep::regular(op);
    let report = pdim_by_syzygies(&reg, PDIM_DEPTH);
    if report.bound != PdimBound::Exactly(0) {
        failures.push(format!("regular module: {:?}", report.bound));
    }
    evidence.push(Evidence::Pdim {
        algebra: "lambda_op".into(),
        claim: "pdim Lambda^op = 0".into(),
        module: ModulePayload::of(&reg),
        n_max: PDIM_DEPTH,
        report,
    });
    let ok = format!("at least {} for {}; 0 for the regular module", PDIM_DEPTH + 1, parts.join(", "));
    Ok(Outcome::from_failures(failures, ok, evidence))
}

fn check_m_zero(f: &Fixtures) -> Result<Outcome, VerifyError> {
    let m0 = f.m(&Scalar::zero())?;
    let (mut failures, mut evidence) = (Vec::new(), Vec::new());
    iso_evidence("lambda", "Omega M(0) = M(0)".into(), &syzygy(&m0), &m0, f.opts.seed, &mut failures, &mut evidence)?;
    Ok(Outcome::from_failures(failures, "witness found".into(), evidence))
}

fn timed(spec: &CheckSpec, f: &Fixtures) -> Result<CheckRecord, VerifyError> {
    let start = Instant::now();
    let out = (spec.run)(f)?;
    Ok(CheckRecord {
        id: spec.id.to_string(),
        statement: spec.statement.to_string(),
        status: out.status,
        detail: out.detail,
        evidence: out.evidence,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every registered check. Stops after the algebra check if it fails.
pub fn verify_all(opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let q = &opts.q;
    if q.is_zero() || q.has_finite_order() {
        return Err(VerifyError::InvalidQ(q.clone()));
    }
    let mut report = Report::new(Parameters { q: q.clone(), n_max: opts.n_max, seed: opts.seed });
    let table = if opts.corrupt_sign { sign_dropped_table(q) } else { lambda_table(q) };
    report.algebras.insert("lambda".into(), table_to_json(&table));

    let start = Instant::now();
    let out = algebra_outcome(&table, q)?;
    let first = &CHECKS[0];
    report.checks.push(CheckRecord {
        id: first.id.into(),
        statement: first.statement.into(),
        status: out.status,
        detail: out.detail,
        evidence: out.evidence,
        wall_time_ms: start.elapsed().as_millis() as u64,
    });
    if out.status != Status::Pass {
        report.aborted = Some("the table of Lambda(q) failed validation".into());
        return Ok(report);
    }
    let lambda_alg = Algebra::new(table.clone())?;
    let fixtures = Fixtures::build(opts.clone(), table, lambda_alg)?;
    for (key, alg) in [
        ("lambda_op", &fixtures.lambda_op),
        ("extension", fixtures.extension.algebra()),
        ("extension_op", &fixtures.extension_op),
    ] {
        report.algebras.insert(key.into(), table_to_json(alg.table()));
    }
    for spec in &CHECKS[1..] {
        report.checks.push(timed(spec, &fixtures)?);
    }
    report.notes.push(OUT_OF_SCOPE.into());
    let negative = report.checks.iter().flat_map(|c| &c.evidence).any(|e| {
        matches!(e, Evidence::Summand { certificate, .. } if certificate.is_negative())
    });
    if negative {
        report.notes.push(NEGATIVE_DEPENDENCE.into());
    }
    report.sort();
    Ok(report)
}

impl Fixtures {
    fn build(opts: VerifyOptions, table: AlgebraTable, lambda: Arc<Algebra>) -> Result<Self, VerifyError> {
        let lambda_op = lambda.opposite()?;
        let gamma = build_gamma(&lambda)?;
        let m_q = build_m_alpha(&lambda, &opts.q)?;
        let extension = one_point_extension(&lambda, &m_q)?;
        let extension_op = extension.algebra().opposite()?;
        Ok(Fixtures { opts, table, lambda, lambda_op, gamma, m_q, extension, extension_op })
    }
}
