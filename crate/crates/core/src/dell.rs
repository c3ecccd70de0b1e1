//! Stable homomorphisms, stable direct summands and bounds on the delooping
//! level.
//!
//! `dell M <= n` iff `Omega^n M` is a stable direct summand of
//! `Omega^{n+1} Sigma^{n+1} Omega^n M` (Gélinas' criterion). Every answer
//! carries a [`Certificate`] that can be re-checked from its payload.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::homological::{omega_n, projective_cover, sigma_n, syzygy};
use crate::linalg::{Matrix, PolyMatrix, RowSpace, Scalar};
use crate::module::{build_m_alpha, hom_space, is_isomorphic, m_alpha_parameter, ModuleMorphism, ModuleRep};

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

fn unflatten(v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone())
}

/// `Hom(X, Y)` modulo maps factoring through a projective.
#[derive(Clone, Debug)]
pub struct StableHom {
    source: ModuleRep,
    target: ModuleRep,
    pub total: Vec<ModuleMorphism>,
    pub projectively_trivial: Vec<ModuleMorphism>,
    /// Representatives of a basis of the quotient, drawn from `total`.
    pub quotient_basis: Vec<ModuleMorphism>,
    /// Rows: trivial basis then quotient representatives, flattened.
    adapted: Matrix,
}

/// Maps `X -> Y` factoring through the projective cover of `Y`.
pub fn trivial_via_cover(x: &ModuleRep, y: &ModuleRep) -> Result<RowSpace> {
    let cover = projective_cover(y);
    let lifts = hom_space(x, cover.projective.module())?;
    let rows: Vec<Vec<Scalar>> = lifts.iter().map(|h| flatten(&(h.matrix() * cover.pi.matrix()))).collect();
    Ok(RowSpace::new(&Matrix::from_rows(x.dim() * y.dim(), rows)))
}

/// Maps `X -> Y` of the form `v |-> y phi(v)` with `phi: X -> A` and `y` in
/// `Y`; these span the maps factoring through free modules.
pub fn trivial_via_free(x: &ModuleRep, y: &ModuleRep) -> Result<RowSpace> {
    let reg = ModuleRep::regular(x.algebra());
    let phis = hom_space(x, &reg)?;
    let (nx, ny) = (x.dim(), y.dim());
    let mut rows = Vec::new();
    for phi in &phis {
        for k in 0..ny {
            let f = Matrix::from_fn(nx, ny, |r, c| {
                (0..reg.dim())
                    .filter(|&l| !phi.matrix()[(r, l)].is_zero())
                    .map(|l| &phi.matrix()[(r, l)] * &y.act(l)[(k, c)])
                    .sum()
            });
            rows.push(flatten(&f));
        }
    }
    Ok(RowSpace::new(&Matrix::from_rows(nx * ny, rows)))
}

pub fn stable_hom(x: &ModuleRep, y: &ModuleRep) -> Result<StableHom> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    let (nx, ny) = (x.dim(), y.dim());
    let total = hom_space(x, y)?;
    let trivial = trivial_via_cover(x, y)?;
    let mut span = trivial.clone();
    let mut quotient_basis = Vec::new();
    for f in &total {
        let v = flatten(f.matrix());
        if !span.contains(&v) {
            span = span.sum(&RowSpace::new(&Matrix::row_vector(v)));
            quotient_basis.push(f.clone());
        }
    }
    let projectively_trivial = trivial
        .basis()
        .row_iter()
        .map(|v| ModuleMorphism::new_unchecked(x.clone(), y.clone(), unflatten(v, nx, ny)))
        .collect();
    let q = Matrix::from_rows(nx * ny, quotient_basis.iter().map(|f: &ModuleMorphism| flatten(f.matrix())).collect());
    let adapted = Matrix::vstack(nx * ny, &[trivial.basis(), &q]);
    Ok(StableHom { source: x.clone(), target: y.clone(), total, projectively_trivial, quotient_basis, adapted })
}

impl StableHom {
    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_basis.len()
    }

    pub fn trivial_dim(&self) -> usize {
        self.projectively_trivial.len()
    }

    /// Coordinates of the classes of the given maps (one per row of the
    /// result) in the quotient basis.
    pub fn class_coords(&self, maps: &[Matrix]) -> Matrix {
        let k = self.quotient_dim();
        let width = self.source.dim() * self.target.dim();
        let rhs = Matrix::from_rows(width, maps.iter().map(flatten).collect());
        let sol = Matrix::solve_left(&self.adapted, &rhs).expect("map lies in the hom space");
        sol.select_cols(&((self.trivial_dim()..self.trivial_dim() + k).collect::<Vec<_>>()))
    }

    pub fn is_trivial(&self, f: &Matrix) -> bool {
        self.class_coords(std::slice::from_ref(f)).is_zero()
    }
}

/// A lift of `f: X -> Y` along the projective cover of `Y`, if one exists.
pub fn lift_through_cover(f: &ModuleMorphism) -> Result<Option<Matrix>> {
    let (x, y) = (f.source(), f.target());
    let cover = projective_cover(y);
    let lifts = hom_space(x, cover.projective.module())?;
    let width = x.dim() * y.dim();
    let a = Matrix::from_rows(width, lifts.iter().map(|h| flatten(&(h.matrix() * cover.pi.matrix()))).collect());
    Ok(Matrix::solve_left(&a, &Matrix::row_vector(flatten(f.matrix()))).map(|c| {
        let mut l = Matrix::zeros(x.dim(), cover.projective.dim());
        for (h, k) in lifts.iter().zip(c.row(0)) {
            l.add_scaled(h.matrix(), k);
        }
        l
    }))
}

/// Matrix of `r |-> r u` on stable `End(X)` in the quotient basis.
fn stable_left_mult(end: &StableHom, u: &Matrix) -> Matrix {
    let prods: Vec<Matrix> = end.quotient_basis.iter().map(|r| r.matrix() * u).collect();
    end.class_coords(&prods)
}

/// Whether `u: X -> X` is a unit of the stable endomorphism ring.
pub fn is_stable_unit(end: &StableHom, u: &Matrix) -> bool {
    stable_left_mult(end, u).is_invertible()
}

/// Serializable module data: the full action on each algebra basis element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePayload {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl ModulePayload {
    pub fn of(m: &ModuleRep) -> Self {
        ModulePayload { dim: m.dim(), action: m.actions().to_vec() }
    }

    pub fn load(&self, alg: &Arc<Algebra>) -> Result<ModuleRep> {
        let action = self
            .action
            .iter()
            .map(|a| a.clone().with_shape(self.dim, self.dim))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::DimensionMismatch("payload action has the wrong shape".into()))?;
        if self.dim == 0 {
            return Ok(ModuleRep::zero(alg.clone()));
        }
        ModuleRep::new(alg.clone(), action)
    }
}

/// Evidence for or against "`X` is a stable direct summand of `Y`".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `phi: X -> Y`, `psi: Y -> X` with `phi psi` a unit of stable `End(X)`.
    Witness { x: ModulePayload, y: ModulePayload, phi: Matrix, psi: Matrix },
    /// `dim X` is odd while `Y` and `A` are free over `k[t]/(t^2)` embedded
    /// as `1, t`; so every summand of `Y (+) P` has even dimension.
    ParityObstruction {
        x: ModulePayload,
        y_dim: usize,
        /// The element `t` of `A`.
        gamma_generator: Vec<Scalar>,
        /// The action of `t` on `Y`, i.e. `Y` restricted to `k[t]/(t^2)`.
        #[serde(with = "crate::linalg::sparse")]
        y_gamma_action: Matrix,
        y_gamma_rank: usize,
        algebra_gamma_rank: usize,
    },
    /// The determinant of `r |-> r (sum s_i phi_i)(sum t_j psi_j)` on stable
    /// `End(X)` expands to the zero polynomial.
    SymbolicZero {
        x: ModulePayload,
        y: ModulePayload,
        phi_count: usize,
        psi_count: usize,
        stable_end_dim: usize,
    },
    Inconclusive { reason: String },
}

impl Certificate {
    pub fn is_positive(&self) -> bool {
        matches!(self, Certificate::Witness { .. })
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Certificate::ParityObstruction { .. } | Certificate::SymbolicZero { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Certificate::Inconclusive { .. })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Witness { .. } => "witness",
            Certificate::ParityObstruction { .. } => "parity-obstruction",
            Certificate::SymbolicZero { .. } => "symbolic-zero",
            Certificate::Inconclusive { .. } => "inconclusive",
        }
    }

    /// The statement the certificate proves.
    pub fn statement(&self) -> String {
        let dims = |x: &ModulePayload, y: &ModulePayload| (x.dim, y.dim);
        match self {
            Certificate::Witness { x, y, .. } => {
                let (a, b) = dims(x, y);
                format!("the {a}-dimensional X is a stable direct summand of the {b}-dimensional Y")
            }
            Certificate::ParityObstruction { x, y_dim, .. } => {
                format!("the {}-dimensional X is not a stable direct summand of the {y_dim}-dimensional Y", x.dim)
            }
            Certificate::SymbolicZero { x, y, .. } => {
                let (a, b) = dims(x, y);
                format!("the {a}-dimensional X is not a stable direct summand of the {b}-dimensional Y")
            }
            Certificate::Inconclusive { reason } => format!("nothing proved: {reason}"),
        }
    }

    /// Re-checks the certificate from its payload. Inconclusive
    /// certificates replay trivially.
    pub fn replay(&self, alg: &Arc<Algebra>) -> Result<bool> {
        match self {
            Certificate::Witness { x, y, phi, psi } => {
                let (x, y) = (x.load(alg)?, y.load(alg)?);
                let (Some(phi), Some(psi)) =
                    (phi.clone().with_shape(x.dim(), y.dim()), psi.clone().with_shape(y.dim(), x.dim()))
                else {
                    return Ok(false);
                };
                let Ok(phi) = ModuleMorphism::new(x.clone(), y.clone(), phi) else {
                    return Ok(false);
                };
                let Ok(psi) = ModuleMorphism::new(y, x.clone(), psi) else {
                    return Ok(false);
                };
                let end = stable_hom(&x, &x)?;
                Ok(is_stable_unit(&end, &(phi.matrix() * psi.matrix())))
            }
            Certificate::ParityObstruction {
                x,
                y_dim,
                gamma_generator,
                y_gamma_action,
                y_gamma_rank,
                algebra_gamma_rank,
            } => {
                let x = x.load(alg)?;
                if gamma_generator.len() != alg.dim() || y_gamma_action.rows() != *y_dim || !y_gamma_action.is_square() {
                    return Ok(false);
                }
                let t = gamma_generator;
                let square_zero = alg.mul(t, t).iter().all(Scalar::is_zero);
                let nonzero = t.iter().any(|c| !c.is_zero());
                let ry = y_gamma_action.rank();
                let ra = alg.right_mult_by(t).rank();
                Ok(square_zero
                    && nonzero
                    && (y_gamma_action * y_gamma_action).is_zero()
                    && x.dim() % 2 == 1
                    && ry == *y_gamma_rank
                    && 2 * ry == *y_dim
                    && ra == *algebra_gamma_rank
                    && 2 * ra == alg.dim())
            }
            Certificate::SymbolicZero { x, y, phi_count, psi_count, stable_end_dim } => {
                let (x, y) = (x.load(alg)?, y.load(alg)?);
                let data = SymbolicData::new(&x, &y)?;
                if data.phi.quotient_dim() != *phi_count
                    || data.psi.quotient_dim() != *psi_count
                    || data.end.quotient_dim() != *stable_end_dim
                {
                    return Ok(false);
                }
                Ok(data.determinant().is_zero())
            }
            Certificate::Inconclusive { .. } => Ok(true),
        }
    }
}

/// Bounds for [`is_stable_summand`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    pub random_trials: usize,
    /// Cap on `dim stable Hom(X, Y) + dim stable Hom(Y, X)`.
    pub max_variables: usize,
    /// Cap on `dim stable End(X)`.
    pub max_stable_end_dim: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { random_trials: 16, max_variables: 12, max_stable_end_dim: 16 }
    }
}

/// Context for summand decisions: optional dual-numbers subalgebra enabling
/// the parity shortcut, a seed and effort bounds.
#[derive(Clone, Copy, Debug)]
pub struct SummandContext<'a> {
    pub gamma: Option<&'a SubalgebraEmbedding>,
    pub seed: u64,
    pub effort: Effort,
}

impl<'a> SummandContext<'a> {
    pub fn new(gamma: Option<&'a SubalgebraEmbedding>, seed: u64) -> Self {
        SummandContext { gamma, seed, effort: Effort::default() }
    }
}

/// The generator `t` of an embedded `k[t]/(t^2)`, in ambient coordinates.
/// The image of the generator of the dual numbers.
pub fn gamma_generator(emb: &SubalgebraEmbedding) -> Result<Vec<Scalar>> {
    let t = crate::module::dual_numbers_generator(emb.sub())?;
    Ok(emb.inclusion().apply(&t))
}

/// The parity shortcut alone: a parity obstruction when it applies, else
/// inconclusive.
pub fn parity_certificate(x: &ModuleRep, y: &ModuleRep, emb: &SubalgebraEmbedding) -> Result<Certificate> {
    if !emb.ambient().same_as(x.algebra()) || !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    let t = gamma_generator(emb)?;
    let alg = x.algebra();
    let ty = y.act_elem(&t);
    let ry = ty.rank();
    let ra = alg.right_mult_by(&t).rank();
    if x.dim() % 2 == 1 && 2 * ry == y.dim() && 2 * ra == alg.dim() {
        return Ok(Certificate::ParityObstruction {
            x: ModulePayload::of(x),
            y_dim: y.dim(),
            gamma_generator: t,
            y_gamma_action: ty,
            y_gamma_rank: ry,
            algebra_gamma_rank: ra,
        });
    }
    let why = if x.dim().is_multiple_of(2) {
        format!("dim X = {} is even", x.dim())
    } else if 2 * ry != y.dim() {
        format!("Y is not free over the dual numbers (rank {ry}, dim {})", y.dim())
    } else {
        "the algebra is not free over the dual numbers".to_string()
    };
    Ok(Certificate::Inconclusive { reason: format!("parity argument unavailable: {why}") })
}

struct SymbolicData {
    x: ModuleRep,
    y: ModuleRep,
    phi: StableHom,
    psi: StableHom,
    end: StableHom,
}

impl SymbolicData {
    fn new(x: &ModuleRep, y: &ModuleRep) -> Result<Self> {
        Ok(SymbolicData {
            x: x.clone(),
            y: y.clone(),
            phi: stable_hom(x, y)?,
            psi: stable_hom(y, x)?,
            end: stable_hom(x, x)?,
        })
    }

    fn pair_matrices(&self) -> Vec<Vec<Matrix>> {
        self.phi
            .quotient_basis
            .iter()
            .map(|f| {
                self.psi
                    .quotient_basis
                    .iter()
                    .map(|g| stable_left_mult(&self.end, &(f.matrix() * g.matrix())))
                    .collect()
            })
            .collect()
    }

    fn determinant(&self) -> crate::linalg::Poly {
        let (ns, nt, k) = (self.phi.quotient_dim(), self.psi.quotient_dim(), self.end.quotient_dim());
        PolyMatrix::bilinear_combination(k, ns, nt, &self.pair_matrices()).determinant(ns + nt)
    }

    fn witness(&self, phi: Matrix, psi: Matrix) -> Certificate {
        Certificate::Witness { x: ModulePayload::of(&self.x), y: ModulePayload::of(&self.y), phi, psi }
    }
}

fn combination(maps: &[ModuleMorphism], coeffs: &[Scalar], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (f, c) in maps.iter().zip(coeffs) {
        out.add_scaled(f.matrix(), c);
    }
    out
}

/// Decides whether `X` is a stable direct summand of `Y`: parity shortcut,
/// then seeded random search for a witness, then symbolic expansion, else
/// inconclusive. Negative answers are never drawn from sampling.
pub fn is_stable_summand(x: &ModuleRep, y: &ModuleRep, ctx: &SummandContext) -> Result<Certificate> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    if let Some(emb) = ctx.gamma {
        let c = parity_certificate(x, y, emb)?;
        if c.is_negative() {
            return Ok(c);
        }
    }
    let data = SymbolicData::new(x, y)?;
    let (nx, ny) = (x.dim(), y.dim());
    let (ns, nt, k) = (data.phi.quotient_dim(), data.psi.quotient_dim(), data.end.quotient_dim());
    if k == 0 {
        return Ok(data.witness(Matrix::zeros(nx, ny), Matrix::zeros(ny, nx)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    if ns > 0 && nt > 0 {
        for _ in 0..ctx.effort.random_trials {
            let s: Vec<Scalar> = (0..ns).map(|_| Scalar::from_int(rng.gen_range(-5..=5))).collect();
            let t: Vec<Scalar> = (0..nt).map(|_| Scalar::from_int(rng.gen_range(-5..=5))).collect();
            let phi = combination(&data.phi.quotient_basis, &s, nx, ny);
            let psi = combination(&data.psi.quotient_basis, &t, ny, nx);
            if is_stable_unit(&data.end, &(&phi * &psi)) {
                return Ok(data.witness(phi, psi));
            }
        }
    }
    if ns + nt > ctx.effort.max_variables || k > ctx.effort.max_stable_end_dim {
        return Ok(Certificate::Inconclusive {
            reason: format!(
                "symbolic expansion over {} variables on a {k}-dimensional stable End exceeds the effort bound",
                ns + nt
            ),
        });
    }
    let det = data.determinant();
    match det.nonvanishing_point() {
        None => Ok(Certificate::SymbolicZero {
            x: ModulePayload::of(x),
            y: ModulePayload::of(y),
            phi_count: ns,
            psi_count: nt,
            stable_end_dim: k,
        }),
        Some(pt) => {
            let phi = combination(&data.phi.quotient_basis, &pt[..ns], nx, ny);
            let psi = combination(&data.psi.quotient_basis, &pt[ns..], ny, nx);
            debug_assert!(is_stable_unit(&data.end, &(&phi * &psi)));
            Ok(data.witness(phi, psi))
        }
    }
}

/// The symbolic decision alone, without the parity shortcut or sampling.
pub fn symbolic_decision(x: &ModuleRep, y: &ModuleRep, effort: &Effort) -> Result<Certificate> {
    let ctx = SummandContext { gamma: None, seed: 0, effort: Effort { random_trials: 0, ..*effort } };
    is_stable_summand(x, y, &ctx)
}

/// Negative delooping answers rest on this equivalence.
pub const NEGATIVE_DEPENDENCE: &str = "negative answers rely on Gélinas' criterion: dell M <= n iff Omega^n M is a \
stable direct summand of Omega^(n+1) Sigma^(n+1) Omega^n M, so only this canonical choice of N is decided";

#[derive(Clone, Debug)]
pub struct GelinasCheck {
    pub n: usize,
    /// `Omega^n M`.
    pub x: ModuleRep,
    /// `Omega^{n+1} Sigma^{n+1} Omega^n M`.
    pub y: ModuleRep,
    pub certificate: Certificate,
}

/// Is `Omega^n M` a stable summand of `Omega^{n+1} Sigma^{n+1} Omega^n M`?
/// Positive proves `dell M <= n`, negative proves `dell M > n`.
pub fn gelinas_check(m: &ModuleRep, n: usize, ctx: &SummandContext) -> Result<GelinasCheck> {
    gelinas_check_from(omega_n(m, n), n, ctx)
}

fn gelinas_check_from(x: ModuleRep, n: usize, ctx: &SummandContext) -> Result<GelinasCheck> {
    let y = omega_n(&sigma_n(&x, n + 1)?, n + 1);
    let certificate = is_stable_summand(&x, &y, ctx)?;
    Ok(GelinasCheck { n, x, y, certificate })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DellOutcome {
    Exactly(usize),
    GreaterThan(usize),
    /// Inconclusive at this `n`; never read as negative.
    Undecided(usize),
}

#[derive(Clone, Debug)]
pub struct DellUpper {
    pub outcome: DellOutcome,
    pub checks: Vec<GelinasCheck>,
}

impl DellUpper {
    /// Caveat attached to reports containing negative certificates.
    pub fn note(&self) -> Option<&'static str> {
        self.checks.iter().any(|c| c.certificate.is_negative()).then_some(NEGATIVE_DEPENDENCE)
    }
}

/// Scans `n = 0..=n_max` and stops at the first positive or inconclusive
/// check.
pub fn dell_upper(m: &ModuleRep, n_max: usize, ctx: &SummandContext) -> Result<DellUpper> {
    let mut checks = Vec::new();
    let mut x = m.clone();
    for n in 0..=n_max {
        if n > 0 {
            x = syzygy(&x);
        }
        let check = gelinas_check_from(x.clone(), n, ctx)?;
        let cert = check.certificate.clone();
        checks.push(check);
        if cert.is_positive() {
            return Ok(DellUpper { outcome: DellOutcome::Exactly(n), checks });
        }
        if cert.is_inconclusive() {
            return Ok(DellUpper { outcome: DellOutcome::Undecided(n), checks });
        }
    }
    Ok(DellUpper { outcome: DellOutcome::GreaterThan(n_max), checks })
}

/// `dell_upper` of every simple module; the algebra bound is the worst case.
pub fn dell_upper_of_algebra(alg: &Arc<Algebra>, n_max: usize, ctx: &SummandContext) -> Result<Vec<DellUpper>> {
    ModuleRep::projective_summands(alg)
        .into_iter()
        .map(|(_, p)| dell_upper(&p.top().0, n_max, ctx))
        .collect()
}

#[derive(Clone, Debug)]
pub struct ParityRow {
    pub n: usize,
    /// `Omega^n M`.
    pub omega: ModuleRep,
    /// Isomorphism `Omega^n M -> M(alpha q^n)` when `M = M(alpha)`.
    pub omega_iso: Option<ModuleMorphism>,
    /// `Omega^n (Omega Sigma M)`.
    pub y: ModuleRep,
    pub y_gamma_rank: usize,
    pub certificate: Certificate,
}

impl ParityRow {
    pub fn y_is_gamma_free(&self) -> bool {
        2 * self.y_gamma_rank == self.y.dim()
    }
}

/// For `n = 0..=n_max`: `Omega^n M`, its identification with `M(alpha q^n)`
/// when `M = M(alpha)`, freeness of `Omega^n(Omega Sigma M)` over the
/// dual-numbers subalgebra, and the resulting parity certificate.
pub fn gamma_parity_report(m: &ModuleRep, n_max: usize, emb: &SubalgebraEmbedding) -> Result<Vec<ParityRow>> {
    let alg = m.algebra().clone();
    let t = gamma_generator(emb)?;
    let alpha = m_alpha_parameter(m);
    let q = alg.param("q").cloned();
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut omega = m.clone();
    let mut y = syzygy(&crate::homological::sigma(m)?);
    for n in 0..=n_max {
        if n > 0 {
            omega = syzygy(&omega);
            y = syzygy(&y);
        }
        let omega_iso = match (&alpha, &q) {
            (Some(a), Some(q)) => {
                let target = build_m_alpha(&alg, &(a * &q.pow(n as i32).expect("q is nonzero")))?;
                is_isomorphic(&omega, &target, n as u64)?.witness().cloned()
            }
            _ => None,
        };
        let certificate = parity_certificate(&omega, &y, emb)?;
        rows.push(ParityRow {
            n,
            omega: omega.clone(),
            omega_iso,
            y: y.clone(),
            y_gamma_rank: y.act_elem(&t).rank(),
            certificate,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_dual_numbers, build_gamma, build_lambda};
    use crate::homological::sigma;

    fn lam() -> Arc<Algebra> {
        build_lambda(&Scalar::from_int(2)).unwrap()
    }

    fn m(l: &Arc<Algebra>, a: i64) -> ModuleRep {
        build_m_alpha(l, &Scalar::from_int(a)).unwrap()
    }

    #[test]
    fn stable_hom_basics() {
        let l = lam();
        let reg = ModuleRep::regular(&l);
        let m2 = m(&l, 2);
        assert_eq!(stable_hom(&reg, &m2).unwrap().quotient_dim(), 0);
        let e = stable_hom(&m2, &m2).unwrap();
        assert!(e.quotient_dim() >= 1);
        assert!(!e.is_trivial(&Matrix::identity(3)));
    }

    #[test]
    fn trivial_routes_agree() {
        let l = lam();
        let s = ModuleRep::regular(&l).top().0;
        let mods = [m(&l, 2), m(&l, 0), m(&l, 1), s, ModuleRep::regular(&l)];
        for x in &mods {
            for y in &mods {
                assert_eq!(trivial_via_cover(x, y).unwrap(), trivial_via_free(x, y).unwrap());
            }
        }
    }

    #[test]
    fn lifts_exist_exactly_for_trivial_maps() {
        let l = lam();
        let m2 = m(&l, 2);
        let h = stable_hom(&m2, &m2).unwrap();
        for f in &h.projectively_trivial {
            assert!(lift_through_cover(f).unwrap().is_some());
        }
        assert!(lift_through_cover(&ModuleMorphism::identity(&m2)).unwrap().is_none());
    }

    #[test]
    fn summand_of_direct_sum() {
        let l = lam();
        let (a, b) = (m(&l, 2), m(&l, 0));
        let sum = ModuleRep::direct_sum(&[a.clone(), b]).unwrap().module;
        let c = is_stable_summand(&a, &sum, &SummandContext::new(None, 0)).unwrap();
        assert!(c.is_positive());
        assert!(c.replay(&l).unwrap());
    }

    #[test]
    fn simple_is_not_a_summand_of_a_projective() {
        let l = lam();
        let s = ModuleRep::regular(&l).top().0;
        let c = is_stable_summand(&s, &ModuleRep::regular(&l), &SummandContext::new(None, 0)).unwrap();
        assert!(matches!(c, Certificate::SymbolicZero { .. }));
        assert!(c.replay(&l).unwrap());
    }

    #[test]
    fn parity_and_symbolic_agree() {
        let l = lam();
        let g = build_gamma(&l).unwrap();
        let mq = m(&l, 2);
        let y = omega_n(&sigma(&mq).unwrap(), 2);
        let x = m(&l, 8);
        let p = is_stable_summand(&x, &y, &SummandContext::new(Some(&g), 0)).unwrap();
        assert_eq!(p.kind(), "parity-obstruction");
        assert!(p.replay(&l).unwrap());
        let s = symbolic_decision(&x, &y, &Effort::default()).unwrap();
        assert!(s.is_negative(), "{s:?}");
        // a non-free Y defeats the parity argument
        assert!(parity_certificate(&x, &mq, &g).unwrap().is_inconclusive());
    }

    #[test]
    fn dual_numbers_simple_has_dell_zero() {
        let d = build_dual_numbers();
        let s = ModuleRep::regular(&d).top().0;
        let ctx = SummandContext::new(None, 0);
        let g = gelinas_check(&s, 0, &ctx).unwrap();
        assert!(g.certificate.is_positive());
        assert_eq!(dell_upper(&s, 3, &ctx).unwrap().outcome, DellOutcome::Exactly(0));
        let reg = ModuleRep::regular(&lam());
        assert_eq!(dell_upper(&reg, 0, &ctx).unwrap().outcome, DellOutcome::Exactly(0));
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let l = lam();
        let (a, b) = (m(&l, 2), m(&l, 0));
        let sum = ModuleRep::direct_sum(&[a.clone(), b]).unwrap().module;
        let mut c = is_stable_summand(&a, &sum, &SummandContext::new(None, 0)).unwrap();
        if let Certificate::Witness { phi, .. } = &mut c {
            *phi = Matrix::zeros(phi.rows(), phi.cols());
        }
        assert!(!c.replay(&l).unwrap());
    }
}
