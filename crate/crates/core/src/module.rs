//! Right modules over a finite-dimensional algebra, stored as one action
//! matrix per basis element of the algebra.
//!
//! With row vectors and maps acting on the right, the module axiom reads
//! `rho(b_i) rho(b_j) = sum_l c(i, j, l) rho(b_l)`, and a morphism `X -> Y` is
//! a `dim X x dim Y` matrix `F` with `rho_X(a) F = F rho_Y(a)`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{basis_vec, combine, Algebra, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PolyMatrix, RowSpace, Scalar};

#[derive(Clone, Debug)]
pub struct ModuleRep {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Arc<Vec<Matrix>>,
    labels: Option<Arc<Vec<String>>>,
}

impl ModuleRep {
    /// Builds a module from the action of every basis element and checks the
    /// module axioms.
    pub fn new(algebra: Arc<Algebra>, action: Vec<Matrix>) -> Result<Self> {
        let m = ModuleRep::from_parts(algebra, action)?;
        m.validate()?;
        Ok(m)
    }

    fn from_parts(algebra: Arc<Algebra>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional algebra",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch("action matrices must be square of equal size".into()));
        }
        Ok(ModuleRep { algebra, dim, action: Arc::new(action), labels: None })
    }

    /// Internal constructor for actions that hold by construction (restriction
    /// to invariant subspaces, quotients, sums). Checked in debug builds.
    pub(crate) fn from_trusted(algebra: Arc<Algebra>, action: Vec<Matrix>) -> Self {
        let m = ModuleRep::from_parts(algebra, action).expect("well-shaped action");
        debug_assert!(m.validate().is_ok(), "internal construction broke module axioms");
        m
    }

    /// Completes the action of a generating set of basis elements to the whole
    /// algebra through the structure constants, then validates.
    pub fn from_generator_actions(algebra: Arc<Algebra>, gens: &[(usize, Matrix)]) -> Result<Self> {
        let n = algebra.dim();
        let dim = match gens.first() {
            Some((_, m)) => m.rows(),
            None => {
                if n == 1 {
                    return ModuleRep::new(algebra, vec![Matrix::identity(0)]);
                }
                return Err(Error::InvalidModule("no generator actions given".into()));
            }
        };
        for (i, m) in gens {
            if *i >= n || m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!("bad generator action for basis index {i}")));
            }
        }
        let mut elems: Vec<(Vec<Scalar>, Matrix)> = vec![(algebra.unit().to_vec(), Matrix::identity(dim))];
        let mut span = RowSpace::new(&Matrix::row_vector(algebra.unit().to_vec()));
        let gen_pairs: Vec<(Vec<Scalar>, Matrix)> =
            gens.iter().map(|(i, m)| (basis_vec(n, *i), m.clone())).collect();
        let mut frontier = 0;
        for (v, m) in &gen_pairs {
            if !span.contains(v) {
                span = span.sum(&RowSpace::new(&Matrix::row_vector(v.clone())));
                elems.push((v.clone(), m.clone()));
            }
        }
        while frontier < elems.len() && span.dim() < n {
            let (a, ma) = elems[frontier].clone();
            frontier += 1;
            for (g, mg) in &gen_pairs {
                let prod = algebra.mul(&a, g);
                if !span.contains(&prod) {
                    span = span.sum(&RowSpace::new(&Matrix::row_vector(prod.clone())));
                    elems.push((prod, &ma * mg));
                }
            }
        }
        if span.dim() < n {
            return Err(Error::InvalidModule("given elements do not generate the algebra".into()));
        }
        let vecs = Matrix::from_rows(n, elems.iter().map(|(v, _)| v.clone()).collect());
        let mats: Vec<Matrix> = elems.into_iter().map(|(_, m)| m).collect();
        let coeffs = Matrix::solve_left(&vecs, &Matrix::identity(n)).expect("spanning set");
        let action = (0..n).map(|l| combine(&mats, coeffs.row(l), dim)).collect();
        ModuleRep::new(algebra, action)
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let n = algebra.dim();
        ModuleRep::from_trusted(algebra, vec![Matrix::zeros(0, 0); n])
    }

    /// The right regular module `A_A`.
    pub fn regular(algebra: &Arc<Algebra>) -> Self {
        let action = (0..algebra.dim()).map(|j| algebra.right_mult(j).clone()).collect();
        let mut m = ModuleRep::from_trusted(algebra.clone(), action);
        m.labels = Some(Arc::new(algebra.labels().to_vec()));
        m
    }

    /// `e_i A` for each designated idempotent, as submodules of `A_A`.
    pub fn projective_summands(algebra: &Arc<Algebra>) -> Vec<(usize, ModuleRep)> {
        let reg = ModuleRep::regular(algebra);
        (0..algebra.num_idempotents())
            .map(|i| {
                let (p, _) = reg.submodule(algebra.right_projective(i)).expect("e_i A is a right ideal");
                (i, p)
            })
            .collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "label count");
        self.labels = Some(Arc::new(labels));
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref().map(Vec::as_slice)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn act(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act_elem(&self, a: &[Scalar]) -> Matrix {
        combine(&self.action, a, self.dim)
    }

    /// `v * a` for a module vector `v` and an algebra element `a`.
    pub fn act_vec(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.act_elem(a).apply(v)
    }

    /// Checks `rho(1) = I` and the module axiom on every pair of basis elements.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        if self.act_elem(alg.unit()) != Matrix::identity(self.dim) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = &self.action[i] * &self.action[j];
                let rhs = self.act_elem(alg.product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "rho({}) rho({}) differs from rho of their product",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> bool {
        self.algebra.same_as(&other.algebra)
    }

    /// Rebinds the module to a structurally identical algebra handle.
    pub fn rebind(&self, algebra: &Arc<Algebra>) -> Result<ModuleRep> {
        if !self.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(ModuleRep { algebra: algebra.clone(), ..self.clone() })
    }

    /// `X e_i` as a subspace.
    pub fn idempotent_part(&self, i: usize) -> RowSpace {
        RowSpace::new(&self.act_elem(&self.algebra.idempotents()[i]))
    }

    /// The span of `v * a` over all given vectors `v` and algebra elements `a`.
    pub fn span_times(&self, vectors: &Matrix, elems: &RowSpace) -> RowSpace {
        let mut rows = Vec::new();
        for a in elems.basis().row_iter() {
            let m = self.act_elem(a);
            for v in vectors.row_iter() {
                rows.push(m.apply(v));
            }
        }
        RowSpace::new(&Matrix::from_rows(self.dim, rows))
    }

    /// `M J`.
    pub fn radical_submodule(&self) -> RowSpace {
        self.span_times(&Matrix::identity(self.dim), self.algebra.radical())
    }

    /// Whether a subspace is closed under the action.
    pub fn is_submodule(&self, w: &RowSpace) -> bool {
        self.algebra.generators().iter().all(|g| {
            let m = self.act_elem(g);
            w.basis().row_iter().all(|v| w.contains(&m.apply(v)))
        })
    }

    /// The submodule on an invariant subspace, with its inclusion.
    pub fn submodule(&self, w: &RowSpace) -> Result<(ModuleRep, ModuleMorphism)> {
        if w.ambient() != self.dim {
            return Err(Error::DimensionMismatch("subspace lives in the wrong ambient space".into()));
        }
        if !self.is_submodule(w) {
            return Err(Error::InvalidModule("subspace is not invariant".into()));
        }
        let k = w.dim();
        let b = w.basis();
        let action = self
            .action
            .iter()
            .map(|m| {
                let img = b * m;
                Matrix::from_fn(k, k, |r, c| img[(r, w.pivots()[c])].clone())
            })
            .collect();
        let sub = ModuleRep::from_trusted(self.algebra.clone(), action);
        let inc = ModuleMorphism::new_unchecked(sub.clone(), self.clone(), b.clone());
        Ok((sub, inc))
    }

    /// The submodule generated by the given vectors (rows).
    pub fn submodule_generated(&self, vectors: &Matrix) -> Result<(ModuleRep, ModuleMorphism)> {
        if vectors.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "vectors of length {} in a {}-dimensional module",
                vectors.cols(),
                self.dim
            )));
        }
        let w = self.span_times(vectors, &RowSpace::full(self.algebra.dim()));
        self.submodule(&w)
    }

    /// `M / W` for an invariant subspace `W`, with the canonical projection.
    pub fn quotient(&self, w: &RowSpace) -> Result<(ModuleRep, ModuleMorphism)> {
        if w.ambient() != self.dim {
            return Err(Error::DimensionMismatch("subspace lives in the wrong ambient space".into()));
        }
        if !self.is_submodule(w) {
            return Err(Error::InvalidModule("quotient by a non-invariant subspace".into()));
        }
        let comp = w.complement_indices();
        let q = comp.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = w.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let proj = Matrix::from_rows(q, (0..self.dim).map(|i| project(&basis_vec(self.dim, i))).collect());
        let action = self
            .action
            .iter()
            .map(|m| Matrix::from_rows(q, comp.iter().map(|&c| project(m.row(c))).collect()))
            .collect();
        let quot = ModuleRep::from_trusted(self.algebra.clone(), action);
        let pi = ModuleMorphism::new_unchecked(self.clone(), quot.clone(), proj);
        Ok((quot, pi))
    }

    /// `M / MJ`.
    pub fn top(&self) -> (ModuleRep, ModuleMorphism) {
        self.quotient(&self.radical_submodule()).expect("MJ is a submodule")
    }

    /// Vector-space dual, a right module over the opposite algebra `op`.
    pub fn dual_over(&self, op: &Arc<Algebra>) -> Result<ModuleRep> {
        if op.table() != &self.algebra.table().opposite() {
            return Err(Error::AlgebraMismatch);
        }
        let action = self.action.iter().map(Matrix::transpose).collect();
        Ok(ModuleRep::from_trusted(op.clone(), action))
    }

    pub fn dual(&self) -> Result<ModuleRep> {
        self.dual_over(&self.algebra.opposite()?)
    }

    /// Restriction of scalars along a subalgebra embedding.
    pub fn restrict(&self, emb: &SubalgebraEmbedding) -> Result<ModuleRep> {
        if !self.algebra.same_as(emb.ambient()) {
            return Err(Error::AlgebraMismatch);
        }
        let action = emb.inclusion().row_iter().map(|r| self.act_elem(r)).collect();
        ModuleRep::new(emb.sub().clone(), action)
    }

    pub fn direct_sum(parts: &[ModuleRep]) -> Result<DirectSum> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidModule("empty direct sum needs an algebra; use ModuleRep::zero".into()));
        };
        let alg = first.algebra.clone();
        if parts.iter().any(|p| !p.algebra.same_as(&alg)) {
            return Err(Error::AlgebraMismatch);
        }
        let action = (0..alg.dim())
            .map(|i| Matrix::block_diag(&parts.iter().map(|p| &p.action[i]).collect::<Vec<_>>()))
            .collect();
        let sum = ModuleRep::from_trusted(alg, action);
        let total = sum.dim;
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        let mut off = 0;
        for p in parts {
            let mut inj = Matrix::zeros(p.dim, total);
            inj.set_block(0, off, &Matrix::identity(p.dim));
            injections.push(ModuleMorphism::new_unchecked(p.clone(), sum.clone(), inj.clone()));
            projections.push(ModuleMorphism::new_unchecked(sum.clone(), p.clone(), inj.transpose()));
            off += p.dim;
        }
        Ok(DirectSum { module: sum, injections, projections })
    }

    /// Whether this module (over `k[x]/(x^2)`) is free, by the rank of `x`.
    pub fn gamma_freeness(&self) -> Result<GammaFreeness> {
        let x = dual_numbers_generator(&self.algebra)?;
        let rank = self.act_elem(&x).rank();
        if 2 * rank == self.dim {
            Ok(GammaFreeness::Free { rank })
        } else {
            Ok(GammaFreeness::NotFree { x_rank: rank, dim: self.dim })
        }
    }
}

/// The radical generator `x` of an algebra of shape `k[x]/(x^2)`.
pub fn dual_numbers_generator(alg: &Algebra) -> Result<Vec<Scalar>> {
    if alg.dim() != 2 || !alg.is_local() || alg.radical().dim() != 1 || alg.loewy_length() != 2 {
        return Err(Error::NotDualNumbers(format!(
            "dimension {}, {} idempotent(s), radical dimension {}",
            alg.dim(),
            alg.num_idempotents(),
            alg.radical().dim()
        )));
    }
    Ok(alg.radical().basis().row(0).to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GammaFreeness {
    Free { rank: usize },
    NotFree { x_rank: usize, dim: usize },
}

impl GammaFreeness {
    pub fn is_free(&self) -> bool {
        matches!(self, GammaFreeness::Free { .. })
    }
}

/// `restrict(m, emb)` followed by the freeness test.
pub fn is_gamma_free(m: &ModuleRep, emb: &SubalgebraEmbedding) -> Result<GammaFreeness> {
    m.restrict(emb)?.gamma_freeness()
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: ModuleRep,
    pub injections: Vec<ModuleMorphism>,
    pub projections: Vec<ModuleMorphism>,
}

/// An equivariant linear map between two modules over the same algebra.
#[derive(Clone, Debug)]
pub struct ModuleMorphism {
    source: ModuleRep,
    target: ModuleRep,
    matrix: Matrix,
}

impl ModuleMorphism {
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let f = ModuleMorphism { source, target, matrix };
        if !f.is_equivariant() {
            return Err(Error::InvalidModule("map is not a module homomorphism".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Self {
        let f = ModuleMorphism { source, target, matrix };
        debug_assert!(f.is_equivariant(), "internal morphism is not equivariant");
        f
    }

    pub fn identity(m: &ModuleRep) -> Self {
        ModuleMorphism { source: m.clone(), target: m.clone(), matrix: Matrix::identity(m.dim()) }
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> Self {
        ModuleMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(source.dim(), target.dim()),
        }
    }

    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_equivariant(&self) -> bool {
        let alg = self.source.algebra();
        alg.generators().iter().all(|g| {
            &self.source.act_elem(g) * &self.matrix == &self.matrix * &self.target.act_elem(g)
        })
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMorphism) -> Result<ModuleMorphism> {
        if self.target.dim() != next.source.dim() || !self.target.same_algebra(&next.source) {
            return Err(Error::DimensionMismatch("composition of incompatible maps".into()));
        }
        Ok(ModuleMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: &self.matrix * &next.matrix,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let inv = self.matrix.inverse()?;
        Some(ModuleMorphism { source: self.target.clone(), target: self.source.clone(), matrix: inv })
    }

    pub fn kernel(&self) -> RowSpace {
        RowSpace::new(&self.matrix.kernel_basis())
    }

    pub fn image(&self) -> RowSpace {
        RowSpace::new(&self.matrix)
    }
}

/// Basis of `Hom_A(x, y)`: the solution space of the equivariance system
/// `rho_x(g) F = F rho_y(g)` over a generating set of the algebra.
pub fn hom_space(x: &ModuleRep, y: &ModuleRep) -> Result<Vec<ModuleMorphism>> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    let (nx, ny) = (x.dim(), y.dim());
    let nvars = nx * ny;
    if nvars == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for g in x.algebra().generators() {
        let a = x.act_elem(g);
        let b = y.act_elem(g);
        for r in 0..nx {
            for c in 0..ny {
                let mut eq = vec![Scalar::zero(); nvars];
                for k in 0..nx {
                    let v = &a[(r, k)];
                    if !v.is_zero() {
                        eq[k * ny + c] += v;
                    }
                }
                for k in 0..ny {
                    let v = &b[(k, c)];
                    if !v.is_zero() {
                        eq[r * ny + k] -= v;
                    }
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    let system = Matrix::from_rows(nvars, rows);
    let sol = system.right_kernel_basis();
    Ok(sol
        .row_iter()
        .map(|v| {
            let f = Matrix::from_fn(nx, ny, |r, c| v[r * ny + c].clone());
            ModuleMorphism::new_unchecked(x.clone(), y.clone(), f)
        })
        .collect())
}

/// Linear combination of morphism matrices.
pub fn combine_maps(maps: &[ModuleMorphism], coeffs: &[Scalar]) -> Matrix {
    let (r, c) = maps.first().map_or((0, 0), |m| (m.matrix.rows(), m.matrix.cols()));
    let mut out = Matrix::zeros(r, c);
    for (m, k) in maps.iter().zip(coeffs) {
        out.add_scaled(&m.matrix, k);
    }
    out
}

/// Why two modules are not isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum NonIsoReason {
    DimensionMismatch { source: usize, target: usize },
    /// The determinant of a generic combination of the hom basis expands to
    /// the zero polynomial.
    DeterminantIdenticallyZero { hom_dim: usize, module_dim: usize },
}

#[derive(Clone, Debug)]
pub enum IsoDecision {
    Isomorphic(ModuleMorphism),
    NotIsomorphic(NonIsoReason),
    Inconclusive { hom_dim: usize, module_dim: usize },
}

impl IsoDecision {
    pub fn witness(&self) -> Option<&ModuleMorphism> {
        match self {
            IsoDecision::Isomorphic(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoDecision::Isomorphic(_))
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoDecision::NotIsomorphic(_))
    }
}

/// Largest hom dimension for which the generic determinant is expanded.
pub const ISO_SYMBOLIC_MAX_HOM: usize = 6;
/// Largest module dimension for which the generic determinant is expanded.
pub const ISO_SYMBOLIC_MAX_DIM: usize = 12;

/// Decides whether `x` and `y` are isomorphic, returning an explicit witness
/// when they are. Negative answers come only from dimension counts or the
/// full expansion of the generic determinant.
pub fn is_isomorphic(x: &ModuleRep, y: &ModuleRep, seed: u64) -> Result<IsoDecision> {
    if !x.same_algebra(y) {
        return Err(Error::AlgebraMismatch);
    }
    if x.dim() != y.dim() {
        return Ok(IsoDecision::NotIsomorphic(NonIsoReason::DimensionMismatch {
            source: x.dim(),
            target: y.dim(),
        }));
    }
    let n = x.dim();
    if n == 0 {
        return Ok(IsoDecision::Isomorphic(ModuleMorphism::zero(x, y)));
    }
    let homs = hom_space(x, y)?;
    let h = homs.len();
    if let Some(f) = homs.iter().find(|f| f.is_iso()) {
        return Ok(IsoDecision::Isomorphic(f.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8 {
        let coeffs: Vec<Scalar> = (0..h).map(|_| Scalar::from_int(rng.gen_range(-7..=7))).collect();
        let m = combine_maps(&homs, &coeffs);
        if m.is_invertible() {
            return Ok(IsoDecision::Isomorphic(ModuleMorphism::new_unchecked(x.clone(), y.clone(), m)));
        }
    }
    if h > ISO_SYMBOLIC_MAX_HOM || n > ISO_SYMBOLIC_MAX_DIM {
        return Ok(IsoDecision::Inconclusive { hom_dim: h, module_dim: n });
    }
    let mats: Vec<Matrix> = homs.iter().map(|f| f.matrix.clone()).collect();
    let det = PolyMatrix::linear_combination(n, &mats).determinant(h);
    match det.nonvanishing_point() {
        None => Ok(IsoDecision::NotIsomorphic(NonIsoReason::DeterminantIdenticallyZero {
            hom_dim: h,
            module_dim: n,
        })),
        Some(pt) => {
            let m = combine_maps(&homs, &pt);
            debug_assert!(m.is_invertible());
            Ok(IsoDecision::Isomorphic(ModuleMorphism::new_unchecked(x.clone(), y.clone(), m)))
        }
    }
}

/// `M(alpha)` over `Lambda(q)`: basis `v, v', v''` with `v x = alpha v'`,
/// `v y = v'`, `v z = v''`, and `v', v''` annihilated by `x, y, z`.
pub fn build_m_alpha(lambda_alg: &Arc<Algebra>, alpha: &Scalar) -> Result<ModuleRep> {
    let idx = |l: &str| {
        lambda_alg
            .label_index(l)
            .ok_or_else(|| Error::InvalidModule(format!("algebra has no basis element {l}")))
    };
    let (x, y, z) = (idx("x")?, idx("y")?, idx("z")?);
    let single = |col: usize, val: Scalar| {
        let mut m = Matrix::zeros(3, 3);
        m[(0, col)] = val;
        m
    };
    let gens = vec![(x, single(1, alpha.clone())), (y, single(1, Scalar::one())), (z, single(2, Scalar::one()))];
    Ok(ModuleRep::from_generator_actions(lambda_alg.clone(), &gens)?.with_labels(vec![
        "v".into(),
        "v'".into(),
        "v''".into(),
    ]))
}

/// If `m` is a cyclic three-dimensional module of the shape of `M(beta)` over
/// `Lambda(q)`, returns the candidate `beta` read off from a generator `v` via
/// `v x = beta (v y)`. The caller confirms with [`is_isomorphic`].
pub fn m_alpha_parameter(m: &ModuleRep) -> Option<Scalar> {
    let alg = m.algebra();
    let (x, y, z) = (alg.label_index("x")?, alg.label_index("y")?, alg.label_index("z")?);
    if m.dim() != 3 {
        return None;
    }
    let rad = m.radical_submodule();
    if rad.dim() != 2 {
        return None;
    }
    let v = basis_vec(3, rad.complement_indices()[0]);
    let vx = m.act(x).apply(&v);
    let vy = m.act(y).apply(&v);
    let vz = m.act(z).apply(&v);
    let p = vy.iter().position(|c| !c.is_zero())?;
    let beta = &vx[p] / &vy[p];
    let consistent = vx.iter().zip(&vy).all(|(a, b)| *a == &beta * b);
    let independent = Matrix::from_rows(3, vec![vy, vz]).rank() == 2;
    (consistent && independent).then_some(beta)
}
