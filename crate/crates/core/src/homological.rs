//! Projective covers, syzygies, minimal presentations, the transpose `Tr`,
//! the left adjoint `Sigma = Tr Omega Tr` of `Omega`, maximal torsionless
//! quotients, `Ext^i(M, A)` and bounded projective dimension.
//!
//! Maps between sums of indecomposable projectives are carried by
//! [`ProjMatrix`]: with `Hom(e_i A, e_j A) = e_j A e_i`, entry `(r, c)` is an
//! element of `e_{col} A e_{row}` acting by left multiplication.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace, Scalar};
use crate::module::{hom_space, ModuleMorphism, ModuleRep};

/// The projective module `e_{t_1} A (+) ... (+) e_{t_m} A`, whose basis is
/// the concatenation of the echelon bases of the `e_{t_c} A`.
#[derive(Clone, Debug)]
pub struct ProjectiveSum {
    types: Vec<usize>,
    offsets: Vec<usize>,
    module: ModuleRep,
}

impl ProjectiveSum {
    pub fn new(algebra: &Arc<Algebra>, types: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(types.len());
        let mut off = 0;
        for &t in &types {
            offsets.push(off);
            off += algebra.right_projective(t).dim();
        }
        let action = (0..algebra.dim())
            .map(|b| {
                let blocks: Vec<Matrix> = types
                    .iter()
                    .map(|&t| {
                        let sp = algebra.right_projective(t);
                        let img = sp.basis() * algebra.right_mult(b);
                        Matrix::from_fn(sp.dim(), sp.dim(), |r, c| img[(r, sp.pivots()[c])].clone())
                    })
                    .collect();
                Matrix::block_diag(&blocks.iter().collect::<Vec<_>>())
            })
            .collect();
        let module = ModuleRep::from_trusted(algebra.clone(), action);
        ProjectiveSum { types, offsets, module }
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.module.algebra()
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// The `c`-th component of a module vector, as an element of `A`.
    pub fn component(&self, v: &[Scalar], c: usize) -> Vec<Scalar> {
        let sp = self.algebra().right_projective(self.types[c]);
        let coords = &v[self.offsets[c]..self.offsets[c] + sp.dim()];
        sp.basis().apply(coords)
    }

    /// The module vector with the given component elements (each in
    /// `e_{t_c} A`).
    pub fn from_components(&self, elems: &[Vec<Scalar>]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (c, a) in elems.iter().enumerate() {
            let sp = self.algebra().right_projective(self.types[c]);
            let coords = sp.coords(a).expect("component lies in e_t A");
            for (k, x) in coords.into_iter().enumerate() {
                v[self.offsets[c] + k] = x;
            }
        }
        v
    }

    /// The generator `e_{t_c}` of the `c`-th summand.
    pub fn generator(&self, c: usize) -> Vec<Scalar> {
        let alg = self.algebra();
        let mut elems: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); alg.dim()]; self.types.len()];
        elems[c] = alg.idempotents()[self.types[c]].clone();
        self.from_components(&elems)
    }
}

/// A map `(+)_r e_{row_r} A -> (+)_c e_{col_c} A`; entry `(r, c)` lies in
/// `e_{col_c} A e_{row_r}` and acts by left multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjMatrix {
    pub row_types: Vec<usize>,
    pub col_types: Vec<usize>,
    /// Row-major; each entry is a coordinate vector in the algebra basis.
    pub entries: Vec<Vec<Scalar>>,
}

impl ProjMatrix {
    pub fn entry(&self, r: usize, c: usize) -> &[Scalar] {
        &self.entries[r * self.col_types.len() + c]
    }

    /// Whether every entry lies in its corner space `e_col A e_row`.
    pub fn check_corners(&self, alg: &Algebra) -> bool {
        self.row_types.iter().enumerate().all(|(r, &rt)| {
            self.col_types
                .iter()
                .enumerate()
                .all(|(c, &ct)| alg.corner(ct, rt).contains(self.entry(r, c)))
        })
    }

    /// The matrix of the induced module map between the corresponding
    /// [`ProjectiveSum`]s.
    pub fn module_map(&self, source: &ProjectiveSum, target: &ProjectiveSum) -> Matrix {
        assert_eq!(source.types(), self.row_types.as_slice());
        assert_eq!(target.types(), self.col_types.as_slice());
        let alg = source.algebra().clone();
        let mut rows = Vec::with_capacity(source.dim());
        for (r, &t) in self.row_types.iter().enumerate() {
            for u in alg.right_projective(t).basis().row_iter() {
                let comps: Vec<Vec<Scalar>> =
                    (0..self.col_types.len()).map(|c| alg.mul(self.entry(r, c), u)).collect();
                rows.push(target.from_components(&comps));
            }
        }
        Matrix::from_rows(target.dim(), rows)
    }

    /// The same data read as a map over the opposite algebra after applying
    /// `Hom(-, A)`: rows and columns swap, entries are unchanged as vectors.
    pub fn dualized(&self) -> ProjMatrix {
        let (nr, nc) = (self.row_types.len(), self.col_types.len());
        let mut entries = Vec::with_capacity(nr * nc);
        for c in 0..nc {
            for r in 0..nr {
                entries.push(self.entry(r, c).to_vec());
            }
        }
        ProjMatrix { row_types: self.col_types.clone(), col_types: self.row_types.clone(), entries }
    }
}

/// A minimal projective cover `pi: P -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: ProjectiveSum,
    /// Row `g` is the image in `M` of the generator of summand `g`.
    pub generators: Matrix,
    pub pi: ModuleMorphism,
}

/// Minimal projective cover: one summand `e_i A` per basis vector of
/// `(M/MJ) e_i`. Panics if the kernel escapes `P J`, which would be a bug.
pub fn projective_cover(m: &ModuleRep) -> ProjectiveCover {
    let alg = m.algebra().clone();
    let n = m.dim();
    let mut span = m.radical_submodule();
    let mut types = Vec::new();
    let mut gens = Vec::new();
    for i in 0..alg.num_idempotents() {
        let part = m.idempotent_part(i);
        for v in part.basis().row_iter() {
            if !span.contains(v) {
                span = span.sum(&RowSpace::new(&Matrix::row_vector(v.to_vec())));
                types.push(i);
                gens.push(v.to_vec());
            }
        }
    }
    debug_assert_eq!(span.dim(), n);
    let projective = ProjectiveSum::new(&alg, types);
    let mut rows = Vec::with_capacity(projective.dim());
    for (g, &t) in projective.types().iter().enumerate() {
        let acts: Vec<Vec<Scalar>> = (0..alg.dim()).map(|l| m.act(l).apply(&gens[g])).collect();
        let acts = Matrix::from_rows(n, acts);
        for u in alg.right_projective(t).basis().row_iter() {
            rows.push(acts.apply(u));
        }
    }
    let pi_mat = Matrix::from_rows(n, rows);
    let pi = ModuleMorphism::new_unchecked(projective.module().clone(), m.clone(), pi_mat);
    let cover = ProjectiveCover { projective, generators: Matrix::from_rows(n, gens), pi };
    assert!(cover_is_minimal(&cover), "projective cover is not minimal");
    cover
}

/// `ker(pi) ⊆ P J` and `pi` surjective.
pub fn cover_is_minimal(cover: &ProjectiveCover) -> bool {
    let ker = cover.pi.kernel();
    let pj = cover.projective.module().radical_submodule();
    pj.contains_space(&ker) && cover.pi.matrix().rank() == cover.pi.target().dim()
}

pub fn is_projective(m: &ModuleRep) -> bool {
    projective_cover(m).projective.dim() == m.dim()
}

/// `Omega M` together with its inclusion into the cover.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub module: ModuleRep,
    pub inclusion: ModuleMorphism,
    pub cover: ProjectiveCover,
}

pub fn syzygy_with_cover(m: &ModuleRep) -> Syzygy {
    let cover = projective_cover(m);
    let (module, inclusion) = cover.projective.module().submodule(&cover.pi.kernel()).expect("kernel is a submodule");
    Syzygy { module, inclusion, cover }
}

pub fn syzygy(m: &ModuleRep) -> ModuleRep {
    syzygy_with_cover(m).module
}

pub fn omega_n(m: &ModuleRep, n: usize) -> ModuleRep {
    (0..n).fold(m.clone(), |x, _| syzygy(&x))
}

/// `P1 --d--> P0 --pi--> M -> 0`, minimal.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub module: ModuleRep,
    pub p0: ProjectiveSum,
    pub p1: ProjectiveSum,
    pub d: ProjMatrix,
    pub pi: ModuleMorphism,
}

impl ProjectivePresentation {
    /// Matrix of `d` as a module map `P1 -> P0`.
    pub fn d_matrix(&self) -> Matrix {
        self.d.module_map(&self.p1, &self.p0)
    }

    /// `image(d) = ker(pi)`.
    pub fn is_exact(&self) -> bool {
        RowSpace::new(&self.d_matrix()) == self.pi.kernel()
    }

    /// `ker(pi) ⊆ P0 J` and `ker(d) ⊆ P1 J`.
    pub fn is_minimal(&self) -> bool {
        let k0 = self.pi.kernel();
        let k1 = RowSpace::new(&self.d_matrix().kernel_basis());
        self.p0.module().radical_submodule().contains_space(&k0)
            && self.p1.module().radical_submodule().contains_space(&k1)
    }
}

/// The map `P(Omega M) -> P(M)` read off from the generators of `Omega M`.
fn differential(syz: &Syzygy, next: &ProjectiveCover) -> ProjMatrix {
    let p0 = &syz.cover.projective;
    let incl = syz.inclusion.matrix();
    let mut entries = Vec::new();
    for g in next.generators.row_iter() {
        let in_p0 = incl.apply(g);
        for c in 0..p0.types().len() {
            entries.push(p0.component(&in_p0, c));
        }
    }
    ProjMatrix {
        row_types: next.projective.types().to_vec(),
        col_types: p0.types().to_vec(),
        entries,
    }
}

pub fn minimal_presentation(m: &ModuleRep) -> ProjectivePresentation {
    let syz = syzygy_with_cover(m);
    let cover1 = projective_cover(&syz.module);
    let d = differential(&syz, &cover1);
    ProjectivePresentation {
        module: m.clone(),
        p0: syz.cover.projective.clone(),
        p1: cover1.projective.clone(),
        d,
        pi: syz.cover.pi.clone(),
    }
}

/// `Tr M`, the cokernel of `Hom(d, A): Hom(P0, A) -> Hom(P1, A)`, as a right
/// module over `op`, which must be the opposite of `M`'s algebra.
pub fn transpose_over(m: &ModuleRep, op: &Arc<Algebra>) -> Result<ModuleRep> {
    if op.table() != &m.algebra().table().opposite() {
        return Err(Error::AlgebraMismatch);
    }
    let pres = minimal_presentation(m);
    let dual = pres.d.dualized();
    let p0_star = ProjectiveSum::new(op, pres.p0.types().to_vec());
    let p1_star = ProjectiveSum::new(op, pres.p1.types().to_vec());
    let map = dual.module_map(&p0_star, &p1_star);
    let (tr, _) = p1_star.module().quotient(&RowSpace::new(&map))?;
    Ok(tr)
}

pub fn transpose(m: &ModuleRep) -> Result<ModuleRep> {
    transpose_over(m, &m.algebra().opposite()?)
}

/// `Sigma M = Tr Omega Tr M`, over the same algebra handle as `M`.
pub fn sigma(m: &ModuleRep) -> Result<ModuleRep> {
    let alg = m.algebra().clone();
    let op = alg.opposite()?;
    let t = transpose_over(m, &op)?;
    let o = syzygy(&t);
    transpose_over(&o, &alg)
}

pub fn sigma_n(m: &ModuleRep, n: usize) -> Result<ModuleRep> {
    (0..n).try_fold(m.clone(), |x, _| sigma(&x))
}

#[derive(Clone, Debug)]
pub struct TorsionlessQuotient {
    pub module: ModuleRep,
    pub projection: ModuleMorphism,
    /// `∩ ker f` over all `f: M -> A`.
    pub evaluation_kernel: RowSpace,
    /// The induced injection of the quotient into `A^r`.
    pub embedding: Matrix,
}

/// `M / ∩_{f: M -> A} ker f`, the largest quotient of `M` embedding in a
/// free module.
pub fn torsionless_quotient(m: &ModuleRep) -> Result<TorsionlessQuotient> {
    let reg = ModuleRep::regular(m.algebra());
    let homs = hom_space(m, &reg)?;
    let eval = Matrix::hstack(m.dim(), &homs.iter().map(|f| f.matrix()).collect::<Vec<_>>());
    let kernel = RowSpace::new(&eval.kernel_basis());
    let (module, projection) = m.quotient(&kernel)?;
    // Quotient basis vectors are the complement standard vectors of M.
    let embedding = eval.select_rows(&kernel.complement_indices());
    assert_eq!(embedding.rank(), module.dim(), "torsionless quotient does not embed");
    Ok(TorsionlessQuotient { module, projection, evaluation_kernel: kernel, embedding })
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M`.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    /// `P_0, .., P_len`.
    pub projectives: Vec<ProjectiveSum>,
    /// `d_i: P_i -> P_{i-1}` for `i = 1..=len`, stored at index `i - 1`.
    pub differentials: Vec<ProjMatrix>,
    /// `Omega^0 M = M, .., Omega^len M`.
    pub syzygies: Vec<ModuleRep>,
}

pub fn minimal_resolution(m: &ModuleRep, len: usize) -> MinimalResolution {
    let mut projectives = Vec::new();
    let mut differentials = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut syz = syzygy_with_cover(m);
    projectives.push(syz.cover.projective.clone());
    for _ in 0..len {
        let next = syzygy_with_cover(&syz.module);
        differentials.push(differential(&syz, &next.cover));
        projectives.push(next.cover.projective.clone());
        syzygies.push(syz.module.clone());
        syz = next;
    }
    MinimalResolution { projectives, differentials, syzygies }
}

/// Matrix of `Hom(d, A): Hom(P_{i-1}, A) -> Hom(P_i, A)` in the corner model
/// `Hom(e_t A, A) = A e_t`.
fn dual_differential(alg: &Algebra, d: &ProjMatrix) -> Matrix {
    let target_dim: usize = d.row_types.iter().map(|&t| alg.left_projective(t).dim()).sum();
    let mut rows = Vec::new();
    for (c, &s) in d.col_types.iter().enumerate() {
        for w in alg.left_projective(s).basis().row_iter() {
            let mut row = Vec::with_capacity(target_dim);
            for (r, &t) in d.row_types.iter().enumerate() {
                let img = alg.mul(w, d.entry(r, c));
                row.extend(alg.left_projective(t).coords(&img).expect("lands in A e_t"));
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(target_dim, rows)
}

fn hom_dim_to_algebra(alg: &Algebra, p: &ProjectiveSum) -> usize {
    p.types().iter().map(|&t| alg.left_projective(t).dim()).sum()
}

/// `dim Ext^i(M, A)` for `i = 1..=i_max` via the corner model.
pub fn ext_against_algebra(m: &ModuleRep, i_max: usize) -> Vec<usize> {
    assert!(i_max >= 1);
    let alg = m.algebra().clone();
    let res = minimal_resolution(m, i_max + 1);
    let ranks: Vec<usize> = res.differentials.iter().map(|d| dual_differential(&alg, d).rank()).collect();
    (1..=i_max)
        .map(|i| {
            let hom_pi = hom_dim_to_algebra(&alg, &res.projectives[i]);
            // ker(d_{i+1}^*) / im(d_i^*)
            hom_pi - ranks[i] - ranks[i - 1]
        })
        .collect()
}

/// The same dimensions computed with generic hom spaces and composition, as
/// an independent check of the corner model.
pub fn ext_against_algebra_generic(m: &ModuleRep, i_max: usize) -> Result<Vec<usize>> {
    let reg = ModuleRep::regular(m.algebra());
    let res = minimal_resolution(m, i_max + 1);
    let homs: Vec<Vec<ModuleMorphism>> =
        res.projectives.iter().map(|p| hom_space(p.module(), &reg)).collect::<Result<_>>()?;
    // rank of phi |-> d_i * phi on Hom(P_{i-1}, A)
    let ranks: Vec<usize> = res
        .differentials
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let i = k + 1;
            let dm = d.module_map(&res.projectives[i], &res.projectives[i - 1]);
            let rows: Vec<Vec<Scalar>> =
                homs[i - 1].iter().map(|phi| (&dm * phi.matrix()).entries().to_vec()).collect();
            let width = res.projectives[i].dim() * reg.dim();
            Matrix::from_rows(width, rows).rank()
        })
        .collect();
    Ok((1..=i_max).map(|i| homs[i].len() - ranks[i] - ranks[i - 1]).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum PdimBound {
    Exactly(usize),
    AtLeast(usize),
}

/// Projective dimension if it is at most `n_max`, else the bound `n_max + 1`.
pub fn pdim_bounded(m: &ModuleRep, n_max: usize) -> PdimBound {
    pdim_by_syzygies(m, n_max).bound
}

/// How a [`PdimBound`] was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum PdimEvidence {
    /// Dimensions of `M, Omega M, ..` as computed.
    Syzygies { dims: Vec<usize> },
    /// `gcd` of the dimensions of the indecomposable projectives does not
    /// divide `dim M`. Since `dim Omega X = dim P(X) - dim X`, no syzygy
    /// of `M` is ever projective or zero.
    DimensionResidue { gcd: usize, dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdimReport {
    pub bound: PdimBound,
    pub evidence: PdimEvidence,
}

impl PdimReport {
    /// Re-check the evidence against `m`.
    pub fn replay(&self, m: &ModuleRep, n_max: usize) -> bool {
        match &self.evidence {
            PdimEvidence::DimensionResidue { gcd, dim } => {
                *gcd == projective_dim_gcd(m.algebra())
                    && *dim == m.dim()
                    && dim % gcd != 0
                    && self.bound == PdimBound::AtLeast(n_max + 1)
            }
            PdimEvidence::Syzygies { .. } => pdim_by_syzygies(m, n_max) == *self,
        }
    }
}

pub fn projective_dim_gcd(alg: &Algebra) -> usize {
    use num_integer::Integer;
    (0..alg.num_idempotents()).fold(0, |g, i| g.gcd(&alg.right_projective(i).dim()))
}

/// [`pdim_bounded`] with its evidence; uses the dimension residue argument
/// when it applies, otherwise iterates syzygies.
pub fn pdim_report(m: &ModuleRep, n_max: usize) -> PdimReport {
    let g = projective_dim_gcd(m.algebra());
    if g > 1 && !m.dim().is_multiple_of(g) {
        return PdimReport {
            bound: PdimBound::AtLeast(n_max + 1),
            evidence: PdimEvidence::DimensionResidue { gcd: g, dim: m.dim() },
        };
    }
    pdim_by_syzygies(m, n_max)
}

/// [`pdim_bounded`] with the syzygy dimensions as evidence.
pub fn pdim_by_syzygies(m: &ModuleRep, n_max: usize) -> PdimReport {
    let mut dims = vec![m.dim()];
    let mut x = m.clone();
    for d in 0..=n_max {
        let syz = syzygy(&x);
        dims.push(syz.dim());
        if syz.is_zero() {
            return PdimReport { bound: PdimBound::Exactly(d), evidence: PdimEvidence::Syzygies { dims } };
        }
        x = syz;
    }
    PdimReport { bound: PdimBound::AtLeast(n_max + 1), evidence: PdimEvidence::Syzygies { dims } }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_dual_numbers, build_lambda};
    use crate::module::{build_m_alpha, is_isomorphic};

    fn lam() -> Arc<Algebra> {
        build_lambda(&Scalar::from_int(2)).unwrap()
    }

    fn m(l: &Arc<Algebra>, a: i64) -> ModuleRep {
        build_m_alpha(l, &Scalar::from_int(a)).unwrap()
    }

    fn simple(l: &Arc<Algebra>) -> ModuleRep {
        ModuleRep::regular(l).top().0
    }

    #[test]
    fn cover_of_m_is_lambda() {
        let l = lam();
        let c = projective_cover(&m(&l, 2));
        assert_eq!(c.projective.dim(), 6);
        assert!(cover_is_minimal(&c));
        let c = projective_cover(&simple(&l));
        assert_eq!(c.projective.dim(), 6);
        let reg = ModuleRep::regular(&l);
        let c = projective_cover(&reg);
        assert!(c.pi.is_iso());
    }

    #[test]
    fn omega_m2_is_m4() {
        let l = lam();
        let o = syzygy(&m(&l, 2));
        assert_eq!(o.dim(), 3);
        assert!(is_isomorphic(&o, &m(&l, 4), 0).unwrap().is_isomorphic());
        assert!(syzygy(&ModuleRep::regular(&l)).is_zero());
        let m0 = m(&l, 0);
        assert!(is_isomorphic(&syzygy(&m0), &m0, 0).unwrap().is_isomorphic());
    }

    #[test]
    fn presentation_invariants() {
        let l = lam();
        let p = minimal_presentation(&m(&l, 2));
        assert_eq!(p.p0.dim(), 6);
        assert_eq!(p.p1.dim(), 6);
        assert!(p.is_exact());
        assert!(p.is_minimal());
        assert!(p.d.check_corners(&l));
        let p = minimal_presentation(&ModuleRep::regular(&l));
        assert_eq!(p.p1.dim(), 0);
        let p = minimal_presentation(&simple(&l));
        assert!(p.is_exact() && p.is_minimal());
        assert_eq!(p.p1.types().len(), 3);
    }

    #[test]
    fn transpose_of_projective_vanishes() {
        let l = lam();
        assert!(transpose(&ModuleRep::regular(&l)).unwrap().is_zero());
        assert!(sigma(&ModuleRep::regular(&l)).unwrap().is_zero());
    }

    #[test]
    fn sigma_m4_is_m2() {
        let l = lam();
        let s = sigma(&m(&l, 4)).unwrap();
        assert!(is_isomorphic(&s, &m(&l, 2), 0).unwrap().is_isomorphic());
    }

    #[test]
    fn torsionless_quotient_of_m() {
        let l = lam();
        let tq = torsionless_quotient(&m(&l, 2)).unwrap();
        assert_eq!(tq.module.dim(), 2);
        assert_eq!(tq.evaluation_kernel.dim(), 1);
        let reg = ModuleRep::regular(&l);
        assert_eq!(torsionless_quotient(&reg).unwrap().module.dim(), 6);
    }

    #[test]
    fn ext_routes_agree() {
        let l = lam();
        for x in [m(&l, 2), simple(&l), m(&l, 1)] {
            assert_eq!(ext_against_algebra(&x, 2), ext_against_algebra_generic(&x, 2).unwrap());
        }
        assert_eq!(ext_against_algebra(&ModuleRep::regular(&l), 3), vec![0, 0, 0]);
    }

    #[test]
    fn pdim_small_cases() {
        let l = lam();
        assert_eq!(pdim_bounded(&ModuleRep::regular(&l), 3), PdimBound::Exactly(0));
        assert_eq!(pdim_bounded(&m(&l, 2), 5), PdimBound::AtLeast(6));
        let d = build_dual_numbers();
        let s = simple(&d);
        assert_eq!(pdim_bounded(&s, 4), PdimBound::AtLeast(5));
    }

    #[test]
    fn residue_argument_agrees_with_iteration() {
        let l = lam();
        assert_eq!(projective_dim_gcd(&l), 6);
        let s = simple(&l);
        let r = pdim_report(&s, 12);
        assert_eq!(r.bound, PdimBound::AtLeast(13));
        assert!(matches!(r.evidence, PdimEvidence::DimensionResidue { gcd: 6, dim: 1 }));
        assert!(r.replay(&s, 12));
        assert_eq!(pdim_bounded(&s, 3), PdimBound::AtLeast(4));
        let reg = ModuleRep::regular(&l);
        assert_eq!(pdim_report(&reg, 12).bound, PdimBound::Exactly(0));
    }
}
