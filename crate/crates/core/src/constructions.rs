//! One-point extensions `B = A[M]`, upper triangular with `k` and `A` on
//! the diagonal and `M` in the corner, and the `B`-modules obtained from
//! `A`-modules.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{basis_vec, Algebra, AlgebraTable};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace, Scalar};
use crate::module::ModuleRep;

/// `B = A[M]` with basis `eps, A-basis, M-basis`.
#[derive(Clone, Debug)]
pub struct OnePointExtension {
    base: Arc<Algebra>,
    module: ModuleRep,
    algebra: Arc<Algebra>,
}

pub const EPS: usize = 0;

impl OnePointExtension {
    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn extending_module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Index in `B` of the `i`-th basis vector of `A`.
    pub fn a_index(&self, i: usize) -> usize {
        1 + i
    }

    /// Index in `B` of the `k`-th basis vector of `M`.
    pub fn m_index(&self, k: usize) -> usize {
        1 + self.base.dim() + k
    }

    pub fn a_range(&self) -> std::ops::Range<usize> {
        1..1 + self.base.dim()
    }

    pub fn m_range(&self) -> std::ops::Range<usize> {
        1 + self.base.dim()..self.algebra.dim()
    }

    /// Idempotent index in `B` of the `i`-th idempotent of `A`.
    pub fn base_idempotent(&self, i: usize) -> usize {
        1 + i
    }
}

fn extension_labels(a: &Algebra, m: &ModuleRep) -> Vec<String> {
    let mut labels = vec!["eps".to_string()];
    labels.extend(a.labels().iter().cloned());
    let taken: BTreeSet<&String> = labels.iter().collect();
    let m_labels: Vec<String> = match m.labels() {
        Some(ls) if ls.iter().all(|l| !taken.contains(l)) && ls.iter().collect::<BTreeSet<_>>().len() == ls.len() => {
            ls.to_vec()
        }
        _ => (0..m.dim()).map(|k| format!("m{k}")).collect(),
    };
    labels.extend(m_labels);
    labels
}

pub fn one_point_extension(a: &Arc<Algebra>, m: &ModuleRep) -> Result<OnePointExtension> {
    if !m.algebra().same_as(a) {
        return Err(Error::AlgebraMismatch);
    }
    let (da, dm) = (a.dim(), m.dim());
    let n = 1 + da + dm;
    let mut constants = vec![vec![Scalar::zero(); n]; n * n];
    constants[EPS * n + EPS] = basis_vec(n, EPS);
    for k in 0..dm {
        constants[EPS * n + 1 + da + k] = basis_vec(n, 1 + da + k);
    }
    for i in 0..da {
        for j in 0..da {
            let mut v = vec![Scalar::zero(); n];
            for (l, c) in a.product(i, j).iter().enumerate() {
                v[1 + l] = c.clone();
            }
            constants[(1 + i) * n + 1 + j] = v;
        }
    }
    for k in 0..dm {
        for j in 0..da {
            let mut v = vec![Scalar::zero(); n];
            for (l, c) in m.act(j).row(k).iter().enumerate() {
                v[1 + da + l] = c.clone();
            }
            constants[(1 + da + k) * n + 1 + j] = v;
        }
    }
    let lift = |x: &[Scalar]| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        for (l, c) in x.iter().enumerate() {
            v[1 + l] = c.clone();
        }
        v
    };
    let mut unit = lift(a.unit());
    unit[EPS] = Scalar::one();
    let mut idempotents = vec![basis_vec(n, EPS)];
    idempotents.extend(a.idempotents().iter().map(|e| lift(e)));
    let table = AlgebraTable {
        labels: extension_labels(a, m),
        constants,
        unit,
        idempotents,
        params: a.params().clone(),
    };
    let algebra = Algebra::new(table)?;
    Ok(OnePointExtension { base: a.clone(), module: m.clone(), algebra })
}

/// The `B`-module `(0 N)`: `A` acts through `N`, `eps` and `M` act by zero.
pub fn inflate(n: &ModuleRep, b: &OnePointExtension) -> Result<ModuleRep> {
    if !n.algebra().same_as(b.base()) {
        return Err(Error::AlgebraMismatch);
    }
    let d = n.dim();
    let action = (0..b.algebra().dim())
        .map(|i| if b.a_range().contains(&i) { n.act(i - 1).clone() } else { Matrix::zeros(d, d) })
        .collect();
    let m = ModuleRep::from_trusted(b.algebra().clone(), action);
    Ok(match n.labels() {
        Some(ls) => m.with_labels(ls.to_vec()),
        None => m,
    })
}

/// The simple `B`-module on which `eps` acts by one.
pub fn simple_at_extension_vertex(b: &OnePointExtension) -> ModuleRep {
    let action = (0..b.algebra().dim())
        .map(|i| Matrix::from_fn(1, 1, |_, _| if i == EPS { Scalar::one() } else { Scalar::zero() }))
        .collect();
    ModuleRep::from_trusted(b.algebra().clone(), action)
}

/// The `B^op`-module `(0 A^op)`: the quotient of `B 1_A` (spanned by the `A`
/// and `M` basis vectors) by its `M`-part.
pub fn base_part_over_opposite(b: &OnePointExtension, b_op: &Arc<Algebra>) -> Result<ModuleRep> {
    if b_op.table() != &b.algebra().table().opposite() {
        return Err(Error::AlgebraMismatch);
    }
    let reg = ModuleRep::regular(b_op);
    let n = b.algebra().dim();
    let span = |ambient: usize, range: std::ops::Range<usize>| {
        RowSpace::new(&Matrix::from_rows(ambient, range.map(|i| basis_vec(ambient, i)).collect()))
    };
    let (sub, _) = reg.submodule(&span(n, 1..n))?;
    // sub's basis is the standard vectors 1..n in order, so the M-part is
    // the tail.
    let tail = span(n - 1, b.base().dim()..n - 1);
    let (quot, _) = sub.quotient(&tail)?;
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_field, build_lambda};
    use crate::homological::{projective_cover, syzygy};
    use crate::module::{build_m_alpha, hom_space, is_isomorphic};

    fn setup() -> (Arc<Algebra>, ModuleRep, OnePointExtension) {
        let l = build_lambda(&Scalar::from_int(2)).unwrap();
        let m = build_m_alpha(&l, &Scalar::from_int(2)).unwrap();
        let b = one_point_extension(&l, &m).unwrap();
        (l, m, b)
    }

    #[test]
    fn extension_shape() {
        let (_, _, b) = setup();
        let alg = b.algebra();
        assert_eq!(alg.dim(), 10);
        assert_eq!(alg.num_idempotents(), 2);
        assert_eq!(alg.validate_report().associativity_triples, 1000);
        assert!(alg.unit_index().is_none());
        assert_eq!(alg.labels()[7..], ["v", "v'", "v''"]);
    }

    #[test]
    fn upper_triangular_two_by_two() {
        let k = build_field();
        let kk = ModuleRep::regular(&k);
        let b = one_point_extension(&k, &kk).unwrap();
        assert_eq!(b.algebra().dim(), 3);
        assert_eq!(b.algebra().radical().dim(), 1);
        assert!(b.algebra().radical().contains(&b.algebra().basis_vector(2)));
    }

    #[test]
    fn inflation_is_fully_faithful_on_m() {
        let (_, m, b) = setup();
        let im = inflate(&m, &b).unwrap();
        im.validate().unwrap();
        assert_eq!(hom_space(&im, &im).unwrap().len(), hom_space(&m, &m).unwrap().len());
        let reg = inflate(&ModuleRep::regular(b.base()), &b).unwrap();
        assert_eq!(reg.dim(), 6);
        assert!(inflate(&ModuleRep::zero(b.base().clone()), &b).unwrap().is_zero());
    }

    #[test]
    fn syzygy_of_vertex_simple() {
        let (_, m, b) = setup();
        let s = simple_at_extension_vertex(&b);
        s.validate().unwrap();
        assert_eq!(projective_cover(&s).projective.dim(), 4);
        let o = syzygy(&s);
        let im = inflate(&m, &b).unwrap();
        assert!(is_isomorphic(&o, &im, 0).unwrap().is_isomorphic());
    }

    #[test]
    fn base_part_has_pdim_one() {
        let (_, _, b) = setup();
        let op = b.algebra().opposite().unwrap();
        let x = base_part_over_opposite(&b, &op).unwrap();
        x.validate().unwrap();
        assert_eq!(x.dim(), 6);
        let o = syzygy(&x);
        assert_eq!(o.dim(), 3);
        assert!(syzygy(&o).is_zero());
    }
}
