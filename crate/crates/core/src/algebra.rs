//! Finite-dimensional associative unital algebras given by structure
//! constants, together with the designated primitive idempotents, the
//! Jacobson radical and the concrete algebras `Lambda(q)`, `k[x]/(x^2)` and
//! `k`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowSpace, Scalar};

/// Raw, unvalidated algebra data: `constants[i * dim + j]` holds the
/// coordinates of `b_i * b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    pub labels: Vec<String>,
    pub constants: Vec<Vec<Scalar>>,
    pub unit: Vec<Scalar>,
    pub idempotents: Vec<Vec<Scalar>>,
    pub params: BTreeMap<String, Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Shape { message: String },
    Associativity { i: usize, j: usize, l: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
    IdempotentSquare { i: usize },
    Orthogonality { i: usize, j: usize },
    IdempotentSum,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { message } => write!(f, "shape: {message}"),
            Violation::Associativity { i, j, l } => write!(f, "(b{i} b{j}) b{l} != b{i} (b{j} b{l})"),
            Violation::LeftUnit { i } => write!(f, "1 * b{i} != b{i}"),
            Violation::RightUnit { i } => write!(f, "b{i} * 1 != b{i}"),
            Violation::IdempotentSquare { i } => write!(f, "e{i}^2 != e{i}"),
            Violation::Orthogonality { i, j } => write!(f, "e{i} e{j} != 0"),
            Violation::IdempotentSum => write!(f, "idempotents do not sum to 1"),
        }
    }
}

/// Outcome of [`AlgebraTable::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub associativity_triples: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "{} associativity triples checked, no violations", self.associativity_triples);
        }
        write!(f, "{} violation(s):", self.violations.len())?;
        for v in self.violations.iter().take(8) {
            write!(f, " [{v}]")?;
        }
        Ok(())
    }
}

impl AlgebraTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    fn product(&self, i: usize, j: usize) -> &[Scalar] {
        &self.constants[i * self.dim() + j]
    }

    fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(self.product(i, j)) {
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Checks associativity on all basis triples, the unit laws and the
    /// idempotent axioms, listing every failure.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        let shape_ok = self.constants.len() == n * n
            && self.constants.iter().all(|v| v.len() == n)
            && self.unit.len() == n
            && self.idempotents.iter().all(|e| e.len() == n);
        if !shape_ok {
            violations.push(Violation::Shape { message: format!("expected {n}x{n} table of length-{n} vectors") });
            return ValidationReport { associativity_triples: 0, violations };
        }
        let basis = |i: usize| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        };
        let mut triples = 0;
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j).to_vec();
                for l in 0..n {
                    triples += 1;
                    let left = self.mul_vec(&ij, &basis(l));
                    let right = self.mul_vec(&basis(i), self.product(j, l));
                    if left != right {
                        violations.push(Violation::Associativity { i, j, l });
                    }
                }
            }
        }
        for i in 0..n {
            if self.mul_vec(&self.unit, &basis(i)) != basis(i) {
                violations.push(Violation::LeftUnit { i });
            }
            if self.mul_vec(&basis(i), &self.unit) != basis(i) {
                violations.push(Violation::RightUnit { i });
            }
        }
        let mut sum = vec![Scalar::zero(); n];
        for (i, e) in self.idempotents.iter().enumerate() {
            if &self.mul_vec(e, e) != e {
                violations.push(Violation::IdempotentSquare { i });
            }
            for (j, f) in self.idempotents.iter().enumerate() {
                if i != j && self.mul_vec(e, f).iter().any(|x| !x.is_zero()) {
                    violations.push(Violation::Orthogonality { i, j });
                }
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s += x;
            }
        }
        if sum != self.unit {
            violations.push(Violation::IdempotentSum);
        }
        ValidationReport { associativity_triples: triples, violations }
    }

    pub fn opposite(&self) -> AlgebraTable {
        let n = self.dim();
        let mut constants = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                constants.push(self.product(j, i).to_vec());
            }
        }
        AlgebraTable { constants, ..self.clone() }
    }
}

/// A validated, split-basic finite-dimensional algebra over the rationals.
#[derive(Debug)]
pub struct Algebra {
    table: AlgebraTable,
    right_mult: Vec<Matrix>,
    radical_powers: Vec<RowSpace>,
    generators: Vec<Vec<Scalar>>,
    right_projectives: Vec<RowSpace>,
    left_projectives: Vec<RowSpace>,
}

impl Algebra {
    /// Validates the table, computes the radical and checks that the
    /// designated idempotents make the algebra split basic.
    pub fn new(table: AlgebraTable) -> Result<Arc<Algebra>> {
        let report = table.validate();
        if !report.passed() {
            return Err(Error::InvalidAlgebra(report));
        }
        let n = table.dim();
        let right_mult: Vec<Matrix> = (0..n)
            .map(|j| Matrix::from_fn(n, n, |i, l| table.product(i, j)[l].clone()))
            .collect();

        let mut alg = Algebra {
            table,
            right_mult,
            radical_powers: Vec::new(),
            generators: Vec::new(),
            right_projectives: Vec::new(),
            left_projectives: Vec::new(),
        };
        let radical = alg.trace_form_radical();
        alg.check_radical(&radical)?;

        let mut powers = vec![radical.clone()];
        loop {
            let last = powers.last().expect("nonempty");
            if last.dim() == 0 {
                break;
            }
            let next = alg.product_space(last, &radical);
            if next.dim() == last.dim() {
                return Err(Error::NotSplitBasic("radical is not nilpotent".into()));
            }
            powers.push(next);
        }
        alg.radical_powers = powers;

        let r = alg.table.idempotents.len();
        if n - radical.dim() != r || alg.table.idempotents.iter().any(|e| radical.contains(e)) {
            return Err(Error::NotSplitBasic(format!(
                "dim A/J = {} but {} designated idempotents",
                n - radical.dim(),
                r
            )));
        }

        // Idempotents plus lifts of a basis of J/J^2 generate the algebra.
        let mut gens = alg.table.idempotents.clone();
        let j2 = alg.radical_power(2);
        let mut span = j2.clone();
        for row in radical.basis().row_iter() {
            if !span.contains(row) {
                gens.push(row.to_vec());
                span = span.sum(&RowSpace::new(&Matrix::row_vector(row.to_vec())));
            }
        }
        alg.generators = gens;

        alg.right_projectives = alg
            .table
            .idempotents
            .iter()
            .map(|e| RowSpace::new(&Matrix::from_fn(n, n, |j, l| alg.mul(e, &basis_vec(n, j))[l].clone())))
            .collect();
        alg.left_projectives = alg
            .table
            .idempotents
            .iter()
            .map(|e| RowSpace::new(&Matrix::from_fn(n, n, |j, l| alg.mul(&basis_vec(n, j), e)[l].clone())))
            .collect();
        Ok(Arc::new(alg))
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.table.labels.iter().position(|l| l == label)
    }

    pub fn params(&self) -> &BTreeMap<String, Scalar> {
        &self.table.params
    }

    pub fn param(&self, name: &str) -> Option<&Scalar> {
        self.table.params.get(name)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        basis_vec(self.dim(), i)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.table.unit
    }

    /// Index of the unit when it is a basis element.
    pub fn unit_index(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| self.table.unit == self.basis_vector(i))
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.table.idempotents
    }

    pub fn num_idempotents(&self) -> usize {
        self.table.idempotents.len()
    }

    pub fn is_local(&self) -> bool {
        self.num_idempotents() == 1
    }

    /// Coordinates of `b_i * b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        self.table.product(i, j)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.table.mul_vec(a, b)
    }

    /// Matrix of right multiplication by `b_j` on the algebra (row `i` is
    /// `b_i * b_j`): the action of `b_j` on the right regular module.
    pub fn right_mult(&self, j: usize) -> &Matrix {
        &self.right_mult[j]
    }

    pub fn right_mult_by(&self, a: &[Scalar]) -> Matrix {
        combine(&self.right_mult, a, self.dim())
    }

    pub fn radical(&self) -> &RowSpace {
        &self.radical_powers[0]
    }

    /// `J^k` for `k >= 1` (zero past the Loewy length).
    pub fn radical_power(&self, k: usize) -> RowSpace {
        assert!(k >= 1);
        self.radical_powers.get(k - 1).cloned().unwrap_or_else(|| RowSpace::zero(self.dim()))
    }

    /// Least `k` with `J^k = 0`.
    pub fn loewy_length(&self) -> usize {
        self.radical_powers.len()
    }

    /// Algebra generators: the idempotents and lifts of a basis of `J/J^2`.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    /// `e_i A` as a subspace of `A`.
    pub fn right_projective(&self, i: usize) -> &RowSpace {
        &self.right_projectives[i]
    }

    /// `A e_i` as a subspace of `A`.
    pub fn left_projective(&self, i: usize) -> &RowSpace {
        &self.left_projectives[i]
    }

    /// `e_i A e_j` as a subspace of `A`.
    pub fn corner(&self, i: usize, j: usize) -> RowSpace {
        self.right_projective(i).intersection(self.left_projective(j))
    }

    pub fn product_space(&self, a: &RowSpace, b: &RowSpace) -> RowSpace {
        let n = self.dim();
        let mut rows = Vec::new();
        for x in a.basis().row_iter() {
            for y in b.basis().row_iter() {
                rows.push(self.mul(x, y));
            }
        }
        RowSpace::new(&Matrix::from_rows(n, rows))
    }

    /// Gram matrix of the trace form `T(a, b) = tr(rho(ab))` on the basis.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let traces: Vec<Scalar> = self.right_mult.iter().map(Matrix::trace).collect();
        Matrix::from_fn(n, n, |i, j| {
            self.product(i, j).iter().zip(&traces).filter(|(c, _)| !c.is_zero()).map(|(c, t)| c * t).sum()
        })
    }

    /// Radical of the trace form; in characteristic zero this is the
    /// Jacobson radical.
    fn trace_form_radical(&self) -> RowSpace {
        RowSpace::new(&self.trace_form().kernel_basis())
    }

    fn check_radical(&self, j: &RowSpace) -> Result<()> {
        let n = self.dim();
        let all = RowSpace::full(n);
        if !j.contains_space(&self.product_space(&all, j)) || !j.contains_space(&self.product_space(j, &all)) {
            return Err(Error::NotSplitBasic("trace-form radical is not an ideal".into()));
        }
        // Trace form of A/J on a complement basis must be nondegenerate.
        let comp = j.complement_indices();
        let m = comp.len();
        let reduce = |v: Vec<Scalar>| -> Vec<Scalar> {
            let r = j.reduce(&v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let quot_mult: Vec<Matrix> = comp
            .iter()
            .map(|&b| {
                Matrix::from_fn(m, m, |r, c| reduce(self.mul(&basis_vec(n, comp[r]), &basis_vec(n, b)))[c].clone())
            })
            .collect();
        let traces: Vec<Scalar> = quot_mult.iter().map(Matrix::trace).collect();
        let gram = Matrix::from_fn(m, m, |r, c| {
            reduce(self.mul(&basis_vec(n, comp[r]), &basis_vec(n, comp[c])))
                .iter()
                .zip(&traces)
                .map(|(x, t)| x * t)
                .sum()
        });
        if gram.rank() != m {
            return Err(Error::NotSplitBasic("A/J has degenerate trace form".into()));
        }
        Ok(())
    }

    pub fn opposite(&self) -> Result<Arc<Algebra>> {
        Algebra::new(self.table.opposite())
    }

    /// Structural equality of the multiplication data.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(self, other)
            || (self.table.labels == other.table.labels
                && self.table.constants == other.table.constants
                && self.table.unit == other.table.unit
                && self.table.idempotents == other.table.idempotents)
    }
}

pub(crate) fn basis_vec(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `sum_l coeffs[l] * mats[l]`
pub(crate) fn combine(mats: &[Matrix], coeffs: &[Scalar], n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for (m, c) in mats.iter().zip(coeffs) {
        out.add_scaled(m, c);
    }
    out
}

/// Builds a table from a sparse product list over a unit basis element.
pub fn table_from_products(
    labels: &[&str],
    unit: usize,
    products: &[(usize, usize, Vec<(usize, Scalar)>)],
    idempotents: Vec<Vec<Scalar>>,
    params: BTreeMap<String, Scalar>,
) -> AlgebraTable {
    let n = labels.len();
    let mut constants = vec![vec![Scalar::zero(); n]; n * n];
    for i in 0..n {
        constants[unit * n + i] = basis_vec(n, i);
        constants[i * n + unit] = basis_vec(n, i);
    }
    for (i, j, terms) in products {
        let mut v = vec![Scalar::zero(); n];
        for (l, c) in terms {
            v[*l] += c;
        }
        constants[i * n + j] = v;
    }
    AlgebraTable {
        labels: labels.iter().map(|s| s.to_string()).collect(),
        constants,
        unit: basis_vec(n, unit),
        idempotents,
        params,
    }
}

pub mod lambda {
    //! Indices of the basis `1, x, y, z, yx, zx` of `Lambda(q)`.
    pub const ONE: usize = 0;
    pub const X: usize = 1;
    pub const Y: usize = 2;
    pub const Z: usize = 3;
    pub const YX: usize = 4;
    pub const ZX: usize = 5;
    pub const LABELS: [&str; 6] = ["1", "x", "y", "z", "yx", "zx"];
}

/// The multiplication table of `k<x,y,z>/(x^2, y^2, z^2, zy, yx + q xy,
/// zx - xz, yz - xz)` in the basis `1, x, y, z, yx, zx`, without validation.
pub fn lambda_table(q: &Scalar) -> AlgebraTable {
    use lambda::*;
    let q_inv = q.inv().expect("q != 0");
    let products = vec![
        (X, Y, vec![(YX, -q_inv)]),
        (Y, X, vec![(YX, Scalar::one())]),
        (Z, X, vec![(ZX, Scalar::one())]),
        (X, Z, vec![(ZX, Scalar::one())]),
        (Y, Z, vec![(ZX, Scalar::one())]),
    ];
    let mut params = BTreeMap::new();
    params.insert("q".to_string(), q.clone());
    table_from_products(&LABELS, ONE, &products, vec![basis_vec(6, ONE)], params)
}

/// `Lambda(q)`. Rejects `q` of finite multiplicative order (`0`, `1`, `-1`).
pub fn build_lambda(q: &Scalar) -> Result<Arc<Algebra>> {
    if q.is_zero() || q.has_finite_order() {
        return Err(Error::ParameterDomain(format!("q = {q} must have infinite multiplicative order")));
    }
    Algebra::new(lambda_table(q))
}

/// The defining relations of `Lambda(q)` evaluated in `alg`; all zero iff
/// the table realizes the presentation.
pub fn lambda_relations(alg: &Algebra, q: &Scalar) -> Vec<(&'static str, Vec<Scalar>)> {
    use lambda::*;
    let b = |i| alg.basis_vector(i);
    let (x, y, z) = (b(X), b(Y), b(Z));
    let m = |a: &[Scalar], c: &[Scalar]| alg.mul(a, c);
    let add = |a: Vec<Scalar>, c: Vec<Scalar>, s: Scalar| -> Vec<Scalar> {
        a.into_iter().zip(c).map(|(u, v)| u + v * &s).collect()
    };
    vec![
        ("x^2", m(&x, &x)),
        ("y^2", m(&y, &y)),
        ("z^2", m(&z, &z)),
        ("zy", m(&z, &y)),
        ("yx+qxy", add(m(&y, &x), m(&x, &y), q.clone())),
        ("zx-xz", add(m(&z, &x), m(&x, &z), Scalar::from_int(-1))),
        ("yz-xz", add(m(&y, &z), m(&x, &z), Scalar::from_int(-1))),
    ]
}

/// The ground field as a one-dimensional algebra.
pub fn build_field() -> Arc<Algebra> {
    Algebra::new(table_from_products(&["1"], 0, &[], vec![basis_vec(1, 0)], BTreeMap::new()))
        .expect("k is a valid algebra")
}

/// `k[x]/(x^2)` on the basis `1, x`.
pub fn build_dual_numbers() -> Arc<Algebra> {
    Algebra::new(table_from_products(&["1", "x"], 0, &[], vec![basis_vec(2, 0)], BTreeMap::new()))
        .expect("dual numbers form a valid algebra")
}

/// An injective algebra map `sub -> ambient`, given by the images of the
/// basis of `sub` (one row each).
#[derive(Clone, Debug)]
pub struct SubalgebraEmbedding {
    ambient: Arc<Algebra>,
    sub: Arc<Algebra>,
    inclusion: Matrix,
}

impl SubalgebraEmbedding {
    pub fn new(ambient: Arc<Algebra>, sub: Arc<Algebra>, inclusion: Matrix) -> Result<Self> {
        if inclusion.rows() != sub.dim() || inclusion.cols() != ambient.dim() {
            return Err(Error::InvalidEmbedding("inclusion has the wrong shape".into()));
        }
        if inclusion.rank() != sub.dim() {
            return Err(Error::InvalidEmbedding("inclusion is not injective".into()));
        }
        for i in 0..sub.dim() {
            for j in 0..sub.dim() {
                let lhs = inclusion.apply(sub.product(i, j));
                let rhs = ambient.mul(inclusion.row(i), inclusion.row(j));
                if lhs != rhs {
                    return Err(Error::InvalidEmbedding(format!("not multiplicative on basis pair ({i}, {j})")));
                }
            }
        }
        if inclusion.apply(sub.unit()) != ambient.unit() {
            return Err(Error::InvalidEmbedding("unit is not preserved".into()));
        }
        Ok(SubalgebraEmbedding { ambient, sub, inclusion })
    }

    pub fn ambient(&self) -> &Arc<Algebra> {
        &self.ambient
    }

    pub fn sub(&self) -> &Arc<Algebra> {
        &self.sub
    }

    pub fn inclusion(&self) -> &Matrix {
        &self.inclusion
    }
}

/// The subalgebra `Gamma = k[x]/(x^2)` of `Lambda(q)` generated by `x`.
pub fn build_gamma(lambda_alg: &Arc<Algebra>) -> Result<SubalgebraEmbedding> {
    let x = lambda_alg
        .label_index("x")
        .ok_or_else(|| Error::InvalidEmbedding("ambient algebra has no basis element x".into()))?;
    let n = lambda_alg.dim();
    let unit = lambda_alg.unit().to_vec();
    let inclusion = Matrix::from_rows(n, vec![unit, basis_vec(n, x)]);
    SubalgebraEmbedding::new(lambda_alg.clone(), build_dual_numbers(), inclusion)
}

impl Algebra {
    /// Re-runs [`AlgebraTable::validate`] on the stored table.
    pub fn validate_report(&self) -> ValidationReport {
        self.table.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two() -> Scalar {
        Scalar::from_int(2)
    }

    #[test]
    fn lambda_two_is_valid_with_216_triples() {
        let report = lambda_table(&two()).validate();
        assert!(report.passed(), "{report}");
        assert_eq!(report.associativity_triples, 216);
    }

    #[test]
    fn lambda_products() {
        use lambda::*;
        let l = build_lambda(&two()).unwrap();
        assert_eq!(l.dim(), 6);
        assert_eq!(l.labels(), &LABELS.map(String::from));
        assert_eq!(l.product(Y, X), l.basis_vector(YX).as_slice());
        let mut expect = vec![Scalar::zero(); 6];
        expect[YX] = Scalar::ratio(-1, 2);
        assert_eq!(l.product(X, Y), expect.as_slice());
        assert!(l.product(Z, Y).iter().all(Scalar::is_zero));
        for (name, v) in lambda_relations(&l, &two()) {
            assert!(v.iter().all(Scalar::is_zero), "relation {name} fails");
        }
    }

    #[test]
    fn lambda_rejects_finite_order() {
        for q in [0, 1, -1] {
            assert!(matches!(build_lambda(&Scalar::from_int(q)), Err(Error::ParameterDomain(_))));
        }
    }

    #[test]
    fn sign_drop_gives_lambda_of_minus_q() {
        use lambda::*;
        let mut t = lambda_table(&two());
        t.constants[X * 6 + Y][YX] = Scalar::ratio(1, 2);
        // J^3 = 0, so the mutant is still associative: it is Lambda(-2).
        assert!(t.validate().passed());
        assert_eq!(t.constants, lambda_table(&Scalar::from_int(-2)).constants);
        let mutant = Algebra::new(t).unwrap();
        let bad: Vec<_> = lambda_relations(&mutant, &two())
            .into_iter()
            .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
            .map(|(n, _)| n)
            .collect();
        assert_eq!(bad, vec!["yx+qxy"]);
    }

    #[test]
    fn corrupted_table_reports_offending_triples() {
        use lambda::*;
        let mut t = lambda_table(&two());
        // x*y = y drops a degree
        t.constants[X * 6 + Y] = basis_vec(6, Y);
        let report = t.validate();
        assert!(!report.passed());
        assert!(report.violations.iter().all(|v| matches!(v, Violation::Associativity { .. })));
        assert!(report.violations.contains(&Violation::Associativity { i: X, j: Y, l: X }));
        assert!(matches!(Algebra::new(t), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn radicals() {
        let l = build_lambda(&two()).unwrap();
        assert_eq!(l.radical().dim(), 5);
        assert!(!l.radical().contains(&l.basis_vector(lambda::ONE)));
        assert_eq!(l.radical_power(2).dim(), 2);
        assert_eq!(l.radical_power(3).dim(), 0);
        assert_eq!(l.loewy_length(), 3);

        let k = build_field();
        assert_eq!(k.radical().dim(), 0);
        assert!(k.validate_report().passed());

        let d = build_dual_numbers();
        assert_eq!(d.radical().dim(), 1);
        assert!(d.radical().contains(&d.basis_vector(1)));
    }

    #[test]
    fn opposite_is_involution() {
        use lambda::*;
        let l = build_lambda(&two()).unwrap();
        let op = l.opposite().unwrap();
        assert_eq!(op.product(X, Y), l.basis_vector(YX).as_slice());
        let opop = op.opposite().unwrap();
        assert!(l.same_as(&opop));
        let d = build_dual_numbers();
        assert!(d.same_as(&d.opposite().unwrap()));
    }

    #[test]
    fn gamma_embedding() {
        let l = build_lambda(&two()).unwrap();
        let g = build_gamma(&l).unwrap();
        assert_eq!(g.sub().dim(), 2);
        assert!(g.sub().product(1, 1).iter().all(Scalar::is_zero));
    }

    #[test]
    fn non_multiplicative_embedding_rejected() {
        let l = build_lambda(&two()).unwrap();
        // span{1, y + x} is not closed: (x+y)^2 = yx - yx/2 != 0
        let mut xy = vec![Scalar::zero(); 6];
        xy[lambda::X] = Scalar::one();
        xy[lambda::Y] = Scalar::one();
        let inc = Matrix::from_rows(6, vec![l.basis_vector(0), xy]);
        assert!(SubalgebraEmbedding::new(l.clone(), build_dual_numbers(), inc).is_err());
    }
}
