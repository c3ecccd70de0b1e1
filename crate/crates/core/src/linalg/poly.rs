//! Sparse multivariate polynomials over the rationals, just enough to expand
//! determinants of matrices whose entries are polynomial in a handful of
//! indeterminates.

use std::collections::BTreeMap;

use super::{Matrix, Scalar};

/// A polynomial in `nvars` indeterminates. Monomials are exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    /// `c * t_i`
    pub fn var(nvars: usize, i: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            let mut e = vec![0; nvars];
            e[i] = 1;
            p.terms.insert(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Vec<u16>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * s);
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (x, &k) in point.iter().zip(e) {
                    for _ in 0..k {
                        v *= x;
                    }
                }
                v
            })
            .sum()
    }

    /// A point of `{0, .., d}^nvars` (with `d` the total degree) at which a
    /// nonzero polynomial does not vanish. Such a point always exists by the
    /// Schwartz–Zippel / combinatorial Nullstellensatz bound.
    pub fn nonvanishing_point(&self) -> Option<Vec<Scalar>> {
        if self.is_zero() {
            return None;
        }
        let d = self.total_degree() as u64;
        let base = d + 1;
        let mut idx = vec![0u64; self.nvars];
        // Enumerate by increasing sum so small points come first.
        for total in 0..=(d * self.nvars as u64) {
            if let Some(p) = first_with_sum(&mut idx, 0, total, base, self) {
                return Some(p);
            }
        }
        unreachable!("nonzero polynomial vanishes on a full grid")
    }
}

fn first_with_sum(idx: &mut [u64], pos: usize, remaining: u64, base: u64, p: &Poly) -> Option<Vec<Scalar>> {
    if pos == idx.len() {
        if remaining != 0 {
            return None;
        }
        let pt: Vec<Scalar> = idx.iter().map(|&x| Scalar::from_int(x as i64)).collect();
        return (!p.eval(&pt).is_zero()).then_some(pt);
    }
    for v in 0..base.min(remaining + 1) {
        idx[pos] = v;
        if let Some(pt) = first_with_sum(idx, pos + 1, remaining - v, base, p) {
            return Some(pt);
        }
    }
    idx[pos] = 0;
    None
}

/// A square matrix with polynomial entries, built as `sum_k t_k * M_k` or
/// from bilinear combinations.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// `sum_k t_k * mats[k]` with `nvars = mats.len()`.
    pub fn linear_combination(n: usize, mats: &[Matrix]) -> Self {
        let nvars = mats.len();
        let mut entries = vec![Poly::zero(nvars); n * n];
        for (k, m) in mats.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (n, n));
            for r in 0..n {
                for c in 0..n {
                    entries[r * n + c].add_assign(&Poly::var(nvars, k, m[(r, c)].clone()));
                }
            }
        }
        PolyMatrix { n, entries }
    }

    /// `sum_{i,j} s_i t_j * mats[i][j]` over `ns + nt` indeterminates
    /// (the `s` block first).
    pub fn bilinear_combination(n: usize, ns: usize, nt: usize, mats: &[Vec<Matrix>]) -> Self {
        let nvars = ns + nt;
        let mut entries = vec![Poly::zero(nvars); n * n];
        for i in 0..ns {
            for j in 0..nt {
                let m = &mats[i][j];
                for r in 0..n {
                    for c in 0..n {
                        let x = &m[(r, c)];
                        if x.is_zero() {
                            continue;
                        }
                        let mut e = vec![0u16; nvars];
                        e[i] += 1;
                        e[ns + j] += 1;
                        entries[r * n + c].add_term(e, x.clone());
                    }
                }
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.n + c]
    }

    pub fn nvars(&self) -> usize {
        self.entries.first().map_or(0, Poly::nvars)
    }

    /// Full symbolic determinant by row-by-row Laplace expansion over column
    /// subsets. Exponential in `n`; callers cap the size.
    pub fn determinant(&self, nvars: usize) -> Poly {
        let n = self.n;
        assert!(n <= 20, "symbolic determinant too large");
        let mut layer: BTreeMap<u32, Poly> = BTreeMap::new();
        layer.insert(0, Poly::one(nvars));
        for r in 0..n {
            let mut next: BTreeMap<u32, Poly> = BTreeMap::new();
            for (mask, p) in &layer {
                for c in 0..n {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let e = self.entry(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    let inversions = (mask >> (c + 1)).count_ones();
                    let mut term = p.mul(e);
                    if inversions % 2 == 1 {
                        term = term.scale(&Scalar::from_int(-1));
                    }
                    let slot = next.entry(mask | (1 << c)).or_insert_with(|| Poly::zero(nvars));
                    slot.add_assign(&term);
                }
            }
            next.retain(|_, p| !p.is_zero());
            layer = next;
        }
        let full = (1u32 << n) - 1;
        layer.remove(&full).unwrap_or_else(|| Poly::zero(nvars))
    }

    pub fn eval(&self, point: &[Scalar]) -> Matrix {
        Matrix::from_fn(self.n, self.n, |r, c| self.entry(r, c).eval(point))
    }
}
