use deloop_core::{Matrix, RowSpace, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    // mostly small integers, some zeros, some fractions
    prop_oneof![
        3 => Just(Scalar::zero()),
        4 => (-3i64..=3).prop_map(Scalar::from_int),
        2 => (-3i64..=3, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d)),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (0..=max, 0..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(scalar(), r * c).prop_map(move |v| {
            let mut it = v.into_iter();
            Matrix::from_fn(r, c, |_, _| it.next().unwrap())
        })
    })
}

fn minor(m: &Matrix, rows: &[usize], cols: &[usize]) -> Scalar {
    m.select_rows(rows).select_cols(cols).determinant()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Rank as the size of the largest nonvanishing minor.
fn rank_by_minors(m: &Matrix) -> usize {
    (1..=m.rows().min(m.cols()))
        .rev()
        .find(|&k| {
            subsets(m.rows(), k)
                .iter()
                .any(|rs| subsets(m.cols(), k).iter().any(|cs| !minor(m, rs, cs).is_zero()))
        })
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_agrees_with_minors(m in matrix(4)) {
        prop_assert_eq!(m.rank(), rank_by_minors(&m));
    }

    #[test]
    fn rank_nullity(m in matrix(5)) {
        let r = m.rank();
        prop_assert_eq!(m.kernel_basis().rows(), m.rows() - r);
        prop_assert_eq!(m.right_kernel_basis().rows(), m.cols() - r);
        prop_assert_eq!(m.transpose().rank(), r);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(5)) {
        let (r, piv) = m.rref();
        let (rr, piv2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(piv, piv2);
    }

    #[test]
    fn rref_is_a_product_of_elementary_matrices(m in matrix(5)) {
        let (r, _, ops) = m.rref_with_ops();
        let mut acc = m.clone();
        for op in &ops {
            acc = &op.elementary(m.rows()) * &acc;
        }
        prop_assert_eq!(acc, r);
    }

    #[test]
    fn kernel_vectors_are_killed(m in matrix(5)) {
        let k = m.kernel_basis();
        prop_assert!((&k * &m).is_zero());
        prop_assert_eq!(k.rank(), k.rows());
        let rk = m.right_kernel_basis();
        prop_assert!((&m * &rk.transpose()).is_zero());
        prop_assert_eq!(rk.rank(), rk.rows());
    }

    #[test]
    fn solve_left_residual(m in matrix(5), seed in prop::collection::vec(scalar(), 5)) {
        let x0 = Matrix::from_fn(1, m.rows(), |_, j| seed[j].clone());
        let b = &x0 * &m;
        let x = Matrix::solve_left(&m, &b).expect("b is in the row space");
        prop_assert_eq!(&x * &m, b);
    }

    #[test]
    fn rowspace_intersection_dimension(a in matrix(4), b in matrix(4)) {
        prop_assume!(a.cols() == b.cols());
        let (sa, sb) = (RowSpace::new(&a), RowSpace::new(&b));
        let sum = sa.sum(&sb).dim();
        prop_assert_eq!(sa.intersection(&sb).dim() + sum, sa.dim() + sb.dim());
    }
}
