use proptest::prelude::*;
use qproj::linalg::{kernel, SparseVec, SubspaceBasis};
use qproj::qscalar::QScalar;

const DIM: usize = 6;

fn vector() -> impl Strategy<Value = SparseVec> {
    prop::collection::btree_map(0..DIM, (-2i64..=2, -1i32..=1), 0..4).prop_map(|m| {
        m.into_iter()
            .filter(|(_, (c, _))| *c != 0)
            .map(|(k, (c, e))| (k, QScalar::from_int(c) * QScalar::q_pow(e, 1)))
            .collect()
    })
}

fn family() -> impl Strategy<Value = Vec<SparseVec>> {
    prop::collection::vec(vector(), 0..5)
}

fn combine(c: &[QScalar], vs: &[SparseVec]) -> SparseVec {
    let mut out = SparseVec::new();
    for (x, v) in c.iter().zip(vs) {
        qproj::linalg::axpy(&mut out, x, v);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grassmann_formula(a in family(), b in family()) {
        let u = SubspaceBasis::span(DIM, a.iter());
        let w = SubspaceBasis::span(DIM, b.iter());
        let cap = u.intersect(&w);
        prop_assert_eq!(u.dim() + w.dim(), u.sum(&w).dim() + cap.dim());
        for v in &cap.rows {
            prop_assert!(u.contains(v) && w.contains(v));
        }
    }

    #[test]
    fn kernel_vectors_are_relations(a in family()) {
        let ker = kernel(DIM, &a);
        prop_assert_eq!(ker.len() + SubspaceBasis::span(DIM, a.iter()).dim(), a.len());
        for c in &ker {
            prop_assert!(qproj::linalg::is_zero(&combine(c, &a)));
        }
    }
}
