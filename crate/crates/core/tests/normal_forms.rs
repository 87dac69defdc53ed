use proptest::prelude::*;
use qproj::ncpoly::{quantum_determinant, Algebra, NCPoly, Word};
use qproj::qscalar::QScalar;
use qproj::rewrite::RewriteSystem;
use std::sync::OnceLock;

fn su2() -> &'static RewriteSystem {
    static SYS: OnceLock<RewriteSystem> = OnceLock::new();
    SYS.get_or_init(|| RewriteSystem::build_default(Algebra::G(2)).unwrap())
}

fn u2() -> &'static RewriteSystem {
    static SYS: OnceLock<RewriteSystem> = OnceLock::new();
    SYS.get_or_init(|| RewriteSystem::build_default(Algebra::H(3)).unwrap())
}

fn poly(alg: Algebra, max_len: usize) -> impl Strategy<Value = NCPoly> {
    let letters = alg.num_letters() as u8;
    prop::collection::vec((prop::collection::vec(0..letters, 0..=max_len), -3i64..=3, -2i32..=2), 1..4).prop_map(
        move |terms| {
            let mut f = NCPoly::zero(alg);
            for (w, c, k) in terms {
                f.add_term(Word(w), &(QScalar::from_int(c) * QScalar::t_pow(k, alg.root())));
            }
            f
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(f in poly(Algebra::G(2), 3)) {
        let s = su2();
        let nf = s.normal_form(&f);
        prop_assert_eq!(s.normal_form(&nf), nf.clone());
        for w in nf.terms.keys() {
            prop_assert!(s.is_normal_word(w));
        }
    }

    #[test]
    fn product_is_independent_of_representatives(a in poly(Algebra::G(2), 2), b in poly(Algebra::G(2), 2)) {
        let s = su2();
        let direct = s.normal_form(&a.mul(&b));
        prop_assert_eq!(s.mul(&s.normal_form(&a), &s.normal_form(&b)), direct);
    }

    #[test]
    fn star_is_an_antilinear_antimultiplicative_involution(a in poly(Algebra::G(2), 2), b in poly(Algebra::G(2), 1)) {
        let s = su2();
        prop_assert!(s.equal(&a.star().star(), &a));
        prop_assert!(s.equal(&a.mul(&b).star(), &b.star().mul(&a.star())));
    }

    #[test]
    fn counit_is_multiplicative_on_normal_forms(a in poly(Algebra::G(2), 2), b in poly(Algebra::G(2), 2)) {
        let s = su2();
        prop_assert_eq!(s.normal_form(&a.mul(&b)).counit(), a.counit() * b.counit());
    }

    #[test]
    fn antipode_reverses_products(a in poly(Algebra::H(3), 1), b in poly(Algebra::H(3), 1)) {
        let s = u2();
        prop_assert!(s.equal(&a.mul(&b).antipode(), &b.antipode().mul(&a.antipode())));
    }
}

#[test]
fn determinant_is_one_in_su_n() {
    for n in 2..=3 {
        let s = RewriteSystem::build_default(Algebra::G(n)).unwrap();
        assert!(s.equal(&quantum_determinant(Algebra::G(n)), &NCPoly::one(Algebra::G(n))));
    }
}

#[test]
fn rule_dump_round_trips() {
    let s = su2();
    let t = RewriteSystem::load(&s.dump(), Algebra::G(2)).unwrap();
    assert_eq!(t.dump(), s.dump());
}
