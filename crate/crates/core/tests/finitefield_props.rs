use coeffgame::finitefield::{fq_roots, is_permutation_poly, supported_fields, FqElement, FqField};
use coeffgame::poly::{Polynomial, Scalar};
use proptest::prelude::*;

fn field() -> impl Strategy<Value = &'static FqField> {
    prop::sample::select(supported_fields())
}

fn element(f: &'static FqField) -> impl Strategy<Value = FqElement> {
    (0..f.q()).prop_map(move |i| f.element(i))
}

fn poly(f: &'static FqField, max_len: usize) -> impl Strategy<Value = Polynomial<FqElement>> {
    prop::collection::vec(element(f), 0..=max_len).prop_map(Polynomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn field_axioms((_f, a, b, c) in field().prop_flat_map(|f| (Just(f), element(f), element(f), element(f)))) {
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert!(a.plus(&a.negated()).is_zero());
        if !a.is_zero() {
            prop_assert!(a.times(&a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn frobenius_is_additive((f, a, b) in field().prop_flat_map(|f| (Just(f), element(f), element(f)))) {
        let p = f.p();
        prop_assert_eq!(Scalar::pow(&a.plus(&b), p), Scalar::pow(&a, p).plus(&Scalar::pow(&b, p)));
    }

    #[test]
    fn roots_survive_multiplication((f, g, h) in field().prop_flat_map(|f| (Just(f), poly(f, 5), poly(f, 4)))) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let big = fq_roots(f, &(&g * &h)).roots;
        for r in fq_roots(f, &g).roots {
            prop_assert!(big.contains(&r));
        }
    }
}

#[test]
fn permutation_cubics_pair_their_middle_coefficients() {
    for f in supported_fields().into_iter().filter(|f| f.q() <= 9 && f.characteristic() != 3) {
        let mut found = 0;
        for a3 in f.elements().filter(|e| !e.is_zero()) {
            for a2 in f.elements() {
                for a1 in f.elements() {
                    for a0 in f.elements() {
                        let g = Polynomial::new(vec![a0, a1, a2, a3]);
                        if is_permutation_poly(f, &g) {
                            found += 1;
                            assert_eq!(a2.is_zero(), a1.is_zero(), "{g:?} over F_{}", f.q());
                        }
                    }
                }
            }
        }
        assert_eq!(found > 0, f.q() % 3 != 1, "F_{}", f.q());
    }
}

#[test]
fn root_tables_cover_the_field() {
    for f in supported_fields() {
        let g = Polynomial::new(vec![f.one(), f.zero(), f.one()]);
        let table = fq_roots(f, &g);
        assert_eq!(table.values.len(), f.q());
        assert!(table.verify(f, &g));
    }
}
