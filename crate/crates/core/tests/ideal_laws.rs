mod common;

use common::*;
use proptest::prelude::*;
use srcx::ideals::{
    colon, complex_of_ideal, contract, extend, image_ideal, injection_dictionary, intersect,
    preimage_test_ideal, product, sr_ideal, sum, surjection_dictionary, SqfIdeal, SqfMonomial,
};
use srcx::oracle::{enumerate_complexes, random_complex, random_injection, random_surjection};
use srcx::{apply, FunctorKind, Subset, VertexSet};

fn mono(v: &VertexSet, bits: u32) -> SqfMonomial {
    SqfMonomial::new(Subset::from_bits(v, bits).unwrap())
}

fn arb_ideal(v: VertexSet) -> impl Strategy<Value = SqfIdeal> {
    arb_complex_on(v).prop_map(|x| sr_ideal(&x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ideal_complex_round_trip(x in arb_complex(7)) {
        let i = sr_ideal(&x);
        prop_assert_eq!(&complex_of_ideal(&i), &x);
        prop_assert_eq!(sr_ideal(&complex_of_ideal(&i)), i.clone());
        for d in 0..1u32 << x.vertices().len() {
            prop_assert_eq!(i.contains(&mono(x.vertices(), d)).unwrap(), !x.contains_bits(d));
        }
    }

    #[test]
    fn intersection_is_exact(i in arb_ideal(numbered("x", 6)), j in arb_ideal(numbered("x", 6))) {
        let v = i.ring().clone();
        let k = intersect(&i, &j).unwrap();
        let s = sum(&i, &j).unwrap();
        for m in 0..1u32 << 6 {
            let m = mono(&v, m);
            let (a, b) = (i.contains(&m).unwrap(), j.contains(&m).unwrap());
            prop_assert_eq!(k.contains(&m).unwrap(), a && b);
            prop_assert_eq!(s.contains(&m).unwrap(), a || b);
        }
    }

    #[test]
    fn colon_law(i in arb_ideal(numbered("x", 6)), m in 0u32..64) {
        let v = i.ring().clone();
        let q = colon(&i, &mono(&v, m)).unwrap();
        for n in 0..1u32 << 6 {
            prop_assert_eq!(q.contains(&mono(&v, n)).unwrap(), i.contains(&mono(&v, n | m)).unwrap());
        }
    }

    #[test]
    fn contract_and_extend(i in arb_ideal(numbered("x", 6)), keep in 0u32..64) {
        let v = i.ring().clone();
        let sub = Subset::from_bits(&v, keep).unwrap();
        let c = contract(&i, &sub).unwrap();
        let back = extend(&c, &v).unwrap();
        for m in 0..1u32 << 6 {
            let inside = m & !keep == 0;
            let expect = inside && i.contains(&mono(&v, m)).unwrap();
            prop_assert_eq!(back.contains(&mono(&v, m)).unwrap() && inside, expect);
        }
    }

    #[test]
    fn injection_dictionary_matches_functors(seed in any::<u64>(), na in 0usize..5, extra in 0usize..4, d in 0.2f64..1.0) {
        let f = random_injection(&mut rng(seed), &numbered("a", na), &numbered("b", na + extra));
        let x = random_complex(f.domain(), seed, d).unwrap();
        let y = random_complex(f.codomain(), seed ^ 7, d).unwrap();
        for kind in FunctorKind::ALL {
            let z = if kind.is_covariant() { &x } else { &y };
            let via_ideal = injection_dictionary(kind, &f, &sr_ideal(z)).unwrap();
            let via_complex = sr_ideal(&apply(kind, &f, z).unwrap());
            prop_assert_eq!(via_ideal, via_complex, "{}", kind);
        }
    }

    #[test]
    fn surjection_dictionary_matches_functors(seed in any::<u64>(), nb in 1usize..4, extra in 0usize..4, d in 0.2f64..1.0) {
        let f = random_surjection(&mut rng(seed), &numbered("a", nb + extra), &numbered("b", nb));
        let x = random_complex(f.domain(), seed, d).unwrap();
        let y = random_complex(f.codomain(), seed ^ 7, d).unwrap();
        for kind in FunctorKind::ALL {
            let z = if kind.is_covariant() { &x } else { &y };
            let via_ideal = surjection_dictionary(kind, &f, &sr_ideal(z)).unwrap();
            let via_complex = sr_ideal(&apply(kind, &f, z).unwrap());
            prop_assert_eq!(via_ideal, via_complex, "{}", kind);
        }
        prop_assert_eq!(
            image_ideal(&sr_ideal(&x), &f).unwrap(),
            preimage_test_ideal(&sr_ideal(&x), &f).unwrap()
        );
    }

    #[test]
    fn disjoint_intersection_is_product(
        i in arb_ideal(numbered("x", 3)),
        j in arb_ideal(numbered("y", 3)),
    ) {
        let ring = i.ring().disjoint_union(j.ring()).unwrap();
        let (ei, ej) = (extend(&i, &ring).unwrap(), extend(&j, &ring).unwrap());
        prop_assert_eq!(intersect(&ei, &ej).unwrap(), product(&ei, &ej).unwrap());
        prop_assert_eq!(product(&i, &j).unwrap(), product(&ei, &ej).unwrap());
    }
}

#[test]
fn round_trip_exhaustive() {
    for n in 0..=4 {
        for x in enumerate_complexes(&numbered("v", n)).unwrap() {
            assert_eq!(complex_of_ideal(&sr_ideal(&x)), x);
        }
    }
}

#[test]
fn extreme_ideals() {
    let v = vs("a b c");
    assert_eq!(
        sr_ideal(&srcx::SimplicialComplex::void(&v)).render("x"),
        "I = (1)"
    );
    assert_eq!(
        sr_ideal(&srcx::SimplicialComplex::simplex(&v)).render("x"),
        "I = (0)"
    );
    assert_eq!(
        sr_ideal(&srcx::SimplicialComplex::empty_face(&v)).render("x"),
        "I = (x_a, x_b, x_c)"
    );
    let boundary = srcx::SimplicialComplex::boundary(&v);
    assert_eq!(sr_ideal(&boundary).render("y"), "I = (y_a*y_b*y_c)");
}

#[test]
fn generators_are_size_then_lex_ordered() {
    let v = vs("d c b a");
    let i = SqfIdeal::new(
        &v,
        &[
            sub(&v, "c d"),
            sub(&v, "b"),
            sub(&v, "a c"),
            sub(&v, "a b c"),
        ],
    )
    .unwrap();
    assert_eq!(i.to_string(), "I = (x_b, x_a*x_c, x_c*x_d)");
}
