//! Acceptance run: one line per criterion.
//!
//! `cargo test -p srcx-cli --test acceptance`

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srcx::adjoints::{lower_complex, upper_complex};
use srcx::categories::{
    compose_descriptors, compose_morphisms, is_morphism, ring_hom, verify_well_defined,
};
use srcx::ideals::{
    colon, contract, core_ideal, extend, fiber_expand, fiber_substitute, injection_dictionary,
    intersect, product, sum, transversal_test_ideal,
};
use srcx::oracle::{
    definitional_functor, enumerate_complexes, enumerate_maps, random_complex_from,
    random_injection, random_map, random_surjection, singlehat_composite, DownSetFamily, Hat,
};
use srcx::products::{
    cartesian_product, cartesian_product_ideal, cartesian_product_via_pullbacks, union_product,
    union_product_by_faces, union_product_ideal,
};
use srcx::{
    apply, sr_ideal, Category, FunctorKind, MorphismWitness, ProductKind, Result, SetMap,
    SimplicialComplex, SqfIdeal, SqfMonomial, Subset, VertexSet,
};
use FunctorKind::*;

/// Criteria whose literal statement is known not to hold; they are still
/// run and reported, but do not fail the target.
const KNOWN_FAILURES: &[u32] = &[5];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Result<Verdict> {
    Ok(Verdict { pass, detail })
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn numbered(prefix: &str, n: usize) -> VertexSet {
    VertexSet::numbered(prefix, n).unwrap()
}

fn random_cx(r: &mut ChaCha8Rng, v: &VertexSet) -> Result<SimplicialComplex> {
    let d = r.random_range(0.1..=1.0);
    random_complex_from(r, v, d)
}

fn sizes(r: &mut ChaCha8Rng, max_a: usize, max_b: usize) -> (usize, usize) {
    let na = r.random_range(0..=max_a);
    let nb = r.random_range(usize::from(na > 0)..=max_b);
    (na, nb)
}

fn complex_from_masks(
    v: &VertexSet,
    masks: impl IntoIterator<Item = u32>,
) -> Result<SimplicialComplex> {
    let sets = masks
        .into_iter()
        .map(|m| Subset::from_bits(v, m))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(v, &sets)
}

fn adjunctions() -> Result<Verdict> {
    let mut r = rng(1);
    let (mut checks, mut failures, mut tight) = (0, 0, 0);
    for _ in 0..1000 {
        let (na, nb) = sizes(&mut r, 6, 6);
        let (a, b) = (numbered("a", na), numbered("b", nb));
        let f = random_map(&mut r, &a, &b);
        let x = random_cx(&mut r, &a)?;
        let y = random_cx(&mut r, &b)?;
        let ap = |k, z: &SimplicialComplex| apply(k, &f, z);
        let le = |p: &SimplicialComplex, q: &SimplicialComplex| p.is_subcomplex_of(q);
        // Each pair is checked on the random inputs and on a pair where the
        // left side holds by construction.
        let ee = ap(ShriekShriek, &x)?;
        let se = ap(StarShriek, &y)?;
        let ss = ap(StarStar, &x)?;
        let sa = ap(StarUpper, &y)?;
        for (x, y) in [(&x, &y), (&x, &ee)] {
            let results = [le(&ap(ShriekShriek, x)?, y)?, le(x, &ap(StarShriek, y)?)?];
            failures += usize::from(results[0] != results[1]);
            tight += usize::from(results[0]);
        }
        for (y, x) in [(&y, &x), (&y, &se)] {
            let results = [le(&ap(StarShriek, y)?, x)?, le(y, &ap(StarStar, x)?)?];
            failures += usize::from(results[0] != results[1]);
            tight += usize::from(results[0]);
        }
        for (x, y) in [(&x, &y), (&x, &ss)] {
            let results = [le(&ap(StarStar, x)?, y)?, le(x, &ap(StarUpper, y)?)?];
            failures += usize::from(results[0] != results[1]);
            tight += usize::from(results[0]);
        }
        for (y, x) in [(&y, &x), (&y, &sa)] {
            let results = [le(&ap(StarUpper, y)?, x)?, le(y, &ap(UpperUpper, x)?)?];
            failures += usize::from(results[0] != results[1]);
            tight += usize::from(results[0]);
        }
        checks += 8;
    }
    verdict(
        failures == 0,
        format!("1000 triples, {checks} biconditionals ({tight} with both sides true), {failures} failures"),
    )
}

fn oracle_equivalence() -> Result<Verdict> {
    let mut r = rng(2);
    let (mut maps, mut checks, mut failures) = (0, 0, 0);
    for na in 0..=4 {
        for nb in usize::from(na > 0)..=3 {
            let (a, b) = (numbered("a", na), numbered("b", nb));
            for f in enumerate_maps(&a, &b) {
                maps += 1;
                for _ in 0..200 {
                    let x = random_cx(&mut r, &a)?;
                    let y = random_cx(&mut r, &b)?;
                    for kind in FunctorKind::ALL {
                        let z = if kind.is_covariant() { &x } else { &y };
                        let fast = apply(kind, &f, z)?;
                        let slow =
                            definitional_functor(kind, &f, &DownSetFamily::from_complex(z)?)?
                                .to_complex();
                        failures += usize::from(fast != slow);
                        checks += 1;
                    }
                }
            }
        }
    }
    verdict(
        failures == 0,
        format!("{maps} maps x 200 complexes, {checks} comparisons, {failures} failures"),
    )
}

fn single_hats() -> Result<Verdict> {
    let mut r = rng(3);
    let mut failures = 0;
    for _ in 0..500 {
        let (na, nb) = sizes(&mut r, 5, 5);
        let (a, b) = (numbered("a", na), numbered("b", nb));
        let f = random_map(&mut r, &a, &b);
        let x = DownSetFamily::from_complex(&random_cx(&mut r, &a)?)?;
        let y = DownSetFamily::from_complex(&random_cx(&mut r, &b)?)?;
        let run = |inner, outer, z: &DownSetFamily| -> Result<DownSetFamily> {
            singlehat_composite(inner, outer, &f)?.apply(z)
        };
        let se = [
            run(Hat::Shriek, Hat::Star, &y)?,
            run(Hat::Star, Hat::Shriek, &y)?,
        ];
        let sa = [
            run(Hat::Upper, Hat::Star, &y)?,
            run(Hat::Star, Hat::Upper, &y)?,
        ];
        let ss = [
            run(Hat::Star, Hat::Star, &x)?,
            run(Hat::Upper, Hat::Shriek, &x)?,
            run(Hat::Shriek, Hat::Upper, &x)?,
        ];
        let agree = se[0] == se[1]
            && sa[0] == sa[1]
            && ss[0] == ss[1]
            && ss[1] == ss[2]
            && se[0].to_complex() == apply(StarShriek, &f, &y.to_complex())?
            && sa[0].to_complex() == apply(StarUpper, &f, &y.to_complex())?
            && ss[0].to_complex() == apply(StarStar, &f, &x.to_complex())?;
        failures += usize::from(!agree);
    }
    verdict(
        failures == 0,
        format!("500 instances, 7 composites each, {failures} failures"),
    )
}

fn alexander() -> Result<Verdict> {
    let mut r = rng(4);
    let mut failures = 0;
    for _ in 0..1000 {
        let (na, nb) = sizes(&mut r, 6, 6);
        let (a, b) = (numbered("a", na), numbered("b", nb));
        let f = random_map(&mut r, &a, &b);
        let x = random_cx(&mut r, &a)?;
        let y = random_cx(&mut r, &b)?;
        let ok = apply(StarStar, &f, &x.alexander_dual())?
            == apply(StarStar, &f, &x)?.alexander_dual()
            && apply(StarShriek, &f, &y.alexander_dual())?
                == apply(StarUpper, &f, &y)?.alexander_dual()
            && apply(ShriekShriek, &f, &x.alexander_dual())?
                == apply(UpperUpper, &f, &x)?.alexander_dual();
        failures += usize::from(!ok);
    }
    let mut complexes = 0;
    let mut involution_failures = 0;
    for n in 0..=4 {
        for x in enumerate_complexes(&numbered("v", n))? {
            let dual = x.alexander_dual();
            let ok = dual.alexander_dual() == x && dual == srcx::oracle::alexander_dual(&x)?;
            involution_failures += usize::from(!ok);
            complexes += 1;
        }
    }
    verdict(
        failures == 0 && involution_failures == 0,
        format!(
            "1000 instances x 3 identities, {failures} failures; involution on all {complexes} complexes with |A| <= 4, \
             {involution_failures} failures"
        ),
    )
}

fn injections() -> Result<Verdict> {
    let mut r = rng(5);
    let mut exact = [0usize; 5];
    let (mut literal_ee, mut literal_ee_one, mut one, mut other_bad) = (0, 0, 0, 0);
    for _ in 0..500 {
        let nb = r.random_range(0..=6);
        let b = numbered("v", nb);
        let kept: Vec<&String> = b.labels().iter().filter(|_| r.random_bool(0.6)).collect();
        let a = VertexSet::new(kept)?;
        let f = SetMap::inclusion(&a, &b)?;
        let x = random_cx(&mut r, &a)?;
        let y = random_cx(&mut r, &b)?;
        let (ix, iy) = (sr_ideal(&x), sr_ideal(&y));
        let e = f.missed();
        let e_mono = SqfIdeal::principal(&SqfMonomial::new(e.clone()));
        let ix_b = extend(&ix, &b)?;

        let se = contract(&iy, &f.range())? == sr_ideal(&apply(StarShriek, &f, &y)?);
        let sa = contract(&colon(&iy, &SqfMonomial::new(e.clone()))?, &f.range())?
            == sr_ideal(&apply(StarUpper, &f, &y)?);
        let ee_route = sr_ideal(&apply(ShriekShriek, &f, &x)?);
        let ss = ix_b == sr_ideal(&apply(StarStar, &f, &x)?);
        let aa = product(&ix_b, &e_mono)? == sr_ideal(&apply(UpperUpper, &f, &x)?);
        let ee_literal = sum(&ix_b, &e_mono)? == ee_route;
        let ee_vars = sum(&ix_b, &SqfIdeal::variables(&e))? == ee_route;

        for (k, ok) in [se, sa, ss, aa, ee_vars].into_iter().enumerate() {
            exact[k] += usize::from(ok);
        }
        literal_ee += usize::from(ee_literal);
        if e.len() == 1 {
            one += 1;
            literal_ee_one += usize::from(ee_literal);
        }

        let a2 = numbered("a", r.random_range(0..=nb));
        let g = random_injection(&mut r, &a2, &b);
        let x2 = random_cx(&mut r, &a2)?;
        for kind in FunctorKind::ALL {
            let z = if kind.is_covariant() { &x2 } else { &y };
            if injection_dictionary(kind, &g, &sr_ideal(z))? != sr_ideal(&apply(kind, &g, z)?) {
                other_bad += 1;
            }
        }
    }
    let others = exact.iter().all(|&n| n == 500) && other_bad == 0;
    let detail = format!(
        "se {}/500, sa {}/500, ss {}/500, aa {}/500 exact; f^!! via (I_X)+(x^•_E) exact on {literal_ee}/500 \
         ({literal_ee_one}/{one} with |E| = 1), via (I_X)+(x^+_E) exact on {}/500; \
         library dictionary on 500 further injections, {other_bad} failures",
        exact[0], exact[1], exact[2], exact[3], exact[4]
    );
    verdict(others && literal_ee == 500, detail)
}

fn surjections() -> Result<Verdict> {
    let mut r = rng(6);
    let mut failures = [0usize; 5];
    for _ in 0..500 {
        let nb = r.random_range(1..=4);
        let na = r.random_range(nb..=8);
        let (a, b) = (numbered("a", na), numbered("b", nb));
        let f = random_surjection(&mut r, &a, &b);
        let x = random_cx(&mut r, &a)?;
        let y = random_cx(&mut r, &b)?;
        let (ix, iy) = (sr_ideal(&x), sr_ideal(&y));
        let upper = apply(StarUpper, &f, &y)?;
        let checks = [
            fiber_substitute(&iy, &f)? == sr_ideal(&upper),
            fiber_expand(&iy, &f)? == sr_ideal(&apply(StarShriek, &f, &y)?),
            core_ideal(&ix, &f)? == sr_ideal(&apply(UpperUpper, &f, &x)?),
            transversal_test_ideal(&ix, &f)? == sr_ideal(&apply(ShriekShriek, &f, &x)?),
            y.cofacets().len() == upper.cofacets().len(),
        ];
        for (k, ok) in checks.into_iter().enumerate() {
            failures[k] += usize::from(!ok);
        }
    }
    verdict(
        failures.iter().all(|&n| n == 0),
        format!(
            "500 instances; failures: fiber_substitute {}, fiber_expand {}, core_ideal {}, transversal_test_ideal {}, \
             cofacet count {}",
            failures[0], failures[1], failures[2], failures[3], failures[4]
        ),
    )
}

fn intervals() -> Result<Verdict> {
    const BUDGET: usize = 4096;
    let mut r = rng(7);
    let (mut intervals, mut full, mut members, mut partial_members) = (0, 0, 0usize, 0usize);
    let (mut outside, mut failures) = (0, 0);
    let mut profiles: Vec<Vec<usize>> = vec![vec![]];
    for len in 1..=3 {
        let mut next = Vec::new();
        for p in profiles.iter().filter(|p| p.len() == len - 1) {
            for s in 1..=3 {
                next.push([p.clone(), vec![s]].concat());
            }
        }
        profiles.extend(next);
    }
    for profile in &profiles {
        let na: usize = profile.iter().sum();
        let (a, b) = (numbered("a", na), numbered("b", profile.len()));
        let assign: Vec<(String, String)> = profile
            .iter()
            .enumerate()
            .flat_map(|(j, &s)| std::iter::repeat_n(j, s))
            .enumerate()
            .map(|(i, j)| (a.label(i).to_owned(), b.label(j).to_owned()))
            .collect();
        let f = SetMap::new(&a, &b, assign)?;
        for y in enumerate_complexes(&b)? {
            intervals += 1;
            let lower = lower_complex(&f, &y)?;
            let upper = upper_complex(&f, &y)?;
            let ss = |z: &SimplicialComplex| apply(StarStar, &f, z);
            let mut ok = lower.is_subcomplex_of(&upper)?;
            // f^{**}(X) only sees which full preimages lie in X, and the
            // interval fixes each of them.
            for c in 0..1u32 << b.len() {
                let pre = f.preimage(&Subset::from_bits(&b, c)?)?.bits();
                ok &= if y.contains_bits(c) {
                    lower.contains_bits(pre)
                } else {
                    !upper.contains_bits(pre)
                };
            }
            let (some, complete) = interval_members(&lower, &upper, BUDGET)?;
            if complete {
                full += 1;
                members += some.len();
            } else {
                partial_members += some.len();
            }
            for x in &some {
                ok &= ss(x)? == y;
            }
            let mut outsiders = Vec::new();
            for &facet in lower.facet_bits() {
                let faces = upper
                    .face_bits()?
                    .into_iter()
                    .filter(|&m| m & facet != facet);
                outsiders.push(complex_from_masks(&a, faces)?);
            }
            for &n in &upper.cofacet_bits() {
                outsiders.push(lower.lattice_join(&complex_from_masks(&a, [n])?)?);
            }
            for _ in 0..16 {
                outsiders.push(random_cx(&mut r, &a)?);
            }
            for x in outsiders {
                if !(lower.is_subcomplex_of(&x)? && x.is_subcomplex_of(&upper)?) {
                    outside += 1;
                    ok &= ss(&x)? != y;
                }
            }
            failures += usize::from(!ok);
        }
    }
    verdict(
        failures == 0,
        format!(
            "{} maps, {intervals} intervals: {full} enumerated in full ({members} complexes); the other {} \
             (over {BUDGET} members) certified by full-preimage membership, first {partial_members} members \
             checked; {outside} complexes outside rejected; {failures} failures",
            profiles.len(),
            intervals - full
        ),
    )
}

/// Complexes between `lower` and `upper`, at most `budget` of them, and
/// whether that is all of them.
fn interval_members(
    lower: &SimplicialComplex,
    upper: &SimplicialComplex,
    budget: usize,
) -> Result<(Vec<SimplicialComplex>, bool)> {
    let v = lower.vertices();
    let mut present = vec![false; 1 << v.len()];
    for m in lower.face_bits()? {
        present[m as usize] = true;
    }
    let mut free: Vec<u32> = upper
        .face_bits()?
        .into_iter()
        .filter(|&m| !present[m as usize])
        .collect();
    free.sort_by_key(|m| m.count_ones());
    let mut out = Vec::new();
    let mut stack = vec![(0usize, present)];
    while let Some((k, present)) = stack.pop() {
        let Some(&s) = free.get(k) else {
            if out.len() == budget {
                return Ok((out, false));
            }
            let faces = (0..present.len() as u32).filter(|&m| present[m as usize]);
            out.push(complex_from_masks(v, faces)?);
            continue;
        };
        let closed = (0..v.len())
            .filter(|&i| s >> i & 1 == 1)
            .all(|i| present[(s & !(1 << i)) as usize]);
        if closed {
            let mut with = present.clone();
            with[s as usize] = true;
            stack.push((k + 1, with));
        }
        stack.push((k + 1, present));
    }
    Ok((out, true))
}

fn read_fixture_complex(name: &str) -> SimplicialComplex {
    srcx_cli::read_complex(&common::fixtures().join("inputs").join(name)).unwrap()
}

fn read_fixture_map(name: &str) -> SetMap {
    srcx_cli::read_map(&common::fixtures().join("inputs").join(name)).unwrap()
}

fn worked_examples() -> Result<Verdict> {
    let mut notes = Vec::new();
    let mut ok = true;

    let x = read_fixture_complex("split_r.cx");
    let f = read_fixture_map("collapse_r.map");
    let y = apply(StarStar, &f, &x)?;
    let facets: Vec<String> = y.facets().iter().map(Subset::to_string).collect();
    let facets_ok = facets == ["{a x y}", "{b x y}", "{r x}", "{r y}"];
    let cofacets: BTreeSet<String> = y.cofacets().iter().map(Subset::to_string).collect();
    let printed: BTreeSet<String> = ["{a r}", "{b r}", "{a b}", "{r x y}"]
        .map(String::from)
        .into();
    let cofacets_ok = cofacets == printed;
    ok &= facets_ok && cofacets_ok;
    notes.push(format!(
        "r1/r2 collapse: facets {} {}, cofacets {} as a set",
        facets.join(" "),
        if facets_ok { "match" } else { "DIFFER" },
        if cofacets_ok { "match" } else { "DIFFER" }
    ));

    let mut profiles_checked = Vec::new();
    for (map, point, frozen) in [
        ("fibers_2_1.map", "point_2.cx", "sphere_join_2_1.cx"),
        ("fibers_2_2_1.map", "point_3.cx", "sphere_join_2_2_1.cx"),
    ] {
        let f = read_fixture_map(map);
        let got = apply(StarUpper, &f, &read_fixture_complex(point))?;
        ok &= got == read_fixture_complex(frozen);
        profiles_checked.push(
            map.trim_end_matches(".map")
                .trim_start_matches("fibers_")
                .replace('_', ","),
        );
    }
    let mut profiles = 0;
    for p in [
        vec![1],
        vec![2],
        vec![3],
        vec![2, 1],
        vec![1, 2],
        vec![3, 3],
        vec![2, 2, 1],
        vec![1, 3, 2],
        vec![3, 3, 3],
        vec![2, 2, 2, 2],
    ] {
        let na: usize = p.iter().sum();
        let (a, b) = (numbered("x", na), numbered("b", p.len()));
        let mut assign = Vec::new();
        let mut fibers = Vec::new();
        let mut next = 0;
        for (j, &s) in p.iter().enumerate() {
            let labels: Vec<&str> = (next..next + s).map(|i| a.label(i)).collect();
            assign.extend(
                labels
                    .iter()
                    .map(|&l| (l.to_owned(), b.label(j).to_owned())),
            );
            fibers.push(labels);
            next += s;
        }
        let f = SetMap::new(&a, &b, assign)?;
        let got = apply(StarUpper, &f, &SimplicialComplex::empty_face(&b))?;
        let mut expected = SimplicialComplex::empty_face(&VertexSet::new(Vec::<String>::new())?);
        for fiber in &fibers {
            expected = expected.join(&SimplicialComplex::boundary(&VertexSet::new(
                fiber.iter().copied(),
            )?))?;
        }
        let gens = fibers
            .iter()
            .map(|fb| a.subset(fb.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        ok &= got == expected && sr_ideal(&got) == SqfIdeal::new(&a, &gens)?;
        profiles += 1;
    }
    notes.push(format!(
        "f^*¡ of {{∅}} is the join of fiber boundaries with ideal (x^•_A_b ...) on profiles ({}) from files and {profiles} \
         generated profiles",
        profiles_checked.join("), (")
    ));
    verdict(ok, notes.join("; "))
}

fn products() -> Result<Verdict> {
    let mut pairs = 0;
    let mut failures = 0;
    let (mut literal_nonvoid, mut literal_nonvoid_ok, mut literal_void_bad) = (0, 0, 0);
    let sides: Vec<(VertexSet, Vec<SimplicialComplex>)> = (0..=3)
        .map(|n| {
            let v = numbered("a", n);
            let all = enumerate_complexes(&v)?;
            Ok((v, all))
        })
        .collect::<Result<_>>()?;
    let right: Vec<(VertexSet, Vec<SimplicialComplex>)> = (0..=3)
        .map(|n| {
            let v = numbered("b", n);
            let all = enumerate_complexes(&v)?;
            Ok((v, all))
        })
        .collect::<Result<_>>()?;
    for (a, xs) in &sides {
        for (b, ys) in &right {
            let ab = a.disjoint_union(b)?;
            let vars_a = SqfIdeal::variables(&ab.subset(a.labels())?);
            let vars_b = SqfIdeal::variables(&ab.subset(b.labels())?);
            for x in xs {
                for y in ys {
                    pairs += 1;
                    let (ix, iy) = (sr_ideal(x), sr_ideal(y));
                    for kind in ProductKind::ALL {
                        let routes = if kind.is_union() {
                            [
                                union_product_by_faces(kind, x, y)?,
                                union_product(kind, x, y)?,
                                srcx::complex_of_ideal(&union_product_ideal(kind, &ix, &iy)?),
                            ]
                        } else {
                            [
                                cartesian_product(kind, x, y)?,
                                cartesian_product_via_pullbacks(kind, x, y)?,
                                srcx::complex_of_ideal(&cartesian_product_ideal(kind, &ix, &iy)?),
                            ]
                        };
                        failures += usize::from(routes[0] != routes[1] || routes[0] != routes[2]);
                    }
                    let literal = sum(
                        &sum(&extend(&ix, &ab)?, &extend(&iy, &ab)?)?,
                        &product(&vars_a, &vars_b)?,
                    )?;
                    let actual = sr_ideal(&union_product(ProductKind::DisjointUnion, x, y)?);
                    if x.is_void() || y.is_void() {
                        literal_void_bad += usize::from(literal != actual);
                    } else {
                        literal_nonvoid += 1;
                        literal_nonvoid_ok += usize::from(literal == actual);
                    }
                }
            }
        }
    }

    let mut r = rng(9);
    let mut identity_failures = 0;
    for _ in 0..500 {
        let (na, nb) = (r.random_range(0..=5), r.random_range(0..=5));
        let (a, b) = (numbered("a", na), numbered("b", nb));
        let ab = a.disjoint_union(&b)?;
        let i = extend(&sr_ideal(&random_cx(&mut r, &a)?), &ab)?;
        let j = extend(&sr_ideal(&random_cx(&mut r, &b)?), &ab)?;
        identity_failures += usize::from(intersect(&i, &j)? != product(&i, &j)?);
    }
    verdict(
        failures == 0 && identity_failures == 0 && literal_nonvoid_ok == literal_nonvoid,
        format!(
            "{pairs} pairs x 8 kinds, three routes each, {failures} failures; disjoint-union ideal \
             (I_X)+(I_Y)+(x^+_A)(y^+_B) exact on {literal_nonvoid_ok}/{literal_nonvoid} non-void pairs \
             (differs on {literal_void_bad} pairs with a void factor); intersection = product on 500 \
             disjoint-block pairs, {identity_failures} failures"
        ),
    )
}

fn valid_target(
    category: Category,
    map: &SetMap,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    let kind = match category {
        Category::Sc0 => ShriekShriek,
        Category::Sc1 => StarStar,
        Category::Sc2 => StarShriek,
    };
    apply(kind, map, x)?.lattice_join(y)
}

fn categories() -> Result<Verdict> {
    let mut r = rng(10);
    let (mut valid, mut failures, mut composed) = (0, 0, 0);
    for trial in 0..1000 {
        let category = Category::ALL[trial % 3];
        let (na, nb, nc) = (
            r.random_range(1..=5),
            r.random_range(1..=5),
            r.random_range(1..=5),
        );
        let (a, b, c) = (numbered("a", na), numbered("b", nb), numbered("c", nc));
        let arrow = |r: &mut ChaCha8Rng, s: &VertexSet, t: &VertexSet| {
            if category.is_reversed() {
                random_map(r, t, s)
            } else {
                random_map(r, s, t)
            }
        };
        let map = arrow(&mut r, &a, &b);
        let x = random_cx(&mut r, &a)?;
        let mut y = random_cx(&mut r, &b)?;
        if trial % 2 == 0 {
            y = valid_target(category, &map, &x, &y)?;
        }
        let is = is_morphism(category, &map, &x, &y)?;
        let defined = verify_well_defined(&ring_hom(category, &map), &sr_ideal(&y), &sr_ideal(&x))?;
        failures += usize::from(is != defined);
        if !is {
            continue;
        }
        valid += 1;
        let m1 = MorphismWitness::new(category, map, x, y)?;
        let map2 = arrow(&mut r, &b, &c);
        let z = random_cx(&mut r, &c)?;
        let z = valid_target(category, &map2, &m1.target, &z)?;
        let m2 = MorphismWitness::new(category, map2, m1.target.clone(), z)?;
        let m = compose_morphisms(&m1, &m2)?;
        let ok = m2.is_valid()?
            && m.is_valid()?
            && compose_descriptors(&m1.descriptor(), &m2.descriptor())? == m.descriptor();
        failures += usize::from(!ok);
        composed += 1;
    }
    verdict(
        failures == 0,
        format!("1000 instances ({valid} morphisms), {composed} compositions, {failures} failures"),
    )
}

fn golden() -> Result<Verdict> {
    let (total, bad) = common::golden_mismatches();
    let names: Vec<&str> = bad
        .iter()
        .map(|b| b.split(':').next().unwrap_or(""))
        .collect();
    verdict(
        bad.is_empty(),
        format!(
            "{total} cases byte-exact, {} mismatches{}",
            bad.len(),
            names.iter().map(|n| format!(" {n}")).collect::<String>()
        ),
    )
}

type Check = fn() -> Result<Verdict>;

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<u64>, Check); 11] = [
        (1, "adjunction biconditionals", Some(10), adjunctions),
        (
            2,
            "apply vs definitional functors",
            Some(60),
            oracle_equivalence,
        ),
        (3, "single-hat composites", None, single_hats),
        (4, "Alexander identities", None, alexander),
        (5, "injection dictionary", None, injections),
        (6, "surjection dictionary", None, surjections),
        (7, "solution intervals of f^**", None, intervals),
        (8, "worked examples", None, worked_examples),
        (9, "products", None, products),
        (10, "morphisms vs ring maps", None, categories),
        (11, "CLI golden files", Some(5), golden),
    ];
    let (mut passed, mut known, mut failed) = (0, 0, 0);
    for (n, name, limit, check) in criteria {
        let start = Instant::now();
        let mut v = check().unwrap_or_else(|e| Verdict {
            pass: false,
            detail: format!("error: {e}"),
        });
        let elapsed = start.elapsed();
        let timing = match limit {
            Some(s) => {
                if elapsed >= Duration::from_secs(s) {
                    v.pass = false;
                }
                format!("{elapsed:.2?} < {s}s")
            }
            None => format!("{elapsed:.2?}"),
        };
        let status = if v.pass {
            passed += 1;
            "PASS"
        } else if KNOWN_FAILURES.contains(&n) {
            known += 1;
            "FAIL (known)"
        } else {
            failed += 1;
            "FAIL"
        };
        println!("criterion {n:>2} {status}: {name}: {} [{timing}]", v.detail);
    }
    println!("{passed} passed, {known} known failures, {failed} failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
