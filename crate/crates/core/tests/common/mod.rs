#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srcx::oracle::{random_complex, random_map};
use srcx::{SetMap, SimplicialComplex, Subset, VertexSet};

pub fn vs(labels: &str) -> VertexSet {
    VertexSet::new(labels.split_whitespace()).unwrap()
}

pub fn numbered(prefix: &str, n: usize) -> VertexSet {
    VertexSet::numbered(prefix, n).unwrap()
}

pub fn sub(v: &VertexSet, labels: &str) -> Subset {
    v.subset(labels.split_whitespace()).unwrap()
}

pub fn cx(v: &VertexSet, facets: &[&str]) -> SimplicialComplex {
    let sets: Vec<Subset> = facets.iter().map(|f| sub(v, f)).collect();
    SimplicialComplex::from_facets(v, &sets).unwrap()
}

pub fn map(dom: &str, cod: &str, pairs: &str) -> SetMap {
    let pairs: Vec<(&str, &str)> = pairs
        .split_whitespace()
        .map(|p| p.split_once("->").unwrap())
        .collect();
    SetMap::new(&vs(dom), &vs(cod), pairs).unwrap()
}

/// Every subset of `v`.
pub fn subsets(v: &VertexSet) -> Vec<Subset> {
    (0..1u32 << v.len())
        .map(|s| Subset::from_bits(v, s).unwrap())
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complex on `n` numbered vertices `v0, v1, …`.
pub fn arb_complex(max: usize) -> impl Strategy<Value = SimplicialComplex> {
    (0..=max, any::<u64>(), 0.0f64..=1.0)
        .prop_map(|(n, seed, d)| random_complex(&numbered("v", n), seed, d).unwrap())
}

/// A complex on the given vertex set.
pub fn arb_complex_on(v: VertexSet) -> impl Strategy<Value = SimplicialComplex> {
    (any::<u64>(), 0.0f64..=1.0).prop_map(move |(seed, d)| random_complex(&v, seed, d).unwrap())
}

/// A map `a0.. → b0..` together with a complex on each side.
pub fn arb_map_pair(
    max: usize,
) -> impl Strategy<Value = (SetMap, SimplicialComplex, SimplicialComplex)> {
    (0..=max, 1..=max, any::<u64>(), 0.1f64..=1.0, 0.1f64..=1.0).prop_map(
        |(na, nb, seed, dx, dy)| {
            let a = numbered("a", na);
            let b = numbered("b", nb);
            let f = random_map(&mut rng(seed), &a, &b);
            let x = random_complex(&a, seed ^ 0x9e37, dx).unwrap();
            let y = random_complex(&b, seed ^ 0x7f4a, dy).unwrap();
            (f, x, y)
        },
    )
}
