//! Squarefree monomial ideals and the Stanley-Reisner dictionary.
//!
//! A squarefree monomial `x^•_E = ∏_{e∈E} x_e` is identified with its support
//! `E`, and an ideal with the antichain of its minimal generator supports.
//! The zero ideal has no generators; the unit ideal has the single
//! generator `∅`. No coefficient arithmetic is involved.

use std::fmt;

use crate::adjoints::FunctorKind;
use crate::bits;
use crate::complex::{guard, SimplicialComplex, Subset, VertexSet, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::setmap::SetMap;

/// The monomial `x^•_E` of a support `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqfMonomial {
    support: Subset,
}

impl SqfMonomial {
    pub fn new(support: Subset) -> Self {
        SqfMonomial { support }
    }

    pub fn support(&self) -> &Subset {
        &self.support
    }

    /// `x_a*x_b`, or `1` for the empty support.
    pub fn render(&self, prefix: &str) -> String {
        render_support(&self.support.labels(), prefix)
    }

    /// Divisibility, which is inclusion of supports.
    pub fn divides(&self, other: &SqfMonomial) -> Result<bool> {
        self.support.is_subset_of(&other.support)
    }
}

fn render_support(labels: &[&str], prefix: &str) -> String {
    if labels.is_empty() {
        return "1".to_string();
    }
    labels
        .iter()
        .map(|l| format!("{prefix}_{l}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// A squarefree monomial ideal in `k[x_ring]`.
#[derive(Clone)]
pub struct SqfIdeal {
    ring: VertexSet,
    gens: Vec<u32>,
}

impl SqfIdeal {
    pub(crate) fn from_bits(ring: VertexSet, gens: Vec<u32>) -> Self {
        let mut gens = bits::minimal(gens);
        ring.sort_canonical(&mut gens);
        SqfIdeal { ring, gens }
    }

    /// The ideal generated by the monomials with the given supports.
    pub fn new(ring: &VertexSet, supports: &[Subset]) -> Result<Self> {
        let gens = supports
            .iter()
            .map(|s| s.bits_in(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(ring.clone(), gens))
    }

    pub fn zero(ring: &VertexSet) -> Self {
        SqfIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &VertexSet) -> Self {
        SqfIdeal {
            ring: ring.clone(),
            gens: vec![0],
        }
    }

    /// The principal ideal `(x^•_E)`.
    pub fn principal(m: &SqfMonomial) -> Self {
        let s = m.support();
        SqfIdeal {
            ring: s.over().clone(),
            gens: vec![s.bits()],
        }
    }

    /// `(x^+_E)`, generated by the variables of `E`.
    pub fn variables(e: &Subset) -> Self {
        Self::from_bits(
            e.over().clone(),
            bits::ones(e.bits()).map(|i| 1 << i).collect(),
        )
    }

    pub fn ring(&self) -> &VertexSet {
        &self.ring
    }

    pub fn generators(&self) -> Vec<SqfMonomial> {
        self.gens
            .iter()
            .map(|&g| SqfMonomial::new(Subset::raw(self.ring.clone(), g)))
            .collect()
    }

    pub fn generator_bits(&self) -> &[u32] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [0]
    }

    pub(crate) fn contains_bits(&self, m: u32) -> bool {
        self.gens.iter().any(|&g| bits::is_subset(g, m))
    }

    pub fn contains(&self, m: &SqfMonomial) -> Result<bool> {
        Ok(self.contains_bits(m.support().bits_in(&self.ring)?))
    }

    /// The same ideal expressed over `ring`, which must hold the same labels.
    pub fn conform_to(&self, ring: &VertexSet) -> Result<SqfIdeal> {
        if self.ring.same_layout(ring) {
            return Ok(self.clone());
        }
        let perm = self
            .ring
            .permutation_to(ring)
            .ok_or_else(|| ring.mismatch(&self.ring))?;
        let gens = self.gens.iter().map(|&g| bits::remap(g, &perm)).collect();
        Ok(Self::from_bits(ring.clone(), gens))
    }

    /// Variables occurring in some minimal generator.
    pub fn support(&self) -> Subset {
        Subset::raw(self.ring.clone(), self.gens.iter().fold(0, |a, &g| a | g))
    }

    /// `I = (x_a*x_b, x_c)`, `I = (0)` or `I = (1)`.
    pub fn render(&self, prefix: &str) -> String {
        let body = if self.is_zero() {
            "0".to_string()
        } else {
            self.gens
                .iter()
                .map(|&g| render_support(&self.ring.mask_labels(g), prefix))
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("I = ({body})")
    }
}

impl PartialEq for SqfIdeal {
    fn eq(&self, other: &Self) -> bool {
        other
            .conform_to(&self.ring)
            .is_ok_and(|o| o.gens == self.gens)
    }
}

impl Eq for SqfIdeal {}

impl fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in k[{}]", self.render("x"), self.ring)
    }
}

impl fmt::Display for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

/// `I_X`, generated by the monomials of the cofacets of `X`.
pub fn sr_ideal(x: &SimplicialComplex) -> SqfIdeal {
    SqfIdeal::from_bits(x.vertices().clone(), x.cofacet_bits())
}

/// The complex whose non-faces are the supports of monomials in `I`.
pub fn complex_of_ideal(i: &SqfIdeal) -> SimplicialComplex {
    SimplicialComplex::from_cofacet_bits(i.ring.clone(), &i.gens)
}

fn same_ring(i: &SqfIdeal, j: &SqfIdeal) -> Result<SqfIdeal> {
    j.conform_to(&i.ring)
}

pub fn sum(i: &SqfIdeal, j: &SqfIdeal) -> Result<SqfIdeal> {
    let j = same_ring(i, j)?;
    let gens = i.gens.iter().chain(&j.gens).copied().collect();
    Ok(SqfIdeal::from_bits(i.ring.clone(), gens))
}

fn pairwise_unions(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter()
        .flat_map(|&g| b.iter().map(move |&h| g | h))
        .collect()
}

/// `I·J`. Over one ring the product of squarefree monomials is taken as the
/// union of supports, which is only the true product when the two ideals use
/// disjoint variables; a warning is logged otherwise. Ideals over disjoint
/// rings are first extended to the combined ring.
pub fn product(i: &SqfIdeal, j: &SqfIdeal) -> Result<SqfIdeal> {
    let (i, j) = if i.ring == j.ring {
        (i.clone(), same_ring(i, j)?)
    } else {
        let ring = i.ring.disjoint_union(&j.ring)?;
        (extend(i, &ring)?, extend(j, &ring)?)
    };
    if i.support().bits() & j.support().bits() != 0 {
        log::warn!(
            "squarefree product of ideals sharing variables in k[{}]",
            i.ring
        );
    }
    Ok(SqfIdeal::from_bits(
        i.ring.clone(),
        pairwise_unions(&i.gens, &j.gens),
    ))
}

/// `I ∩ J`, generated by the least common multiples of generator pairs.
pub fn intersect(i: &SqfIdeal, j: &SqfIdeal) -> Result<SqfIdeal> {
    let j = same_ring(i, j)?;
    Ok(SqfIdeal::from_bits(
        i.ring.clone(),
        pairwise_unions(&i.gens, &j.gens),
    ))
}

/// `(I : m)`, generated by the supports of the generators minus that of `m`.
pub fn colon(i: &SqfIdeal, m: &SqfMonomial) -> Result<SqfIdeal> {
    let e = m.support().bits_in(&i.ring)?;
    let gens = i.gens.iter().map(|&g| g & !e).collect();
    Ok(SqfIdeal::from_bits(i.ring.clone(), gens))
}

/// `I ∩ k[x_{A'}]` as an ideal of `k[x_{A'}]`.
pub fn contract(i: &SqfIdeal, sub: &Subset) -> Result<SqfIdeal> {
    let keep = sub.bits_in(&i.ring)?;
    let target = i.ring.restrict(keep);
    let mut perm = vec![0; i.ring.len()];
    for (k, b) in bits::ones(keep).enumerate() {
        perm[b] = k;
    }
    let gens = i
        .gens
        .iter()
        .filter(|&&g| bits::is_subset(g, keep))
        .map(|&g| bits::remap(g, &perm))
        .collect();
    Ok(SqfIdeal::from_bits(target, gens))
}

/// The ideal generated by `I` in `k[x_ring]` for a larger `ring`.
pub fn extend(i: &SqfIdeal, ring: &VertexSet) -> Result<SqfIdeal> {
    let perm = i.ring.embedding_into(ring)?;
    let gens = i.gens.iter().map(|&g| bits::remap(g, &perm)).collect();
    Ok(SqfIdeal::from_bits(ring.clone(), gens))
}

fn expect_ring(i: &SqfIdeal, ring: &VertexSet) -> Result<SqfIdeal> {
    i.conform_to(ring)
}

/// The ideal of `kind` applied along an injective `f : A → B`, computed
/// from the ideal of the input alone. With `E = B ∖ f(A)`:
///
/// | kind | input | result |
/// |------|-------|--------|
/// | `ee` | `I_X` | `I_X + (x^+_E)` |
/// | `ss` | `I_X` | `I_X` |
/// | `aa` | `I_X` | `I_X ∩ (x^•_E)` |
/// | `se` | `I_Y` | `I_Y ∩ k[x_A]` |
/// | `sa` | `I_Y` | `(I_Y : x^•_E) ∩ k[x_A]` |
pub fn injection_dictionary(kind: FunctorKind, f: &SetMap, input: &SqfIdeal) -> Result<SqfIdeal> {
    if !f.is_injective() {
        return Err(Error::NotInjective);
    }
    let b = f.codomain();
    let e = f.missed();
    let pushed = |i: &SqfIdeal| -> Result<SqfIdeal> {
        let i = expect_ring(i, f.domain())?;
        let gens = i.gens.iter().map(|&g| f.image_bits(g)).collect();
        Ok(SqfIdeal::from_bits(b.clone(), gens))
    };
    let pulled = |i: &SqfIdeal| -> SqfIdeal {
        let range = f.range_bits();
        let gens = i
            .gens
            .iter()
            .filter(|&&g| bits::is_subset(g, range))
            .map(|&g| f.preimage_bits(g))
            .collect();
        SqfIdeal::from_bits(f.domain().clone(), gens)
    };
    match kind {
        FunctorKind::ShriekShriek => sum(&pushed(input)?, &SqfIdeal::variables(&e)),
        FunctorKind::StarStar => pushed(input),
        FunctorKind::UpperUpper => {
            intersect(&pushed(input)?, &SqfIdeal::principal(&SqfMonomial::new(e)))
        }
        FunctorKind::StarShriek => Ok(pulled(&expect_ring(input, b)?)),
        FunctorKind::StarUpper => {
            let y = expect_ring(input, b)?;
            Ok(pulled(&colon(&y, &SqfMonomial::new(e))?))
        }
    }
}

fn require_surjective(f: &SetMap) -> Result<()> {
    if f.is_surjective() {
        Ok(())
    } else {
        Err(Error::NotSurjective)
    }
}

/// Replaces each generator `y^•_C` by `x^•_{f⁻¹(C)}`; the ideal of `Y^f`.
pub fn fiber_substitute(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    require_surjective(f)?;
    let i = expect_ring(i, f.codomain())?;
    let gens = i.gens.iter().map(|&c| f.preimage_bits(c)).collect();
    Ok(SqfIdeal::from_bits(f.domain().clone(), gens))
}

/// All transversal monomials choosing one variable from each fiber.
fn transversals(fibers: &[u32]) -> Vec<u32> {
    fibers.iter().fold(vec![0u32], |acc, &fiber| {
        acc.iter()
            .flat_map(|&t| bits::ones(fiber).map(move |a| t | (1 << a)))
            .collect()
    })
}

fn fibers_over(f: &SetMap, c: u32) -> Vec<u32> {
    bits::ones(c).map(|b| f.fiber_bits()[b]).collect()
}

/// Replaces each generator `y^•_C` by the product `∏_{b∈C} (x^+_{A_b})`;
/// the ideal of `Y_f`.
pub fn fiber_expand(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    require_surjective(f)?;
    let i = expect_ring(i, f.codomain())?;
    let gens = i
        .gens
        .iter()
        .flat_map(|&c| transversals(&fibers_over(f, c)))
        .collect();
    Ok(SqfIdeal::from_bits(f.domain().clone(), gens))
}

/// Generated by the `f`-cores of the monomials of `I`; the ideal of
/// `f^{¡¡}(X)` when `I = I_X`.
pub fn core_ideal(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    require_surjective(f)?;
    let i = expect_ring(i, f.domain())?;
    let gens = i.gens.iter().map(|&g| f.core_bits(g)).collect();
    Ok(SqfIdeal::from_bits(f.codomain().clone(), gens))
}

/// The minimal `C ⊆ B` such that every transversal monomial of
/// `∏_{b∈C} (x^+_{A_b})` lies in `I`; the ideal of `f^{!!}(X)` when
/// `I = I_X`.
pub fn transversal_test_ideal(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    require_surjective(f)?;
    let i = expect_ring(i, f.domain())?;
    test_ideal(f, |c| {
        transversals(&fibers_over(f, c))
            .into_iter()
            .all(|t| i.contains_bits(t))
    })
}

/// The minimal `C ⊆ B` with `x^•_{f⁻¹(C)} ∈ I`; the ideal of `f^{**}(X)`
/// when `I = I_X`.
pub fn preimage_test_ideal(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    let i = expect_ring(i, f.domain())?;
    test_ideal(f, |c| i.contains_bits(f.preimage_bits(c)))
}

fn test_ideal(f: &SetMap, member: impl Fn(u32) -> bool) -> Result<SqfIdeal> {
    let n = f.codomain().len();
    guard("codomain enumeration", n, ENUMERATION_LIMIT)?;
    let gens = (0..1u32 << n).filter(|&c| member(c)).collect();
    Ok(SqfIdeal::from_bits(f.codomain().clone(), gens))
}

/// Generated by the images `f(g)` of the generators; the ideal of
/// `f^{**}(X)` when `I = I_X`.
pub fn image_ideal(i: &SqfIdeal, f: &SetMap) -> Result<SqfIdeal> {
    let i = expect_ring(i, f.domain())?;
    let gens = i.gens.iter().map(|&g| f.image_bits(g)).collect();
    Ok(SqfIdeal::from_bits(f.codomain().clone(), gens))
}

/// The ideal of `kind` applied along a surjective `f`, computed from the
/// ideal of the input alone.
pub fn surjection_dictionary(kind: FunctorKind, f: &SetMap, input: &SqfIdeal) -> Result<SqfIdeal> {
    require_surjective(f)?;
    match kind {
        FunctorKind::ShriekShriek => transversal_test_ideal(input, f),
        FunctorKind::StarShriek => fiber_expand(input, f),
        FunctorKind::StarStar => image_ideal(input, f),
        FunctorKind::StarUpper => fiber_substitute(input, f),
        FunctorKind::UpperUpper => core_ideal(input, f),
    }
}
