//! The five functors induced by a set map `f : A → B`,
//!
//! ```text
//! f^{!!} ⊣ f^{*!} ⊣ f^{**} ⊣ f^{*¡} ⊣ f^{¡¡}
//! ```
//!
//! between complexes on `A` and complexes on `B`.
//!
//! [`shriek_shriek`], [`star_shriek`] and [`star_star`] work on facets for any
//! map. [`star_upper`] and [`upper_upper`] follow the face descriptions
//! literally and enumerate a power set. [`apply`] factors `f` into a
//! surjection followed by an inclusion and uses facet or cofacet formulas
//! for each factor, so it never enumerates.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::complex::{guard, SimplicialComplex, VertexSet, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::setmap::SetMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorKind {
    /// `f^{!!}`, tag `ee`.
    ShriekShriek,
    /// `f^{*!} = f^{!*}`, tag `se`.
    StarShriek,
    /// `f^{**}`, tag `ss`.
    StarStar,
    /// `f^{*¡} = f^{¡*}`, tag `sa`.
    StarUpper,
    /// `f^{¡¡}`, tag `aa`.
    UpperUpper,
}

impl FunctorKind {
    pub const ALL: [FunctorKind; 5] = [
        FunctorKind::ShriekShriek,
        FunctorKind::StarShriek,
        FunctorKind::StarStar,
        FunctorKind::StarUpper,
        FunctorKind::UpperUpper,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FunctorKind::ShriekShriek => "ee",
            FunctorKind::StarShriek => "se",
            FunctorKind::StarStar => "ss",
            FunctorKind::StarUpper => "sa",
            FunctorKind::UpperUpper => "aa",
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            FunctorKind::ShriekShriek => "f^{!!}",
            FunctorKind::StarShriek => "f^{*!}",
            FunctorKind::StarStar => "f^{**}",
            FunctorKind::StarUpper => "f^{*¡}",
            FunctorKind::UpperUpper => "f^{¡¡}",
        }
    }

    /// True for the kinds taking complexes on the domain to the codomain.
    pub fn is_covariant(self) -> bool {
        matches!(
            self,
            FunctorKind::ShriekShriek | FunctorKind::StarStar | FunctorKind::UpperUpper
        )
    }

    /// The vertex set inputs must live on.
    pub fn source(self, f: &SetMap) -> &VertexSet {
        if self.is_covariant() {
            f.domain()
        } else {
            f.codomain()
        }
    }

    /// The vertex set outputs live on.
    pub fn target(self, f: &SetMap) -> &VertexSet {
        if self.is_covariant() {
            f.codomain()
        } else {
            f.domain()
        }
    }
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FunctorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FunctorKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| format!("unknown functor {s:?}; expected one of ee, se, ss, sa, aa"))
    }
}

fn on<'a>(v: &VertexSet, z: &'a SimplicialComplex) -> Result<Cow<'a, SimplicialComplex>> {
    z.conform_to(v)
}

/// `f^{!!}(X)`, generated by the images of the faces of `X`.
pub fn shriek_shriek(f: &SetMap, x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let x = on(f.domain(), x)?;
    let facets = x.facet_bits().iter().map(|&d| f.image_bits(d)).collect();
    Ok(SimplicialComplex::from_bits(f.codomain().clone(), facets))
}

/// `f^{*!}(Y) = {T ⊆ A : f(T) ∈ Y}`.
pub fn star_shriek(f: &SetMap, y: &SimplicialComplex) -> Result<SimplicialComplex> {
    let y = on(f.codomain(), y)?;
    let facets = y.facet_bits().iter().map(|&c| f.preimage_bits(c)).collect();
    Ok(SimplicialComplex::from_bits(f.domain().clone(), facets))
}

/// `f^{**}(X) = {C ⊆ B : f⁻¹(C) ∈ X}`, whose facets are cores of facets.
pub fn star_star(f: &SetMap, x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let x = on(f.domain(), x)?;
    let facets = x.facet_bits().iter().map(|&d| f.core_bits(d)).collect();
    Ok(SimplicialComplex::from_bits(f.codomain().clone(), facets))
}

/// `f^{*¡}(Y) = {T ⊆ A : core_f(T) ∈ Y}` by enumeration of subsets of `A`.
pub fn star_upper(f: &SetMap, y: &SimplicialComplex) -> Result<SimplicialComplex> {
    let y = on(f.codomain(), y)?;
    let n = f.domain().len();
    guard("f^{*¡} enumeration", n, ENUMERATION_LIMIT)?;
    let member: Vec<bool> = (0..1u32 << n)
        .map(|t| y.contains_bits(f.core_bits(t)))
        .collect();
    Ok(from_indicator(f.domain(), &member))
}

/// `f^{¡¡}(X) = {C ⊆ B : every D with core_f(D) = C is in X}`.
///
/// `C` lacking some label of `B ∖ f(A)` is the core of nothing and is always
/// included. Otherwise only the maximal such `D` are tested: all of `f⁻¹(C)`
/// plus each remaining nonempty fiber minus one element.
pub fn upper_upper(f: &SetMap, x: &SimplicialComplex) -> Result<SimplicialComplex> {
    let x = on(f.domain(), x)?;
    let n = f.codomain().len();
    guard("f^{¡¡} enumeration", n, ENUMERATION_LIMIT)?;
    let missed = f.missed_bits();
    let range = f.range_bits();
    let member: Vec<bool> = (0..1u32 << n)
        .map(|c| {
            if !bits::is_subset(missed, c) {
                return true;
            }
            let base = f.preimage_bits(c);
            let open: Vec<u32> = bits::ones(range & !c).map(|b| f.fiber_bits()[b]).collect();
            all_maximal_in(&x, base, &open)
        })
        .collect();
    Ok(from_indicator(f.codomain(), &member))
}

/// Whether `base ∪ ⋃ (fiber ∖ {one element})` is a face for every choice.
fn all_maximal_in(x: &SimplicialComplex, base: u32, fibers: &[u32]) -> bool {
    match fibers.split_first() {
        None => x.contains_bits(base),
        Some((&fiber, rest)) => {
            bits::ones(fiber).all(|a| all_maximal_in(x, base | (fiber & !(1 << a)), rest))
        }
    }
}

/// The complex whose faces are the `s` with `member[s]`, which must be
/// downward closed.
pub(crate) fn from_indicator(vertices: &VertexSet, member: &[bool]) -> SimplicialComplex {
    let n = vertices.len();
    let facets = (0..member.len() as u32)
        .filter(|&s| member[s as usize])
        .filter(|&s| (0..n).all(|i| s & (1 << i) != 0 || !member[(s | (1 << i)) as usize]))
        .collect();
    SimplicialComplex::from_bits(vertices.clone(), facets)
}

/// Applies `kind` along `f`.
///
/// The map is split as `f = i ∘ s`; the surjection `s` is handled by facet
/// and cofacet substitution and the inclusion `i` by restriction, link and
/// cone constructions.
pub fn apply(kind: FunctorKind, f: &SetMap, z: &SimplicialComplex) -> Result<SimplicialComplex> {
    let z = on(kind.source(f), z)?;
    if f.is_surjective() {
        return Ok(surjection_path(kind, f, &z));
    }
    let (s, i) = f.factorize();
    if kind.is_covariant() {
        let mid = surjection_path(kind, &s, &z);
        Ok(inclusion_path(kind, &i, &mid))
    } else {
        let mid = inclusion_path(kind, &i, &z);
        Ok(surjection_path(kind, &s, &mid))
    }
}

/// `z` must already be on `kind.source(s)`.
fn surjection_path(kind: FunctorKind, s: &SetMap, z: &SimplicialComplex) -> SimplicialComplex {
    debug_assert!(s.is_surjective());
    let target = kind.target(s).clone();
    match kind {
        FunctorKind::ShriekShriek => {
            let facets = z.facet_bits().iter().map(|&d| s.image_bits(d)).collect();
            SimplicialComplex::from_bits(target, facets)
        }
        FunctorKind::StarShriek => {
            let facets = z.facet_bits().iter().map(|&c| s.preimage_bits(c)).collect();
            SimplicialComplex::from_bits(target, facets)
        }
        FunctorKind::StarStar => {
            let facets = z.facet_bits().iter().map(|&d| s.core_bits(d)).collect();
            SimplicialComplex::from_bits(target, facets)
        }
        FunctorKind::StarUpper => {
            let cofacets: Vec<u32> = z
                .cofacet_bits()
                .iter()
                .map(|&n| s.preimage_bits(n))
                .collect();
            SimplicialComplex::from_cofacet_bits(target, &cofacets)
        }
        FunctorKind::UpperUpper => {
            let cofacets: Vec<u32> = z.cofacet_bits().iter().map(|&n| s.core_bits(n)).collect();
            SimplicialComplex::from_cofacet_bits(target, &cofacets)
        }
    }
}

/// `i` must send each label to the equal label of its codomain, as the
/// second factor of [`SetMap::factorize`] does; `z` is on `kind.source(i)`.
fn inclusion_path(kind: FunctorKind, i: &SetMap, z: &SimplicialComplex) -> SimplicialComplex {
    let a = i.domain();
    let b = i.codomain();
    let e = b.restrict(i.missed_bits());
    let conform =
        |c: SimplicialComplex, v: &VertexSet| c.conform_to(v).expect("same labels").into_owned();
    match kind {
        FunctorKind::ShriekShriek => z.rehouse(b).expect("domain labels lie in codomain"),
        FunctorKind::StarShriek => {
            let r = z.restriction(&i.range()).expect("subset of codomain");
            conform(r, a)
        }
        FunctorKind::StarStar => conform(z.cone(&e).expect("disjoint"), b),
        FunctorKind::StarUpper => {
            let l = z.link(&i.missed()).expect("subset of codomain");
            conform(l, a)
        }
        FunctorKind::UpperUpper => {
            let cone = conform(z.cone(&e).expect("disjoint"), b);
            let full_a = i.range_bits();
            let missed = i.missed_bits();
            let mut facets = cone.facet_bits().to_vec();
            facets.extend(bits::ones(missed).map(|x| full_a | (missed & !(1 << x))));
            SimplicialComplex::from_bits(b.clone(), facets)
        }
    }
}

/// The five functors computed by direct enumeration of the face
/// descriptions, for reference at small sizes.
pub fn apply_definitional(
    kind: FunctorKind,
    f: &SetMap,
    z: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    let z = on(kind.source(f), z)?;
    match kind {
        FunctorKind::ShriekShriek => {
            let faces = z.face_bits()?;
            let images = faces.into_iter().map(|d| f.image_bits(d)).collect();
            Ok(SimplicialComplex::from_bits(f.codomain().clone(), images))
        }
        FunctorKind::StarShriek => {
            let n = f.domain().len();
            guard("f^{*!} enumeration", n, ENUMERATION_LIMIT)?;
            let member: Vec<bool> = (0..1u32 << n)
                .map(|t| z.contains_bits(f.image_bits(t)))
                .collect();
            Ok(from_indicator(f.domain(), &member))
        }
        FunctorKind::StarStar => {
            let n = f.codomain().len();
            guard("f^{**} enumeration", n, ENUMERATION_LIMIT)?;
            let member: Vec<bool> = (0..1u32 << n)
                .map(|c| z.contains_bits(f.preimage_bits(c)))
                .collect();
            Ok(from_indicator(f.codomain(), &member))
        }
        FunctorKind::StarUpper => star_upper(f, &z),
        FunctorKind::UpperUpper => upper_upper(f, &z),
    }
}

fn require_surjective(f: &SetMap) -> Result<()> {
    if f.is_surjective() {
        Ok(())
    } else {
        Err(Error::NotSurjective)
    }
}

/// The lower `f`-complex `Y_f = f^{*!}(Y)` of a surjection.
pub fn lower_complex(f: &SetMap, y: &SimplicialComplex) -> Result<SimplicialComplex> {
    require_surjective(f)?;
    apply(FunctorKind::StarShriek, f, y)
}

/// The upper `f`-complex `Y^f = f^{*¡}(Y)` of a surjection.
pub fn upper_complex(f: &SetMap, y: &SimplicialComplex) -> Result<SimplicialComplex> {
    require_surjective(f)?;
    apply(FunctorKind::StarUpper, f, y)
}

/// Every facet is a union of whole fibers.
pub fn is_lower(f: &SetMap, x: &SimplicialComplex) -> Result<bool> {
    require_surjective(f)?;
    let x = on(f.domain(), x)?;
    Ok(x.facet_bits()
        .iter()
        .all(|&d| f.preimage_bits(f.image_bits(d)) == d))
}

/// Membership depends only on the core: every cofacet is a union of whole
/// fibers.
pub fn is_upper(f: &SetMap, x: &SimplicialComplex) -> Result<bool> {
    require_surjective(f)?;
    let x = on(f.domain(), x)?;
    Ok(x.cofacet_bits()
        .iter()
        .all(|&n| f.preimage_bits(f.core_bits(n)) == n))
}

/// All solutions `Z` of `middle(Z) = target` form the interval
/// `[lower, upper]`, unless `empty` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberInterval {
    pub middle: FunctorKind,
    pub lower: SimplicialComplex,
    pub upper: SimplicialComplex,
    pub empty: bool,
}

impl FiberInterval {
    pub fn contains(&self, z: &SimplicialComplex) -> Result<bool> {
        Ok(!self.empty && self.lower.is_subcomplex_of(z)? && z.is_subcomplex_of(&self.upper)?)
    }
}

/// The solutions of `middle(Z) = target` for `middle` one of `se`, `ss`, `sa`.
///
/// For `se` and `sa` the target lives on the domain and solutions on the
/// codomain; for `ss` it is the other way round.
pub fn fiber_interval(
    middle: FunctorKind,
    f: &SetMap,
    target: &SimplicialComplex,
) -> Result<FiberInterval> {
    use FunctorKind::*;
    let (left, right) = match middle {
        StarShriek => (ShriekShriek, StarStar),
        StarStar => (StarShriek, StarUpper),
        StarUpper => (StarStar, UpperUpper),
        ShriekShriek | UpperUpper => return Err(Error::UnsupportedKind(middle.tag())),
    };
    let lower = apply(left, f, target)?;
    let upper = apply(right, f, target)?;
    let empty = apply(middle, f, &lower)? != *target;
    Ok(FiberInterval {
        middle,
        lower,
        upper,
        empty,
    })
}

/// Applies `kind` (`ee`, `ss` or `aa`) along a section `s` of the surjection
/// `f`, moving a complex on the codomain of `f` to its domain.
pub fn section_transfer(
    f: &SetMap,
    s: &SetMap,
    kind: FunctorKind,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    require_surjective(f)?;
    if !s.is_section_of(f) {
        return Err(Error::NotASection);
    }
    if !kind.is_covariant() {
        return Err(Error::UnsupportedKind(kind.tag()));
    }
    apply(kind, s, y)
}
