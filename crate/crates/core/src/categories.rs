//! Morphisms of simplicial complexes in the categories SC0, SC1 and SC2 and
//! the ring homomorphisms between Stanley-Reisner rings they correspond to.
//!
//! | category | map | condition | homomorphism `k[y_B] → k[x_A]` |
//! |----------|-----|-----------|--------------------------------|
//! | SC0 | `f : A → B` | `f^{!!}(X) ⊆ Y` | `y_b ↦ ∑_{a∈A_b} x_a` |
//! | SC1 | `f : A → B` | `f^{**}(X) ⊆ Y` | `y_b ↦ x^•_{A_b}` |
//! | SC2 | `g : B → A` | `X ⊆ g^{**}(Y)` | `y_b ↦ x_{g(b)}` |

use std::fmt;
use std::str::FromStr;

use crate::adjoints::{apply, FunctorKind};
use crate::bits;
use crate::complex::{SimplicialComplex, Subset, VertexSet};
use crate::error::{Error, Result};
use crate::ideals::{SqfIdeal, SqfMonomial};
use crate::setmap::SetMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    Sc0,
    Sc1,
    Sc2,
}

impl Category {
    pub const ALL: [Category; 3] = [Category::Sc0, Category::Sc1, Category::Sc2];

    pub fn tag(self) -> &'static str {
        match self {
            Category::Sc0 => "sc0",
            Category::Sc1 => "sc1",
            Category::Sc2 => "sc2",
        }
    }

    /// SC2 morphisms `X → Y` are carried by maps `B → A`.
    pub fn is_reversed(self) -> bool {
        self == Category::Sc2
    }

    pub fn flavor(self) -> HomFlavor {
        match self {
            Category::Sc0 => HomFlavor::SumOfVariables,
            Category::Sc1 => HomFlavor::SquarefreeMonomial,
            Category::Sc2 => HomFlavor::SingleVariable,
        }
    }

    /// `(A, B)`: where the source and target complexes of a morphism
    /// carried by `map` live.
    pub fn ends(self, map: &SetMap) -> (&VertexSet, &VertexSet) {
        if self.is_reversed() {
            (map.codomain(), map.domain())
        } else {
            (map.domain(), map.codomain())
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Category::ALL
            .into_iter()
            .find(|c| c.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown category {s:?}; expected sc0, sc1 or sc2"))
    }
}

/// Whether `map` is a morphism `X → Y` in `category`. The defining
/// inclusion and its adjoint reformulation are both evaluated; a
/// disagreement is reported as an error.
pub fn is_morphism(
    category: Category,
    map: &SetMap,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<bool> {
    let (direct, adjoint) = match category {
        Category::Sc0 => (
            apply(FunctorKind::ShriekShriek, map, x)?.is_subcomplex_of(y)?,
            x.is_subcomplex_of(&apply(FunctorKind::StarShriek, map, y)?)?,
        ),
        Category::Sc1 => (
            apply(FunctorKind::StarStar, map, x)?.is_subcomplex_of(y)?,
            x.is_subcomplex_of(&apply(FunctorKind::StarUpper, map, y)?)?,
        ),
        Category::Sc2 => (
            x.is_subcomplex_of(&apply(FunctorKind::StarStar, map, y)?)?,
            apply(FunctorKind::StarShriek, map, x)?.is_subcomplex_of(y)?,
        ),
    };
    if direct != adjoint {
        return Err(Error::AdjointDisagreement(format!(
            "{category} morphism condition"
        )));
    }
    Ok(direct)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomFlavor {
    /// `y_b ↦ ∑ x_a`, with the empty sum `0`.
    SumOfVariables,
    /// `y_b ↦ ∏ x_a`, with the empty product `1`.
    SquarefreeMonomial,
    /// `y_b ↦ x_a` for a single `a`.
    SingleVariable,
}

/// A formal homomorphism `k[y_source] → k[x_target]`: each variable `y_b`
/// is sent to a sum, a product or a single one of the `x_a` for `a` in
/// `images[b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingHomDescriptor {
    flavor: HomFlavor,
    source: VertexSet,
    target: VertexSet,
    images: Vec<u32>,
}

impl RingHomDescriptor {
    pub fn flavor(&self) -> HomFlavor {
        self.flavor
    }

    /// The ring `k[y_B]` of the target complex.
    pub fn source_ring(&self) -> &VertexSet {
        &self.source
    }

    /// The ring `k[x_A]` of the source complex.
    pub fn target_ring(&self) -> &VertexSet {
        &self.target
    }

    /// The variables occurring in the image of `y_label`.
    pub fn image(&self, label: &str) -> Result<Subset> {
        let b = self
            .source
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Subset::from_bits(&self.target, self.images[b])
    }

    fn render_image(&self, mask: u32, prefix: &str) -> String {
        let labels = self.target.mask_labels(mask);
        if labels.is_empty() {
            return match self.flavor {
                HomFlavor::SumOfVariables => "0".into(),
                _ => "1".into(),
            };
        }
        let sep = match self.flavor {
            HomFlavor::SumOfVariables => "+",
            _ => "*",
        };
        labels
            .iter()
            .map(|l| format!("{prefix}_{l}"))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// One line `y_b -> image` per variable, in label order.
    pub fn render(&self, source_prefix: &str, target_prefix: &str) -> Vec<String> {
        let mut lines: Vec<(String, String)> = self
            .source
            .labels()
            .iter()
            .zip(&self.images)
            .map(|(b, &m)| (b.clone(), self.render_image(m, target_prefix)))
            .collect();
        lines.sort();
        lines
            .into_iter()
            .map(|(b, img)| format!("{source_prefix}_{b} -> {img}"))
            .collect()
    }
}

impl fmt::Display for RingHomDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("y", "x").join("\n"))
    }
}

/// The homomorphism of Stanley-Reisner rings attached to `map` in
/// `category`.
pub fn ring_hom(category: Category, map: &SetMap) -> RingHomDescriptor {
    let (images, source, target) = match category {
        Category::Sc0 | Category::Sc1 => (
            map.fiber_bits().to_vec(),
            map.codomain().clone(),
            map.domain().clone(),
        ),
        Category::Sc2 => (
            (0..map.domain().len())
                .map(|b| map.image_bits(1 << b))
                .collect(),
            map.domain().clone(),
            map.codomain().clone(),
        ),
    };
    RingHomDescriptor {
        flavor: category.flavor(),
        source,
        target,
        images,
    }
}

/// The first minimal generator of `i_y` whose image does not vanish
/// modulo `i_x`, if any.
pub fn first_violation(
    d: &RingHomDescriptor,
    i_y: &SqfIdeal,
    i_x: &SqfIdeal,
) -> Result<Option<SqfMonomial>> {
    let i_y = i_y.conform_to(&d.source)?;
    let i_x = i_x.conform_to(&d.target)?;
    let in_x = |m: u32| i_x.contains(&SqfMonomial::new(Subset::raw(d.target.clone(), m)));
    for &c in i_y.generator_bits() {
        let images: Vec<u32> = bits::ones(c).map(|b| d.images[b]).collect();
        let vanishes = match d.flavor {
            HomFlavor::SquarefreeMonomial | HomFlavor::SingleVariable => {
                in_x(images.iter().fold(0, |acc, &m| acc | m))?
            }
            HomFlavor::SumOfVariables => {
                images.contains(&0) || all_transversals_in(&images, 0, &in_x)?
            }
        };
        if !vanishes {
            return Ok(Some(SqfMonomial::new(Subset::raw(d.source.clone(), c))));
        }
    }
    Ok(None)
}

fn all_transversals_in(
    sets: &[u32],
    base: u32,
    in_x: &impl Fn(u32) -> Result<bool>,
) -> Result<bool> {
    match sets.split_first() {
        None => in_x(base),
        Some((&s, rest)) => {
            for a in bits::ones(s) {
                if !all_transversals_in(rest, base | (1 << a), in_x)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Whether every minimal generator of `i_y` maps into `i_x`.
pub fn verify_well_defined(d: &RingHomDescriptor, i_y: &SqfIdeal, i_x: &SqfIdeal) -> Result<bool> {
    Ok(first_violation(d, i_y, i_x)?.is_none())
}

/// `d1 ∘ d2`, where `d2 : k[z_C] → k[y_B]` and `d1 : k[y_B] → k[x_A]`.
pub fn compose_descriptors(
    d1: &RingHomDescriptor,
    d2: &RingHomDescriptor,
) -> Result<RingHomDescriptor> {
    if d1.flavor != d2.flavor {
        return Err(Error::MorphismMismatch(
            "homomorphisms of different flavors".into(),
        ));
    }
    let perm = d2.target.permutation_to(&d1.source).ok_or_else(|| {
        Error::MorphismMismatch(format!("k[{}] is not k[{}]", d2.target, d1.source))
    })?;
    let images = d2
        .images
        .iter()
        .map(|&m| bits::ones(m).fold(0, |acc, b| acc | d1.images[perm[b]]))
        .collect();
    Ok(RingHomDescriptor {
        flavor: d1.flavor,
        source: d2.source.clone(),
        target: d1.target.clone(),
        images,
    })
}

/// A candidate morphism `X → Y`; validity is recomputed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismWitness {
    pub category: Category,
    /// `A → B`, or `B → A` for SC2.
    pub map: SetMap,
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
}

impl MorphismWitness {
    pub fn new(
        category: Category,
        map: SetMap,
        source: SimplicialComplex,
        target: SimplicialComplex,
    ) -> Result<Self> {
        let (a, b) = category.ends(&map);
        a.expect_same(source.vertices())?;
        b.expect_same(target.vertices())?;
        Ok(MorphismWitness {
            category,
            map,
            source,
            target,
        })
    }

    pub fn identity(category: Category, x: &SimplicialComplex) -> Self {
        MorphismWitness {
            category,
            map: SetMap::identity(x.vertices()),
            source: x.clone(),
            target: x.clone(),
        }
    }

    pub fn is_valid(&self) -> Result<bool> {
        is_morphism(self.category, &self.map, &self.source, &self.target)
    }

    pub fn descriptor(&self) -> RingHomDescriptor {
        ring_hom(self.category, &self.map)
    }
}

/// `m2 ∘ m1` for `m1 : X → Y` and `m2 : Y → Z`.
pub fn compose_morphisms(m1: &MorphismWitness, m2: &MorphismWitness) -> Result<MorphismWitness> {
    if m1.category != m2.category {
        return Err(Error::MorphismMismatch(format!(
            "{} morphism followed by {} morphism",
            m1.category, m2.category
        )));
    }
    if m1.target != m2.source {
        return Err(Error::MorphismMismatch(
            "target of the first is not the source of the second".into(),
        ));
    }
    let map = if m1.category.is_reversed() {
        SetMap::compose(&m1.map, &m2.map)?
    } else {
        SetMap::compose(&m2.map, &m1.map)?
    };
    MorphismWitness::new(m1.category, map, m1.source.clone(), m2.target.clone())
}
