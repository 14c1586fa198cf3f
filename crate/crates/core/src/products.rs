//! Products of a complex `X` on `A` with a complex `Y` on `B`, built on the
//! disjoint union `A ∪ B` from the inclusions and on `A × B` from the
//! projections.
//!
//! Each kind is available three ways: through the adjoint functors, through
//! an explicit description of faces or generators, and through the
//! Stanley-Reisner ideals.

use std::fmt;
use std::str::FromStr;

use crate::adjoints::{apply, FunctorKind};
use crate::bits;
use crate::complex::{guard, SimplicialComplex, VertexSet, ENUMERATION_LIMIT};
use crate::error::{Error, Result};
use crate::ideals::{intersect, sum, SqfIdeal};
use crate::setmap::SetMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// Join of `i_A^{!!}(X)` and `i_B^{!!}(Y)`: faces of `X` or of `Y`.
    DisjointUnion,
    /// Meet of `i_A^{**}(X)` and `i_B^{**}(Y)`: the join `X * Y`.
    ExternalJoin,
    /// Join of `i_A^{**}(X)` and `i_B^{**}(Y)`.
    OrUnion,
    /// Meet of `i_A^{¡¡}(X)` and `i_B^{¡¡}(Y)`.
    ConeUnion,
    /// Meet of `p_A^{*!}(X)` and `p_B^{*!}(Y)`.
    CartMeetLower,
    /// Join of `p_A^{*!}(X)` and `p_B^{*!}(Y)`.
    CartJoinLower,
    /// Meet of `p_A^{*¡}(X)` and `p_B^{*¡}(Y)`.
    CartMeetUpper,
    /// Join of `p_A^{*¡}(X)` and `p_B^{*¡}(Y)`.
    CartJoinUpper,
}

impl ProductKind {
    pub const ALL: [ProductKind; 8] = [
        ProductKind::DisjointUnion,
        ProductKind::ExternalJoin,
        ProductKind::OrUnion,
        ProductKind::ConeUnion,
        ProductKind::CartMeetLower,
        ProductKind::CartJoinLower,
        ProductKind::CartMeetUpper,
        ProductKind::CartJoinUpper,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ProductKind::DisjointUnion => "disjoint_union",
            ProductKind::ExternalJoin => "external_join",
            ProductKind::OrUnion => "or_union",
            ProductKind::ConeUnion => "cone_union",
            ProductKind::CartMeetLower => "cart_meet_lower",
            ProductKind::CartJoinLower => "cart_join_lower",
            ProductKind::CartMeetUpper => "cart_meet_upper",
            ProductKind::CartJoinUpper => "cart_join_upper",
        }
    }

    /// True for the kinds living on `A ∪ B`.
    pub fn is_union(self) -> bool {
        matches!(
            self,
            ProductKind::DisjointUnion
                | ProductKind::ExternalJoin
                | ProductKind::OrUnion
                | ProductKind::ConeUnion
        )
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        ProductKind::ALL
            .into_iter()
            .find(|k| k.tag() == norm)
            .ok_or_else(|| {
                let tags: Vec<&str> = ProductKind::ALL.iter().map(|k| k.tag()).collect();
                format!(
                    "unknown product kind {s:?}; expected one of {}",
                    tags.join(", ")
                )
            })
    }
}

/// Dispatches to [`union_product`] or [`cartesian_product`].
pub fn product(
    kind: ProductKind,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    if kind.is_union() {
        union_product(kind, x, y)
    } else {
        cartesian_product(kind, x, y)
    }
}

fn require_union(kind: ProductKind) -> Result<()> {
    if kind.is_union() {
        Ok(())
    } else {
        Err(Error::UnsupportedKind(kind.tag()))
    }
}

fn require_cartesian(kind: ProductKind) -> Result<()> {
    if kind.is_union() {
        Err(Error::UnsupportedKind(kind.tag()))
    } else {
        Ok(())
    }
}

/// The union kinds as lattice operations on the images of `X` and `Y`
/// under the inclusions into `A ∪ B`.
pub fn union_product(
    kind: ProductKind,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    require_union(kind)?;
    let ab = x.vertices().disjoint_union(y.vertices())?;
    let i_a = SetMap::inclusion(x.vertices(), &ab)?;
    let i_b = SetMap::inclusion(y.vertices(), &ab)?;
    let (functor, meet) = match kind {
        ProductKind::DisjointUnion => (FunctorKind::ShriekShriek, false),
        ProductKind::ExternalJoin => (FunctorKind::StarStar, true),
        ProductKind::OrUnion => (FunctorKind::StarStar, false),
        _ => (FunctorKind::UpperUpper, true),
    };
    let xa = apply(functor, &i_a, x)?;
    let yb = apply(functor, &i_b, y)?;
    if meet {
        xa.lattice_meet(&yb)
    } else {
        xa.lattice_join(&yb)
    }
}

/// The union kinds from their face descriptions, by enumerating all
/// subsets of `A ∪ B`.
///
/// With `D = C ∩ A` and `E = C ∩ B`, `C` is a face when
///
/// - disjoint union: `E = ∅` and `D ∈ X`, or `D = ∅` and `E ∈ Y`;
/// - external join: `D ∈ X` and `E ∈ Y`;
/// - or-union: `D ∈ X` or `E ∈ Y`;
/// - cone union: `D ⊊ A` and `E ⊊ B`; or `E = B`, `D ⊊ A` and `D ∈ X`; or
///   `D = A`, `E ⊊ B` and `E ∈ Y`; or `C = A ∪ B` with `A ∈ X` and `B ∈ Y`.
pub fn union_product_by_faces(
    kind: ProductKind,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    require_union(kind)?;
    let ab = x.vertices().disjoint_union(y.vertices())?;
    guard("union product enumeration", ab.len(), ENUMERATION_LIMIT)?;
    let na = x.vertices().len();
    let full_a = bits::full_mask(na);
    let full_b = bits::full_mask(y.vertices().len());
    let faces = (0..1u32 << ab.len()).filter(|&c| {
        let d = c & full_a;
        let e = c >> na;
        let (dx, ey) = (x.contains_bits(d), y.contains_bits(e));
        match kind {
            ProductKind::DisjointUnion => (e == 0 && dx) || (d == 0 && ey),
            ProductKind::ExternalJoin => dx && ey,
            ProductKind::OrUnion => dx || ey,
            _ => {
                let (pa, pb) = (d != full_a, e != full_b);
                (pa && pb) || (!pb && pa && dx) || (!pa && pb && ey) || (!pa && !pb && dx && ey)
            }
        }
    });
    Ok(SimplicialComplex::from_bits(ab, faces.collect()))
}

/// The ideals of the union kinds in `k[x_A, y_B]`:
///
/// - disjoint union: `(I_X + (y^+_B)) ∩ (I_Y + (x^+_A))`;
/// - external join: `I_X + I_Y`;
/// - or-union: `I_X ∩ I_Y`;
/// - cone union: `I_X·y^•_B + x^•_A·I_Y`.
pub fn union_product_ideal(kind: ProductKind, i_x: &SqfIdeal, i_y: &SqfIdeal) -> Result<SqfIdeal> {
    require_union(kind)?;
    let ab = i_x.ring().disjoint_union(i_y.ring())?;
    let shift = i_x.ring().len();
    let full_a = bits::full_mask(shift);
    let full_b = bits::full_mask(i_y.ring().len()) << shift;
    let gx: Vec<u32> = i_x.generator_bits().to_vec();
    let gy: Vec<u32> = i_y.generator_bits().iter().map(|&g| g << shift).collect();
    let ideal = |gens: Vec<u32>| SqfIdeal::from_bits(ab.clone(), gens);
    let vars = |mask: u32| ideal(bits::ones(mask).map(|i| 1 << i).collect());
    match kind {
        ProductKind::DisjointUnion => intersect(
            &sum(&ideal(gx), &vars(full_b))?,
            &sum(&ideal(gy), &vars(full_a))?,
        ),
        ProductKind::ExternalJoin => sum(&ideal(gx), &ideal(gy)),
        ProductKind::OrUnion => intersect(&ideal(gx), &ideal(gy)),
        _ => {
            let left = gx.iter().map(|&g| g | full_b);
            let right = gy.iter().map(|&g| g | full_a);
            Ok(ideal(left.chain(right).collect()))
        }
    }
}

/// `A × B` with labels `(a,b)`, ordered by the index of `a`, then of `b`,
/// and the two projections.
pub fn cartesian_vertices(a: &VertexSet, b: &VertexSet) -> Result<(VertexSet, SetMap, SetMap)> {
    let labels = a
        .labels()
        .iter()
        .flat_map(|x| b.labels().iter().map(move |y| format!("({x},{y})")));
    let ab = VertexSet::new(labels)?;
    let nb = b.len();
    let p_a = SetMap::from_indices(&ab, a, (0..ab.len()).map(|k| k / nb).collect());
    let p_b = SetMap::from_indices(&ab, b, (0..ab.len()).map(|k| k % nb).collect());
    Ok((ab, p_a, p_b))
}

fn rect(d: u32, c: u32, nb: usize) -> u32 {
    bits::ones(d).fold(0, |acc, i| acc | (c << (i * nb)))
}

/// The cartesian kinds from generating faces or non-faces:
///
/// - lower meet: generated by `D × C` for facets `D` of `X`, `C` of `Y`;
/// - lower join: generated by `D × B` and `A × C`;
/// - upper meet: minimal non-faces `N × B` and `A × M` for cofacets `N`, `M`;
/// - upper join: minimal non-faces `(N × B) ∪ (A × M)`.
pub fn cartesian_product(
    kind: ProductKind,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    require_cartesian(kind)?;
    let (ab, _, _) = cartesian_vertices(x.vertices(), y.vertices())?;
    let nb = y.vertices().len();
    let full_a = x.vertices().full_bits();
    let full_b = y.vertices().full_bits();
    let xs = x.facet_bits();
    let ys = y.facet_bits();
    Ok(match kind {
        ProductKind::CartMeetLower => {
            let facets = xs
                .iter()
                .flat_map(|&d| ys.iter().map(move |&c| rect(d, c, nb)));
            SimplicialComplex::from_bits(ab, facets.collect())
        }
        ProductKind::CartJoinLower => {
            let left = xs.iter().map(|&d| rect(d, full_b, nb));
            let right = ys.iter().map(|&c| rect(full_a, c, nb));
            SimplicialComplex::from_bits(ab, left.chain(right).collect())
        }
        ProductKind::CartMeetUpper => {
            let left = x.cofacet_bits().into_iter().map(|n| rect(n, full_b, nb));
            let right = y.cofacet_bits().into_iter().map(|m| rect(full_a, m, nb));
            SimplicialComplex::from_cofacet_bits(ab, &left.chain(right).collect::<Vec<_>>())
        }
        _ => {
            let ms = y.cofacet_bits();
            let cofacets: Vec<u32> = x
                .cofacet_bits()
                .into_iter()
                .flat_map(|n| {
                    ms.iter()
                        .map(move |&m| rect(n, full_b, nb) | rect(full_a, m, nb))
                })
                .collect();
            SimplicialComplex::from_cofacet_bits(ab, &cofacets)
        }
    })
}

/// The cartesian kinds as lattice operations on the pullbacks of `X` and
/// `Y` along the projections.
pub fn cartesian_product_via_pullbacks(
    kind: ProductKind,
    x: &SimplicialComplex,
    y: &SimplicialComplex,
) -> Result<SimplicialComplex> {
    require_cartesian(kind)?;
    let (_, p_a, p_b) = cartesian_vertices(x.vertices(), y.vertices())?;
    let (functor, meet) = match kind {
        ProductKind::CartMeetLower => (FunctorKind::StarShriek, true),
        ProductKind::CartJoinLower => (FunctorKind::StarShriek, false),
        ProductKind::CartMeetUpper => (FunctorKind::StarUpper, true),
        _ => (FunctorKind::StarUpper, false),
    };
    let xa = apply(functor, &p_a, x)?;
    let yb = apply(functor, &p_b, y)?;
    if meet {
        xa.lattice_meet(&yb)
    } else {
        xa.lattice_join(&yb)
    }
}

/// The ideal of a cartesian kind in `k[z_{A×B}]`, as the minimal `z^•_S`
/// over all `S ⊆ A × B` such that, with `P = p_A(S)` and `Q = p_B(S)` for
/// the lower kinds and `P = core_{p_A}(S)`, `Q = core_{p_B}(S)` for the
/// upper kinds, `x^•_P ∈ I_X` or (meet) / and (join) `y^•_Q ∈ I_Y`.
pub fn cartesian_product_ideal(
    kind: ProductKind,
    i_x: &SqfIdeal,
    i_y: &SqfIdeal,
) -> Result<SqfIdeal> {
    require_cartesian(kind)?;
    let (ab, p_a, p_b) = cartesian_vertices(i_x.ring(), i_y.ring())?;
    guard("cartesian ideal enumeration", ab.len(), ENUMERATION_LIMIT)?;
    let lower = matches!(
        kind,
        ProductKind::CartMeetLower | ProductKind::CartJoinLower
    );
    let meet = matches!(
        kind,
        ProductKind::CartMeetLower | ProductKind::CartMeetUpper
    );
    let hx = i_x.generator_bits();
    let hy = i_y.generator_bits();
    let has = |gens: &[u32], m: u32| gens.iter().any(|&g| bits::is_subset(g, m));
    let gens = (0..1u32 << ab.len()).filter(|&s| {
        let (p, q) = if lower {
            (p_a.image_bits(s), p_b.image_bits(s))
        } else {
            (p_a.core_bits(s), p_b.core_bits(s))
        };
        let (in_x, in_y) = (has(hx, p), has(hy, q));
        if meet {
            in_x || in_y
        } else {
            in_x && in_y
        }
    });
    Ok(SqfIdeal::from_bits(ab, gens.collect()))
}
