//! Vertex sets, subsets and simplicial complexes.
//!
//! A [`SimplicialComplex`] is stored as the antichain of its facets over a
//! [`VertexSet`]. The void complex (no faces at all) has no facets, while the
//! complex `{∅}` has the single facet `∅`; the two are different values.
//!
//! Subsets are bitmasks indexed by the position of each label in its vertex
//! set, which is why vertex sets are limited to [`MAX_VERTICES`] labels.

use std::borrow::Cow;
use std::cmp::Reverse;
use std::fmt;
use std::sync::Arc;

use crate::bits;
use crate::error::{Error, Result};

/// Hard limit on the number of labels in a [`VertexSet`].
pub const MAX_VERTICES: usize = 24;

/// Limit for operations that enumerate the full power set of a vertex set.
pub const ENUMERATION_LIMIT: usize = 20;

pub(crate) fn guard(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::GuardExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

/// An ordered finite set of distinct labels.
///
/// Label order is the order given at construction and fixes the bit layout
/// of subsets. Equality ignores order; rendering always sorts labels.
#[derive(Clone)]
pub struct VertexSet(Arc<Labels>);

struct Labels {
    labels: Vec<String>,
    /// `rank[i]` is the position of `labels[i]` in lexicographic order.
    rank: Vec<u32>,
}

fn validate_label(label: &str) -> Result<()> {
    let paired = label.len() >= 2 && label.starts_with('(') && label.ends_with(')');
    let bad = label.is_empty()
        || label
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '{' | '}' | '*'))
        || label.contains("->")
        || (label.contains(',') && !paired);
    if bad {
        Err(Error::InvalidLabel(label.to_string()))
    } else {
        Ok(())
    }
}

impl VertexSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        for (i, label) in labels.iter().enumerate() {
            validate_label(label)?;
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut order: Vec<usize> = (0..labels.len()).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut rank = vec![0u32; labels.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r as u32;
        }
        Ok(VertexSet(Arc::new(Labels { labels, rank })))
    }

    /// The labels `prefix0, prefix1, …`.
    pub fn numbered(prefix: &str, n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    /// Labels in lexicographic order.
    pub fn sorted_labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.0.labels.iter().map(String::as_str).collect();
        out.sort_unstable();
        out
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = 0u32;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Subset::raw(self.clone(), bits))
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::raw(self.clone(), 0)
    }

    pub fn full_subset(&self) -> Subset {
        Subset::raw(self.clone(), self.full_bits())
    }

    pub(crate) fn full_bits(&self) -> u32 {
        bits::full_mask(self.len())
    }

    /// Same labels in the same order, so bitmasks are interchangeable.
    pub fn same_layout(&self, other: &VertexSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }

    /// Where each of our labels sits in `other`, if both hold the same labels.
    pub(crate) fn permutation_to(&self, other: &VertexSet) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.0.labels.iter().map(|l| other.index_of(l)).collect()
    }

    /// Where each of our labels sits in `other`, which must contain them all.
    pub(crate) fn embedding_into(&self, other: &VertexSet) -> Result<Vec<usize>> {
        self.0
            .labels
            .iter()
            .map(|l| {
                other
                    .index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))
            })
            .collect()
    }

    pub(crate) fn expect_same(&self, other: &VertexSet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(self.mismatch(other))
        }
    }

    pub(crate) fn mismatch(&self, found: &VertexSet) -> Error {
        Error::VertexSetMismatch {
            expected: self.sorted_labels().join(" "),
            found: found.sorted_labels().join(" "),
        }
    }

    pub fn shared_label(&self, other: &VertexSet) -> Option<&str> {
        self.0
            .labels
            .iter()
            .find(|l| other.contains(l))
            .map(String::as_str)
    }

    /// Our labels followed by those of `other`; the two must be disjoint.
    pub fn disjoint_union(&self, other: &VertexSet) -> Result<VertexSet> {
        if let Some(label) = self.shared_label(other) {
            return Err(Error::NotDisjoint(label.to_string()));
        }
        VertexSet::new(self.0.labels.iter().chain(other.0.labels.iter()).cloned())
    }

    /// The labels in `mask`, keeping their relative order.
    pub(crate) fn restrict(&self, mask: u32) -> VertexSet {
        let labels = bits::ones(mask).map(|i| self.0.labels[i].clone());
        VertexSet::new(labels).expect("sub-collection of valid labels")
    }

    /// Sort key realising the canonical order on subsets: by cardinality,
    /// then by the lexicographically sorted member list.
    pub(crate) fn canonical_key(&self, mask: u32) -> (u32, Reverse<u32>) {
        let ranked = bits::ones(mask).fold(0u32, |acc, i| acc | (1 << self.0.rank[i]));
        (mask.count_ones(), Reverse(ranked.reverse_bits()))
    }

    pub(crate) fn sort_canonical(&self, masks: &mut [u32]) {
        masks.sort_unstable_by_key(|&m| self.canonical_key(m));
    }

    pub(crate) fn mask_labels(&self, mask: u32) -> Vec<&str> {
        let mut out: Vec<&str> = bits::ones(mask).map(|i| self.label(i)).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn render_mask(&self, mask: u32) -> String {
        format!("{{{}}}", self.mask_labels(mask).join(" "))
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_layout(other) || self.permutation_to(other).is_some()
    }
}

impl Eq for VertexSet {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{:?}", self.0.labels)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sorted_labels().join(" "))
    }
}

/// A subset of a [`VertexSet`]: a face, a non-face or a monomial support.
#[derive(Clone)]
pub struct Subset {
    over: VertexSet,
    bits: u32,
}

impl Subset {
    pub(crate) fn raw(over: VertexSet, bits: u32) -> Self {
        debug_assert!(bits::is_subset(bits, over.full_bits()));
        Subset { over, bits }
    }

    /// Builds a subset from a bitmask in the vertex set's label order.
    pub fn from_bits(over: &VertexSet, bits: u32) -> Result<Self> {
        if !bits::is_subset(bits, over.full_bits()) {
            return Err(Error::UnknownLabel(format!("bit mask {bits:#x}")));
        }
        Ok(Subset::raw(over.clone(), bits))
    }

    pub fn over(&self) -> &VertexSet {
        &self.over
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, label: &str) -> bool {
        self.over
            .index_of(label)
            .is_some_and(|i| self.bits & (1 << i) != 0)
    }

    /// Member labels in lexicographic order.
    pub fn labels(&self) -> Vec<&str> {
        self.over.mask_labels(self.bits)
    }

    /// The bits of this subset in the layout of `target`, which must hold
    /// the same labels.
    pub fn bits_in(&self, target: &VertexSet) -> Result<u32> {
        if self.over.same_layout(target) {
            return Ok(self.bits);
        }
        let perm = self
            .over
            .permutation_to(target)
            .ok_or_else(|| target.mismatch(&self.over))?;
        Ok(bits::remap(self.bits, &perm))
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        Ok(bits::is_subset(self.bits_in(&other.over)?, other.bits))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        let b = other.bits_in(&self.over)?;
        Ok(Subset::raw(self.over.clone(), self.bits | b))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        let b = other.bits_in(&self.over)?;
        Ok(Subset::raw(self.over.clone(), self.bits & b))
    }

    pub fn complement(&self) -> Subset {
        Subset::raw(self.over.clone(), self.over.full_bits() & !self.bits)
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        other.bits_in(&self.over).is_ok_and(|b| b == self.bits)
    }
}

impl Eq for Subset {}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.over.render_mask(self.bits))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.over.render_mask(self.bits))
    }
}

/// Dimension of a complex; the void complex has none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Void,
    Finite(i32),
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Void => f.write_str("void"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A simplicial complex on a vertex set, held as its facet antichain in
/// canonical order.
#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    /// The complex generated by arbitrary masks over `vertices`.
    pub(crate) fn from_bits(vertices: VertexSet, sets: Vec<u32>) -> Self {
        let mut facets = bits::maximal(sets);
        vertices.sort_canonical(&mut facets);
        SimplicialComplex { vertices, facets }
    }

    /// The complex whose minimal non-faces are (the minimal elements of)
    /// `cofacets`.
    pub(crate) fn from_cofacet_bits(vertices: VertexSet, cofacets: &[u32]) -> Self {
        let full = vertices.full_bits();
        let facets = bits::minimal_transversals(cofacets)
            .into_iter()
            .map(|t| full & !t)
            .collect();
        Self::from_bits(vertices, facets)
    }

    /// The complex generated by `sets`; duplicates and dominated sets are
    /// dropped. No sets gives the void complex.
    pub fn from_facets(vertices: &VertexSet, sets: &[Subset]) -> Result<Self> {
        let masks = sets
            .iter()
            .map(|s| s.bits_in(vertices))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_bits(vertices.clone(), masks))
    }

    /// The complex whose minimal non-faces are the minimal elements of `sets`.
    pub fn from_cofacets(vertices: &VertexSet, sets: &[Subset]) -> Result<Self> {
        let masks = sets
            .iter()
            .map(|s| s.bits_in(vertices))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_cofacet_bits(vertices.clone(), &masks))
    }

    /// The void complex, with no faces at all.
    pub fn void(vertices: &VertexSet) -> Self {
        SimplicialComplex {
            vertices: vertices.clone(),
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty_face(vertices: &VertexSet) -> Self {
        SimplicialComplex {
            vertices: vertices.clone(),
            facets: vec![0],
        }
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: &VertexSet) -> Self {
        SimplicialComplex {
            vertices: vertices.clone(),
            facets: vec![vertices.full_bits()],
        }
    }

    /// All proper subsets of `vertices`. Empty vertex sets give the void
    /// complex.
    pub fn boundary(vertices: &VertexSet) -> Self {
        let full = vertices.full_bits();
        let facets = bits::ones(full).map(|i| full & !(1 << i)).collect();
        Self::from_bits(vertices.clone(), facets)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// The facets, largest first and lexicographically within a size.
    pub fn facets(&self) -> Vec<Subset> {
        let mut masks = self.facets.clone();
        masks.sort_by_key(|&m| {
            let (size, lex) = self.vertices.canonical_key(m);
            (Reverse(size), lex)
        });
        self.wrap(&masks)
    }

    pub fn facet_bits(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    fn wrap(&self, masks: &[u32]) -> Vec<Subset> {
        masks
            .iter()
            .map(|&m| Subset::raw(self.vertices.clone(), m))
            .collect()
    }

    pub fn contains_bits(&self, mask: u32) -> bool {
        self.facets.iter().any(|&f| bits::is_subset(mask, f))
    }

    pub fn is_face(&self, set: &Subset) -> Result<bool> {
        Ok(self.contains_bits(set.bits_in(&self.vertices)?))
    }

    /// Every face, in canonical order.
    pub fn face_bits(&self) -> Result<Vec<u32>> {
        guard("face enumeration", self.vertices.len(), ENUMERATION_LIMIT)?;
        let mut seen = vec![false; 1usize << self.vertices.len()];
        let mut out = Vec::new();
        for &f in &self.facets {
            for s in bits::submasks(f) {
                if !std::mem::replace(&mut seen[s as usize], true) {
                    out.push(s);
                }
            }
        }
        self.vertices.sort_canonical(&mut out);
        Ok(out)
    }

    pub fn faces(&self) -> Result<Vec<Subset>> {
        Ok(self.wrap(&self.face_bits()?))
    }

    /// Minimal non-faces in canonical order.
    pub fn cofacet_bits(&self) -> Vec<u32> {
        let full = self.vertices.full_bits();
        let complements: Vec<u32> = self.facets.iter().map(|&f| full & !f).collect();
        let mut out = bits::minimal_transversals(&complements);
        self.vertices.sort_canonical(&mut out);
        out
    }

    pub fn cofacets(&self) -> Vec<Subset> {
        self.wrap(&self.cofacet_bits())
    }

    /// The same complex expressed over `target`, which must hold the same
    /// labels, possibly in another order.
    pub fn conform_to(&self, target: &VertexSet) -> Result<Cow<'_, SimplicialComplex>> {
        if self.vertices.same_layout(target) {
            return Ok(Cow::Borrowed(self));
        }
        let perm = self
            .vertices
            .permutation_to(target)
            .ok_or_else(|| target.mismatch(&self.vertices))?;
        Ok(Cow::Owned(self.transport(target, &perm)))
    }

    /// The same faces, viewed on a vertex set containing ours.
    pub fn rehouse(&self, target: &VertexSet) -> Result<SimplicialComplex> {
        let perm = self.vertices.embedding_into(target)?;
        Ok(self.transport(target, &perm))
    }

    pub(crate) fn transport(&self, target: &VertexSet, perm: &[usize]) -> SimplicialComplex {
        let facets = self.facets.iter().map(|&f| bits::remap(f, perm)).collect();
        Self::from_bits(target.clone(), facets)
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> Result<bool> {
        let other = other.conform_to(&self.vertices)?;
        Ok(self.facets.iter().all(|&f| other.contains_bits(f)))
    }

    /// `X|E`: the faces of `X` inside `E`, as a complex on `E`.
    pub fn restriction(&self, set: &Subset) -> Result<SimplicialComplex> {
        let e = set.bits_in(&self.vertices)?;
        let target = self.vertices.restrict(e);
        let perm = compress(e, self.vertices.len());
        let facets = self
            .facets
            .iter()
            .map(|&f| bits::remap(f & e, &perm))
            .collect();
        Ok(Self::from_bits(target, facets))
    }

    /// `lk_E(X)`: the `F ⊆ A∖E` with `F ∪ E ∈ X`, void when `E` is a non-face.
    pub fn link(&self, set: &Subset) -> Result<SimplicialComplex> {
        let e = set.bits_in(&self.vertices)?;
        let rest = self.vertices.full_bits() & !e;
        let target = self.vertices.restrict(rest);
        let perm = compress(rest, self.vertices.len());
        let facets = self
            .facets
            .iter()
            .filter(|&&f| bits::is_subset(e, f))
            .map(|&f| bits::remap(f & !e, &perm))
            .collect();
        Ok(Self::from_bits(target, facets))
    }

    /// `X * Y` on the disjoint union of the vertex sets.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let union = self.vertices.disjoint_union(&other.vertices)?;
        let shift = self.vertices.len();
        let facets = self
            .facets
            .iter()
            .flat_map(|&f| other.facets.iter().map(move |&g| f | (g << shift)))
            .collect();
        Ok(Self::from_bits(union, facets))
    }

    /// `cone_B(X) = X * Δ(B)`.
    pub fn cone(&self, apex: &VertexSet) -> Result<SimplicialComplex> {
        self.join(&SimplicialComplex::simplex(apex))
    }

    /// `X^∨ = {F : A∖F ∉ X}`; facets are complements of cofacets.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let full = self.vertices.full_bits();
        let facets = self.cofacet_bits().into_iter().map(|n| full & !n).collect();
        Self::from_bits(self.vertices.clone(), facets)
    }

    /// Intersection of face sets.
    pub fn lattice_meet(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let other = other.conform_to(&self.vertices)?;
        let facets = self
            .facets
            .iter()
            .flat_map(|&f| other.facets.iter().map(move |&g| f & g))
            .collect();
        Ok(Self::from_bits(self.vertices.clone(), facets))
    }

    /// Union of face sets.
    pub fn lattice_join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let other = other.conform_to(&self.vertices)?;
        let facets = self
            .facets
            .iter()
            .chain(other.facets.iter())
            .copied()
            .collect();
        Ok(Self::from_bits(self.vertices.clone(), facets))
    }

    /// `{a : {a} ∈ X}`.
    pub fn support(&self) -> Subset {
        let bits = self.facets.iter().fold(0, |acc, &f| acc | f);
        Subset::raw(self.vertices.clone(), bits)
    }

    /// `{a : A∖{a} ∈ X}`.
    pub fn cosupport(&self) -> Subset {
        let full = self.vertices.full_bits();
        let bits = bits::ones(full)
            .filter(|&i| self.contains_bits(full & !(1 << i)))
            .fold(0, |acc, i| acc | (1 << i));
        Subset::raw(self.vertices.clone(), bits)
    }

    pub fn dimension(&self) -> Dimension {
        match self.facets.iter().map(|f| f.count_ones()).max() {
            None => Dimension::Void,
            Some(n) => Dimension::Finite(n as i32 - 1),
        }
    }
}

/// Bit permutation packing the bits of `keep` into the low positions.
fn compress(keep: u32, n: usize) -> Vec<usize> {
    let mut perm = vec![0; n];
    for (j, i) in bits::ones(keep).enumerate() {
        perm[i] = j;
    }
    perm
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        match other.conform_to(&self.vertices) {
            Ok(o) => o.facets == self.facets,
            Err(_) => false,
        }
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex({self})")
    }
}

/// Canonical text form:
///
/// ```text
/// vertices: a b x
/// facets: {x} {a b}
/// ```
///
/// `facets: -` is the void complex and `facets: {}` is `{∅}`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("vertices:")?;
        for label in self.vertices.sorted_labels() {
            write!(f, " {label}")?;
        }
        f.write_str("\nfacets:")?;
        if self.facets.is_empty() {
            return f.write_str(" -");
        }
        for facet in self.facets() {
            write!(f, " {facet}")?;
        }
        Ok(())
    }
}
