//! Total maps between vertex sets and the image / preimage / core triple
//! they induce on subsets.

use std::fmt;

use crate::bits;
use crate::complex::{Subset, VertexSet};
use crate::error::{Error, Result};

/// A total function `f : A → B` between vertex sets.
///
/// Fibers `A_b = f⁻¹(b)` may be empty; `E = B ∖ f(A)` is the set of labels
/// with empty fibers.
#[derive(Clone)]
pub struct SetMap {
    domain: VertexSet,
    codomain: VertexSet,
    assign: Vec<usize>,
    fibers: Vec<u32>,
}

impl SetMap {
    /// Builds a map from `(source, target)` label pairs; every domain label
    /// must appear exactly once.
    pub fn new<I, S, T>(domain: &VertexSet, codomain: &VertexSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut assign: Vec<Option<usize>> = vec![None; domain.len()];
        for (s, t) in pairs {
            let (s, t) = (s.as_ref(), t.as_ref());
            let i = domain
                .index_of(s)
                .ok_or_else(|| Error::UnknownLabel(s.to_string()))?;
            let j = codomain
                .index_of(t)
                .ok_or_else(|| Error::UnknownLabel(t.to_string()))?;
            if assign[i].replace(j).is_some() {
                return Err(Error::DuplicateAssignment(s.to_string()));
            }
        }
        let assign = assign
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| Error::NonTotalMap(domain.label(i).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_indices(domain, codomain, assign))
    }

    /// `assign[i]` is the codomain index of the image of domain index `i`.
    pub(crate) fn from_indices(
        domain: &VertexSet,
        codomain: &VertexSet,
        assign: Vec<usize>,
    ) -> Self {
        debug_assert_eq!(assign.len(), domain.len());
        let mut fibers = vec![0u32; codomain.len()];
        for (i, &j) in assign.iter().enumerate() {
            fibers[j] |= 1 << i;
        }
        SetMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            assign,
            fibers,
        }
    }

    pub fn identity(vertices: &VertexSet) -> Self {
        Self::from_indices(vertices, vertices, (0..vertices.len()).collect())
    }

    /// The inclusion of `sub` into `sup`.
    pub fn inclusion(sub: &VertexSet, sup: &VertexSet) -> Result<Self> {
        let assign = sub.embedding_into(sup)?;
        Ok(Self::from_indices(sub, sup, assign))
    }

    /// The map sending every label of `domain` to the single label of `point`.
    pub fn constant(domain: &VertexSet, point: &VertexSet) -> Result<Self> {
        if point.len() != 1 {
            return Err(Error::InvalidLabel(format!(
                "expected one point, got {{{point}}}"
            )));
        }
        Ok(Self::from_indices(domain, point, vec![0; domain.len()]))
    }

    pub fn domain(&self) -> &VertexSet {
        &self.domain
    }

    pub fn codomain(&self) -> &VertexSet {
        &self.codomain
    }

    /// The image of a single domain label.
    pub fn apply_label(&self, label: &str) -> Result<&str> {
        let i = self
            .domain
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(self.codomain.label(self.assign[i]))
    }

    pub(crate) fn fiber_bits(&self) -> &[u32] {
        &self.fibers
    }

    /// The fiber `A_b` of a codomain label.
    pub fn fiber(&self, label: &str) -> Result<Subset> {
        let j = self
            .codomain
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(Subset::raw(self.domain.clone(), self.fibers[j]))
    }

    pub(crate) fn image_bits(&self, d: u32) -> u32 {
        bits::ones(d).fold(0, |acc, i| acc | (1 << self.assign[i]))
    }

    pub(crate) fn preimage_bits(&self, c: u32) -> u32 {
        bits::ones(c).fold(0, |acc, j| acc | self.fibers[j])
    }

    pub(crate) fn core_bits(&self, d: u32) -> u32 {
        self.fibers
            .iter()
            .enumerate()
            .filter(|&(_, &fb)| bits::is_subset(fb, d))
            .fold(0, |acc, (j, _)| acc | (1 << j))
    }

    /// Mask of `f(A)` in the codomain.
    pub(crate) fn range_bits(&self) -> u32 {
        self.image_bits(self.domain.full_bits())
    }

    /// Mask of `E = B ∖ f(A)` in the codomain.
    pub(crate) fn missed_bits(&self) -> u32 {
        self.codomain.full_bits() & !self.range_bits()
    }

    /// `f(D)`.
    pub fn image(&self, d: &Subset) -> Result<Subset> {
        let d = d.bits_in(&self.domain)?;
        Ok(Subset::raw(self.codomain.clone(), self.image_bits(d)))
    }

    /// `f⁻¹(C)`.
    pub fn preimage(&self, c: &Subset) -> Result<Subset> {
        let c = c.bits_in(&self.codomain)?;
        Ok(Subset::raw(self.domain.clone(), self.preimage_bits(c)))
    }

    /// `core_f(D) = {b : f⁻¹(b) ⊆ D}`, the largest `C` with `f⁻¹(C) ⊆ D`.
    pub fn core(&self, d: &Subset) -> Result<Subset> {
        let d = d.bits_in(&self.domain)?;
        Ok(Subset::raw(self.codomain.clone(), self.core_bits(d)))
    }

    /// `f(A)` as a subset of the codomain.
    pub fn range(&self) -> Subset {
        Subset::raw(self.codomain.clone(), self.range_bits())
    }

    /// `E = B ∖ f(A)`.
    pub fn missed(&self) -> Subset {
        Subset::raw(self.codomain.clone(), self.missed_bits())
    }

    pub fn is_injective(&self) -> bool {
        self.fibers.iter().all(|f| f.count_ones() <= 1)
    }

    pub fn is_surjective(&self) -> bool {
        self.fibers.iter().all(|&f| f != 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `f = i ∘ s` with `s : A ↠ f(A)` and `i : f(A) ↪ B`; `f(A)` keeps the
    /// codomain's label order.
    pub fn factorize(&self) -> (SetMap, SetMap) {
        let range = self.range_bits();
        let middle = self.codomain.restrict(range);
        let mut position = vec![0usize; self.codomain.len()];
        for (k, j) in bits::ones(range).enumerate() {
            position[j] = k;
        }
        let s_assign = self.assign.iter().map(|&j| position[j]).collect();
        let s = Self::from_indices(&self.domain, &middle, s_assign);
        let i = Self::from_indices(&middle, &self.codomain, bits::ones(range).collect());
        (s, i)
    }

    /// Every `s : B → A` with `f ∘ s = id_B`. The first codomain label varies
    /// slowest; fiber elements are tried in domain label order.
    pub fn sections(&self) -> Result<Vec<SetMap>> {
        if !self.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let choices: Vec<Vec<usize>> = self
            .fibers
            .iter()
            .map(|&f| bits::ones(f).collect())
            .collect();
        let mut out = Vec::new();
        let mut counter = vec![0usize; choices.len()];
        loop {
            let assign = counter.iter().zip(&choices).map(|(&k, c)| c[k]).collect();
            out.push(Self::from_indices(&self.codomain, &self.domain, assign));
            let mut pos = choices.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                counter[pos] += 1;
                if counter[pos] < choices[pos].len() {
                    break;
                }
                counter[pos] = 0;
            }
        }
    }

    /// `g ∘ f`; the codomain of `f` must equal the domain of `g`.
    pub fn compose(g: &SetMap, f: &SetMap) -> Result<SetMap> {
        let perm = f
            .codomain
            .permutation_to(&g.domain)
            .ok_or_else(|| Error::NotComposable {
                codomain: f.codomain.to_string(),
                domain: g.domain.to_string(),
            })?;
        let assign = f.assign.iter().map(|&j| g.assign[perm[j]]).collect();
        Ok(Self::from_indices(&f.domain, &g.codomain, assign))
    }

    /// Whether `f ∘ self = id`.
    pub fn is_section_of(&self, f: &SetMap) -> bool {
        if self.domain != f.codomain || self.codomain != f.domain {
            return false;
        }
        self.domain
            .labels()
            .iter()
            .all(|b| self.apply_label(b).and_then(|a| f.apply_label(a)) == Ok(b.as_str()))
    }
}

impl PartialEq for SetMap {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.codomain == other.codomain
            && self
                .domain
                .labels()
                .iter()
                .all(|a| self.apply_label(a).ok() == other.apply_label(a).ok())
    }
}

impl Eq for SetMap {}

impl fmt::Debug for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetMap({self})")
    }
}

/// Canonical text form:
///
/// ```text
/// domain: 1 2 3
/// codomain: a b
/// map: 1->a 2->a 3->b
/// ```
impl fmt::Display for SetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "domain:")?;
        for l in self.domain.sorted_labels() {
            write!(f, " {l}")?;
        }
        write!(f, "\ncodomain:")?;
        for l in self.codomain.sorted_labels() {
            write!(f, " {l}")?;
        }
        write!(f, "\nmap:")?;
        for l in self.domain.sorted_labels() {
            let t = self.apply_label(l).map_err(|_| fmt::Error)?;
            write!(f, " {l}->{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &str) -> VertexSet {
        VertexSet::new(labels.split_whitespace()).unwrap()
    }

    fn map(dom: &str, cod: &str, pairs: &str) -> SetMap {
        let pairs: Vec<(&str, &str)> = pairs
            .split_whitespace()
            .map(|p| p.split_once("->").unwrap())
            .collect();
        SetMap::new(&vs(dom), &vs(cod), pairs).unwrap()
    }

    fn sub(f: &VertexSet, labels: &str) -> Subset {
        f.subset(labels.split_whitespace()).unwrap()
    }

    #[test]
    fn image_preimage_core() {
        let f = map("1 2 3", "a b", "1->a 2->a 3->b");
        let a = f.domain().clone();
        let b = f.codomain().clone();
        assert_eq!(f.image(&sub(&a, "1 3")).unwrap(), sub(&b, "a b"));
        assert_eq!(f.preimage(&sub(&b, "a")).unwrap(), sub(&a, "1 2"));
        assert!(f.image(&a.empty_subset()).unwrap().is_empty());
        assert_eq!(f.core(&sub(&a, "1 2")).unwrap(), sub(&b, "a"));
        assert_eq!(f.core(&sub(&a, "1 3")).unwrap(), sub(&b, "b"));
        let g = map("1 2 3", "a b c", "1->a 2->a 3->b");
        let c = g.codomain().clone();
        assert_eq!(g.core(&a.empty_subset()).unwrap(), sub(&c, "c"));
        assert_eq!(g.missed(), sub(&c, "c"));
    }

    #[test]
    fn construction_errors() {
        let a = vs("1 2");
        let b = vs("a");
        assert_eq!(
            SetMap::new(&a, &b, [("1", "a")]).unwrap_err(),
            Error::NonTotalMap("2".into())
        );
        assert_eq!(
            SetMap::new(&a, &b, [("1", "a"), ("1", "a"), ("2", "a")]).unwrap_err(),
            Error::DuplicateAssignment("1".into())
        );
        assert!(SetMap::new(&a, &b, [("1", "z"), ("2", "a")]).is_err());
    }

    #[test]
    fn factorize_examples() {
        let f = map("1 2 3", "a b c", "1->a 2->a 3->b");
        let (s, i) = f.factorize();
        assert_eq!(s.codomain(), &vs("a b"));
        assert!(s.is_surjective());
        assert!(i.is_injective());
        assert_eq!(SetMap::compose(&i, &s).unwrap(), f);

        let id = SetMap::identity(&vs("1 2"));
        let (s, i) = id.factorize();
        assert_eq!(s, id);
        assert_eq!(i, id);

        let k = map("1 2", "a", "1->a 2->a");
        let (s, i) = k.factorize();
        assert_eq!(s, k);
        assert_eq!(i, SetMap::identity(&vs("a")));
    }

    #[test]
    fn section_enumeration() {
        let f = map("1 2 3", "a b", "1->a 2->a 3->b");
        let secs = f.sections().unwrap();
        assert_eq!(secs.len(), 2);
        assert_eq!(secs[0], map("a b", "1 2 3", "a->1 b->3"));
        assert_eq!(secs[1], map("a b", "1 2 3", "a->2 b->3"));
        for s in &secs {
            assert!(s.is_section_of(&f));
            let id = SetMap::compose(&f, s).unwrap();
            assert_eq!(id, SetMap::identity(f.codomain()));
        }
        let bij = map("1 2", "a b", "1->b 2->a");
        let secs = bij.sections().unwrap();
        assert_eq!(secs, vec![map("a b", "1 2", "a->2 b->1")]);
        let g = map("1", "a b", "1->a");
        assert_eq!(g.sections().unwrap_err(), Error::NotSurjective);
    }

    #[test]
    fn section_order_follows_codomain_order() {
        let f = map("1 2 3 4", "a b", "1->a 2->a 3->b 4->b");
        let rendered: Vec<String> = f
            .sections()
            .unwrap()
            .iter()
            .map(|s| {
                format!(
                    "{}{}",
                    s.apply_label("a").unwrap(),
                    s.apply_label("b").unwrap()
                )
            })
            .collect();
        assert_eq!(rendered, ["13", "14", "23", "24"]);
    }

    #[test]
    fn composition() {
        let f = map("1 2 3", "a b", "1->a 2->a 3->b");
        let id = SetMap::identity(&vs("a b"));
        assert_eq!(SetMap::compose(&id, &f).unwrap(), f);
        let g = map("a b", "p", "a->p b->p");
        let gf = SetMap::compose(&g, &f).unwrap();
        assert_eq!(gf, map("1 2 3", "p", "1->p 2->p 3->p"));
        assert!(matches!(
            SetMap::compose(&f, &f),
            Err(Error::NotComposable { .. })
        ));
    }

    #[test]
    fn display_is_sorted() {
        let f = map("r2 r1 a", "r a", "r2->r r1->r a->a");
        assert_eq!(
            f.to_string(),
            "domain: a r1 r2\ncodomain: a r\nmap: a->a r1->r r2->r"
        );
    }
}
