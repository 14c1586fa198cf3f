//! Brute-force reference implementations over full power sets, seeded
//! random generators, and the adjunction audit.
//!
//! The reference code shares nothing with the fast paths except the value
//! types: it keeps its own copy of the map as a label table and works with
//! explicit membership vectors.
//!
//! Randomness comes from `ChaCha8Rng` seeded with `seed_from_u64(seed)`.
//! Audits give trial `t` its own stream with `set_stream(t)`, so trials are
//! independent and reproducible individually.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoints::{apply, fiber_interval, FunctorKind};
use crate::complex::{guard, SimplicialComplex, Subset, VertexSet};
use crate::error::Result;
use crate::setmap::SetMap;

/// Largest ground set the reference code accepts.
pub const ORACLE_LIMIT: usize = 12;

/// A downward-closed family of subsets of `ground`, stored as one flag per
/// subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownSetFamily {
    ground: VertexSet,
    members: Vec<bool>,
}

fn submask_of(s: usize, t: usize) -> bool {
    s & !t == 0
}

impl DownSetFamily {
    /// The family generated (downward) by `sets`.
    fn generated(ground: &VertexSet, sets: impl IntoIterator<Item = usize>) -> Self {
        let size = 1usize << ground.len();
        let mut members = vec![false; size];
        for s in sets {
            members[s] = true;
        }
        for s in (0..size).rev() {
            if members[s] {
                for i in 0..ground.len() {
                    if s & (1 << i) != 0 {
                        members[s & !(1 << i)] = true;
                    }
                }
            }
        }
        DownSetFamily {
            ground: ground.clone(),
            members,
        }
    }

    fn filtered(ground: &VertexSet, keep: impl Fn(usize) -> bool) -> Self {
        DownSetFamily {
            ground: ground.clone(),
            members: (0..1usize << ground.len()).map(keep).collect(),
        }
    }

    pub fn from_complex(x: &SimplicialComplex) -> Result<Self> {
        let ground = x.vertices();
        guard("oracle ground set", ground.len(), ORACLE_LIMIT)?;
        let mut out = Vec::with_capacity(1 << ground.len());
        for s in 0..1u32 << ground.len() {
            out.push(x.is_face(&Subset::from_bits(ground, s)?)?);
        }
        Ok(DownSetFamily {
            ground: ground.clone(),
            members: out,
        })
    }

    pub fn to_complex(&self) -> SimplicialComplex {
        let sets: Vec<Subset> = (0..self.members.len())
            .filter(|&s| self.members[s])
            .map(|s| Subset::from_bits(&self.ground, s as u32).expect("within ground"))
            .collect();
        SimplicialComplex::from_facets(&self.ground, &sets).expect("same ground")
    }

    pub fn ground(&self) -> &VertexSet {
        &self.ground
    }

    pub fn contains(&self, s: &Subset) -> Result<bool> {
        Ok(self.members[s.bits_in(&self.ground)? as usize])
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_down_closed(&self) -> bool {
        (0..self.members.len()).all(|t| {
            !self.members[t]
                || (0..self.members.len()).all(|s| !submask_of(s, t) || self.members[s])
        })
    }

    pub fn is_subfamily_of(&self, other: &DownSetFamily) -> bool {
        self.members.len() == other.members.len()
            && self
                .members
                .iter()
                .zip(&other.members)
                .all(|(&a, &b)| !a || b)
    }

    /// `{F : ground ∖ F ∉ self}`.
    pub fn alexander_dual(&self) -> DownSetFamily {
        let full = self.members.len() - 1;
        DownSetFamily::filtered(&self.ground, |s| !self.members[full & !s])
    }
}

/// The map as a plain lookup table from domain to codomain positions.
struct Table {
    domain: VertexSet,
    codomain: VertexSet,
    target: Vec<usize>,
}

impl Table {
    fn new(f: &SetMap) -> Result<Self> {
        guard("oracle domain", f.domain().len(), ORACLE_LIMIT)?;
        guard("oracle codomain", f.codomain().len(), ORACLE_LIMIT)?;
        let target = f
            .domain()
            .labels()
            .iter()
            .map(|a| {
                let b = f.apply_label(a).expect("total map");
                f.codomain().index_of(b).expect("codomain label")
            })
            .collect();
        Ok(Table {
            domain: f.domain().clone(),
            codomain: f.codomain().clone(),
            target,
        })
    }

    fn image(&self, d: usize) -> usize {
        (0..self.target.len())
            .filter(|&a| d & (1 << a) != 0)
            .fold(0, |acc, a| acc | (1 << self.target[a]))
    }

    fn preimage(&self, c: usize) -> usize {
        (0..self.target.len())
            .filter(|&a| c & (1 << self.target[a]) != 0)
            .fold(0, |acc, a| acc | (1 << a))
    }

    fn core(&self, d: usize) -> usize {
        (0..self.codomain.len())
            .filter(|&b| submask_of(self.preimage(1 << b), d))
            .fold(0, |acc, b| acc | (1 << b))
    }
}

fn conform_family(z: &DownSetFamily, ground: &VertexSet) -> Result<DownSetFamily> {
    if z.ground.same_layout(ground) {
        return Ok(z.clone());
    }
    let x = z.to_complex();
    DownSetFamily::from_complex(x.conform_to(ground)?.as_ref())
}

/// The five functors evaluated literally from their face descriptions:
///
/// - `ee`: generated by `{f(D) : D ∈ X}`
/// - `se`: `{T : f(T) ∈ Y}`
/// - `ss`: `{C : f⁻¹(C) ∈ X}`
/// - `sa`: `{T : core_f(T) ∈ Y}`
/// - `aa`: `{C : core_f(D) = C ⇒ D ∈ X for all D ⊆ A}`
pub fn definitional_functor(
    kind: FunctorKind,
    f: &SetMap,
    z: &DownSetFamily,
) -> Result<DownSetFamily> {
    let t = Table::new(f)?;
    let z = conform_family(z, kind.source(f))?;
    let m = &z.members;
    let (a, b) = (&t.domain, &t.codomain);
    Ok(match kind {
        FunctorKind::ShriekShriek => {
            DownSetFamily::generated(b, (0..m.len()).filter(|&d| m[d]).map(|d| t.image(d)))
        }
        FunctorKind::StarShriek => DownSetFamily::filtered(a, |s| m[t.image(s)]),
        FunctorKind::StarStar => DownSetFamily::filtered(b, |c| m[t.preimage(c)]),
        FunctorKind::StarUpper => DownSetFamily::filtered(a, |s| m[t.core(s)]),
        FunctorKind::UpperUpper => {
            let mut ok = vec![true; 1 << b.len()];
            for d in 0..m.len() {
                if !m[d] {
                    ok[t.core(d)] = false;
                }
            }
            DownSetFamily::filtered(b, |c| ok[c])
        }
    })
}

/// The three lifts of a map on subsets to a map on families of subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hat {
    /// `!`: image.
    Shriek,
    /// `*`: preimage.
    Star,
    /// `¡`: core.
    Upper,
}

impl Hat {
    pub const ALL: [Hat; 3] = [Hat::Shriek, Hat::Star, Hat::Upper];

    pub fn symbol(self) -> &'static str {
        match self {
            Hat::Shriek => "!",
            Hat::Star => "*",
            Hat::Upper => "¡",
        }
    }
}

/// `(f^p)^q`: the subset-level map `f^p` lifted once more with `q`.
///
/// For a monotone `g : P(S) → P(T)`, the lifts act on down-sets by
///
/// - `g^*(Z) = {s : g(s) ∈ Z}` for `Z` on `T`;
/// - `g^!(Z)`, generated by `{g(s) : s ∈ Z}`;
/// - `g^¡(Z) = {t : no s ∉ Z has g(s) ⊆ t}`.
pub struct SingleHatComposite {
    inner: Hat,
    outer: Hat,
    table: Table,
}

impl SingleHatComposite {
    pub fn new(inner: Hat, outer: Hat, f: &SetMap) -> Result<Self> {
        Ok(SingleHatComposite {
            inner,
            outer,
            table: Table::new(f)?,
        })
    }

    /// `(S, T)` for the inner map `g : P(S) → P(T)`.
    fn inner_ends(&self) -> (&VertexSet, &VertexSet) {
        match self.inner {
            Hat::Star => (&self.table.codomain, &self.table.domain),
            _ => (&self.table.domain, &self.table.codomain),
        }
    }

    fn g(&self, s: usize) -> usize {
        match self.inner {
            Hat::Shriek => self.table.image(s),
            Hat::Star => self.table.preimage(s),
            Hat::Upper => self.table.core(s),
        }
    }

    /// The ground set inputs must live on.
    pub fn source(&self) -> &VertexSet {
        let (s, t) = self.inner_ends();
        if self.outer == Hat::Star {
            t
        } else {
            s
        }
    }

    pub fn apply(&self, z: &DownSetFamily) -> Result<DownSetFamily> {
        let (s_set, t_set) = self.inner_ends();
        let z = conform_family(z, self.source())?;
        let m = &z.members;
        Ok(match self.outer {
            Hat::Star => DownSetFamily::filtered(s_set, |s| m[self.g(s)]),
            Hat::Shriek => {
                DownSetFamily::generated(t_set, (0..m.len()).filter(|&s| m[s]).map(|s| self.g(s)))
            }
            Hat::Upper => {
                let blocked: Vec<usize> =
                    (0..m.len()).filter(|&s| !m[s]).map(|s| self.g(s)).collect();
                DownSetFamily::filtered(t_set, |t| blocked.iter().all(|&g| !submask_of(g, t)))
            }
        })
    }
}

pub fn singlehat_composite(inner: Hat, outer: Hat, f: &SetMap) -> Result<SingleHatComposite> {
    SingleHatComposite::new(inner, outer, f)
}

/// The reference Alexander dual of a complex.
pub fn alexander_dual(x: &SimplicialComplex) -> Result<SimplicialComplex> {
    Ok(DownSetFamily::from_complex(x)?
        .alexander_dual()
        .to_complex())
}

/// A random complex on `a`: with probability `(1 - density) / 8` the void
/// complex; otherwise each subset `S` is drawn with probability
/// `density^|S|` and the result is downward closed. Density `0` gives the
/// void complex or `{∅}`, density `1` gives the full simplex.
pub fn random_complex_from<R: Rng + ?Sized>(
    rng: &mut R,
    a: &VertexSet,
    density: f64,
) -> Result<SimplicialComplex> {
    guard("random complex ground set", a.len(), ORACLE_LIMIT)?;
    let density = density.clamp(0.0, 1.0);
    if rng.random_bool((1.0 - density) / 8.0) {
        return Ok(SimplicialComplex::void(a));
    }
    let picked: Vec<Subset> = (0..1u32 << a.len())
        .filter(|s| rng.random_bool(density.powi(s.count_ones() as i32)))
        .map(|s| Subset::from_bits(a, s))
        .collect::<Result<_>>()?;
    SimplicialComplex::from_facets(a, &picked)
}

/// [`random_complex_from`] with a fresh generator seeded by `seed`.
pub fn random_complex(a: &VertexSet, seed: u64, density: f64) -> Result<SimplicialComplex> {
    random_complex_from(&mut ChaCha8Rng::seed_from_u64(seed), a, density)
}

/// A uniformly random map `a → b`; `b` must be nonempty unless `a` is empty.
pub fn random_map<R: Rng + ?Sized>(rng: &mut R, a: &VertexSet, b: &VertexSet) -> SetMap {
    let assign = (0..a.len()).map(|_| rng.random_range(0..b.len())).collect();
    SetMap::from_indices(a, b, assign)
}

/// A random surjection `a → b` with `|a| ≥ |b|`.
pub fn random_surjection<R: Rng + ?Sized>(rng: &mut R, a: &VertexSet, b: &VertexSet) -> SetMap {
    assert!(a.len() >= b.len(), "no surjection from a smaller set");
    let mut assign: Vec<usize> = (0..b.len())
        .chain((b.len()..a.len()).map(|_| rng.random_range(0..b.len().max(1))))
        .collect();
    for i in (1..assign.len()).rev() {
        let j = rng.random_range(0..=i);
        assign.swap(i, j);
    }
    SetMap::from_indices(a, b, assign)
}

/// A random injection `a → b` with `|a| ≤ |b|`.
pub fn random_injection<R: Rng + ?Sized>(rng: &mut R, a: &VertexSet, b: &VertexSet) -> SetMap {
    assert!(a.len() <= b.len(), "no injection into a smaller set");
    let mut slots: Vec<usize> = (0..b.len()).collect();
    for i in 0..a.len() {
        let j = rng.random_range(i..b.len());
        slots.swap(i, j);
    }
    slots.truncate(a.len());
    SetMap::from_indices(a, b, slots)
}

/// Every complex on `a`, including the void complex, in a fixed order.
pub fn enumerate_complexes(a: &VertexSet) -> Result<Vec<SimplicialComplex>> {
    guard("complex enumeration", a.len(), 5)?;
    let mut order: Vec<u32> = (0..1u32 << a.len()).collect();
    order.sort_by_key(|s| s.count_ones());
    let mut out = Vec::new();
    let mut member = vec![false; 1 << a.len()];
    extend_down_sets(a, &order, 0, &mut member, &mut out);
    Ok(out)
}

fn extend_down_sets(
    a: &VertexSet,
    order: &[u32],
    pos: usize,
    member: &mut Vec<bool>,
    out: &mut Vec<SimplicialComplex>,
) {
    let Some(&s) = order.get(pos) else {
        let sets: Vec<Subset> = (0..member.len())
            .filter(|&t| member[t])
            .map(|t| Subset::from_bits(a, t as u32).expect("within ground"))
            .collect();
        out.push(SimplicialComplex::from_facets(a, &sets).expect("same ground"));
        return;
    };
    extend_down_sets(a, order, pos + 1, member, out);
    let allowed = (0..a.len()).all(|i| s & (1 << i) == 0 || member[(s & !(1 << i)) as usize]);
    if allowed {
        member[s as usize] = true;
        extend_down_sets(a, order, pos + 1, member, out);
        member[s as usize] = false;
    }
}

/// Every map `a → b`.
pub fn enumerate_maps(a: &VertexSet, b: &VertexSet) -> Vec<SetMap> {
    if b.is_empty() {
        return if a.is_empty() {
            vec![SetMap::identity(a)]
        } else {
            Vec::new()
        };
    }
    let total = b.len().pow(a.len() as u32);
    (0..total)
        .map(|mut k| {
            let assign = (0..a.len())
                .map(|_| {
                    let j = k % b.len();
                    k /= b.len();
                    j
                })
                .collect();
            SetMap::from_indices(a, b, assign)
        })
        .collect()
}

/// Outcome of an audit: how many checks ran and the first failure seen.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn merge(&mut self, other: AuditReport) {
        self.trials += other.trials;
        self.checks += other.checks;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trials={} checks={} failures={}",
            self.trials, self.checks, self.failures
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "\nfirst failure: {first}")?;
        }
        Ok(())
    }
}

/// How an audit evaluates a functor.
pub type FunctorFn<'a> =
    dyn Fn(FunctorKind, &SetMap, &SimplicialComplex) -> Result<SimplicialComplex> + 'a;

/// [`adjunction_audit_with`] using [`apply`].
pub fn adjunction_audit(f: &SetMap, trials: usize, seed: u64) -> Result<AuditReport> {
    adjunction_audit_with(f, trials, seed, &apply)
}

/// Samples `trials` pairs `(X, Y)` and checks, for `functor`:
///
/// - the four adjunction equivalences `L(X) ⊆ Y ⟺ X ⊆ R(Y)` along
///   `ee ⊣ se ⊣ ss ⊣ sa ⊣ aa`;
/// - the unit and counit inclusions `Z ⊆ R(L(Z))`, `L(R(Z)) ⊆ Z`;
/// - that the solutions of `se`, `ss` and `sa` with a given value form a
///   nonempty interval containing the sampled input, whose bounds are
///   solutions.
pub fn adjunction_audit_with(
    f: &SetMap,
    trials: usize,
    seed: u64,
    functor: &FunctorFn<'_>,
) -> Result<AuditReport> {
    let mut report = AuditReport::default();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        audit_trial(f, &mut rng, functor, &mut report)?;
    }
    report.trials = trials;
    Ok(report)
}

fn audit_trial(
    f: &SetMap,
    rng: &mut ChaCha8Rng,
    functor: &FunctorFn<'_>,
    report: &mut AuditReport,
) -> Result<()> {
    use FunctorKind::*;
    let density = rng.random_range(0.2..0.95);
    let x = random_complex_from(rng, f.domain(), density)?;
    let density = rng.random_range(0.2..0.95);
    let y = random_complex_from(rng, f.codomain(), density)?;
    let run = |k: FunctorKind, z: &SimplicialComplex| functor(k, f, z);
    let describe = |what: &str| {
        let (x, y) = (x.to_string(), y.to_string());
        let what = what.to_string();
        move || format!("{what}\nmap:\n{f}\nX:\n{x}\nY:\n{y}")
    };

    let chain = [ShriekShriek, StarShriek, StarStar, StarUpper, UpperUpper];
    for pair in chain.windows(2) {
        let (l, r) = (pair[0], pair[1]);
        let (src, dst) = if l.is_covariant() { (&x, &y) } else { (&y, &x) };
        let lhs = run(l, src)?.is_subcomplex_of(dst)?;
        let rhs = src.is_subcomplex_of(&run(r, dst)?)?;
        report.record(lhs == rhs, describe(&format!("{l} ⊣ {r} equivalence")));
        let unit = src.is_subcomplex_of(&run(r, &run(l, src)?)?)?;
        report.record(unit, describe(&format!("{l} ⊣ {r} unit")));
        let counit = run(l, &run(r, dst)?)?.is_subcomplex_of(dst)?;
        report.record(counit, describe(&format!("{l} ⊣ {r} counit")));
    }

    for (middle, input) in [(StarShriek, &y), (StarStar, &x), (StarUpper, &y)] {
        let target = run(middle, input)?;
        let iv = fiber_interval(middle, f, &target)?;
        let ok = !iv.empty
            && iv.contains(input)?
            && run(middle, &iv.lower)? == target
            && run(middle, &iv.upper)? == target;
        report.record(ok, describe(&format!("{middle} solution interval")));
    }
    Ok(())
}

/// Runs `trials` audit trials, each on a fresh random map between random
/// vertex sets of at most `max_vertices` labels.
pub fn random_audit(trials: usize, max_vertices: usize, seed: u64) -> Result<AuditReport> {
    guard("audit vertex count", max_vertices, ORACLE_LIMIT)?;
    let mut report = AuditReport::default();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let na = rng.random_range(0..=max_vertices);
        let nb = rng.random_range(1..=max_vertices.max(1));
        let a = VertexSet::numbered("a", na)?;
        let b = VertexSet::numbered("b", nb)?;
        let f = random_map(&mut rng, &a, &b);
        let mut one = AuditReport::default();
        audit_trial(&f, &mut rng, &apply, &mut one)?;
        one.trials = 1;
        report.merge(one);
    }
    Ok(report)
}
