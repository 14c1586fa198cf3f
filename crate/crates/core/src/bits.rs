//! Bitmask helpers shared by the complex and ideal code.
//!
//! A subset of a vertex set with `n <= 24` labels is a `u32` whose bit `i`
//! marks the label at index `i`.

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn is_subset(a: u32, b: u32) -> bool {
    a & !b == 0
}

/// Indices of the set bits, lowest first.
pub(crate) fn ones(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All submasks of `mask`, including `0` and `mask` itself.
pub(crate) fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// Inclusion-maximal elements, deduplicated. Order is unspecified.
pub(crate) fn maximal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut out: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| is_subset(s, t)) {
            out.push(s);
        }
    }
    out
}

/// Inclusion-minimal elements, deduplicated. Order is unspecified.
pub(crate) fn minimal(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_unstable_by_key(|s| s.count_ones());
    sets.dedup();
    let mut out: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| is_subset(t, s)) {
            out.push(s);
        }
    }
    out
}

/// Minimal transversals (hitting sets) of a hypergraph, by Berge's
/// incremental method.
///
/// An empty edge cannot be hit, so its presence yields no transversals; an
/// empty edge list yields the single transversal `0`.
pub(crate) fn minimal_transversals(edges: &[u32]) -> Vec<u32> {
    let mut edges = minimal(edges.to_vec());
    edges.sort_unstable_by_key(|e| e.count_ones());
    let mut current = vec![0u32];
    for &edge in &edges {
        let mut next = Vec::with_capacity(current.len());
        for &t in &current {
            if t & edge != 0 {
                next.push(t);
            } else {
                next.extend(ones(edge).map(|v| t | (1 << v)));
            }
        }
        current = minimal(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

/// Remaps a mask through `perm`, where bit `i` moves to bit `perm[i]`.
pub(crate) fn remap(mask: u32, perm: &[usize]) -> u32 {
    ones(mask).fold(0, |acc, i| acc | (1 << perm[i]))
}
