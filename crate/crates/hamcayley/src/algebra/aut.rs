//! Automorphism witnesses by backtracking over generator images, and
//! exhaustive enumeration of small generating sets.

use super::element::Element;
use super::group::Group;
use super::AlgebraError;
use std::collections::HashMap;

/// A verified automorphism, stored as the full index-to-index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    map: Vec<u32>,
}

impl Automorphism {
    pub fn apply(&self, g: &Group, e: &Element) -> Element {
        g.element_at(self.map[g.index_of(e)] as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Full homomorphism check over every pair; used by property tests.
    pub fn verify(&self, g: &Group) -> bool {
        let n = g.order();
        let mut seen = vec![false; n];
        for &j in &self.map {
            if seen[j as usize] {
                return false;
            }
            seen[j as usize] = true;
        }
        for a in 0..n {
            let ea = g.element_at(a);
            for b in 0..n {
                let eb = g.element_at(b);
                let lhs = self.map[g.index_of(&g.mul(&ea, &eb))];
                let rhs = g.index_of(&g.mul(
                    &g.element_at(self.map[a] as usize),
                    &g.element_at(self.map[b] as usize),
                ));
                if lhs != rhs as u32 {
                    return false;
                }
            }
        }
        true
    }
}

/// Extends `gens[i] -> images[i]` to a homomorphism by breadth-first
/// closure, checking consistency on every edge of the Cayley graph of
/// `gens`. Returns the map only if it is total (the generators generate)
/// and injective.
fn extend_hom(g: &Group, gens: &[Element], images: &[Element]) -> Option<Vec<u32>> {
    let n = g.order();
    const UNSET: u32 = u32::MAX;
    let mut map = vec![UNSET; n];
    let id = g.index_of(&g.identity());
    map[id] = id as u32;
    let mut queue = vec![id];
    let mut assigned = 1usize;
    while let Some(cur) = queue.pop() {
        let cur_e = g.element_at(cur);
        let img_e = g.element_at(map[cur] as usize);
        for (s, t) in gens.iter().zip(images) {
            let nxt = g.index_of(&g.mul(&cur_e, s));
            let img = g.index_of(&g.mul(&img_e, t)) as u32;
            if map[nxt] == UNSET {
                map[nxt] = img;
                assigned += 1;
                queue.push(nxt);
            } else if map[nxt] != img {
                return None;
            }
        }
    }
    if assigned < n {
        return None; // gens do not generate
    }
    let mut seen = vec![false; n];
    for &j in &map {
        if seen[j as usize] {
            return None;
        }
        seen[j as usize] = true;
    }
    Some(map)
}

/// Searches for an automorphism carrying `s1 ∪ s1^{-1}` onto
/// `s2 ∪ s2^{-1}`. Candidate images are drawn from the target set and
/// pre-filtered by element order; each assignment is extended to a full
/// homomorphism and checked for bijectivity.
pub fn genset_equivalent(
    g: &Group,
    s1: &[Element],
    s2: &[Element],
) -> Result<Option<Automorphism>, AlgebraError> {
    for s in [s1, s2] {
        if super::Subgroup::closure(g, s).order() != g.order() {
            return Err(AlgebraError::NotGenerating);
        }
    }
    let t1 = symmetrized(g, s1);
    let t2 = symmetrized(g, s2);
    if t1.len() != t2.len() {
        return Ok(None);
    }
    let mut stack: Vec<Element> = Vec::with_capacity(s1.len());
    let found = assign(g, s1, &t1, &t2, &mut stack);
    Ok(found)
}

fn assign(
    g: &Group,
    gens: &[Element],
    t1: &[Element],
    t2: &[Element],
    images: &mut Vec<Element>,
) -> Option<Automorphism> {
    if images.len() == gens.len() {
        let map = extend_hom(g, gens, images)?;
        // the witness must carry the symmetrized source exactly onto the
        // symmetrized target
        let mut mapped: Vec<u32> = t1.iter().map(|e| map[g.index_of(e)]).collect();
        mapped.sort_unstable();
        let target: Vec<u32> = t2.iter().map(|e| g.index_of(e) as u32).collect();
        if mapped == target {
            return Some(Automorphism { map });
        }
        return None;
    }
    let next = &gens[images.len()];
    let want = g.elem_order(next);
    for cand in t2 {
        if g.elem_order(cand) != want {
            continue;
        }
        images.push(*cand);
        if let Some(a) = assign(g, gens, t1, t2, images) {
            return Some(a);
        }
        images.pop();
    }
    None
}

/// `S ∪ S^{-1}`, deduplicated and sorted by element index.
fn symmetrized(g: &Group, s: &[Element]) -> Vec<Element> {
    let mut out: Vec<Element> = s.iter().copied().chain(s.iter().map(|e| g.inv(e))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

const WORD_BITS: usize = 64;

/// Dense bitset closure; returns the closure size.
fn closure_size(g: &Group, step: impl Fn(usize, usize) -> usize, seeds: &[usize]) -> usize {
    let n = g.order();
    let words = n.div_ceil(WORD_BITS);
    let mut bits = vec![0u64; words];
    let id = g.index_of(&g.identity());
    bits[id / WORD_BITS] |= 1 << (id % WORD_BITS);
    let mut queue = vec![id];
    let mut count = 1usize;
    while let Some(cur) = queue.pop() {
        for (k, _) in seeds.iter().enumerate() {
            let nxt = step(cur, k);
            let (w, b) = (nxt / WORD_BITS, 1u64 << (nxt % WORD_BITS));
            if bits[w] & b == 0 {
                bits[w] |= b;
                count += 1;
                queue.push(nxt);
            }
        }
    }
    count
}

fn pair_generates(g: &Group, i: usize, j: usize) -> bool {
    let a = g.element_at(i);
    let b = g.element_at(j);
    let seeds = [i, j];
    let step = |cur: usize, k: usize| {
        let e = g.element_at(cur);
        g.index_of(&g.mul(&e, if k == 0 { &a } else { &b }))
    };
    closure_size(g, step, &seeds) == g.order()
}

/// All 2-element generating sets, one representative per orbit of the
/// inverse-replacement moves `{a,b} -> {a^{-1},b} -> {a,b^{-1}}`. The
/// identity never appears (it cannot label a Cayley edge), and variants
/// that collapse to a single element are skipped.
pub fn enumerate_gensets(g: &Group) -> Vec<[Element; 2]> {
    let n = g.order();
    let inv: Vec<u32> = (0..n)
        .map(|i| g.index_of(&g.inv(&g.element_at(i))) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 1..n {
        for j in (i + 1)..n {
            if !is_canonical_pair(&inv, i, j) {
                continue;
            }
            if pair_generates(g, i, j) {
                out.push([g.element_at(i), g.element_at(j)]);
            }
        }
    }
    out
}

/// Canonical form under independent inverse replacement: the
/// lexicographically least valid variant.
pub(crate) fn is_canonical_pair(inv: &[u32], i: usize, j: usize) -> bool {
    let variants = [
        (i, j),
        (inv[i] as usize, j),
        (i, inv[j] as usize),
        (inv[i] as usize, inv[j] as usize),
    ];
    let mut best = (usize::MAX, usize::MAX);
    for (a, b) in variants {
        if a == b || a == 0 || b == 0 {
            continue; // collapsed or contains the identity
        }
        let key = (a.min(b), a.max(b));
        if key < best {
            best = key;
        }
    }
    best == (i, j)
}

/// Minimal 3-element generating sets: triples that generate while no
/// 2-element subset does, deduplicated under inverse replacement.
pub fn enumerate_minimal_triples(g: &Group) -> Vec<[Element; 3]> {
    let n = g.order();
    let inv: Vec<u32> = (0..n)
        .map(|i| g.index_of(&g.inv(&g.element_at(i))) as u32)
        .collect();
    let mut pair_cache: HashMap<(u32, u32), bool> = HashMap::new();
    let mut pair_gen = |i: usize, j: usize, g: &Group| -> bool {
        let key = (i.min(j) as u32, i.max(j) as u32);
        *pair_cache
            .entry(key)
            .or_insert_with(|| pair_generates(g, i, j))
    };
    let mut out = Vec::new();
    for i in 1..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if !is_canonical_triple(&inv, [i, j, k]) {
                    continue;
                }
                if pair_gen(i, j, g) || pair_gen(i, k, g) || pair_gen(j, k, g) {
                    continue;
                }
                if triple_generates(g, i, j, k) {
                    out.push([g.element_at(i), g.element_at(j), g.element_at(k)]);
                }
            }
        }
    }
    out
}

fn triple_generates(g: &Group, i: usize, j: usize, k: usize) -> bool {
    let es = [g.element_at(i), g.element_at(j), g.element_at(k)];
    let seeds = [i, j, k];
    let step = |cur: usize, s: usize| {
        let e = g.element_at(cur);
        g.index_of(&g.mul(&e, &es[s]))
    };
    closure_size(g, step, &seeds) == g.order()
}

fn is_canonical_triple(inv: &[u32], t: [usize; 3]) -> bool {
    let mut best = [usize::MAX; 3];
    for mask in 0..8u32 {
        let mut v: Vec<usize> = (0..3)
            .map(|b| {
                if mask >> b & 1 == 1 {
                    inv[t[b]] as usize
                } else {
                    t[b]
                }
            })
            .collect();
        v.sort_unstable();
        if v[0] == 0 || v[0] == v[1] || v[1] == v[2] {
            continue;
        }
        let arr = [v[0], v[1], v[2]];
        if arr < best {
            best = arr;
        }
    }
    best == t
}

#[cfg(test)]
mod tests {
    use super::super::descriptor::{GroupDescriptor, QFamily};
    use super::*;

    fn heis7() -> Group {
        Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap()
    }

    #[test]
    fn identity_witness() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let s = [x, yw];
        let w = genset_equivalent(&g, &s, &s).unwrap().unwrap();
        assert!(w.verify(&g));
    }

    #[test]
    fn exp3_y_to_y2_witness() {
        // {x, y^2 w} and {x, y w} are equivalent: some automorphism fixes x
        // and sends y to y^2
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let w = g.gen_w();
        let s1 = [x, g.mul(&g.pow(&y, 2), &w)];
        let s2 = [x, g.mul(&y, &w)];
        let a = genset_equivalent(&g, &s1, &s2).unwrap().expect("witness");
        assert!(a.verify(&g));
    }

    #[test]
    fn exp9_no9_witness() {
        let g =
            Group::build(GroupDescriptor::q_semidirect(QFamily::Mod27, 7, &[2, 1])).unwrap();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let w = g.gen_w();
        let xyw = g.mul(&g.mul(&x, &y), &w);
        let xy2w = g.mul(&g.mul(&x, &g.pow(&y, 2)), &w);
        let a = genset_equivalent(&g, &[x, xy2w], &[x, xyw]).unwrap().expect("witness");
        assert!(a.verify(&g));
    }

    #[test]
    fn inequivalent_sets() {
        // the two canonical exponent-3 sets are not equivalent to each other
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let w = g.gen_w();
        let s1 = [x, g.mul(&y, &w)];
        let s2 = [x, g.mul(&g.mul(&x, &y), &w)];
        assert!(genset_equivalent(&g, &s1, &s2).unwrap().is_none());
    }

    #[test]
    fn not_generating_is_an_error() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        assert_eq!(
            genset_equivalent(&g, &[x, y], &[x, y]),
            Err(AlgebraError::NotGenerating)
        );
    }

    #[test]
    fn enumeration_includes_canonical_set() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let list = enumerate_gensets(&g);
        assert!(!list.is_empty());
        let target = symmetrized(&g, &[x, yw]);
        assert!(list.iter().any(|p| symmetrized(&g, p) == target));
        // no representative contains the identity, and all generate
        for pair in &list {
            assert_ne!(pair[0], g.identity());
            assert_ne!(pair[1], g.identity());
        }
    }

    #[test]
    fn cyclic_by_cyclic_needs_two_gens() {
        let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Z27, 7, &[2])).unwrap();
        assert!(!enumerate_gensets(&g).is_empty());
    }
}
