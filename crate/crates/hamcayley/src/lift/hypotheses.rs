//! Hypothesis predicates for the externally cited hamiltonicity results.
//!
//! These only decide whether a result's algebraic hypotheses hold for
//! `(G, S)` and return the witnessing data. The constructions the results
//! promise are out of scope; the search oracle stands in for them.

use crate::algebra::{is_prime, Element, Group, StructuralKind, Subgroup};

/// A matched hypothesis with its witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaMatch {
    /// Derived subgroup cyclic of prime-power order (1 counts as the zeroth
    /// power).
    KeatingWitte { derived_order: usize },
    /// Some `s ∈ S` generating a normal subgroup, with `s` central or of
    /// prime order.
    NormalEasy { s: Element, central: bool },
    /// Some `s ∈ S` with `<s>` normal, `|s|` dividing a product of two
    /// distinct primes `pi * q`, `s^pi` central, and `q` dividing the
    /// quotient order.
    CyclicNormal2p { s: Element, pi: u32, q: u32 },
    /// All `s t^{-1}` for `s, t ∈ S` inside one normal prime-power
    /// subgroup.
    PkSubgrp { prime: u32, subgroup_order: usize },
}

/// Evaluates the four cited hypotheses against `(G, S)`.
pub fn lemma_hypotheses(g: &Group, s: &[Element]) -> Vec<LemmaMatch> {
    let mut out = Vec::new();
    let center = Subgroup::structural(g, StructuralKind::Center);

    let derived = Subgroup::structural(g, StructuralKind::Derived);
    if derived.is_cyclic(g) && is_prime_power(derived.order()) {
        out.push(LemmaMatch::KeatingWitte { derived_order: derived.order() });
    }

    for e in s {
        let h = Subgroup::closure(g, &[*e]);
        if !h.is_normal() {
            continue;
        }
        let ord = g.elem_order(e);
        let central = center.contains(e);
        if central || is_prime(ord as u32) {
            out.push(LemmaMatch::NormalEasy { s: *e, central });
        }
        // distinct prime pairs from |G| = 27p
        let p = g.p();
        for (pi, q) in [(3u32, p), (p, 3u32)] {
            if pi == q {
                continue;
            }
            let pq = pi as usize * q as usize;
            if pq % ord != 0 {
                continue;
            }
            if !center.contains(&g.pow(e, pi as i64)) {
                continue;
            }
            let quotient_order = g.order() / h.order();
            if quotient_order % q as usize == 0 {
                out.push(LemmaMatch::CyclicNormal2p { s: *e, pi, q });
                break;
            }
        }
    }

    // normal closure of all quotients s t^{-1}
    let mut diffs = Vec::new();
    for a in s {
        for b in s {
            diffs.push(g.mul(a, &g.inv(b)));
        }
    }
    diffs.sort_unstable();
    diffs.dedup();
    let n = Subgroup::closure(g, &diffs).normal_closure(g);
    if let Some(prime) = prime_power_base(n.order()) {
        out.push(LemmaMatch::PkSubgrp { prime, subgroup_order: n.order() });
    }

    out
}

fn is_prime_power(n: usize) -> bool {
    prime_power_base(n).is_some()
}

/// `Some(p)` when `n = p^k`. The trivial group is a p-group for every
/// prime; 3 is reported as its base.
fn prime_power_base(n: usize) -> Option<u32> {
    if n == 1 {
        return Some(3);
    }
    let mut m = n;
    let mut d = 2usize;
    while d * d <= m {
        if m % d == 0 {
            while m % d == 0 {
                m /= d;
            }
            return if m == 1 { Some(d as u32) } else { None };
        }
        d += 1;
    }
    Some(m as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GroupDescriptor, QFamily};

    #[test]
    fn z27_semidirect_matches_keating_witte() {
        let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Z27, 7, &[2])).unwrap();
        let x = g.q_gen("x").unwrap();
        let w = g.gen_w();
        let ms = lemma_hypotheses(&g, &[x, g.mul(&x, &w)]);
        assert!(ms
            .iter()
            .any(|m| matches!(m, LemmaMatch::KeatingWitte { derived_order: 7 })));
    }

    #[test]
    fn z13_aligned_pair_matches_pk_subgrp() {
        let g = Group::build(GroupDescriptor::Z13OnE27).unwrap();
        let w = g.gen_w();
        let wv = g.mul(&w, &g.gen_v().unwrap());
        // both elements in the same coset of the normal 3-subgroup
        let ms = lemma_hypotheses(&g, &[w, wv]);
        assert!(ms
            .iter()
            .any(|m| matches!(m, LemmaMatch::PkSubgrp { prime: 3, subgroup_order: 27 })));
    }

    #[test]
    fn canonical_exp3_set_matches_nothing() {
        let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1]))
            .unwrap();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        assert!(lemma_hypotheses(&g, &[x, yw]).is_empty());
    }

    #[test]
    fn central_times_p_element_matches_cyclic_normal_2p() {
        // b = z w generates Z(G) x P; b^p is central and 3 divides |G/<b>|
        let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1]))
            .unwrap();
        let zw = g.mul(&g.q_gen("z").unwrap(), &g.gen_w());
        let x = g.q_gen("x").unwrap();
        let ms = lemma_hypotheses(&g, &[x, zw]);
        assert!(ms
            .iter()
            .any(|m| matches!(m, LemmaMatch::CyclicNormal2p { pi: 7, q: 3, .. })));
    }
}
