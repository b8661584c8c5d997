//! Lifts that go through a doubled or congruent edge instead of a directly
//! generating voltage.

use super::certificate::HamCertificate;
use super::voltage::{fgl_lift, voltage};
use super::LiftError;
use crate::algebra::Element;
use crate::graph::{trace, DoubleEdge, Label, QuotientMultigraph, Walk};

/// Lift through a congruent label pair: `s = t (mod N)` with `s != t` as
/// elements, `N` normal of prime order. Substituting `t` for occurrences
/// of `s` leaves the quotient cycle intact and shifts the voltage by a
/// nontrivial element of `N`; substitution patterns of up to two
/// occurrences are tried until the voltage generates.
pub fn double_edge_lift(
    q: &QuotientMultigraph,
    cycle: &Walk,
    s: Label,
    t: Label,
) -> Result<HamCertificate, LiftError> {
    let g = q.group().clone();
    let n = q.subgroup();
    if !n.is_normal() || !crate::algebra::is_prime(n.order() as u32) {
        return Err(LiftError::BadSubgroup(
            "need a normal subgroup of prime order".to_string(),
        ));
    }
    let es = q.label_element(s).ok_or(LiftError::UnknownLabel(s.value()))?;
    let et = q.label_element(t).ok_or(LiftError::UnknownLabel(t.value()))?;
    if es == et || !n.contains(&g.mul(&es, &g.inv(&et))) {
        return Err(LiftError::NotCongruent);
    }
    let occurrences: Vec<usize> = cycle
        .labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == s)
        .map(|(i, _)| i)
        .collect();
    if occurrences.is_empty() {
        return Err(LiftError::NoEdgeLabelled);
    }
    // patterns by size: none, singles, pairs
    let mut patterns: Vec<Vec<usize>> = vec![Vec::new()];
    patterns.extend(occurrences.iter().map(|&i| vec![i]));
    for (a, &i) in occurrences.iter().enumerate() {
        for &j in &occurrences[a + 1..] {
            patterns.push(vec![i, j]);
        }
    }
    for pat in patterns {
        let mut labels = cycle.labels.clone();
        for &i in &pat {
            labels[i] = t;
        }
        let candidate = Walk::new(cycle.start, labels);
        let v = voltage(q, &candidate)?;
        if g.elem_order(&v) == n.order() {
            let mut cert = fgl_lift(q, &candidate)?;
            cert.method = "double-edge".to_string();
            return Ok(cert);
        }
    }
    Err(LiftError::ExhaustedSubstitutions)
}

/// The two voltages a cycle yields at a traversed double edge: the cycle's
/// own product, and the product with the parallel label swapped in at the
/// traversal position.
pub fn multidouble_voltages(
    q: &QuotientMultigraph,
    cycle: &Walk,
    de: &DoubleEdge,
) -> Result<(Element, Element, Walk), LiftError> {
    let position = find_traversal(q, cycle, de).ok_or(LiftError::DoubleEdgeNotOnCycle)?;
    let (pos, used, parallel) = position;
    debug_assert_eq!(cycle.labels[pos], used);
    let mut swapped_labels = cycle.labels.clone();
    swapped_labels[pos] = parallel;
    let swapped = Walk::new(cycle.start, swapped_labels);
    let v1 = voltage(q, cycle)?;
    let v2 = voltage(q, &swapped)?;
    Ok((v1, v2, swapped))
}

/// Lift through a traversed double edge of a prime-order (not necessarily
/// normal) subgroup quotient: of the two candidate voltages, at least one
/// generates, because their quotient is a nontrivial element of `H`.
pub fn multidouble_lift(
    q: &QuotientMultigraph,
    cycle: &Walk,
    de: &DoubleEdge,
) -> Result<HamCertificate, LiftError> {
    let g = q.group().clone();
    let h = q.subgroup();
    if !crate::algebra::is_prime(h.order() as u32) {
        return Err(LiftError::BadSubgroup("need a subgroup of prime order".to_string()));
    }
    let (v1, v2, swapped) = multidouble_voltages(q, cycle, de)?;
    let ratio = g.mul(&v1, &g.inv(&v2));
    assert!(
        ratio != g.identity() && h.contains(&ratio),
        "parallel labels must shift the voltage by a nontrivial element of H"
    );
    let chosen = if g.elem_order(&v1) == h.order() {
        cycle.clone()
    } else {
        debug_assert_eq!(g.elem_order(&v2), h.order(), "prime order: one candidate generates");
        swapped
    };
    let mut cert = fgl_lift(q, &chosen)?;
    cert.method = "multi-double".to_string();
    Ok(cert)
}

/// Locates a step of the cycle that traverses the double edge, in either
/// orientation. Returns (position, label used, parallel label).
fn find_traversal(
    q: &QuotientMultigraph,
    cycle: &Walk,
    de: &DoubleEdge,
) -> Option<(usize, Label, Label)> {
    let vs = trace(q, cycle)?;
    for (i, &l) in cycle.labels.iter().enumerate() {
        let (from, to) = (vs[i], vs[i + 1]);
        if from == de.source && to == de.target {
            if l == de.label_a {
                return Some((i, l, de.label_b));
            }
            if l == de.label_b {
                return Some((i, l, de.label_a));
            }
        }
        if from == de.target && to == de.source {
            if l == de.label_a.inverse() {
                return Some((i, l, de.label_b.inverse()));
            }
            if l == de.label_b.inverse() {
                return Some((i, l, de.label_a.inverse()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Group, GroupDescriptor, QFamily, Subgroup};
    use std::sync::Arc;

    // The 27-step cycle of the exponent-3 quotient with a = x, b = the
    // second generator; used here against S = {x, y, yw} where the y-edges
    // are all doubled by yw.
    fn exp3_cycle(b: i8) -> Vec<Label> {
        [
            1, 1, b, -1, -1, b, b, 1, 1, b, 1, 1, b, 1, b, b, -1, b, 1, 1, b, 1, -b, 1, 1, -b, -b,
        ]
        .iter()
        .map(|&v| Label::new(v).unwrap())
        .collect()
    }

    fn doubled_quotient() -> (Arc<Group>, QuotientMultigraph) {
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let yw = g.mul(&y, &g.gen_w());
        let q =
            QuotientMultigraph::build(g.clone(), vec![x, y, yw], Subgroup::sylow_p(&g)).unwrap();
        (g, q)
    }

    #[test]
    fn substitution_fixes_identity_voltage() {
        let (g, q) = doubled_quotient();
        // walking the y-labelled cycle gives voltage e; swapping one y for
        // yw makes it generate P
        let cycle = Walk::new(g.identity(), exp3_cycle(2));
        assert_eq!(voltage(&q, &cycle).unwrap(), g.identity());
        let cert = double_edge_lift(&q, &cycle, Label::gen(2), Label::gen(3)).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.labels.len(), 189);
        assert_eq!(cert.method, "double-edge");
    }

    #[test]
    fn zero_substitutions_when_voltage_generates() {
        let (g, q) = doubled_quotient();
        // the same cycle walked with yw directly already generates
        let cycle = Walk::new(g.identity(), exp3_cycle(3));
        let v = voltage(&q, &cycle).unwrap();
        assert_eq!(g.elem_order(&v), 7);
        let cert = double_edge_lift(&q, &cycle, Label::gen(3), Label::gen(2)).unwrap();
        assert!(cert.verified);
        let plain = fgl_lift(&q, &cycle).unwrap();
        assert_eq!(cert.labels, plain.labels);
    }

    #[test]
    fn missing_label_reported() {
        let (g, q) = doubled_quotient();
        let cycle = Walk::new(g.identity(), exp3_cycle(3));
        // the cycle never uses the bare-y label
        assert_eq!(
            double_edge_lift(&q, &cycle, Label::gen(2), Label::gen(3)),
            Err(LiftError::NoEdgeLabelled)
        );
    }

    #[test]
    fn incongruent_labels_rejected() {
        let (g, q) = doubled_quotient();
        let cycle = Walk::new(g.identity(), exp3_cycle(2));
        assert_eq!(
            double_edge_lift(&q, &cycle, Label::gen(2), Label::gen(1)),
            Err(LiftError::NotCongruent)
        );
    }

    #[test]
    fn multidouble_on_synthetic_double_edge() {
        let (g, q) = doubled_quotient();
        let cycle = Walk::new(g.identity(), exp3_cycle(2));
        let doubled = q.find_double_edges();
        assert!(!doubled.is_empty());
        let vs = trace(&q, &cycle).unwrap();
        let on_cycle = |d: &DoubleEdge| {
            (0..cycle.labels.len()).any(|i| {
                (vs[i] == d.source && vs[i + 1] == d.target)
                    || (vs[i] == d.target && vs[i + 1] == d.source)
            })
        };
        let used = doubled.iter().find(|d| on_cycle(d)).expect("cycle crosses a double edge");
        let cert = multidouble_lift(&q, &cycle, used).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.method, "multi-double");

        // candidate voltages differ by a nontrivial element of H
        let (v1, v2, _) = multidouble_voltages(&q, &cycle, used).unwrap();
        assert_ne!(v1, v2);
        let ratio = g.mul(&v1, &g.inv(&v2));
        assert!(q.subgroup().contains(&ratio));

        let unused = doubled.iter().find(|d| !on_cycle(d)).expect("some double edge is unused");
        assert_eq!(
            multidouble_lift(&q, &cycle, unused),
            Err(LiftError::DoubleEdgeNotOnCycle)
        );
    }
}
