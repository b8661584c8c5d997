//! Voltages of closed quotient walks and the cycle lift through a cyclic
//! fiber.

use super::certificate::{CertClaim, HamCertificate};
use super::LiftError;
use crate::algebra::{Element, Group, Subgroup};
use crate::graph::{verify_hamiltonian, CayleyGraph, HamVerdict, QuotientMultigraph, Walk};
use std::sync::Arc;

/// The product `s_1 s_2 ... s_n` of the walk's labels as a group element.
///
/// Requires the walk to start at the subgroup's own coset and to close
/// there, which is exactly the condition for the product to land in `H`.
pub fn voltage(q: &QuotientMultigraph, walk: &Walk) -> Result<Element, LiftError> {
    let g = q.group();
    let h_coset = q.coset_of(&g.identity()).expect("identity is always a vertex");
    if q.coset_of(&walk.start) != Some(h_coset) {
        return Err(LiftError::StartOutsideSubgroup);
    }
    let mut acc = g.identity();
    for &l in &walk.labels {
        let s = q.label_element(l).ok_or(LiftError::UnknownLabel(l.value()))?;
        acc = g.mul(&acc, &s);
    }
    if !q.subgroup().contains(&acc) {
        return Err(LiftError::NotClosed);
    }
    Ok(acc)
}

/// Lifts a hamiltonian cycle of the `H`-quotient to the full Cayley graph
/// by repeating its label sequence `|H|` times.
///
/// `H` does not have to be normal: with right cosets, the lifted walk
/// visits `v^k · p_i` over all prefixes `p_i` and `0 <= k < |H|`, which is
/// all of `G` exactly when the voltage `v` generates `H`. The lift is
/// re-verified against the full graph before the certificate is issued.
pub fn fgl_lift(q: &QuotientMultigraph, cycle: &Walk) -> Result<HamCertificate, LiftError> {
    match verify_hamiltonian(q, cycle) {
        HamVerdict::Ok => {}
        bad => return Err(LiftError::QuotientNotHamiltonian(bad)),
    }
    let g = q.group().clone();
    let v = voltage(q, cycle)?;
    let h = q.subgroup();
    if g.elem_order(&v) != h.order() {
        return Err(LiftError::VoltageDoesNotGenerate);
    }
    let mut labels = Vec::with_capacity(cycle.labels.len() * h.order());
    for _ in 0..h.order() {
        labels.extend_from_slice(&cycle.labels);
    }
    let cay = CayleyGraph::build(Arc::clone(&g), q.genset().to_vec())
        .map_err(|e| LiftError::BadGenset(e.to_string()))?;
    let walk = Walk::new(g.identity(), labels);
    let verdict = verify_hamiltonian(&cay, &walk);
    assert!(
        verdict.is_ok(),
        "generating voltage must lift to a hamiltonian cycle, got {verdict}"
    );
    Ok(HamCertificate {
        group: g.descriptor().clone(),
        genset: q.genset().to_vec(),
        claim: CertClaim::Full,
        start: walk.start,
        labels: walk.labels,
        method: "fgl".to_string(),
        verified: true,
    })
}

/// Quotient cycle verified and wrapped as a certificate; used when the
/// quotient walk itself is the deliverable.
pub fn quotient_certificate(
    q: &QuotientMultigraph,
    cycle: &Walk,
    method: &str,
) -> Result<HamCertificate, LiftError> {
    match verify_hamiltonian(q, cycle) {
        HamVerdict::Ok => {}
        bad => return Err(LiftError::QuotientNotHamiltonian(bad)),
    }
    let g = q.group();
    let gens = pick_subgroup_generators(g, q.subgroup());
    Ok(HamCertificate {
        group: g.descriptor().clone(),
        genset: q.genset().to_vec(),
        claim: CertClaim::Quotient { subgroup_gens: gens },
        start: q.rep(q.coset_of(&cycle.start).expect("verified walk has a located start")),
        labels: cycle.labels.clone(),
        method: method.to_string(),
        verified: true,
    })
}

/// A small generating list for a subgroup: greedy closure growth.
pub(crate) fn pick_subgroup_generators(g: &Group, h: &Subgroup) -> Vec<Element> {
    let mut gens: Vec<Element> = Vec::new();
    let mut have = Subgroup::closure(g, &gens);
    for e in h.elements() {
        if have.order() == h.order() {
            break;
        }
        if !have.contains(e) {
            gens.push(*e);
            have = Subgroup::closure(g, &gens);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GroupDescriptor, QFamily};
    use crate::graph::Label;

    /// Boustrophedon cycle on the 27-coset quotient of `Z_9 x Z_3 x Z_7`:
    /// the block (y, y, x) repeated nine times covers every coset and
    /// multiplies out to x^9 y^18 = e.
    fn snake_labels() -> Vec<Label> {
        let mut l = Vec::new();
        for _ in 0..9 {
            l.push(Label::gen(2));
            l.push(Label::gen(2));
            l.push(Label::gen(1));
        }
        l
    }

    #[test]
    fn identity_voltage_cannot_lift() {
        let g = Arc::new(
            Group::build(GroupDescriptor::direct_product(QFamily::Z9xZ3, 7)).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let q = QuotientMultigraph::build(g.clone(), vec![x, y], Subgroup::sylow_p(&g)).unwrap();
        let cycle = Walk::new(g.identity(), snake_labels());
        assert!(verify_hamiltonian(&q, &cycle).is_ok());
        assert_eq!(voltage(&q, &cycle).unwrap(), g.identity());
        assert_eq!(fgl_lift(&q, &cycle), Err(LiftError::VoltageDoesNotGenerate));
    }

    #[test]
    fn nontrivial_voltage_lifts_and_verifies() {
        // same snake, but the y-generator now carries w, so the voltage is
        // w^18 = w^4 != e (trivial action keeps the bookkeeping simple)
        let g = Arc::new(
            Group::build(GroupDescriptor::direct_product(QFamily::Z9xZ3, 7)).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let q = QuotientMultigraph::build(g.clone(), vec![x, yw], Subgroup::sylow_p(&g)).unwrap();
        let cycle = Walk::new(g.identity(), snake_labels());
        let v = voltage(&q, &cycle).unwrap();
        assert_eq!(v, g.make_qp([0, 0, 0], 4));
        let cert = fgl_lift(&q, &cycle).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.labels.len(), 189);
        assert!(cert.replay().is_ok());
    }

    #[test]
    fn trivial_closed_walk_has_identity_voltage() {
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let q = QuotientMultigraph::build(g.clone(), vec![x, yw], Subgroup::sylow_p(&g)).unwrap();
        let walk = Walk::new(g.identity(), vec![Label::gen(1), Label::gen_inv(1)]);
        assert_eq!(voltage(&q, &walk).unwrap(), g.identity());
    }

    #[test]
    fn open_walk_rejected() {
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let q = QuotientMultigraph::build(g.clone(), vec![x, yw], Subgroup::sylow_p(&g)).unwrap();
        let walk = Walk::new(g.identity(), vec![Label::gen(1)]);
        assert_eq!(voltage(&q, &walk), Err(LiftError::NotClosed));
        let off = Walk::new(x, vec![Label::gen(1)]);
        assert_eq!(voltage(&q, &off), Err(LiftError::StartOutsideSubgroup));
    }
}
