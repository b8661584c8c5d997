//! The case engine: canonical groups and generating sets, catalogued
//! quotient cycles, endpoint checks, classification, and the sweep.

mod canon;
mod classify;
mod endpoint;
mod f3;
mod listings;
mod pattern;
mod sweep;

pub use canon::{canonicalization_check, catalogued_groups, z13_shape_check, CanonReport};
pub use classify::{classify, Route, RouteDecision};
pub use endpoint::{e1_general, e1a, e1b, e2_general, e2a, e2b, endpoint_closed_form};
pub use f3::{cubic_factors, minimal_polynomial, verify_f3_identities, F3Error, F3Report, Poly3};
pub use listings::{Z13Listing, EXP3A_COSETS, EXP3A_LABELS, EXP3B_PATTERN, HC3_COSETS, HC9_COSETS, HC_PATTERN, Z13_LISTINGS};
pub use pattern::{PatItem, PatSym, Pattern, PatternError};
pub use sweep::{theorem_sweep, CertSink, SweepEntry, SweepOptions, SweepReport};

use crate::algebra::{
    find_primitive_cube_roots, Element, Group, GroupDescriptor, QFamily, Subgroup,
};
use crate::graph::{verify_hamiltonian, HamVerdict, Label, QuotientMultigraph, Walk};
use crate::lift::{fgl_lift, multidouble_lift, voltage, HamCertificate, LiftError};
use std::sync::Arc;
use thiserror::Error;

/// Identifier of one catalogued case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    Exp3a,
    Exp3b,
    Exp9a,
    Exp9b,
    Exp9c,
    Exp9d,
    Exp9e,
    Exp9f,
    Z13 { i: u8, j: u8 },
}

/// The seven admissible `(i, j)` pairs of the order-351 catalog.
pub const Z13_PAIRS: [(u8, u8); 7] = [(1, 0), (2, 0), (1, 2), (1, 3), (1, 5), (1, 6), (2, 5)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error(transparent)]
    Lift(#[from] LiftError),
    #[error("quotient cycle failed verification: {0}")]
    CycleBroken(HamVerdict),
}

impl CaseId {
    pub fn all() -> Vec<CaseId> {
        let mut out = vec![
            CaseId::Exp3a,
            CaseId::Exp3b,
            CaseId::Exp9a,
            CaseId::Exp9b,
            CaseId::Exp9c,
            CaseId::Exp9d,
            CaseId::Exp9e,
            CaseId::Exp9f,
        ];
        out.extend(Z13_PAIRS.iter().map(|&(i, j)| CaseId::Z13 { i, j }));
        out
    }

    pub fn semidirect_cases() -> [CaseId; 8] {
        [
            CaseId::Exp3a,
            CaseId::Exp3b,
            CaseId::Exp9a,
            CaseId::Exp9b,
            CaseId::Exp9c,
            CaseId::Exp9d,
            CaseId::Exp9e,
            CaseId::Exp9f,
        ]
    }

    pub fn is_z13(self) -> bool {
        matches!(self, CaseId::Z13 { .. })
    }

    pub fn name(self) -> String {
        match self {
            CaseId::Exp3a => "exp3a".to_string(),
            CaseId::Exp3b => "exp3b".to_string(),
            CaseId::Exp9a => "exp9a".to_string(),
            CaseId::Exp9b => "exp9b".to_string(),
            CaseId::Exp9c => "exp9c".to_string(),
            CaseId::Exp9d => "exp9d".to_string(),
            CaseId::Exp9e => "exp9e".to_string(),
            CaseId::Exp9f => "exp9f".to_string(),
            CaseId::Z13 { i, j } => format!("z13:{i},{j}"),
        }
    }

    pub fn parse(text: &str) -> Option<CaseId> {
        let t = text.to_ascii_lowercase();
        for c in CaseId::semidirect_cases() {
            if c.name() == t {
                return Some(c);
            }
        }
        let rest = t.strip_prefix("z13:")?;
        let (i, j) = rest.split_once(',')?;
        let (i, j) = (i.trim().parse().ok()?, j.trim().parse().ok()?);
        if Z13_PAIRS.contains(&(i, j)) {
            Some(CaseId::Z13 { i, j })
        } else {
            None
        }
    }
}

/// A fully resolved case: the group, the generating set in catalog order,
/// and the two bound labels the cycle data refers to.
pub struct CanonicalCase {
    pub case: CaseId,
    pub group: Arc<Group>,
    pub genset: Vec<Element>,
    pub a: Element,
    pub b: Element,
    pub a_label: Label,
    pub b_label: Label,
}

/// Builds the exact group and generating set of a catalogued case.
///
/// For the semidirect cases `r` must be a primitive cube root mod `p`; the
/// group is built with that root as its action unit. The order-351 cases
/// ignore both parameters.
pub fn canonical_case(case: CaseId, p: u32, r: u32) -> Result<CanonicalCase, CaseError> {
    if case.is_z13() {
        return canonical_z13(case);
    }
    validate_semidirect_p(p)?;
    let (r1, r2) = find_primitive_cube_roots(p).map_err(|e| CaseError::BadParameters(e.to_string()))?;
    if r != r1 && r != r2 {
        return Err(CaseError::BadParameters(format!(
            "r = {r} is not a primitive cube root mod {p}"
        )));
    }
    let desc = match case {
        CaseId::Exp3a | CaseId::Exp3b => {
            GroupDescriptor::q_semidirect(QFamily::Heis27, p, &[r, 1, 1])
        }
        CaseId::Exp9a | CaseId::Exp9b => GroupDescriptor::q_semidirect(QFamily::Mod27, p, &[r, 1]),
        _ => GroupDescriptor::q_semidirect(QFamily::Mod27, p, &[1, r]),
    };
    let group = Arc::new(Group::build(desc).map_err(|e| CaseError::BadParameters(e.to_string()))?);
    let g = &group;
    let x = g.q_gen("x").expect("semidirect families name x");
    let y = g.q_gen("y").expect("semidirect families name y");
    let w = g.gen_w();
    let xy = g.mul(&x, &y);
    let (genset, a_label, b_label) = match case {
        // the second element of S is the catalog's b (or its inverse)
        CaseId::Exp3a | CaseId::Exp9a => {
            (vec![x, g.mul(&y, &w)], Label::gen(1), Label::gen(2))
        }
        CaseId::Exp3b => (vec![x, g.mul(&xy, &w)], Label::gen(1), Label::gen(2)),
        CaseId::Exp9b => (vec![x, g.mul(&xy, &w)], Label::gen(1), Label::gen_inv(2)),
        CaseId::Exp9c => (vec![g.mul(&x, &w), y], Label::gen(1), Label::gen(2)),
        CaseId::Exp9d => (vec![g.mul(&xy, &w), y], Label::gen(1), Label::gen(2)),
        CaseId::Exp9e => (vec![xy, g.mul(&x, &w)], Label::gen(2), Label::gen_inv(1)),
        CaseId::Exp9f => {
            let x2yw = g.mul(&g.mul(&g.pow(&x, 2), &y), &w);
            (vec![xy, x2yw], Label::gen(1), Label::gen(2))
        }
        CaseId::Z13 { .. } => unreachable!(),
    };
    let a = label_element(g, &genset, a_label);
    let b = label_element(g, &genset, b_label);
    Ok(CanonicalCase { case, group: group.clone(), genset, a, b, a_label, b_label })
}

fn canonical_z13(case: CaseId) -> Result<CanonicalCase, CaseError> {
    let CaseId::Z13 { i, j } = case else { unreachable!() };
    let group = Arc::new(Group::build(GroupDescriptor::Z13OnE27).expect("fixed descriptor"));
    let g = &group;
    let w = g.gen_w();
    let v = g.gen_v().expect("order-351 group");
    let a = g.pow(&w, i as i64);
    let b = g.mul(&g.pow(&w, j as i64), &v);
    Ok(CanonicalCase {
        case,
        group: group.clone(),
        genset: vec![a, b],
        a,
        b,
        a_label: Label::gen(1),
        b_label: Label::gen(2),
    })
}

fn label_element(g: &Group, genset: &[Element], l: Label) -> Element {
    let s = genset[l.generator() - 1];
    if l.is_inverse() {
        g.inv(&s)
    } else {
        s
    }
}

fn validate_semidirect_p(p: u32) -> Result<(), CaseError> {
    if !crate::algebra::is_prime(p) || p < 7 || p % 3 != 1 {
        return Err(CaseError::BadParameters(format!(
            "p = {p} must be a prime = 1 (mod 3), at least 7"
        )));
    }
    Ok(())
}

/// The catalogued quotient cycle of a case, as a walk from the identity
/// coset.
pub fn paper_quotient_cycle(cc: &CanonicalCase) -> Walk {
    let labels: Vec<Label> = match cc.case {
        CaseId::Exp3a => EXP3A_LABELS
            .iter()
            .map(|&v| bind_symbol(v, cc.a_label, cc.b_label))
            .collect(),
        CaseId::Exp3b => Pattern::parse(EXP3B_PATTERN)
            .expect("catalog pattern parses")
            .expand(cc.a_label, cc.b_label)
            .expect("catalog pattern expands"),
        CaseId::Z13 { .. } => {
            let l = z13_listing(cc.case);
            l.labels.iter().map(|&v| bind_symbol(v, cc.a_label, cc.b_label)).collect()
        }
        _ => Pattern::parse(HC_PATTERN)
            .expect("catalog pattern parses")
            .expand(cc.a_label, cc.b_label)
            .expect("catalog pattern expands"),
    };
    Walk::new(cc.group.identity(), labels)
}

/// Maps a listing symbol (`±1 = a`, `±2 = b`) to the case's labels.
fn bind_symbol(sym: i8, a: Label, b: Label) -> Label {
    let base = if sym.unsigned_abs() == 1 { a } else { b };
    if sym < 0 {
        base.inverse()
    } else {
        base
    }
}

pub fn z13_listing(case: CaseId) -> &'static Z13Listing {
    let CaseId::Z13 { i, j } = case else { panic!("not an order-351 case") };
    Z13_LISTINGS
        .iter()
        .find(|l| l.i == i && l.j == j)
        .expect("catalogued pair")
}

/// Order and conjugation preconditions of the compressed cycle, checked in
/// the quotient `G/P`.
fn check_hc_preconditions(cc: &CanonicalCase) -> Result<(), CaseError> {
    let g = &cc.group;
    let (a, b) = (cc.a, cc.b);
    let fail = |m: &str| Err(CaseError::BadParameters(format!("cycle precondition: {m}")));
    match cc.case {
        CaseId::Exp9a | CaseId::Exp9c | CaseId::Exp9d => {
            if g.q_order(&a) != 9 || g.q_order(&b) != 3 {
                return fail("need |a| = 9, |b| = 3 in the quotient");
            }
            if !g.q_eq(&g.conjugate(&a, &b), &g.pow(&a, 4)) {
                return fail("need a^b = a^4 in the quotient");
            }
        }
        CaseId::Exp9b | CaseId::Exp9e | CaseId::Exp9f => {
            if g.q_order(&a) != 9 || g.q_order(&b) != 9 {
                return fail("need |a| = |b| = 9 in the quotient");
            }
            if !g.q_eq(&g.conjugate(&a, &b), &g.pow(&a, 7)) {
                return fail("need a^b = a^7 in the quotient");
            }
            if !g.q_eq(&g.pow(&b, 3), &g.pow(&a, 6)) {
                return fail("need b^3 = a^6 in the quotient");
            }
        }
        _ => {}
    }
    Ok(())
}

/// Runs one catalogued case end to end: builds the group (choosing the
/// cube root that makes the endpoint nonzero), verifies the quotient
/// cycle, checks the voltage against the closed form, and lifts to a
/// verified full-graph certificate.
pub fn run_case(case: CaseId, p: u32) -> Result<HamCertificate, CaseError> {
    if case.is_z13() {
        return run_z13_case(case);
    }
    validate_semidirect_p(p)?;
    let (r1, r2) =
        find_primitive_cube_roots(p).map_err(|e| CaseError::BadParameters(e.to_string()))?;
    let r = [r1, r2]
        .into_iter()
        .find(|&r| endpoint_closed_form(case, r, p).expect("semidirect case") != 0)
        .expect("at most one root can zero the endpoint");
    let cc = canonical_case(case, p, r)?;
    check_hc_preconditions(&cc)?;
    let g = &cc.group;
    let cycle = paper_quotient_cycle(&cc);
    let q = QuotientMultigraph::build(g.clone(), cc.genset.clone(), Subgroup::sylow_p(g))
        .expect("nonempty genset");
    match verify_hamiltonian(&q, &cycle) {
        HamVerdict::Ok => {}
        bad => return Err(CaseError::CycleBroken(bad)),
    }
    let volt = voltage(&q, &cycle)?;
    let want = endpoint_closed_form(case, r, p).expect("semidirect case");
    let got = g.pow(&g.gen_w(), want as i64);
    assert_eq!(volt, got, "numeric voltage must equal the closed form");
    let mut cert = fgl_lift(&q, &cycle)?;
    cert.method = case.name();
    Ok(cert)
}

fn run_z13_case(case: CaseId) -> Result<HamCertificate, CaseError> {
    let cc = canonical_case(case, 13, 3)?;
    let g = &cc.group;
    let cycle = paper_quotient_cycle(&cc);
    let q = QuotientMultigraph::build(g.clone(), cc.genset.clone(), Subgroup::sylow_p(g))
        .expect("nonempty genset");
    match verify_hamiltonian(&q, &cycle) {
        HamVerdict::Ok => {}
        bad => return Err(CaseError::CycleBroken(bad)),
    }
    let listing = z13_listing(case);
    let src = q
        .coset_of(&g.make_z13(0, [
            listing.double_source.0 as i64,
            listing.double_source.1 as i64,
            listing.double_source.2 as i64,
        ]))
        .expect("vector vertex");
    let dst = q
        .coset_of(&g.make_z13(0, [
            listing.double_target.0 as i64,
            listing.double_target.1 as i64,
            listing.double_target.2 as i64,
        ]))
        .expect("vector vertex");
    let (la, lb) = listing.double_labels;
    let de = crate::graph::DoubleEdge {
        source: src,
        target: dst,
        label_a: bind_symbol(la, cc.a_label, cc.b_label),
        label_b: bind_symbol(lb, cc.a_label, cc.b_label),
    };
    // both claimed parallel labels must actually carry source -> target
    for l in [de.label_a, de.label_b] {
        assert_eq!(
            crate::graph::VertexGraph::step(&q, src, l),
            Some(dst),
            "claimed double edge must be doubled"
        );
    }
    let mut cert = multidouble_lift(&q, &cycle, &de)?;
    cert.method = case.name();
    Ok(cert)
}
