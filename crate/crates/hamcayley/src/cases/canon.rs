//! Exhaustive canonicalization checks: every 2-element generating set of a
//! catalogued group reduces, up to automorphism and inverses, to one of
//! the catalog's listed sets.

use super::{canonical_case, CaseError, CaseId};
use crate::algebra::{enumerate_gensets, genset_equivalent, Element, Group};
use rayon::prelude::*;
use std::sync::Arc;

/// Outcome of one canonicalization sweep.
#[derive(Debug, Clone)]
pub struct CanonReport {
    pub group_key: String,
    pub total_gensets: usize,
    /// How many generating sets matched each canonical set, catalog order.
    pub matched: Vec<usize>,
    /// Generating sets no canonical set is equivalent to. Empty unless the
    /// catalog is wrong at this prime.
    pub unmatched: Vec<Vec<Element>>,
}

impl CanonReport {
    pub fn is_complete(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// The catalogued canonical generating sets for each nonabelian semidirect
/// group, resolved at `(p, r)`.
fn canonical_sets(route_cases: &[CaseId], p: u32, r: u32) -> Result<(Arc<Group>, Vec<Vec<Element>>), CaseError> {
    let mut group = None;
    let mut sets = Vec::new();
    for &c in route_cases {
        let cc = canonical_case(c, p, r)?;
        sets.push(cc.genset.clone());
        group = Some(cc.group);
    }
    Ok((group.expect("at least one case"), sets))
}

/// Checks one catalogued nonabelian group: enumerates every 2-element
/// generating set and verifies each is automorphism-equivalent to a listed
/// canonical set.
pub fn canonicalization_check(
    route_cases: &[CaseId],
    p: u32,
    r: u32,
) -> Result<CanonReport, CaseError> {
    let (group, canon) = canonical_sets(route_cases, p, r)?;
    let gensets = enumerate_gensets(&group);
    let results: Vec<Option<usize>> = gensets
        .par_iter()
        .map(|pair| {
            let s: Vec<Element> = pair.to_vec();
            for (ci, cs) in canon.iter().enumerate() {
                if let Ok(Some(_)) = genset_equivalent(&group, &s, cs) {
                    return Some(ci);
                }
            }
            None
        })
        .collect();
    let mut matched = vec![0usize; canon.len()];
    let mut unmatched = Vec::new();
    for (pair, res) in gensets.iter().zip(&results) {
        match res {
            Some(ci) => matched[*ci] += 1,
            None => unmatched.push(pair.to_vec()),
        }
    }
    Ok(CanonReport {
        group_key: group.descriptor().key(),
        total_gensets: gensets.len(),
        matched,
        unmatched,
    })
}

/// Checks the order-351 shape reduction: every generating pair of the form
/// `{w^i, w^j v}` with `j != i` is automorphism-equivalent to one of the
/// seven catalogued `(i, j)` pairs.
///
/// Aligned pairs (`j = i`) sit inside a single coset of the normal
/// 3-subgroup; that property is automorphism-invariant, so they cannot
/// reduce to the catalog and are handled by the prime-power-subgroup
/// hypothesis instead.
pub fn z13_shape_check() -> Result<CanonReport, CaseError> {
    let canon: Vec<(Arc<Group>, Vec<Element>)> = super::Z13_PAIRS
        .iter()
        .map(|&(i, j)| {
            let cc = canonical_case(CaseId::Z13 { i, j }, 13, 3)?;
            Ok((cc.group, cc.genset))
        })
        .collect::<Result<_, CaseError>>()?;
    let group = canon[0].0.clone();
    let w = group.gen_w();
    let v = group.gen_v().expect("order-351 group");
    let shapes: Vec<(u8, u8, Vec<Element>)> = (1..13u8)
        .flat_map(|i| (0..13u8).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| {
            let a = group.pow(&w, i as i64);
            let b = group.mul(&group.pow(&w, j as i64), &v);
            (i, j, vec![a, b])
        })
        .collect();
    let results: Vec<Option<usize>> = shapes
        .par_iter()
        .map(|(_, _, s)| {
            for (ci, (_, cs)) in canon.iter().enumerate() {
                if let Ok(Some(_)) = genset_equivalent(&group, s, cs) {
                    return Some(ci);
                }
            }
            None
        })
        .collect();
    let mut matched = vec![0usize; canon.len()];
    let mut unmatched = Vec::new();
    for ((_, _, s), res) in shapes.iter().zip(&results) {
        match res {
            Some(ci) => matched[*ci] += 1,
            None => unmatched.push(s.clone()),
        }
    }
    Ok(CanonReport {
        group_key: group.descriptor().key(),
        total_gensets: shapes.len(),
        matched,
        unmatched,
    })
}

/// The three catalogued nonabelian groups with their case lists, used by
/// both the check driver and the acceptance suite.
pub fn catalogued_groups() -> [(&'static str, Vec<CaseId>); 3] {
    [
        ("exp3", vec![CaseId::Exp3a, CaseId::Exp3b]),
        ("exp9-no9", vec![CaseId::Exp9a, CaseId::Exp9b]),
        (
            "exp9-cent",
            vec![CaseId::Exp9c, CaseId::Exp9d, CaseId::Exp9e, CaseId::Exp9f],
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp3_gensets_all_reduce_at_p7() {
        let report =
            canonicalization_check(&[CaseId::Exp3a, CaseId::Exp3b], 7, 2).unwrap();
        assert!(report.is_complete(), "unmatched: {:?}", report.unmatched.len());
        assert!(report.total_gensets > 0);
        assert!(report.matched.iter().all(|&m| m > 0));
    }

    #[test]
    fn z13_shapes_reduce_to_seven() {
        let report = z13_shape_check().unwrap();
        assert!(report.is_complete());
        assert_eq!(report.total_gensets, 12 * 12);
        assert!(report.matched.iter().all(|&m| m > 0));
    }
}
