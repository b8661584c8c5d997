//! Closed forms for the voltage exponents of the catalogued cycles.
//!
//! For the exponent-9 pattern the voltage is `w_i^m` with `m` a polynomial
//! in the conjugation units `(r1, r2)` of the two bound labels; the two
//! general forms below cover the `a`-in-`Q` and `b`-in-`Q` situations, and
//! each catalogued case simplifies to a short per-case expression under
//! `r^2 + r + 1 = 0`.

use super::CaseId;
use crate::algebra::AlgebraError;

fn md(v: i64, p: u32) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// General form when the first bound label lies in `Q` (its `P`-part is
/// trivial): `m = -r1^2 r2 - r1^2 + 2 r1 r2 + 2 r1 - r2 - 1`.
pub fn e1_general(r1: u32, r2: u32, p: u32) -> u32 {
    let (r1, r2) = (r1 as i64, r2 as i64);
    md(-r1 * r1 * r2 - r1 * r1 + 2 * r1 * r2 + 2 * r1 - r2 - 1, p)
}

/// `m` from `e1_general` when `r2 = 1`: simplifies to `6 r1`.
pub fn e1a(r1: u32, p: u32) -> u32 {
    md(6 * r1 as i64, p)
}

/// `m` from `e1_general` when both units are nontrivial: `3 r1 (r2 + 1)`.
pub fn e1b(r1: u32, r2: u32, p: u32) -> u32 {
    md(3 * r1 as i64 * (r2 as i64 + 1), p)
}

/// General form when the second bound label lies in `Q`:
/// `m = 2 r1^2 r2^2 + 3 r1 r2^2 + r2^2 + r1^2 r2 + r1 r2 + r2 - r1 + 1`.
pub fn e2_general(r1: u32, r2: u32, p: u32) -> u32 {
    let (r1, r2) = (r1 as i64, r2 as i64);
    md(
        2 * r1 * r1 * r2 * r2
            + 3 * r1 * r2 * r2
            + r2 * r2
            + r1 * r1 * r2
            + r1 * r2
            + r2
            - r1
            + 1,
        p,
    )
}

/// `m` from `e2_general` when `r1 = 1`: simplifies to `-3 (r2 + 2)`.
pub fn e2a(r2: u32, p: u32) -> u32 {
    md(-3 * (r2 as i64 + 2), p)
}

/// `m` from `e2_general` when both units are nontrivial:
/// `-r1 r2 - 2 r1 + r2 + 2`.
pub fn e2b(r1: u32, r2: u32, p: u32) -> u32 {
    let (r1, r2) = (r1 as i64, r2 as i64);
    md(-r1 * r2 - 2 * r1 + r2 + 2, p)
}

/// The voltage exponent of the catalogued cycle for a case, given the
/// primitive cube root `r` chosen for the group's action.
pub fn endpoint_closed_form(case: CaseId, r: u32, p: u32) -> Result<u32, AlgebraError> {
    if case.is_z13() {
        return Err(AlgebraError::BadDescriptor(
            "the order-351 cases have no (r, p) closed form".to_string(),
        ));
    }
    let ok = crate::algebra::find_primitive_cube_roots(p)
        .map(|(r1, r2)| r == r1 || r == r2)
        .unwrap_or(false);
    if !ok {
        return Err(AlgebraError::BadDescriptor(format!(
            "r = {r} is not a primitive cube root mod {p}"
        )));
    }
    let r64 = r as i64;
    Ok(match case {
        CaseId::Exp3a => md(3 * r64, p),
        CaseId::Exp3b => md(3 * (3 * r64 + 2), p),
        CaseId::Exp9a => md(6 * r64, p),
        CaseId::Exp9b => md(3 * (r64 + 1), p),
        CaseId::Exp9c => md(-3 * (r64 + 2), p),
        CaseId::Exp9d => 3 % p,
        CaseId::Exp9e => md(3 * (r64 - 1), p),
        CaseId::Exp9f => md(-3, p),
        CaseId::Z13 { .. } => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::find_primitive_cube_roots;

    #[test]
    fn subcase_simplifications_match_general_forms() {
        for p in [7u32, 13, 19, 31] {
            let (r1, r2) = find_primitive_cube_roots(p).unwrap();
            for r in [r1, r2] {
                let rr = (r as u64 * r as u64 % p as u64) as u32;
                assert_eq!(e1_general(r, 1, p), e1a(r, p));
                assert_eq!(e1_general(r, rr, p), e1b(r, rr, p));
                assert_eq!(e1_general(r, r, p), e1b(r, r, p));
                assert_eq!(e2_general(1, r, p), e2a(r, p));
                assert_eq!(e2_general(r, r, p), e2b(r, r, p));
                assert_eq!(e2_general(1, rr, p), e2a(rr, p));
            }
        }
    }

    #[test]
    fn frozen_values() {
        assert_eq!(endpoint_closed_form(CaseId::Exp3a, 2, 7).unwrap(), 6);
        assert_eq!(endpoint_closed_form(CaseId::Exp9d, 2, 7).unwrap(), 3);
        assert_eq!(endpoint_closed_form(CaseId::Exp9f, 3, 13).unwrap(), 10);
        // the one catalogued zero: 3(3r+2) at r = 4, p = 7
        assert_eq!(endpoint_closed_form(CaseId::Exp3b, 4, 7).unwrap(), 0);
        assert_ne!(endpoint_closed_form(CaseId::Exp3b, 2, 7).unwrap(), 0);
    }

    #[test]
    fn z13_has_no_closed_form() {
        assert!(endpoint_closed_form(CaseId::Z13 { i: 1, j: 0 }, 2, 7).is_err());
        assert!(endpoint_closed_form(CaseId::Exp3a, 3, 7).is_err());
    }
}
