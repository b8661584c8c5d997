//! Normal-form coordinates of a group element.

use super::descriptor::GroupDescriptor;
use super::AlgebraError;
use serde_json::{json, Value};

/// A group element in canonical coordinates.
///
/// `Qp` is the normal form of a `Q ⋉ Z_p` element: exponents of the family
/// generators (unused slots zero) plus a residue mod `p`. `Z13` is a power
/// of the order-13 generator plus a vector over `F_3`. All components are
/// kept reduced; the identity is the all-zeros form, and the derived `Ord`
/// agrees with the enumeration order of the owning group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Qp { q: [u8; 3], m: u16 },
    Z13 { t: u8, v: [u8; 3] },
}

impl Element {
    pub fn is_qp(&self) -> bool {
        matches!(self, Element::Qp { .. })
    }

    /// JSON form. The `q` array is truncated to the family's arity, so the
    /// same element prints as `{"q":[i],"m":m}` for `Z_27` payloads and
    /// `{"q":[i,j,k],"m":m}` for the three-generator families.
    pub fn to_json(&self, desc: &GroupDescriptor) -> Value {
        match (self, desc) {
            (Element::Qp { q, m }, GroupDescriptor::QSemidirect { family, .. }) => {
                let arity = family.generator_names().len();
                let coords: Vec<u64> = q[..arity].iter().map(|&c| c as u64).collect();
                json!({ "q": coords, "m": m })
            }
            (Element::Z13 { t, v }, GroupDescriptor::Z13OnE27) => {
                json!({ "t": t, "v": [v[0], v[1], v[2]] })
            }
            _ => panic!("element serialized against a descriptor of the wrong family"),
        }
    }

    pub fn from_json(desc: &GroupDescriptor, v: &Value) -> Result<Element, AlgebraError> {
        let bad = |msg: String| AlgebraError::BadElement(msg);
        let obj = v
            .as_object()
            .ok_or_else(|| bad("expected an object".into()))?;
        match desc {
            GroupDescriptor::QSemidirect { family, p, .. } => {
                let coords = obj
                    .get("q")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing 'q'".into()))?;
                let arity = family.generator_names().len();
                if coords.len() != arity {
                    return Err(bad(format!(
                        "family {} takes {} coordinates, got {}",
                        family,
                        arity,
                        coords.len()
                    )));
                }
                let dims = family.dims();
                let mut q = [0u8; 3];
                for (i, c) in coords.iter().enumerate() {
                    let c = c.as_u64().ok_or_else(|| bad("non-integer coordinate".into()))?;
                    if c >= dims[i] as u64 {
                        return Err(bad(format!("coordinate {c} out of range {}", dims[i])));
                    }
                    q[i] = c as u8;
                }
                let m = obj
                    .get("m")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| bad("missing 'm'".into()))?;
                if m >= *p as u64 {
                    return Err(bad(format!("residue {m} out of range mod {p}")));
                }
                Ok(Element::Qp { q, m: m as u16 })
            }
            GroupDescriptor::Z13OnE27 => {
                let t = obj
                    .get("t")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| bad("missing 't'".into()))?;
                if t >= 13 {
                    return Err(bad(format!("power {t} out of range mod 13")));
                }
                let vec = obj
                    .get("v")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("missing 'v'".into()))?;
                if vec.len() != 3 {
                    return Err(bad("'v' must have three components".into()));
                }
                let mut out = [0u8; 3];
                for (i, c) in vec.iter().enumerate() {
                    let c = c.as_u64().ok_or_else(|| bad("non-integer component".into()))?;
                    if c >= 3 {
                        return Err(bad(format!("component {c} out of range mod 3")));
                    }
                    out[i] = c as u8;
                }
                Ok(Element::Z13 { t: t as u8, v: out })
            }
        }
    }
}

/// Shared by vertex keys and DOT export: a compact, deterministic text key.
pub(crate) fn element_key(desc: &GroupDescriptor, e: &Element) -> String {
    match (e, desc) {
        (Element::Qp { q, m }, GroupDescriptor::QSemidirect { family, .. }) => {
            let arity = family.generator_names().len();
            let coords: Vec<String> = q[..arity].iter().map(|c| c.to_string()).collect();
            format!("{};{}", coords.join(","), m)
        }
        (Element::Z13 { t, v }, GroupDescriptor::Z13OnE27) => {
            format!("{};{}{}{}", t, v[0], v[1], v[2])
        }
        _ => panic!("element keyed against a descriptor of the wrong family"),
    }
}

/// Arity-checked constructor used by deserialization paths.
pub(crate) fn check_shape(desc: &GroupDescriptor, e: &Element) -> Result<(), AlgebraError> {
    match (e, desc) {
        (Element::Qp { q, m }, GroupDescriptor::QSemidirect { family, p, .. }) => {
            let dims = family.dims();
            for i in 0..3 {
                if q[i] as u16 >= dims[i] {
                    return Err(AlgebraError::FamilyMismatch);
                }
            }
            if *m as u32 >= *p {
                return Err(AlgebraError::FamilyMismatch);
            }
            Ok(())
        }
        (Element::Z13 { t, v }, GroupDescriptor::Z13OnE27) => {
            if *t >= 13 || v.iter().any(|&c| c >= 3) {
                return Err(AlgebraError::FamilyMismatch);
            }
            Ok(())
        }
        _ => Err(AlgebraError::FamilyMismatch),
    }
}
