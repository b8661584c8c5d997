//! Declarative recipes for the supported group families.
//!
//! A descriptor either names one of the five groups of order 27 acting on
//! `Z_p` through per-generator units, or the fixed order-351 group in which
//! `Z_13` acts on `(Z_3)^3` by a companion matrix.

use super::group::is_prime;
use super::AlgebraError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};
use std::fmt;

/// Isomorphism type of the order-27 factor `Q` in a `Q ⋉ Z_p` group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QFamily {
    /// Cyclic `Z_27`.
    Z27,
    /// Abelian `Z_9 × Z_3`.
    Z9xZ3,
    /// Elementary abelian `(Z_3)^3`.
    E27,
    /// Nonabelian of exponent 3: `x^3 = y^3 = z^3 = e`, `[x,y] = z` central.
    Heis27,
    /// Nonabelian of exponent 9: `x^9 = y^3 = e`, `[x,y] = x^3`.
    Mod27,
}

impl QFamily {
    pub const ALL: [QFamily; 5] = [
        QFamily::Z27,
        QFamily::Z9xZ3,
        QFamily::E27,
        QFamily::Heis27,
        QFamily::Mod27,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            QFamily::Z27 => "z27",
            QFamily::Z9xZ3 => "z9xz3",
            QFamily::E27 => "e27",
            QFamily::Heis27 => "heis27",
            QFamily::Mod27 => "mod27",
        }
    }

    pub fn from_tag(tag: &str) -> Option<QFamily> {
        QFamily::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Named generators, in coordinate order.
    pub fn generator_names(self) -> &'static [&'static str] {
        match self {
            QFamily::Z27 => &["x"],
            QFamily::Z9xZ3 | QFamily::Mod27 => &["x", "y"],
            QFamily::E27 | QFamily::Heis27 => &["x", "y", "z"],
        }
    }

    /// Coordinate moduli of the normal form (unused slots are 1).
    pub(crate) fn dims(self) -> [u16; 3] {
        match self {
            QFamily::Z27 => [27, 1, 1],
            QFamily::Z9xZ3 => [9, 3, 1],
            QFamily::E27 | QFamily::Heis27 => [3, 3, 3],
            QFamily::Mod27 => [9, 3, 1],
        }
    }

    /// Exponent constraint per generator: a unit `u` assigned to generator
    /// `i` must satisfy `u^e ≡ 1 (mod p)` for the map to extend to a
    /// homomorphism `Q → Z_p^×`. Commutator relations force the stronger
    /// exponent for `Mod27`'s `x` (`α([x,y]) = α(x)^3 = 1`) and pin
    /// `Heis27`'s `z` to the trivial unit.
    pub(crate) fn action_constraints(self) -> &'static [u32] {
        match self {
            QFamily::Z27 => &[27],
            QFamily::Z9xZ3 => &[9, 3],
            QFamily::E27 => &[3, 3, 3],
            QFamily::Heis27 => &[3, 3, 1],
            QFamily::Mod27 => &[3, 3],
        }
    }

    pub fn is_abelian(self) -> bool {
        !matches!(self, QFamily::Heis27 | QFamily::Mod27)
    }
}

impl fmt::Display for QFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Recipe for one group of order `27p` (or 351).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupDescriptor {
    /// `G = Q ⋉ Z_p`, `Q` acting through the units `action[i]` assigned to
    /// the named generators of the family. Unused slots hold 1.
    QSemidirect {
        family: QFamily,
        p: u32,
        action: [u32; 3],
    },
    /// `G = Z_13 ⋉ (Z_3)^3`, the generator of `Z_13` acting by right
    /// multiplication with the companion matrix of `X^3 - X - 1`.
    Z13OnE27,
}

impl GroupDescriptor {
    pub fn q_semidirect(family: QFamily, p: u32, action: &[u32]) -> GroupDescriptor {
        let mut a = [1u32; 3];
        a[..action.len()].copy_from_slice(action);
        GroupDescriptor::QSemidirect { family, p, action: a }
    }

    /// Direct product `Q × Z_p` (every unit trivial).
    pub fn direct_product(family: QFamily, p: u32) -> GroupDescriptor {
        GroupDescriptor::QSemidirect { family, p, action: [1, 1, 1] }
    }

    pub fn order(&self) -> usize {
        match self {
            GroupDescriptor::QSemidirect { p, .. } => 27 * *p as usize,
            GroupDescriptor::Z13OnE27 => 351,
        }
    }

    pub fn p(&self) -> u32 {
        match self {
            GroupDescriptor::QSemidirect { p, .. } => *p,
            GroupDescriptor::Z13OnE27 => 13,
        }
    }

    /// Checks the descriptor invariants: `p` an odd prime at least 5, every
    /// unit nonzero mod `p`, and the unit assignment compatible with the
    /// relations of `Q`.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let GroupDescriptor::QSemidirect { family, p, action } = *self else {
            return Ok(());
        };
        if p < 5 || !is_prime(p) {
            return Err(AlgebraError::InvalidPrime(p));
        }
        let constraints = family.action_constraints();
        for (i, &e) in constraints.iter().enumerate() {
            let u = action[i];
            if u == 0 || u >= p {
                return Err(AlgebraError::InvalidAction(format!(
                    "unit {} for generator '{}' is out of range mod {}",
                    u,
                    family.generator_names()[i],
                    p
                )));
            }
            if modpow(u, e, p) != 1 {
                return Err(AlgebraError::InvalidAction(format!(
                    "unit {} for generator '{}' violates u^{} = 1 (mod {})",
                    u,
                    family.generator_names()[i],
                    e,
                    p
                )));
            }
        }
        for slot in constraints.len()..3 {
            if action[slot] != 1 {
                return Err(AlgebraError::InvalidAction(format!(
                    "family {} takes {} action units",
                    family,
                    constraints.len()
                )));
            }
        }
        Ok(())
    }

    pub fn is_trivial_action(&self) -> bool {
        match self {
            GroupDescriptor::QSemidirect { action, .. } => action.iter().all(|&u| u == 1),
            GroupDescriptor::Z13OnE27 => false,
        }
    }

    /// Stable short key, used for file names and report ordering.
    pub fn key(&self) -> String {
        match self {
            GroupDescriptor::QSemidirect { family, p, action } => {
                let units: Vec<String> = family
                    .generator_names()
                    .iter()
                    .enumerate()
                    .map(|(i, _)| action[i].to_string())
                    .collect();
                format!("{}-p{}-a{}", family.tag(), p, units.join("_"))
            }
            GroupDescriptor::Z13OnE27 => "z13e27".to_string(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            GroupDescriptor::QSemidirect { family, p, action } => {
                let mut act = Map::new();
                for (i, name) in family.generator_names().iter().enumerate() {
                    act.insert((*name).to_string(), json!(action[i]));
                }
                json!({ "family": family.tag(), "p": p, "action": Value::Object(act) })
            }
            GroupDescriptor::Z13OnE27 => json!({ "family": "z13e27" }),
        }
    }

    pub fn from_json(v: &Value) -> Result<GroupDescriptor, AlgebraError> {
        let bad = |msg: &str| AlgebraError::BadDescriptor(msg.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        let tag = obj
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing 'family'"))?;
        if tag == "z13e27" {
            return Ok(GroupDescriptor::Z13OnE27);
        }
        let family = QFamily::from_tag(tag)
            .ok_or_else(|| AlgebraError::BadDescriptor(format!("unknown family '{tag}'")))?;
        let p = obj
            .get("p")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing 'p'"))? as u32;
        let act = obj
            .get("action")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing 'action'"))?;
        let mut action = [1u32; 3];
        for (i, name) in family.generator_names().iter().enumerate() {
            action[i] = act
                .get(*name)
                .and_then(Value::as_u64)
                .ok_or_else(|| AlgebraError::BadDescriptor(format!("missing action for '{name}'")))?
                as u32;
        }
        if act.len() != family.generator_names().len() {
            return Err(bad("unexpected keys in 'action'"));
        }
        let d = GroupDescriptor::QSemidirect { family, p, action };
        d.validate()?;
        Ok(d)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl Serialize for GroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        GroupDescriptor::from_json(&v).map_err(D::Error::custom)
    }
}

pub(crate) fn modpow(b: u32, mut e: u32, m: u32) -> u32 {
    let mut acc: u64 = 1;
    let mut bb = b as u64 % m as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u64;
        }
        bb = bb * bb % m as u64;
        e >>= 1;
    }
    acc as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_must_respect_relations() {
        // exponent-3 constraint on Mod27's x comes from [x,y] = x^3
        let d = GroupDescriptor::q_semidirect(QFamily::Mod27, 19, &[7, 1]);
        assert!(d.validate().is_ok());
        // 2 has order 18 mod 19, not a cube root of 1
        let d = GroupDescriptor::q_semidirect(QFamily::Mod27, 19, &[2, 1]);
        assert!(matches!(d.validate(), Err(AlgebraError::InvalidAction(_))));
        // Heis27's z is central and must act trivially
        let d = GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 2]);
        assert!(matches!(d.validate(), Err(AlgebraError::InvalidAction(_))));
    }

    #[test]
    fn z9xz3_admits_order_9_action_when_available() {
        // 9 divides 18 = 19 - 1, so Z_9 x Z_3 can act with order 9 on Z_19
        let u = (2..19).find(|&u| modpow(u, 9, 19) == 1 && modpow(u, 3, 19) != 1).unwrap();
        let d = GroupDescriptor::q_semidirect(QFamily::Z9xZ3, 19, &[u, 1]);
        assert!(d.validate().is_ok());
    }

    #[test]
    fn rejects_bad_primes() {
        for p in [4u32, 9, 2, 3, 1] {
            let d = GroupDescriptor::direct_product(QFamily::E27, p);
            assert!(matches!(d.validate(), Err(AlgebraError::InvalidPrime(_))));
        }
    }

    #[test]
    fn json_round_trip() {
        let d = GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1]);
        let v = d.to_json();
        assert_eq!(
            v,
            serde_json::json!({"family":"heis27","p":7,"action":{"x":2,"y":1,"z":1}})
        );
        assert_eq!(GroupDescriptor::from_json(&v).unwrap(), d);
        let z = GroupDescriptor::Z13OnE27;
        assert_eq!(z.to_json(), serde_json::json!({"family":"z13e27"}));
        assert_eq!(GroupDescriptor::from_json(&z.to_json()).unwrap(), z);
    }
}
