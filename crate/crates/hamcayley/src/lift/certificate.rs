//! Self-contained hamiltonicity certificates.
//!
//! A certificate carries everything a verifier needs: the group recipe, the
//! generating set, the claim (full-graph or quotient cycle), the start
//! vertex, and the label sequence. Replay rebuilds the graph from scratch
//! and runs the walk verifier; nothing is trusted from the producer.

use crate::algebra::{Element, Group, GroupDescriptor, Subgroup};
use crate::graph::{verify_hamiltonian, CayleyGraph, HamVerdict, Label, QuotientMultigraph, Walk};
use serde_json::{json, Value};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertClaim {
    /// Hamiltonian cycle in the full Cayley graph.
    Full,
    /// Hamiltonian cycle in the right-coset multigraph of the subgroup
    /// generated by the listed elements.
    Quotient { subgroup_gens: Vec<Element> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCertificate {
    pub group: GroupDescriptor,
    pub genset: Vec<Element>,
    pub claim: CertClaim,
    pub start: Element,
    pub labels: Vec<Label>,
    pub method: String,
    /// True only after a successful replay in this process; never
    /// serialized.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("replay failed at verification: {0}")]
    Failed(HamVerdict),
}

impl HamCertificate {
    pub fn to_json(&self) -> Value {
        let genset: Vec<Value> = self.genset.iter().map(|e| e.to_json(&self.group)).collect();
        let mut obj = json!({
            "group": self.group.to_json(),
            "genset": genset,
            "claim": match self.claim { CertClaim::Full => "full", CertClaim::Quotient { .. } => "quotient" },
            "start": self.start.to_json(&self.group),
            "labels": self.labels.iter().map(|l| l.value()).collect::<Vec<i8>>(),
            "method": self.method,
        });
        if let CertClaim::Quotient { subgroup_gens } = &self.claim {
            let gens: Vec<Value> = subgroup_gens.iter().map(|e| e.to_json(&self.group)).collect();
            obj.as_object_mut()
                .unwrap()
                .insert("subgroup".to_string(), Value::Array(gens));
        }
        obj
    }

    pub fn from_json(v: &Value) -> Result<HamCertificate, ReplayError> {
        let bad = |m: String| ReplayError::Malformed(m);
        let obj = v.as_object().ok_or_else(|| bad("expected an object".into()))?;
        let group = GroupDescriptor::from_json(
            obj.get("group").ok_or_else(|| bad("missing 'group'".into()))?,
        )
        .map_err(|e| bad(e.to_string()))?;
        let parse_elems = |key: &str| -> Result<Vec<Element>, ReplayError> {
            obj.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(format!("missing '{key}'")))?
                .iter()
                .map(|e| Element::from_json(&group, e).map_err(|e| bad(e.to_string())))
                .collect()
        };
        let genset = parse_elems("genset")?;
        let claim = match obj.get("claim").and_then(Value::as_str) {
            Some("full") => CertClaim::Full,
            Some("quotient") => CertClaim::Quotient { subgroup_gens: parse_elems("subgroup")? },
            _ => return Err(bad("claim must be 'full' or 'quotient'".into())),
        };
        let start = Element::from_json(
            &group,
            obj.get("start").ok_or_else(|| bad("missing 'start'".into()))?,
        )
        .map_err(|e| bad(e.to_string()))?;
        let labels = obj
            .get("labels")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing 'labels'".into()))?
            .iter()
            .map(|l| {
                let raw = l
                    .as_i64()
                    .filter(|v| (-127..=127).contains(v))
                    .ok_or_else(|| bad("label out of range".into()))?;
                Label::new(raw as i8).map_err(|e| bad(e.to_string()))
            })
            .collect::<Result<Vec<Label>, ReplayError>>()?;
        let method = obj
            .get("method")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing 'method'".into()))?
            .to_string();
        Ok(HamCertificate { group, genset, claim, start, labels, method, verified: false })
    }

    /// Rebuilds the graph named by the claim and replays the walk. On
    /// success the certificate is returned with `verified = true`.
    pub fn replay(&self) -> Result<HamCertificate, ReplayError> {
        let group = Arc::new(
            Group::build(self.group.clone()).map_err(|e| ReplayError::Malformed(e.to_string()))?,
        );
        for e in self.genset.iter().chain([&self.start]) {
            if !group.contains(e) {
                return Err(ReplayError::Malformed("element outside the group".into()));
            }
        }
        let walk = Walk::new(self.start, self.labels.clone());
        let verdict = match &self.claim {
            CertClaim::Full => {
                let cay = CayleyGraph::build(group, self.genset.clone())
                    .map_err(|e| ReplayError::Malformed(e.to_string()))?;
                verify_hamiltonian(&cay, &walk)
            }
            CertClaim::Quotient { subgroup_gens } => {
                for e in subgroup_gens {
                    if !group.contains(e) {
                        return Err(ReplayError::Malformed("subgroup element outside the group".into()));
                    }
                }
                let h = Subgroup::closure(&group, subgroup_gens);
                let q = QuotientMultigraph::build(group, self.genset.clone(), h)
                    .map_err(|e| ReplayError::Malformed(e.to_string()))?;
                verify_hamiltonian(&q, &walk)
            }
        };
        match verdict {
            HamVerdict::Ok => Ok(HamCertificate { verified: true, ..self.clone() }),
            bad => Err(ReplayError::Failed(bad)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QFamily;
    use crate::graph::Label;

    #[test]
    fn json_round_trip_keeps_fields() {
        let group = GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1]);
        let g = Group::build(group.clone()).unwrap();
        let cert = HamCertificate {
            group,
            genset: vec![g.q_gen("x").unwrap(), g.q_gen("y").unwrap()],
            claim: CertClaim::Quotient { subgroup_gens: vec![g.gen_w()] },
            start: g.identity(),
            labels: vec![Label::gen(1), Label::gen_inv(2)],
            method: "search".to_string(),
            verified: true,
        };
        let v = cert.to_json();
        assert!(v.get("verified").is_none()); // runtime flag is not persisted
        let back = HamCertificate::from_json(&v).unwrap();
        assert!(!back.verified);
        assert_eq!(back.genset, cert.genset);
        assert_eq!(back.claim, cert.claim);
        assert_eq!(back.labels, cert.labels);
    }

    #[test]
    fn malformed_rejected() {
        assert!(HamCertificate::from_json(&json!({"claim": "full"})).is_err());
        assert!(HamCertificate::from_json(&json!(42)).is_err());
    }
}
