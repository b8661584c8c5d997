//! Subgroups by brute force: closures, structural subgroups, normality,
//! and Sylow counting.

use super::element::Element;
use super::group::Group;
use std::collections::HashSet;

/// A subgroup as a sorted element list. Construction goes through closure,
/// so the invariants (closed, contains the identity, order divides `|G|`)
/// hold by build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<Element>,
    normal: bool,
}

/// Structural subgroups computable from first principles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralKind {
    /// Commutator subgroup `[G,G]`.
    Derived,
    /// Center `Z(G)`.
    Center,
    /// Frattini subgroup of the Sylow 3-subgroup, computed as the closure
    /// of commutators and cubes (correct for 3-groups).
    FrattiniOfQ,
}

impl Subgroup {
    /// Smallest subgroup containing `seeds`.
    pub fn closure(g: &Group, seeds: &[Element]) -> Subgroup {
        let set = closure_indices(g, seeds.iter().map(|e| g.index_of(e)));
        Subgroup::from_index_set(g, &set)
    }

    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup::closure(g, &[])
    }

    fn from_index_set(g: &Group, set: &HashSet<usize>) -> Subgroup {
        let mut idx: Vec<usize> = set.iter().copied().collect();
        idx.sort_unstable();
        let elements: Vec<Element> = idx.into_iter().map(|i| g.element_at(i)).collect();
        let normal = check_normal(g, &elements);
        debug_assert_eq!(g.order() % elements.len(), 0);
        Subgroup { elements, normal }
    }

    /// Derived subgroup, center, or `Φ(Q)`.
    pub fn structural(g: &Group, kind: StructuralKind) -> Subgroup {
        match kind {
            StructuralKind::Derived => {
                let mut seeds = Vec::new();
                for a in g.elements() {
                    for b in g.elements() {
                        seeds.push(g.commutator(&a, &b));
                    }
                }
                seeds.sort_unstable();
                seeds.dedup();
                Subgroup::closure(g, &seeds)
            }
            StructuralKind::Center => {
                let all: Vec<Element> = g.elements().collect();
                let central: Vec<Element> = all
                    .iter()
                    .filter(|a| all.iter().all(|b| g.mul(a, b) == g.mul(b, a)))
                    .copied()
                    .collect();
                Subgroup::from_index_set(
                    g,
                    &central.iter().map(|e| g.index_of(e)).collect(),
                )
            }
            StructuralKind::FrattiniOfQ => {
                let q = Subgroup::sylow3(g);
                let mut seeds = Vec::new();
                for a in q.elements() {
                    seeds.push(g.pow(a, 3));
                    for b in q.elements() {
                        seeds.push(g.commutator(a, b));
                    }
                }
                seeds.sort_unstable();
                seeds.dedup();
                Subgroup::closure(g, &seeds)
            }
        }
    }

    /// The Sylow `p`-subgroup generated by `w`; normal exactly in the
    /// semidirect families.
    pub fn sylow_p(g: &Group) -> Subgroup {
        Subgroup::closure(g, &[g.gen_w()])
    }

    /// A Sylow 3-subgroup: the `Q` coordinate plane.
    pub fn sylow3(g: &Group) -> Subgroup {
        let elems: Vec<Element> = g
            .elements()
            .filter(|e| match e {
                Element::Qp { m, .. } => *m == 0,
                Element::Z13 { t, .. } => *t == 0,
            })
            .collect();
        debug_assert_eq!(elems.len(), 27);
        Subgroup::from_index_set(g, &elems.iter().map(|e| g.index_of(e)).collect())
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// True when some single element generates the whole subgroup.
    pub fn is_cyclic(&self, g: &Group) -> bool {
        self.elements.iter().any(|e| g.elem_order(e) == self.order())
    }

    pub fn conjugate_by(&self, g: &Group, by: &Element) -> Subgroup {
        let set: HashSet<usize> = self
            .elements
            .iter()
            .map(|h| g.index_of(&g.conjugate(h, by)))
            .collect();
        Subgroup::from_index_set(g, &set)
    }

    /// Smallest normal subgroup containing this one.
    pub fn normal_closure(&self, g: &Group) -> Subgroup {
        let mut set: HashSet<usize> = self.elements.iter().map(|e| g.index_of(e)).collect();
        loop {
            let mut new = Vec::new();
            for &hi in &set {
                let h = g.element_at(hi);
                for b in g.elements() {
                    let c = g.index_of(&g.conjugate(&h, &b));
                    if !set.contains(&c) {
                        new.push(c);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set = closure_indices(g, set.iter().copied().chain(new));
        }
        Subgroup::from_index_set(g, &set)
    }
}

fn closure_indices(g: &Group, seeds: impl Iterator<Item = usize>) -> HashSet<usize> {
    let seed_elems: Vec<Element> = {
        let mut s: Vec<usize> = seeds.collect();
        s.sort_unstable();
        s.dedup();
        s.into_iter().map(|i| g.element_at(i)).collect()
    };
    let mut set = HashSet::new();
    set.insert(g.index_of(&g.identity()));
    let mut queue = vec![g.identity()];
    while let Some(cur) = queue.pop() {
        for s in &seed_elems {
            let nxt = g.mul(&cur, s);
            if set.insert(g.index_of(&nxt)) {
                queue.push(nxt);
            }
        }
    }
    set
}

fn check_normal(g: &Group, elements: &[Element]) -> bool {
    elements.iter().all(|h| {
        g.elements()
            .all(|b| elements.binary_search(&g.conjugate(h, &b)).is_ok())
    })
}

/// Number of Sylow `q`-subgroups, counted as distinct conjugates of one
/// directly constructed Sylow subgroup.
pub fn sylow_count(g: &Group, q: u32) -> usize {
    let base = if q == 3 {
        Subgroup::sylow3(g)
    } else {
        assert_eq!(q, g.p(), "q must divide |G| = 27p");
        Subgroup::sylow_p(g)
    };
    let mut seen: HashSet<Vec<Element>> = HashSet::new();
    for b in g.elements() {
        let conj = base.conjugate_by(g, &b);
        seen.insert(conj.elements().to_vec());
    }
    seen.len()
}

impl Group {
    pub fn subgroup_closure(&self, seeds: &[Element]) -> Subgroup {
        Subgroup::closure(self, seeds)
    }

    pub fn structural_subgroup(&self, kind: StructuralKind) -> Subgroup {
        Subgroup::structural(self, kind)
    }

    pub fn sylow_count(&self, q: u32) -> usize {
        sylow_count(self, q)
    }
}

#[cfg(test)]
mod tests {
    use super::super::descriptor::{GroupDescriptor, QFamily};
    use super::*;

    fn heis7() -> Group {
        Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap()
    }

    #[test]
    fn closures() {
        let g = heis7();
        assert_eq!(Subgroup::closure(&g, &[g.gen_w()]).order(), 7);
        let z = g.q_gen("z").unwrap();
        let gp = Subgroup::closure(&g, &[z, g.gen_w()]);
        assert_eq!(gp.order(), 21);
        assert_eq!(Subgroup::trivial(&g).order(), 1);
        // that closure is exactly the derived subgroup here
        assert_eq!(gp, Subgroup::structural(&g, StructuralKind::Derived));
    }

    #[test]
    fn structural_subgroups() {
        let g = heis7();
        let derived = Subgroup::structural(&g, StructuralKind::Derived);
        assert_eq!(derived.order(), 21);
        assert!(derived.is_cyclic(&g));
        let center = Subgroup::structural(&g, StructuralKind::Center);
        assert_eq!(center.order(), 3);
        assert!(center.contains(&g.q_gen("z").unwrap()));
        let frat = Subgroup::structural(&g, StructuralKind::FrattiniOfQ);
        assert_eq!(frat.order(), 3);
        assert_eq!(frat, center);

        // trivial action on the elementary abelian family: abelian G
        let e = Group::build(GroupDescriptor::direct_product(QFamily::E27, 7)).unwrap();
        assert_eq!(Subgroup::structural(&e, StructuralKind::Derived).order(), 1);
    }

    #[test]
    fn normality_and_sylow() {
        let g = heis7();
        let p = Subgroup::sylow_p(&g);
        assert!(p.is_normal());
        assert_eq!(sylow_count(&g, 7), 1);
        assert_eq!(sylow_count(&g, 3), 7);

        let z = Group::build(GroupDescriptor::Z13OnE27).unwrap();
        let pz = Subgroup::sylow_p(&z);
        assert_eq!(pz.order(), 13);
        assert!(!pz.is_normal());
        assert_eq!(sylow_count(&z, 13), 27);
        assert_eq!(sylow_count(&z, 3), 1);
    }

    #[test]
    fn derived_matches_independent_construction() {
        // closure of Q' and the (action - 1) image of P
        for units in [[2u32, 1, 1], [4, 1, 1]] {
            let g = Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &units))
                .unwrap();
            let mut seeds = vec![g.q_gen("z").unwrap()];
            for u in units {
                seeds.push(g.make_qp([0, 0, 0], u as i64 - 1));
            }
            let expect = Subgroup::closure(&g, &seeds);
            assert_eq!(Subgroup::structural(&g, StructuralKind::Derived), expect);
            assert_eq!(expect.order(), 21);
        }
    }

    #[test]
    fn normal_closure_grows() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let h = Subgroup::closure(&g, &[x]);
        assert!(!h.is_normal());
        let nc = h.normal_closure(&g);
        assert!(nc.is_normal());
        assert!(nc.order() > h.order());
    }
}
