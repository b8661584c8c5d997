//! Right-coset quotient multigraphs and double-edge detection.

use super::walk::{Label, VertexGraph};
use super::GraphError;
use crate::algebra::{Element, Group, Subgroup};
use std::sync::Arc;

/// The multigraph `H \ Cay(G;S)`: vertices are the right cosets `Hg`, and
/// each label `s ∈ S ∪ S^{-1}` carries the well-defined step `Hg -> Hgs`.
/// Two distinct labels with the same source and target form a double edge.
pub struct QuotientMultigraph {
    group: Arc<Group>,
    subgroup: Subgroup,
    genset: Vec<Element>,
    alphabet: Vec<Label>,
    /// Minimal element of each coset, sorted by element index.
    reps: Vec<Element>,
    coset_of: Vec<u32>,
    steps: Vec<Vec<u32>>,
}

/// A doubled coset pair, reported once per orientation; `label_a < label_b`
/// in slot order. Loops are not reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleEdge {
    pub source: usize,
    pub target: usize,
    pub label_a: Label,
    pub label_b: Label,
}

impl QuotientMultigraph {
    pub fn build(
        group: Arc<Group>,
        genset: Vec<Element>,
        subgroup: Subgroup,
    ) -> Result<QuotientMultigraph, GraphError> {
        if genset.is_empty() {
            return Err(GraphError::EmptyGenset);
        }
        let n = group.order();
        let h = subgroup.elements();
        // assign cosets: scan elements in index order so that coset ids are
        // sorted by their minimal member
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::with_capacity(n / h.len());
        for v in 0..n {
            if coset_of[v] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            let e = group.element_at(v);
            reps.push(e);
            for hh in h {
                coset_of[group.index_of(&group.mul(hh, &e))] = id;
            }
        }
        debug_assert_eq!(reps.len() * h.len(), n);

        let mut alphabet = Vec::new();
        let mut steps: Vec<Vec<u32>> = vec![Vec::new(); genset.len() * 2];
        for (k, s) in genset.iter().enumerate() {
            let inv = group.inv(s);
            let fwd = Label::gen(k + 1);
            alphabet.push(fwd);
            steps[fwd.slot()] = reps
                .iter()
                .map(|r| coset_of[group.index_of(&group.mul(r, s))])
                .collect();
            if inv != *s {
                let bwd = Label::gen_inv(k + 1);
                alphabet.push(bwd);
                steps[bwd.slot()] = reps
                    .iter()
                    .map(|r| coset_of[group.index_of(&group.mul(r, &inv))])
                    .collect();
            }
        }
        Ok(QuotientMultigraph { group, subgroup, genset, alphabet, reps, coset_of, steps })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn genset(&self) -> &[Element] {
        &self.genset
    }

    pub fn coset_count(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, e: &Element) -> Option<usize> {
        if self.group.contains(e) {
            Some(self.coset_of[self.group.index_of(e)] as usize)
        } else {
            None
        }
    }

    pub fn rep(&self, coset: usize) -> Element {
        self.reps[coset]
    }

    /// Element carried by a label.
    pub fn label_element(&self, l: Label) -> Option<Element> {
        let s = self.genset.get(l.generator() - 1)?;
        Some(if l.is_inverse() { self.group.inv(s) } else { *s })
    }

    /// All doubled coset pairs: for every ordered pair of cosets joined by
    /// at least two distinct labels, one record per unordered label pair.
    /// Sorted by (source, target, labels).
    pub fn find_double_edges(&self) -> Vec<DoubleEdge> {
        let mut out = Vec::new();
        for v in 0..self.coset_count() {
            for (i, &la) in self.alphabet.iter().enumerate() {
                let Some(ta) = self.step(v, la) else { continue };
                if ta == v {
                    continue; // loops are not usable edges of a cycle
                }
                for &lb in &self.alphabet[i + 1..] {
                    let Some(tb) = self.step(v, lb) else { continue };
                    if tb == ta {
                        out.push(DoubleEdge { source: v, target: ta, label_a: la, label_b: lb });
                    }
                }
            }
        }
        out.sort_by_key(|d| (d.source, d.target, d.label_a.slot(), d.label_b.slot()));
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.coset_count();
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop() {
            for &l in &self.alphabet {
                if let Some(t) = self.step(v, l) {
                    if !seen[t] {
                        seen[t] = true;
                        count += 1;
                        queue.push(t);
                    }
                }
            }
        }
        count == n
    }
}

impl VertexGraph for QuotientMultigraph {
    fn vertex_count(&self) -> usize {
        self.reps.len()
    }

    fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }

    fn step(&self, v: usize, l: Label) -> Option<usize> {
        if l.generator() == 0 || l.generator() > self.genset.len() {
            return None;
        }
        self.steps[l.slot()].get(v).map(|&t| t as usize)
    }

    fn vertex_key(&self, v: usize) -> String {
        self.group.element_key(&self.reps[v])
    }

    fn locate(&self, e: &Element) -> Option<usize> {
        self.coset_of(e)
    }

    fn vertex_element(&self, v: usize) -> Element {
        self.reps[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GroupDescriptor, QFamily};
    use crate::graph::walk::trace;
    use crate::graph::{CayleyGraph, Walk};

    fn z13() -> Arc<Group> {
        Arc::new(Group::build(GroupDescriptor::Z13OnE27).unwrap())
    }

    #[test]
    fn z13_cosets_are_keyed_by_vectors() {
        let g = z13();
        let w = g.gen_w();
        let v = g.gen_v().unwrap();
        let p = Subgroup::sylow_p(&g);
        assert_eq!(p.order(), 13);
        let q = QuotientMultigraph::build(g.clone(), vec![w, v], p).unwrap();
        assert_eq!(q.coset_count(), 27);
        // every representative has trivial w-power, and the coset of (t, u)
        // depends only on u
        for c in 0..27 {
            assert!(matches!(q.rep(c), Element::Z13 { t: 0, .. }));
        }
        let a = g.make_z13(5, [1, 2, 0]);
        let b = g.make_z13(9, [1, 2, 0]);
        assert_eq!(q.coset_of(&a), q.coset_of(&b));
    }

    #[test]
    fn whole_group_quotient_is_a_point() {
        let g = z13();
        let all = Subgroup::closure(&g, &[g.gen_w(), g.gen_v().unwrap()]);
        assert_eq!(all.order(), 351);
        let q = QuotientMultigraph::build(g.clone(), vec![g.gen_w()], all).unwrap();
        assert_eq!(q.coset_count(), 1);
        for &l in q.alphabet() {
            assert_eq!(q.step(0, l), Some(0));
        }
        assert!(q.find_double_edges().is_empty()); // loops are skipped
    }

    #[test]
    fn sylow_p_quotient_of_semidirect_looks_like_q() {
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let q = QuotientMultigraph::build(g.clone(), vec![x, yw], Subgroup::sylow_p(&g)).unwrap();
        assert_eq!(q.coset_count(), 27);
        assert!(q.is_connected());
        // no doubled pair: x and yw have independent images in Q
        assert!(q.find_double_edges().is_empty());
    }

    #[test]
    fn projection_of_walks_commutes() {
        // walking in the full graph and projecting matches walking in the
        // quotient with the same labels
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Mod27, 7, &[2, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let genset = vec![x, yw];
        let cay = CayleyGraph::build(g.clone(), genset.clone()).unwrap();
        let q =
            QuotientMultigraph::build(g.clone(), genset, Subgroup::sylow_p(&g)).unwrap();
        let labels: Vec<Label> = [1i8, -2, 1, 1, 2, -1, 2, 2, -1, -1]
            .iter()
            .map(|&v| Label::new(v).unwrap())
            .collect();
        let walk = Walk::new(g.identity(), labels);
        let full = trace(&cay, &walk).unwrap();
        let projected: Vec<usize> = full
            .iter()
            .map(|&v| q.coset_of(&g.element_at(v)).unwrap())
            .collect();
        let quotient = trace(&q, &walk).unwrap();
        assert_eq!(projected, quotient);
    }
}
