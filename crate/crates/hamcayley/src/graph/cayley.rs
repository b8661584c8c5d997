//! The Cayley graph `Cay(G;S)` on dense element indices.

use super::walk::{Label, VertexGraph};
use super::GraphError;
use crate::algebra::{Element, Group};
use std::sync::Arc;

/// `Cay(G;S)`: vertices are the group elements, the step along `+k` is
/// right multiplication by `s_k`, along `-k` by its inverse. Regular of
/// degree `|S ∪ S^{-1}|`; connected exactly when `S` generates.
pub struct CayleyGraph {
    group: Arc<Group>,
    genset: Vec<Element>,
    alphabet: Vec<Label>,
    /// `steps[slot][v]`; a slot collapsed by an involution stays empty.
    steps: Vec<Vec<u32>>,
    component_sizes: Vec<usize>,
}

impl CayleyGraph {
    pub fn build(group: Arc<Group>, genset: Vec<Element>) -> Result<CayleyGraph, GraphError> {
        if genset.is_empty() {
            return Err(GraphError::EmptyGenset);
        }
        if genset.iter().any(|s| *s == group.identity()) {
            return Err(GraphError::IdentityGenerator);
        }
        let n = group.order();
        let mut alphabet = Vec::new();
        let mut steps: Vec<Vec<u32>> = vec![Vec::new(); genset.len() * 2];
        for (k, s) in genset.iter().enumerate() {
            let inv = group.inv(s);
            let fwd = Label::gen(k + 1);
            alphabet.push(fwd);
            steps[fwd.slot()] = (0..n)
                .map(|v| group.index_of(&group.mul(&group.element_at(v), s)) as u32)
                .collect();
            if inv != *s {
                let bwd = Label::gen_inv(k + 1);
                alphabet.push(bwd);
                steps[bwd.slot()] = (0..n)
                    .map(|v| group.index_of(&group.mul(&group.element_at(v), &inv)) as u32)
                    .collect();
            }
        }
        let component_sizes = components(n, &steps);
        Ok(CayleyGraph { group, genset, alphabet, steps, component_sizes })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn genset(&self) -> &[Element] {
        &self.genset
    }

    pub fn degree(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_sizes.len() == 1
    }

    /// Sizes of the connected components, in discovery order from the
    /// lowest-index unvisited vertex.
    pub fn component_sizes(&self) -> &[usize] {
        &self.component_sizes
    }

    /// The group element sitting at a vertex.
    pub fn element_of(&self, v: usize) -> Element {
        self.group.element_at(v)
    }

    /// Element carried by a label.
    pub fn label_element(&self, l: Label) -> Option<Element> {
        let s = self.genset.get(l.generator() - 1)?;
        Some(if l.is_inverse() { self.group.inv(s) } else { *s })
    }
}

impl VertexGraph for CayleyGraph {
    fn vertex_count(&self) -> usize {
        self.group.order()
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
        self.group.element_key(&self.group.element_at(v))
    }

    fn locate(&self, e: &Element) -> Option<usize> {
        if self.group.contains(e) {
            Some(self.group.index_of(e))
        } else {
            None
        }
    }

    fn vertex_element(&self, v: usize) -> Element {
        self.group.element_at(v)
    }
}

/// Component sizes by repeated BFS over the step tables.
fn components(n: usize, steps: &[Vec<u32>]) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for v0 in 0..n {
        if seen[v0] {
            continue;
        }
        let mut queue = vec![v0];
        seen[v0] = true;
        let mut size = 0usize;
        while let Some(v) = queue.pop() {
            size += 1;
            for table in steps {
                if table.is_empty() {
                    continue;
                }
                let t = table[v] as usize;
                if !seen[t] {
                    seen[t] = true;
                    queue.push(t);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{GroupDescriptor, QFamily};
    use crate::graph::walk::{verify_hamiltonian, HamVerdict, Walk};

    fn heis7() -> Arc<Group> {
        Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        )
    }

    #[test]
    fn canonical_graph_shape() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let cay = CayleyGraph::build(g.clone(), vec![x, yw]).unwrap();
        assert_eq!(cay.vertex_count(), 189);
        assert_eq!(cay.degree(), 4);
        assert!(cay.is_connected());
    }

    #[test]
    fn single_generator_components() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let cay = CayleyGraph::build(g, vec![x]).unwrap();
        assert!(!cay.is_connected());
        assert_eq!(cay.component_sizes().len(), 63);
        assert!(cay.component_sizes().iter().all(|&s| s == 3));
    }

    #[test]
    fn identity_generator_rejected() {
        let g = heis7();
        let id = g.identity();
        assert_eq!(
            CayleyGraph::build(g, vec![id]).err(),
            Some(GraphError::IdentityGenerator)
        );
    }

    #[test]
    fn degree_regularity() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let cay = CayleyGraph::build(g, vec![x, yw]).unwrap();
        for v in 0..cay.vertex_count() {
            let deg = cay
                .alphabet()
                .iter()
                .filter(|&&l| cay.step(v, l).is_some())
                .count();
            assert_eq!(deg, cay.degree());
        }
    }

    #[test]
    fn short_walk_is_wrong_length() {
        let g = heis7();
        let x = g.q_gen("x").unwrap();
        let y = g.q_gen("y").unwrap();
        let cay = CayleyGraph::build(g.clone(), vec![x, y]).unwrap();
        let walk = Walk::new(g.identity(), vec![Label::gen(1); 3]);
        assert!(matches!(
            verify_hamiltonian(&cay, &walk),
            HamVerdict::WrongLength { actual: 3, .. }
        ));
    }
}
