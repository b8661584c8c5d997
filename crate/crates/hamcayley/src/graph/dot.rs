//! Deterministic DOT export with optional walk overlay.

use super::walk::{trace, Label, VertexGraph, Walk};
use std::collections::HashSet;
use std::fmt::Write as _;

/// Renders the graph as undirected DOT text. Vertices appear in index
/// order, edges sorted by (source, label slot); parallel arcs come out as
/// separate lines. When a walk is given, its edges are highlighted, one
/// marked edge per step.
pub fn export_dot<G: VertexGraph + ?Sized>(g: &G, walk: Option<&Walk>) -> String {
    let mut marked: HashSet<(usize, usize, usize)> = HashSet::new();
    if let Some(w) = walk {
        if let Some(vs) = trace(g, w) {
            for (i, &l) in w.labels.iter().enumerate() {
                marked.insert(edge_id(vs[i], l, vs[i + 1]));
            }
        }
    }
    let mut out = String::from("graph cayley {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  \"{}\";", g.vertex_key(v));
    }
    for v in 0..g.vertex_count() {
        for &l in g.alphabet() {
            let Some(t) = g.step(v, l) else { continue };
            // each undirected edge once: from the smaller endpoint, and
            // loops only under the positive label
            let emit = if v < t {
                true
            } else if v == t {
                !l.is_inverse()
            } else {
                false
            };
            if !emit {
                continue;
            }
            let attr = if marked.contains(&edge_id(v, l, t)) {
                format!(" [label=\"{}\", color=red, penwidth=2]", l.name())
            } else {
                format!(" [label=\"{}\"]", l.name())
            };
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\"{};",
                g.vertex_key(v),
                g.vertex_key(t),
                attr
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Identity of an undirected labelled edge: oriented from its smaller
/// endpoint, with the label as seen from there.
fn edge_id(v: usize, l: Label, t: usize) -> (usize, usize, usize) {
    if v <= t {
        (v, t, l.slot())
    } else {
        (t, v, l.inverse().slot())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Group, GroupDescriptor, QFamily, Subgroup};
    use crate::graph::{CayleyGraph, QuotientMultigraph};
    use std::sync::Arc;

    #[test]
    fn quotient_dot_has_27_nodes_and_parallel_edges() {
        let g = Arc::new(Group::build(GroupDescriptor::Z13OnE27).unwrap());
        let w = g.gen_w();
        let v = g.gen_v().unwrap();
        let q = QuotientMultigraph::build(g.clone(), vec![w, v], Subgroup::sylow_p(&g)).unwrap();
        let dot = export_dot(&q, None);
        assert_eq!(dot.matches(";\n").count() - dot.matches(" -- ").count(), 27);
        // a doubled pair shows up as two lines with the same endpoints
        let doubled = q.find_double_edges();
        assert!(!doubled.is_empty());
        let d = doubled[0];
        let (a, b) = (q.vertex_key(d.source), q.vertex_key(d.target));
        let fwd = format!("\"{a}\" -- \"{b}\"");
        let rev = format!("\"{b}\" -- \"{a}\"");
        assert_eq!(dot.matches(&fwd).count() + dot.matches(&rev).count(), 2);
    }

    #[test]
    fn walk_overlay_marks_every_step() {
        let g = Arc::new(
            Group::build(GroupDescriptor::q_semidirect(QFamily::Heis27, 7, &[2, 1, 1])).unwrap(),
        );
        let x = g.q_gen("x").unwrap();
        let yw = g.mul(&g.q_gen("y").unwrap(), &g.gen_w());
        let cay = CayleyGraph::build(g.clone(), vec![x, yw]).unwrap();
        // not a hamiltonian cycle, but overlay marking applies to any walk
        let walk = crate::graph::Walk::new(
            g.identity(),
            vec![Label::gen(1), Label::gen(2), Label::gen_inv(1), Label::gen(2)],
        );
        let dot = export_dot(&cay, Some(&walk));
        assert_eq!(dot.matches("color=red").count(), walk.labels.len());
    }
}
