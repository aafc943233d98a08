//! Lattice export: Graphviz DOT by conjugacy class, and JSON by node.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::lattice::SubgroupLattice;

/// One DOT node per conjugacy class labelled `order × class-size`, one
/// arrow per class pair joined by a maximal inclusion, labelled with the
/// index.
pub fn emit_dot(l: &SubgroupLattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
    for (c, members) in l.classes().iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{c} [label=\"{} × {}\"];",
            l.order(members[0]),
            members.len()
        );
    }
    let pairs: BTreeSet<(usize, usize, usize)> = l
        .edges()
        .iter()
        .map(|e| (l.class_of(e.sub), l.class_of(e.sup), e.index))
        .collect();
    for (a, b, index) in pairs {
        let _ = writeln!(out, "  c{a} -> c{b} [label=\"{index}\"];");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct NodeJson {
    id: usize,
    order: usize,
    class: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct ClassJson {
    id: usize,
    order: usize,
    size: usize,
    members: Vec<usize>,
}

#[derive(Serialize)]
struct LatticeJson {
    order: usize,
    degree: usize,
    nodes: Vec<NodeJson>,
    classes: Vec<ClassJson>,
    /// `[sub, sup, index]` for every maximal inclusion.
    edges: Vec<[usize; 3]>,
}

pub fn lattice_json(l: &SubgroupLattice) -> String {
    let doc = LatticeJson {
        order: l.order(l.top()),
        degree: l.group().degree(),
        nodes: (0..l.len())
            .map(|id| NodeJson {
                id,
                order: l.order(id),
                class: l.class_of(id),
                generators: l
                    .generator_perms(id)
                    .iter()
                    .map(|p| p.to_string())
                    .collect(),
            })
            .collect(),
        classes: l
            .classes()
            .iter()
            .enumerate()
            .map(|(id, m)| ClassJson {
                id,
                order: l.order(m[0]),
                size: m.len(),
                members: m.clone(),
            })
            .collect(),
        edges: l.edges().iter().map(|e| [e.sub, e.sup, e.index]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("lattice serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, lookup};

    #[test]
    fn s4_dot_has_one_node_per_class() {
        let l = SubgroupLattice::new(&build(&lookup("S4").unwrap()).unwrap()).unwrap();
        let dot = emit_dot(&l);
        assert_eq!(
            dot.matches("[label=\"").count() - dot.matches("->").count(),
            11
        );
        assert!(dot.contains("\"24 × 1\""));
        assert!(dot.contains("\"3 × 4\""));
        let json: serde_json::Value = serde_json::from_str(&lattice_json(&l)).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 30);
    }
}
