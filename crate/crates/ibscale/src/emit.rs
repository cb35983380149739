//! Text emitters: DOT digraphs and ASCII trees for the IB hierarchy and
//! for baseline linkage trees.

use std::fmt::Write;

use crate::baselines::LinkageTree;
use crate::hierarchy::PartitionHierarchy;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT digraph of the hierarchy: one rank per cluster count, nodes
/// labeled with their item lists, parent links between adjacent levels.
pub fn hierarchy_dot(h: &PartitionHierarchy) -> String {
    let mut out = String::new();
    out.push_str("digraph ib_hierarchy {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box, fontsize=10];\n");
    for level in &h.levels {
        writeln!(out, "  {{ rank=same;").unwrap();
        for (c, members) in level.partition.members().iter().enumerate() {
            let label = format!("C{}(t={})\\n{}", c + 1, level.t, escape(&members.join(" ")));
            writeln!(out, "    t{}_c{} [label=\"{}\"];", level.t, c, label).unwrap();
        }
        out.push_str("  }\n");
    }
    for edge in &h.links {
        writeln!(
            out,
            "  t{}_c{} -> t{}_c{};",
            edge.parent_t, edge.parent_cluster, edge.child_t, edge.child_cluster
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// ASCII rendering of the hierarchy, one block per level with parent
/// annotations.
pub fn hierarchy_ascii(h: &PartitionHierarchy) -> String {
    let mut out = String::new();
    for level in &h.levels {
        writeln!(
            out,
            "t = {}  I(T;X) = {:.6}  I(T;Y) = {:.6}",
            level.t, level.info_tx, level.info_ty
        )
        .unwrap();
        for (c, members) in level.partition.members().iter().enumerate() {
            let parent = h
                .links
                .iter()
                .find(|e| e.child_t == level.t && e.child_cluster == c)
                .map(|e| format!("  <- C{}(t={})", e.parent_cluster + 1, e.parent_t))
                .unwrap_or_default();
            writeln!(out, "  C{}: {{{}}}{}", c + 1, members.join(", "), parent).unwrap();
        }
    }
    out
}

/// DOT digraph of a stepwise linkage tree, merge distances as edge
/// labels.
pub fn linkage_dot(tree: &LinkageTree) -> String {
    let n = tree.item_ids.len();
    let mut out = String::new();
    out.push_str("digraph linkage {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box, fontsize=10];\n");
    for (i, id) in tree.item_ids.iter().enumerate() {
        writeln!(out, "  n{} [label=\"{}\"];", i, escape(id)).unwrap();
    }
    for (step, m) in tree.merges.iter().enumerate() {
        let id = n + step;
        writeln!(out, "  n{} [label=\"d={:.4}\"];", id, m.distance).unwrap();
        writeln!(out, "  n{} -> n{};", m.cluster_a, id).unwrap();
        writeln!(out, "  n{} -> n{};", m.cluster_b, id).unwrap();
    }
    out.push_str("}\n");
    out
}

/// ASCII rendering of a linkage tree as its merge sequence.
pub fn linkage_ascii(tree: &LinkageTree) -> String {
    let n = tree.item_ids.len();
    let name = |id: usize| {
        if id < n {
            tree.item_ids[id].clone()
        } else {
            format!("#{}", id)
        }
    };
    let mut out = String::new();
    for (step, m) in tree.merges.iter().enumerate() {
        writeln!(
            out,
            "#{} = merge({}, {}) at distance {:.6}",
            n + step,
            name(m.cluster_a),
            name(m.cluster_b),
            m.distance
        )
        .unwrap();
    }
    out
}
