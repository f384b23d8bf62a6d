//! Graphviz rendering of the upper levels of the weighted tree.

use std::fmt::Write;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::tree::SsstNode;

/// Default limit on `m^max_level`, the width of the deepest rendered level.
pub const DEFAULT_NODE_CAP: u64 = 4096;

/// Renders levels `0..=max_level` as a DOT digraph with the default cap.
pub fn to_dot(instance: &Instance, max_level: usize) -> Result<String> {
    to_dot_with_cap(instance, max_level, DEFAULT_NODE_CAP)
}

/// Renders levels `0..=max_level` as a DOT digraph.
///
/// Nodes are numbered `N0, N1, ...` breadth first. Each label lists the
/// configuration tuples `J_i/M_j` (`ε` for unplaced jobs) followed by the
/// load tuples `M_j/l_j`; edges are labelled with the arc `J_i -> M_j`.
/// Fails with [`Error::TooLarge`] when `m^max_level` exceeds `cap`.
pub fn to_dot_with_cap(instance: &Instance, max_level: usize, cap: u64) -> Result<String> {
    let n = instance.job_count();
    if max_level > n {
        return Err(Error::DomainError(format!(
            "max level {max_level} exceeds the tree height {n}"
        )));
    }
    let width = BigUint::from(instance.machine_count()).pow(max_level as u32);
    if width > BigUint::from(cap) {
        return Err(Error::TooLarge {
            requested: width.to_string(),
            cap,
        });
    }

    let mut out = String::new();
    out.push_str("digraph ssst {\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");

    let mut next_id = 0usize;
    let mut level: Vec<(usize, SsstNode)> = vec![(0, SsstNode::root(instance))];
    write_node(&mut out, 0, &level[0].1, n);
    next_id += 1;
    for _ in 0..max_level {
        let mut below = Vec::with_capacity(level.len() * instance.machine_count() as usize);
        for (parent_id, parent) in &level {
            for child in parent.children(instance)? {
                let id = next_id;
                next_id += 1;
                write_node(&mut out, id, &child, n);
                let job = child.level();
                let machine = child.assignment_prefix()[job - 1];
                writeln!(
                    out,
                    "  N{parent_id} -> N{id} [label=\"J{job} -> M{machine}\"];"
                )
                .expect("writing to a String");
                below.push((id, child));
            }
        }
        level = below;
    }
    out.push_str("}\n");
    Ok(out)
}

fn write_node(out: &mut String, id: usize, node: &SsstNode, n: usize) {
    let prefix = node.assignment_prefix();
    let config: Vec<String> = (0..n)
        .map(|i| match prefix.get(i) {
            Some(m) => format!("J{}/M{}", i + 1, m),
            None => format!("J{}/ε", i + 1),
        })
        .collect();
    let loads: Vec<String> = node
        .load_vector()
        .iter()
        .enumerate()
        .map(|(j, l)| format!("M{}/{}", j + 1, l))
        .collect();
    writeln!(
        out,
        "  N{id} [label=\"N{id}\\n{}\\n{}\"];",
        config.join(", "),
        loads.join(", ")
    )
    .expect("writing to a String");
}
