//! Graphviz output, drawn bottom-up with one rank row per level when the
//! structure is ranked.

use std::collections::BTreeMap;
use std::fmt::Write;

use dclat_core::graph::{Poset, Tag};
use dclat_core::paths::compute_rank;

use crate::dcp::Structure;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render<V: Tag, E: Tag>(p: &Poset<V, E>) -> String {
    let mut out = String::from("digraph dclat {\n  rankdir=BT;\n  node [shape=box];\n");
    for v in 0..p.len() {
        let label = match p.vertex_tag(v).color() {
            Some(c) => format!("{} ({})", escape(p.label(v)), c.0),
            None => escape(p.label(v)),
        };
        writeln!(out, "  n{v} [label=\"{label}\"];").unwrap();
    }
    if let Ok(rho) = compute_rank(p) {
        let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..p.len() {
            levels.entry(rho.of(v)).or_default().push(v);
        }
        for vs in levels.values() {
            let ids: Vec<String> = vs.iter().map(|v| format!("n{v};")).collect();
            writeln!(out, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
        }
    }
    let mut edges: Vec<_> = p.edges().map(|e| (e.lower, e.upper, e.tag.color())).collect();
    edges.sort_unstable();
    for (a, b, c) in edges {
        match c {
            Some(c) => writeln!(out, "  n{a} -> n{b} [label=\"{}\"];", c.0),
            None => writeln!(out, "  n{a} -> n{b};"),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn render_dot(s: &Structure) -> String {
    match s {
        Structure::Vertex(p) => render(p),
        Structure::Edge(p) => render(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::boolean;

    #[test]
    fn boolean_square() {
        let text = render_dot(&Structure::Edge(boolean(2, 1).unwrap()));
        let nodes = text.lines().filter(|l| l.contains("[label=\"{")).count();
        let edges = text
            .lines()
            .filter(|l| l.contains("->") && l.contains("label="))
            .count();
        assert_eq!((nodes, edges), (4, 4));
        assert_eq!(text.matches("rank=same").count(), 3);
        assert_eq!(text, render_dot(&Structure::Edge(boolean(2, 1).unwrap())));
    }
}
