//! Graphviz export.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::plane::{Edge, PlaneGraph};

/// Undirected DOT text; `bold` edges are drawn thick (e.g. a forcing set).
pub fn to_dot(g: &PlaneGraph, name: &str, bold: &[Edge]) -> String {
    let bold: BTreeSet<Edge> = bold.iter().copied().collect();
    let mut s = String::new();
    writeln!(s, "graph \"{name}\" {{").unwrap();
    writeln!(s, "  node [shape=circle, width=0.2, label=\"\"];").unwrap();
    for v in 0..g.order() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        if bold.contains(&(u, v)) {
            writeln!(s, "  {u} -- {v} [penwidth=3];").unwrap();
        } else {
            writeln!(s, "  {u} -- {v};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
