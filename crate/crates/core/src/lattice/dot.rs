use std::fmt::Write;

use super::{ChainCover, DivisorPoset};

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// Graphviz source for the Hasse diagram, drawn bottom-up. With a chain
/// cover, nodes are colored by chain.
pub fn to_dot(poset: &DivisorPoset, chains: Option<&ChainCover>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph divisors_{} {{", poset.root());
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=circle];");
    for &x in poset.elements() {
        let color = chains.and_then(|c| {
            c.chains
                .iter()
                .position(|chain| chain.contains(&x))
                .map(|i| PALETTE[i % PALETTE.len()])
        });
        match color {
            Some(c) => {
                let _ = writeln!(out, "  n{x} [label=\"{x}\", color=\"{c}\", penwidth=2];");
            }
            None => {
                let _ = writeln!(out, "  n{x} [label=\"{x}\"];");
            }
        }
    }
    for &(x, y) in poset.hasse_edges() {
        let _ = writeln!(out, "  n{x} -> n{y};");
    }
    out.push_str("}\n");
    out
}
