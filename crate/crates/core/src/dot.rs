//! Graphviz DOT emission. Write-only.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::digraph::ColoredDigraph;
use crate::poset::Poset;

const PALETTE: &[&str] = &[
    "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan",
];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram with one rank per level, drawn bottom to top.
pub fn poset_to_dot(p: &Poset, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=8];").unwrap();
    let levels = p.levels();
    let mut by_level: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, &l) in levels.iter().enumerate() {
        by_level.entry(l).or_default().push(i);
    }
    for (level, pts) in &by_level {
        let members: Vec<String> = pts.iter().map(|&i| quote(&p.points()[i])).collect();
        writeln!(out, "  {{ rank=same; /* level {level} */ {}; }}", members.join("; ")).unwrap();
    }
    for (x, y) in p.covers() {
        writeln!(out, "  {} -> {};", quote(x), quote(y)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Colored digraph; edge color `k` is drawn with a palette color and labeled.
pub fn digraph_to_dot(d: &ColoredDigraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for v in d.vertices() {
        writeln!(out, "  {};", quote(v)).unwrap();
    }
    for &(s, t, c) in d.edges() {
        let color = PALETTE[(c as usize - 1) % PALETTE.len()];
        writeln!(
            out,
            "  {} -> {} [color={color}, label=\"{c}\"];",
            quote(&d.vertices()[s]),
            quote(&d.vertices()[t])
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
