//! Graphviz output for the centralizer/center Hasse diagram and the
//! centralizer graph.

use std::fmt::Write;

use crate::atlas::CentralizerAtlas;
use crate::cgraph::CentralizerGraph;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Two-tier Hasse diagram: every centralizer in 𝒞(G) on the top rank, and
/// on the bottom rank the minimal centers together with any center that is
/// not itself a centralizer. A minimal center that is also a centralizer is
/// therefore drawn on both ranks. Edges are the covering pairs of the
/// containment order, where a bottom node sits below a top node holding the
/// same set.
pub fn hasse(atlas: &CentralizerAtlas) -> String {
    let g = atlas.group();
    let mut sets = Vec::new();
    let mut names = Vec::new();
    let mut labels = Vec::new();
    let mut top = Vec::new();
    for e in atlas.entries() {
        top.push(true);
        sets.push(e.centralizer.members().clone());
        names.push(format!("c{}", e.id));
        labels.push(format!(
            "C({}) |C|={}",
            g.label(e.representative),
            e.centralizer.order()
        ));
    }
    let minimal = atlas.minimal_center_ids();
    for e in atlas.entries() {
        let is_centralizer = atlas.entries().iter().any(|f| f.centralizer == e.center);
        if is_centralizer && !minimal.contains(&e.id) {
            continue;
        }
        top.push(false);
        sets.push(e.center.members().clone());
        names.push(format!("z{}", e.id));
        labels.push(format!(
            "Z({}) |Z|={}",
            g.label(e.representative),
            e.center.order()
        ));
    }
    let m = sets.len();
    let below = |i: usize, j: usize| {
        if i == j || !sets[i].is_subset(&sets[j]) {
            return false;
        }
        // across ranks from bottom to top, equal sets count as below
        (!top[i] && top[j]) || sets[i] != sets[j]
    };
    let mut out = String::new();
    writeln!(out, "digraph hasse {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for rank in [true, false] {
        writeln!(out, "  {{ rank=same;").unwrap();
        for i in (0..m).filter(|&i| top[i] == rank) {
            let shape = if rank { "" } else { ", shape=ellipse" };
            writeln!(
                out,
                "    {} [label=\"{}\"{}];",
                names[i],
                escape(&labels[i]),
                shape
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for i in 0..m {
        for j in 0..m {
            if below(i, j) && !(0..m).any(|t| below(i, t) && below(t, j)) {
                writeln!(out, "  {} -> {} [arrowhead=none];", names[i], names[j]).unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

/// The centralizer graph. Maximal centers get a doubled border.
pub fn graph(atlas: &CentralizerAtlas, graph: &CentralizerGraph) -> String {
    let g = atlas.group();
    let maximal = atlas.maximal_center_ids();
    let mut out = String::new();
    writeln!(out, "graph gz {{").unwrap();
    for e in atlas.entries() {
        let label = format!("Z({}) |Z|={}", g.label(e.representative), e.center.order());
        let extra = if maximal.contains(&e.id) {
            ", peripheries=2"
        } else {
            ""
        };
        writeln!(out, "  v{} [label=\"{}\"{}];", e.id, escape(&label), extra).unwrap();
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  v{a} -- v{b};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn s4_hasse_tiers() {
        let a = CentralizerAtlas::build(catalog::build("s4").unwrap()).unwrap();
        let dot = hasse(&a);
        assert_eq!(dot.matches("|C|=").count(), 13);
        let centers: Vec<&str> = dot
            .lines()
            .filter(|l| l.contains("shape=ellipse"))
            .collect();
        assert_eq!(centers.len(), 7);
        assert_eq!(centers.iter().filter(|l| l.contains("|Z|=2")).count(), 3);
        assert_eq!(centers.iter().filter(|l| l.contains("|Z|=3")).count(), 4);
        for line in centers {
            let node = line.trim().split(' ').next().unwrap();
            assert!(
                dot.contains(&format!("  {node} -> c")),
                "{node} has no upward edge"
            );
        }
    }

    #[test]
    fn graph_dot_shape() {
        let a = CentralizerAtlas::build(catalog::build("q8").unwrap()).unwrap();
        let g = CentralizerGraph::build(&a);
        let dot = graph(&a, &g);
        assert!(dot.starts_with("graph gz {"));
        assert_eq!(dot.matches("peripheries=2").count(), 3);
        assert!(!dot.contains("--"));
    }
}
