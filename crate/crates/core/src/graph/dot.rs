use super::Graph;
use std::fmt::Write;

/// Graphviz rendering; `labels[v]` replaces the index as the node label.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for v in 0..g.order() {
        match labels {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l[v]);
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
