use std::fmt::Write;

use w6free::{Graph, MinorModel};

pub fn dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    let id: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    writeln!(out, "graph {id} {{").unwrap();
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "  {} -- {};", e.u, e.v).unwrap();
    }
    out.push('}');
    out
}

pub fn text(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|e| e.to_string()).collect();
    format!(
        "order {} size {} degrees {} edges {}",
        g.order(),
        g.size(),
        g.degree_sequence(),
        edges.join(" ")
    )
}

/// Branch sets on one line, pattern vertex order.
pub fn compact_model(m: &MinorModel) -> String {
    m.branch_sets
        .iter()
        .map(|set| {
            let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}
