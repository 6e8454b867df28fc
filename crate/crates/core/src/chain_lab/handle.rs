//! Handle additions and the cyclically 4-connected cubic graphs they
//! generate from `K_{3,3}` and the cube.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonize, CanonicalForm};
use crate::connectivity::is_cyclically_4_connected_cubic;
use crate::constructors::special;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_ORDER};

/// Subdivides `e1` and `e2` (new vertices `n` and `n + 1`) and joins the
/// two subdivision vertices.
pub fn add_handle(g: &Graph, e1: Edge, e2: Edge) -> Result<Graph> {
    if !g.is_regular(3) {
        return Err(Error::NotCubic);
    }
    for e in [e1, e2] {
        if !g.has_edge(e.u, e.v) {
            return Err(Error::NoSuchEdge(e.u, e.v));
        }
    }
    if e1.shares_endpoint(&e2) {
        return Err(Error::Precondition(format!(
            "handle edges {e1} and {e2} must be disjoint"
        )));
    }
    let n = g.order();
    if n + 2 > MAX_ORDER {
        return Err(Error::OrderTooLarge(n + 2));
    }
    let mut adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    adj.extend([0, 0]);
    let mut h = Graph::from_masks(adj);
    for (e, s) in [(e1, n), (e2, n + 1)] {
        h.remove(e.u, e.v);
        h.insert(e.u, s);
        h.insert(s, e.v);
    }
    h.insert(n, n + 1);
    Ok(h)
}

/// All handle additions on `g`, one per unordered pair of disjoint edges.
pub fn handle_additions(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &e1) in edges.iter().enumerate() {
        for &e2 in &edges[i + 1..] {
            if !e1.shares_endpoint(&e2) {
                out.push(add_handle(g, e1, e2).expect("disjoint edges of a cubic graph"));
            }
        }
    }
    out
}

/// Closure of `{K_{3,3}, cube}` under handle additions that stay
/// cyclically 4-connected, up to `max_n` vertices. One canonical graph per
/// class, sorted by order and canonical form.
pub fn generate_cyclically_4conn_cubic(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > 16 {
        return Err(Error::Precondition(format!(
            "generation is limited to 16 vertices, asked for {max_n}"
        )));
    }
    let mut levels: BTreeMap<usize, BTreeMap<CanonicalForm, Graph>> = BTreeMap::new();
    for name in ["k33", "cube"] {
        let g = special(name)?;
        if g.order() <= max_n {
            let (c, cg) = canonize(&g);
            levels.entry(g.order()).or_default().insert(c, cg);
        }
    }
    let mut n = 6;
    while n + 2 <= max_n {
        let parents: Vec<Graph> = levels
            .get(&n)
            .map(|l| l.values().cloned().collect())
            .unwrap_or_default();
        let children: Vec<(CanonicalForm, Graph)> = parents
            .par_iter()
            .flat_map_iter(handle_additions)
            .filter(|h| is_cyclically_4_connected_cubic(h).unwrap_or(false))
            .map(|h| canonize(&h))
            .collect();
        let level = levels.entry(n + 2).or_default();
        for (c, g) in children {
            level.entry(c).or_insert(g);
        }
        n += 2;
    }
    Ok(levels.into_values().flat_map(|l| l.into_values()).collect())
}
