//! Line graphs, cubic root recovery, and membership in the two terminal
//! classes of contraction chains: squares of cycles and line graphs of
//! cyclically 4-connected cubic graphs.

use crate::canon::is_isomorphic;
use crate::connectivity::is_cyclically_4_connected_cubic;
use crate::constructors::{construct, Family};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph, MAX_ORDER};

/// `L(g)`; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges = g.edges();
    if edges.len() > MAX_ORDER {
        return Err(Error::OrderTooLarge(edges.len()));
    }
    let mut adj = vec![0u64; edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i].shares_endpoint(&edges[j]) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
        }
    }
    Ok(Graph::from_masks(adj))
}

/// A cubic graph whose line graph is isomorphic to `g`, found by
/// partitioning the edges of `g` into triangles (each vertex then lies in
/// exactly two). Returns `None` when `g` is not 4-regular or no such
/// partition exists.
pub fn root_graph_cubic(g: &Graph) -> Option<Graph> {
    if g.order() == 0 || !g.is_regular(4) || !g.size().is_multiple_of(3) {
        return None;
    }
    let mut remaining: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    if !cover_triangles(&mut remaining, &mut triangles) {
        return None;
    }
    // root vertices are triangles; g-vertex v joins the two triangles through it
    let mut through = vec![Vec::with_capacity(2); g.order()];
    for (t, tri) in triangles.iter().enumerate() {
        for &v in tri {
            through[v].push(t);
        }
    }
    let mut root = Graph::empty(triangles.len());
    for pair in &through {
        let (a, b) = (pair[0], pair[1]);
        if root.has_edge(a, b) {
            return None;
        }
        root.insert(a, b);
    }
    debug_assert!(line_graph(&root).is_ok_and(|l| is_isomorphic(&l, g)));
    Some(root)
}

fn cover_triangles(remaining: &mut [u64], triangles: &mut Vec<[usize; 3]>) -> bool {
    let Some(u) = remaining.iter().position(|&m| m != 0) else {
        return true;
    };
    let v = remaining[u].trailing_zeros() as usize;
    for w in Bits(remaining[u] & remaining[v]) {
        for (a, b) in [(u, v), (u, w), (v, w)] {
            remaining[a] &= !bit(b);
            remaining[b] &= !bit(a);
        }
        triangles.push([u, v, w]);
        if cover_triangles(remaining, triangles) {
            return true;
        }
        triangles.pop();
        for (a, b) in [(u, v), (u, w), (v, w)] {
            remaining[a] |= bit(b);
            remaining[b] |= bit(a);
        }
    }
    false
}

/// `Some(n)` when `g` is isomorphic to `C²_n` (`n >= 5`).
pub fn is_square_of_cycle(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 5 {
        return None;
    }
    if !g.is_regular(4) {
        return None;
    }
    let square = construct(Family::Square(n)).ok()?;
    is_isomorphic(g, &square).then_some(n)
}

/// Whether `g` is the line graph of a cyclically 4-connected cubic graph.
pub fn is_cubic_line_graph(g: &Graph) -> bool {
    root_graph_cubic(g).is_some_and(|root| is_cyclically_4_connected_cubic(&root).unwrap_or(false))
}

/// Membership in the union of the two terminal classes.
pub fn is_terminal(g: &Graph) -> bool {
    is_square_of_cycle(g).is_some() || is_cubic_line_graph(g)
}
