//! Exhaustive generation of isomorphism classes on a few vertices.
//!
//! Graphs are grown one vertex at a time: every graph on `k + 1` vertices
//! is a one-vertex extension of each of its induced `k`-vertex subgraphs,
//! so extending every class at level `k` by every neighbourhood of the new
//! vertex and deduplicating by canonical form reaches every class. Degree
//! bounds prune a level when no completion could meet them.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonize, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

/// Largest order accepted by the enumerators. Without tight degree bounds
/// the class count explodes long before this; 9 or 10 vertices is the
/// practical limit there.
pub const MAX_ENUMERATION_ORDER: usize = 16;

/// All classes on `n` vertices with minimum degree at least `min_degree`,
/// one canonical representative each, sorted by canonical form.
pub fn enumerate_graphs(n: usize, min_degree: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_bounded(n, min_degree, n.saturating_sub(1))
}

/// As [`enumerate_graphs`], additionally capping the maximum degree.
pub fn enumerate_graphs_bounded(
    n: usize,
    min_degree: usize,
    max_degree: usize,
) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    if n == 0 {
        return Ok(if min_degree == 0 {
            vec![Graph::empty(0)]
        } else {
            vec![]
        });
    }
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let (c, g) = canonize(&Graph::empty(1));
    if min_degree < n {
        level.insert(c, g);
    }
    for k in 1..n {
        // vertices of the (k+1)-vertex graph can still gain n - k - 1 neighbours
        let slack = n - k - 1;
        let need = min_degree.saturating_sub(slack);
        let parents: Vec<&Graph> = level.values().collect();
        let children: Vec<(CanonicalForm, Graph)> = parents
            .par_iter()
            .flat_map_iter(|&p| extensions(p, need, max_degree))
            .map(|h| canonize(&h))
            .collect();
        let mut next = BTreeMap::new();
        for (c, g) in children {
            next.entry(c).or_insert(g);
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// One-vertex extensions of `g` meeting the degree bounds.
fn extensions(g: &Graph, need: usize, max_degree: usize) -> impl Iterator<Item = Graph> + '_ {
    let k = g.order();
    let full = g.vertex_mask();
    // the new vertex must be adjacent to every vertex still below `need`
    let forced = Bits(full)
        .filter(|&v| g.degree(v) < need)
        .fold(0u64, |m, v| m | bit(v));
    let deficient = Bits(forced).any(|v| g.degree(v) + 1 < need);
    let saturated = Bits(full)
        .filter(|&v| g.degree(v) >= max_degree)
        .fold(0u64, |m, v| m | bit(v));
    let free = full & !forced & !saturated;
    let ok = !deficient && forced & saturated == 0;
    let subsets = if ok { 1u64 << free.count_ones() } else { 0 };
    let free_bits: Vec<usize> = Bits(free).collect();
    (0..subsets).filter_map(move |code| {
        let mut nbrs = forced;
        for (i, &v) in free_bits.iter().enumerate() {
            if code >> i & 1 == 1 {
                nbrs |= bit(v);
            }
        }
        let d = nbrs.count_ones() as usize;
        if d < need || d > max_degree {
            return None;
        }
        let mut adj: Vec<u64> = (0..k).map(|v| g.neighbor_mask(v)).collect();
        for v in Bits(nbrs) {
            adj[v] |= bit(k);
        }
        adj.push(nbrs);
        Some(Graph::from_masks(adj))
    })
}
