//! Vertex splits, the inverse of edge contraction.
//!
//! Splitting `v` along a cover `(X, Y)` of `N(v)` replaces `v` by adjacent
//! vertices `x` and `y` with `x ~ X` and `y ~ Y`. The two sides may overlap;
//! a strict partition cannot produce `K6` from `C²_5`, so covers are the
//! meaningful notion here. In the result `x` keeps index `v` and `y` is the
//! new last vertex, so contracting `(v, n)` gives back the original graph
//! with its original labels.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Edge, Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub vertex: usize,
    pub x_side: Vec<usize>,
    pub y_side: Vec<usize>,
}

impl SplitSpec {
    pub fn new(vertex: usize, x_side: Vec<usize>, y_side: Vec<usize>) -> SplitSpec {
        SplitSpec {
            vertex,
            x_side,
            y_side,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSplit(msg));
        let v = self.vertex;
        if v >= g.order() {
            return bad(format!("vertex {v} not in graph"));
        }
        if g.order() + 1 > MAX_ORDER {
            return Err(Error::OrderTooLarge(g.order() + 1));
        }
        let nbrs = g.neighbor_mask(v);
        let side_mask = |side: &[usize], name: &str| -> Result<u64> {
            let mut m = 0u64;
            for &w in side {
                if w >= g.order() || nbrs & bit(w) == 0 {
                    return Err(Error::InvalidSplit(format!(
                        "{w} in {name} is not a neighbour of {v}"
                    )));
                }
                if m & bit(w) != 0 {
                    return Err(Error::InvalidSplit(format!("{w} repeated in {name}")));
                }
                m |= bit(w);
            }
            Ok(m)
        };
        let x = side_mask(&self.x_side, "X")?;
        let y = side_mask(&self.y_side, "Y")?;
        if x | y != nbrs {
            return bad(format!("X and Y do not cover N({v})"));
        }
        if self.x_side.len() < 2 || self.y_side.len() < 2 {
            return bad("both sides need at least two neighbours".into());
        }
        Ok(())
    }

    /// The new edge `xy` in the split graph.
    pub fn new_edge(&self, g: &Graph) -> Edge {
        Edge::new(self.vertex, g.order())
    }
}

pub fn apply_split(g: &Graph, s: &SplitSpec) -> Result<Graph> {
    s.validate(g)?;
    let n = g.order();
    let v = s.vertex;
    let y = n;
    let x_mask = s.x_side.iter().fold(0u64, |m, &w| m | bit(w));
    let y_mask = s.y_side.iter().fold(0u64, |m, &w| m | bit(w));
    let mut adj: Vec<u64> = (0..n).map(|w| g.neighbor_mask(w) & !bit(v)).collect();
    adj.push(0);
    adj[v] = x_mask | bit(y);
    adj[y] = y_mask | bit(v);
    for w in Bits(x_mask) {
        adj[w] |= bit(v);
    }
    for w in Bits(y_mask) {
        adj[w] |= bit(y);
    }
    Ok(Graph::from_masks(adj))
}

/// Every valid cover of `N(v)`, each unordered pair once.
pub fn split_specs(g: &Graph, v: usize) -> Vec<SplitSpec> {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let d = nbrs.len();
    let mut out = Vec::new();
    // digit 0: X only, 1: Y only, 2: both
    let total = 3usize.pow(d as u32);
    for code in 0..total {
        let mut c = code;
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for &w in &nbrs {
            match c % 3 {
                0 => x.push(w),
                1 => y.push(w),
                _ => {
                    x.push(w);
                    y.push(w);
                }
            }
            c /= 3;
        }
        if x.len() < 2 || y.len() < 2 || x > y {
            continue;
        }
        out.push(SplitSpec::new(v, x, y));
    }
    out
}

/// All splits of `v`, unfiltered and not deduplicated.
pub fn enumerate_vertex_splits(g: &Graph, v: usize) -> Vec<Graph> {
    split_specs(g, v)
        .iter()
        .map(|s| apply_split(g, s).expect("enumerated covers are valid"))
        .collect()
}

/// One representative split per isomorphism class.
#[derive(Clone, Debug)]
pub struct SplitClass {
    pub canonical: CanonicalForm,
    /// The split in the labelling of [`apply_split`].
    pub graph: Graph,
    pub spec: SplitSpec,
}

/// Splits of every vertex along every cover, optionally keeping only the
/// 4-connected ones, one per isomorphism class, sorted by canonical form.
pub fn enumerate_splits(g: &Graph, require_4conn: bool) -> Vec<SplitClass> {
    let mut classes: BTreeMap<CanonicalForm, SplitClass> = BTreeMap::new();
    for v in 0..g.order() {
        for spec in split_specs(g, v) {
            let split = apply_split(g, &spec).expect("enumerated covers are valid");
            if require_4conn && !is_k_connected(&split, 4) {
                continue;
            }
            let canonical = canonical_form(&split);
            classes.entry(canonical.clone()).or_insert(SplitClass {
                canonical,
                graph: split,
                spec,
            });
        }
    }
    classes.into_values().collect()
}
