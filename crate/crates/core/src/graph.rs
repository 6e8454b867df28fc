//! Simple undirected graphs on vertices `0..n` stored as adjacency bitsets.
//!
//! Graphs are values: every edit returns a new graph and leaves the receiver
//! untouched, so enumeration branches never alias one another.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold; one `u64` word per neighbourhood.
pub const MAX_ORDER: usize = 64;

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Unordered edge, normalized so that `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds a normalized edge. Panics on a loop; use [`Edge::try_new`] for
    /// untrusted input.
    pub fn new(a: usize, b: usize) -> Edge {
        Edge::try_new(a, b).expect("edge endpoints must differ")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.u == other.u || self.u == other.v || self.v == other.u || self.v == other.v
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Edge {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// Nondecreasing degree sequence `d_1 <= ... <= d_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` into a sequence. Fails when some entry cannot be the
    /// degree of a simple graph on `degrees.len()` vertices.
    pub fn new(mut degrees: Vec<usize>) -> Result<DegreeSequence> {
        degrees.sort_unstable();
        let n = degrees.len();
        if let Some(&d) = degrees.last() {
            if d >= n {
                return Err(Error::Precondition(format!(
                    "degree {d} impossible on {n} vertices"
                )));
            }
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-indexed access, matching the usual `d_i` convention.
    pub fn d(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn min(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut g = Graph::empty(n);
        for e in edges {
            let (a, b) = e.into();
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            let e = Edge::try_new(a, b)?;
            if g.has_edge(e.u, e.v) {
                return Err(Error::EdgeExists(e.u, e.v));
            }
            g.insert(e.u, e.v);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood masks. The caller guarantees
    /// symmetry and the absence of loops.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &m)| m & bit(v) == 0));
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &m)| Bits(m).all(|w| adj[w] & bit(v) != 0)));
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Graph {
        let all = low_mask(n);
        Graph::from_masks((0..n).map(|v| all & !bit(v)).collect())
    }

    #[inline]
    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbours of `v` in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub fn is_complete(&self) -> bool {
        self.is_regular(self.n.saturating_sub(1))
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        DegreeSequence(d)
    }

    /// `G \ e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NoSuchEdge(e.u, e.v));
        }
        let mut g = self.clone();
        g.remove(e.u, e.v);
        Ok(g)
    }

    /// `G + uv` for a nonadjacent pair.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let e = Edge::try_new(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(e.u, e.v));
        }
        let mut g = self.clone();
        g.insert(u, v);
        Ok(g)
    }

    /// `G / e`, simplified. With `e = (a, b)`, `a < b`, the merged vertex
    /// keeps index `a`, vertex `b` disappears and every index above `b`
    /// moves down by one. Indices below `b` are unchanged.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::NoSuchEdge(e.u, e.v));
        }
        Ok(self.contract_unchecked(e.u, e.v))
    }

    /// Merges `b` into `a` (requires `a < b`, adjacency not required).
    pub(crate) fn contract_unchecked(&self, a: usize, b: usize) -> Graph {
        debug_assert!(a < b);
        let merged = (self.adj[a] | self.adj[b]) & !bit(a) & !bit(b);
        let mut adj = Vec::with_capacity(self.n - 1);
        for v in 0..self.n {
            if v == b {
                continue;
            }
            let m = if v == a {
                merged
            } else if merged & bit(v) != 0 {
                (self.adj[v] & !bit(b)) | bit(a)
            } else {
                self.adj[v]
            };
            adj.push(drop_bit(m, b));
        }
        Graph::from_masks(adj)
    }

    /// `G - v`; indices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(Graph::from_masks(
            (0..self.n)
                .filter(|&w| w != v)
                .map(|w| drop_bit(self.adj[w], v))
                .collect(),
        ))
    }

    /// Subgraph induced by the vertices in `mask`, relabeled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        Graph::from_masks(
            keep.iter()
                .map(|&v| {
                    Bits(self.adj[v] & mask)
                        .map(|w| bit(pos[w]))
                        .fold(0, |a, b| a | b)
                })
                .collect(),
        )
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = Bits(self.adj[v])
                .map(|w| bit(perm[w]))
                .fold(0, |a, b| a | b);
        }
        Graph::from_masks(adj)
    }

    /// Disjoint union; vertices of `other` are appended after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph::from_masks(adj))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `mask` is connected (empty counts as connected).
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertex_mask())
    }

    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Number of edges with both ends in `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        Bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

/// Removes bit `b` from `m`, shifting the higher bits down.
#[inline]
pub(crate) fn drop_bit(m: u64, b: usize) -> u64 {
    let low = m & low_mask(b);
    let high = if b + 1 >= 64 { 0 } else { (m >> (b + 1)) << b };
    low | high
}
