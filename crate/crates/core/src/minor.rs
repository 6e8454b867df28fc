//! Minor containment with checkable certificates, and topological
//! containment.
//!
//! `H` is a minor of `G` exactly when `V(G)` holds disjoint connected branch
//! sets, one per vertex of `H`, with a `G`-edge between the branch sets of
//! every `H`-edge. When `G` is connected such a model can always be grown
//! until it covers `V(G)`: an unused vertex next to a branch set can simply
//! join it. The search therefore enumerates partitions of each used
//! component into connected parts, choosing part labels in first-occurrence
//! order so that each unlabelled partition is visited once, and matches `H`
//! onto the quotient graph whenever the parts are all connected.
//!
//! Pruning:
//! * a part with a component that can no longer grow (no unassigned
//!   neighbour) must be connected already;
//! * enough unassigned vertices must remain to open the missing parts;
//! * the quotient degree of a closed part is final, so the sorted upper
//!   bounds on quotient degrees must dominate the sorted degrees of `H`.

use std::fmt;

use crate::connectivity::is_k_connected;
use crate::error::{self, Error};

use crate::graph::{bit, Bits, Edge, Graph, MAX_ORDER};

/// Branch sets and edge witnesses certifying `H ⪯ G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    /// `branch_sets[i]` is the sorted branch set of `H`-vertex `i`.
    pub branch_sets: Vec<Vec<usize>>,
    /// For every edge of `H`, the `G`-edge joining its two branch sets.
    pub edge_witnesses: Vec<(Edge, Edge)>,
}

impl fmt::Display for MinorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, set) in self.branch_sets.iter().enumerate() {
            let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
            writeln!(f, "h-vertex {i}: {{{}}}", items.join(","))?;
        }
        for (he, ge) in &self.edge_witnesses {
            writeln!(f, "h-edge ({},{}): g-edge ({},{})", he.u, he.v, ge.u, ge.v)?;
        }
        Ok(())
    }
}

/// The clause of the model definition a candidate model breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    /// Wrong number of branch sets for the pattern.
    Shape,
    /// A branch set refers to a vertex outside `G`.
    OutOfRange {
        h_vertex: usize,
        vertex: usize,
    },
    Empty {
        h_vertex: usize,
    },
    Disjointness {
        vertex: usize,
    },
    Connectivity {
        h_vertex: usize,
    },
    /// An `H`-edge has no witness, or its witness is not a `G`-edge
    /// between the right branch sets.
    Adjacency {
        h_edge: Edge,
    },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::Shape => {
                write!(f, "shape: branch set count differs from pattern order")
            }
            ModelViolation::OutOfRange { h_vertex, vertex } => {
                write!(f, "range: branch set {h_vertex} names vertex {vertex}")
            }
            ModelViolation::Empty { h_vertex } => write!(f, "nonempty: branch set {h_vertex}"),
            ModelViolation::Disjointness { vertex } => {
                write!(f, "disjointness: vertex {vertex} in two branch sets")
            }
            ModelViolation::Connectivity { h_vertex } => {
                write!(f, "connectivity: branch set {h_vertex} is disconnected")
            }
            ModelViolation::Adjacency { h_edge } => {
                write!(f, "adjacency: no valid witness for h-edge {h_edge}")
            }
        }
    }
}

/// Independent certificate check; never consults the search.
pub fn verify_minor_model(g: &Graph, h: &Graph, m: &MinorModel) -> Result<(), ModelViolation> {
    if m.branch_sets.len() != h.order() {
        return Err(ModelViolation::Shape);
    }
    let mut owner = vec![usize::MAX; g.order()];
    let mut masks = Vec::with_capacity(h.order());
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(ModelViolation::Empty { h_vertex: i });
        }
        let mut mask = 0u64;
        for &v in set {
            if v >= g.order() {
                return Err(ModelViolation::OutOfRange {
                    h_vertex: i,
                    vertex: v,
                });
            }
            if owner[v] != usize::MAX && owner[v] != i {
                return Err(ModelViolation::Disjointness { vertex: v });
            }
            owner[v] = i;
            mask |= bit(v);
        }
        if !g.is_connected_within(mask) {
            return Err(ModelViolation::Connectivity { h_vertex: i });
        }
        masks.push(mask);
    }
    for he in h.edges() {
        let ok = m.edge_witnesses.iter().any(|(e, w)| {
            *e == he
                && g.has_edge(w.u, w.v)
                && ((masks[he.u] & bit(w.u) != 0 && masks[he.v] & bit(w.v) != 0)
                    || (masks[he.u] & bit(w.v) != 0 && masks[he.v] & bit(w.u) != 0))
        });
        if !ok {
            return Err(ModelViolation::Adjacency { h_edge: he });
        }
    }
    Ok(())
}

pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    find_minor_model(g, h).is_some()
}

/// `W6`-minor-freeness of a 4-connected 7-vertex graph, read off the
/// degrees: such a graph has a `W6` minor exactly when some vertex is
/// adjacent to all others.
pub fn w6_free_7vertex(g: &Graph) -> error::Result<bool> {
    if g.order() != 7 || !is_k_connected(g, 4) {
        return Err(Error::Precondition(format!(
            "expected a 4-connected graph on 7 vertices, got {} vertices",
            g.order()
        )));
    }
    Ok(g.max_degree() <= 5)
}

/// Finds a minor model of `h` in `g`, shrunk to be inclusion-minimal
/// vertex by vertex. Deterministic for a given pair of labelled graphs.
pub fn find_minor_model(g: &Graph, h: &Graph) -> Option<MinorModel> {
    let parts = search_partition(g, h)?;
    Some(build_model(g, h, parts))
}

/// A vertex order in which every vertex after the first of its component
/// has an earlier neighbour; components in order of their least vertex.
fn bfs_order(g: &Graph) -> (Vec<usize>, Vec<bool>) {
    let mut order = Vec::with_capacity(g.order());
    let mut starts = Vec::with_capacity(g.order());
    let mut seen = 0u64;
    for s in 0..g.order() {
        if seen & bit(s) != 0 {
            continue;
        }
        seen |= bit(s);
        let mut queue = std::collections::VecDeque::from([s]);
        let mut first = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            starts.push(first);
            first = false;
            for w in Bits(g.neighbor_mask(v) & !seen) {
                seen |= bit(w);
                queue.push_back(w);
            }
        }
    }
    (order, starts)
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    k: usize,
    order: Vec<usize>,
    component_start: Vec<bool>,
    /// `H` degrees, descending.
    h_degrees: Vec<usize>,
    h_edges: usize,
    parts: Vec<u64>,
    used: usize,
    assigned: u64,
    unused: u64,
    found: Option<Vec<u64>>,
}

impl<'a> PartitionSearch<'a> {
    fn part_adjacency(&self) -> Vec<u64> {
        let mut q = vec![0u64; self.used];
        for p in 0..self.used {
            let reach = Bits(self.parts[p]).fold(0u64, |m, v| m | self.g.neighbor_mask(v));
            for r in 0..self.used {
                if r != p && reach & self.parts[r] != 0 {
                    q[p] |= bit(r);
                }
            }
        }
        q
    }

    /// Each component of a part must still be able to grow, unless it is the
    /// whole part.
    fn parts_viable(&self, touched: u64) -> bool {
        let open = !self.assigned & self.g.vertex_mask();
        for p in Bits(touched) {
            let mask = self.parts[p];
            let comps = self.g.components_within(mask);
            if comps.len() < 2 {
                continue;
            }
            for c in comps {
                let frontier = Bits(c).fold(0u64, |m, v| m | self.g.neighbor_mask(v));
                if frontier & open == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn degrees_viable(&self, quotient: &[u64]) -> bool {
        let open = !self.assigned & self.g.vertex_mask();
        let mut bounds: Vec<usize> = (0..self.used)
            .map(|p| {
                let frontier = Bits(self.parts[p]).fold(0u64, |m, v| m | self.g.neighbor_mask(v));
                if frontier & open != 0 {
                    self.k - 1
                } else {
                    quotient[p].count_ones() as usize
                }
            })
            .collect();
        bounds.resize(self.k, self.k - 1);
        bounds.sort_unstable_by(|a, b| b.cmp(a));
        bounds.iter().zip(&self.h_degrees).all(|(b, d)| b >= d)
    }

    fn all_parts_connected(&self) -> bool {
        self.parts[..self.used]
            .iter()
            .all(|&m| self.g.is_connected_within(m))
    }

    fn try_match(&mut self, quotient: &[u64]) -> bool {
        let edges: usize = quotient
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2;
        if edges < self.h_edges {
            return false;
        }
        if let Some(assign) = embed_spanning(self.h, quotient) {
            let mut sets = vec![0u64; self.k];
            for (hv, &p) in assign.iter().enumerate() {
                sets[hv] = self.parts[p];
            }
            self.found = Some(sets);
            return true;
        }
        false
    }

    fn assign(&mut self, v: usize, label: Option<usize>) {
        self.assigned |= bit(v);
        match label {
            Some(p) => {
                if p == self.used {
                    self.used += 1;
                }
                self.parts[p] |= bit(v);
            }
            None => self.unused |= bit(v),
        }
    }

    fn unassign(&mut self, v: usize, label: Option<usize>, opened: bool) {
        self.assigned &= !bit(v);
        match label {
            Some(p) => {
                self.parts[p] &= !bit(v);
                if opened {
                    self.used -= 1;
                }
            }
            None => self.unused &= !bit(v),
        }
    }

    fn descend(&mut self, idx: usize) -> bool {
        if self.used == self.k {
            let quotient = self.part_adjacency();
            if self.all_parts_connected() && self.try_match(&quotient) {
                return true;
            }
        }
        if idx == self.order.len() {
            return false;
        }
        let v = self.order[idx];
        let remaining = self.order.len() - idx;
        let nbrs = self.g.neighbor_mask(v) & self.assigned;

        let mut labels: Vec<Option<usize>> = Vec::with_capacity(self.k + 1);
        if self.component_start[idx] {
            if self.used < self.k {
                labels.push(Some(self.used));
            }
            labels.push(None);
        } else if nbrs & self.unused != 0 {
            labels.push(None);
        } else {
            // parts next to v first, then the rest, then a fresh part
            let mut near = Vec::new();
            let mut far = Vec::new();
            for p in 0..self.used {
                if self.parts[p] & nbrs != 0 {
                    near.push(Some(p));
                } else {
                    far.push(Some(p));
                }
            }
            if self.used < self.k {
                labels.push(Some(self.used));
            }
            labels.extend(near);
            labels.extend(far);
        }

        for label in labels {
            let opened = label == Some(self.used);
            // later vertices must be able to open the missing parts
            if self.k - self.used - opened as usize > remaining - 1 {
                continue;
            }
            self.assign(v, label);
            let mut touched = 0u64;
            for w in Bits(self.g.neighbor_mask(v) & self.assigned) {
                for p in 0..self.used {
                    if self.parts[p] & bit(w) != 0 {
                        touched |= bit(p);
                    }
                }
            }
            if let Some(p) = label {
                touched |= bit(p);
            }
            let mut ok = self.parts_viable(touched);
            if ok {
                let quotient = self.part_adjacency();
                ok = self.degrees_viable(&quotient);
            }
            if ok && self.descend(idx + 1) {
                return true;
            }
            self.unassign(v, label, opened);
        }
        false
    }
}

/// Partition search; returns branch-set masks indexed by `H`-vertex.
fn search_partition(g: &Graph, h: &Graph) -> Option<Vec<u64>> {
    let k = h.order();
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.order() || h.size() > g.size() || k > MAX_ORDER {
        return None;
    }
    let (order, component_start) = bfs_order(g);
    let mut h_degrees: Vec<usize> = (0..k).map(|v| h.degree(v)).collect();
    h_degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut s = PartitionSearch {
        g,
        h,
        k,
        order,
        component_start,
        h_degrees,
        h_edges: h.size(),
        parts: vec![0; k],
        used: 0,
        assigned: 0,
        unused: 0,
        found: None,
    };
    s.descend(0);
    s.found
}

/// Maps the vertices of `h` injectively onto the `quotient` vertices so that
/// every `h`-edge lands on a quotient edge. `h` and the quotient have the
/// same order.
pub(crate) fn embed_spanning(h: &Graph, quotient: &[u64]) -> Option<Vec<usize>> {
    let k = h.order();
    debug_assert_eq!(k, quotient.len());
    // h-vertices in an order that keeps each one next to earlier ones
    let mut hv_order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = 0u64;
    while hv_order.len() < k {
        let next = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (h.neighbor_mask(v) & placed).count_ones(),
                    h.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        hv_order.push(next);
        placed |= bit(next);
    }
    let qdeg: Vec<u32> = quotient.iter().map(|m| m.count_ones()).collect();
    let mut image = vec![usize::MAX; k];
    fn go(
        i: usize,
        h: &Graph,
        order: &[usize],
        quotient: &[u64],
        qdeg: &[u32],
        image: &mut [usize],
        taken: u64,
    ) -> bool {
        if i == order.len() {
            return true;
        }
        let hv = order[i];
        let mut need = u64::MAX;
        for hw in h.neighbors(hv) {
            if image[hw] != usize::MAX {
                need &= quotient[image[hw]];
            }
        }
        let cands = need & !taken & crate::graph::low_mask(quotient.len());
        for q in Bits(cands) {
            if (qdeg[q] as usize) < h.degree(hv) {
                continue;
            }
            image[hv] = q;
            if go(i + 1, h, order, quotient, qdeg, image, taken | bit(q)) {
                return true;
            }
        }
        image[hv] = usize::MAX;
        false
    }
    go(0, h, &hv_order, quotient, &qdeg, &mut image, 0).then_some(image)
}

fn witness(g: &Graph, a: u64, b: u64) -> Option<Edge> {
    Bits(a)
        .flat_map(|u| Bits(g.neighbor_mask(u) & b).map(move |v| Edge::new(u, v)))
        .min()
}

/// Shrinks each branch set vertex by vertex while the model stays valid,
/// then records the least witness edge for every `H`-edge.
fn build_model(g: &Graph, h: &Graph, mut sets: Vec<u64>) -> MinorModel {
    let h_edges = h.edges();
    let still_valid = |sets: &[u64], i: usize| {
        sets[i] != 0
            && g.is_connected_within(sets[i])
            && h_edges
                .iter()
                .filter(|e| e.u == i || e.v == i)
                .all(|e| witness(g, sets[e.u], sets[e.v]).is_some())
    };
    loop {
        let mut changed = false;
        for i in 0..sets.len() {
            for v in Bits(sets[i]) {
                let before = sets[i];
                sets[i] &= !bit(v);
                if still_valid(&sets, i) {
                    changed = true;
                } else {
                    sets[i] = before;
                }
            }
        }
        if !changed {
            break;
        }
    }
    MinorModel {
        branch_sets: sets.iter().map(|&m| Bits(m).collect()).collect(),
        edge_witnesses: h_edges
            .iter()
            .map(|&e| {
                let w = witness(g, sets[e.u], sets[e.v]).expect("valid model");
                (e, w)
            })
            .collect(),
    }
}

/// Whether `g` contains a subdivision of `h`: distinct branch vertices for
/// the vertices of `h` joined by internally disjoint paths avoiding all
/// branch vertices.
pub fn has_topological_minor(g: &Graph, h: &Graph) -> bool {
    let k = h.order();
    if k > g.order() || h.size() > g.size() {
        return false;
    }
    let mut hv_order: Vec<usize> = (0..k).collect();
    hv_order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut image = vec![usize::MAX; k];
    place_branch(g, h, &hv_order, 0, &mut image, 0)
}

fn place_branch(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    i: usize,
    image: &mut [usize],
    taken: u64,
) -> bool {
    if i == order.len() {
        let edges = h.edges();
        return route(g, &edges, 0, image, taken);
    }
    let hv = order[i];
    for v in Bits(g.vertex_mask() & !taken) {
        if g.degree(v) < h.degree(hv) {
            continue;
        }
        image[hv] = v;
        if place_branch(g, h, order, i + 1, image, taken | bit(v)) {
            return true;
        }
    }
    image[hv] = usize::MAX;
    false
}

/// Routes `h`-edges `edges[i..]` as paths through vertices outside `blocked`.
fn route(g: &Graph, edges: &[Edge], i: usize, image: &[usize], blocked: u64) -> bool {
    if i == edges.len() {
        return true;
    }
    let (s, t) = (image[edges[i].u], image[edges[i].v]);
    let mut found = false;
    let mut stack = vec![s];
    walk(g, s, t, blocked, &mut stack, &mut |interior| {
        found = route(g, edges, i + 1, image, blocked | interior);
        found
    });
    found
}

/// Enumerates simple `s`-`t` paths whose interior avoids `blocked`; `visit`
/// gets the interior mask and returns `true` to stop.
fn walk(
    g: &Graph,
    at: usize,
    t: usize,
    blocked: u64,
    stack: &mut Vec<usize>,
    visit: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if g.has_edge(at, t) {
        let interior = stack[1..].iter().fold(0u64, |m, &v| m | bit(v));
        if visit(interior) {
            return true;
        }
    }
    let on_path = stack.iter().fold(0u64, |m, &v| m | bit(v));
    for w in Bits(g.neighbor_mask(at) & !blocked & !on_path) {
        stack.push(w);
        if walk(g, w, t, blocked, stack, visit) {
            return true;
        }
        stack.pop();
    }
    false
}
