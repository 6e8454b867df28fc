//! Vertex connectivity, cyclic edge connectivity of cubic graphs, and
//! planarity.

use crate::constructors::{construct, Family};
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::minor::has_minor;

/// A vertex cut together with two sides it separates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub cut: Vec<usize>,
    pub sides: (Vec<usize>, Vec<usize>),
}

impl SeparatorCertificate {
    /// Checks that the sides are nonempty, disjoint from each other and from
    /// the cut, and have no edge between them.
    pub fn verify(&self, g: &Graph) -> bool {
        let mask = |vs: &[usize]| {
            vs.iter()
                .try_fold(0u64, |m, &v| (v < g.order()).then_some(m | bit(v)))
        };
        let (Some(cut), Some(a), Some(b)) =
            (mask(&self.cut), mask(&self.sides.0), mask(&self.sides.1))
        else {
            return false;
        };
        a != 0
            && b != 0
            && a & b == 0
            && (a | b) & cut == 0
            && Bits(a).all(|v| g.neighbor_mask(v) & b == 0)
    }
}

/// Unit vertex-capacity flow network on the split graph.
struct FlowNet {
    size: usize,
    cap: Vec<i32>,
}

const INF: i32 = 1 << 20;

impl FlowNet {
    fn new(g: &Graph, s: usize, t: usize) -> FlowNet {
        let size = 2 * g.order();
        let mut cap = vec![0; size * size];
        for v in 0..g.order() {
            let c = if v == s || v == t { INF } else { 1 };
            cap[(2 * v) * size + 2 * v + 1] = c;
            for w in g.neighbors(v) {
                cap[(2 * v + 1) * size + 2 * w] = INF;
            }
        }
        FlowNet { size, cap }
    }

    /// Residual-reachable nodes from `src`, with BFS parents.
    fn bfs(&self, src: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.size];
        let mut parent = vec![usize::MAX; self.size];
        let mut queue = std::collections::VecDeque::from([src]);
        seen[src] = true;
        while let Some(x) = queue.pop_front() {
            for y in 0..self.size {
                if !seen[y] && self.cap[x * self.size + y] > 0 {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        (seen, parent)
    }

    /// Augments unit paths until none remain or `limit` is reached.
    fn max_flow(&mut self, src: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let (seen, parent) = self.bfs(src);
            if !seen[sink] {
                break;
            }
            let mut y = sink;
            while y != src {
                let x = parent[y];
                self.cap[x * self.size + y] -= 1;
                self.cap[y * self.size + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint paths between nonadjacent `s` and
/// `t`, stopping early at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = FlowNet::new(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, limit)
}

fn min_separator(g: &Graph, s: usize, t: usize) -> SeparatorCertificate {
    let mut net = FlowNet::new(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, usize::MAX);
    let (seen, _) = net.bfs(2 * s + 1);
    let cut: Vec<usize> = (0..g.order())
        .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
        .collect();
    let cut_mask = cut.iter().fold(0u64, |m, &v| m | bit(v));
    let side = g.reach(s, g.vertex_mask() & !cut_mask);
    let rest = g.vertex_mask() & !cut_mask & !side;
    SeparatorCertificate {
        cut,
        sides: (Bits(side).collect(), Bits(rest).collect()),
    }
}

/// The vertex connectivity of `g`, with a minimum separator whenever `g` is
/// not complete. Complete graphs have connectivity `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> (usize, Option<SeparatorCertificate>) {
    let n = g.order();
    if g.is_complete() {
        return (n.saturating_sub(1), None);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let rest = g.vertex_mask() & !comps[0];
        return (
            0,
            Some(SeparatorCertificate {
                cut: Vec::new(),
                sides: (Bits(comps[0]).collect(), Bits(rest).collect()),
            }),
        );
    }
    let mut best = (n, (0, 0));
    for s in 0..n {
        for t in Bits(g.vertex_mask() & !g.neighbor_mask(s) & !crate::graph::low_mask(s + 1)) {
            let k = local_connectivity(g, s, t, best.0);
            if k < best.0 {
                best = (k, (s, t));
            }
        }
    }
    let (k, (s, t)) = best;
    (k, Some(min_separator(g, s, t)))
}

/// `true` iff `n > k` and no set of fewer than `k` vertices disconnects `g`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree() < k || !g.is_connected() {
        return false;
    }
    for s in 0..n {
        for t in Bits(g.vertex_mask() & !g.neighbor_mask(s) & !crate::graph::low_mask(s + 1)) {
            if local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Whether a cubic graph has no edge cut of at most three edges leaving two
/// components that both contain a cycle.
pub fn is_cyclically_4_connected_cubic(g: &Graph) -> Result<bool> {
    if !g.is_regular(3) {
        return Err(Error::NotCubic);
    }
    let edges = g.edges();
    let m = edges.len();
    let cyclic_parts = |removed: &[usize]| -> usize {
        let mut h = g.clone();
        for &i in removed {
            h.remove(edges[i].u, edges[i].v);
        }
        h.components()
            .into_iter()
            .filter(|&c| h.edges_within(c) >= c.count_ones() as usize)
            .count()
    };
    for a in 0..m {
        if cyclic_parts(&[a]) >= 2 {
            return Ok(false);
        }
        for b in a + 1..m {
            if cyclic_parts(&[a, b]) >= 2 {
                return Ok(false);
            }
            for c in b + 1..m {
                if cyclic_parts(&[a, b, c]) >= 2 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Planarity by Wagner's criterion: no K5 minor and no K3,3 minor.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    // Euler's bound; a graph violating it always has one of the two minors.
    if g.size() > 3 * n - 6 {
        return false;
    }
    let k5 = Graph::complete(5);
    let k33 = construct(Family::CompleteBipartite(3, 3)).expect("valid family");
    !has_minor(g, &k5) && !has_minor(g, &k33)
}
