//! Canonical labelling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell
//! in turn, and recurse. Every leaf is a labelling; the canonical one is the
//! leaf whose relabelled adjacency rows are lexicographically greatest.
//! Two leaves with equal rows yield an automorphism, and children of a node
//! that lie in one orbit of the automorphisms fixing the node's prefix are
//! explored only once.

use std::fmt;

use crate::graph::{bit, Bits, Graph, MAX_ORDER};
use crate::graph6::emit_graph6;

/// Isomorphism-invariant encoding: the graph6 string of the canonically
/// relabelled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

// Automorphisms kept for pruning; later ones are dropped, which only costs time.
const MAX_STORED_AUTOMORPHISMS: usize = 128;

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best_rows: Option<Vec<u64>>,
    best_lab: Vec<usize>,
    first_rows: Option<Vec<u64>>,
    first_lab: Vec<usize>,
    autos: Vec<Vec<usize>>,
}

type Partition = Vec<Vec<usize>>;

impl<'a> Search<'a> {
    fn refine(&self, mut cells: Partition) -> Partition {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0, |m, &v| m | bit(v)))
                .collect();
            let mut next: Partition = Vec::with_capacity(self.n);
            let mut split = false;
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let adj = self.g.neighbor_mask(v);
                        let sig = masks.iter().map(|m| (adj & m).count_ones() as u8).collect();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if next.last().map(|c| c.len()) != Some(cell.len()) {
                    split = true;
                }
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn rows_for(&self, lab: &[usize]) -> Vec<u64> {
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        lab.iter()
            .map(|&v| {
                self.g
                    .neighbors(v)
                    .map(|w| bit(self.n - 1 - pos[w]))
                    .fold(0, |a, b| a | b)
            })
            .collect()
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let rows = self.rows_for(&lab);
        match &self.first_rows {
            None => {
                self.first_rows = Some(rows.clone());
                self.first_lab = lab.clone();
                self.best_rows = Some(rows);
                self.best_lab = lab;
                return;
            }
            Some(first) if *first == rows => {
                let auto = compose_auto(&self.first_lab, &lab, self.n);
                self.store(auto);
                return;
            }
            _ => {}
        }
        let best = self.best_rows.as_ref().expect("set with first leaf");
        match rows.cmp(best) {
            std::cmp::Ordering::Greater => {
                self.best_rows = Some(rows);
                self.best_lab = lab;
            }
            std::cmp::Ordering::Equal => {
                let auto = compose_auto(&self.best_lab, &lab, self.n);
                self.store(auto);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    fn store(&mut self, auto: Vec<usize>) {
        if self.autos.len() < MAX_STORED_AUTOMORPHISMS {
            self.autos.push(auto);
        }
    }

    fn descend(&mut self, cells: Partition, prefix: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&w| w != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the stored
    /// automorphisms that fix every prefix vertex.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// The map sending `from[i]` to `to[i]`.
fn compose_auto(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
    let mut a = vec![0; n];
    for i in 0..n {
        a[from[i]] = to[i];
    }
    a
}

/// A canonical labelling: `lab[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        n,
        best_rows: None,
        best_lab: Vec::new(),
        first_rows: None,
        first_lab: Vec::new(),
        autos: Vec::new(),
    };
    search.descend(vec![(0..n).collect()], &mut Vec::new());
    search.best_lab
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(emit_graph6(&canonical_graph(g)).into_bytes())
}

/// Canonical form together with the canonical graph it encodes.
pub fn canonize(g: &Graph) -> (CanonicalForm, Graph) {
    let c = canonical_graph(g);
    (CanonicalForm(emit_graph6(&c).into_bytes()), c)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    canonical_form(g) == canonical_form(h)
}

/// Automorphism group order by brute force over the canonical search;
/// meant for small graphs in tests and reports.
pub fn count_automorphisms(g: &Graph) -> usize {
    let n = g.order();
    let mut count = 0;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = 0u64;
    fn go(g: &Graph, perm: &mut Vec<usize>, used: &mut u64, count: &mut usize) {
        let v = perm.len();
        if v == g.order() {
            *count += 1;
            return;
        }
        for w in Bits(g.vertex_mask() & !*used) {
            if g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(perm[u], w)) {
                continue;
            }
            perm.push(w);
            *used |= bit(w);
            go(g, perm, used, count);
            *used &= !bit(w);
            perm.pop();
        }
    }
    go(g, &mut perm, &mut used, &mut count);
    count
}
