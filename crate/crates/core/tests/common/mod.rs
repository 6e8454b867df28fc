//! Independent oracles and seeded randomness shared by the integration
//! tests.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use w6free::{canonical_form, CanonicalForm, Edge, Graph};

/// Seed from `W6_SEED`, falling back to a fixed default.
pub fn seed() -> u64 {
    std::env::var("W6_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed)
}

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random permutation of `0..n`.
pub fn random_perm(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Whether `h` embeds into `g` as a subgraph (not necessarily induced) with
/// `|V(h)| = |V(g)|`, by plain backtracking over vertex images.
pub fn is_spanning_subgraph(h: &Graph, g: &Graph) -> bool {
    fn place(h: &Graph, g: &Graph, img: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = img.len();
        if k == h.order() {
            return true;
        }
        for t in 0..g.order() {
            if used[t] || g.degree(t) < h.degree(k) {
                continue;
            }
            if (0..k).any(|j| h.has_edge(j, k) && !g.has_edge(img[j], t)) {
                continue;
            }
            used[t] = true;
            img.push(t);
            if place(h, g, img, used) {
                return true;
            }
            img.pop();
            used[t] = false;
        }
        false
    }
    h.order() == g.order()
        && h.size() <= g.size()
        && place(h, g, &mut Vec::new(), &mut vec![false; g.order()])
}

/// Minor containment by exhaustive vertex deletion and edge contraction,
/// finishing with a subgraph test once the orders agree.
pub struct MinorOracle {
    h: Graph,
    memo: HashMap<CanonicalForm, bool>,
}

impl MinorOracle {
    pub fn new(h: &Graph) -> MinorOracle {
        MinorOracle {
            h: h.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, g: &Graph) -> bool {
        if g.order() < self.h.order() || g.size() < self.h.size() {
            return false;
        }
        if g.order() == self.h.order() {
            return is_spanning_subgraph(&self.h, g);
        }
        let key = canonical_form(g);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let found = (0..g.order()).any(|v| self.contains(&g.delete_vertex(v).unwrap()))
            || g.edges()
                .into_iter()
                .any(|e: Edge| self.contains(&g.contract_edge(e).unwrap()));
        self.memo.insert(key, found);
        found
    }
}

pub fn minor_oracle(g: &Graph, h: &Graph) -> bool {
    MinorOracle::new(h).contains(g)
}
