//! Contraction chains of 4-connected graphs.

use std::collections::HashSet;

use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::graph6::emit_graph6;

use super::line::is_terminal;

/// `graphs[i].contract_edge(contracted[i]) == graphs[i + 1]` for every step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub graphs: Vec<Graph>,
    pub contracted: Vec<Edge>,
}

impl Chain {
    fn start(g: &Graph) -> Chain {
        Chain {
            graphs: vec![g.clone()],
            contracted: Vec::new(),
        }
    }

    /// Number of contractions.
    pub fn len(&self) -> usize {
        self.contracted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contracted.is_empty()
    }

    pub fn last(&self) -> &Graph {
        self.graphs
            .last()
            .expect("a chain holds at least one graph")
    }

    /// Every graph 4-connected and every annotated contraction reproducing
    /// the next graph exactly.
    pub fn verify(&self) -> bool {
        self.graphs.len() == self.contracted.len() + 1
            && self.graphs.iter().all(|g| is_k_connected(g, 4))
            && self
                .contracted
                .iter()
                .zip(self.graphs.windows(2))
                .all(|(&e, w)| w[0].contract_edge(e).is_ok_and(|h| h == w[1]))
    }
}

/// Edges of `g` whose contraction stays 4-connected, in edge order.
pub fn contractible_edges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .into_iter()
        .filter(|&e| is_k_connected(&g.contract_unchecked(e.u, e.v), 4))
        .collect()
}

/// Greedily contracts the first contractible edge until the current graph
/// is a square of a cycle or the line graph of a cyclically 4-connected
/// cubic graph.
pub fn chain_decompose(g: &Graph) -> Result<Chain> {
    if !is_k_connected(g, 4) {
        return Err(Error::Precondition(
            "chain_decompose needs a 4-connected graph".into(),
        ));
    }
    let mut chain = Chain::start(g);
    while !is_terminal(chain.last()) {
        let cur = chain.last();
        let Some(e) = first_contractible(cur) else {
            return Err(Error::MartinovViolation(emit_graph6(cur)));
        };
        let next = cur.contract_unchecked(e.u, e.v);
        chain.contracted.push(e);
        chain.graphs.push(next);
    }
    Ok(chain)
}

fn first_contractible(g: &Graph) -> Option<Edge> {
    g.edges()
        .into_iter()
        .find(|&e| is_k_connected(&g.contract_unchecked(e.u, e.v), 4))
}

/// Largest input accepted by [`chain_search`].
pub const CHAIN_SEARCH_MAX_ORDER: usize = 10;

/// Depth-first search over 4-connected contraction sequences from `g` for
/// one that reaches a graph isomorphic to `target`.
pub fn chain_search(g: &Graph, target: &Graph) -> Result<Option<Chain>> {
    if g.order() > CHAIN_SEARCH_MAX_ORDER {
        return Err(Error::OrderTooLarge(g.order()));
    }
    if !is_k_connected(g, 4) {
        return Err(Error::Precondition(
            "chain_search needs a 4-connected graph".into(),
        ));
    }
    if is_terminal(g) {
        return Err(Error::Precondition(format!(
            "{} is already a square of a cycle or a cubic line graph",
            emit_graph6(g)
        )));
    }
    let goal = canonical_form(target);
    let mut chain = Chain::start(g);
    let mut dead = HashSet::new();
    Ok(descend(&mut chain, target, &goal, &mut dead).then_some(chain))
}

fn descend(
    chain: &mut Chain,
    target: &Graph,
    goal: &CanonicalForm,
    dead: &mut HashSet<CanonicalForm>,
) -> bool {
    let cur = chain.last().clone();
    if cur.order() == target.order() {
        return cur.size() == target.size() && canonical_form(&cur) == *goal;
    }
    if cur.order() < target.order() {
        return false;
    }
    let key = canonical_form(&cur);
    if dead.contains(&key) {
        return false;
    }
    for e in contractible_edges(&cur) {
        chain.graphs.push(cur.contract_unchecked(e.u, e.v));
        chain.contracted.push(e);
        if descend(chain, target, goal, dead) {
            return true;
        }
        chain.graphs.pop();
        chain.contracted.pop();
    }
    dead.insert(key);
    false
}

/// Isomorphism test against a chain's last graph; convenient for callers
/// that only care about where a chain ends.
pub fn ends_at(chain: &Chain, target: &Graph) -> bool {
    is_isomorphic(chain.last(), target)
}
