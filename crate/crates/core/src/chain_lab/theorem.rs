//! Exhaustive check that the 4-connected `W6`-minor-free graphs of each
//! small order are exactly the catalog graphs of that order.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::connectivity::is_k_connected;
use crate::constructors::{catalog, construct, Family};
use crate::error::{Error, Result};
use crate::graph6::emit_graph6;
use crate::minor::has_minor;

use super::enumerate::enumerate_graphs;

/// Largest order [`verify_theorem`] will enumerate.
pub const THEOREM_MAX_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    /// Classes with minimum degree at least 4.
    pub candidates: usize,
    pub four_connected: usize,
    /// Catalog names of the 4-connected `W6`-minor-free classes found.
    pub names: Vec<&'static str>,
    /// graph6 of 4-connected `W6`-minor-free classes outside the catalog.
    pub unexpected: Vec<String>,
    /// Catalog names of this order that the enumeration did not produce.
    pub missing: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub max_n: usize,
    pub orders: Vec<OrderReport>,
}

impl TheoremReport {
    /// Total 4-connected `W6`-minor-free classes found.
    pub fn total(&self) -> usize {
        self.orders
            .iter()
            .map(|o| o.names.len() + o.unexpected.len())
            .sum()
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &str> {
        self.orders
            .iter()
            .flat_map(|o| o.unexpected.iter().map(String::as_str))
    }

    pub fn holds(&self) -> bool {
        self.orders
            .iter()
            .all(|o| o.unexpected.is_empty() && o.missing.is_empty())
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.orders {
            let found = o.names.len() + o.unexpected.len();
            write!(f, "order {}: {found}", o.order)?;
            for name in &o.names {
                write!(f, " {name}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "counterexamples:")?;
        let mut any = false;
        for o in &self.orders {
            for g6 in &o.unexpected {
                writeln!(f, "unexpected {g6}")?;
                any = true;
            }
            for name in &o.missing {
                writeln!(f, "missing {name}")?;
                any = true;
            }
        }
        if !any {
            writeln!(f, "none")?;
        }
        Ok(())
    }
}

pub fn verify_theorem(max_n: usize) -> Result<TheoremReport> {
    if max_n > THEOREM_MAX_ORDER {
        return Err(Error::OrderTooLarge(max_n));
    }
    let w6 = construct(Family::Wheel(6))?;
    let mut orders = Vec::new();
    for n in 5..=max_n {
        let candidates = enumerate_graphs(n, 4)?;
        let candidate_count = candidates.len();
        let four_connected: Vec<_> = candidates
            .into_par_iter()
            .filter(|g| is_k_connected(g, 4))
            .collect();
        let free: Vec<_> = four_connected
            .par_iter()
            .filter(|g| !has_minor(g, &w6))
            .map(|g| (canonical_form(g), emit_graph6(g)))
            .collect();
        let expected: Vec<_> = catalog().iter().filter(|e| e.order == n).collect();
        let found: BTreeSet<_> = free.iter().map(|(c, _)| c.clone()).collect();
        let mut names = Vec::new();
        let mut unexpected = Vec::new();
        for (c, g6) in &free {
            match expected.iter().find(|e| &e.canonical == c) {
                Some(e) => names.push(e.name),
                None => unexpected.push(g6.clone()),
            }
        }
        names.sort_unstable();
        let missing = expected
            .iter()
            .filter(|e| !found.contains(&e.canonical))
            .map(|e| e.name)
            .collect();
        orders.push(OrderReport {
            order: n,
            candidates: candidate_count,
            four_connected: four_connected.len(),
            names,
            unexpected,
            missing,
        });
    }
    Ok(TheoremReport { max_n, orders })
}
