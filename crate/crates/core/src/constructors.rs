//! Named graphs and families, and the catalog of 4-connected graphs without
//! a W6 minor.
//!
//! Labelling conventions: rim or cycle vertices are `0..k` in cycle order,
//! hubs are appended. `K_{a,b}` puts its `a`-side on `0..a`.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::canon::{canonical_form, canonize, CanonicalForm};
use crate::chain_lab::split::enumerate_vertex_splits;
use crate::connectivity::is_k_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minor::has_minor;

/// Parametrized graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `C_k`, `k >= 3`.
    Cycle(usize),
    /// `W_k`: hub `k` joined to the cycle `0..k`, `k >= 3`.
    Wheel(usize),
    /// `C²_k`: cycle plus chords at distance two, `k >= 5`.
    Square(usize),
    /// `DW_k`: two nonadjacent hubs `k`, `k+1` over a `k`-cycle, `k >= 3`.
    DoubleWheel(usize),
    /// `DW⁺_k`: `DW_k` with the hubs joined.
    DoubleWheelPlus(usize),
    /// `K_k`, `k >= 1`.
    Complete(usize),
    /// `K_{a,b}`, `a, b >= 1`.
    CompleteBipartite(usize, usize),
}

fn domain(family: &'static str, value: usize, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfDomain { family, value })
    }
}

fn cycle_edges(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).map(move |i| (i, (i + 1) % k))
}

fn hub_edges(hub: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k).map(move |i| (i, hub))
}

pub fn construct(family: Family) -> Result<Graph> {
    match family {
        Family::Cycle(k) => {
            domain("cycle", k, (3..=64).contains(&k))?;
            Graph::from_edges(k, cycle_edges(k))
        }
        Family::Wheel(k) => {
            domain("wheel", k, (3..=63).contains(&k))?;
            Graph::from_edges(k + 1, cycle_edges(k).chain(hub_edges(k, k)))
        }
        Family::Square(k) => {
            domain("square of cycle", k, (5..=64).contains(&k))?;
            Graph::from_edges(k, cycle_edges(k).chain((0..k).map(|i| (i, (i + 2) % k))))
        }
        Family::DoubleWheel(k) => {
            domain("double wheel", k, (3..=62).contains(&k))?;
            Graph::from_edges(
                k + 2,
                cycle_edges(k)
                    .chain(hub_edges(k, k))
                    .chain(hub_edges(k + 1, k)),
            )
        }
        Family::DoubleWheelPlus(k) => {
            domain("double wheel plus", k, (3..=62).contains(&k))?;
            let dw = construct(Family::DoubleWheel(k))?;
            dw.add_edge(k, k + 1)
        }
        Family::Complete(k) => {
            domain("complete", k, (1..=64).contains(&k))?;
            Ok(Graph::complete(k))
        }
        Family::CompleteBipartite(a, b) => {
            domain(
                "complete bipartite",
                a.min(b),
                a >= 1 && b >= 1 && a + b <= 64,
            )?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
    }
}

/// `K_{4,3}` (sides `0..4` and `4..7`) plus the given edges.
fn k43_plus(extra: &[(usize, usize)]) -> Graph {
    let mut g = construct(Family::CompleteBipartite(4, 3)).expect("valid");
    for &(u, v) in extra {
        g = g.add_edge(u, v).expect("fresh edge");
    }
    g
}

// Γ1 as produced by `derive_special("Gamma1")`, relabelled for readability:
// DW⁺_4 with rim vertex 0 split into x = 0 (keeping 1, 3, 4) and y = 6
// (keeping 1, 3, 5), plus the new edge 0-6.
const GAMMA1_EDGES: [(usize, usize); 16] = [
    (0, 1),
    (0, 3),
    (0, 4),
    (0, 6),
    (1, 2),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (5, 6),
];

/// Names accepted by [`special`].
pub const SPECIAL_NAMES: [&str; 13] = [
    "petersen",
    "cube",
    "k33",
    "prism",
    "octahedron",
    "J",
    "K43_30",
    "K43_31",
    "K43_40",
    "K43_41",
    "Gamma1",
    "C27_plus_e",
    "K6_minus_e",
];

/// Individually named graphs.
///
/// `J` is labelled `x = 0`, `y = 1`, `v1 = 2`, `v2..v4 = 3..6`. The
/// `K43_ij` graphs put the 4-side of `K_{4,3}` on `0..4`: `i = 3` adds the
/// path 0-1-2-3, `i = 4` the cycle 0-1-2-3-0, and `j = 1` the edge 4-5.
pub fn special(name: &str) -> Result<Graph> {
    match name {
        "petersen" => Graph::from_edges(
            10,
            cycle_edges(5)
                .chain((0..5).map(|i| (i, i + 5)))
                .chain((0..5).map(|i| (i + 5, (i + 2) % 5 + 5))),
        ),
        "cube" => Graph::from_edges(
            8,
            (0..8usize).flat_map(|v| {
                (0..3)
                    .map(move |b| (v, v ^ (1 << b)))
                    .filter(|&(a, b)| a < b)
            }),
        ),
        "k33" => construct(Family::CompleteBipartite(3, 3)),
        "prism" => Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        "octahedron" => Ok(Graph::complete(6)
            .delete_edge((0, 1).into())?
            .delete_edge((2, 3).into())?
            .delete_edge((4, 5).into())?),
        "J" => Graph::from_edges(
            6,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        ),
        "K43_30" => Ok(k43_plus(&[(0, 1), (1, 2), (2, 3)])),
        "K43_31" => Ok(k43_plus(&[(0, 1), (1, 2), (2, 3), (4, 5)])),
        "K43_40" => Ok(k43_plus(&[(0, 1), (1, 2), (2, 3), (3, 0)])),
        "K43_41" => Ok(k43_plus(&[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)])),
        "Gamma1" => Graph::from_edges(7, GAMMA1_EDGES),
        "C27_plus_e" => construct(Family::Square(7))?.add_edge(0, 3),
        "K6_minus_e" => Graph::complete(6).delete_edge((0, 1).into()),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn is_w6_free(g: &Graph) -> bool {
    let w6 = construct(Family::Wheel(6)).expect("valid");
    !has_minor(g, &w6)
}

fn unique_class(name: &str, graphs: impl IntoIterator<Item = Graph>) -> Result<Graph> {
    let mut classes: Vec<(CanonicalForm, Graph)> = Vec::new();
    for g in graphs {
        let (c, cg) = canonize(&g);
        if !classes.iter().any(|(d, _)| *d == c) {
            classes.push((c, cg));
        }
    }
    if classes.len() != 1 {
        return Err(Error::OracleNotUnique {
            name: name.to_string(),
            classes: classes.len(),
        });
    }
    Ok(classes.pop().expect("one class").1)
}

fn edge_subsets(pool: &[(usize, usize)], size: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn go(
        pool: &[(usize, usize)],
        start: usize,
        size: usize,
        pick: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if pick.len() == size {
            out.push(pick.clone());
            return;
        }
        for i in start..pool.len() {
            pick.push(pool[i]);
            go(pool, i + 1, size, pick, out);
            pick.pop();
        }
    }
    go(pool, 0, size, &mut pick, &mut out);
    out
}

/// Recomputes a figure-only graph from its defining constraints and returns
/// its (canonically labelled) isomorphism class. Errors unless the
/// constraints single out exactly one class.
///
/// * `K43_ij`: add `i` edges inside the 4-side and `j` inside the 3-side of
///   `K_{4,3}`; keep the 4-connected results without a W6 minor.
/// * `Gamma1`: the 4-connected splits of a degree-4 vertex of `DW⁺_4`
///   without a W6 minor.
pub fn derive_special(name: &str) -> Result<Graph> {
    let (i, j) = match name {
        "K43_30" => (3, 0),
        "K43_31" => (3, 1),
        "K43_40" => (4, 0),
        "K43_41" => (4, 1),
        "Gamma1" => {
            let dw = construct(Family::DoubleWheelPlus(4))?;
            let candidates = (0..dw.order())
                .filter(|&v| dw.degree(v) == 4)
                .flat_map(|v| enumerate_vertex_splits(&dw, v))
                .filter(|g| is_k_connected(g, 4) && is_w6_free(g));
            return unique_class(name, candidates);
        }
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    let inside_big: Vec<(usize, usize)> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .collect();
    let inside_small: Vec<(usize, usize)> = (4..7)
        .flat_map(|a| (a + 1..7).map(move |b| (a, b)))
        .collect();
    let mut candidates = Vec::new();
    for big in edge_subsets(&inside_big, i) {
        for small in edge_subsets(&inside_small, j) {
            let extra: Vec<_> = big.iter().chain(&small).copied().collect();
            let g = k43_plus(&extra);
            if is_k_connected(&g, 4) && is_w6_free(&g) {
                candidates.push(g);
            }
        }
    }
    unique_class(name, candidates)
}

/// One graph of the characterization.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub graph: Graph,
    pub canonical: CanonicalForm,
    pub order: usize,
}

/// Catalog names, in the order the characterization lists them.
pub const CATALOG_NAMES: [&str; 14] = [
    "C2_5", "C2_6", "C2_7", "C2_8", "DW+_4", "K6-e", "K6", "C2_7+e", "DW_5", "K43_30", "K43_31",
    "K43_40", "Gamma1", "K43_41",
];

fn catalog_graph(name: &str) -> Result<Graph> {
    match name {
        "C2_5" => construct(Family::Square(5)),
        "C2_6" => construct(Family::Square(6)),
        "C2_7" => construct(Family::Square(7)),
        "C2_8" => construct(Family::Square(8)),
        "DW+_4" => construct(Family::DoubleWheelPlus(4)),
        "K6-e" => special("K6_minus_e"),
        "K6" => construct(Family::Complete(6)),
        "C2_7+e" => special("C27_plus_e"),
        "DW_5" => construct(Family::DoubleWheel(5)),
        other => special(other),
    }
}

/// The fourteen 4-connected graphs without a W6 minor, sorted by order and
/// then canonical form. Computed once.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut entries: Vec<CatalogEntry> = CATALOG_NAMES
            .iter()
            .map(|&name| {
                let graph = catalog_graph(name).expect("catalog graphs are well defined");
                CatalogEntry {
                    name,
                    canonical: canonical_form(&graph),
                    order: graph.order(),
                    graph,
                }
            })
            .collect();
        entries.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
        entries
    })
}

/// Name of the catalog entry isomorphic to `g`, if any.
pub fn catalog_lookup(g: &Graph) -> Option<&'static str> {
    let entries = catalog();
    if !entries.iter().any(|e| e.order == g.order()) {
        return None;
    }
    let c = canonical_form(g);
    entries.iter().find(|e| e.canonical == c).map(|e| e.name)
}

/// Catalog canonical forms as a set.
pub fn catalog_forms() -> BTreeSet<CanonicalForm> {
    catalog().iter().map(|e| e.canonical.clone()).collect()
}

/// Parses a graph name as used on the command line.
///
/// Accepts the [`special`] names, catalog names such as `DW+_4` or `K6-e`,
/// and families written `c_7`, `w6`, `c2_8`, `dw_5`, `dw+_4`, `k_6`, `k3,4`
/// (the underscore is optional; matching is case-insensitive).
pub fn parse_named(spec: &str) -> Result<Graph> {
    let unknown = || Error::UnknownName(spec.to_string());
    if let Some(&name) = SPECIAL_NAMES.iter().find(|n| n.eq_ignore_ascii_case(spec)) {
        return special(name);
    }
    if let Some(&name) = CATALOG_NAMES.iter().find(|n| n.eq_ignore_ascii_case(spec)) {
        return catalog_graph(name);
    }
    let lower = spec.to_ascii_lowercase();
    let (prefix, rest) = ["dw+", "dw", "c2", "c", "w", "k"]
        .iter()
        .find_map(|p| lower.strip_prefix(p).map(|r| (*p, r)))
        .ok_or_else(unknown)?;
    let rest = rest.strip_prefix('_').unwrap_or(rest);
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let family = match (prefix, rest.split_once(',')) {
        ("k", Some((a, b))) => Family::CompleteBipartite(num(a)?, num(b)?),
        (_, Some(_)) => return Err(unknown()),
        ("dw+", None) => Family::DoubleWheelPlus(num(rest)?),
        ("dw", None) => Family::DoubleWheel(num(rest)?),
        ("c2", None) => Family::Square(num(rest)?),
        ("c", None) => Family::Cycle(num(rest)?),
        ("w", None) => Family::Wheel(num(rest)?),
        ("k", None) => Family::Complete(num(rest)?),
        _ => return Err(unknown()),
    };
    construct(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::Edge;

    #[test]
    fn family_sizes() {
        let w6 = construct(Family::Wheel(6)).unwrap();
        assert_eq!((w6.order(), w6.size()), (7, 12));
        assert!(is_isomorphic(
            &construct(Family::Square(5)).unwrap(),
            &Graph::complete(5)
        ));
        let dwp = construct(Family::DoubleWheelPlus(4)).unwrap();
        assert_eq!(dwp.order(), 6);
        assert_eq!(dwp.degree_sequence().as_slice(), &[4, 4, 4, 4, 5, 5]);
        let k34 = construct(Family::CompleteBipartite(3, 4)).unwrap();
        assert_eq!((k34.order(), k34.size()), (7, 12));
    }

    #[test]
    fn squares_are_four_regular() {
        for k in 5..=16 {
            assert!(construct(Family::Square(k)).unwrap().is_regular(4));
        }
        assert_eq!(
            construct(Family::Square(8))
                .unwrap()
                .degree_sequence()
                .as_slice(),
            &[4; 8]
        );
    }

    #[test]
    fn out_of_domain() {
        assert!(construct(Family::Wheel(2)).is_err());
        assert!(construct(Family::Square(4)).is_err());
        assert!(construct(Family::Cycle(2)).is_err());
        assert!(construct(Family::DoubleWheel(2)).is_err());
        assert!(construct(Family::CompleteBipartite(0, 3)).is_err());
        assert!(matches!(special("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn petersen_contracts_to_w6() {
        let p = special("petersen").unwrap();
        assert!(p.is_regular(3));
        // contract 0-1, 0-4, 0-5 one at a time; vertex 0 keeps its index
        // and the partner index shifts after each step
        let g = p.contract_edge(Edge::new(0, 5)).unwrap();
        let g = g.contract_edge(Edge::new(0, 4)).unwrap();
        let g = g.contract_edge(Edge::new(0, 1)).unwrap();
        assert!(is_isomorphic(&g, &construct(Family::Wheel(6)).unwrap()));
    }

    #[test]
    fn rim_contraction_of_dw_plus_4_is_k5() {
        let dwp = construct(Family::DoubleWheelPlus(4)).unwrap();
        let k = dwp.contract_edge(Edge::new(0, 1)).unwrap();
        assert!(is_isomorphic(&k, &construct(Family::Square(5)).unwrap()));
    }

    #[test]
    fn j_shape() {
        let j = special("J").unwrap();
        assert_eq!((j.order(), j.size()), (6, 9));
        assert_eq!(j.degree_sequence().as_slice(), &[2, 2, 3, 3, 3, 5]);
    }

    #[test]
    fn k43_variants_respect_degree_bounds() {
        for (name, big, small) in [
            ("K43_30", 3, 0),
            ("K43_31", 3, 1),
            ("K43_40", 4, 0),
            ("K43_41", 4, 1),
        ] {
            let g = special(name).unwrap();
            assert_eq!(g.size(), 12 + big + small);
            assert_eq!(g.edges_within(0b1110000), small);
            assert!((4..7).all(|v| g.degree(v) <= 5));
            assert!(g.max_degree() <= 5 && g.min_degree() >= 4);
        }
    }

    #[test]
    fn figure_graphs_match_oracle() {
        for name in ["K43_30", "K43_31", "K43_40", "K43_41", "Gamma1"] {
            let derived = derive_special(name).unwrap();
            assert!(is_isomorphic(&derived, &special(name).unwrap()), "{name}");
        }
        let k43 = special("K43_30").unwrap();
        assert_eq!((k43.order(), k43.size()), (7, 15));
    }

    #[test]
    fn c27_plus_e_choice_is_irrelevant() {
        let c = construct(Family::Square(7)).unwrap();
        let base = special("C27_plus_e").unwrap();
        for (u, v) in [(0, 3), (1, 4), (2, 5), (3, 6), (4, 0), (5, 1), (6, 2)] {
            assert!(is_isomorphic(&c.add_edge(u, v).unwrap(), &base));
        }
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.len(), 14);
        let profile: Vec<usize> = (5..=8)
            .map(|n| cat.iter().filter(|e| e.order == n).count())
            .collect();
        assert_eq!(profile, vec![1, 4, 8, 1]);
        for e in cat {
            assert!(e.graph.max_degree() <= 5, "{}", e.name);
        }
        assert_eq!(catalog_forms().len(), 14);
    }

    #[test]
    fn lookup() {
        assert_eq!(catalog_lookup(&Graph::complete(5)), Some("C2_5"));
        assert_eq!(catalog_lookup(&special("petersen").unwrap()), None);
        assert_eq!(
            catalog_lookup(&special("octahedron").unwrap()),
            Some("C2_6")
        );
    }

    #[test]
    fn named_parsing() {
        assert_eq!(
            parse_named("w6").unwrap(),
            construct(Family::Wheel(6)).unwrap()
        );
        assert_eq!(
            parse_named("W_6").unwrap(),
            construct(Family::Wheel(6)).unwrap()
        );
        assert_eq!(
            parse_named("C2_9").unwrap(),
            construct(Family::Square(9)).unwrap()
        );
        assert_eq!(parse_named("k33").unwrap(), special("k33").unwrap());
        assert_eq!(
            parse_named("k3,4").unwrap(),
            construct(Family::CompleteBipartite(3, 4)).unwrap()
        );
        assert_eq!(
            parse_named("DW+_4").unwrap(),
            construct(Family::DoubleWheelPlus(4)).unwrap()
        );
        assert_eq!(parse_named("gamma1").unwrap(), special("Gamma1").unwrap());
        assert_eq!(parse_named("K6-e").unwrap(), special("K6_minus_e").unwrap());
        assert!(parse_named("zz9").is_err());
        assert!(parse_named("c_2").is_err());
    }
}
