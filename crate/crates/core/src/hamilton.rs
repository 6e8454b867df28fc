//! Hamiltonian cycles and degree-sequence criteria.

use crate::canon::is_isomorphic;
use crate::constructors::special;
use crate::error::{Error, Result};
use crate::graph::{bit, Bits, DegreeSequence, Graph};

/// A cycle through every vertex, listed from vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonCycle(pub Vec<usize>);

impl HamiltonCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Length `n`, no repeats, and every consecutive pair (cyclically) an edge.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let c = &self.0;
        if n < 3 || c.len() != n {
            return false;
        }
        let seen = c.iter().try_fold(0u64, |m, &v| {
            (v < n && m & bit(v) == 0).then_some(m | bit(v))
        });
        seen.is_some() && (0..n).all(|i| g.has_edge(c[i], c[(i + 1) % n]))
    }
}

struct CycleSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    visited: u64,
}

impl<'a> CycleSearch<'a> {
    /// Every unvisited vertex needs two usable neighbours among the
    /// unvisited vertices and the two path ends.
    fn degrees_ok(&self) -> bool {
        let end = *self.path.last().expect("nonempty path");
        let start = self.path[0];
        let usable = !self.visited | bit(end) | bit(start);
        Bits(self.g.vertex_mask() & !self.visited)
            .all(|w| (self.g.neighbor_mask(w) & usable).count_ones() >= 2)
    }

    fn extend(&mut self) -> bool {
        let n = self.g.order();
        let end = *self.path.last().expect("nonempty path");
        if self.path.len() == n {
            return self.g.has_edge(end, self.path[0]);
        }
        let start = self.path[0];
        let usable = !self.visited | bit(end) | bit(start);
        let mut choices = self.g.neighbor_mask(end) & !self.visited & self.g.vertex_mask();
        // an unvisited neighbour whose only other option is one vertex must come next
        let forced: Vec<usize> = Bits(choices)
            .filter(|&w| (self.g.neighbor_mask(w) & usable).count_ones() == 2)
            .collect();
        if self.path.len() > 1 {
            match forced.len() {
                0 => {}
                1 => choices = bit(forced[0]),
                _ => return false,
            }
        }
        for w in Bits(choices) {
            self.path.push(w);
            self.visited |= bit(w);
            if self.degrees_ok() && self.extend() {
                return true;
            }
            self.visited &= !bit(w);
            self.path.pop();
        }
        false
    }
}

/// Backtracking search from vertex 0 in increasing neighbour order.
pub fn find_hamiltonian_cycle(g: &Graph) -> Option<HamiltonCycle> {
    let n = g.order();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut s = CycleSearch {
        g,
        path: vec![0],
        visited: bit(0),
    };
    s.extend().then_some(HamiltonCycle(s.path))
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    find_hamiltonian_cycle(g).is_some()
}

/// Chvátal's condition: for every `i < n/2`, `d_i >= i + 1` or
/// `d_{n-i} >= n - i`.
pub fn chvatal_holds(d: &DegreeSequence) -> Result<bool> {
    let n = d.len();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "Chvátal's condition needs at least 3 vertices, got {n}"
        )));
    }
    Ok((1..n)
        .take_while(|&i| 2 * i < n)
        .all(|i| d.d(i) > i || d.d(n - i) >= n - i))
}

/// Outcome of the six-vertex classification with exactly two vertices of
/// degree 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeTwoPairClass {
    Hamiltonian,
    /// The degree-2 vertices are nonadjacent with the same two neighbours.
    SharedNeighborsException,
    /// Isomorphic to `J`.
    JException,
}

/// Classifies a six-vertex graph with `d1 = d2 = 2` and `d3 >= 3`.
pub fn classify_degree_two_pair(g: &Graph) -> Result<DegreeTwoPairClass> {
    let d = g.degree_sequence();
    if g.order() != 6 || d.d(1) != 2 || d.d(2) != 2 || d.d(3) < 3 {
        return Err(Error::Precondition(format!(
            "expected 6 vertices with degrees 2, 2 then at least 3, got {d}"
        )));
    }
    if is_hamiltonian(g) {
        return Ok(DegreeTwoPairClass::Hamiltonian);
    }
    let low: Vec<usize> = (0..6).filter(|&v| g.degree(v) == 2).collect();
    let (x, y) = (low[0], low[1]);
    if !g.has_edge(x, y) && g.neighbor_mask(x) == g.neighbor_mask(y) {
        return Ok(DegreeTwoPairClass::SharedNeighborsException);
    }
    if is_isomorphic(g, &special("J")?) {
        return Ok(DegreeTwoPairClass::JException);
    }
    Err(Error::Unclassified(crate::graph6::emit_graph6(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{construct, Family};

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    /// Exhaustive Hamiltonicity by trying all permutations starting at 0.
    fn brute_hamiltonian(g: &Graph) -> bool {
        let n = g.order();
        if n < 3 {
            return false;
        }
        let mut rest: Vec<usize> = (1..n).collect();
        fn perms(k: usize, a: &mut Vec<usize>, g: &Graph) -> bool {
            if k == a.len() {
                let n = g.order();
                let cyc: Vec<usize> = std::iter::once(0).chain(a.iter().copied()).collect();
                return (0..n).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % n]));
            }
            for i in k..a.len() {
                a.swap(k, i);
                if perms(k + 1, a, g) {
                    return true;
                }
                a.swap(k, i);
            }
            false
        }
        perms(0, &mut rest, g)
    }

    #[test]
    fn examples() {
        let c6 = construct(Family::Cycle(6)).unwrap();
        assert_eq!(
            find_hamiltonian_cycle(&c6).unwrap().vertices(),
            &[0, 1, 2, 3, 4, 5]
        );
        assert!(find_hamiltonian_cycle(&special("J").unwrap()).is_none());
        let oct = special("octahedron").unwrap();
        let c = find_hamiltonian_cycle(&oct).unwrap();
        assert!(c.is_valid_for(&oct));
        assert!(!is_hamiltonian(&special("petersen").unwrap()));
        assert!(is_hamiltonian(&special("cube").unwrap()));
        assert!(!is_hamiltonian(
            &construct(Family::CompleteBipartite(3, 4)).unwrap()
        ));
    }

    #[test]
    fn agrees_with_permutation_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(3..=8);
            let p = rng.gen_range(0.25..0.8);
            let mut g = Graph::empty(n);
            for j in 0..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.insert(i, j);
                    }
                }
            }
            let found = find_hamiltonian_cycle(&g);
            assert_eq!(found.is_some(), brute_hamiltonian(&g), "{g:?}");
            if let Some(c) = found {
                assert!(c.is_valid_for(&g));
            }
        }
    }

    #[test]
    fn chvatal_examples() {
        assert!(chvatal_holds(&seq(&[5, 5, 5, 5, 5, 5])).unwrap());
        assert!(chvatal_holds(&seq(&[2, 3, 3, 3, 3, 3])).unwrap());
        assert!(!chvatal_holds(&seq(&[2, 2, 2, 3, 3, 3])).unwrap());
        assert!(chvatal_holds(&seq(&[1, 1])).is_err());
    }

    #[test]
    fn degree_two_pair_examples() {
        assert_eq!(
            classify_degree_two_pair(&special("J").unwrap()).unwrap(),
            DegreeTwoPairClass::JException
        );
        // x = 0, y = 1 both on {2, 3}; 2, 3, 4, 5 complete
        let shared = Graph::from_edges(
            6,
            [
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap();
        assert_eq!(
            classify_degree_two_pair(&shared).unwrap(),
            DegreeTwoPairClass::SharedNeighborsException
        );
        // C6 plus chords 1-4 and 2-5; the degree-2 vertices 0 and 3 have
        // different neighbour pairs
        let ham = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(ham.degree_sequence().as_slice(), &[2, 2, 3, 3, 3, 3]);
        assert_eq!(
            classify_degree_two_pair(&ham).unwrap(),
            DegreeTwoPairClass::Hamiltonian
        );
        assert!(classify_degree_two_pair(&Graph::complete(6)).is_err());
    }
}
