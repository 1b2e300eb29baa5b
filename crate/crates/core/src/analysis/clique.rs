//! Enumeration of 4-cliques.

use crate::coords::QubitCoord;
use crate::graph::TopologyGraph;
use alloc::vec::Vec;

/// Enumerates 4-cliques in ascending vertex order, returning at most
/// `limit` of them. Each quadruple is reported as coordinates sorted
/// ascending, so output order is deterministic.
pub fn find_k4(g: &TopologyGraph, limit: usize) -> Vec<[QubitCoord; 4]> {
    let mut cliques = Vec::new();
    if limit == 0 {
        return cliques;
    }
    for a in 0..g.vertex_count() as u32 {
        for &b in g.neighbors(a as usize).iter().filter(|&&b| b > a) {
            let ab = above(intersect(g.neighbors(a as usize), g.neighbors(b as usize)), b);
            for (pos, &c) in ab.iter().enumerate() {
                // Candidates beyond c that neighbor a, b, and c.
                for &d in intersect(&ab[pos + 1..], g.neighbors(c as usize)).iter() {
                    cliques.push([
                        g.coord(a as usize).expect("index in range"),
                        g.coord(b as usize).expect("index in range"),
                        g.coord(c as usize).expect("index in range"),
                        g.coord(d as usize).expect("index in range"),
                    ]);
                    if cliques.len() == limit {
                        return cliques;
                    }
                }
            }
        }
    }
    cliques
}

/// Intersection of two sorted slices.
fn intersect(lhs: &[u32], rhs: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut p, mut q) = (0, 0);
    while p < lhs.len() && q < rhs.len() {
        match lhs[p].cmp(&rhs[q]) {
            core::cmp::Ordering::Less => p += 1,
            core::cmp::Ordering::Greater => q += 1,
            core::cmp::Ordering::Equal => {
                out.push(lhs[p]);
                p += 1;
                q += 1;
            }
        }
    }
    out
}

fn above(mut values: Vec<u32>, floor: u32) -> Vec<u32> {
    values.retain(|&v| v > floor);
    values
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chimera::chimera_graph;
    use crate::coords::Dims;
    use crate::pegasus::{has_edge, pegasus_graph};

    #[test]
    fn zero_limit_returns_nothing() {
        let g = pegasus_graph(Dims::pegasus(1, 1).unwrap()).unwrap();
        assert!(find_k4(&g, 0).is_empty());
    }

    #[test]
    fn chimera_has_no_4_cliques() {
        let g = chimera_graph(Dims::chimera(2, 2).unwrap());
        assert!(find_k4(&g, usize::MAX).is_empty());
    }

    #[test]
    fn known_pegasus_clique_is_found_and_sound() {
        let d = Dims::pegasus(1, 1).unwrap();
        let g = pegasus_graph(d).unwrap();
        let cliques = find_k4(&g, usize::MAX);
        let expected = [
            QubitCoord::new(0, 0, 0, 0, 0, 0),
            QubitCoord::new(0, 0, 0, 0, 0, 1),
            QubitCoord::new(0, 0, 0, 1, 0, 0),
            QubitCoord::new(0, 0, 0, 1, 0, 1),
        ];
        assert!(cliques.contains(&expected));
        for clique in &cliques {
            for p in 0..4 {
                for q in p + 1..4 {
                    assert!(has_edge(clique[p], clique[q], d).is_some());
                }
            }
        }
    }

    #[test]
    fn limit_truncates_deterministically() {
        let g = pegasus_graph(Dims::pegasus(1, 1).unwrap()).unwrap();
        let all = find_k4(&g, usize::MAX);
        let some = find_k4(&g, 3);
        assert_eq!(some.as_slice(), &all[..3]);
    }
}
