//! Named graphs and seeded random instance families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::OrderedCliqueCover;
use crate::graph::Graph;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|l| (0, l))).expect("valid star")
}

/// `rows x cols` grid; vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("valid grid")
}

/// Three 4-cliques `{0..3}`, `{4..7}`, `{8..11}` chained by the edges
/// `0-4` and `4-8`, with the cover listing the cliques in that order.
pub fn three_clique_chain() -> (Graph, OrderedCliqueCover) {
    let blocks: Vec<Vec<usize>> = (0..3).map(|b| (4 * b..4 * b + 4).collect()).collect();
    let mut edges = vec![(0, 4), (4, 8)];
    for block in &blocks {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(12, edges).expect("valid chain");
    (g, OrderedCliqueCover::new(blocks))
}

/// Triangles `{0,1,2}` and `{3,4,5}` joined by the edge `2-3`.
pub fn two_triangles() -> Graph {
    Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]).expect("valid")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid gnp")
}

/// Rejection-samples `G(n, p)` until connected, advancing the seed.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut s = seed;
    loop {
        let g = random_gnp(n, p, s);
        if g.is_connected() {
            return g;
        }
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    }
}

/// Two cliques on a random bipartition with independent cross edges.
pub fn random_cobipartite(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] == side[v] || rng.random_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid cobipartite")
}

/// Random graph of clique cover width at most 1: vertices are dealt into a
/// random sequence of cliques and edges are added between consecutive
/// cliques with probability `density`.
pub fn random_unit_incomparability(n: usize, density: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in perm {
        if parts.is_empty() || rng.random_bool(0.5) {
            parts.push(vec![v]);
        } else {
            parts.last_mut().expect("nonempty").push(v);
        }
    }
    let mut edges = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                edges.push((u, v));
            }
        }
        if let Some(next) = parts.get(i + 1) {
            for &u in part {
                for &v in next {
                    if rng.random_bool(density.clamp(0.0, 1.0)) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::new(n, edges).expect("valid unit incomparability graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{cover_width, validate_cover};

    #[test]
    fn named_graphs() {
        assert_eq!(path(4).edge_count(), 3);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(star(5).degree(0), 5);
        let g = grid(4, 4);
        assert_eq!((g.n(), g.edge_count()), (16, 24));
        let (g, c) = three_clique_chain();
        assert!(validate_cover(&g, &c).is_valid());
        assert_eq!(g.edge_count(), 3 * 6 + 2);
        assert!(!two_triangles().is_clique());
        assert!(two_triangles().complement().edges().all(|(u, v)| (u < 3) != (v < 3)));
    }

    #[test]
    fn random_families_are_deterministic() {
        assert_eq!(random_gnp(12, 0.4, 3), random_gnp(12, 0.4, 3));
        assert_eq!(random_cobipartite(9, 0.3, 1), random_cobipartite(9, 0.3, 1));
        assert!(random_connected(10, 0.2, 5).is_connected());
    }

    #[test]
    fn cobipartite_complement_is_bipartite() {
        for seed in 0..20 {
            let g = random_cobipartite(8, 0.5, seed);
            let h = g.complement();
            // two-colour by BFS
            let mut colour = vec![None; 8];
            for s in 0..8 {
                if colour[s].is_some() {
                    continue;
                }
                colour[s] = Some(false);
                let mut stack = vec![s];
                while let Some(v) = stack.pop() {
                    for w in h.neighbors(v) {
                        match colour[w] {
                            None => {
                                colour[w] = Some(!colour[v].unwrap());
                                stack.push(w);
                            }
                            Some(c) => assert_ne!(Some(c), colour[v]),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unit_incomparability_family_has_a_width_one_cover() {
        for seed in 0..20 {
            let g = random_unit_incomparability(9, 0.5, seed);
            let (w, c) = crate::oracles::ccw_exact(&g, &crate::SearchLimits::ccw()).unwrap();
            assert!(w <= 1);
            assert_eq!(cover_width(&g, &c).unwrap(), w);
        }
    }
}
