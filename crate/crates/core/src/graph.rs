//! Simple undirected graphs on the vertex set `0..n`.
//!
//! Adjacency is stored as one bit-set per vertex. Graphs are immutable once
//! built; every operation that changes structure returns a new [`Graph`].

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A sorted list of vertex indices.
pub type VertexSet = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a simple graph from an edge list. Duplicate pairs collapse;
    /// `(u, u)` is rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 0..n {
            g.adj[v].insert_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// Builds a graph from per-vertex neighbor bit-masks (requires `n <= 64`).
    /// Bits at positions `>= n` and the diagonal are ignored; asymmetric masks
    /// are symmetrized.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64, "from_masks supports at most 64 vertices");
        let mut g = Self::empty(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in 0..n {
                if v != u && m >> v & 1 == 1 {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, sorted lexicographically.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v].toggle_range(..);
            g.adj[v].set(v, false);
        }
        g
    }

    /// The subgraph induced by `vertices`, relabeled `0..k` in the order
    /// given. Returns the graph together with the map from new to old index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        let mut mapping = Vec::with_capacity(vertices.len());
        for &v in vertices {
            self.check_vertex(v)?;
            if index[v] == usize::MAX {
                index[v] = mapping.len();
                mapping.push(v);
            }
        }
        let mut sub = Self::empty(mapping.len());
        for (i, &v) in mapping.iter().enumerate() {
            for w in self.adj[v].ones() {
                let j = index[w];
                if j != usize::MAX {
                    sub.adj[i].insert(j);
                }
            }
        }
        Ok((sub, mapping))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            seen.insert(root);
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.adj[v].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_clique(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// True if `vertices` are pairwise adjacent.
    pub fn is_clique_set(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True if `vertices` are pairwise non-adjacent.
    pub fn is_independent_set(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// True if every edge of `other` is an edge of `self` (same vertex count).
    pub fn is_supergraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| b.is_subset(a))
    }

    /// Edge-set intersection of graphs sharing one vertex set. `None` if the
    /// slice is empty or the vertex counts differ.
    pub fn intersection(graphs: &[Self]) -> Option<Self> {
        let (first, rest) = graphs.split_first()?;
        let mut out = first.clone();
        for g in rest {
            if g.n != out.n {
                return None;
            }
            for (a, b) in out.adj.iter_mut().zip(&g.adj) {
                a.intersect_with(b);
            }
        }
        Some(out)
    }

    /// Per-vertex neighbor masks, available when `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|a| a.ones().fold(0u64, |m, v| m | 1 << v))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
