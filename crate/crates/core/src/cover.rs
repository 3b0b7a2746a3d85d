//! Ordered clique covers, their width, the clique cover graph, and vertex
//! orderings with exact bandwidth.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::layout::{self, PartShape};
use crate::limits::SearchLimits;

/// A sequence of vertex-disjoint cliques `C_0, ..., C_t` covering the graph.
///
/// Construction only normalizes (each part is sorted); validity against a
/// host graph is checked by [`validate_cover`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderedCliqueCover {
    parts: Vec<VertexSet>,
}

impl OrderedCliqueCover {
    pub fn new(mut parts: Vec<VertexSet>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    /// Part index of each vertex in `0..n`; `None` for uncovered vertices.
    /// Vertices outside `0..n` are ignored.
    pub fn part_index(&self, n: usize) -> Vec<Option<usize>> {
        let mut idx = vec![None; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v < n {
                    idx[v] = Some(i);
                }
            }
        }
        idx
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverViolation {
    OutOfRange { vertex: usize },
    Uncovered { vertex: usize },
    DoublyCovered { vertex: usize, parts: (usize, usize) },
    EmptyPart { part: usize },
    NotAClique { part: usize, witness: (usize, usize) },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Self::Uncovered { vertex } => write!(f, "vertex {vertex} uncovered"),
            Self::DoublyCovered { vertex, parts } => {
                write!(f, "vertex {vertex} in parts {} and {}", parts.0, parts.1)
            }
            Self::EmptyPart { part } => write!(f, "part {part} is empty"),
            Self::NotAClique { part, witness } => {
                write!(f, "part {part} not a clique: {} and {} non-adjacent", witness.0, witness.1)
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub violations: Vec<CoverViolation>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            let msgs: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
            Err(Error::InvalidCover(msgs.join("; ")))
        }
    }
}

pub fn validate_cover(g: &Graph, c: &OrderedCliqueCover) -> CoverReport {
    let n = g.n();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, part) in c.parts.iter().enumerate() {
        if part.is_empty() {
            violations.push(CoverViolation::EmptyPart { part: i });
        }
        for &v in part {
            if v >= n {
                violations.push(CoverViolation::OutOfRange { vertex: v });
                continue;
            }
            match owner[v] {
                Some(j) => violations.push(CoverViolation::DoublyCovered { vertex: v, parts: (j, i) }),
                None => owner[v] = Some(i),
            }
        }
        let in_range: Vec<usize> = part.iter().copied().filter(|&v| v < n).collect();
        'pairs: for (a, &u) in in_range.iter().enumerate() {
            for &v in &in_range[a + 1..] {
                if u != v && !g.has_edge(u, v) {
                    violations.push(CoverViolation::NotAClique { part: i, witness: (u, v) });
                    break 'pairs;
                }
            }
        }
    }
    for (v, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(CoverViolation::Uncovered { vertex: v });
        }
    }
    CoverReport { violations }
}

/// Width `W(C)`: the largest part-index gap spanned by an edge, 0 when no
/// edge crosses parts.
pub fn cover_width(g: &Graph, c: &OrderedCliqueCover) -> Result<usize> {
    validate_cover(g, c).into_result()?;
    Ok(width_unchecked(g, c))
}

pub(crate) fn width_unchecked(g: &Graph, c: &OrderedCliqueCover) -> usize {
    let idx = c.part_index(g.n());
    g.edges()
        .map(|(u, v)| match (idx[u], idx[v]) {
            (Some(i), Some(j)) => i.abs_diff(j),
            _ => 0,
        })
        .max()
        .unwrap_or(0)
}

/// The clique cover graph `G(C)`: vertex `i` is part `C_i`.
pub fn quotient_graph(g: &Graph, c: &OrderedCliqueCover) -> Result<Graph> {
    validate_cover(g, c).into_result()?;
    let idx = c.part_index(g.n());
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| {
            let (i, j) = (idx[u]?, idx[v]?);
            (i != j).then_some((i, j))
        })
        .collect();
    Graph::new(c.len(), edges)
}

/// Singletons in index order.
pub fn trivial_cover(g: &Graph) -> OrderedCliqueCover {
    OrderedCliqueCover::new((0..g.n()).map(|v| vec![v]).collect())
}

/// A linear ordering `v_0, ..., v_{n-1}` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ordering(Vec<usize>);

impl Ordering {
    pub fn new(perm: Vec<usize>) -> Self {
        Self(perm)
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Position of each vertex, or an error if this is not a permutation of `0..n`.
    pub fn positions(&self, n: usize) -> Result<Vec<usize>> {
        if self.0.len() != n {
            return Err(Error::NotAPermutation(format!(
                "length {} for {n} vertices",
                self.0.len()
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v >= n {
                return Err(Error::NotAPermutation(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::NotAPermutation(format!("vertex {v} repeated")));
            }
            pos[v] = i;
        }
        Ok(pos)
    }
}

pub fn ordering_width(g: &Graph, l: &Ordering) -> Result<usize> {
    let pos = l.positions(g.n())?;
    Ok(g.edges().map(|(u, v)| pos[u].abs_diff(pos[v])).max().unwrap_or(0))
}

/// Exact bandwidth with the lexicographically smallest optimal ordering.
pub fn bandwidth_exact(g: &Graph, limits: &SearchLimits) -> Result<(usize, Ordering)> {
    let n = g.n();
    limits.check_n(n, "bandwidth_exact")?;
    let adj = g
        .adjacency_masks()
        .ok_or_else(|| Error::LimitExceeded("bandwidth_exact supports at most 64 vertices".into()))?;
    let mut budget = limits.budget("bandwidth_exact");
    let lower = (0..n).map(|v| g.degree(v).div_ceil(2)).max().unwrap_or(0);
    for w in lower..n.max(1) {
        if let Some(parts) = layout::find_layout(&adj, w, PartShape::Singleton, &mut budget)? {
            let perm = parts.iter().map(|m| m.trailing_zeros() as usize).collect();
            return Ok((w, Ordering(perm)));
        }
    }
    unreachable!("width n-1 is always feasible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn p3() -> Graph {
        generators::path(3)
    }

    fn cover(parts: &[&[usize]]) -> OrderedCliqueCover {
        OrderedCliqueCover::new(parts.iter().map(|p| p.to_vec()).collect())
    }

    #[test]
    fn validate_examples() {
        assert!(validate_cover(&p3(), &cover(&[&[0, 1], &[2]])).is_valid());
        let r = validate_cover(&p3(), &cover(&[&[0, 2], &[1]]));
        assert_eq!(r.violations, vec![CoverViolation::NotAClique { part: 0, witness: (0, 2) }]);
        let r = validate_cover(&p3(), &cover(&[&[0, 1]]));
        assert_eq!(r.violations, vec![CoverViolation::Uncovered { vertex: 2 }]);
        let r = validate_cover(&p3(), &cover(&[&[0, 1], &[1, 2]]));
        assert!(r.violations.contains(&CoverViolation::DoublyCovered { vertex: 1, parts: (0, 1) }));
        let r = validate_cover(&p3(), &cover(&[&[0, 1], &[2], &[]]));
        assert_eq!(r.violations, vec![CoverViolation::EmptyPart { part: 2 }]);
    }

    #[test]
    fn width_examples() {
        let (g, c) = generators::three_clique_chain();
        assert_eq!(cover_width(&g, &c).unwrap(), 1);
        assert_eq!(cover_width(&generators::complete(4), &cover(&[&[0, 1, 2, 3]])).unwrap(), 0);
        let c5 = generators::cycle(5);
        assert_eq!(cover_width(&c5, &trivial_cover(&c5)).unwrap(), 4);
        assert!(matches!(cover_width(&p3(), &cover(&[&[0, 2], &[1]])), Err(Error::InvalidCover(_))));
    }

    #[test]
    fn quotient_examples() {
        let p4 = generators::path(4);
        let q = quotient_graph(&p4, &cover(&[&[0, 1], &[2, 3]])).unwrap();
        assert_eq!(q, generators::complete(2));
        let (g, c) = generators::three_clique_chain();
        assert_eq!(quotient_graph(&g, &c).unwrap(), generators::path(3));
        let two_k2 = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let q = quotient_graph(&two_k2, &cover(&[&[0, 2], &[1, 3]])).unwrap();
        assert_eq!(q, Graph::empty(2));
    }

    #[test]
    fn ordering_width_examples() {
        assert_eq!(ordering_width(&p3(), &Ordering::new(vec![0, 1, 2])).unwrap(), 1);
        assert_eq!(ordering_width(&p3(), &Ordering::new(vec![1, 0, 2])).unwrap(), 2);
        let k4 = generators::complete(4);
        assert_eq!(ordering_width(&k4, &Ordering::new(vec![2, 0, 3, 1])).unwrap(), 3);
        assert!(matches!(
            ordering_width(&p3(), &Ordering::new(vec![0, 0, 2])),
            Err(Error::NotAPermutation(_))
        ));
        assert!(ordering_width(&p3(), &Ordering::new(vec![0, 1])).is_err());
    }

    #[test]
    fn bandwidth_examples() {
        let limits = SearchLimits::bandwidth();
        let (bw, l) = bandwidth_exact(&generators::path(5), &limits).unwrap();
        assert_eq!(bw, 1);
        assert_eq!(l.as_slice(), &[0, 1, 2, 3, 4]);
        let (bw, l) = bandwidth_exact(&generators::star(4), &limits).unwrap();
        assert_eq!(bw, 2);
        assert_eq!(ordering_width(&generators::star(4), &l).unwrap(), 2);
        for n in 1..7 {
            assert_eq!(bandwidth_exact(&generators::complete(n), &limits).unwrap().0, n - 1);
        }
        assert_eq!(bandwidth_exact(&Graph::empty(0), &limits).unwrap().0, 0);
        assert!(matches!(
            bandwidth_exact(&generators::path(13), &limits),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn trivial_cover_examples() {
        assert_eq!(trivial_cover(&p3()), cover(&[&[0], &[1], &[2]]));
        assert_eq!(trivial_cover(&Graph::empty(2)), cover(&[&[0], &[1]]));
        let k3 = generators::complete(3);
        assert_eq!(cover_width(&k3, &trivial_cover(&k3)).unwrap(), 2);
    }
}
