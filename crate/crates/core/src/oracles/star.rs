//! Largest induced star `s(G)`: the maximum, over all vertices `v`, of the
//! independence number of the subgraph induced by the open neighborhood of `v`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::{Budget, SearchLimits};

/// Center plus pairwise non-adjacent leaves, all adjacent to the center.
///
/// `degenerate` marks the conventional certificates for graphs with no
/// genuine star (at most two vertices and no edge, or no edges at all).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarCertificate {
    pub center: usize,
    pub leaves: VertexSet,
    #[serde(default)]
    pub degenerate: bool,
}

impl StarCertificate {
    pub fn new(center: usize, mut leaves: VertexSet) -> Self {
        leaves.sort_unstable();
        Self {
            center,
            leaves,
            degenerate: false,
        }
    }

    pub fn degenerate() -> Self {
        Self {
            center: 0,
            leaves: Vec::new(),
            degenerate: true,
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// Checks that `{center} ∪ leaves` induces a star in `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        if self.degenerate {
            return if self.leaves.is_empty() {
                Ok(())
            } else {
                Err("degenerate certificate must have no leaves".into())
            };
        }
        if self.leaves.is_empty() {
            return Err("star has no leaves".into());
        }
        if self.center >= g.n() {
            return Err(format!("center {} out of range", self.center));
        }
        for (i, &l) in self.leaves.iter().enumerate() {
            if l >= g.n() {
                return Err(format!("leaf {l} out of range"));
            }
            if l == self.center {
                return Err(format!("center {l} listed as a leaf"));
            }
            if !g.has_edge(self.center, l) {
                return Err(format!("leaf {l} not adjacent to center {}", self.center));
            }
            for &m in &self.leaves[i + 1..] {
                if m == l {
                    return Err(format!("leaf {l} repeated"));
                }
                if g.has_edge(l, m) {
                    return Err(format!("leaves {l} and {m} are adjacent"));
                }
            }
        }
        Ok(())
    }
}

/// `s(G)` with a witness, under [`SearchLimits::star`].
pub fn s_exact(g: &Graph) -> Result<(usize, StarCertificate)> {
    s_exact_with_limits(g, &SearchLimits::star())
}

pub fn s_exact_with_limits(g: &Graph, limits: &SearchLimits) -> Result<(usize, StarCertificate)> {
    let n = g.n();
    limits.check_n(n, "s_exact")?;
    if n <= 2 {
        let cert = match g.edges().next() {
            Some((u, v)) => StarCertificate::new(u, vec![v]),
            None => StarCertificate::degenerate(),
        };
        return Ok((1, cert));
    }
    let mut budget = limits.budget("s_exact");
    let mut best = 0usize;
    let mut cert = StarCertificate::degenerate();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        if nbrs.len() <= best {
            continue;
        }
        let (size, set) = max_independent_subset(g, &nbrs, best, &mut budget)?;
        if size > best {
            best = size;
            cert = StarCertificate::new(v, set);
        }
    }
    Ok((best, cert))
}

/// Maximum independent subset of `vertices` in `g`, searching only for sets
/// larger than `floor`. Returns `(floor, [])` when none is larger.
pub(crate) fn max_independent_subset(
    g: &Graph,
    vertices: &[usize],
    floor: usize,
    budget: &mut Budget,
) -> Result<(usize, VertexSet)> {
    let d = vertices.len();
    if d > 128 {
        return Err(Error::LimitExceeded(format!(
            "independent-set search over {d} vertices (at most 128 supported)"
        )));
    }
    let local: Vec<u128> = vertices
        .iter()
        .map(|&u| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(u, w))
                .fold(0u128, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let all = if d == 128 { u128::MAX } else { (1u128 << d) - 1 };
    let mut mis = Mis {
        adj: &local,
        best: floor,
        best_set: 0,
        budget,
    };
    mis.search(all, 0, 0)?;
    let set = (0..d).filter(|&j| mis.best_set >> j & 1 == 1).map(|j| vertices[j]).collect();
    Ok((mis.best, set))
}

struct Mis<'a> {
    adj: &'a [u128],
    best: usize,
    best_set: u128,
    budget: &'a mut Budget,
}

impl Mis<'_> {
    fn search(&mut self, mut cand: u128, mut chosen: u128, mut size: usize) -> Result<()> {
        self.budget.tick()?;
        loop {
            if size + cand.count_ones() as usize <= self.best {
                return Ok(());
            }
            if cand == 0 {
                self.best = size;
                self.best_set = chosen;
                return Ok(());
            }
            // Pivot on a minimum-degree candidate (lowest index on ties).
            let (pivot, deg) = ones(cand)
                .map(|v| (v, (self.adj[v] & cand).count_ones()))
                .min_by_key(|&(v, d)| (d, v))
                .expect("cand nonempty");
            if deg <= 1 {
                // Some maximum independent set contains a vertex of degree <= 1.
                chosen |= 1 << pivot;
                size += 1;
                cand &= !(self.adj[pivot] | 1 << pivot);
                continue;
            }
            // Every maximal independent set meets the closed neighborhood of
            // the pivot; branch on which of those vertices is taken first.
            let branch = (self.adj[pivot] | 1 << pivot) & cand;
            let mut excluded = 0u128;
            for u in ones(branch) {
                let next = cand & !excluded & !(self.adj[u] | 1 << u);
                self.search(next, chosen | 1 << u, size + 1)?;
                excluded |= 1 << u;
            }
            return Ok(());
        }
    }
}

fn ones(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}
