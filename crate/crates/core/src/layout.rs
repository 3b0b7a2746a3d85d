//! Exact feasibility search shared by `bandwidth_exact` and `ccw_exact`.
//!
//! Both problems ask for a sequence of parts `P_0, P_1, ...` partitioning the
//! vertices so that every edge joins parts at index distance at most `w`.
//! Bandwidth restricts parts to single vertices, clique cover width requires
//! each part to be a clique. Parts are placed left to right; a part leaves the
//! window of the last `w` parts only once all of its neighbors are placed.

use std::collections::{HashSet, VecDeque};

use crate::error::Result;
use crate::limits::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PartShape {
    Singleton,
    Clique,
}

struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    w: usize,
    shape: PartShape,
    failed: HashSet<(u64, Vec<u64>)>,
    budget: &'a mut Budget,
}

/// Returns the first feasible layout (as part masks) in canonical branch
/// order, or `None` when no layout of width `<= w` exists.
pub(crate) fn find_layout(
    adj: &[u64],
    w: usize,
    shape: PartShape,
    budget: &mut Budget,
) -> Result<Option<Vec<u64>>> {
    let n = adj.len();
    assert!(n <= 64);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        adj,
        all,
        w,
        shape,
        failed: HashSet::new(),
        budget,
    };
    let mut parts = Vec::new();
    let mut window = VecDeque::new();
    if search.extend(0, &mut window, &mut parts)? {
        Ok(Some(parts))
    } else {
        Ok(None)
    }
}

#[inline]
fn neighborhood(adj: &[u64], set: u64) -> u64 {
    let mut out = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= adj[v];
    }
    out
}

#[inline]
fn is_clique(adj: &[u64], set: u64) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if set & !(1u64 << v) & !adj[v] != 0 {
            return false;
        }
    }
    true
}

impl Search<'_> {
    /// `window` holds the unplaced-neighbor demand of each of the last parts
    /// (oldest first), already restricted to unplaced vertices.
    fn extend(&mut self, placed: u64, window: &mut VecDeque<u64>, parts: &mut Vec<u64>) -> Result<bool> {
        self.budget.tick()?;
        if placed == self.all {
            return Ok(true);
        }
        let key = (placed, window.iter().copied().collect::<Vec<_>>());
        if self.failed.contains(&key) {
            return Ok(false);
        }

        let unplaced = self.all & !placed;
        let forced = if window.len() == self.w {
            window.front().copied().unwrap_or(0)
        } else {
            0
        };

        for part in self.candidates(unplaced, forced) {
            let next_placed = placed | part;
            let mut next_window: VecDeque<u64> = window.iter().map(|d| d & !part).collect();
            next_window.push_back(neighborhood(self.adj, part) & !next_placed);
            if next_window.len() > self.w {
                let expired = next_window.pop_front().unwrap_or(0);
                if expired != 0 {
                    continue;
                }
            }
            if !self.lookahead_ok(&next_window) {
                continue;
            }
            parts.push(part);
            if self.extend(next_placed, &mut next_window, parts)? {
                return Ok(true);
            }
            parts.pop();
        }

        self.failed.insert(key);
        Ok(false)
    }

    /// Demands that must be met within the next `k` parts must fit in `k` parts.
    fn lookahead_ok(&self, window: &VecDeque<u64>) -> bool {
        // The part at window position i (oldest = 0) expires after
        // `w - len + i + 1` more placements.
        let offset = self.w - window.len();
        let mut due = 0u64;
        for (i, &demand) in window.iter().enumerate() {
            due |= demand;
            let k = offset + i + 1;
            match self.shape {
                PartShape::Singleton => {
                    if due.count_ones() as usize > k {
                        return false;
                    }
                }
                PartShape::Clique => {
                    if k == 1 && !is_clique(self.adj, due) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Candidate next parts in canonical order.
    fn candidates(&self, unplaced: u64, forced: u64) -> Vec<u64> {
        match self.shape {
            PartShape::Singleton => match forced.count_ones() {
                0 => bits(unplaced).map(|v| 1u64 << v).collect(),
                1 => vec![forced],
                _ => Vec::new(),
            },
            PartShape::Clique => {
                if !is_clique(self.adj, forced) {
                    return Vec::new();
                }
                let mut common = unplaced & !forced;
                for v in bits(forced) {
                    common &= self.adj[v];
                }
                let mut out = Vec::new();
                self.cliques_from(forced, common, &mut out);
                out
            }
        }
    }

    /// All cliques `base ∪ Q` with `Q ⊆ cand`, include-first in index order.
    fn cliques_from(&self, base: u64, cand: u64, out: &mut Vec<u64>) {
        if cand == 0 {
            if base != 0 {
                out.push(base);
            }
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1u64 << v);
        self.cliques_from(base | 1u64 << v, rest & self.adj[v], out);
        self.cliques_from(base, rest, out);
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}
