//! Unit incomparability dimension at tiny scale.
//!
//! A supergraph `H` of `g` with `CCW(H) <= 1` is witnessed by an ordered
//! partition of the vertices whose parts are cliques of `H` and where `H`
//! only has edges inside parts or between consecutive parts. The most
//! non-edges of `g` such an `H` can omit are exactly the non-edges of `g`
//! that cross parts, and an ordering of the parts exists iff `g` contracted
//! along the partition is a disjoint union of paths. So `Udim(g)` is the
//! minimum number of such partitions whose crossing non-edges cover all
//! non-edges of `g`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, SearchLimits};

pub fn udim_tiny(g: &Graph, limits: &SearchLimits) -> Result<usize> {
    let n = g.n();
    limits.check_n(n, "udim_tiny")?;
    if !g.is_connected() {
        return Err(Error::InvalidArgument("udim_tiny requires a connected graph".into()));
    }
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    if non_edges.is_empty() {
        return Ok(1);
    }
    if non_edges.len() > 63 {
        return Err(Error::LimitExceeded("udim_tiny: more than 63 non-edges".into()));
    }
    let mut budget = limits.budget("udim_tiny");
    let sets = maximal_coverage_sets(g, &non_edges, &mut budget)?;
    let full = (1u64 << non_edges.len()) - 1;
    min_cover(&sets, full, &mut budget)
}

/// Coverage masks (over `non_edges`) of all admissible partitions, reduced
/// to the inclusion-maximal ones.
fn maximal_coverage_sets(g: &Graph, non_edges: &[(usize, usize)], budget: &mut Budget) -> Result<Vec<u64>> {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut found: HashSet<u64> = HashSet::new();
    // Restricted growth strings enumerate set partitions.
    loop {
        budget.tick()?;
        if path_forest_quotient(g, &label) {
            let mask = non_edges
                .iter()
                .enumerate()
                .filter(|&(_, &(u, v))| label[u] != label[v])
                .fold(0u64, |m, (i, _)| m | 1 << i);
            found.insert(mask);
        }
        if !next_partition(&mut label) {
            break;
        }
    }
    let mut sets: Vec<u64> = found.into_iter().collect();
    sets.sort_unstable_by_key(|m| (std::cmp::Reverse(m.count_ones()), *m));
    let mut maximal: Vec<u64> = Vec::new();
    for m in sets {
        if !maximal.iter().any(|&k| m & !k == 0) {
            maximal.push(m);
        }
    }
    Ok(maximal)
}

fn next_partition(label: &mut [usize]) -> bool {
    let n = label.len();
    for i in (1..n).rev() {
        let max_prefix = label[..i].iter().copied().max().unwrap_or(0);
        if label[i] <= max_prefix {
            label[i] += 1;
            for x in &mut label[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

/// Whether contracting each label class yields a disjoint union of paths.
fn path_forest_quotient(g: &Graph, label: &[usize]) -> bool {
    let k = label.iter().copied().max().map_or(0, |m| m + 1);
    let mut adj = vec![0u64; k];
    for (u, v) in g.edges() {
        let (a, b) = (label[u], label[v]);
        if a != b {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
    }
    if adj.iter().any(|m| m.count_ones() > 2) {
        return false;
    }
    // A graph with maximum degree 2 is a union of paths iff it is acyclic.
    let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    let mut seen = 0u64;
    let mut components = 0u32;
    for s in 0..k {
        if seen >> s & 1 == 1 {
            continue;
        }
        components += 1;
        let mut stack = vec![s];
        seen |= 1 << s;
        while let Some(v) = stack.pop() {
            let mut next = adj[v] & !seen;
            seen |= next;
            while next != 0 {
                stack.push(next.trailing_zeros() as usize);
                next &= next - 1;
            }
        }
    }
    edges + components == k as u32
}

/// Fewest sets whose union is `full`, by breadth-first search over unions.
fn min_cover(sets: &[u64], full: u64, budget: &mut Budget) -> Result<usize> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut frontier = vec![0u64];
    seen.insert(0);
    for depth in 1..=sets.len() {
        let mut next = Vec::new();
        for &cur in &frontier {
            for &s in sets {
                budget.tick()?;
                let u = cur | s;
                if u == full {
                    return Ok(depth);
                }
                if seen.insert(u) {
                    next.push(u);
                }
            }
        }
        frontier = next;
    }
    unreachable!("the discrete partition covers every non-edge")
}
