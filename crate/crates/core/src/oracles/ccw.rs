use crate::cover::OrderedCliqueCover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{self, mask_to_vec, PartShape};
use crate::limits::{Budget, SearchLimits};
use crate::oracles::star::s_exact;

/// Exact clique cover width with an optimal ordered cover.
///
/// Components are solved independently and their covers concatenated in
/// component order; the width is the maximum over components. Within a
/// component the candidate width starts at the induced-star lower bound
/// `⌈s/2⌉ - 1` (and at 1 for non-cliques) and increases until a layout is
/// found.
pub fn ccw_exact(g: &Graph, limits: &SearchLimits) -> Result<(usize, OrderedCliqueCover)> {
    limits.check_n(g.n(), "ccw_exact")?;
    let mut budget = limits.budget("ccw_exact");
    let mut width = 0;
    let mut parts = Vec::new();
    for comp in g.components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let (w, local) = component_ccw(&sub, &mut budget)?;
        width = width.max(w);
        parts.extend(local.into_iter().map(|m| mask_to_vec(m).into_iter().map(|v| map[v]).collect()));
    }
    Ok((width, OrderedCliqueCover::new(parts)))
}

fn masks(g: &Graph, what: &str) -> Result<Vec<u64>> {
    g.adjacency_masks()
        .ok_or_else(|| Error::LimitExceeded(format!("{what} supports components of at most 64 vertices")))
}

fn component_ccw(sub: &Graph, budget: &mut Budget) -> Result<(usize, Vec<u64>)> {
    let adj = masks(sub, "ccw_exact")?;
    if sub.is_clique() {
        let all = if sub.n() == 64 { u64::MAX } else { (1u64 << sub.n()) - 1 };
        return Ok((0, vec![all]));
    }
    let (s, _) = s_exact(sub)?;
    let lower = (s.div_ceil(2)).saturating_sub(1).max(1);
    for w in lower..sub.n() {
        if let Some(parts) = layout::find_layout(&adj, w, PartShape::Clique, budget)? {
            return Ok((w, parts));
        }
    }
    unreachable!("singleton parts give width at most n - 1")
}

/// `CCW(g) <= 1`. Cliques (width 0) count as unit incomparability graphs.
pub fn is_unit_incomparability(g: &Graph, limits: &SearchLimits) -> Result<bool> {
    limits.check_n(g.n(), "is_unit_incomparability")?;
    let mut budget = limits.budget("is_unit_incomparability");
    for comp in g.components() {
        let (sub, _) = g.induced_subgraph(&comp)?;
        if sub.is_clique() {
            continue;
        }
        let adj = masks(&sub, "is_unit_incomparability")?;
        if layout::find_layout(&adj, 1, PartShape::Clique, &mut budget)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
