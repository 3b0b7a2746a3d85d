//! Greedy clique covers of incomparability graphs.
//!
//! Given a transitive orientation `Ĝ` of the complement of `g`, layering the
//! vertices by the length of the longest directed path ending at them gives
//! an ordered clique cover of `g` (each layer is an antichain of `Ĝ`). Its
//! width `W` satisfies `s(g) - 1 >= W >= ⌈s(g)/2⌉ - 1`: walking back from the
//! far endpoint of a widest edge through one in-neighbor per layer yields an
//! induced star with `W + 1` leaves.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{cover_width, OrderedCliqueCover};
use crate::error::{Error, Result};
use crate::generators::rng;
use crate::graph::Graph;
use crate::limits::SearchLimits;
use crate::oracles::{find_transitive_orientation, Orientation, StarCertificate};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredCover {
    pub cover: OrderedCliqueCover,
    /// Layer of each vertex; 0 for sources.
    pub levels: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApproxResult {
    pub lower: usize,
    pub upper: usize,
    pub witness_cover: OrderedCliqueCover,
    pub witness_star: StarCertificate,
}

/// Longest-path layering of `ghat` in `O(|V| + |arcs|)`. With `verify`,
/// transitivity is checked first (which is not linear).
pub fn greedy_layered_cover(ghat: &Orientation, verify: bool) -> Result<LayeredCover> {
    if verify {
        if let Some(why) = ghat.transitivity_violation() {
            // A 2-cycle is reported as a cycle rather than as non-transitivity.
            if !ghat.is_antisymmetric() {
                return Err(Error::CyclicOrientation);
            }
            return Err(Error::NotTransitive(why));
        }
    }
    let n = ghat.n();
    // (remaining in-degree, level) side by side: one cache line per arc.
    let mut state = vec![(0u32, 0u32); n];
    for u in 0..n {
        for v in ghat.out_neighbors(u) {
            state[v].0 += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| state[v].0 == 0).collect();
    queue.reserve(n - queue.len());
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = state[u].1 + 1;
        for v in ghat.out_neighbors(u) {
            let s = &mut state[v];
            s.1 = s.1.max(next);
            s.0 -= 1;
            if s.0 == 0 {
                queue.push(v);
            }
        }
    }
    if queue.len() != n {
        return Err(Error::CyclicOrientation);
    }
    let levels: Vec<usize> = state.iter().map(|&(_, l)| l as usize).collect();
    let depth = levels.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts = vec![Vec::new(); depth];
    for (v, &l) in levels.iter().enumerate() {
        parts[l].push(v);
    }
    Ok(LayeredCover {
        cover: OrderedCliqueCover::new(parts),
        levels,
    })
}

/// Width of the layered cover, computed from `ghat` alone in
/// `O(|V| + |arcs|)`: for a vertex at layer `i`, its widest edge of `g` goes
/// to the highest layer `j > i` not entirely made of its successors.
pub fn greedy_cover_width(ghat: &Orientation, lc: &LayeredCover) -> usize {
    let sizes: Vec<usize> = lc.cover.parts().iter().map(Vec::len).collect();
    let top = sizes.len().saturating_sub(1);
    let mut count = vec![0usize; sizes.len()];
    let mut width = 0;
    for a in 0..ghat.n() {
        let i = lc.levels[a];
        for b in ghat.out_neighbors(a) {
            count[lc.levels[b]] += 1;
        }
        let mut j = top;
        while j > i && count[j] == sizes[j] {
            j -= 1;
        }
        width = width.max(j - i);
        for b in ghat.out_neighbors(a) {
            count[lc.levels[b]] = 0;
        }
    }
    width
}

/// Induced star with `W + 1` leaves certifying `s(g) >= W + 1`.
///
/// Takes the lexicographically smallest `(i, j, a, b)` with `ab` an edge of
/// `g`, `a` in layer `i`, `b` in layer `j = i + W`, then walks back from `b`
/// choosing the smallest in-neighbor in each lower layer down to `i`.
pub fn extract_star_certificate(g: &Graph, ghat: &Orientation, lc: &LayeredCover) -> Result<StarCertificate> {
    let w = cover_width(g, &lc.cover)?;
    if w == 0 {
        return Err(Error::DegenerateWidth("greedy cover has width 0; s(g) >= 1 by convention".into()));
    }
    let levels = &lc.levels;
    let (i, _, a, b) = g
        .edges()
        .flat_map(|(u, v)| [(u, v), (v, u)])
        .filter(|&(a, b)| levels[b] == levels[a] + w)
        .map(|(a, b)| (levels[a], levels[b], a, b))
        .min()
        .expect("an edge realizes the width");

    let preds = ghat.in_lists();
    let mut leaves = vec![b];
    let mut x = b;
    for t in (i..levels[b]).rev() {
        x = *preds[x]
            .iter()
            .find(|&&p| levels[p] == t)
            .ok_or_else(|| Error::InvalidArgument(format!("vertex {x} has no in-neighbor in layer {t}")))?;
        leaves.push(x);
    }
    let cert = StarCertificate::new(a, leaves);
    cert.validate(g)
        .map_err(|why| Error::InvalidArgument(format!("extracted star is invalid: {why}")))?;
    Ok(cert)
}

/// Brackets `CCW(g)` between `⌈(W+1)/2⌉ - 1` and `W` for the greedy width `W`.
///
/// Without `ghat` the complement is oriented by the backtracking recognizer
/// (bounded by `limits`). With `verify == false` a supplied `ghat` is
/// trusted to be transitive; it must still orient exactly the non-edges of `g`.
pub fn ccw_two_approx(
    g: &Graph,
    ghat: Option<&Orientation>,
    verify: bool,
    limits: &SearchLimits,
) -> Result<ApproxResult> {
    let found;
    let ghat = match ghat {
        Some(o) => {
            check_orients_complement(g, o)?;
            o
        }
        None => {
            found = find_transitive_orientation(&g.complement(), limits)?.ok_or(Error::NotIncomparability)?;
            &found
        }
    };
    let lc = greedy_layered_cover(ghat, verify)?;
    let upper = cover_width(g, &lc.cover)?;
    let witness_star = match extract_star_certificate(g, ghat, &lc) {
        Ok(star) => star,
        Err(Error::DegenerateWidth(_)) => StarCertificate::degenerate(),
        Err(e) => return Err(e),
    };
    Ok(ApproxResult {
        lower: (upper + 1).div_ceil(2) - 1,
        upper,
        witness_cover: lc.cover,
        witness_star,
    })
}

fn check_orients_complement(g: &Graph, o: &Orientation) -> Result<()> {
    if o.n() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "orientation has {} vertices, graph has {}",
            o.n(),
            g.n()
        )));
    }
    if let Some((u, v)) = o.arcs().find(|&(u, v)| g.has_edge(u, v)) {
        return Err(Error::InvalidArgument(format!("arc {u}->{v} is an edge of the graph")));
    }
    let non_edges = g.n() * g.n().saturating_sub(1) / 2 - g.edge_count();
    if o.arc_count() != non_edges || !o.is_antisymmetric() {
        return Err(Error::InvalidArgument(
            "orientation does not orient every non-edge exactly once".into(),
        ));
    }
    Ok(())
}

/// Random incomparability graph with its complement's transitive orientation.
///
/// Arcs between vertices of a random linear order are kept independently
/// with probability `density` (forward along the order), then closed
/// transitively; the graph is the complement of the closure.
pub fn random_poset_graph(n: usize, density: f64, seed: u64) -> (Graph, Orientation) {
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let p = density.clamp(0.0, 1.0);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                arcs.push((order[a], order[b]));
            }
        }
    }
    let dag = Orientation::new(n, arcs).expect("valid arcs");
    let closure = dag.transitive_closure().expect("forward arcs are acyclic");
    let g = closure.underlying_graph().complement();
    (g, closure)
}
