//! Decomposition of a graph into unit incomparability factors.
//!
//! Given an ordered clique cover `C_0, ..., C_t` of width `W >= 1`, every
//! non-edge of `g` joins two parts at index distance `d >= 1`. Factor `i`
//! (for `1 <= i < W`) is the complete graph minus the non-edges at distance
//! exactly `i`; its complement is bipartite between the parts whose index
//! `j = a*i + r` (`0 <= r < i`) has odd `a` and those with even `a`. The
//! terminal factor removes the non-edges at distance `>= W`; its complement
//! is transitively oriented from lower to higher part index, and grouping
//! the parts into consecutive runs of `W` gives a width-1 cover of it.
//! Every edge of `g` survives in every factor and every non-edge is removed
//! from exactly one, so the factors intersect to `g`.

use serde::{Deserialize, Serialize};

use crate::cover::{validate_cover, width_unchecked, OrderedCliqueCover};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::to_dot;
use crate::oracles::Orientation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    CoBipartite,
    Terminal,
}

/// Sides of a bipartition of the complement of a co-bipartite factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub odd: VertexSet,
    pub even: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub graph: Graph,
    pub kind: FactorKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartition: Option<Bipartition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block_cover: Option<OrderedCliqueCover>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub source_cover: OrderedCliqueCover,
    pub width: usize,
    pub factors: Vec<Factor>,
}

impl Decomposition {
    /// Width 0: the components of the graph are cliques and the single
    /// factor is the graph itself.
    pub fn is_degenerate(&self) -> bool {
        self.width == 0
    }

    pub fn factor_graphs(&self) -> Vec<Graph> {
        self.factors.iter().map(|f| f.graph.clone()).collect()
    }

    pub fn terminal(&self) -> Option<&Factor> {
        self.factors.iter().find(|f| f.kind == FactorKind::Terminal)
    }

    /// DOT text for factor `i` (0-based), clustered by its block cover when
    /// it has one.
    pub fn factor_dot(&self, i: usize) -> String {
        let f = &self.factors[i];
        to_dot(&f.graph, f.block_cover.as_ref())
    }
}

/// Groups consecutive runs of `w` parts into single parts; the last run
/// holds the remainder.
pub fn block_cover(c: &OrderedCliqueCover, w: usize) -> Result<OrderedCliqueCover> {
    if w < 1 {
        return Err(Error::InvalidArgument("block size must be at least 1".into()));
    }
    Ok(OrderedCliqueCover::new(
        c.parts().chunks(w).map(|run| run.concat()).collect(),
    ))
}

pub fn decompose(g: &Graph, c: &OrderedCliqueCover) -> Result<Decomposition> {
    let report = validate_cover(g, c);
    if !report.is_valid() {
        let msgs: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidCover(msgs.join("; ")));
    }
    let n = g.n();
    let width = width_unchecked(g, c);
    let threshold = width.max(1);
    let idx: Vec<usize> = c.part_index(n).into_iter().map(|i| i.expect("valid cover")).collect();

    // removed[d - 1] holds the non-edges at part distance d (d < threshold);
    // removed[threshold - 1] holds everything at distance >= threshold.
    let mut removed: Vec<Vec<(usize, usize)>> = vec![Vec::new(); threshold];
    let mut arcs = Vec::new();
    for (u, v) in g.non_edges() {
        let (iu, iv) = (idx[u], idx[v]);
        let d = iu.abs_diff(iv);
        debug_assert!(d >= 1, "non-edge inside a clique part");
        if d < threshold {
            removed[d - 1].push((u, v));
        } else {
            removed[threshold - 1].push((u, v));
            arcs.push(if iu < iv { (u, v) } else { (v, u) });
        }
    }
    debug_assert_eq!(
        removed.iter().map(Vec::len).sum::<usize>(),
        g.non_edges().count(),
        "factor complements partition the non-edges"
    );

    let mut factors = Vec::with_capacity(threshold);
    for (k, pairs) in removed.iter().enumerate() {
        let graph = Graph::new(n, pairs.iter().copied())?.complement();
        if k + 1 < threshold {
            let i = k + 1;
            let (odd, even): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| (idx[v] / i) % 2 == 1);
            factors.push(Factor {
                graph,
                kind: FactorKind::CoBipartite,
                bipartition: Some(Bipartition { odd, even }),
                orientation: None,
                block_cover: None,
            });
        } else {
            factors.push(Factor {
                graph,
                kind: FactorKind::Terminal,
                bipartition: None,
                orientation: Some(Orientation::new(n, arcs.iter().copied())?),
                block_cover: Some(block_cover(c, threshold)?),
            });
        }
    }
    Ok(Decomposition {
        source_cover: c.clone(),
        width,
        factors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: char,
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub checks: Vec<Check>,
}

impl DecompositionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: char) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

fn check(id: char, name: &str, outcome: std::result::Result<(), String>) -> Check {
    Check {
        id,
        name: name.to_string(),
        passed: outcome.is_ok(),
        detail: outcome.err(),
    }
}

/// Runs the five checks:
/// (a) every factor contains `g`; (b) the factors intersect to `g`;
/// (c) co-bipartite complements respect their stored bipartition;
/// (d) the terminal orientation is transitive and orients exactly the
/// terminal complement; (e) the block cover is a valid width-1 cover of the
/// terminal factor.
pub fn verify_decomposition(g: &Graph, d: &Decomposition) -> DecompositionReport {
    let n = g.n();
    let checks = vec![
        check('a', "factors are supergraphs", check_supergraphs(g, d)),
        check('b', "intersection equals graph", check_intersection(g, d)),
        check('c', "co-bipartite witnesses", check_bipartitions(n, d)),
        check('d', "terminal orientation transitive", check_orientation(n, d)),
        check('e', "block cover has width <= 1", check_block_cover(n, d)),
    ];
    DecompositionReport { checks }
}

fn check_supergraphs(g: &Graph, d: &Decomposition) -> std::result::Result<(), String> {
    if d.factors.is_empty() {
        return Err("no factors".into());
    }
    for (i, f) in d.factors.iter().enumerate() {
        if f.graph.n() != g.n() {
            return Err(format!("factor {} has {} vertices, expected {}", i + 1, f.graph.n(), g.n()));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| !f.graph.has_edge(u, v)) {
            return Err(format!("factor {} misses edge {u}-{v}", i + 1));
        }
    }
    Ok(())
}

fn check_intersection(g: &Graph, d: &Decomposition) -> std::result::Result<(), String> {
    let inter = Graph::intersection(&d.factor_graphs()).ok_or("factors do not share a vertex set")?;
    if let Some((u, v)) = g.edges().find(|&(u, v)| !inter.has_edge(u, v)) {
        return Err(format!("edge {u}-{v} missing from the intersection"));
    }
    if let Some((u, v)) = inter.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(format!("non-edge {u}-{v} present in every factor"));
    }
    Ok(())
}

fn check_bipartitions(n: usize, d: &Decomposition) -> std::result::Result<(), String> {
    let last = d.factors.len().saturating_sub(1);
    for (i, f) in d.factors.iter().enumerate() {
        if i != last && f.kind != FactorKind::CoBipartite {
            return Err(format!("factor {} should be co-bipartite", i + 1));
        }
        if f.kind != FactorKind::CoBipartite {
            continue;
        }
        let bp = f
            .bipartition
            .as_ref()
            .ok_or_else(|| format!("factor {} has no bipartition witness", i + 1))?;
        let mut side = vec![None; n];
        for (s, members) in [(true, &bp.odd), (false, &bp.even)] {
            for &v in members {
                if v >= n {
                    return Err(format!("factor {}: witness vertex {v} out of range", i + 1));
                }
                if side[v].replace(s).is_some() {
                    return Err(format!("factor {}: vertex {v} on both sides", i + 1));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(format!("factor {}: vertex {v} on neither side", i + 1));
        }
        if f.graph.n() != n {
            return Err(format!("factor {}: wrong vertex count", i + 1));
        }
        if let Some((u, v)) = f.graph.non_edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(format!("factor {}: complement edge {u}-{v} inside one side", i + 1));
        }
    }
    Ok(())
}

fn terminal_factor(d: &Decomposition) -> std::result::Result<&Factor, String> {
    let terminals: Vec<&Factor> = d.factors.iter().filter(|f| f.kind == FactorKind::Terminal).collect();
    match terminals.as_slice() {
        [t] if d.factors.last().is_some_and(|l| l.kind == FactorKind::Terminal) => Ok(t),
        [] => Err("no terminal factor".into()),
        [_] => Err("terminal factor is not last".into()),
        _ => Err(format!("{} terminal factors", terminals.len())),
    }
}

fn check_orientation(n: usize, d: &Decomposition) -> std::result::Result<(), String> {
    let t = terminal_factor(d)?;
    let o = t.orientation.as_ref().ok_or("terminal factor has no orientation")?;
    if o.n() != n || t.graph.n() != n {
        return Err("terminal orientation has the wrong vertex count".into());
    }
    if let Some(why) = o.transitivity_violation() {
        return Err(why);
    }
    let complement = t.graph.complement();
    if let Some((u, v)) = o.arcs().find(|&(u, v)| !complement.has_edge(u, v)) {
        return Err(format!("arc {u}->{v} is an edge of the terminal factor"));
    }
    if let Some((u, v)) = complement.edges().find(|&(u, v)| !o.has_arc(u, v) && !o.has_arc(v, u)) {
        return Err(format!("complement edge {u}-{v} is not oriented"));
    }
    Ok(())
}

fn check_block_cover(n: usize, d: &Decomposition) -> std::result::Result<(), String> {
    let t = terminal_factor(d)?;
    let s = t.block_cover.as_ref().ok_or("terminal factor has no block cover")?;
    if t.graph.n() != n {
        return Err("terminal factor has the wrong vertex count".into());
    }
    let report = validate_cover(&t.graph, s);
    if let Some(v) = report.violations.first() {
        return Err(format!("block cover invalid: {v}"));
    }
    let w = width_unchecked(&t.graph, s);
    if w > 1 {
        return Err(format!("block cover has width {w}"));
    }
    Ok(())
}
