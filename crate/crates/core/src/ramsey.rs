//! Ramsey numbers and induced-star bounds for graph intersections.
//!
//! If `g` is the edge intersection of `H_1, ..., H_d`, the leaves of a
//! largest induced star of `g` form a clique of `K_{s(g)}` whose edges can be
//! coloured by a factor in which they are missing; a monochromatic clique of
//! colour `i` with `s(H_i) + 1` vertices would be a larger induced star of
//! `H_i`. Hence `s(g) < R(s(H_1) + 1, ..., s(H_d) + 1)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::SearchLimits;
use crate::oracles::s_exact;

const DEFAULT_TABLE: &str = include_str!("../data/ramsey.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyQuery {
    targets: Vec<usize>,
}

/// Reduced form of a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    /// Settled by the reduction rules alone.
    Trivial(u64),
    /// Sorted targets, all at least 3, at least two of them.
    Key(Vec<usize>),
}

impl RamseyQuery {
    pub fn new(targets: Vec<usize>) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::InvalidQuery("no targets".into()));
        }
        if targets.contains(&0) {
            return Err(Error::InvalidQuery("targets must be positive".into()));
        }
        Ok(Self { targets })
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    /// `R(.., 1, ..) = 1`; targets equal to 2 drop out (`R(2, rest) = R(rest)`,
    /// `R(2, ..., 2) = 2`); a single target `n` gives `n`.
    pub fn normalize(&self) -> Normalized {
        if self.targets.contains(&1) {
            return Normalized::Trivial(1);
        }
        let mut rest: Vec<usize> = self.targets.iter().copied().filter(|&t| t != 2).collect();
        rest.sort_unstable();
        match rest.len() {
            0 => Normalized::Trivial(2),
            1 => Normalized::Trivial(rest[0] as u64),
            _ => Normalized::Key(rest),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RamseyAnswer {
    Exact { value: u64 },
    Range { lo: u64, hi: u64 },
    Unknown,
}

impl RamseyAnswer {
    pub fn exact(&self) -> Option<u64> {
        match *self {
            RamseyAnswer::Exact { value } => Some(value),
            _ => None,
        }
    }

    /// Best known `(lo, hi)`; `None` when unknown.
    pub fn bounds(&self) -> Option<(u64, u64)> {
        match *self {
            RamseyAnswer::Exact { value } => Some((value, value)),
            RamseyAnswer::Range { lo, hi } => Some((lo, hi)),
            RamseyAnswer::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lo: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hi: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Known Ramsey values keyed by sorted, normalized targets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RamseyTable {
    entries: BTreeMap<Vec<usize>, RamseyAnswer>,
}

impl RamseyTable {
    /// Parses a JSON object mapping `"3,4"`-style keys to `{"exact": v}` or
    /// `{"lo": a, "hi": b}`. Keys are normalized on load.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, TableEntry> = serde_json::from_str(text).map_err(crate::io::json_error)?;
        let mut entries = BTreeMap::new();
        for (key, entry) in raw {
            let targets = key
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::InvalidQuery(format!("bad table key {key:?}")))?;
            let Normalized::Key(k) = RamseyQuery::new(targets)?.normalize() else {
                continue;
            };
            let answer = match (entry.exact, entry.lo, entry.hi) {
                (Some(v), _, _) => RamseyAnswer::Exact { value: v },
                (None, Some(lo), Some(hi)) if lo <= hi => RamseyAnswer::Range { lo, hi },
                _ => return Err(Error::InvalidQuery(format!("table entry {key:?} needs exact or lo <= hi"))),
            };
            entries.insert(k, answer);
        }
        Ok(Self { entries })
    }

    pub fn builtin() -> &'static RamseyTable {
        static TABLE: OnceLock<RamseyTable> = OnceLock::new();
        TABLE.get_or_init(|| RamseyTable::from_json(DEFAULT_TABLE).expect("bundled Ramsey table parses"))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reduction rules, then the table; otherwise a range from the product
    /// lower bound `1 + Π(n_i - 1)` and the recursive upper bound
    /// `R(n_1..n_c) <= 2 - c + Σ_i R(.., n_i - 1, ..)`.
    pub fn lookup(&self, q: &RamseyQuery) -> RamseyAnswer {
        match q.normalize() {
            Normalized::Trivial(v) => RamseyAnswer::Exact { value: v },
            Normalized::Key(k) => {
                let mut memo = HashMap::new();
                match self.bounds(&k, &mut memo) {
                    Some((lo, hi)) if lo == hi => RamseyAnswer::Exact { value: lo },
                    Some((lo, hi)) => RamseyAnswer::Range { lo, hi },
                    None => RamseyAnswer::Unknown,
                }
            }
        }
    }

    fn bounds(&self, key: &[usize], memo: &mut HashMap<Vec<usize>, Option<(u64, u64)>>) -> Option<(u64, u64)> {
        if let Some(&b) = memo.get(key) {
            return b;
        }
        let result = match RamseyQuery::new(key.to_vec()).ok()?.normalize() {
            Normalized::Trivial(v) => Some((v, v)),
            Normalized::Key(k) => {
                let product = k
                    .iter()
                    .try_fold(1u64, |acc, &t| acc.checked_mul(t as u64 - 1))
                    .and_then(|p| p.checked_add(1));
                let mut sum: Option<u64> = Some(2);
                for i in 0..k.len() {
                    let mut smaller = k.clone();
                    smaller[i] -= 1;
                    smaller.sort_unstable();
                    let (_, hi) = self.bounds(&smaller, memo)?;
                    sum = sum.and_then(|s| s.checked_add(hi));
                }
                let derived_hi = sum.and_then(|s| s.checked_sub(k.len() as u64));
                match (self.entries.get(&k), product, derived_hi) {
                    (Some(RamseyAnswer::Exact { value }), _, _) => Some((*value, *value)),
                    (Some(RamseyAnswer::Range { lo, hi }), p, h) => {
                        Some(((*lo).max(p.unwrap_or(0)), h.map_or(*hi, |h| h.min(*hi))))
                    }
                    (_, Some(p), Some(h)) => Some((p, h.max(p))),
                    _ => None,
                }
            }
        };
        memo.insert(key.to_vec(), result);
        result
    }
}

/// Lookup against the bundled table.
pub fn ramsey_lookup(q: &RamseyQuery) -> RamseyAnswer {
    RamseyTable::builtin().lookup(q)
}

/// `R(3, ..., 3, 4)` with `ccw - 1` threes: graphs of clique cover width
/// `ccw` have `s(G) <= answer - 1`.
pub fn corollary_bound(ccw: usize) -> Result<RamseyAnswer> {
    if ccw < 1 {
        return Err(Error::InvalidArgument("clique cover width must be at least 1".into()));
    }
    let mut targets = vec![3; ccw - 1];
    targets.push(4);
    Ok(ramsey_lookup(&RamseyQuery::new(targets)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundCheck {
    Verified { method: String },
    Skipped { reason: String },
    Failed { reason: String },
}

impl BoundCheck {
    pub fn is_verified(&self) -> bool {
        matches!(self, BoundCheck::Verified { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyVerification {
    pub targets: Vec<usize>,
    pub value: Option<u64>,
    /// Some colouring of `K_{R-1}` avoids every target.
    pub lower: BoundCheck,
    /// Every colouring of `K_R` hits some target.
    pub upper: BoundCheck,
}

impl RamseyVerification {
    pub fn confirmed(&self) -> bool {
        self.lower.is_verified() && self.upper.is_verified()
    }

    pub fn failed(&self) -> bool {
        matches!(self.lower, BoundCheck::Failed { .. }) || matches!(self.upper, BoundCheck::Failed { .. })
    }
}

/// Colour-1 edges of the Wagner graph (circulant `C_8(1, 4)`): triangle-free
/// with independence number 3, so it witnesses `R(3, 4) > 8`.
fn stored_witness(key: &[usize]) -> Option<(usize, Vec<u8>)> {
    if key != [3, 4] {
        return None;
    }
    let t = 8;
    let mut colors = Vec::new();
    for u in 0..t {
        for v in u + 1..t {
            let d = (v - u).min(t - (v - u));
            colors.push(if d == 1 || d == 4 { 0 } else { 1 });
        }
    }
    Some((t, colors))
}

/// Checks the table value of a query by exhaustive enumeration where the
/// number of colourings fits in `limits.node_budget`, and by stored
/// witnesses otherwise.
pub fn verify_ramsey_tiny(q: &RamseyQuery, limits: &SearchLimits) -> Result<RamseyVerification> {
    let answer = ramsey_lookup(q);
    let key = match q.normalize() {
        Normalized::Trivial(v) => {
            let method = "reduction rules (single colour or targets 1 and 2)".to_string();
            return Ok(RamseyVerification {
                targets: q.targets().to_vec(),
                value: Some(v),
                lower: BoundCheck::Verified { method: method.clone() },
                upper: BoundCheck::Verified { method },
            });
        }
        Normalized::Key(k) => k,
    };
    let Some(r) = answer.exact() else {
        let reason = "no exact value to verify".to_string();
        return Ok(RamseyVerification {
            targets: q.targets().to_vec(),
            value: None,
            lower: BoundCheck::Skipped { reason: reason.clone() },
            upper: BoundCheck::Skipped { reason },
        });
    };
    let r = r as usize;
    if r > 64 {
        return Err(Error::LimitExceeded(format!("R = {r} exceeds the 64-vertex colouring model")));
    }

    let lower = match stored_witness(&key) {
        Some((t, colors)) if t + 1 == r => {
            if avoids_all(t, &colors, &key) {
                BoundCheck::Verified {
                    method: format!("stored colouring of K_{t}"),
                }
            } else {
                BoundCheck::Failed {
                    reason: format!("stored colouring of K_{t} contains a target clique"),
                }
            }
        }
        _ => match enumerate(r - 1, &key, limits)? {
            Enumeration::TooLarge(total) => BoundCheck::Skipped {
                reason: format!("LimitExceeded: {total} colourings of K_{}", r - 1),
            },
            Enumeration::Avoider => BoundCheck::Verified {
                method: format!("enumeration found an avoiding colouring of K_{}", r - 1),
            },
            Enumeration::None => BoundCheck::Failed {
                reason: format!("every colouring of K_{} contains a target clique", r - 1),
            },
        },
    };
    let upper = match enumerate(r, &key, limits)? {
        Enumeration::TooLarge(total) => BoundCheck::Skipped {
            reason: format!("LimitExceeded: {total} colourings of K_{r}"),
        },
        Enumeration::None => BoundCheck::Verified {
            method: format!("all colourings of K_{r} enumerated"),
        },
        Enumeration::Avoider => BoundCheck::Failed {
            reason: format!("found a colouring of K_{r} avoiding every target"),
        },
    };
    Ok(RamseyVerification {
        targets: q.targets().to_vec(),
        value: Some(r as u64),
        lower,
        upper,
    })
}

enum Enumeration {
    TooLarge(String),
    Avoider,
    None,
}

/// Walks all `c^(t choose 2)` colourings of `K_t` in counting order.
fn enumerate(t: usize, key: &[usize], limits: &SearchLimits) -> Result<Enumeration> {
    let c = key.len();
    let m = t * t.saturating_sub(1) / 2;
    let total = (c as u64).checked_pow(m as u32);
    match total {
        Some(total) if total <= limits.node_budget => {}
        _ => return Ok(Enumeration::TooLarge(format!("{c}^{m}"))),
    }
    let mut budget = limits.budget("verify_ramsey_tiny");
    let mut colors = vec![0u8; m];
    loop {
        budget.tick()?;
        if avoids_all(t, &colors, key) {
            return Ok(Enumeration::Avoider);
        }
        // increment base-c counter
        let mut i = 0;
        loop {
            if i == m {
                return Ok(Enumeration::None);
            }
            colors[i] += 1;
            if (colors[i] as usize) < c {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Whether no colour class `i` of the colouring contains `K_{key[i]}`.
/// `colors` lists edges `(u, v)`, `u < v`, in lexicographic order.
fn avoids_all(t: usize, colors: &[u8], key: &[usize]) -> bool {
    let mut adj = vec![vec![0u64; t]; key.len()];
    let mut e = 0;
    for u in 0..t {
        for v in u + 1..t {
            let c = colors[e] as usize;
            adj[c][u] |= 1 << v;
            adj[c][v] |= 1 << u;
            e += 1;
        }
    }
    let all = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    key.iter().zip(&adj).all(|(&k, a)| !has_clique(a, all, k))
}

fn has_clique(adj: &[u64], cand: u64, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < k {
        return false;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if has_clique(adj, rest & adj[v], k - 1) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Untestable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionVerdict {
    pub s_graph: usize,
    pub s_factors: Vec<usize>,
    pub answer: RamseyAnswer,
    pub status: VerdictStatus,
}

/// Tests `s(g) <= R(s(H_1) + 1, ..., s(H_d) + 1) - 1` for factors whose
/// edge intersection is `g`.
pub fn check_intersection_bound(g: &Graph, factors: &[Graph]) -> Result<IntersectionVerdict> {
    let inter = Graph::intersection(factors)
        .ok_or_else(|| Error::NotAnIntersection("factors missing or on different vertex sets".into()))?;
    if inter.n() != g.n() {
        return Err(Error::NotAnIntersection(format!(
            "factors have {} vertices, graph has {}",
            inter.n(),
            g.n()
        )));
    }
    if inter != g.clone() {
        return Err(Error::NotAnIntersection("edge intersection differs from the graph".into()));
    }
    let (s_graph, _) = s_exact(g)?;
    let s_factors = factors
        .iter()
        .map(|h| s_exact(h).map(|(s, _)| s))
        .collect::<Result<Vec<_>>>()?;
    let q = RamseyQuery::new(s_factors.iter().map(|s| s + 1).collect())?;
    let answer = ramsey_lookup(&q);
    let status = match answer {
        RamseyAnswer::Exact { value } => {
            if (s_graph as u64) < value {
                VerdictStatus::Pass
            } else {
                VerdictStatus::Fail
            }
        }
        RamseyAnswer::Range { lo, .. } if (s_graph as u64) < lo => VerdictStatus::Pass,
        _ => VerdictStatus::Untestable,
    };
    Ok(IntersectionVerdict {
        s_graph,
        s_factors,
        answer,
        status,
    })
}
