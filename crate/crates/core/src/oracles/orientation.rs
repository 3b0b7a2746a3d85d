//! Directed graphs used as (transitive) orientations, and a backtracking
//! comparability recognizer for desk-scale graphs.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Budget, SearchLimits};

/// Arcs on `0..n` in compressed sparse row form: the sorted out-neighbors
/// of `u` are `heads[offsets[u]..offsets[u + 1]]`.
///
/// Loops and out-of-range endpoints are rejected at construction, but a pair
/// of opposite arcs is representable so that [`verify_transitive`] can
/// report it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    n: usize,
    offsets: Vec<usize>,
    heads: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct OrientationDto {
    n: usize,
    arcs: Vec<[usize; 2]>,
}

impl Serialize for Orientation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OrientationDto {
            n: self.n,
            arcs: self.arcs().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Orientation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = OrientationDto::deserialize(d)?;
        Orientation::new(dto.n, dto.arcs.into_iter().map(|[u, v]| (u, v))).map_err(serde::de::Error::custom)
    }
}

impl Orientation {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if u32::try_from(n).is_err() {
            return Err(Error::LimitExceeded(format!("orientation on {n} vertices exceeds u32 range")));
        }
        let mut pairs = Vec::new();
        for (u, v) in arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            pairs.push((u, v as u32));
        }
        pairs.sort_unstable();
        pairs.dedup();
        let mut offsets = vec![0; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let heads = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { n, offsets, heads })
    }

    /// Builds directly from out-lists that are already sorted, deduplicated
    /// and in range.
    pub(crate) fn from_sorted_lists(out: Vec<Vec<usize>>) -> Self {
        debug_assert!(out.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        let mut offsets = Vec::with_capacity(out.len() + 1);
        offsets.push(0);
        let mut heads = Vec::new();
        for list in &out {
            heads.extend(list.iter().map(|&v| v as u32));
            offsets.push(heads.len());
        }
        Self { n: out.len(), offsets, heads }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.heads.len()
    }

    /// Out-neighbors of `v` in increasing order.
    pub fn out_neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.heads_of(v).iter().map(|&w| w as usize)
    }

    fn heads_of(&self, v: usize) -> &[u32] {
        &self.heads[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v <= u32::MAX as usize && self.heads_of(u).binary_search(&(v as u32)).is_ok()
    }

    /// Arcs sorted by (tail, head).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    /// In-neighbor lists, each sorted ascending. Linear in `n + arcs`.
    pub fn in_lists(&self) -> Vec<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for (_, v) in self.arcs() {
            indeg[v] += 1;
        }
        let mut inn: Vec<Vec<usize>> = indeg.into_iter().map(Vec::with_capacity).collect();
        for (u, v) in self.arcs() {
            inn[v].push(u);
        }
        inn
    }

    /// The undirected graph obtained by forgetting directions.
    pub fn underlying_graph(&self) -> Graph {
        Graph::new(self.n, self.arcs()).expect("arcs are in range and loop-free")
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Transitive closure (reachability by paths of length >= 1). Errors on
    /// a directed cycle.
    pub fn transitive_closure(&self) -> Result<Self> {
        let order = topological_order(self).ok_or(Error::CyclicOrientation)?;
        let mut reach = vec![FixedBitSet::with_capacity(self.n); self.n];
        for &u in order.iter().rev() {
            let mut r = FixedBitSet::with_capacity(self.n);
            for v in self.out_neighbors(u) {
                r.insert(v);
                r.union_with(&reach[v]);
            }
            reach[u] = r;
        }
        Ok(Self::from_sorted_lists(reach.iter().map(|r| r.ones().collect()).collect()))
    }

    /// First violation of antisymmetry or transitivity, if any.
    pub fn transitivity_violation(&self) -> Option<String> {
        for (u, v) in self.arcs() {
            if self.has_arc(v, u) {
                return Some(format!("both {u}->{v} and {v}->{u} present"));
            }
        }
        let sets: Vec<FixedBitSet> = (0..self.n)
            .map(|u| {
                let mut b = FixedBitSet::with_capacity(self.n);
                b.extend(self.out_neighbors(u));
                b
            })
            .collect();
        for (u, v) in self.arcs() {
            if !sets[v].is_subset(&sets[u]) {
                let w = sets[v].difference(&sets[u]).next().expect("non-subset has a witness");
                return Some(format!("{u}->{v}->{w} without {u}->{w}"));
            }
        }
        None
    }
}

/// True iff `o` is antisymmetric and closed under composition of arcs.
pub fn verify_transitive(o: &Orientation) -> bool {
    o.transitivity_violation().is_none()
}

/// Kahn order, `None` on a cycle.
pub(crate) fn topological_order(o: &Orientation) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; o.n];
    for (_, v) in o.arcs() {
        indeg[v] += 1;
    }
    let mut order: Vec<usize> = (0..o.n).filter(|&v| indeg[v] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for v in o.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                order.push(v);
            }
        }
    }
    (order.len() == o.n).then_some(order)
}

/// A transitive orientation of `g`'s edges, or `None` if `g` is not a
/// comparability graph.
///
/// Backtracking over edges in lexicographic order, trying `u -> v` (u < v)
/// first. Each choice is propagated through the forcing relation (arcs
/// sharing a tail or head whose other endpoints are non-adjacent must agree)
/// and through transitivity.
pub fn find_transitive_orientation(g: &Graph, limits: &SearchLimits) -> Result<Option<Orientation>> {
    let n = g.n();
    limits.check_n(n, "find_transitive_orientation")?;
    let mut budget = limits.budget("find_transitive_orientation");
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let state = DirState {
        n,
        dir: vec![0; n * n],
    };
    let solved = backtrack(g, &edges, 0, state, &mut budget)?;
    Ok(solved.map(|s| {
        let arcs = edges
            .iter()
            .map(|&(u, v)| if s.get(u, v) == 1 { (u, v) } else { (v, u) });
        Orientation::new(n, arcs).expect("edges are valid")
    }))
}

#[derive(Clone)]
struct DirState {
    n: usize,
    // 1: u -> v, -1: v -> u, 0: undecided. Kept antisymmetric.
    dir: Vec<i8>,
}

impl DirState {
    #[inline]
    fn get(&self, u: usize, v: usize) -> i8 {
        self.dir[u * self.n + v]
    }

    /// Records `u -> v`; `false` on conflict.
    fn set(&mut self, u: usize, v: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        match self.get(u, v) {
            1 => true,
            -1 => false,
            _ => {
                self.dir[u * self.n + v] = 1;
                self.dir[v * self.n + u] = -1;
                queue.push((u, v));
                true
            }
        }
    }

    fn propagate(&mut self, g: &Graph, mut queue: Vec<(usize, usize)>) -> bool {
        while let Some((a, b)) = queue.pop() {
            for c in 0..self.n {
                if c == a || c == b {
                    continue;
                }
                let ac = g.has_edge(a, c);
                let bc = g.has_edge(b, c);
                if ac && !bc && !self.set(a, c, &mut queue) {
                    return false;
                }
                if bc && !ac && !self.set(c, b, &mut queue) {
                    return false;
                }
                if bc && self.get(b, c) == 1 && (!ac || !self.set(a, c, &mut queue)) {
                    return false;
                }
                if ac && self.get(c, a) == 1 && (!bc || !self.set(c, b, &mut queue)) {
                    return false;
                }
            }
        }
        true
    }
}

fn backtrack(
    g: &Graph,
    edges: &[(usize, usize)],
    mut next: usize,
    state: DirState,
    budget: &mut Budget,
) -> Result<Option<DirState>> {
    budget.tick()?;
    while next < edges.len() && state.get(edges[next].0, edges[next].1) != 0 {
        next += 1;
    }
    let Some(&(u, v)) = edges.get(next) else {
        return Ok(Some(state));
    };
    for (a, b) in [(u, v), (v, u)] {
        let mut s = state.clone();
        let mut queue = Vec::new();
        if s.set(a, b, &mut queue) && s.propagate(g, queue) {
            if let Some(done) = backtrack(g, edges, next + 1, s, budget)? {
                return Ok(Some(done));
            }
        }
    }
    Ok(None)
}
