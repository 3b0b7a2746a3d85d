//! Brute-force reference implementations. Deliberately naive: every value is
//! obtained by plain enumeration over bitmasks or permutations, sharing no
//! search code with the library.

#![allow(dead_code)]

use ccwidth::Graph;

pub fn masks(g: &Graph) -> Vec<u32> {
    let n = g.n();
    assert!(n <= 20);
    (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

fn independent(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        if adj[v as usize] & set != 0 {
            return false;
        }
    }
    true
}

fn clique(adj: &[u32], set: u32) -> bool {
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        if set & !(1 << v) & !adj[v as usize] != 0 {
            return false;
        }
    }
    true
}

/// Largest independent subset of a neighbourhood, over all vertices, by
/// subset enumeration. `1` for `n <= 2`.
pub fn star_number(g: &Graph) -> usize {
    if g.n() <= 2 {
        return 1;
    }
    let adj = masks(g);
    let mut best = 0;
    for &nb in &adj {
        // Enumerate submasks of nb.
        let mut sub = nb;
        loop {
            if independent(&adj, sub) {
                best = best.max(sub.count_ones() as usize);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & nb;
        }
    }
    best
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap(n, &mut cur, &mut out);
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, a, out);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap(k - 1, a, out);
}

/// Minimum over all permutations of the longest edge.
pub fn bandwidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut pos = vec![0; n];
            for (i, &v) in p.iter().enumerate() {
                pos[v] = i;
            }
            g.edges().map(|(u, v)| pos[u].abs_diff(pos[v])).max().unwrap_or(0)
        })
        .min()
        .unwrap()
}

/// All set partitions of `0..n` as lists of masks.
pub fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    fn rec(v: usize, n: usize, parts: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == n {
            out.push(parts.clone());
            return;
        }
        for i in 0..parts.len() {
            parts[i] |= 1 << v;
            rec(v + 1, n, parts, out);
            parts[i] &= !(1 << v);
        }
        parts.push(1 << v);
        rec(v + 1, n, parts, out);
        parts.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// Every ordered clique cover of `g`, as ordered lists of part masks.
pub fn ordered_covers(g: &Graph) -> Vec<Vec<u32>> {
    let adj = masks(g);
    let mut out = Vec::new();
    for parts in set_partitions(g.n()) {
        if !parts.iter().all(|&p| clique(&adj, p)) {
            continue;
        }
        for perm in permutations(parts.len()) {
            out.push(perm.iter().map(|&i| parts[i]).collect());
        }
    }
    out
}

pub fn ordered_width(g: &Graph, parts: &[u32]) -> usize {
    let mut idx = vec![0; g.n()];
    for (i, &p) in parts.iter().enumerate() {
        for (v, slot) in idx.iter_mut().enumerate() {
            if p >> v & 1 == 1 {
                *slot = i;
            }
        }
    }
    g.edges().map(|(u, v)| idx[u].abs_diff(idx[v])).max().unwrap_or(0)
}

/// Minimum width over every ordered clique cover.
pub fn clique_cover_width(g: &Graph) -> usize {
    ordered_covers(g)
        .iter()
        .map(|c| ordered_width(g, c))
        .min()
        .unwrap_or(0)
}

/// Whether some orientation of all edges of `g` is transitive, by trying
/// all `2^m` orientations.
pub fn has_transitive_orientation(g: &Graph) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    for bits in 0u32..1 << edges.len() {
        let mut out = vec![0u32; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if bits >> i & 1 == 1 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        let transitive = (0..n).all(|a| {
            let mut succ = out[a];
            let mut ok = true;
            while succ != 0 {
                let b = succ.trailing_zeros() as usize;
                succ &= succ - 1;
                if out[b] & !out[a] != 0 {
                    ok = false;
                }
            }
            ok
        });
        if transitive {
            return true;
        }
    }
    false
}

/// Fewest supergraphs of `g` with clique cover width at most one whose
/// intersection is `g`, by enumerating all supergraphs.
pub fn unit_dimension(g: &Graph) -> usize {
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    let m = non_edges.len();
    assert!(m <= 12);
    if m == 0 {
        return 1;
    }
    // keep[mask]: the supergraph that omits exactly the non-edges in mask.
    let mut useful = Vec::new();
    for omit in 1u32..1 << m {
        let added = non_edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| omit >> i & 1 == 0)
            .map(|(_, &e)| e);
        let h = Graph::new(g.n(), g.edges().chain(added)).unwrap();
        if clique_cover_width(&h) <= 1 {
            useful.push(omit);
        }
    }
    let full = (1u32 << m) - 1;
    for k in 1..=m {
        if covers_with(&useful, full, 0, k, 0) {
            return k;
        }
    }
    unreachable!()
}

fn covers_with(sets: &[u32], full: u32, acc: u32, k: usize, start: usize) -> bool {
    if acc == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    (start..sets.len()).any(|i| covers_with(sets, full, acc | sets[i], k - 1, i + 1))
}

/// Whether every 2-colouring of the edges of `K_n` has a red triangle or a
/// blue `K_t`.
pub fn arrows_3_t(n: usize, t: usize) -> bool {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).all(|col| {
        let mut red = vec![0u32; n];
        let mut blue = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let side = if col >> i & 1 == 1 { &mut red } else { &mut blue };
            side[u] |= 1 << v;
            side[v] |= 1 << u;
        }
        has_clique(&red, n, 3) || has_clique(&blue, n, t)
    })
}

fn has_clique(adj: &[u32], n: usize, k: usize) -> bool {
    (0u32..1 << n).any(|s| s.count_ones() as usize == k && clique(adj, s))
}

/// Connected graphs on `n` vertices up to relabelling, by canonical form
/// over all permutations. Only sensible for `n <= 6`.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().fold(0u32, |m, (i, &(u, v))| {
                    if g.has_edge(p[u], p[v]) {
                        m | 1 << i
                    } else {
                        m
                    }
                })
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}
