//! Recognition of the fixed special graphs and the quasi-complete family.
//!
//! The decomposition theorems single out a handful of exceptional graphs
//! (`K3`, `K5`, `K5⁻`, `K4,4` minus a perfect matching) plus the
//! quasi-complete family: odd-order graphs with more than `⌊n/2⌋(n−1)`
//! edges, which can never meet the `⌊n/2⌋` path bound.

use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialKind {
    K3,
    K5,
    K5Minus,
    K44MinusPm,
    QuasiComplete,
}

/// Exact recognition over the non-isolated part of `g`. The three named
/// small graphs are pinned down by vertex/edge counts alone; the 8-vertex
/// cubic case needs a genuine isomorphism test (there are several connected
/// cubic graphs on 8 vertices).
pub fn recognize_special(g: &Graph) -> Option<SpecialKind> {
    let live = g.non_isolated();
    if live.is_empty() {
        return None;
    }
    let (h, _) = g.induced(&live);
    let (n, m) = (h.n(), h.m());
    match (n, m) {
        (3, 3) => return Some(SpecialKind::K3),
        (5, 10) => return Some(SpecialKind::K5),
        (5, 9) => return Some(SpecialKind::K5Minus),
        (8, 12) => {
            let crown = {
                let mut c = Graph::new(8);
                for a in 0..4 {
                    for b in 4..8 {
                        if b - 4 != a {
                            c.add_edge(a, b);
                        }
                    }
                }
                c
            };
            if is_isomorphic(&h, &crown) {
                return Some(SpecialKind::K44MinusPm);
            }
        }
        _ => {}
    }
    if n % 2 == 1 && m > (n / 2) * (n - 1) {
        return Some(SpecialKind::QuasiComplete);
    }
    None
}

/// Backtracking isomorphism test, meant for the small fixed patterns above
/// (degree filter, then extend a vertex map in order of `a`'s ids).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    let mut map = alloc::vec![usize::MAX; a.n()];
    let mut used = alloc::vec![false; b.n()];
    extend_map(a, b, 0, &mut map, &mut used)
}

fn extend_map(a: &Graph, b: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == a.n() {
        return true;
    }
    'candidate: for w in 0..b.n() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        for &x in a.neighbors(v) {
            if x < v && !b.has_edge(map[x], w) {
                continue 'candidate;
            }
        }
        for x in 0..v {
            if !a.has_edge(x, v) && b.has_edge(map[x], w) {
                continue 'candidate;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend_map(a, b, v + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}
