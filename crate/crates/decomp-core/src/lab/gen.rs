//! Seeded deterministic graph generators for every family used in tests.
//!
//! All randomness comes from ChaCha8 seeded with the spec's 64-bit seed, so
//! an identical [`GenSpec`] always yields an identical edge list.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::DecompError;
use crate::graph::Graph;
use crate::structure::is_connected;

/// Identifier of the random source, for corpus metadata.
pub const RNG_ALGORITHM: &str = "chacha8";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialName {
    K3,
    K4,
    K5,
    K5Minus,
    K44MinusPm,
    K6MinusPm,
    Octahedron,
    Petersen,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    /// 3-tree grown by attaching each new vertex to a random triangle.
    ThreeTree,
    /// Grown 3-tree, each edge kept with the given probability, then the
    /// largest connected component (relabelled to dense ids).
    PartialThreeTree(f64),
    /// Connected graph of maximum degree ≤ 4: degree-capped random tree
    /// plus random extra edges under the cap.
    MaxDeg4,
    /// Connected all-even graph of maximum degree ≤ 4: union of random
    /// vertex-disjoint-per-use cycles, each sharing a vertex with the part
    /// already built.
    EulerianMaxDeg4,
    /// Connected induced fragment of the hexagonal lattice (girth ≥ 6,
    /// planar by construction).
    HexGridFragment,
    /// Random tree joined completely to one extra edge (a double-centered
    /// 3-tree).
    DoubleCentered,
    /// One of the fixed named graphs; `n` and `seed` are ignored.
    Special(SpecialName),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

pub fn generate(spec: &GenSpec) -> Result<Graph, DecompError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::ThreeTree => {
            if spec.n < 3 {
                return Err(DecompError::InvalidSpec("3-tree needs n >= 3"));
            }
            Ok(grow_three_tree(spec.n, &mut rng))
        }
        Family::PartialThreeTree(p) => {
            if spec.n < 3 {
                return Err(DecompError::InvalidSpec("partial 3-tree needs n >= 3"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(DecompError::InvalidSpec("keep probability outside [0, 1]"));
            }
            let full = grow_three_tree(spec.n, &mut rng);
            let mut sparse = Graph::new(spec.n);
            for (u, v) in full.edges() {
                if rng.gen_bool(p) {
                    sparse.add_edge(u, v);
                }
            }
            let comps = crate::structure::components(&sparse);
            let largest = comps
                .iter()
                .max_by_key(|c| c.len())
                .expect("nonempty vertex set");
            let (g, _) = sparse.induced(largest);
            Ok(g)
        }
        Family::MaxDeg4 => {
            if spec.n < 2 {
                return Err(DecompError::InvalidSpec("max-degree-4 family needs n >= 2"));
            }
            Ok(grow_maxdeg4(spec.n, &mut rng))
        }
        Family::EulerianMaxDeg4 => {
            if spec.n < 3 {
                return Err(DecompError::InvalidSpec("Eulerian family needs n >= 3"));
            }
            Ok(grow_eulerian_maxdeg4(spec.n, &mut rng))
        }
        Family::HexGridFragment => {
            if spec.n < 1 {
                return Err(DecompError::InvalidSpec("fragment needs n >= 1"));
            }
            Ok(grow_hex_fragment(spec.n, &mut rng))
        }
        Family::DoubleCentered => {
            if spec.n < 3 {
                return Err(DecompError::InvalidSpec("double-centered needs n >= 3"));
            }
            Ok(grow_double_centered(spec.n, &mut rng))
        }
        Family::Special(name) => Ok(special(name)),
    }
}

fn grow_three_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::from_edges(n, &[(0, 1), (1, 2), (0, 2)]);
    let mut triangles: Vec<[usize; 3]> = alloc::vec![[0, 1, 2]];
    for v in 3..n {
        let [a, b, c] = triangles[rng.gen_range(0..triangles.len())];
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        triangles.push([v, a, b]);
        triangles.push([v, a, c]);
        triangles.push([v, b, c]);
    }
    g
}

fn grow_maxdeg4(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    // degree-capped random spanning tree: some vertex of degree ≤ 3 always
    // exists among the first v vertices (average degree < 2)
    for v in 1..n {
        let candidates: Vec<usize> = (0..v).filter(|&u| g.degree(u) <= 3).collect();
        let u = candidates[rng.gen_range(0..candidates.len())];
        g.add_edge(u, v);
    }
    let extra_attempts = rng.gen_range(0..=n);
    for _ in 0..extra_attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) <= 3 && g.degree(v) <= 3 {
            g.add_edge(u, v);
        }
    }
    g
}

fn grow_eulerian_maxdeg4(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    'restart: loop {
        let mut g = Graph::new(n);
        for _attempt in 0..400 {
            let zero: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
            if zero.is_empty() && is_connected(&g) {
                return g;
            }
            let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) <= 2).collect();
            if low.len() < 3 {
                continue 'restart;
            }
            let k = rng.gen_range(3..=core::cmp::min(6, low.len()));
            // seed the cycle so it extends the built part: one untouched
            // vertex if any remain, one touched vertex if any exist
            let mut cycle: Vec<usize> = Vec::new();
            if !zero.is_empty() {
                cycle.push(zero[rng.gen_range(0..zero.len())]);
            }
            let touched: Vec<usize> = low.iter().copied().filter(|&v| g.degree(v) > 0).collect();
            if !touched.is_empty() {
                cycle.push(touched[rng.gen_range(0..touched.len())]);
            }
            while cycle.len() < k {
                let v = low[rng.gen_range(0..low.len())];
                if !cycle.contains(&v) {
                    cycle.push(v);
                }
            }
            // random order for the middle, then require all edges absent
            shuffle(&mut cycle, rng);
            let ok = (0..cycle.len()).all(|i| {
                let u = cycle[i];
                let v = cycle[(i + 1) % cycle.len()];
                !g.has_edge(u, v)
            });
            if !ok {
                continue;
            }
            for i in 0..cycle.len() {
                g.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
            }
        }
        // too many rejected attempts: throw the partial graph away and
        // rebuild from the advanced rng state
    }
}

fn shuffle(xs: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..xs.len()).rev() {
        let j = rng.gen_range(0..=i);
        xs.swap(i, j);
    }
}

/// Hexagonal lattice in brick-wall coordinates: (x, y) joins (x±1, y) and
/// (x, y+1) when x+y is even / (x, y−1) when odd.
fn hex_neighbors(x: i64, y: i64) -> [(i64, i64); 3] {
    let vertical = if (x + y).rem_euclid(2) == 0 { (x, y + 1) } else { (x, y - 1) };
    [(x - 1, y), (x + 1, y), vertical]
}

fn grow_hex_fragment(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut chosen: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut frontier: Vec<(i64, i64)> = Vec::new();
    chosen.insert((0, 0), 0);
    frontier.extend(hex_neighbors(0, 0));
    while chosen.len() < n {
        let idx = rng.gen_range(0..frontier.len());
        let (x, y) = frontier.swap_remove(idx);
        if chosen.contains_key(&(x, y)) {
            continue;
        }
        let id = chosen.len();
        chosen.insert((x, y), id);
        for nb in hex_neighbors(x, y) {
            if !chosen.contains_key(&nb) && !frontier.contains(&nb) {
                frontier.push(nb);
            }
        }
    }
    let mut g = Graph::new(n);
    for (&(x, y), &id) in &chosen {
        for nb in hex_neighbors(x, y) {
            if let Some(&other) = chosen.get(&nb) {
                if id < other {
                    g.add_edge(id, other);
                }
            }
        }
    }
    g
}

fn grow_double_centered(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let t = n - 2;
    let mut g = Graph::new(n);
    for i in 1..t {
        g.add_edge(i, rng.gen_range(0..i));
    }
    let (a, b) = (n - 2, n - 1);
    g.add_edge(a, b);
    for v in 0..t {
        g.add_edge(a, v);
        g.add_edge(b, v);
    }
    g
}

fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn special(name: SpecialName) -> Graph {
    match name {
        SpecialName::K3 => complete(3),
        SpecialName::K4 => complete(4),
        SpecialName::K5 => complete(5),
        SpecialName::K5Minus => {
            let mut g = complete(5);
            g.remove_edge(3, 4);
            g
        }
        SpecialName::K44MinusPm => {
            let mut g = Graph::new(8);
            for a in 0..4 {
                for b in 4..8 {
                    if b - 4 != a {
                        g.add_edge(a, b);
                    }
                }
            }
            g
        }
        SpecialName::K6MinusPm => {
            let mut g = complete(6);
            g.remove_edge(0, 3);
            g.remove_edge(1, 4);
            g.remove_edge(2, 5);
            g
        }
        SpecialName::Octahedron => {
            // K2,2,2: complement of a perfect matching on 6 vertices —
            // same graph as K6 minus a perfect matching
            special(SpecialName::K6MinusPm)
        }
        SpecialName::Petersen => Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        ),
    }
}
