//! Partial 3-tree embedding and the structure it exposes.
//!
//! [`embed_partial_3tree`] decides whether a graph has treewidth ≤ 3 and, if
//! so, produces a 3-tree on the *same* vertex set containing every input
//! edge, together with the elimination order that witnesses it. Drivers lean
//! on three consequences: the fill edges, the terminal vertices (degree-3
//! vertices of the 3-tree), and — for 3-trees of a special shape — the
//! double-centered form (a tree joined completely to one edge).
//!
//! Recognition runs simplicial elimination with two *safe* eager rules
//! (degree ≤ 2; degree 3 with an edge inside the neighborhood, the classical
//! triangle rule) and falls back to exhaustive branching over all degree-3
//! vertices when stuck, memoizing failed states. Eagerly committing to an
//! arbitrary degree-3 elimination would be unsound: completing an
//! independent degree-3 neighborhood can push a partial 3-tree out of the
//! class (attach a hub to one vertex of each non-adjacent pair of an
//! octahedron missing those three hub-neighbor edges — eliminating the hub
//! first rebuilds the octahedron, which has treewidth 4).

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// A 3-tree over the vertex set of `base` containing every edge of `base`.
#[derive(Clone, Debug)]
pub struct UnderlyingKTree {
    /// The embedded graph, as given.
    pub base: Graph,
    /// The reconstructed 3-tree; `base` plus `fill`.
    pub three_tree: Graph,
    /// Edges of `three_tree` absent from `base`, in lexicographic order.
    pub fill: Vec<(usize, usize)>,
    /// Elimination order over all vertices except `base_triangle`: each
    /// entry is a vertex paired with its neighborhood in `three_tree` at
    /// elimination time, always a triangle. Replaying the list in reverse
    /// rebuilds `three_tree` from `base_triangle` by attaching each vertex
    /// to an existing triangle.
    pub elimination: Vec<(usize, [usize; 3])>,
    /// The K3 the reconstruction starts from.
    pub base_triangle: [usize; 3],
}

/// Embed `g` into a 3-tree on the same vertices, or `None` when `g` has
/// treewidth ≥ 4. Graphs with fewer than 3 vertices are rejected; callers
/// treat them as trivial before asking for an embedding.
pub fn embed_partial_3tree(g: &Graph) -> Option<UnderlyingKTree> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    if g.m() > 3 * n - 6 {
        return None;
    }
    let start = SearchState {
        work: g.clone(),
        alive: vec![true; n],
        alive_count: n,
        record: Vec::new(),
    };
    let mut failed = BTreeSet::new();
    let done = search(start, &mut failed)?;

    let live: Vec<usize> = (0..n).filter(|&v| done.alive[v]).collect();
    debug_assert_eq!(live.len(), 3);
    let base_triangle = [live[0], live[1], live[2]];
    Some(reconstruct(g, &done.record, base_triangle))
}

#[derive(Clone)]
struct SearchState {
    work: Graph,
    alive: Vec<bool>,
    alive_count: usize,
    /// Eliminated vertices with their live neighborhood at elimination time
    /// (0 to 3 vertices; padding to a triangle happens at reconstruction).
    record: Vec<(usize, Vec<usize>)>,
}

impl SearchState {
    fn eliminate(&mut self, v: usize) {
        let nbrs: Vec<usize> = self.work.neighbors(v).to_vec();
        for &x in &nbrs {
            self.work.remove_edge(v, x);
        }
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                self.work.try_add_edge(nbrs[i], nbrs[j]);
            }
        }
        self.alive[v] = false;
        self.alive_count -= 1;
        self.record.push((v, nbrs));
    }

    fn neighborhood_has_edge(&self, v: usize) -> bool {
        let nbrs = self.work.neighbors(v);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if self.work.has_edge(nbrs[i], nbrs[j]) {
                    return true;
                }
            }
        }
        false
    }
}

fn search(
    mut st: SearchState,
    failed: &mut BTreeSet<Vec<(usize, usize)>>,
) -> Option<SearchState> {
    loop {
        if st.alive_count <= 3 {
            return Some(st);
        }
        // no graph of treewidth ≤ 3 exceeds 3k − 6 edges on k vertices
        if st.work.m() > 3 * st.alive_count - 6 {
            return None;
        }
        let low = (0..st.work.n()).find(|&v| st.alive[v] && st.work.degree(v) <= 2);
        if let Some(v) = low {
            st.eliminate(v);
            continue;
        }
        let tri = (0..st.work.n())
            .find(|&v| st.alive[v] && st.work.degree(v) == 3 && st.neighborhood_has_edge(v));
        match tri {
            Some(v) => st.eliminate(v),
            None => break,
        }
    }
    // Stuck: minimum degree 3 with every degree-3 neighborhood independent.
    // If the graph embeds at all, some width-3 elimination order exists and
    // its first vertex has degree exactly 3 here, so trying them all is
    // complete; the eager rules above never destroy embeddability.
    let candidates: Vec<usize> = (0..st.work.n())
        .filter(|&v| st.alive[v] && st.work.degree(v) == 3)
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let key = st.work.edges();
    if failed.contains(&key) {
        return None;
    }
    for &v in &candidates {
        let mut child = st.clone();
        child.eliminate(v);
        if let Some(done) = search(child, failed) {
            return Some(done);
        }
    }
    failed.insert(key);
    None
}

fn reconstruct(
    g: &Graph,
    record: &[(usize, Vec<usize>)],
    base_triangle: [usize; 3],
) -> UnderlyingKTree {
    let mut tree = Graph::new(g.n());
    let [a, b, c] = base_triangle;
    tree.add_edge(a, b);
    tree.add_edge(a, c);
    tree.add_edge(b, c);

    let mut elimination: Vec<(usize, [usize; 3])> = Vec::with_capacity(record.len());
    for (v, nbrs) in record.iter().rev() {
        let tri = pad_to_triangle(&tree, nbrs, base_triangle);
        for &x in &tri {
            tree.add_edge(*v, x);
        }
        elimination.push((*v, tri));
    }
    elimination.reverse();

    let fill: Vec<(usize, usize)> = tree
        .edges()
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    UnderlyingKTree {
        base: g.clone(),
        three_tree: tree,
        fill,
        elimination,
        base_triangle,
    }
}

/// Complete a recorded neighborhood (≤ 3 vertices) into a triangle of the
/// partially rebuilt tree. Vertices eliminated with full degree already sit
/// on a triangle (their fill edges persist into the reconstruction); smaller
/// neighborhoods are padded with the lexicographically least valid choice.
fn pad_to_triangle(tree: &Graph, nbrs: &[usize], base: [usize; 3]) -> [usize; 3] {
    let mut tri = match *nbrs {
        [x, y, z] => {
            debug_assert!(
                tree.has_edge(x, y) && tree.has_edge(x, z) && tree.has_edge(y, z),
                "recorded full neighborhood must already be a triangle"
            );
            [x, y, z]
        }
        [x, y] => {
            let third = (0..tree.n())
                .find(|&w| w != x && w != y && tree.has_edge(w, x) && tree.has_edge(w, y))
                .expect("every edge of a 3-tree lies on a triangle");
            [x, y, third]
        }
        [x] => {
            let nb = tree.neighbors(x);
            let mut pair = None;
            'scan: for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if tree.has_edge(nb[i], nb[j]) {
                        pair = Some((nb[i], nb[j]));
                        break 'scan;
                    }
                }
            }
            let (p, q) = pair.expect("every vertex of a 3-tree lies on a triangle");
            [x, p, q]
        }
        [] => base,
        _ => unreachable!("neighborhood recorded with more than 3 vertices"),
    };
    tri.sort_unstable();
    tri
}

/// The terminal vertices of the embedding: vertices of degree exactly 3 in
/// the 3-tree, or all three vertices when the 3-tree is K3.
pub fn terminals(t: &UnderlyingKTree) -> Vec<usize> {
    let tree = &t.three_tree;
    if tree.n() == 3 {
        return vec![0, 1, 2];
    }
    (0..tree.n()).filter(|&v| tree.degree(v) == 3).collect()
}

/// Exact check that `g` is a 3-tree: repeatedly strip simplicial degree-3
/// vertices (any order works — the class is closed under it) down to K3.
pub fn is_three_tree(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || g.m() != 3 * n - 6 {
        return false;
    }
    let mut work = g.clone();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    while alive_count > 3 {
        let pick = (0..n).find(|&v| {
            if !alive[v] || work.degree(v) != 3 {
                return false;
            }
            let nb = work.neighbors(v);
            work.has_edge(nb[0], nb[1]) && work.has_edge(nb[0], nb[2]) && work.has_edge(nb[1], nb[2])
        });
        match pick {
            Some(v) => {
                for x in work.neighbors(v).to_vec() {
                    work.remove_edge(v, x);
                }
                alive[v] = false;
                alive_count -= 1;
            }
            None => return false,
        }
    }
    work.m() == 3
}

/// A 3-tree expressed as a tree joined completely to one edge: both centers
/// are adjacent to each other and to every other vertex, and the rest
/// induces a tree (the spine).
#[derive(Clone, Debug)]
pub struct DoubleCenteredForm {
    pub centers: (usize, usize),
    /// Same vertex count as the input; the two centers are isolated here and
    /// the remaining vertices carry the spine tree's edges.
    pub spine: Graph,
}

/// Search all adjacent dominating pairs of a 3-tree for a double-centered
/// form, lexicographically first pair wins. `None` when no pair works.
pub fn double_centered_form(g3: &Graph) -> Option<DoubleCenteredForm> {
    let n = g3.n();
    for (a, b) in g3.edges() {
        let dominating =
            (0..n).all(|v| v == a || v == b || (g3.has_edge(v, a) && g3.has_edge(v, b)));
        if !dominating {
            continue;
        }
        let mut spine = g3.clone();
        for x in spine.neighbors(a).to_vec() {
            spine.remove_edge(a, x);
        }
        for x in spine.neighbors(b).to_vec() {
            spine.remove_edge(b, x);
        }
        if spine_is_tree(&spine, a, b) {
            return Some(DoubleCenteredForm { centers: (a, b), spine });
        }
    }
    None
}

fn spine_is_tree(spine: &Graph, a: usize, b: usize) -> bool {
    let rest: Vec<usize> = (0..spine.n()).filter(|&v| v != a && v != b).collect();
    if spine.m() != rest.len().saturating_sub(1) {
        return false;
    }
    // connectivity over the spine vertices
    let comps = crate::structure::components(spine);
    comps
        .iter()
        .filter(|comp| comp.iter().any(|&v| v != a && v != b))
        .count()
        == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::gen::{generate, Family, GenSpec, SpecialName};

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    fn check_embedding(g: &Graph, t: &UnderlyingKTree) {
        assert!(is_three_tree(&t.three_tree), "reconstruction must be a 3-tree");
        for (u, v) in g.edges() {
            assert!(t.three_tree.has_edge(u, v), "missing base edge {u}-{v}");
        }
        for &(u, v) in &t.fill {
            assert!(t.three_tree.has_edge(u, v) && !g.has_edge(u, v));
        }
        assert_eq!(t.three_tree.m(), g.m() + t.fill.len());
        // each recorded neighborhood is a triangle of the 3-tree around v
        for &(v, [x, y, z]) in &t.elimination {
            for &w in &[x, y, z] {
                assert!(t.three_tree.has_edge(v, w));
            }
            assert!(t.three_tree.has_edge(x, y));
            assert!(t.three_tree.has_edge(x, z));
            assert!(t.three_tree.has_edge(y, z));
        }
    }

    #[test]
    fn k4_embeds_without_fill() {
        let g = complete(4);
        let t = embed_partial_3tree(&g).expect("K4 is a 3-tree");
        check_embedding(&g, &t);
        assert!(t.fill.is_empty());
        assert_eq!(terminals(&t), vec![0, 1, 2, 3]);
    }

    #[test]
    fn k5_is_rejected() {
        assert!(embed_partial_3tree(&complete(5)).is_none());
    }

    #[test]
    fn trees_embed() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let t = embed_partial_3tree(&star).expect("star embeds");
        check_embedding(&star, &t);
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let t = embed_partial_3tree(&path).expect("path embeds");
        check_embedding(&path, &t);
    }

    #[test]
    fn branching_is_needed_and_works() {
        // K3,3: triangle-free with minimum degree 3, so the eager rules
        // stall immediately; treewidth is 3, so branching must succeed.
        let mut k33 = Graph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b);
            }
        }
        let t = embed_partial_3tree(&k33).expect("K3,3 has treewidth 3");
        check_embedding(&k33, &t);

        // the hub counterexample from the module docs: eliminating the hub
        // (vertex 6) first would rebuild the octahedron
        let hubbed = Graph::from_edges(
            7,
            &[
                (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 5),
                (3, 4), (3, 5), (0, 6), (2, 6), (4, 6),
            ],
        );
        let t = embed_partial_3tree(&hubbed).expect("hubbed graph has treewidth 3");
        check_embedding(&hubbed, &t);

        // the crown (K4,4 minus a perfect matching) is also triangle-free
        // cubic and embeds
        let crown = generate(&GenSpec {
            family: Family::Special(SpecialName::K44MinusPm),
            n: 8,
            seed: 0,
        })
        .unwrap();
        let t = embed_partial_3tree(&crown).expect("crown has treewidth 3");
        check_embedding(&crown, &t);
    }

    #[test]
    fn treewidth_4_obstructions_are_rejected() {
        let octahedron = generate(&GenSpec {
            family: Family::Special(SpecialName::Octahedron),
            n: 6,
            seed: 0,
        })
        .unwrap();
        assert!(embed_partial_3tree(&octahedron).is_none());

        // Wagner graph: cubic and triangle-free, forces a full branch search
        let wagner = Graph::from_edges(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        );
        assert!(embed_partial_3tree(&wagner).is_none());

        // pentagonal prism
        let prism = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        );
        assert!(embed_partial_3tree(&prism).is_none());

        let petersen = generate(&GenSpec {
            family: Family::Special(SpecialName::Petersen),
            n: 10,
            seed: 0,
        })
        .unwrap();
        assert!(embed_partial_3tree(&petersen).is_none());
    }

    #[test]
    fn generated_three_trees_and_their_subgraphs_embed() {
        for seed in 0..6 {
            let g = generate(&GenSpec { family: Family::ThreeTree, n: 14, seed }).unwrap();
            let t = embed_partial_3tree(&g).expect("3-tree embeds");
            check_embedding(&g, &t);
            assert!(t.fill.is_empty(), "a 3-tree embeds into itself");
            assert_eq!(t.three_tree, g);

            let sub = generate(&GenSpec {
                family: Family::PartialThreeTree(0.7),
                n: 14,
                seed,
            })
            .unwrap();
            if sub.n() >= 3 {
                let t = embed_partial_3tree(&sub).expect("subgraph of a 3-tree embeds");
                check_embedding(&sub, &t);
            }
        }
    }

    #[test]
    fn terminal_facts_on_generated_three_trees() {
        for seed in 0..6 {
            let g = generate(&GenSpec { family: Family::ThreeTree, n: 12, seed }).unwrap();
            let t = embed_partial_3tree(&g).unwrap();
            let ts = terminals(&t);
            assert!(ts.len() >= 2, "a 3-tree on ≥ 6 vertices has ≥ 2 terminals");
            for (i, &u) in ts.iter().enumerate() {
                for &v in &ts[i + 1..] {
                    assert!(!g.has_edge(u, v), "terminals {u},{v} must be non-adjacent");
                }
            }
        }
    }

    #[test]
    fn terminals_of_two_attachments() {
        // K4 plus vertex 4 on triangle {0,1,2} and vertex 5 on {1,2,3}
        let mut g = Graph::new(6);
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v);
            }
        }
        g.add_edge(4, 0);
        g.add_edge(4, 1);
        g.add_edge(4, 2);
        g.add_edge(5, 1);
        g.add_edge(5, 2);
        g.add_edge(5, 3);
        let t = embed_partial_3tree(&g).unwrap();
        assert!(t.fill.is_empty());
        assert_eq!(terminals(&t), vec![4, 5]);
    }

    #[test]
    fn double_centered_recognition() {
        // K3: any two vertices serve as centers over a one-vertex spine
        let k3 = complete(3);
        let f = double_centered_form(&k3).expect("K3 is double-centered");
        assert_eq!(f.centers, (0, 1));
        assert_eq!(f.spine.m(), 0);

        // fan: path 0-1-2-3 joined to the edge {4,5}
        let mut fan = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]);
        for v in 0..4 {
            fan.add_edge(v, 4);
            fan.add_edge(v, 5);
        }
        let f = double_centered_form(&fan).expect("fan is double-centered");
        assert_eq!(f.centers, (4, 5));
        assert_eq!(f.spine.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        // spine leaves = terminals minus centers
        let t = embed_partial_3tree(&fan).unwrap();
        assert!(t.fill.is_empty());
        assert_eq!(terminals(&t), vec![0, 3]);

        // a chain of K4s stretches too far for any single dominating pair
        let mut chain = Graph::new(8);
        for u in 0..4 {
            for v in u + 1..4 {
                chain.add_edge(u, v);
            }
        }
        chain.add_edge(4, 1);
        chain.add_edge(4, 2);
        chain.add_edge(4, 3);
        chain.add_edge(5, 2);
        chain.add_edge(5, 3);
        chain.add_edge(5, 4);
        chain.add_edge(6, 3);
        chain.add_edge(6, 4);
        chain.add_edge(6, 5);
        chain.add_edge(7, 4);
        chain.add_edge(7, 5);
        chain.add_edge(7, 6);
        assert!(is_three_tree(&chain));
        assert!(double_centered_form(&chain).is_none());
    }

    #[test]
    fn double_centered_generator_round_trip() {
        for seed in 0..4 {
            let g = generate(&GenSpec { family: Family::DoubleCentered, n: 11, seed }).unwrap();
            assert!(is_three_tree(&g));
            let f = double_centered_form(&g).expect("generated join of tree and edge");
            let (a, b) = f.centers;
            assert!(g.has_edge(a, b));
            // leaves of the spine are exactly the terminals among non-centers
            let t = embed_partial_3tree(&g).unwrap();
            let leaf_set: Vec<usize> = (0..g.n())
                .filter(|&v| v != a && v != b && f.spine.degree(v) == 1)
                .collect();
            let term_minus_centers: Vec<usize> = terminals(&t)
                .into_iter()
                .filter(|&v| v != a && v != b)
                .collect();
            assert_eq!(leaf_set, term_minus_centers);
        }
    }
}
