//! Graph representation and the decomposition checker.
//!
//! Everything downstream manipulates [`Graph`]: a simple undirected graph
//! over dense vertex ids `0..n`. Adjacency lists are kept sorted, so
//! neighbor iteration order — and therefore every algorithm in this crate —
//! is deterministic.

use alloc::vec::Vec;
use core::fmt;

/// Simple undirected graph over vertex ids `0..n`.
///
/// Invariants maintained by every mutator: no loops, no parallel edges,
/// `adj[u]` sorted ascending, adjacency symmetric, `m` = half the degree sum.
/// Isolated vertices are legal; bounds in this crate count non-isolated
/// vertices only.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: alloc::vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Panics on loops, parallel edges or
    /// out-of-range endpoints — callers own the validity of hardcoded lists.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Adds edge `uv`. Panics if the edge is a loop, already present, or out
    /// of range: all three are programming errors in this crate.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        let pos_u = self.adj[u]
            .binary_search(&v)
            .expect_err("parallel edge");
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos_v, u);
        self.m += 1;
    }

    /// Adds edge `uv` unless it already exists; reports whether it was added.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        self.add_edge(u, v);
        true
    }

    /// Removes edge `uv`. Panics if absent — removing a non-edge is a bug.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let pos_u = self.adj[u].binary_search(&v).expect("edge not present");
        self.adj[u].remove(pos_u);
        let pos_v = self.adj[v].binary_search(&u).unwrap();
        self.adj[v].remove(pos_v);
        self.m -= 1;
    }

    pub fn try_remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.remove_edge(u, v);
        true
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertices of degree ≥ 1, ascending.
    pub fn non_isolated(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) > 0).collect()
    }

    /// Number of non-isolated vertices — the `n` of every bound in this
    /// crate.
    pub fn non_isolated_count(&self) -> usize {
        self.adj.iter().filter(|a| !a.is_empty()).count()
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn is_even(&self) -> bool {
        self.adj.iter().all(|a| a.len() % 2 == 0)
    }

    /// Subgraph induced on `verts`, with vertices renumbered `0..verts.len()`
    /// in the given order. Returns the subgraph and the map from new ids
    /// back to ids in `self`.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut back = Vec::with_capacity(verts.len());
        let mut fwd = alloc::vec![usize::MAX; self.n()];
        for (new, &old) in verts.iter().enumerate() {
            debug_assert!(fwd[old] == usize::MAX, "duplicate vertex in induced()");
            fwd[old] = new;
            back.push(old);
        }
        let mut g = Graph::new(verts.len());
        for (new, &old) in verts.iter().enumerate() {
            for &w in &self.adj[old] {
                if fwd[w] != usize::MAX && new < fwd[w] {
                    g.add_edge(new, fwd[w]);
                }
            }
        }
        (g, back)
    }

    /// Graph on the same vertex set containing exactly `edges`.
    pub fn spanning_subgraph(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(self.n());
        for &(u, v) in edges {
            debug_assert!(self.has_edge(u, v), "edge ({u},{v}) not in host");
            g.add_edge(u, v);
        }
        g
    }

    /// Removes every edge of `edges` from `self` (all must be present).
    pub fn remove_edges(&mut self, edges: &[(usize, usize)]) {
        for &(u, v) in edges {
            self.remove_edge(u, v);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m(), self.edges())
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A path given by its vertex sequence.
///
/// Validity (distinct vertices, consecutive adjacency in a host graph) is
/// *not* enforced on construction: decompositions may come from files, and
/// [`verify_decomposition`] is the single place that rules on validity.
/// Algorithms in this crate only ever build valid paths; the final verify
/// call re-checks them all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPath {
    verts: Vec<usize>,
}

impl VertexPath {
    pub fn new(verts: Vec<usize>) -> Self {
        debug_assert!(!verts.is_empty(), "empty path");
        VertexPath { verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> usize {
        self.verts[0]
    }

    pub fn last(&self) -> usize {
        *self.verts.last().unwrap()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    /// Edges as normalized `(min, max)` pairs, in traversal order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.verts.windows(2).map(|w| norm(w[0], w[1])).collect()
    }

    pub fn reversed(&self) -> VertexPath {
        let mut v = self.verts.clone();
        v.reverse();
        VertexPath::new(v)
    }

    /// Relabels every vertex through `table` (new id = `table[old id]`).
    pub fn mapped(&self, table: &[usize]) -> VertexPath {
        VertexPath::new(self.verts.iter().map(|&v| table[v]).collect())
    }
}

/// A cycle given by its vertex sequence; the edge back from the last vertex
/// to the first is implicit. Validity is ruled on by
/// [`verify_decomposition`], as for paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCycle {
    verts: Vec<usize>,
}

impl VertexCycle {
    pub fn new(verts: Vec<usize>) -> Self {
        debug_assert!(verts.len() >= 3, "cycle shorter than a triangle");
        VertexCycle { verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.verts
    }

    /// Number of edges (= number of vertices).
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.verts.contains(&v)
    }

    /// Edges as normalized pairs, including the closing edge.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.verts.len();
        (0..k).map(|i| norm(self.verts[i], self.verts[(i + 1) % k])).collect()
    }

    pub fn mapped(&self, table: &[usize]) -> VertexCycle {
        VertexCycle::new(self.verts.iter().map(|&v| table[v]).collect())
    }
}

/// One element of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Path(VertexPath),
    Cycle(VertexCycle),
}

impl Element {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        match self {
            Element::Path(p) => p.edges(),
            Element::Cycle(c) => c.edges(),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            Element::Path(p) => p.vertices(),
            Element::Cycle(c) => c.vertices(),
        }
    }

    pub fn mapped(&self, table: &[usize]) -> Element {
        match self {
            Element::Path(p) => Element::Path(p.mapped(table)),
            Element::Cycle(c) => Element::Cycle(c.mapped(table)),
        }
    }
}

/// An ordered collection of paths and/or cycles claimed to partition the
/// edge set of some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub elements: Vec<Element>,
}

impl Decomposition {
    pub fn new() -> Self {
        Decomposition { elements: Vec::new() }
    }

    pub fn from_elements(elements: Vec<Element>) -> Self {
        Decomposition { elements }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn push_path(&mut self, p: VertexPath) {
        self.elements.push(Element::Path(p));
    }

    pub fn push_cycle(&mut self, c: VertexCycle) {
        self.elements.push(Element::Cycle(c));
    }

    pub fn extend(&mut self, other: Decomposition) {
        self.elements.extend(other.elements);
    }

    pub fn edge_count(&self) -> usize {
        self.elements.iter().map(|e| e.edges().len()).sum()
    }

    pub fn all_paths(&self) -> bool {
        self.elements.iter().all(|e| matches!(e, Element::Path(_)))
    }

    pub fn all_cycles(&self) -> bool {
        self.elements.iter().all(|e| matches!(e, Element::Cycle(_)))
    }

    /// Relabels all elements through `table` (host id = `table[local id]`).
    pub fn mapped(&self, table: &[usize]) -> Decomposition {
        Decomposition {
            elements: self.elements.iter().map(|e| e.mapped(table)).collect(),
        }
    }
}

/// First defect found in a claimed decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { element: usize, vertex: usize },
    RepeatedVertex { element: usize, vertex: usize },
    CycleTooShort { element: usize },
    /// Two consecutive element vertices are not adjacent in the host graph.
    NonAdjacentStep { element: usize, from: usize, to: usize },
    /// An edge is covered by two elements (or twice by one).
    DuplicateEdge { u: usize, v: usize },
    /// A host edge is covered by no element.
    MissingEdge { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { element, vertex } => {
                write!(f, "element {element}: vertex {vertex} out of range")
            }
            Violation::RepeatedVertex { element, vertex } => {
                write!(f, "element {element}: vertex {vertex} repeats")
            }
            Violation::CycleTooShort { element } => {
                write!(f, "element {element}: cycle shorter than 3 vertices")
            }
            Violation::NonAdjacentStep { element, from, to } => {
                write!(f, "element {element}: step {from}-{to} is not an edge")
            }
            Violation::DuplicateEdge { u, v } => write!(f, "edge {u}-{v} covered twice"),
            Violation::MissingEdge { u, v } => write!(f, "edge {u}-{v} not covered"),
        }
    }
}

/// Outcome of [`verify_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    Violation(Violation),
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

/// Checks that `d` is a genuine decomposition of `g`: every element is a
/// valid path or cycle of `g`, no edge is covered twice, and every edge of
/// `g` is covered. Returns the first violation found; never panics on
/// malformed input.
pub fn verify_decomposition(g: &Graph, d: &Decomposition) -> Verdict {
    use alloc::collections::BTreeSet;

    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (idx, element) in d.elements.iter().enumerate() {
        let verts = element.vertices();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        for &v in verts {
            if v >= g.n() {
                return Verdict::Violation(Violation::OutOfRange { element: idx, vertex: v });
            }
            if !seen.insert(v) {
                return Verdict::Violation(Violation::RepeatedVertex { element: idx, vertex: v });
            }
        }
        let steps: Vec<(usize, usize)> = match element {
            Element::Path(p) => p.vertices().windows(2).map(|w| (w[0], w[1])).collect(),
            Element::Cycle(c) => {
                if c.vertices().len() < 3 {
                    return Verdict::Violation(Violation::CycleTooShort { element: idx });
                }
                let k = c.vertices().len();
                (0..k).map(|i| (c.vertices()[i], c.vertices()[(i + 1) % k])).collect()
            }
        };
        for (from, to) in steps {
            if !g.has_edge(from, to) {
                return Verdict::Violation(Violation::NonAdjacentStep { element: idx, from, to });
            }
            let e = norm(from, to);
            if !covered.insert(e) {
                return Verdict::Violation(Violation::DuplicateEdge { u: e.0, v: e.1 });
            }
        }
    }
    for (u, v) in g.edges() {
        if !covered.contains(&(u, v)) {
            return Verdict::Violation(Violation::MissingEdge { u, v });
        }
    }
    Verdict::Ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn single_cycle_covers_triangle() {
        let g = triangle();
        let mut d = Decomposition::new();
        d.push_cycle(VertexCycle::new(alloc::vec![0, 1, 2]));
        assert!(verify_decomposition(&g, &d).is_ok());
    }

    #[test]
    fn two_paths_cover_triangle() {
        let g = triangle();
        let mut d = Decomposition::new();
        d.push_path(VertexPath::new(alloc::vec![0, 1, 2]));
        d.push_path(VertexPath::new(alloc::vec![0, 2]));
        assert!(verify_decomposition(&g, &d).is_ok());
    }

    #[test]
    fn uncovered_edge_is_reported() {
        let g = triangle();
        let mut d = Decomposition::new();
        d.push_path(VertexPath::new(alloc::vec![0, 1]));
        d.push_path(VertexPath::new(alloc::vec![1, 2]));
        assert_eq!(
            verify_decomposition(&g, &d),
            Verdict::Violation(Violation::MissingEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn duplicate_and_nonadjacent_are_reported() {
        let g = triangle();
        let mut d = Decomposition::new();
        d.push_path(VertexPath::new(alloc::vec![0, 1, 2]));
        d.push_path(VertexPath::new(alloc::vec![0, 1]));
        assert_eq!(
            verify_decomposition(&g, &d),
            Verdict::Violation(Violation::DuplicateEdge { u: 0, v: 1 })
        );

        let mut g4 = Graph::new(4);
        g4.add_edge(0, 1);
        let mut d2 = Decomposition::new();
        d2.push_path(VertexPath::new(alloc::vec![0, 1, 3]));
        assert_eq!(
            verify_decomposition(&g4, &d2),
            Verdict::Violation(Violation::NonAdjacentStep { element: 0, from: 1, to: 3 })
        );
    }

    #[test]
    fn graph_mutators_keep_invariants() {
        let mut g = Graph::new(5);
        g.add_edge(3, 1);
        g.add_edge(1, 0);
        g.add_edge(4, 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 3]);
        assert_eq!(g.neighbors(3), &[1, 4]);
        assert!(g.has_edge(1, 3) && g.has_edge(3, 1));
        g.remove_edge(1, 3);
        assert_eq!(g.m(), 2);
        assert!(!g.has_edge(1, 3));
        assert_eq!(g.edges(), alloc::vec![(0, 1), (3, 4)]);
        assert_eq!(g.non_isolated(), alloc::vec![0, 1, 3, 4]);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = Graph::from_edges(6, &[(0, 2), (2, 4), (4, 0), (1, 3)]);
        let (sub, back) = g.induced(&[0, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.m(), 3);
        assert_eq!(back, alloc::vec![0, 2, 4]);
        let d = {
            let mut d = Decomposition::new();
            d.push_cycle(VertexCycle::new(alloc::vec![0, 1, 2]));
            d
        };
        let host_d = d.mapped(&back);
        assert_eq!(host_d.elements[0].vertices(), &[0, 2, 4]);
    }
}
