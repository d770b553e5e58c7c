//! Structural queries: connectivity, bridges and blocks, small edge cuts,
//! internally disjoint path pairs, Euler partitions, girth.
//!
//! All functions are deterministic: adjacency lists are sorted and every
//! tie is broken toward the lowest vertex id.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::DecompError;
use crate::graph::{Graph, VertexCycle, VertexPath};

/// Connected components over the *full* vertex set; isolated vertices form
/// singleton components. Components are sorted internally and ordered by
/// smallest member.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = alloc::vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = alloc::vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components that contain at least one edge (singleton isolated vertices
/// dropped).
pub fn edge_components(g: &Graph) -> Vec<Vec<usize>> {
    components(g).into_iter().filter(|c| c.len() >= 2).collect()
}

/// Connected in the sense used throughout this crate: all non-isolated
/// vertices lie in one component. Graphs without edges count as connected.
pub fn is_connected(g: &Graph) -> bool {
    edge_components(g).len() <= 1
}

/// Breadth-first shortest path from `u` to `v`, deterministic via sorted
/// adjacency. `None` when separated.
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Option<VertexPath> {
    if u == v {
        return Some(VertexPath::new(alloc::vec![u]));
    }
    let mut parent = alloc::vec![usize::MAX; g.n()];
    let mut queue = alloc::collections::VecDeque::new();
    parent[u] = u;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                if y == v {
                    let mut path = alloc::vec![v];
                    let mut cur = v;
                    while cur != u {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(VertexPath::new(path));
                }
                queue.push_back(y);
            }
        }
    }
    None
}

/// How an edge (or edge pair) separates a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeCutKind {
    /// Bridge with at least two vertices on each side.
    UsefulBridge,
    /// Bridge with a single vertex on one side.
    UselessBridge,
    /// A minimal two-edge separator.
    TwoEdgeCut((usize, usize), (usize, usize)),
}

/// A block (maximal 2-connected subgraph, or a bridge with its endpoints)
/// of the block decomposition. Blocks partition the edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

/// One depth-first pass computing all bridges (classified useful/useless by
/// side sizes) and the block decomposition.
pub fn bridges_and_blocks(g: &Graph) -> (Vec<((usize, usize), EdgeCutKind)>, Vec<Block>) {
    let n = g.n();
    let mut disc = alloc::vec![0usize; n]; // 0 = unvisited
    let mut low = alloc::vec![0usize; n];
    let mut subtree = alloc::vec![1usize; n];
    let mut time = 0usize;
    let mut bridges_raw: Vec<(usize, usize, usize, usize)> = Vec::new(); // (u, v, subtree_v, root)
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != 0 {
            continue;
        }
        time += 1;
        disc[root] = time;
        low[root] = time;
        // frames: (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = alloc::vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, pv, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == pv {
                    continue;
                }
                if disc[w] == 0 {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    edge_stack.push((v, w));
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    // back edge, recorded once (toward the ancestor)
                    edge_stack.push((v, w));
                    if disc[w] < low[v] {
                        low[v] = disc[w];
                    }
                }
            } else {
                stack.pop();
                if pv != usize::MAX {
                    if low[v] < low[pv] {
                        low[pv] = low[v];
                    }
                    subtree[pv] += subtree[v];
                    if low[v] > disc[pv] {
                        bridges_raw.push((pv, v, subtree[v], root));
                    }
                    if low[v] >= disc[pv] {
                        // pop one block: everything above and including (pv, v)
                        let mut block_edges = Vec::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            block_edges.push(if a < b { (a, b) } else { (b, a) });
                            if (a, b) == (pv, v) {
                                break;
                            }
                        }
                        let mut verts: BTreeSet<usize> = BTreeSet::new();
                        for &(a, b) in &block_edges {
                            verts.insert(a);
                            verts.insert(b);
                        }
                        block_edges.sort_unstable();
                        blocks.push(Block {
                            vertices: verts.into_iter().collect(),
                            edges: block_edges,
                        });
                    }
                }
            }
        }
        debug_assert!(edge_stack.is_empty(), "unclosed block after component");
    }

    let mut bridges = Vec::new();
    for (u, v, side_v, root) in bridges_raw {
        let comp_size = subtree[root];
        let kind = if side_v >= 2 && comp_size - side_v >= 2 {
            EdgeCutKind::UsefulBridge
        } else {
            EdgeCutKind::UselessBridge
        };
        let e = if u < v { (u, v) } else { (v, u) };
        bridges.push((e, kind));
    }
    bridges.sort_by_key(|&(e, _)| e);
    (bridges, blocks)
}

/// All minimal two-edge separators: removing the pair disconnects the
/// non-isolated part of `g`, removing either edge alone does not. Found by
/// O(m²) delete-and-test, which doubles as its own oracle at desk scale.
pub fn two_edge_cuts(g: &Graph) -> Result<Vec<((usize, usize), (usize, usize))>, DecompError> {
    if !is_connected(g) {
        return Err(DecompError::NotConnected);
    }
    let active: Vec<usize> = g.non_isolated();
    if active.is_empty() {
        return Ok(Vec::new());
    }
    let edges = g.edges();
    let is_bridge: Vec<bool> = edges
        .iter()
        .map(|&(u, v)| {
            let mut h = g.clone();
            h.remove_edge(u, v);
            !connected_over(&h, &active)
        })
        .collect();
    let mut cuts = Vec::new();
    for i in 0..edges.len() {
        if is_bridge[i] {
            continue;
        }
        for j in i + 1..edges.len() {
            if is_bridge[j] {
                continue;
            }
            let mut h = g.clone();
            h.remove_edge(edges[i].0, edges[i].1);
            h.remove_edge(edges[j].0, edges[j].1);
            if !connected_over(&h, &active) {
                cuts.push((edges[i], edges[j]));
            }
        }
    }
    Ok(cuts)
}

/// Is the vertex set `verts` contained in one component of `g`?
fn connected_over(g: &Graph, verts: &[usize]) -> bool {
    if verts.len() <= 1 {
        return true;
    }
    let mut seen = alloc::vec![false; g.n()];
    let mut stack = alloc::vec![verts[0]];
    seen[verts[0]] = true;
    let mut reached = 1;
    let target: BTreeSet<usize> = verts.iter().copied().collect();
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                if target.contains(&w) {
                    reached += 1;
                }
                stack.push(w);
            }
        }
    }
    reached == verts.len()
}

/// A simple cycle through both `u` and `v`, built from two internally
/// vertex-disjoint u–v paths found by a unit-capacity flow computation.
pub fn cycle_through_pair(g: &Graph, u: usize, v: usize) -> Result<VertexCycle, DecompError> {
    assert!(u != v, "cycle_through_pair needs two distinct vertices");
    let paths = two_disjoint_paths(g, u, v)?;
    let (p1, p2) = paths;
    let mut cyc: Vec<usize> = p1.vertices().to_vec();
    // append interior of the second path walking back from v to u
    let inner = &p2.vertices()[1..p2.vertices().len() - 1];
    cyc.extend(inner.iter().rev());
    Ok(VertexCycle::new(cyc))
}

/// Two internally vertex-disjoint u–v paths (Menger), via two rounds of
/// augmenting paths on the vertex-split unit-capacity digraph.
pub fn two_disjoint_paths(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(VertexPath, VertexPath), DecompError> {
    let n = g.n();
    // Arc capacities: every vertex w ∉ {u, v} becomes w_in → w_out with
    // capacity 1; each undirected edge xy becomes x_out → y_in and
    // y_out → x_in. Nodes: 2w = w_in, 2w + 1 = w_out.
    // Residual bookkeeping via a map of arc → used (all capacities are 1).
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let arcs = |node: usize, used: &BTreeSet<(usize, usize)>| -> Vec<usize> {
        let mut out = Vec::new();
        let w = node / 2;
        if node % 2 == 0 {
            // w_in: forward through the vertex, plus residual arcs back
            // along edges that carried flow into w.
            if !used.contains(&(node, node + 1)) {
                out.push(node + 1);
            }
            for &x in g.neighbors(w) {
                if used.contains(&(2 * x + 1, node)) {
                    out.push(2 * x + 1);
                }
            }
        } else {
            // w_out: along edges, plus the residual arc back through w.
            for &x in g.neighbors(w) {
                if !used.contains(&(node, 2 * x)) {
                    out.push(2 * x);
                }
            }
            if used.contains(&(node - 1, node)) {
                out.push(node - 1);
            }
        }
        out
    };

    let source = 2 * u + 1;
    let sink = 2 * v;
    for _round in 0..2 {
        // BFS over residual arcs
        let mut parent = alloc::vec![usize::MAX; 2 * n];
        let mut queue = alloc::collections::VecDeque::new();
        parent[source] = source;
        queue.push_back(source);
        let mut reached = false;
        'bfs: while let Some(x) = queue.pop_front() {
            for y in arcs(x, &used) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    if y == sink {
                        reached = true;
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        if !reached {
            return Err(DecompError::NotTwoConnected);
        }
        // augment along the BFS path, cancelling residual arcs
        let mut y = sink;
        while y != source {
            let x = parent[y];
            if used.contains(&(y, x)) {
                used.remove(&(y, x));
            } else {
                used.insert((x, y));
            }
            y = x;
        }
    }

    // Decompose the 2-unit flow into two vertex-disjoint paths by tracing
    // used arcs from the source, lowest continuation first.
    let mut trace = || -> VertexPath {
        let mut verts = alloc::vec![u];
        let mut node = source;
        while node != sink {
            let next = arcs_with_flow(node, &used, g);
            let y = next[0];
            used.remove(&(node, y));
            if y % 2 == 0 && y != sink {
                // entering vertex y/2; pass through it
                verts.push(y / 2);
                used.remove(&(y, y + 1));
                node = y + 1;
            } else {
                node = y;
            }
        }
        verts.push(v);
        VertexPath::new(verts)
    };
    let p1 = trace();
    let p2 = trace();
    Ok((p1, p2))
}

fn arcs_with_flow(node: usize, used: &BTreeSet<(usize, usize)>, g: &Graph) -> Vec<usize> {
    let w = node / 2;
    debug_assert!(node % 2 == 1, "flow trace always leaves via an out-node");
    let mut out = Vec::new();
    for &x in g.neighbors(w) {
        if used.contains(&(node, 2 * x)) {
            out.push(2 * x);
        }
    }
    debug_assert!(!out.is_empty(), "flow conservation violated");
    out
}

/// Partitions the edge set of an even graph into simple cycles: Hierholzer
/// circuit per component, then a stack pass cutting the circuit at repeated
/// vertices.
pub fn euler_cycle_partition(g: &Graph) -> Result<Vec<VertexCycle>, DecompError> {
    for v in 0..g.n() {
        if g.degree(v) % 2 == 1 {
            return Err(DecompError::OddVertex(v));
        }
    }
    let mut remaining = g.clone();
    let mut out = Vec::new();
    for comp in edge_components(g) {
        let circuit = euler_circuit_from(&mut remaining, comp[0]);
        out.extend(split_circuit(&circuit));
    }
    Ok(out)
}

/// Hierholzer starting at `start`, consuming edges of `remaining` in the
/// component of `start`. Returns the closed walk as a vertex list whose
/// last entry equals the first.
fn euler_circuit_from(remaining: &mut Graph, start: usize) -> Vec<usize> {
    let mut circuit = Vec::new();
    let mut stack = alloc::vec![start];
    while let Some(&v) = stack.last() {
        if remaining.degree(v) == 0 {
            circuit.push(v);
            stack.pop();
        } else {
            let w = remaining.neighbors(v)[0];
            remaining.remove_edge(v, w);
            stack.push(w);
        }
    }
    circuit.reverse();
    circuit
}

/// Cuts a closed walk into simple cycles (a walk in a simple graph never
/// immediately backtracks an unused edge, so every piece has length ≥ 3).
fn split_circuit(circuit: &[usize]) -> Vec<VertexCycle> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let max = circuit.iter().copied().max().unwrap_or(0);
    let mut pos = alloc::vec![usize::MAX; max + 1];
    for &v in circuit {
        if pos[v] != usize::MAX {
            let at = pos[v];
            let cyc: Vec<usize> = stack[at..].to_vec();
            debug_assert!(cyc.len() >= 3, "closed walk of length < 3 in a simple graph");
            for &w in &stack[at + 1..] {
                pos[w] = usize::MAX;
            }
            stack.truncate(at + 1);
            out.push(VertexCycle::new(cyc));
        } else {
            pos[v] = stack.len();
            stack.push(v);
        }
    }
    debug_assert!(stack.len() <= 1, "circuit did not close");
    out
}

/// Exact girth: for every edge uv, the shortest cycle through uv is one
/// plus the shortest u–v path avoiding uv. `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        if let Some(d) = bfs_avoiding_edge(g, u, v) {
            let cyc = d + 1;
            if best.map_or(true, |b| cyc < b) {
                best = Some(cyc);
            }
        }
    }
    best
}

fn bfs_avoiding_edge(g: &Graph, u: usize, v: usize) -> Option<usize> {
    let mut dist = alloc::vec![usize::MAX; g.n()];
    let mut queue = alloc::collections::VecDeque::new();
    dist[u] = 0;
    queue.push_back(u);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if (x == u && y == v) || (x == v && y == u) {
                continue;
            }
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if y == v {
                    return Some(dist[y]);
                }
                queue.push_back(y);
            }
        }
    }
    None
}
