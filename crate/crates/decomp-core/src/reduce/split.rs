//! Splitting an edge-disjoint path + cycle union into two paths.
//!
//! Given a path `P` and a cycle `C` that share no edge but at least one
//! vertex, `P + C` decomposes into two paths whenever either `P` carries at
//! most one chord of `C`, or `C` has length ≤ 5 and `P` carries at most
//! three chords. In the first regime the first output path contains exactly
//! one edge of `C` — a property downstream absorption steps rely on. The
//! limits are tight: a 5-cycle plus a path of four chords forms `K5⁻`, which
//! needs three paths.
//!
//! The construction is a case analysis over how the cycle's two anchor
//! neighbors (the cycle neighbors of the first shared vertex) sit on the
//! path. Every case is built explicitly; nothing is searched.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{DecompError, UnreachableReport};
use crate::graph::{VertexCycle, VertexPath};

/// Which construction produced the split — exposed so coverage tests can
/// confirm every branch fires.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitBranch {
    /// A cycle neighbor of the anchor is not on the path at all.
    AbsentNeighbor,
    /// A cycle neighbor is reached along the path through a detour of
    /// length ≥ 2, giving an edge to detach.
    DetachedSegment,
    /// 5-cycle, two chords landing apart on the path.
    C5SeparatedChords,
    /// 5-cycle, chords adjacent on the path, fifth vertex off the path.
    C5ApexOffPath,
    /// 5-cycle, chords adjacent, fifth vertex earlier on the path.
    C5ApexBefore,
    /// 5-cycle, chords adjacent, fifth vertex later on the path.
    C5ApexAfter,
}

/// Decomposes `p + c` into two paths. See the module docs for the
/// preconditions; the first returned path contains exactly one edge of `c`
/// whenever `p` has at most one chord of `c`.
pub fn two_path_split(
    p: &VertexPath,
    c: &VertexCycle,
) -> Result<(VertexPath, VertexPath), DecompError> {
    let (a, b, _) = two_path_split_traced(p, c)?;
    Ok((a, b))
}

/// As [`two_path_split`], also reporting which construction branch fired.
pub fn two_path_split_traced(
    p: &VertexPath,
    c: &VertexCycle,
) -> Result<(VertexPath, VertexPath, SplitBranch), DecompError> {
    let c_edges = c.edges();
    let p_edges = p.edges();
    for e in &p_edges {
        if c_edges.contains(e) {
            return Err(DecompError::NotEdgeDisjoint);
        }
    }
    let frame = match Frame::build(p.vertices(), c.vertices()) {
        Some(f) => f,
        None => return Err(DecompError::NotConnected),
    };
    let chords = frame.chord_count();
    if chords > 1 && !(c.vertices().len() <= 5 && chords <= 3) {
        return Err(DecompError::ChordLimitExceeded);
    }
    let (v1, v2, branch) = dispatch(frame)?;
    if chords <= 1 {
        debug_assert_eq!(
            count_cycle_edges(&v1, &c_edges),
            1,
            "first path must contain exactly one cycle edge"
        );
    }
    Ok((VertexPath::new(v1), VertexPath::new(v2), branch))
}

fn count_cycle_edges(verts: &[usize], c_edges: &[(usize, usize)]) -> usize {
    verts
        .windows(2)
        .filter(|w| {
            let e = if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) };
            c_edges.contains(&e)
        })
        .count()
}

/// Working coordinates: `p` as given (possibly reversed once), `c` rotated
/// so `c[0]` is the first shared vertex along `p`, reflected as the case
/// analysis demands.
struct Frame {
    p: Vec<usize>,
    c: Vec<usize>,
}

impl Frame {
    fn build(p: &[usize], c: &[usize]) -> Option<Frame> {
        let mut f = Frame { p: p.to_vec(), c: c.to_vec() };
        if f.rotate() {
            Some(f)
        } else {
            None
        }
    }

    /// Rotates `c` so that `c[0]` is the earliest path vertex lying on the
    /// cycle. False when path and cycle share no vertex.
    fn rotate(&mut self) -> bool {
        let anchor = match self.p.iter().find(|v| self.c.contains(v)) {
            Some(&v) => v,
            None => return false,
        };
        let at = self.c.iter().position(|&v| v == anchor).unwrap();
        self.c.rotate_left(at);
        true
    }

    /// Reverses the cycle's orientation while keeping the anchor first.
    fn reflect(&mut self) {
        self.c[1..].reverse();
    }

    fn pos(&self, v: usize) -> Option<usize> {
        self.p.iter().position(|&x| x == v)
    }

    /// Positions (indices into `p`) of shared vertices, ascending.
    fn shared_positions(&self) -> Vec<usize> {
        (0..self.p.len()).filter(|&i| self.c.contains(&self.p[i])).collect()
    }

    /// Length of the path segment from the previous shared vertex to `v`.
    fn seg_len_into(&self, v: usize) -> usize {
        let q = self.pos(v).expect("segment endpoint must be on the path");
        let prev = self
            .shared_positions()
            .into_iter()
            .filter(|&i| i < q)
            .next_back()
            .expect("anchor precedes every other shared vertex");
        q - prev
    }

    fn chord_count(&self) -> usize {
        self.p
            .windows(2)
            .filter(|w| self.c.contains(&w[0]) && self.c.contains(&w[1]))
            .count()
    }

    fn unreachable(&self, detail: String) -> DecompError {
        let mut edges: Vec<(usize, usize)> = self
            .p
            .windows(2)
            .map(|w| if w[0] < w[1] { (w[0], w[1]) } else { (w[1], w[0]) })
            .collect();
        let k = self.c.len();
        for i in 0..k {
            let (a, b) = (self.c[i], self.c[(i + 1) % k]);
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
        DecompError::UnreachableCase(UnreachableReport {
            location: "two_path_split",
            detail,
            edges,
        })
    }
}

type Split = (Vec<usize>, Vec<usize>, SplitBranch);

fn dispatch(mut f: Frame) -> Result<Split, DecompError> {
    for _ in 0..2 {
        let l = f.c.len() - 1;
        if f.pos(f.c[1]).is_none() {
            return Ok(claim_absent(&f));
        }
        if f.pos(f.c[l]).is_none() {
            f.reflect();
            return Ok(claim_absent(&f));
        }
        if f.seg_len_into(f.c[1]) >= 2 {
            return Ok(claim_detached(&f));
        }
        if f.seg_len_into(f.c[l]) >= 2 {
            f.reflect();
            return Ok(claim_detached(&f));
        }
        // Both anchor neighbors are hit by length-1 segments, i.e. two
        // distinct chords. Under the chord gate this can only happen on a
        // 5-cycle: a triangle admits no chords, and on a 4-cycle both
        // segments would have to be the single diagonal.
        if f.c.len() != 5 {
            return Err(f.unreachable(format!(
                "two length-1 chord segments on a cycle of length {}",
                f.c.len()
            )));
        }
        if f.pos(f.c[1]).unwrap() > f.pos(f.c[4]).unwrap() {
            f.reflect();
        }
        let qi = f.pos(f.c[1]).unwrap();
        let qj = f.pos(f.c[4]).unwrap();
        if qj != qi + 1 {
            return c5_separated(&f);
        }
        match f.pos(f.c[2]) {
            None => return c5_apex_off(&f),
            Some(qr) if qr < qi => return c5_apex_before(&f),
            Some(qr) => {
                debug_assert!(qr > qj, "apex cannot sit between its own chords");
                if qr == qj + 1 {
                    // the trailing segment is itself a chord; flip the path
                    // so the chord-free end leads (the ≤3-chord gate
                    // guarantees the other end is free)
                    f.p.reverse();
                    if !f.rotate() {
                        unreachable!("shared vertices survive a reversal");
                    }
                    continue;
                }
                return c5_apex_after(&f);
            }
        }
    }
    Err(Frame { p: Vec::new(), c: Vec::new() }
        .unreachable(String::from("path reversal failed to settle the apex case")))
}

/// Cycle neighbor `c[1]` is off the path: take the path from the anchor on,
/// entered through the single cycle edge anchor–`c[1]`; the rest of the
/// cycle plus the path prefix forms the second path.
fn claim_absent(f: &Frame) -> Split {
    let q0 = f.pos(f.c[0]).unwrap();
    let mut p1 = alloc::vec![f.c[1]];
    p1.extend_from_slice(&f.p[q0..]);
    let mut p2 = f.p[..=q0].to_vec();
    p2.extend(f.c[1..].iter().rev().copied());
    (p1, p2, SplitBranch::AbsentNeighbor)
}

/// Cycle neighbor `c[1]` is on the path with a detour of length ≥ 2 before
/// it: detach the detour's last edge, reroute through the anchor.
fn claim_detached(f: &Frame) -> Split {
    let q0 = f.pos(f.c[0]).unwrap();
    let q = f.pos(f.c[1]).unwrap();
    let mut p1: Vec<usize> = f.p[q0..q].iter().rev().copied().collect();
    p1.extend_from_slice(&f.p[q..]);
    let mut p2 = f.p[..=q0].to_vec();
    p2.extend(f.c[1..].iter().rev().copied());
    p2.push(f.p[q - 1]);
    (p1, p2, SplitBranch::DetachedSegment)
}

/// 5-cycle with chords `c[3]`–`c[1]` and `c[2]`–`c[4]` landing apart on the
/// path (shared order anchor, c3, c1, c2, c4).
fn c5_separated(f: &Frame) -> Result<Split, DecompError> {
    let q0 = f.pos(f.c[0]).unwrap();
    let qi = f.pos(f.c[1]).unwrap();
    let qj = f.pos(f.c[4]).unwrap();
    if f.p[qi - 1] != f.c[3] || f.p[qj - 1] != f.c[2] {
        return Err(f.unreachable(format!(
            "separated chords do not land on expected cycle vertices: {} {}",
            f.p[qi - 1],
            f.p[qj - 1]
        )));
    }
    let mut p1 = alloc::vec![f.p[qi + 1], f.c[1], f.c[0]];
    p1.extend_from_slice(&f.p[q0 + 1..=qi - 1]);
    p1.push(f.c[2]);
    p1.extend_from_slice(&f.p[qj..]);
    let mut p2 = f.p[..=q0].to_vec();
    p2.extend([f.c[4], f.c[3], f.c[1]]);
    p2.extend(f.p[qi + 1..=qj - 1].iter().rev().copied());
    Ok((p1, p2, SplitBranch::C5SeparatedChords))
}

/// 5-cycle, chords adjacent on the path, apex `c[2]` not on the path.
fn c5_apex_off(f: &Frame) -> Result<Split, DecompError> {
    let q0 = f.pos(f.c[0]).unwrap();
    let qi = f.pos(f.c[1]).unwrap();
    let qj = qi + 1;
    if f.p[qi - 1] != f.c[3] {
        return Err(f.unreachable(String::from("chord into c1 must come from c3")));
    }
    let mut p1 = f.p[..=q0].to_vec();
    p1.extend([f.c[4], f.c[3], f.c[1], f.c[2]]);
    let mut p2: Vec<usize> = f.p[qj..].iter().rev().copied().collect();
    p2.extend([f.c[1], f.c[0]]);
    p2.extend_from_slice(&f.p[q0 + 1..=qi - 1]);
    p2.push(f.c[2]);
    Ok((p1, p2, SplitBranch::C5ApexOffPath))
}

/// 5-cycle, chords adjacent, apex `c[2]` earlier on the path than the
/// chords (shared order anchor, c2, c3, c1, c4).
fn c5_apex_before(f: &Frame) -> Result<Split, DecompError> {
    let qi = f.pos(f.c[1]).unwrap();
    let qj = qi + 1;
    let qr = f.pos(f.c[2]).unwrap();
    let qy3 = qi - 1;
    if f.p[qy3] != f.c[3] || qr >= qy3 {
        return Err(f.unreachable(String::from("apex-before ordering violated")));
    }
    let mut p1 = f.p[..=qr].to_vec();
    p1.extend([f.c[1], f.c[4], f.c[3], f.p[qy3 - 1]]);
    let mut p2: Vec<usize> = f.p[qj..].iter().rev().copied().collect();
    p2.extend([f.c[0], f.c[1], f.c[3]]);
    p2.extend_from_slice(&f.p[qr..=qy3 - 1]);
    Ok((p1, p2, SplitBranch::C5ApexBefore))
}

/// 5-cycle, chords adjacent, apex `c[2]` later on the path than the chords
/// (shared order anchor, c3, c1, c4, c2), trailing segment not a chord.
fn c5_apex_after(f: &Frame) -> Result<Split, DecompError> {
    let q0 = f.pos(f.c[0]).unwrap();
    let qi = f.pos(f.c[1]).unwrap();
    let qj = qi + 1;
    let qr = f.pos(f.c[2]).unwrap();
    if f.p[qi - 1] != f.c[3] {
        return Err(f.unreachable(String::from("chord into c1 must come from c3")));
    }
    let mut p1 = f.p[..=q0].to_vec();
    p1.extend([f.c[4], f.c[1], f.c[3], f.c[2], f.p[qr - 1]]);
    let mut p2: Vec<usize> = f.p[qj..=qr - 1].iter().rev().copied().collect();
    p2.extend(f.p[q0..=qi - 1].iter().rev().copied());
    p2.push(f.c[1]);
    p2.extend_from_slice(&f.p[qr..]);
    Ok((p1, p2, SplitBranch::C5ApexAfter))
}
