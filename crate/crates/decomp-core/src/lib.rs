//! Edge-decomposition algorithms with certified outputs.
//!
//! The crate decomposes the edge set of a simple graph into paths (or, for
//! even graphs, cycles) while guaranteeing proven size bounds:
//!
//! * connected partial 3-trees: at most `⌊n/2⌋` paths, except for the two
//!   genuine outliers `K3` and `K5⁻`,
//! * connected Eulerian partial 3-trees: at most `⌊(n−1)/2⌋` cycles,
//! * connected graphs of maximum degree ≤ 4: at most `⌊n/2⌋` paths, except
//!   for `K3`, `K5`, `K5⁻`,
//! * connected Eulerian graphs of maximum degree 4: at most `⌊(n−1)/2⌋`
//!   cycles,
//! * connected planar graphs of girth ≥ 6: at most `⌊n/2⌋` paths,
//!
//! where `n` counts non-isolated vertices. Every decomposition an algorithm
//! returns has already been re-checked by [`graph::verify_decomposition`];
//! the `lab` module carries exact brute-force solvers used as ground truth
//! in tests.
//!
//! The crate is `no_std` (it allocates, nothing more); IO and file formats
//! live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod graph;
pub mod ktree;
pub mod lab;
pub mod special;
pub mod structure;

mod error;

pub use error::{DecompError, UnreachableReport};
pub use graph::{Decomposition, Element, Graph, Verdict, VertexCycle, VertexPath};
