use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// State dump attached to [`DecompError::UnreachableCase`].
///
/// The decomposition drivers implement exhaustive case analyses; if no case
/// fires, that is a bug in this crate, never a property of the input. The
/// report carries everything needed to reproduce: where the fall-through
/// happened and the edge list of the graph being processed at that moment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnreachableReport {
    /// Static identifier of the driver location that fell through.
    pub location: &'static str,
    /// Free-form state description (chosen vertices, counters, ...).
    pub detail: String,
    /// Edge list of the graph under consideration when the case analysis
    /// fell through, in host-graph vertex ids.
    pub edges: Vec<(usize, usize)>,
}

impl fmt::Display for UnreachableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unreachable case at {}: {} (edges: {:?})",
            self.location, self.detail, self.edges
        )
    }
}

/// Error type shared by every algorithm in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompError {
    /// The operation needs a connected input.
    NotConnected,
    /// No two internally disjoint paths between the requested vertices.
    NotTwoConnected,
    /// An even-degree precondition failed at this vertex.
    OddVertex(usize),
    /// The graph is not Eulerian (connected with all degrees even).
    NotEulerian,
    /// The graph has treewidth larger than 3.
    NotPartialThreeTree,
    /// A vertex exceeds the degree bound of the chosen algorithm.
    MaxDegreeExceeded(usize),
    /// Girth precondition (≥ 6) failed; payload is the girth found.
    GirthTooSmall(usize),
    /// A consequence of a caller-asserted property (e.g. planarity) failed
    /// at run time; the assertion was wrong for this input.
    StructuralAssumptionViolated(&'static str),
    /// Path/cycle split: the path carries more chords of the cycle than the
    /// split construction supports.
    ChordLimitExceeded,
    /// Inputs that must be edge-disjoint share an edge.
    NotEdgeDisjoint,
    /// The two structures must intersect in at least one vertex.
    NotTouching,
    /// Expected a graph isomorphic to K5 or K5 minus an edge.
    NotK5Like,
    /// Expected a proper subdivision of K5 minus an edge.
    NotK5MinusSubdivision,
    /// Lifting is not applicable (edge already present / legs missing).
    InvalidLift,
    /// Unlift could not find the lifted edge in any element.
    EdgeNotInDecomposition,
    /// Double-lifting side condition failed.
    SideConditionViolated,
    /// Named precondition failed.
    PreconditionViolated(&'static str),
    /// Internal arithmetic sentinel: a proven bound would be exceeded.
    BoundViolated(&'static str),
    /// The two paths do not share both endpoints.
    EndpointMismatch,
    /// Exact-solver cap exceeded.
    CapExceeded { vertices: usize, edges: usize },
    /// Cycle operations need all degrees even.
    NotEvenGraph,
    /// Generator specification invalid.
    InvalidSpec(&'static str),
    /// Endgame instance larger than the configured exact-solver cap.
    EndgameTooLarge { vertices: usize, cap: usize },
    /// A driver's case analysis fell through: implementation bug.
    UnreachableCase(UnreachableReport),
}

impl fmt::Display for DecompError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompError::NotConnected => write!(f, "graph is not connected"),
            DecompError::NotTwoConnected => write!(f, "no cycle through the requested vertices"),
            DecompError::OddVertex(v) => write!(f, "vertex {v} has odd degree"),
            DecompError::NotEulerian => write!(f, "graph is not Eulerian"),
            DecompError::NotPartialThreeTree => write!(f, "graph has treewidth greater than 3"),
            DecompError::MaxDegreeExceeded(v) => {
                write!(f, "vertex {v} exceeds the degree bound")
            }
            DecompError::GirthTooSmall(g) => write!(f, "girth {g} is below the required 6"),
            DecompError::StructuralAssumptionViolated(what) => {
                write!(f, "structural assumption violated: {what}")
            }
            DecompError::ChordLimitExceeded => {
                write!(f, "path carries too many chords of the cycle for a two-path split")
            }
            DecompError::NotEdgeDisjoint => write!(f, "inputs share an edge"),
            DecompError::NotTouching => write!(f, "inputs share no vertex"),
            DecompError::NotK5Like => write!(f, "expected K5 or K5 minus an edge"),
            DecompError::NotK5MinusSubdivision => {
                write!(f, "expected a proper subdivision of K5 minus an edge")
            }
            DecompError::InvalidLift => write!(f, "lifting not applicable here"),
            DecompError::EdgeNotInDecomposition => {
                write!(f, "lifted edge not found in the decomposition")
            }
            DecompError::SideConditionViolated => {
                write!(f, "double-lifting side condition violated")
            }
            DecompError::PreconditionViolated(what) => write!(f, "precondition violated: {what}"),
            DecompError::BoundViolated(what) => write!(f, "internal bound violated: {what}"),
            DecompError::EndpointMismatch => write!(f, "paths do not share both endpoints"),
            DecompError::CapExceeded { vertices, edges } => {
                write!(f, "instance ({vertices} vertices, {edges} edges) exceeds the exact-solver cap")
            }
            DecompError::NotEvenGraph => write!(f, "graph has a vertex of odd degree"),
            DecompError::InvalidSpec(what) => write!(f, "invalid generator spec: {what}"),
            DecompError::EndgameTooLarge { vertices, cap } => {
                write!(f, "endgame instance has {vertices} vertices, exceeding the cap {cap}")
            }
            DecompError::UnreachableCase(report) => write!(f, "{report}"),
        }
    }
}
