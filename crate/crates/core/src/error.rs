use std::fmt;

/// Errors surfaced by graph construction, family constructors, moves and the
/// verification harness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A line of edge-list input that is not two integers.
    MalformedLine { line_no: usize, line: String },
    /// An edge (v, v).
    SelfLoop { line_no: usize, vertex: usize },
    /// The same undirected edge listed twice.
    DuplicateEdge { line_no: usize, u: usize, v: usize },
    /// The parsed graph does not reach every vertex from vertex 0.
    Disconnected { unreachable: usize },
    /// A vertex id outside 0..n.
    VertexOutOfRange { vertex: usize, n: usize },
    /// The edge count does not match a tree of this order.
    NotATree { n: usize, edges: usize },
    /// Leaves of the one-vertex tree are undefined.
    SingletonTree,
    /// (n, k) outside the range a family constructor accepts.
    InvalidParams { what: &'static str },
    /// Comet hub offset outside the interior of the spine.
    InvalidHubPosition { position: usize, max: usize },
    /// Family variant index out of range.
    InvalidVariant { variant: usize, count: usize },
    /// The vertex to relocate is not a leaf.
    NotALeaf { vertex: usize },
    /// Relocation target is the leaf's current neighbor (a no-op).
    TargetIsNeighbor { leaf: usize, target: usize },
    /// Relocation target is the leaf itself.
    TargetIsSelf { vertex: usize },
    /// The vertex passed as centroid is not one.
    NotACentroid { vertex: usize },
    /// An optimizer found no admissible move before reaching its fixed point.
    /// This signals a violated theorem and must never fire.
    NoProgress { status: usize },
    /// Requested enumeration order exceeds the implementation cap.
    OrderTooLarge { n: usize, cap: usize },
    /// More extra edges requested than a simple graph of this order has room for.
    TooManyEdges { requested: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedLine { line_no, line } => {
                write!(f, "line {line_no}: expected two vertex ids, got {line:?}")
            }
            Error::SelfLoop { line_no, vertex } => {
                write!(f, "line {line_no}: self-loop at vertex {vertex}")
            }
            Error::DuplicateEdge { line_no: 0, u, v } => {
                write!(f, "duplicate edge ({u}, {v})")
            }
            Error::DuplicateEdge { line_no, u, v } => {
                write!(f, "line {line_no}: duplicate edge ({u}, {v})")
            }
            Error::Disconnected { unreachable } => {
                write!(f, "graph is disconnected: vertex {unreachable} unreachable from 0")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            Error::NotATree { n, edges } => {
                write!(f, "graph of order {n} with {edges} edges is not a tree")
            }
            Error::SingletonTree => write!(f, "the one-vertex tree has no leaves"),
            Error::InvalidParams { what } => write!(f, "invalid parameters: {what}"),
            Error::InvalidHubPosition { position, max } => {
                write!(f, "hub position {position} not in 1..={max}")
            }
            Error::InvalidVariant { variant, count } => {
                write!(f, "variant {variant} out of range (family has {count})")
            }
            Error::NotALeaf { vertex } => write!(f, "vertex {vertex} is not a leaf"),
            Error::TargetIsNeighbor { leaf, target } => {
                write!(f, "target {target} is already the neighbor of leaf {leaf}")
            }
            Error::TargetIsSelf { vertex } => {
                write!(f, "cannot attach leaf {vertex} to itself")
            }
            Error::NotACentroid { vertex } => write!(f, "vertex {vertex} is not a centroid vertex"),
            Error::NoProgress { status } => {
                write!(f, "no admissible move at status {status}; a theorem is violated")
            }
            Error::OrderTooLarge { n, cap } => {
                write!(f, "order {n} exceeds the enumeration cap {cap}")
            }
            Error::TooManyEdges { requested, max } => {
                write!(f, "{requested} extra edges requested, at most {max} possible")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
