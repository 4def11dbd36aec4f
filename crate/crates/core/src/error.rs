//! Error type shared by every operation in the crate. Witnesses are reported
//! by element label so messages stay meaningful after serialization.

use thiserror::Error;

/// Which binary operation a closure check failed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Meet,
    Join,
}

impl std::fmt::Display for BinOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BinOp::Meet => write!(f, "meet"),
            BinOp::Join => write!(f, "join"),
        }
    }
}

/// A map-preservation property that can be requested and certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    /// All joins, including the empty one (so the bottom element as well).
    Joins,
    /// Binary (hence all non-empty finite) meets.
    FiniteMeets,
    Bottom,
    Top,
}

impl std::fmt::Display for Flag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flag::Joins => write!(f, "joins"),
            Flag::FiniteMeets => write!(f, "finite meets"),
            Flag::Bottom => write!(f, "bottom"),
            Flag::Top => write!(f, "top"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    EmptyElements,

    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),

    #[error("cover relation refers to unknown label {0:?}")]
    UnknownLabel(String),

    #[error("cover relation has a cycle")]
    CyclicCovers,

    #[error("not a lattice: {a:?} and {b:?} have no unique {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: BoundKind,
    },

    #[error("size {size} exceeds the configured limit {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("subset is not closed: {op} of {a:?} and {b:?} falls outside it")]
    NotClosed { a: String, b: String, op: BinOp },

    #[error("subset does not contain both the bottom and the top element")]
    MissingBounds,

    #[error("map is not monotone: {a:?} <= {b:?} but the images are not ordered")]
    NotMonotone { a: String, b: String },

    #[error("map does not preserve {flag}: witness ({a:?}, {b:?})")]
    FlagFailed { flag: Flag, a: String, b: String },

    #[error("not an automorphism: witness ({a:?}, {b:?})")]
    NotAutomorphism { a: String, b: String },

    #[error("lattice is not distributive")]
    NotDistributive,

    #[error("{0}")]
    NotApplicable(String),

    #[error("space is not sober")]
    NotSober,

    #[error("map does not carry a join-preservation certificate")]
    NotJoinPreserving,

    #[error("restricted point is not meet-prime in the sublattice")]
    RestrictionNotPoint,

    #[error("support datum violates join compatibility: witness ({x:?} <= {a:?} v {b:?})")]
    SupportViolation { x: String, a: String, b: String },

    #[error("designation is tagged {found:?}, operation needs {needs:?}")]
    WrongTag { found: String, needs: String },

    #[error("mismatched inputs: {0}")]
    Mismatch(String),
}

/// Which bound was missing when a pair failed the lattice check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Glb,
    Lub,
    Bottom,
    Top,
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundKind::Glb => write!(f, "greatest lower bound"),
            BoundKind::Lub => write!(f, "least upper bound"),
            BoundKind::Bottom => write!(f, "bottom element"),
            BoundKind::Top => write!(f, "top element"),
        }
    }
}

pub type Result<T> = std::result::Result<T, LatticeError>;
