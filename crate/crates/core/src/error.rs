use alloc::string::String;

use crate::adm_seq::Interval;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown type label `{0}`")]
    UnknownType(String),
    #[error("rank {0} is out of the supported bounds")]
    UnsupportedRank(usize),
    #[error("node {0} is not a vertex of the Dynkin diagram")]
    InvalidNode(usize),
    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),
    #[error("orientation contains a cycle")]
    CyclicOrientation,
    #[error("position {pos} lies outside the window {window}")]
    OutOfWindow { pos: i64, window: Interval },
    #[error("window {0} exhausted; enlarge the window")]
    WindowExhausted(Interval),
    #[error("sequence has no periodic data and cannot be re-windowed")]
    NotPeriodic,
    #[error("[{a},{b}] is not an i-box: colors {left} and {right} differ")]
    ColorMismatch { a: i64, b: i64, left: usize, right: usize },
    #[error("operation needs a nonempty box")]
    UnitBox,
    #[error("box [{0},{1}] is a singleton and has no T-system")]
    SingletonBox(i64, i64),
    #[error("position {0} is outside the chain")]
    ChainIndex(usize),
    #[error("box c_{0} is not movable")]
    NotMovable(usize),
    #[error("move B_{0} changes the box set but is not a mutation")]
    NotAPermutation(usize),
    #[error("chain ranges differ: {0} vs {1}")]
    RangeMismatch(Interval, Interval),
    #[error("range of size {0} exceeds the enumeration cap {1}")]
    RangeTooLarge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("series of order {have} is too short, need order {need}")]
    SeriesOrder { have: usize, need: usize },
    #[error("vertex {0} is frozen")]
    Frozen(usize),
    #[error("vertex {0} is not a seed vertex")]
    VertexIndex(usize),
    #[error("term cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("monomial is not dominant")]
    NotDominant,
    #[error("Frenkel-Mukhin expansion failed at a non-{0}-dominant monomial")]
    FmFailure(usize),
    #[error("division is not exact")]
    InexactDivision,
    #[error("seed has no cluster variables attached")]
    NoClusterVariables,
    #[error("mutation word of length {0} exceeds the cap {1}")]
    WordTooLong(usize, usize),
    #[error("transport mismatch at move {0}: mutated label differs from the chain box")]
    TransportMismatch(usize),
}
