use crate::polygon::Segment;

/// Everything that can go wrong across the crate's fallible entry points.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    PolygonTooSmall(u32),
    #[error("vertex {label} is out of range for an {n}-gon")]
    VertexOutOfRange { label: u32, n: u32 },
    #[error("segment endpoints must be distinct")]
    DegenerateSegment,
    #[error("segment {0} is not a diagonal")]
    NotADiagonal(Segment),
    #[error("duplicate diagonal {0}")]
    DuplicateDiagonal(Segment),
    #[error("an {n}-gon triangulation has {expected} diagonals, got {got}")]
    WrongDiagonalCount { n: u32, expected: u32, got: u32 },
    #[error("diagonals {0} and {1} cross")]
    CrossingDiagonals(Segment, Segment),
    #[error("marked-triangulation counting starts at half-size 2, got {0}")]
    HalfSizeTooSmall(u32),
    #[error("steps must balance and never dip below the axis")]
    InvalidDyckPath,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("range [{lo}, {hi}] is outside the domain of {identity} (n >= {min})")]
    RangeOutsideDomain {
        identity: &'static str,
        lo: u32,
        hi: u32,
        min: u32,
    },
    #[error("empty range [{lo}, {hi}]")]
    EmptyRange { lo: u32, hi: u32 },
    #[error("bound must be at least {min}, got {got}")]
    RangeBelowMinimum { got: u32, min: u32 },
}
