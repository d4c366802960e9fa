use thiserror::Error;

/// Errors raised by the geometric and lattice operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no primitive representative on the zero ray")]
    ZeroRay,

    #[error("degenerate parallelepiped")]
    DegenerateParallelepiped,

    #[error("vertices are not affinely independent")]
    AffinelyDependent,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("denominator defined for regular simplexes")]
    DenominatorOfNonRegular,

    #[error("Farey mediant defined for regular simplexes")]
    MediantOfNonRegular,

    #[error("blow-up center outside support")]
    CenterOutsideSupport,

    #[error("not unimodular")]
    NotUnimodularBasis,

    #[error("not unimodular (det = {0})")]
    NotUnimodular(String),

    #[error("cone not graph-positioned")]
    NotGraphPositioned,

    #[error("ray outside fan support")]
    RayOutsideSupport,

    #[error("not a lattice basis")]
    NotLatticeBasis,

    #[error("empty affine subspace")]
    EmptySubspace,

    #[error("λ requires a regular triangulation")]
    NonRegularTriangulation,

    #[error("triangulation support differs from the polyhedron")]
    SupportMismatch,

    #[error("Lebesgue volume needs full dimension")]
    NotFullDimensional,

    #[error("proportionality is per-subspace")]
    DifferentAffineHulls,

    #[error("zero-volume target")]
    ZeroVolumeTarget,

    #[error("invalid complex: {0}")]
    InvalidComplex(String),
}

pub type Result<T> = std::result::Result<T, Error>;
