use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty family: at least one basis is required")]
    EmptyFamily,
    #[error("bases have unequal cardinality: |{0:?}| != |{1:?}|")]
    UnequalCardinality(Vec<usize>, Vec<usize>),
    #[error("basis exchange fails for B1={b1:?}, B2={b2:?}, x={x}")]
    ExchangeViolation { b1: Vec<usize>, b2: Vec<usize>, x: usize },
    #[error("family is not an antichain: {0:?} contains {1:?}")]
    NotAntichain(Vec<usize>, Vec<usize>),
    #[error("invalid rank {k} for ground set of size {n}")]
    InvalidRank { k: isize, n: usize },
    #[error("element {0} out of range 1..={1}")]
    OutOfRange(usize, usize),
    #[error("element {0} lies in no basis (loop); not allowed at top level")]
    LoopElement(usize),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("face {0:?} is dependent")]
    DependentFace(Vec<usize>),
    #[error("matroid is a star (centers {0:?})")]
    StarMatroid(Vec<usize>),
    #[error("matroid is free: no circuit exists")]
    FreeMatroid,
    #[error("matroid has no circuit")]
    NoCircuit,
    #[error("matroid has rank zero")]
    ZeroRank,
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge {0}-{1} is a self-loop")]
    SelfLoop(usize, usize),
    #[error("void complex")]
    VoidComplex,
    #[error("face {0:?} is not in the complex")]
    FaceNotInComplex(Vec<usize>),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("negative support {0:?} is not a face of the complex")]
    NegativeSupportNotFace(Vec<usize>),
    #[error("Betti box too large: {0} evaluations exceed the cap")]
    BoxTooLarge(usize),
    #[error("search budget exceeded after {0} homology evaluations")]
    BudgetExceeded(usize),
    #[error("check not applicable: {0}")]
    Inapplicable(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
