use thiserror::Error;

/// Which homological condition broke an ordered pair of a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairDefect {
    Hom,
    Ext,
}

impl std::fmt::Display for PairDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairDefect::Hom => f.write_str("Hom"),
            PairDefect::Ext => f.write_str("Ext"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("quiver has an oriented cycle through vertex {0}")]
    Cycle(usize),
    #[error("vertex index {index} out of range 1..={n}")]
    Index { index: i64, n: usize },
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("quiver {0} is not of finite (Dynkin) type")]
    NotFiniteType(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error(
        "not an exceptional sequence: {defect}(E{later}, E{earlier}) is nonzero (positions are 1-based)"
    )]
    NotExceptional {
        later: usize,
        earlier: usize,
        defect: PairDefect,
    },
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rank {rank} exceeds the rank cap {cap} (raise EXCSEQ_RANK_CAP)")]
    Scale { rank: usize, cap: usize },
    #[error("integrity failure: {0}")]
    Integrity(String),
}

impl Error {
    /// True for errors caused by malformed or inconsistent user input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Cycle(_)
                | Error::Index { .. }
                | Error::Dimension { .. }
                | Error::Catalog(_)
                | Error::NotExceptional { .. }
                | Error::InvalidTuple(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
