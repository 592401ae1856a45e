use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group size {0}: must be at least 1")]
    InvalidGroupSize(usize),
    #[error("group size {n} exceeds the configured maximum of {max}")]
    GroupTooLarge { n: usize, max: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("letter {letter} is not a generator of S_{n}")]
    LetterOutOfRange { letter: i32, n: usize },
    #[error("simple reflection s_{index} does not act on S_{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("position {position} is outside 1..={n}")]
    PositionOutOfRange { position: usize, n: usize },
    #[error("group sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("cannot embed S_{from} into smaller S_{to}")]
    EmbedTooSmall { from: usize, to: usize },
    #[error("length {length} exceeds the enumeration cap of {cap}")]
    LengthCapExceeded { length: usize, cap: usize },
    #[error("R(w) has {count} elements, above the cap of {cap}")]
    WordCountCapExceeded { count: u128, cap: usize },
    #[error("{x} is not below {y} in Bruhat order")]
    NotBelow { x: String, y: String },
    #[error("range {start}..{start}+{len} is out of bounds for a word of size {size}")]
    RangeOutOfBounds {
        start: usize,
        len: usize,
        size: usize,
    },
    #[error("substring at the given positions is not monotonic")]
    NotMonotonic,
    #[error("malformed poset: {0}")]
    MalformedPoset(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid swap-string: {0}")]
    InvalidSwapString(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// True for errors caused by an enumeration cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::GroupTooLarge { .. }
                | Error::LengthCapExceeded { .. }
                | Error::WordCountCapExceeded { .. }
        )
    }
}
