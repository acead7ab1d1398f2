use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("symbol `{0}` is declared twice")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(u16),
    #[error("words must contain at least one letter")]
    EmptyWord,
    #[error("center {center} is out of range for a word of length {len}")]
    CenterOutOfRange { center: usize, len: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error(
        "center {center} is not admissible for rule {rule} with contexts of length {left}/{right}"
    )]
    InadmissibleCenter {
        rule: usize,
        left: usize,
        right: usize,
        center: usize,
    },
    #[error("rule id {0} does not exist")]
    UnknownRule(usize),
    #[error("depth bound must be at least 1")]
    InvalidDepthBound,
    #[error("fuel must be at least 1")]
    InvalidFuel,
    #[error("fuel exhausted after adding {added} rules")]
    FuelExhausted { added: usize },
    #[error("word order `{name}` is not a monomial total order: {detail}")]
    InvalidOrder { name: String, detail: String },
    #[error("relation {0} has identical sides")]
    TrivialRelation(String),
    #[error("query of length {len} needs rules up to length {needed}, but the family is instantiated only up to {bound}")]
    BoundExceeded {
        len: usize,
        needed: usize,
        bound: usize,
    },
    #[error("bound {bound} is smaller than the longest support word ({len})")]
    BoundTooSmall { bound: usize, len: usize },
    #[error("normal form `{0}` is not a single diword")]
    NonMonomialNormalForm(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
