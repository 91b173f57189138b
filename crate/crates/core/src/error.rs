use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: expected size {expected}, found {found}")]
    AlphabetMismatch { expected: u8, found: u8 },

    #[error("letter {letter} is outside the alphabet of size {alphabet_size}")]
    InvalidLetter { letter: u8, alphabet_size: u8 },

    #[error("alphabet size must be between 1 and 10, got {0}")]
    InvalidAlphabetSize(usize),

    #[error("invalid character {0:?} in word (expected a digit)")]
    InvalidDigit(char),

    #[error("word is not a prefix of the given word")]
    NotAPrefix,

    #[error("length {length} out of range 0..={max}")]
    LengthOutOfRange { length: usize, max: usize },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("morphism image for letter {0} is empty")]
    ErasingImage(u8),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),

    #[error("morphism is not prolongable on letter {0}")]
    NotProlongable(u8),

    #[error("word begins with the cube 111")]
    CubeDetected,

    #[error("{0:?} is not a palindrome")]
    NotAPalindrome(String),

    #[error("{0:?} is not a factor of the word")]
    NotAFactor(String),

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("freeness bound must exceed 1, got {0}")]
    BoundTooSmall(String),

    #[error("invalid predicate {0:?}")]
    InvalidPredicate(String),

    #[error("{0}")]
    Domain(String),

    #[error("pop on an empty palindromic tree")]
    Underflow,
}
