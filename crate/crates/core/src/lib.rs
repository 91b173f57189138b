//! Combinatorics on words around the lexicographically least binary rich word
//! whose critical exponent is the binary rich repetition threshold.
//!
//! The crate builds the morphic words `v = f(g(h^ω(0)))` and
//! `ℓ = f(01·g(h^ω(0)))`, decides richness with an undoable palindromic tree,
//! measures repetition exponents exactly, and searches for lexicographically
//! least words under incremental predicates. [`verify`] ties these together
//! into checkable claims.

pub mod error;
pub mod morphisms;
pub mod naive;
pub mod palindromics;
pub mod repetitions;
pub mod search;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use morphisms::{strip_3free_header, DecodeResult, FixedPointStream, Morphism};
pub use palindromics::{Eertree, ReturnWord, RichnessReport};
pub use repetitions::{ExponentReport, FreenessPolicy, Rational};
pub use search::{Predicate, SearchOutcome};
pub use verify::{RunConfig, Status, VerificationReport};
pub use words::{Letter, Word};
