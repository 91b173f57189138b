//! Finite words over the alphabets `Σ_n = {0, …, n-1}`.
//!
//! Letters are small integers. A [`Word`] remembers the size of the alphabet it
//! lives over so that mixing, say, a ternary preimage with its binary image is
//! reported instead of silently accepted. Text I/O uses one decimal digit per
//! letter, which caps alphabets at ten letters.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = u8;

/// Largest alphabet representable by the digit I/O format.
pub const MAX_ALPHABET: usize = 10;

/// A finite word with a fixed alphabet size.
///
/// The derived `Ord` compares letters first, which is the usual lexicographic
/// order with a proper prefix preceding its extensions. Use
/// [`Word::lex_compare`] when the two words might come from different
/// alphabets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet_size: u8,
}

fn check_alphabet(alphabet_size: usize) -> Result<u8> {
    if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
        return Err(Error::InvalidAlphabetSize(alphabet_size));
    }
    Ok(alphabet_size as u8)
}

impl Word {
    pub fn new(alphabet_size: usize, letters: Vec<Letter>) -> Result<Self> {
        let alphabet_size = check_alphabet(alphabet_size)?;
        if let Some(&letter) = letters.iter().find(|&&l| l >= alphabet_size) {
            return Err(Error::InvalidLetter {
                letter,
                alphabet_size,
            });
        }
        Ok(Word {
            letters,
            alphabet_size,
        })
    }

    /// The empty word over `Σ_n`.
    pub fn empty(alphabet_size: usize) -> Result<Self> {
        Self::new(alphabet_size, Vec::new())
    }

    /// Parses a digit string over an explicit alphabet.
    pub fn parse(text: &str, alphabet_size: usize) -> Result<Self> {
        Self::new(alphabet_size, digits(text)?)
    }

    /// Parses a digit string, taking the smallest alphabet (at least binary)
    /// that contains every letter.
    pub fn from_digits(text: &str) -> Result<Self> {
        let letters = digits(text)?;
        let size = letters.iter().map(|&l| l as usize + 1).max().unwrap_or(0);
        Self::new(size.max(2), letters)
    }

    pub(crate) fn from_parts(alphabet_size: u8, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l < alphabet_size));
        Word {
            letters,
            alphabet_size,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size as usize
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet_size,
                found: other.alphabet_size,
            });
        }
        Ok(())
    }

    /// Lexicographic comparison. The empty word precedes every letter, so a
    /// proper prefix is smaller than any of its extensions.
    pub fn lex_compare(&self, other: &Word) -> Result<Ordering> {
        self.same_alphabet(other)?;
        Ok(self.letters.cmp(&other.letters))
    }

    pub fn reversal(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_parts(self.alphabet_size, letters)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.letters)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// Returns `v` such that `self = prefix · v`.
    pub fn strip_prefix(&self, prefix: &Word) -> Result<Word> {
        self.same_alphabet(prefix)?;
        match self.letters.strip_prefix(prefix.letters.as_slice()) {
            Some(rest) => Ok(Word::from_parts(self.alphabet_size, rest.to_vec())),
            None => Err(Error::NotAPrefix),
        }
    }

    /// All distinct factors of the given length.
    pub fn factors(&self, length: usize) -> Result<BTreeSet<Word>> {
        if length > self.len() {
            return Err(Error::LengthOutOfRange {
                length,
                max: self.len(),
            });
        }
        if length == 0 {
            return Ok(BTreeSet::from([Word::from_parts(
                self.alphabet_size,
                Vec::new(),
            )]));
        }
        Ok(self
            .letters
            .windows(length)
            .map(|w| Word::from_parts(self.alphabet_size, w.to_vec()))
            .collect())
    }

    /// Start positions of every occurrence of `pattern`, overlapping ones
    /// included.
    pub fn occurrences(&self, pattern: &[Letter]) -> Vec<usize> {
        occurrences(&self.letters, pattern)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts(self.alphabet_size, letters))
    }

    /// The prefix of length `min(n, |self|)`.
    pub fn prefix(&self, n: usize) -> Word {
        let n = n.min(self.len());
        Word::from_parts(self.alphabet_size, self.letters[..n].to_vec())
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter >= self.alphabet_size {
            return Err(Error::InvalidLetter {
                letter,
                alphabet_size: self.alphabet_size,
            });
        }
        self.letters.push(letter);
        Ok(())
    }
}

pub fn is_palindrome(letters: &[Letter]) -> bool {
    letters.iter().eq(letters.iter().rev())
}

pub fn occurrences(text: &[Letter], pattern: &[Letter]) -> Vec<usize> {
    if pattern.is_empty() {
        return (0..=text.len()).collect();
    }
    if pattern.len() > text.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

fn digits(text: &str) -> Result<Vec<Letter>> {
    text.chars()
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as Letter)
                .ok_or(Error::InvalidDigit(c))
        })
        .collect()
}

/// Renders letters as a digit string.
pub fn to_digits(letters: &[Letter]) -> String {
    letters.iter().map(|&l| char::from(b'0' + l)).collect()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_digits(&self.letters))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Word({:?}, n={})",
            to_digits(&self.letters),
            self.alphabet_size
        )
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::from_digits(s)
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}
