//! Palindromic tree (eertree) with undo, richness and complete returns.
//!
//! Appending a letter to a word creates at most one new distinct palindromic
//! factor, namely its longest palindromic suffix, so a word of length `n` has
//! at most `n` non-empty palindromic factors and is *rich* when it has exactly
//! `n`. The eertree keeps one node per distinct palindrome and reports, for
//! each appended letter, whether that letter created one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{is_palindrome, occurrences, to_digits, Letter, Word};

/// Node 0: the imaginary root of length −1. Node 1: the empty palindrome.
const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;
/// No real node is ever the target of an edge into a root, so 0 marks a
/// missing edge.
const NO_EDGE: u32 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Journal {
    previous_suffix: u32,
    /// Node whose outgoing edge was added by this push, if a node was created.
    created_from: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eertree {
    alphabet_size: usize,
    len: Vec<i32>,
    link: Vec<u32>,
    /// End position (inclusive) of the first occurrence.
    first_end: Vec<usize>,
    /// `edges[node * alphabet_size + a]`: node for `a · pal(node) · a`.
    edges: Vec<u32>,
    longest_suffix: u32,
    text: Vec<Letter>,
    history: Vec<Journal>,
}

impl Eertree {
    pub fn new(alphabet_size: usize) -> Self {
        Eertree {
            alphabet_size,
            len: vec![-1, 0],
            link: vec![IMAGINARY, IMAGINARY],
            first_end: vec![0, 0],
            edges: vec![NO_EDGE; 2 * alphabet_size],
            longest_suffix: EMPTY,
            text: Vec::new(),
            history: Vec::new(),
        }
    }

    pub fn from_letters(alphabet_size: usize, letters: &[Letter]) -> Self {
        let mut tree = Self::new(alphabet_size);
        for &a in letters {
            tree.push(a);
        }
        tree
    }

    fn edge(&self, node: u32, a: Letter) -> u32 {
        self.edges[node as usize * self.alphabet_size + a as usize]
    }

    /// Follows suffix links from `node` to the longest palindromic suffix `x`
    /// of the current text such that `a · x · a` ends at position `i`.
    fn extendable(&self, mut node: u32, i: usize, a: Letter) -> u32 {
        loop {
            let l = self.len[node as usize];
            // the imaginary root always matches
            if l == -1 {
                return node;
            }
            let l = l as usize;
            if i > l && self.text[i - l - 1] == a {
                return node;
            }
            node = self.link[node as usize];
        }
    }

    /// Appends a letter. Returns the number of new distinct palindromes (0 or 1).
    ///
    /// Panics if the letter is outside the alphabet.
    pub fn push(&mut self, a: Letter) -> usize {
        assert!(
            (a as usize) < self.alphabet_size,
            "letter {a} outside alphabet of size {}",
            self.alphabet_size
        );
        let i = self.text.len();
        self.text.push(a);
        let parent = self.extendable(self.longest_suffix, i, a);
        let existing = self.edge(parent, a);
        if existing != NO_EDGE {
            self.history.push(Journal {
                previous_suffix: self.longest_suffix,
                created_from: None,
            });
            self.longest_suffix = existing;
            return 0;
        }

        let new_len = self.len[parent as usize] + 2;
        let link = if new_len == 1 {
            EMPTY
        } else {
            let from = self.extendable(self.link[parent as usize], i, a);
            self.edge(from, a)
        };
        let id = self.len.len() as u32;
        self.len.push(new_len);
        self.link.push(link);
        self.first_end.push(i);
        self.edges
            .extend(std::iter::repeat_n(NO_EDGE, self.alphabet_size));
        self.edges[parent as usize * self.alphabet_size + a as usize] = id;
        self.history.push(Journal {
            previous_suffix: self.longest_suffix,
            created_from: Some(parent),
        });
        self.longest_suffix = id;
        1
    }

    /// Undoes the most recent push.
    pub fn pop(&mut self) -> Result<()> {
        let entry = self.history.pop().ok_or(Error::Underflow)?;
        let a = self.text.pop().expect("text and history have equal length");
        if let Some(parent) = entry.created_from {
            self.edges[parent as usize * self.alphabet_size + a as usize] = NO_EDGE;
            self.len.pop();
            self.link.pop();
            self.first_end.pop();
            self.edges.truncate(self.len.len() * self.alphabet_size);
        }
        self.longest_suffix = entry.previous_suffix;
        Ok(())
    }

    /// Distinct non-empty palindromic factors of the text.
    pub fn palindrome_count(&self) -> usize {
        self.len.len() - 2
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }

    pub fn depth(&self) -> usize {
        self.text.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn longest_suffix_palindrome_len(&self) -> usize {
        self.len[self.longest_suffix as usize].max(0) as usize
    }

    /// Every distinct non-empty palindromic factor, in creation order.
    pub fn palindromes(&self) -> impl Iterator<Item = &[Letter]> + '_ {
        (2..self.len.len()).map(move |node| {
            let end = self.first_end[node] + 1;
            &self.text[end - self.len[node] as usize..end]
        })
    }

    #[cfg(test)]
    fn check_links(&self) {
        for node in 2..self.len.len() {
            assert!(self.len[self.link[node] as usize] < self.len[node]);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichnessReport {
    pub is_rich: bool,
    pub palindrome_count: usize,
    pub length: usize,
    /// Shortest prefix with fewer distinct palindromes than letters.
    pub first_deficient_prefix_length: Option<usize>,
}

pub fn is_rich(word: &Word) -> RichnessReport {
    richness(word.alphabet_size(), word.letters())
}

pub fn richness(alphabet_size: usize, letters: &[Letter]) -> RichnessReport {
    let mut tree = Eertree::new(alphabet_size);
    let mut first_deficient = None;
    for (i, &a) in letters.iter().enumerate() {
        if tree.push(a) == 0 && first_deficient.is_none() {
            first_deficient = Some(i + 1);
        }
    }
    RichnessReport {
        is_rich: first_deficient.is_none(),
        palindrome_count: tree.palindrome_count(),
        length: letters.len(),
        first_deficient_prefix_length: first_deficient,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnWord {
    pub pivot: String,
    pub occurrence: String,
    pub start_position: usize,
}

/// Complete returns to the palindrome `p` in `w`: factors containing exactly
/// two occurrences of `p`, one as prefix and one as suffix. Consecutive
/// occurrences of `p` delimit them. Ordered by first start position, with
/// repeated contents dropped.
pub fn complete_returns(w: &Word, p: &Word) -> Result<Vec<ReturnWord>> {
    if !p.is_palindrome() {
        return Err(Error::NotAPalindrome(p.to_string()));
    }
    if p.is_empty() {
        return Err(Error::NotAFactor(String::new()));
    }
    let occ = w.occurrences(p.letters());
    if occ.is_empty() {
        return Err(Error::NotAFactor(p.to_string()));
    }
    Ok(returns_from_occurrences(w.letters(), p.letters(), &occ))
}

fn returns_from_occurrences(w: &[Letter], p: &[Letter], occ: &[usize]) -> Vec<ReturnWord> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for pair in occ.windows(2) {
        let u = &w[pair[0]..pair[1] + p.len()];
        if seen.insert(u) {
            out.push(ReturnWord {
                pivot: to_digits(p),
                occurrence: to_digits(u),
                start_position: pair[0],
            });
        }
    }
    out
}

/// True iff every complete return to every palindromic factor of `w` is a
/// palindrome. For finite words this holds exactly when `w` is rich.
pub fn check_glen_characterization(w: &Word) -> bool {
    let tree = Eertree::from_letters(w.alphabet_size(), w.letters());
    let all_returns_palindromic = tree.palindromes().all(|p| {
        let occ = occurrences(w.letters(), p);
        occ.windows(2)
            .all(|pair| is_palindrome(&w.letters()[pair[0]..pair[1] + p.len()]))
    });
    all_returns_palindromic
}
