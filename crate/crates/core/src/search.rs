//! Lexicographically least words under incremental predicates.
//!
//! The search is a plain depth-first backtrack that tries letters in
//! ascending order. Each [`Predicate`] is told about every letter appended to
//! the candidate and every letter removed from it, so the richness and
//! freeness checks cost one eertree push or one suffix scan per node rather
//! than a pass over the whole word.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::palindromics::Eertree;
use crate::repetitions::{parse_rational, rich_threshold, FreenessPolicy};
use crate::words::{to_digits, Letter, Word};

/// A prefix-closed word property checked one letter at a time.
///
/// `accept` either extends the checker's word by `letter` and returns `true`,
/// or leaves the state untouched and returns `false`. `retract` removes the
/// last accepted letter.
pub trait Predicate: Send {
    fn name(&self) -> String;
    fn accept(&mut self, letter: Letter) -> bool;
    fn retract(&mut self);
    fn depth(&self) -> usize;
    /// Independent copy for exploring a disjoint subtree elsewhere.
    fn boxed_clone(&self) -> Box<dyn Predicate>;
}

/// Every prefix is rich: each new letter must create a new palindrome.
#[derive(Debug, Clone)]
pub struct Rich {
    tree: Eertree,
}

impl Rich {
    pub fn new(alphabet_size: usize) -> Self {
        Rich {
            tree: Eertree::new(alphabet_size),
        }
    }
}

impl Predicate for Rich {
    fn name(&self) -> String {
        "rich".into()
    }

    fn accept(&mut self, letter: Letter) -> bool {
        if self.tree.push(letter) == 1 {
            return true;
        }
        self.tree.pop().expect("just pushed");
        false
    }

    fn retract(&mut self) {
        self.tree.pop().expect("retract without accept");
    }

    fn depth(&self) -> usize {
        self.tree.depth()
    }

    fn boxed_clone(&self) -> Box<dyn Predicate> {
        Box::new(self.clone())
    }
}

/// No factor breaks the freeness policy. Only suffixes are checked on each
/// append, optionally restricted to periods up to `period_cap`.
#[derive(Debug, Clone)]
pub struct Free {
    policy: FreenessPolicy,
    period_cap: Option<usize>,
    word: Vec<Letter>,
}

impl Free {
    pub fn new(policy: FreenessPolicy) -> Self {
        Free {
            policy,
            period_cap: None,
            word: Vec::new(),
        }
    }

    pub fn with_period_cap(mut self, cap: usize) -> Self {
        self.period_cap = Some(cap);
        self
    }
}

impl Predicate for Free {
    fn name(&self) -> String {
        format!(
            "free:{}{}",
            self.policy.bound(),
            if self.policy.is_strict() { "+" } else { "" }
        )
    }

    fn accept(&mut self, letter: Letter) -> bool {
        self.word.push(letter);
        if self.policy.suffix_violates(&self.word, self.period_cap) {
            self.word.pop();
            return false;
        }
        true
    }

    fn retract(&mut self) {
        self.word.pop().expect("retract without accept");
    }

    fn depth(&self) -> usize {
        self.word.len()
    }

    fn boxed_clone(&self) -> Box<dyn Predicate> {
        Box::new(self.clone())
    }
}

/// Parses `rich`, `free:14/5` or `free:14/5+`. A bare `free:Q` becomes
/// strict when `strict` is set.
pub fn parse_predicate(
    spec: &str,
    alphabet_size: usize,
    strict: bool,
) -> Result<Box<dyn Predicate>> {
    match spec.trim().split_once(':') {
        None if spec.trim() == "rich" => Ok(Box::new(Rich::new(alphabet_size))),
        Some(("free", bound)) => {
            let policy = match bound.strip_suffix('+') {
                Some(b) => FreenessPolicy::new(parse_rational(b)?, true)?,
                None => FreenessPolicy::new(parse_rational(bound)?, strict)?,
            };
            Ok(Box::new(Free::new(policy)))
        }
        _ => Err(Error::InvalidPredicate(spec.to_string())),
    }
}

/// Binary rich and `14/5`-free (or `14/5⁺`-free when `strict`).
pub fn good_predicates(strict: bool) -> Vec<Box<dyn Predicate>> {
    let policy = FreenessPolicy::new(rich_threshold().floor, strict).expect("14/5 > 1");
    vec![Box::new(Rich::new(2)), Box::new(Free::new(policy))]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// `None` when the search space was exhausted.
    #[serde(with = "optional_word")]
    pub word: Option<Word>,
    /// Letters tried, accepted or not.
    pub nodes_visited: u64,
    /// Longest run of consecutive retreats.
    pub max_backtrack_depth: usize,
}

fn accept_all(predicates: &mut [Box<dyn Predicate>], letter: Letter) -> bool {
    for i in 0..predicates.len() {
        if !predicates[i].accept(letter) {
            predicates[..i].iter_mut().rev().for_each(|p| p.retract());
            return false;
        }
    }
    true
}

fn retract_all(predicates: &mut [Box<dyn Predicate>]) {
    predicates.iter_mut().rev().for_each(|p| p.retract());
}

/// Least word of length exactly `n` over `Σ_alphabet_size` all of whose
/// prefixes satisfy every predicate.
///
/// Predicates must start at depth 0 and are returned to depth 0.
pub fn lex_least_of_length(
    n: usize,
    alphabet_size: usize,
    predicates: &mut [Box<dyn Predicate>],
) -> Result<SearchOutcome> {
    Word::empty(alphabet_size)?;
    let alphabet = alphabet_size as Letter;
    let mut word: Vec<Letter> = Vec::with_capacity(n);
    // next letter to try at each depth
    let mut next: Vec<Letter> = vec![0];
    let mut nodes_visited = 0;
    let mut retreat = 0;
    let mut max_backtrack_depth = 0;
    let mut exhausted = false;

    while word.len() < n {
        let d = word.len();
        let mut placed = false;
        while next[d] < alphabet {
            let a = next[d];
            next[d] += 1;
            nodes_visited += 1;
            if accept_all(predicates, a) {
                word.push(a);
                next.push(0);
                placed = true;
                retreat = 0;
                break;
            }
        }
        if !placed {
            if d == 0 {
                exhausted = true;
                break;
            }
            next.pop();
            word.pop();
            retract_all(predicates);
            retreat += 1;
            max_backtrack_depth = max_backtrack_depth.max(retreat);
        }
    }
    for _ in 0..word.len() {
        retract_all(predicates);
    }
    Ok(SearchOutcome {
        word: (!exhausted).then(|| Word::from_parts(alphabet, word)),
        nodes_visited,
        max_backtrack_depth,
    })
}

/// Least length-`n` word having some extension of length `n + lookahead`
/// that satisfies every predicate.
///
/// This is the length-`n` prefix of the least word of length
/// `n + lookahead`. Larger lookaheads never give a smaller answer, and for
/// long enough lookaheads the answer is the length-`n` prefix of the least
/// infinite word with the property.
pub fn lex_least_extendable(
    n: usize,
    alphabet_size: usize,
    predicates: &mut [Box<dyn Predicate>],
    lookahead: usize,
) -> Result<SearchOutcome> {
    let mut outcome = lex_least_of_length(n + lookahead, alphabet_size, predicates)?;
    outcome.word = outcome.word.map(|w| w.prefix(n));
    Ok(outcome)
}

/// True iff every factor of length `factor_len` lying inside the first
/// `probe_len` letters of `w` occurs at least twice in `w`.
pub fn check_recurrence(w: &Word, factor_len: usize, probe_len: usize) -> Result<bool> {
    if probe_len > w.len() {
        return Err(Error::LengthOutOfRange {
            length: probe_len,
            max: w.len(),
        });
    }
    if factor_len > probe_len {
        return Err(Error::LengthOutOfRange {
            length: factor_len,
            max: probe_len,
        });
    }
    let letters = w.letters();
    if factor_len == 0 {
        return Ok(true);
    }
    let probe: HashSet<&[Letter]> = letters[..probe_len].windows(factor_len).collect();
    let mut counts: HashMap<&[Letter], u32> = HashMap::with_capacity(probe.len());
    let mut settled = 0;
    for window in letters.windows(factor_len) {
        if probe.contains(window) {
            let c = counts.entry(window).or_insert(0);
            *c += 1;
            if *c == 2 {
                settled += 1;
                if settled == probe.len() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Factors from the probe region that occur only once, for diagnostics.
pub fn unrecurrent_factors(w: &Word, factor_len: usize, probe_len: usize) -> Vec<String> {
    let letters = w.letters();
    let probe_len = probe_len.min(letters.len());
    if factor_len == 0 || factor_len > probe_len {
        return Vec::new();
    }
    let mut counts: HashMap<&[Letter], u32> = HashMap::new();
    for window in letters.windows(factor_len) {
        *counts.entry(window).or_insert(0) += 1;
    }
    let mut seen = HashSet::new();
    letters[..probe_len]
        .windows(factor_len)
        .filter(|z| counts[z] < 2 && seen.insert(*z))
        .map(to_digits)
        .collect()
}

mod optional_word {
    use crate::words::Word;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(w: &Option<Word>, s: S) -> Result<S::Ok, S::Error> {
        match w {
            Some(w) => s.serialize_some(&w.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Word>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| Word::from_digits(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}
