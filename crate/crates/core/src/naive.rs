//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions, with no shared code
//! paths into the incremental structures, and is only meant for short words.
//! The test suites and the `verify` oracle checks compare the fast
//! implementations against these.

use std::collections::BTreeSet;

use crate::repetitions::{FreenessPolicy, Rational};
use crate::words::Letter;

/// Smallest `p ≥ 1` with `z[i] = z[i+p]` for all valid `i`; `0` for `ε`.
pub fn minimal_period(z: &[Letter]) -> usize {
    (1..=z.len())
        .find(|&p| (0..z.len() - p).all(|i| z[i] == z[i + p]))
        .unwrap_or(0)
}

/// `max |z| / per(z)` over every factor `z`, by enumerating all
/// `(start, length)` pairs. Returns `0` for `ε`.
pub fn max_exponent(w: &[Letter]) -> Rational {
    let mut best = Rational::from_integer(0);
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            let z = &w[start..end];
            let e = Rational::new(z.len() as u64, minimal_period(z) as u64);
            if e > best {
                best = e;
            }
        }
    }
    best
}

fn is_palindrome(z: &[Letter]) -> bool {
    (0..z.len() / 2).all(|i| z[i] == z[z.len() - 1 - i])
}

/// Distinct non-empty palindromic factors.
pub fn palindromic_factors(w: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            if is_palindrome(&w[start..end]) {
                out.insert(w[start..end].to_vec());
            }
        }
    }
    out
}

pub fn is_rich(w: &[Letter]) -> bool {
    palindromic_factors(w).len() == w.len()
}

pub fn is_free(w: &[Letter], policy: &FreenessPolicy) -> bool {
    w.is_empty() || policy.allows(max_exponent(w))
}

/// Least word of length `n` over `Σ_alphabet` accepted by `accept`, scanning
/// all `alphabet^n` words in lexicographic order.
pub fn lex_least(
    n: usize,
    alphabet: u8,
    accept: impl Fn(&[Letter]) -> bool,
) -> Option<Vec<Letter>> {
    let mut w = vec![0; n];
    loop {
        if accept(&w) {
            return Some(w);
        }
        // odometer increment, most significant letter first
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if w[i] + 1 < alphabet {
                w[i] += 1;
                w[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

/// Complete returns to `p`: factors with exactly two occurrences of `p`, one
/// as prefix and one as suffix. Checked occurrence by occurrence.
pub fn complete_returns(w: &[Letter], p: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for start in 0..w.len() {
        for end in start + 1..=w.len() {
            let u = &w[start..end];
            if u.len() <= p.len() || !u.starts_with(p) || !u.ends_with(p) {
                continue;
            }
            let count = (0..=u.len() - p.len())
                .filter(|&i| &u[i..i + p.len()] == p)
                .count();
            if count == 2 {
                out.insert(u.to_vec());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'0').collect()
    }

    #[test]
    fn periods() {
        assert_eq!(minimal_period(&l("")), 0);
        assert_eq!(minimal_period(&l("0")), 1);
        assert_eq!(minimal_period(&l("0101")), 2);
        assert_eq!(minimal_period(&l("00100100")), 3);
        assert_eq!(minimal_period(&l("011")), 3);
    }

    #[test]
    fn palindromes() {
        let got: Vec<_> = palindromic_factors(&l("00100")).into_iter().collect();
        assert_eq!(got, [l("0"), l("00"), l("00100"), l("010"), l("1")]);
        assert!(is_rich(&l("0102")));
        assert!(!is_rich(&l("00101100")));
        assert!(is_rich(&l("0010110")));
    }

    #[test]
    fn lex_least_enumeration() {
        assert_eq!(lex_least(3, 2, |w| w.contains(&1)), Some(l("001")));
        assert_eq!(lex_least(2, 2, |_| false), None);
        assert_eq!(lex_least(0, 2, |_| true), Some(vec![]));
    }

    #[test]
    fn returns() {
        let got: Vec<_> = complete_returns(&l("000"), &l("0")).into_iter().collect();
        assert_eq!(got, [l("00")]);
        let got: Vec<_> = complete_returns(&l("0110"), &l("0")).into_iter().collect();
        assert_eq!(got, [l("0110")]);
    }
}
