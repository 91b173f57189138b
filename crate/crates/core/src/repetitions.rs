//! Exact repetition exponents.
//!
//! A factor of length `L` with minimal period `p` has exponent `L/p`. Exponents
//! and bounds are kept as reduced fractions of machine integers and compared
//! by cross-multiplication; floating point is only used to print the
//! irrational binary-rich threshold.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::Letter;

pub type Rational = Ratio<u64>;

/// Parses `"14/5"` or `"3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: u64 = num.parse().map_err(|_| bad())?;
    let den: u64 = den.parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn ratio(len: usize, period: usize) -> Rational {
    Rational::new(len as u64, period as u64)
}

/// The most repetitive factor of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentReport {
    #[serde(with = "rational_string")]
    pub max_exponent: Rational,
    pub witness_start: usize,
    pub witness_length: usize,
    pub witness_period: usize,
}

impl ExponentReport {
    pub fn witness<'a>(&self, letters: &'a [Letter]) -> &'a [Letter] {
        &letters[self.witness_start..self.witness_start + self.witness_length]
    }
}

/// Maximal exponent over all factors, with the witness of smallest start
/// (then smallest period) among the maximizers.
///
/// For each period `p` the maximal runs of `w[i] = w[i+p]` give exactly the
/// maximal factors having period `p`. A maximizing factor's period is
/// automatically minimal, since a smaller period would give a larger exponent.
/// Periods are scanned upward and the scan stops once `|w|/p` drops below the
/// best exponent found.
pub fn max_exponent(letters: &[Letter]) -> Result<ExponentReport> {
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut best = ExponentReport {
        max_exponent: Rational::from_integer(1),
        witness_start: 0,
        witness_length: 1,
        witness_period: 1,
    };
    let consider = |start: usize, run: usize, p: usize, best: &mut ExponentReport| {
        let e = ratio(run + p, p);
        if e > best.max_exponent || (e == best.max_exponent && start < best.witness_start) {
            *best = ExponentReport {
                max_exponent: e,
                witness_start: start,
                witness_length: run + p,
                witness_period: p,
            };
        }
    };
    for p in 1..n {
        if ratio(n, p) < best.max_exponent {
            break;
        }
        let mut run = 0;
        for i in 0..n - p {
            if letters[i] == letters[i + p] {
                run += 1;
            } else {
                if run > 0 {
                    consider(i - run, run, p, &mut best);
                }
                run = 0;
            }
        }
        if run > 0 {
            consider(n - p - run, run, p, &mut best);
        }
    }
    Ok(best)
}

/// Maximal exponent among the suffixes of `w`: the only new factors created
/// by the last letter.
pub fn extension_exponent(letters: &[Letter]) -> Result<ExponentReport> {
    let n = letters.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut best = ExponentReport {
        max_exponent: Rational::from_integer(1),
        witness_start: n - 1,
        witness_length: 1,
        witness_period: 1,
    };
    for p in 1..n {
        if ratio(n, p) <= best.max_exponent {
            break;
        }
        let run = suffix_run(letters, p, n - p);
        let e = ratio(run + p, p);
        if e > best.max_exponent {
            best = ExponentReport {
                max_exponent: e,
                witness_start: n - run - p,
                witness_length: run + p,
                witness_period: p,
            };
        }
    }
    Ok(best)
}

/// Number of trailing positions `i` (at most `limit`) with `w[i] = w[i-p]`.
fn suffix_run(letters: &[Letter], p: usize, limit: usize) -> usize {
    let n = letters.len();
    (0..limit)
        .take_while(|&j| letters[n - 1 - j] == letters[n - 1 - j - p])
        .count()
}

/// Which exponents a word may contain.
///
/// `strict = false` forbids exponents `≥ bound` (bound-free); `strict = true`
/// forbids only exponents `> bound` (bound⁺-free).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessPolicy {
    #[serde(with = "rational_string")]
    bound: Rational,
    strict: bool,
}

impl FreenessPolicy {
    pub fn new(bound: Rational, strict: bool) -> Result<Self> {
        if bound <= Rational::from_integer(1) {
            return Err(Error::BoundTooSmall(bound.to_string()));
        }
        Ok(FreenessPolicy { bound, strict })
    }

    /// Non-strict `bound`-freeness.
    pub fn free(bound: Rational) -> Result<Self> {
        Self::new(bound, false)
    }

    pub fn bound(&self) -> Rational {
        self.bound
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn allows(&self, exponent: Rational) -> bool {
        if self.strict {
            exponent <= self.bound
        } else {
            exponent < self.bound
        }
    }

    /// Shortest length of a forbidden factor with period `p`.
    pub fn violation_length(&self, p: usize) -> usize {
        let scaled = self.bound * Rational::from_integer(p as u64);
        let len = if self.strict {
            scaled.floor() + Rational::from_integer(1)
        } else {
            scaled.ceil()
        };
        len.to_integer() as usize
    }

    /// Does some suffix of `w` with period at most `period_cap` violate the
    /// policy? `None` means every period is checked.
    pub fn suffix_violates(&self, letters: &[Letter], period_cap: Option<usize>) -> bool {
        let n = letters.len();
        let max_p = period_cap.unwrap_or(n).min(n.saturating_sub(1));
        for p in 1..=max_p {
            let need = self.violation_length(p);
            if need > n {
                break;
            }
            if suffix_run(letters, p, need - p) == need - p {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for FreenessPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}-free",
            self.bound,
            if self.strict { "+" } else { "" }
        )
    }
}

impl FromStr for FreenessPolicy {
    type Err = Error;

    /// `"14/5"` for 14/5-free, `"14/5+"` for 14/5⁺-free.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_suffix('+') {
            Some(b) => Self::new(parse_rational(b)?, true),
            None => Self::new(parse_rational(s)?, false),
        }
    }
}

/// `ε` is free under every policy.
pub fn is_free(letters: &[Letter], policy: &FreenessPolicy) -> bool {
    match max_exponent(letters) {
        Ok(report) => policy.allows(report.max_exponent),
        Err(_) => true,
    }
}

/// Largest exponent of a prefix of `w` having period at most `max_period`.
pub fn max_prefix_exponent(letters: &[Letter], max_period: usize) -> Option<ExponentReport> {
    let n = letters.len();
    (1..=max_period.min(n))
        .map(|p| {
            let run = (0..n - p)
                .take_while(|&i| letters[i] == letters[i + p])
                .count();
            ExponentReport {
                max_exponent: ratio(run + p, p),
                witness_start: 0,
                witness_length: run + p,
                witness_period: p,
            }
        })
        .max_by(|a, b| {
            a.max_exponent
                .cmp(&b.max_exponent)
                .then(b.witness_period.cmp(&a.witness_period))
        })
}

/// Repetition threshold of the full `n`-letter alphabet: 7/4 for three
/// letters, 7/5 for four, `n/(n-1)` otherwise.
pub fn dejean_threshold(n: usize) -> Result<Rational> {
    match n {
        0 | 1 => Err(Error::Domain(format!(
            "repetition threshold needs at least two letters, got {n}"
        ))),
        3 => Ok(Rational::new(7, 4)),
        4 => Ok(Rational::new(7, 5)),
        n => Ok(Rational::new(n as u64, n as u64 - 1)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RichThreshold {
    /// Rational bound used by the good-word predicate.
    pub floor: Rational,
    /// `2 + √2/2`, for display only.
    pub target: f64,
}

pub fn rich_threshold() -> RichThreshold {
    RichThreshold {
        floor: Rational::new(14, 5),
        target: 2.0 + std::f64::consts::SQRT_2 / 2.0,
    }
}

pub(crate) mod rational_string {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;

    fn l(s: &str) -> Vec<Letter> {
        s.bytes().map(|b| b - b'0').collect()
    }

    fn q(n: u64, d: u64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn max_exponent_examples() {
        let r = max_exponent(&l("0000")).unwrap();
        assert_eq!(
            (
                r.max_exponent,
                r.witness_start,
                r.witness_length,
                r.witness_period
            ),
            (q(4, 1), 0, 4, 1)
        );
        let r = max_exponent(&l("00100100")).unwrap();
        assert_eq!(
            (r.max_exponent, r.witness_length, r.witness_period),
            (q(8, 3), 8, 3)
        );
        assert_eq!(max_exponent(&l("01")).unwrap().max_exponent, q(1, 1));
        assert_eq!(max_exponent(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn ties_prefer_earliest_start() {
        // squares 00 at 0 and 11 at 2 both have exponent 2
        let r = max_exponent(&l("0011")).unwrap();
        assert_eq!((r.witness_start, r.witness_period), (0, 1));
        let r = max_exponent(&l("10100")).unwrap();
        assert_eq!(r.max_exponent, q(2, 1));
        assert_eq!(
            (r.witness_start, r.witness_length, r.witness_period),
            (0, 4, 2)
        );
    }

    #[test]
    fn freeness_examples() {
        let three = FreenessPolicy::free(q(3, 1)).unwrap();
        assert!(is_free(&l("00100100"), &three));
        assert!(!is_free(&l("001001001"), &three));
        assert!(is_free(&[], &three));
        assert!(FreenessPolicy::free(q(1, 1)).is_err());
    }

    #[test]
    fn boundary_exponent_separates_strict_and_non_strict() {
        let w = l("00101001010010");
        let brute = naive::max_exponent(&w);
        assert_eq!(brute, q(14, 5));
        assert_eq!(naive::minimal_period(&w), 5);
        let r = max_exponent(&w).unwrap();
        assert_eq!(r.max_exponent, q(14, 5));
        let bound = rich_threshold().floor;
        assert!(!is_free(&w, &FreenessPolicy::new(bound, false).unwrap()));
        assert!(is_free(&w, &FreenessPolicy::new(bound, true).unwrap()));
    }

    #[test]
    fn extension_exponent_examples() {
        assert_eq!(
            extension_exponent(&l("001001001")).unwrap().max_exponent,
            q(3, 1)
        );
        assert_eq!(extension_exponent(&l("01")).unwrap().max_exponent, q(1, 1));
        let r = extension_exponent(&l("0010010")).unwrap();
        assert_eq!(
            (r.max_exponent, r.witness_period, r.witness_start),
            (q(7, 3), 3, 0)
        );
        assert_eq!(extension_exponent(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn violation_lengths() {
        let p = FreenessPolicy::free(q(14, 5)).unwrap();
        assert_eq!(p.violation_length(5), 14);
        assert_eq!(p.violation_length(1), 3);
        let s = FreenessPolicy::new(q(14, 5), true).unwrap();
        assert_eq!(s.violation_length(5), 15);
        assert_eq!(s.violation_length(1), 3);
        assert_eq!(
            FreenessPolicy::free(q(2, 1)).unwrap().violation_length(3),
            6
        );
        assert_eq!(
            FreenessPolicy::new(q(2, 1), true)
                .unwrap()
                .violation_length(3),
            7
        );
    }

    #[test]
    fn thresholds() {
        assert_eq!(dejean_threshold(2).unwrap(), q(2, 1));
        assert_eq!(dejean_threshold(3).unwrap(), q(7, 4));
        assert_eq!(dejean_threshold(4).unwrap(), q(7, 5));
        assert_eq!(dejean_threshold(5).unwrap(), q(5, 4));
        assert!(dejean_threshold(1).is_err());
        let rt = rich_threshold();
        assert_eq!(rt.floor, q(14, 5));
        assert!((rt.target - 2.707_106_781_186_547_6).abs() < 1e-15);
        assert!(2.8 > rt.target);
        assert!((*dejean_threshold(2).unwrap().numer() as f64) < rt.target);
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("14/5").unwrap(), q(14, 5));
        assert_eq!(parse_rational("3").unwrap(), q(3, 1));
        assert_eq!(parse_rational("28/10").unwrap(), q(14, 5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let p: FreenessPolicy = "14/5+".parse().unwrap();
        assert!(p.is_strict());
        assert_eq!(p.to_string(), "14/5+-free");
    }

    #[test]
    fn prefix_exponent() {
        let r = max_prefix_exponent(&l("0010010"), 4).unwrap();
        assert_eq!((r.max_exponent, r.witness_period), (q(7, 3), 3));
        assert!(max_prefix_exponent(&[], 4).is_none());
    }

    fn binary_words(max_len: usize) -> impl Iterator<Item = Vec<Letter>> {
        (1..=max_len).flat_map(|n| {
            (0u32..1 << n).map(move |bits| (0..n).map(|i| ((bits >> i) & 1) as Letter).collect())
        })
    }

    #[test]
    fn incremental_consistency() {
        for w in binary_words(12) {
            let via_prefixes = (1..=w.len())
                .map(|k| extension_exponent(&w[..k]).unwrap().max_exponent)
                .max()
                .unwrap();
            assert_eq!(via_prefixes, max_exponent(&w).unwrap().max_exponent);
        }
    }

    #[test]
    fn suffix_check_matches_extension_exponent() {
        let policies = [
            FreenessPolicy::free(q(3, 1)).unwrap(),
            FreenessPolicy::free(q(14, 5)).unwrap(),
            FreenessPolicy::new(q(14, 5), true).unwrap(),
            FreenessPolicy::new(q(2, 1), true).unwrap(),
        ];
        for w in binary_words(11) {
            let e = extension_exponent(&w).unwrap().max_exponent;
            for p in &policies {
                assert_eq!(p.suffix_violates(&w, None), !p.allows(e), "{w:?} {p}");
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn appending_never_decreases(w in proptest::collection::vec(0u8..2, 1..60), a in 0u8..2) {
            let before = max_exponent(&w).unwrap().max_exponent;
            let mut x = w.clone();
            x.push(a);
            proptest::prop_assert!(max_exponent(&x).unwrap().max_exponent >= before);
        }

        #[test]
        fn witness_is_consistent(w in proptest::collection::vec(0u8..3, 1..80)) {
            let r = max_exponent(&w).unwrap();
            let z = r.witness(&w);
            proptest::prop_assert_eq!(naive::minimal_period(z), r.witness_period);
            proptest::prop_assert_eq!(ratio(z.len(), r.witness_period), r.max_exponent);
        }
    }
}
