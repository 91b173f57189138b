//! Checkable claims about `v = f(g(h^ω(0)))` and `ℓ = f(01·g(h^ω(0)))`.
//!
//! Each `verify_*` function runs a family of sub-checks on finite prefixes
//! and returns a [`VerificationReport`] that records the parameters used and
//! enough evidence (words, counts, exponents) to redo the check by hand.
//! Several reports include control sub-checks that are expected to come out
//! negative, so a report cannot pass just because a check is vacuous.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::morphisms::{strip_3free_header, Morphism};
use crate::naive;
use crate::palindromics::{check_glen_characterization, complete_returns, richness, Eertree};
use crate::repetitions::{
    max_exponent, max_prefix_exponent, rich_threshold, FreenessPolicy, Rational,
};
use crate::search::{
    check_recurrence, good_predicates, lex_least_extendable, lex_least_of_length,
    unrecurrent_factors, Free, Predicate, Rich,
};
use crate::words::{is_palindrome, to_digits, Letter, Word};

/// Length-`n` prefix of `h^ω(0)`.
pub fn build_h_fixed_point(n: usize) -> Word {
    Morphism::h()
        .fixed_point_prefix(0, n)
        .expect("h is prolongable on 0")
}

/// Length-`n` prefix of `g(h^ω(0))`.
pub fn build_gh(n: usize) -> Word {
    let g = Morphism::g();
    let source = build_h_fixed_point(n / g.min_image_len() + 1);
    g.apply(&source).expect("ternary").prefix(n)
}

/// Length-`n` prefix of `v = f(g(h^ω(0)))`.
pub fn build_v(n: usize) -> Word {
    let fg = Morphism::compose(&Morphism::f(), &Morphism::g()).expect("g: Σ3 → Σ3");
    let source = build_h_fixed_point(n / fg.min_image_len() + 1);
    fg.apply(&source).expect("ternary").prefix(n)
}

/// Length-`n` prefix of `ℓ = f(01·g(h^ω(0)))`.
pub fn build_ell(n: usize) -> Word {
    let mut preimage: Vec<Letter> = vec![0, 1];
    preimage.extend_from_slice(build_gh(n).letters());
    let image = Morphism::f().apply_letters(&preimage);
    Word::new(2, image).expect("binary").prefix(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub status: Status,
    pub parameters: BTreeMap<String, String>,
    pub evidence: BTreeMap<String, String>,
    pub checks: Vec<SubCheck>,
}

impl VerificationReport {
    fn new(claim_id: &str) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            status: Status::Pass,
            parameters: BTreeMap::new(),
            evidence: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn evidence(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.evidence.insert(key.to_string(), value.to_string());
        self
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) -> bool {
        self.push_check(name, Status::of(ok), detail.into());
        ok
    }

    fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.push_check(name, Status::Skipped, detail.into());
    }

    fn push_check(&mut self, name: &str, status: Status, detail: String) {
        if status == Status::Fail {
            self.status = Status::Fail;
        }
        self.checks.push(SubCheck {
            name: name.to_string(),
            status,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] {}", self.status, self.claim_id)?;
        for (k, v) in &self.parameters {
            writeln!(f, "    param {k} = {v}")?;
        }
        for c in &self.checks {
            writeln!(f, "    [{}] {}: {}", c.status, c.name, c.detail)?;
        }
        for (k, v) in &self.evidence {
            writeln!(f, "    evidence {k} = {}", abbreviate(v, 120))?;
        }
        Ok(())
    }
}

fn abbreviate(s: &str, max: usize) -> String {
    if s.chars().count() <= max {
        s.to_string()
    } else {
        let head: String = s.chars().take(max).collect();
        format!("{head}… ({} chars)", s.chars().count())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub prefix_length: usize,
    pub search_length: usize,
    pub lookahead: usize,
    pub policy: FreenessPolicy,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prefix_length: 10_000,
            search_length: 100,
            lookahead: 200,
            policy: FreenessPolicy::free(rich_threshold().floor).expect("14/5 > 1"),
        }
    }
}

fn cube_free() -> FreenessPolicy {
    FreenessPolicy::free(Rational::from_integer(3)).expect("3 > 1")
}

fn is_free_under(letters: &[Letter], policy: &FreenessPolicy) -> bool {
    letters.is_empty() || policy.allows(max_exponent(letters).expect("non-empty").max_exponent)
}

/// Morphism tables, order preservation and prolongability.
pub fn verify_constants() -> VerificationReport {
    let mut r = VerificationReport::new("constants");
    let tables = [
        (Morphism::f(), ["0", "01", "011"]),
        (Morphism::g(), ["011", "0121", "012121"]),
        (Morphism::h(), ["01", "02", "022"]),
    ];
    for (m, expected) in &tables {
        let name = m.name().unwrap_or("?");
        let got: Vec<String> = m.images().map(to_digits).collect();
        r.check(&format!("{name}-table"), got == expected, got.join(" "));
        r.check(
            &format!("{name}-order-preserving"),
            m.is_order_preserving(8),
            "all source words up to length 8",
        );
    }
    let fg = Morphism::compose(&Morphism::f(), &Morphism::g()).expect("composable");
    let fg0 = to_digits(fg.images().next().expect("three images"));
    r.check(
        "f∘g(0)",
        fg0 == "00101",
        format!("f(g(0)) = f(011) = {fg0}"),
    );
    r.check(
        "h-prolongable-on-0",
        Morphism::h().is_prolongable(0),
        "h(0) = 01",
    );
    r
}

/// The least 3-free binary word of length 8 is a dead end, forcing the least
/// infinite extension to start 001001010.
pub fn verify_cube_dead_end(policy: &FreenessPolicy, lookahead: usize) -> VerificationReport {
    let mut r = VerificationReport::new("cube-dead-end");
    r.param("policy", policy).param("lookahead", lookahead);
    let mut preds: Vec<Box<dyn Predicate>> = vec![Box::new(Free::new(*policy))];

    let least8 = lex_least_of_length(8, 2, &mut preds)
        .expect("binary")
        .word
        .map(|w| w.to_string())
        .unwrap_or_default();
    r.evidence("least8", &least8);
    r.check(
        "least-length-8",
        least8 == "00100100",
        format!("got {least8:?}"),
    );

    for a in ['0', '1'] {
        let ext = format!("00100100{a}");
        let letters: Vec<Letter> = ext.bytes().map(|b| b - b'0').collect();
        let report = max_exponent(&letters).expect("non-empty");
        let witness = to_digits(report.witness(&letters));
        r.evidence(
            &format!("witness-{ext}"),
            format!("{witness} (exponent {})", report.max_exponent),
        );
        r.check(
            &format!("{ext}-not-free"),
            !policy.allows(report.max_exponent),
            format!(
                "max exponent {} at {}",
                report.max_exponent, report.witness_start
            ),
        );
    }

    if lookahead == 0 {
        r.skip("least-extendable-9", "lookahead 0");
    } else {
        let w = lex_least_extendable(9, 2, &mut preds, lookahead)
            .expect("binary")
            .word
            .map(|w| w.to_string())
            .unwrap_or_default();
        r.evidence("least-extendable-9", &w);
        r.check("least-extendable-9", w == "001001010", format!("got {w:?}"));
    }
    r
}

/// `v` is rich and free at desk scale, and `ℓ = 001·v`.
pub fn verify_v_good(cfg: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new("v-good");
    let n = cfg.prefix_length;
    r.param("prefix_length", n).param("policy", cfg.policy);
    let v = build_v(n);
    let ell = build_ell(n + 3);
    let rich = richness(2, v.letters());
    r.check(
        "v-rich",
        rich.is_rich,
        format!(
            "{} palindromes in {} letters",
            rich.palindrome_count, rich.length
        ),
    );
    if let Ok(e) = max_exponent(v.letters()) {
        r.evidence("v-max-exponent", e.max_exponent)
            .evidence("v-witness", to_digits(e.witness(v.letters())));
        r.check(
            "v-free",
            cfg.policy.allows(e.max_exponent),
            format!("max exponent {}", e.max_exponent),
        );
    }
    let shifted = ell.strip_prefix(&Word::parse("001", 2).expect("binary"));
    r.check(
        "ell-is-001-v",
        shifted.as_ref() == Ok(&v),
        "ℓ[0..n+3] = 001 · v[0..n]",
    );
    r.check(
        "v-prefix-001010",
        v.letters().starts_with(&[0, 0, 1, 0, 1, 0]),
        v.prefix(12).to_string(),
    );
    r
}

/// `00100` starts `ℓ`, occurs there once and never in `v`; no prefix of `ℓ`
/// with period at most 4 reaches the bound.
pub fn verify_prefix_palindrome(cfg: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new("prefix-palindrome");
    let n = cfg.prefix_length;
    r.param("prefix_length", n).param("policy", cfg.policy);
    let ell = build_ell(n);
    let v = build_v(n);
    let pal = [0, 0, 1, 0, 0];
    let in_ell = ell.occurrences(&pal);
    let in_v = v.occurrences(&pal);
    r.evidence("occurrences-in-ell", format!("{in_ell:?}"))
        .evidence("occurrences-in-v", in_v.len());
    r.check(
        "ell-starts-00100",
        ell.letters().starts_with(&pal),
        ell.prefix(10).to_string(),
    );
    r.check(
        "once-in-ell",
        in_ell.len() == 1,
        format!("{} occurrences", in_ell.len()),
    );
    r.check(
        "absent-from-v",
        in_v.is_empty(),
        format!("{} occurrences", in_v.len()),
    );
    match max_prefix_exponent(ell.letters(), 4) {
        Some(e) => {
            r.evidence(
                "prefix-power",
                format!("{} with period {}", e.max_exponent, e.witness_period),
            );
            r.check(
                "short-period-prefix-powers",
                cfg.policy.allows(e.max_exponent),
                format!(
                    "largest prefix exponent with period ≤ 4 is {}",
                    e.max_exponent
                ),
            );
        }
        None => {
            r.check("short-period-prefix-powers", false, "prefix too short");
        }
    }
    r
}

/// The complete return to `00` at the start of `word` is `00100`, a
/// palindrome, and the word is rich.
pub fn check_complete_return(word: &Word) -> VerificationReport {
    let mut r = VerificationReport::new("complete-return");
    r.param("prefix_length", word.len());
    let pivot = Word::parse("00", 2).expect("binary");
    let at_start: Vec<_> = complete_returns(word, &pivot)
        .map(|v| v.into_iter().filter(|x| x.start_position == 0).collect())
        .unwrap_or_default();
    let detail = at_start
        .iter()
        .map(|x| x.occurrence.clone())
        .collect::<Vec<_>>()
        .join(",");
    r.evidence("returns-at-0", &detail);
    r.check(
        "return-to-00-is-00100",
        at_start.len() == 1 && at_start[0].occurrence == "00100",
        format!("[{detail}]"),
    );
    r.check(
        "return-is-palindrome",
        !at_start.is_empty()
            && at_start
                .iter()
                .all(|x| is_palindrome(x.occurrence.as_bytes())),
        "equal to its reversal",
    );
    let rich = richness(2, word.letters());
    r.evidence("palindrome-count", rich.palindrome_count);
    r.check(
        "prefix-rich",
        rich.is_rich,
        match rich.first_deficient_prefix_length {
            Some(k) => format!("first deficient prefix has length {k}"),
            None => format!("every one of {} pushes created a palindrome", rich.length),
        },
    );
    r
}

pub fn verify_complete_return(cfg: &RunConfig) -> VerificationReport {
    let ell = build_ell(cfg.prefix_length);
    let mut r = check_complete_return(&ell);

    // control: flipping the fifth letter must be caught
    let mut mutated = ell.clone().into_letters();
    if mutated.len() >= 5 {
        mutated[4] ^= 1;
        let control = check_complete_return(&Word::new(2, mutated).expect("binary"));
        r.check(
            "control-mutated-prefix-fails",
            !control.passed(),
            "fifth letter flipped",
        );
    }
    r
}

/// Factors of `01·v` recur; in `g(h^ω(0))` every later `0` follows a `1`.
pub fn verify_recurrence(cfg: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new("tail-recurrence");
    let n = cfg.prefix_length;
    let probe = (n / 10).max(1);
    let max_factor = 20.min(probe);
    r.param("prefix_length", n)
        .param("probe_length", probe)
        .param("max_factor_length", max_factor);

    let mut tail = vec![0, 1];
    tail.extend_from_slice(build_v(n).letters());
    let tail = Word::new(2, tail).expect("binary");
    let mut lonely = Vec::new();
    for k in 1..=max_factor {
        if !check_recurrence(&tail, k, probe).expect("in range") {
            lonely.extend(unrecurrent_factors(&tail, k, probe));
        }
    }
    r.check(
        "01v-factors-recur",
        lonely.is_empty(),
        format!("factors of length 1..={max_factor} in the first {probe} letters occur twice"),
    );
    if !lonely.is_empty() {
        r.evidence("single-occurrence-factors", lonely.join(","));
    }

    let gh = build_gh(n);
    let bad: Vec<usize> = (1..gh.len())
        .filter(|&i| gh.letters()[i] == 0 && gh.letters()[i - 1] != 1)
        .collect();
    r.check(
        "zero-preceded-by-one",
        bad.is_empty(),
        format!(
            "checked {} letters of g(h^ω(0)); bad positions {bad:?}",
            gh.len()
        ),
    );

    // control: 00100 occurs once in ℓ
    let ell = build_ell(n.max(5));
    let control = check_recurrence(&ell, 5, 5).unwrap_or(true);
    r.check(
        "control-ell-prefix-not-recurrent",
        !control,
        "00100 occurs once in ℓ",
    );
    r
}

/// Backtracking with {rich, free} and a lookahead reproduces `ℓ`, and the
/// `ℓ` prefix itself satisfies both predicates.
pub fn verify_least_good_word(cfg: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new("least-good-word");
    r.param("search_length", cfg.search_length)
        .param("lookahead", cfg.lookahead)
        .param("prefix_length", cfg.prefix_length)
        .param("policy", cfg.policy);

    let target = build_ell(cfg.search_length);
    let mut preds: Vec<Box<dyn Predicate>> =
        vec![Box::new(Rich::new(2)), Box::new(Free::new(cfg.policy))];
    let out =
        lex_least_extendable(cfg.search_length, 2, &mut preds, cfg.lookahead).expect("binary");
    r.evidence("nodes-visited", out.nodes_visited)
        .evidence("max-backtrack", out.max_backtrack_depth)
        .evidence("ell", &target);
    match &out.word {
        Some(w) => {
            r.evidence("search", w);
            let agree = w
                .letters()
                .iter()
                .zip(target.letters())
                .take_while(|(a, b)| a == b)
                .count();
            r.check(
                "search-equals-ell",
                w == &target,
                format!("agree on the first {agree} of {} letters", target.len()),
            );
        }
        None => {
            r.check("search-equals-ell", false, "search space exhausted");
        }
    }

    let ell = build_ell(cfg.prefix_length);
    let rich = richness(2, ell.letters());
    r.check(
        "ell-rich",
        rich.is_rich,
        format!("{} palindromes", rich.palindrome_count),
    );
    r.check(
        "ell-free",
        is_free_under(ell.letters(), &cfg.policy),
        format!("under {}", cfg.policy),
    );
    r
}

/// Critical exponent of growing prefixes of `ℓ`. The limit `2 + √2/2` is
/// reported, never asserted.
pub fn exponent_sweep(n: usize, policy: &FreenessPolicy) -> VerificationReport {
    let mut r = VerificationReport::new("exponent-sweep");
    r.param("prefix_length", n).param("policy", policy);
    let ell = build_ell(n);
    let mut sizes: Vec<usize> = [100, 1_000, 10_000, 100_000]
        .into_iter()
        .filter(|&k| k < n)
        .collect();
    sizes.push(n);
    let mut previous: Option<Rational> = None;
    let mut monotone = true;
    let mut last = None;
    for &k in &sizes {
        let Ok(e) = max_exponent(&ell.letters()[..k]) else {
            continue;
        };
        if let Some(p) = previous {
            monotone &= e.max_exponent >= p;
        }
        previous = Some(e.max_exponent);
        r.evidence(
            &format!("max-exponent@{k:06}"),
            format!(
                "{} ≈ {:.6} (start {}, length {}, period {})",
                e.max_exponent,
                ratio_to_f64(e.max_exponent),
                e.witness_start,
                e.witness_length,
                e.witness_period
            ),
        );
        last = Some(e);
    }
    r.check("non-decreasing", monotone, format!("sizes {sizes:?}"));
    match last {
        Some(e) => {
            let target = rich_threshold().target;
            r.evidence(
                "gap-to-threshold",
                format!(
                    "{:.6} (2+√2/2 ≈ {target:.10})",
                    target - ratio_to_f64(e.max_exponent)
                ),
            );
            r.check(
                "below-bound",
                policy.allows(e.max_exponent),
                format!("{} under {policy}", e.max_exponent),
            );
        }
        None => {
            r.check("below-bound", false, "empty prefix");
        }
    }
    r
}

fn ratio_to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// `ℓ` and `v` peel apart as `p · f(u)`, `u = 01 · g(W)` (resp. `g(W)`),
/// `W = h(U)`, with `U` again a prefix of `h^ω(0)`.
pub fn verify_decode_chain(cfg: &RunConfig) -> VerificationReport {
    let mut r = VerificationReport::new("decode-chain");
    let n = cfg.prefix_length;
    r.param("prefix_length", n);
    let (f, g, h) = (Morphism::f(), Morphism::g(), Morphism::h());
    let fixed = build_h_fixed_point(n);

    for (label, word, lead) in [
        ("ell", build_ell(n), vec![0u8, 1]),
        ("v", build_v(n), vec![]),
    ] {
        let (header, rest) = match strip_3free_header(&word) {
            Ok(parts) => parts,
            Err(e) => {
                r.check(&format!("{label}-header"), false, e.to_string());
                continue;
            }
        };
        r.check(
            &format!("{label}-header"),
            header.is_empty(),
            format!("header {:?}", header.to_string()),
        );

        let Some(u) = decode_settled(&f, &rest) else {
            r.check(&format!("{label}-f-decode"), false, "no f-factorization");
            continue;
        };
        let has_lead = u.letters().starts_with(&lead);
        r.check(
            &format!("{label}-f-decode"),
            has_lead,
            format!("preimage starts {}", u.prefix(12)),
        );
        let Ok(tail) = Word::new(3, u.letters()[lead.len().min(u.len())..].to_vec()) else {
            continue;
        };
        let Some(w) = decode_settled(&g, &tail) else {
            r.check(&format!("{label}-g-decode"), false, "no g-factorization");
            continue;
        };
        r.check(
            &format!("{label}-g-decode"),
            !w.is_empty(),
            format!("{} letters", w.len()),
        );
        let Some(big_u) = decode_settled(&h, &w) else {
            r.check(&format!("{label}-h-decode"), false, "no h-factorization");
            continue;
        };
        r.check(
            &format!("{label}-h-decode-fixed-point"),
            big_u.is_prefix_of(&fixed) && w.is_prefix_of(&fixed),
            format!(
                "g-preimage {} letters, h-preimage {} letters, both prefixes of h^ω(0)",
                w.len(),
                big_u.len()
            ),
        );
    }
    r
}

/// Decodes a prefix of an infinite image. The final decoded letter is
/// dropped: its image may be a proper prefix of the true, truncated image.
fn decode_settled(m: &Morphism, w: &Word) -> Option<Word> {
    let pre = m.decode(w).ok()?.preimage()?.clone();
    Some(pre.prefix(pre.len().saturating_sub(1)))
}

/// Eertree and return-word characterization against brute force.
pub fn verify_richness_oracle(max_len: usize, glen_max_len: usize) -> VerificationReport {
    let mut r = VerificationReport::new("oracle-richness");
    r.param("max_length", max_len)
        .param("glen_max_length", glen_max_len);
    let mut mismatches = Vec::new();
    let mut count = 0u64;
    for_each_binary_word(max_len, |w| {
        count += 1;
        let mut tree = Eertree::new(2);
        let created: usize = w.iter().map(|&a| tree.push(a)).sum();
        if created != naive::palindromic_factors(w).len() {
            mismatches.push(to_digits(w));
        }
    });
    r.evidence("words-checked", count);
    r.check(
        "eertree-vs-naive",
        mismatches.is_empty(),
        format!("{} mismatches", mismatches.len()),
    );

    let mut glen_bad = Vec::new();
    for_each_binary_word(glen_max_len, |w| {
        let word = Word::new(2, w.to_vec()).expect("binary");
        if check_glen_characterization(&word) != naive::is_rich(w) {
            glen_bad.push(to_digits(w));
        }
    });
    r.check(
        "returns-characterize-richness",
        glen_bad.is_empty(),
        format!("{} mismatches", glen_bad.len()),
    );
    r
}

pub fn verify_exponent_oracle(max_len: usize) -> VerificationReport {
    let mut r = VerificationReport::new("oracle-exponent");
    r.param("max_length", max_len);
    let mut mismatches = Vec::new();
    for_each_binary_word(max_len, |w| {
        if !w.is_empty()
            && max_exponent(w).expect("non-empty").max_exponent != naive::max_exponent(w)
        {
            mismatches.push(to_digits(w));
        }
    });
    r.check(
        "max-exponent-vs-naive",
        mismatches.is_empty(),
        format!("{} mismatches", mismatches.len()),
    );
    r
}

/// Backtracking search against exhaustive enumeration for short lengths.
pub fn verify_search_oracle(max_len: usize, policy: &FreenessPolicy) -> VerificationReport {
    let mut r = VerificationReport::new("oracle-search");
    r.param("max_length", max_len).param("policy", policy);
    let mut bad = Vec::new();
    for n in 0..=max_len {
        let mut preds: Vec<Box<dyn Predicate>> =
            vec![Box::new(Rich::new(2)), Box::new(Free::new(*policy))];
        let found = lex_least_of_length(n, 2, &mut preds)
            .expect("binary")
            .word
            .map(|w| w.into_letters());
        let expected = naive::lex_least(n, 2, |x| naive::is_rich(x) && naive::is_free(x, policy));
        if found != expected {
            bad.push(n);
        }
        if preds.iter().any(|p| p.depth() != 0) {
            bad.push(n);
        }
    }
    r.check(
        "search-vs-enumeration",
        bad.is_empty(),
        format!("mismatching lengths {bad:?}"),
    );
    r
}

/// Decoding inverts g and h on random words and on a prefix of `g(h^ω(0))`.
pub fn verify_decode_roundtrip(samples: usize, seed: u64) -> VerificationReport {
    let mut r = VerificationReport::new("decode-roundtrip");
    r.param("samples", samples).param("seed", seed);
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let len = rng.gen_range(0..=50);
        let w = Word::new(3, (0..len).map(|_| rng.gen_range(0..3)).collect()).expect("ternary");
        for m in [Morphism::g(), Morphism::h()] {
            let image = m.apply(&w).expect("ternary");
            if m.decode(&image).ok().and_then(|d| d.exact().cloned()) != Some(w.clone()) {
                failures += 1;
            }
        }
    }
    r.check(
        "random-words",
        failures == 0,
        format!("{failures} failures"),
    );

    let gh = build_gh(1_000);
    let decoded = Morphism::g()
        .decode(&gh)
        .ok()
        .and_then(|d| d.preimage().cloned());
    let ok = decoded.as_ref().is_some_and(|w| {
        w.is_prefix_of(&build_h_fixed_point(1_000))
            && Morphism::g().apply(w).is_ok_and(|x| x.is_prefix_of(&gh))
    });
    r.check(
        "g-h-fixed-point-prefix",
        ok,
        format!(
            "preimage of {} letters",
            decoded.map(|w| w.len()).unwrap_or(0)
        ),
    );
    r
}

fn for_each_binary_word(max_len: usize, mut visit: impl FnMut(&[Letter])) {
    for n in 0..=max_len {
        let mut w = vec![0; n];
        for bits in 0u64..1 << n {
            for (i, x) in w.iter_mut().enumerate() {
                *x = ((bits >> (n - 1 - i)) & 1) as Letter;
            }
            visit(&w);
        }
    }
}

/// Claim identifiers accepted by [`run_claim`], in report order.
pub const CLAIMS: [&str; 13] = [
    "complete-return",
    "constants",
    "cube-dead-end",
    "decode-chain",
    "decode-roundtrip",
    "exponent-sweep",
    "least-good-word",
    "oracle-exponent",
    "oracle-richness",
    "oracle-search",
    "prefix-palindrome",
    "tail-recurrence",
    "v-good",
];

pub fn run_claim(id: &str, cfg: &RunConfig) -> Option<VerificationReport> {
    Some(match id {
        "complete-return" => verify_complete_return(cfg),
        "constants" => verify_constants(),
        "cube-dead-end" => {
            let mut r = verify_cube_dead_end(&cube_free(), cfg.lookahead);
            let control = verify_cube_dead_end(
                &FreenessPolicy::free(Rational::new(5, 2)).expect("5/2 > 1"),
                0,
            );
            r.check(
                "control-5/2-free-fails",
                !control.passed(),
                "least 5/2-free word differs",
            );
            r
        }
        "decode-chain" => verify_decode_chain(cfg),
        "decode-roundtrip" => verify_decode_roundtrip(1_000, 0x5eed),
        "exponent-sweep" => exponent_sweep(cfg.prefix_length, &cfg.policy),
        "least-good-word" => {
            let mut r = verify_least_good_word(cfg);
            let control_policy = FreenessPolicy::free(Rational::from_integer(2)).expect("2 > 1");
            let control = verify_least_good_word(&RunConfig {
                policy: control_policy,
                prefix_length: cfg.search_length,
                ..*cfg
            });
            r.check(
                "control-2-free-diverges",
                !control.passed(),
                "square-free search cannot produce ℓ",
            );
            r
        }
        "oracle-exponent" => verify_exponent_oracle(14),
        "oracle-richness" => verify_richness_oracle(14, 12),
        "oracle-search" => verify_search_oracle(14, &cfg.policy),
        "prefix-palindrome" => verify_prefix_palindrome(cfg),
        "tail-recurrence" => verify_recurrence(cfg),
        "v-good" => verify_v_good(cfg),
        _ => return None,
    })
}

/// Every claim, sorted by id. Claims run on separate threads; failures are
/// collected, never fatal.
pub fn run_all(cfg: &RunConfig) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = CLAIMS
            .iter()
            .map(|id| scope.spawn(move || run_claim(id, cfg).expect("known claim")))
            .collect();
        handles
            .into_iter()
            .zip(CLAIMS)
            .map(|(h, id)| {
                h.join().unwrap_or_else(|_| {
                    let mut r = VerificationReport::new(id);
                    r.check("completed", false, "check panicked");
                    r
                })
            })
            .collect()
    });
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    reports
}

/// Convenience for the good-word search on its own.
pub fn least_good_prefix(n: usize, lookahead: usize, strict: bool) -> Option<Word> {
    let mut preds = good_predicates(strict);
    lex_least_extendable(n, 2, &mut preds, lookahead).ok()?.word
}
