//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Runs without the libtest harness so the per-criterion lines are always
//! printed, e.g. `cargo test -p lexrich-core --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lexrich_core::morphisms::Morphism;
use lexrich_core::naive;
use lexrich_core::palindromics::{
    check_glen_characterization, complete_returns, richness, Eertree,
};
use lexrich_core::repetitions::{max_exponent, rich_threshold, FreenessPolicy, Rational};
use lexrich_core::search::{
    check_recurrence, good_predicates, lex_least_extendable, lex_least_of_length, Free, Predicate,
};
use lexrich_core::verify::{build_ell, build_gh, build_h_fixed_point, build_v};
use lexrich_core::words::{to_digits, Letter, Word};
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn binary_words(max_len: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0..=max_len).flat_map(|n| {
        (0u64..1 << n).map(move |bits| {
            (0..n)
                .map(|i| ((bits >> (n - 1 - i)) & 1) as Letter)
                .collect()
        })
    })
}

fn fourteen_fifths() -> FreenessPolicy {
    FreenessPolicy::free(Rational::new(14, 5)).unwrap()
}

fn ac1_morphism_constants() -> Outcome {
    let table = |m: Morphism| m.images().map(to_digits).collect::<Vec<_>>();
    ensure(table(Morphism::f()) == ["0", "01", "011"], "f table")?;
    ensure(table(Morphism::g()) == ["011", "0121", "012121"], "g table")?;
    ensure(table(Morphism::h()) == ["01", "02", "022"], "h table")?;
    let fg = Morphism::compose(&Morphism::f(), &Morphism::g()).unwrap();
    let zero = Word::parse("0", 3).unwrap();
    let composed = fg.apply(&zero).unwrap();
    let nested = Morphism::f()
        .apply(&Morphism::g().apply(&zero).unwrap())
        .unwrap();
    ensure(
        composed == nested,
        "composition disagrees with nested application",
    )?;
    // f(g(0)) = f(011) = 0·01·01 from the tables above
    ensure(
        composed.to_string() == "00101",
        format!("f∘g(0) = {composed}"),
    )?;
    Ok(format!("tables exact; f∘g(0) = {composed}"))
}

fn ac2_cube_dead_end() -> Outcome {
    let cube = FreenessPolicy::free(Rational::from_integer(3)).unwrap();
    let mut preds: Vec<Box<dyn Predicate>> = vec![Box::new(Free::new(cube))];
    let least8 = lex_least_of_length(8, 2, &mut preds).unwrap().word.unwrap();
    ensure(
        least8.to_string() == "00100100",
        format!("least length-8 word {least8}"),
    )?;
    for ext in ["001001000", "001001001"] {
        let letters = Word::from_digits(ext).unwrap().into_letters();
        let e = max_exponent(&letters).unwrap().max_exponent;
        ensure(
            e >= Rational::from_integer(3),
            format!("{ext} has max exponent {e}"),
        )?;
    }
    let w = lex_least_extendable(9, 2, &mut preds, 10)
        .unwrap()
        .word
        .unwrap();
    ensure(
        w.to_string() == "001001010",
        format!("least extendable {w}"),
    )?;
    Ok(format!(
        "least8 = {least8}; both extensions contain a cube; extendable = {w}"
    ))
}

fn ac3_least_good_word() -> Outcome {
    let mut preds = good_predicates(false);
    let out = lex_least_extendable(100, 2, &mut preds, 60).unwrap();
    let found = out.word.ok_or("search exhausted")?;
    let ell = build_ell(100);
    ensure(
        preds.iter().all(|p| p.depth() == 0),
        "predicates not retracted",
    )?;
    if found != ell {
        let at = found
            .letters()
            .iter()
            .zip(ell.letters())
            .take_while(|(a, b)| a == b)
            .count();
        let longer = lex_least_extendable(100, 2, &mut good_predicates(false), 200)
            .unwrap()
            .word;
        return Err(format!(
            "lookahead 60 leaves ell at position {at} (a good 160-letter word is smaller); \
             lookahead 200 {}",
            if longer.as_ref() == Some(&ell) {
                "reproduces ell[0..100]"
            } else {
                "also differs"
            }
        ));
    }

    let policy = fourteen_fifths();
    for n in 0..=14 {
        let mut preds = good_predicates(false);
        let fast = lex_least_of_length(n, 2, &mut preds)
            .unwrap()
            .word
            .map(Word::into_letters);
        let brute = naive::lex_least(n, 2, |w| naive::is_rich(w) && naive::is_free(w, &policy));
        ensure(
            fast == brute,
            format!("length {n}: search {fast:?} vs enumeration {brute:?}"),
        )?;
    }
    Ok(format!(
        "search(100, lookahead 60) = ell[0..100] ({} nodes); n ≤ 14 matches enumeration",
        out.nodes_visited
    ))
}

fn ac4_v_and_ell_good() -> Outcome {
    let bound = rich_threshold().floor;
    let mut notes = Vec::new();
    for (name, w) in [("v", build_v(10_000)), ("ell", build_ell(10_000))] {
        let mut tree = Eertree::new(2);
        let all_new = w.letters().iter().all(|&a| tree.push(a) == 1);
        ensure(all_new, format!("{name} has a push creating no palindrome"))?;
        let e = max_exponent(w.letters()).unwrap();
        ensure(
            e.max_exponent < bound,
            format!("{name} max exponent {}", e.max_exponent),
        )?;
        notes.push(format!("{name}: rich, max exponent {}", e.max_exponent));
    }
    Ok(notes.join("; "))
}

fn ac5_richness_oracle() -> Outcome {
    let mut count = 0;
    for w in binary_words(14) {
        count += 1;
        let fast = richness(2, &w).is_rich;
        ensure(
            fast == naive::is_rich(&w),
            format!("richness mismatch on {}", to_digits(&w)),
        )?;
    }
    let mut glen = 0;
    for w in binary_words(12) {
        glen += 1;
        let word = Word::new(2, w.clone()).unwrap();
        ensure(
            check_glen_characterization(&word) == richness(2, &w).is_rich,
            format!("return characterization mismatch on {}", to_digits(&w)),
        )?;
    }
    Ok(format!("{count} words ≤ 14 and {glen} words ≤ 12 agree"))
}

fn ac6_exponent_oracle() -> Outcome {
    let mut count = 0;
    for w in binary_words(14).filter(|w| !w.is_empty()) {
        count += 1;
        let fast = max_exponent(&w).unwrap().max_exponent;
        let brute = naive::max_exponent(&w);
        ensure(
            fast == brute,
            format!("{}: {fast} vs {brute}", to_digits(&w)),
        )?;
    }
    Ok(format!("{count} non-empty words ≤ 14 agree"))
}

fn ac7_complete_return() -> Outcome {
    let ell = build_ell(10_000);
    let v = build_v(10_000);
    let returns = complete_returns(&ell, &Word::parse("00", 2).unwrap()).unwrap();
    let at_zero: Vec<_> = returns.iter().filter(|r| r.start_position == 0).collect();
    ensure(
        at_zero.len() == 1,
        format!("{} returns at 0", at_zero.len()),
    )?;
    ensure(
        at_zero[0].occurrence == "00100",
        format!("return {}", at_zero[0].occurrence),
    )?;
    ensure(
        Word::from_digits(&at_zero[0].occurrence)
            .unwrap()
            .is_palindrome(),
        "not a palindrome",
    )?;
    let pal = [0, 0, 1, 0, 0];
    let in_ell = ell.occurrences(&pal);
    let in_v = v.occurrences(&pal);
    ensure(in_ell == [0], format!("00100 in ell at {in_ell:?}"))?;
    ensure(in_v.is_empty(), format!("00100 in v at {in_v:?}"))?;
    Ok("return to 00 at 0 is 00100; 00100 occurs once in ell, never in v".into())
}

fn ac8_recurrence() -> Outcome {
    let mut tail = vec![0, 1];
    tail.extend_from_slice(build_v(20_000).letters());
    let tail = Word::new(2, tail).unwrap();
    for k in 1..=20 {
        ensure(
            check_recurrence(&tail, k, 2_000).unwrap(),
            format!("factor length {k}"),
        )?;
    }
    let gh = build_gh(10_000);
    let g = gh.letters();
    let bad = (1..g.len()).find(|&i| g[i] == 0 && g[i - 1] != 1);
    ensure(bad.is_none(), format!("0 at {bad:?} not preceded by 1"))?;
    Ok("factors of length ≤ 20 in the first 2000 letters recur; every later 0 follows 1".into())
}

fn ac9_decode() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    for _ in 0..1_000 {
        let len = rng.gen_range(0..=50);
        let w = Word::new(3, (0..len).map(|_| rng.gen_range(0..3)).collect()).unwrap();
        for m in [Morphism::g(), Morphism::h()] {
            let decoded = m.decode(&m.apply(&w).unwrap()).unwrap();
            ensure(decoded.exact() == Some(&w), format!("{m:?} on {w}"))?;
        }
    }
    let prefix = build_gh(1_000);
    let pre = Morphism::g().decode(&prefix).unwrap();
    let pre = pre.preimage().ok_or("g(h^ω(0)) prefix did not decode")?;
    let fixed = build_h_fixed_point(1_000);
    // the final letter may be the truncated image of a longer one
    let settled = pre.prefix(pre.len() - 1);
    ensure(
        settled.is_prefix_of(&fixed),
        "g-preimage is not a prefix of h^ω(0)",
    )?;
    let back = Morphism::h().decode(&settled).unwrap();
    let back = back.preimage().ok_or("h-preimage failed")?;
    ensure(
        back.is_prefix_of(&fixed),
        "h-preimage is not a prefix of h^ω(0)",
    )?;
    Ok(format!(
        "1000 random words round-trip; g(h^ω(0))[0..1000] decodes to {} letters",
        pre.len()
    ))
}

fn ac10_exponent_sweep() -> Outcome {
    let ell = build_ell(10_000);
    let bound = rich_threshold().floor;
    let mut seen = Vec::new();
    for n in [100, 1_000, 10_000] {
        let e = max_exponent(&ell.letters()[..n]).unwrap().max_exponent;
        ensure(e < bound, format!("prefix {n}: {e}"))?;
        if let Some(&(_, prev)) = seen.last() {
            ensure(e >= prev, format!("max exponent decreased at {n}"))?;
        }
        seen.push((n, e));
    }
    let last = seen.last().unwrap().1;
    let approx = *last.numer() as f64 / *last.denom() as f64;
    Ok(format!(
        "{} (observed {last} ≈ {approx:.6}; 2+√2/2 ≈ {:.6} reported only)",
        seen.iter()
            .map(|(n, e)| format!("{n}: {e}"))
            .collect::<Vec<_>>()
            .join(", "),
        rich_threshold().target
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("AC1 morphism constants", 1, ac1_morphism_constants),
        ("AC2 cube dead end", 1, ac2_cube_dead_end),
        ("AC3 least good word = ell", 60, ac3_least_good_word),
        ("AC4 v and ell rich and 14/5-free", 30, ac4_v_and_ell_good),
        ("AC5 richness oracle", 60, ac5_richness_oracle),
        ("AC6 exponent oracle", 60, ac6_exponent_oracle),
        ("AC7 complete return to 00", 5, ac7_complete_return),
        ("AC8 recurrence evidence", 10, ac8_recurrence),
        ("AC9 decode round trips", 5, ac9_decode),
        ("AC10 exponent sweep", 60, ac10_exponent_sweep),
    ];
    let mut failures = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.2?}, limit {limit}s"))
            } else {
                Ok(msg)
            }
        });
        match result {
            Ok(msg) => println!("PASS  {name:<36} {elapsed:>9.2?}  {msg}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL  {name:<36} {elapsed:>9.2?}  {msg}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
