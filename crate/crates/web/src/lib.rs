//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Every export returns a JSON string, `{"ok": ...}` or `{"error": "..."}`,
//! so the same functions are exercised by native tests.

use lexrich_core::palindromics::is_rich;
use lexrich_core::repetitions::{max_exponent, parse_rational, FreenessPolicy};
use lexrich_core::search::{lex_least_extendable, Free, Predicate, Rich};
use lexrich_core::verify::{build_ell, build_v};
use lexrich_core::words::to_digits;
use lexrich_core::Word;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single call well under a second in the browser.
pub const MAX_GENERATED: usize = 200_000;
pub const MAX_ANALYZED: usize = 20_000;
pub const MAX_SEARCHED: usize = 2_000;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => json!({ "ok": v }).to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn ratio_f64(r: lexrich_core::Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn analyze_inner(word: &str, bound: &str, strict: bool) -> Result<Value, String> {
    let w = Word::from_digits(word.trim()).map_err(|e| e.to_string())?;
    if w.len() > MAX_ANALYZED {
        return Err(format!("at most {MAX_ANALYZED} letters"));
    }
    let policy = parse_rational(bound)
        .and_then(|b| FreenessPolicy::new(b, strict))
        .map_err(|e| e.to_string())?;
    let rich = is_rich(&w);
    let exponent = if w.is_empty() {
        Value::Null
    } else {
        let e = max_exponent(w.letters()).map_err(|e| e.to_string())?;
        json!({
            "value": e.max_exponent.to_string(),
            "approx": ratio_f64(e.max_exponent),
            "witness": to_digits(e.witness(w.letters())),
            "start": e.witness_start,
            "period": e.witness_period,
            "free": policy.allows(e.max_exponent),
        })
    };
    Ok(json!({
        "length": w.len(),
        "alphabet": w.alphabet_size(),
        "rich": rich.is_rich,
        "palindromes": rich.palindrome_count,
        "first_non_rich_prefix": rich.first_deficient_prefix_length,
        "exponent": exponent,
        "policy": policy.to_string(),
    }))
}

fn generate_inner(family: &str, length: usize) -> Result<Value, String> {
    if length > MAX_GENERATED {
        return Err(format!("at most {MAX_GENERATED} letters"));
    }
    let w = match family {
        "ell" => build_ell(length),
        "v" => build_v(length),
        other => return Err(format!("unknown family {other:?}")),
    };
    Ok(json!(w.to_string()))
}

fn least_inner(
    length: usize,
    bound: &str,
    strict: bool,
    rich: bool,
    lookahead: usize,
) -> Result<Value, String> {
    if length + lookahead > MAX_SEARCHED {
        return Err(format!("length + lookahead must be at most {MAX_SEARCHED}"));
    }
    let policy = parse_rational(bound)
        .and_then(|b| FreenessPolicy::new(b, strict))
        .map_err(|e| e.to_string())?;
    let mut preds: Vec<Box<dyn Predicate>> = vec![Box::new(Free::new(policy))];
    if rich {
        preds.push(Box::new(Rich::new(2)));
    }
    let out = lex_least_extendable(length, 2, &mut preds, lookahead).map_err(|e| e.to_string())?;
    let ell = build_ell(length);
    let agree = out.word.as_ref().map(|w| {
        w.letters()
            .iter()
            .zip(ell.letters())
            .take_while(|(a, b)| a == b)
            .count()
    });
    Ok(json!({
        "word": out.word.map(|w| w.to_string()),
        "nodes": out.nodes_visited,
        "max_backtrack": out.max_backtrack_depth,
        "agrees_with_ell": agree,
    }))
}

/// Richness and maximal exponent of a digit string.
#[wasm_bindgen]
pub fn analyze(word: &str, bound: &str, strict: bool) -> String {
    respond(analyze_inner(word, bound, strict))
}

/// Prefix of `ell` or `v`.
#[wasm_bindgen]
pub fn generate(family: &str, length: usize) -> String {
    respond(generate_inner(family, length))
}

/// Least binary word of `length` letters (optionally rich) avoiding the
/// given exponent and extendable by `lookahead` letters.
#[wasm_bindgen]
pub fn least(length: usize, bound: &str, strict: bool, rich: bool, lookahead: usize) -> String {
    respond(least_inner(length, bound, strict, rich, lookahead))
}
