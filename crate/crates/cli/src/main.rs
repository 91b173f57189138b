//! `lexrich`: generate, analyze and search binary rich words.
//!
//! Exit codes: 0 when everything checked passed, 1 when some check failed,
//! 2 on usage or input errors.

use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexrich_core::morphisms::{DecodeResult, Morphism};
use lexrich_core::palindromics::is_rich;
use lexrich_core::repetitions::{max_exponent, parse_rational, FreenessPolicy};
use lexrich_core::search::{lex_least_extendable, parse_predicate};
use lexrich_core::verify::{build_ell, build_v, run_all, run_claim, RunConfig, CLAIMS};
use lexrich_core::Word;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lexrich",
    version,
    about = "Rich words, repetitions and the least 14/5-free rich binary word"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// The least rich 14/5-free binary word
    Ell,
    /// f(g(h^ω(0)))
    V,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of a generated word.
    Gen {
        family: Family,
        #[arg(long, short = 'n')]
        length: usize,
    },
    /// Check richness. Exits 1 when the word is not rich.
    Rich {
        /// Digit string, or `-` for stdin
        word: String,
        /// Alphabet size (default: smallest containing the word, at least 2)
        #[arg(long)]
        alphabet: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Maximal exponent of a word. With `--bound`, exits 1 when the word is not free.
    Exponent {
        word: String,
        #[arg(long)]
        bound: Option<String>,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lexicographically least word whose prefixes satisfy every predicate.
    Least {
        #[arg(long, short = 'n')]
        length: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// `rich`, `free:Q` or `free:Q+`; repeatable
        #[arg(long = "pred", default_values_t = ["rich".to_string(), "free:14/5".to_string()])]
        preds: Vec<String>,
        /// Treat bare `free:Q` as Q+-free
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = RunConfig::default().lookahead)]
        lookahead: usize,
        #[arg(long)]
        json: bool,
    },
    /// Factor a word as m(u)·t. Exits 1 when no factorization exists.
    Decode {
        /// `f`, `g`, `h`, or a file in `letter -> image` format
        #[arg(long, short = 'm')]
        morphism: String,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite or a single claim.
    Verify {
        #[arg(long)]
        claim: Option<String>,
        #[arg(long, default_value_t = RunConfig::default().prefix_length)]
        prefix_length: usize,
        #[arg(long, default_value_t = RunConfig::default().search_length)]
        search_length: usize,
        #[arg(long, default_value_t = RunConfig::default().lookahead)]
        lookahead: usize,
        #[arg(long, default_value = "14/5")]
        bound: String,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
        /// List claim ids and exit
        #[arg(long)]
        list: bool,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn read_word_text(arg: &str) -> Result<String, Usage> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s.trim().to_string())
    } else {
        Ok(arg.trim().to_string())
    }
}

fn read_word(arg: &str, alphabet: Option<usize>) -> Result<Word, Usage> {
    let text = read_word_text(arg)?;
    Ok(match alphabet {
        Some(n) => Word::parse(&text, n)?,
        None => Word::from_digits(&text)?,
    })
}

fn load_morphism(spec: &str) -> Result<Morphism, Usage> {
    if let Ok(m) = Morphism::by_name(spec) {
        return Ok(m);
    }
    let path = Path::new(spec);
    if !path.exists() {
        return Err(Usage(format!(
            "unknown morphism {spec:?} (expected f, g, h or a file)"
        )));
    }
    Ok(std::fs::read_to_string(path)?.parse::<Morphism>()?)
}

fn print_json(value: serde_json::Value) {
    println!("{value:#}");
}

fn run(cli: Cli) -> Result<bool, Usage> {
    match cli.command {
        Command::Gen { family, length } => {
            let w = match family {
                Family::Ell => build_ell(length),
                Family::V => build_v(length),
            };
            println!("{w}");
            Ok(true)
        }
        Command::Rich {
            word,
            alphabet,
            json,
        } => {
            let w = read_word(&word, alphabet)?;
            let report = is_rich(&w);
            if json {
                print_json(json!(report));
            } else {
                println!(
                    "{}: {} distinct palindromes in {} letters",
                    if report.is_rich { "rich" } else { "not rich" },
                    report.palindrome_count,
                    report.length
                );
                if let Some(n) = report.first_deficient_prefix_length {
                    println!("first non-rich prefix has length {n}");
                }
            }
            Ok(report.is_rich)
        }
        Command::Exponent {
            word,
            bound,
            strict,
            json,
        } => {
            let w = read_word(&word, None)?;
            let report = max_exponent(w.letters())?;
            let policy = bound
                .map(|b| FreenessPolicy::new(parse_rational(&b)?, strict))
                .transpose()?;
            let free = policy.map(|p| p.allows(report.max_exponent));
            if json {
                print_json(json!({
                    "report": report,
                    "witness": lexrich_core::words::to_digits(report.witness(w.letters())),
                    "policy": policy.map(|p| p.to_string()),
                    "free": free,
                }));
            } else {
                println!(
                    "max exponent {} (≈ {:.6}) witnessed by {} at {} with period {}",
                    report.max_exponent,
                    *report.max_exponent.numer() as f64 / *report.max_exponent.denom() as f64,
                    lexrich_core::words::to_digits(report.witness(w.letters())),
                    report.witness_start,
                    report.witness_period
                );
                if let (Some(p), Some(ok)) = (policy, free) {
                    println!("{}{p}", if ok { "" } else { "not " });
                }
            }
            Ok(free.unwrap_or(true))
        }
        Command::Least {
            length,
            alphabet,
            preds,
            strict,
            lookahead,
            json,
        } => {
            let mut predicates = preds
                .iter()
                .map(|p| parse_predicate(p, alphabet, strict))
                .collect::<Result<Vec<_>, _>>()?;
            let out = lex_least_extendable(length, alphabet, &mut predicates, lookahead)?;
            if json {
                print_json(json!(out));
            } else {
                match &out.word {
                    Some(w) => println!("{w}"),
                    None => println!("no such word"),
                }
                eprintln!(
                    "{} nodes, longest retreat {}",
                    out.nodes_visited, out.max_backtrack_depth
                );
            }
            Ok(out.word.is_some())
        }
        Command::Decode {
            morphism,
            word,
            json,
        } => {
            let m = load_morphism(&morphism)?;
            let w = Word::parse(&read_word_text(&word)?, m.target_alphabet_size())?;
            let result = m.decode(&w)?;
            match (&result, json) {
                (DecodeResult::Decoded { preimage, residue }, true) => {
                    print_json(json!({ "preimage": preimage.to_string(), "residue": residue }))
                }
                (DecodeResult::Failed { offset }, true) => {
                    print_json(json!({ "failed_at": offset }))
                }
                (DecodeResult::Decoded { preimage, residue }, false) => {
                    println!("{preimage}");
                    if *residue > 0 {
                        eprintln!("{residue} trailing letters form a proper prefix of an image");
                    }
                }
                (DecodeResult::Failed { offset }, false) => {
                    println!("no factorization (stuck at {offset})")
                }
            }
            Ok(result.preimage().is_some())
        }
        Command::Verify {
            claim,
            prefix_length,
            search_length,
            lookahead,
            bound,
            strict,
            json,
            list,
        } => {
            if list {
                CLAIMS.iter().for_each(|id| println!("{id}"));
                return Ok(true);
            }
            let cfg = RunConfig {
                prefix_length,
                search_length,
                lookahead,
                policy: FreenessPolicy::new(parse_rational(&bound)?, strict)?,
            };
            let reports = match claim {
                Some(id) => vec![run_claim(&id, &cfg)
                    .ok_or_else(|| Usage(format!("unknown claim {id:?}; try --list")))?],
                None => run_all(&cfg),
            };
            if json {
                print_json(json!(reports));
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            Ok(reports.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("lexrich: {msg}");
            ExitCode::from(2)
        }
    }
}
