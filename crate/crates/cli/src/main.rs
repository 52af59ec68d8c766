//! `macneille`: JSON front end to `macneille-core`.
//!
//! Exit codes: 0 success, 1 domain error (reported as
//! `{"error": {"kind": ..., "detail": ...}}`), 2 usage error, 3 when
//! `check-closed` or `graph-embeddable` finds the property fails.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use macneille_core::cones::{
    closure_down, closure_up, is_closed_lower, lower_closure_witness, lower_cone, upper_cone,
    SetDoc,
};
use macneille_core::graphs::{distance_table, embeddable_verdict, GraphDoc, OrientedGraph};
use macneille_core::poset::AlphabetDoc;
use macneille_core::rules::{
    closedness_decision, conjecture_search, is_stable, stable_closure, stable_closure_with_oracle,
    Stability,
};
use macneille_core::words::higman_leq;
use macneille_core::{Alphabet, Error, LowerSet, Rule, UpperSet, Word};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "macneille",
    version,
    about = "Closed sets of words over ordered alphabets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Order-theoretic classification of an alphabet.
    Classify(AlphabetArg),
    /// Compare two words in the Higman order.
    Leq(WordsArgs),
    /// Upper (Δ) or lower (∇) cone of a word set.
    Cone(KindArgs),
    /// Galois closure of a word set: `∇Δ` for upper, `Δ∇` for lower.
    Closure(ClosureArgs),
    /// Decide whether the upper set generated by the words is closed.
    CheckClosed(CheckArgs),
    /// Decide whether the lower set generated by the words is closed.
    CheckLowerClosed(WordsArgs),
    /// Stable closure under a set of rules, with its trace.
    StableClosure(RuleArgs),
    /// Check the upper set generated by the words against a set of rules.
    IsStable(RuleArgs),
    /// Compare stable and Galois closures over bounded generator sets.
    ConjectureSearch(SearchArgs),
    /// All ordered-pair distances of an oriented graph.
    GraphDistances(GraphArg),
    /// Whether every distance of an oriented graph is closed.
    GraphEmbeddable(GraphArg),
}

#[derive(Args)]
struct AlphabetArg {
    /// Alphabet JSON file: {"letters": [...], "covers": [[a, b], ...]}.
    #[arg(long)]
    alphabet: PathBuf,
}

#[derive(Args)]
struct WordsArgs {
    #[command(flatten)]
    alphabet: AlphabetArg,
    /// Word literals; "" is the empty word. Every argument up to the next
    /// flag is a word, so literals such as `-+` and `--` need no quoting.
    #[arg(long, num_args = 1, action = ArgAction::Append, allow_hyphen_values = true)]
    words: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Upper,
    Lower,
}

#[derive(Args)]
struct KindArgs {
    #[command(flatten)]
    words: WordsArgs,
    #[arg(long, value_enum, default_value = "upper")]
    kind: Kind,
}

#[derive(Args)]
struct ClosureArgs {
    #[command(flatten)]
    words: WordsArgs,
    #[arg(long, value_enum, default_value = "upper")]
    kind: Kind,
    /// Also saturate under the four rules and fail if the results differ
    /// on an alphabet where they must agree.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    words: WordsArgs,
    /// Run the full rule set and the Galois oracle as well and report
    /// agreement.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct RuleArgs {
    #[command(flatten)]
    words: WordsArgs,
    /// Rules to apply, comma separated; defaults to the four basic rules.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    rules: Vec<Rule>,
    /// Compare the result with the Galois closure (stable-closure only).
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    alphabet: AlphabetArg,
    #[arg(long, default_value_t = 2)]
    max_gens: usize,
    #[arg(long, default_value_t = 3)]
    max_len: usize,
}

#[derive(Args)]
struct GraphArg {
    /// Graph JSON file: {"vertices": [...], "arcs": [[u, v], ...]}.
    #[arg(long)]
    graph: PathBuf,
}

/// A failed invocation after argument parsing.
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

/// Result JSON plus whether the checked property holds.
struct Outcome {
    value: Value,
    holds: bool,
}

impl Outcome {
    fn ok(value: impl Serialize) -> Outcome {
        Outcome {
            value: to_value(value),
            holds: true,
        }
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("documents serialize")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Document(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn load_alphabet(arg: &AlphabetArg) -> Result<Alphabet, Error> {
    Alphabet::from_doc(&read_json::<AlphabetDoc>(&arg.alphabet)?)
}

fn load_graph(arg: &GraphArg) -> Result<OrientedGraph, Error> {
    OrientedGraph::from_doc(&read_json::<GraphDoc>(&arg.graph)?)
}

fn load_words(args: &WordsArgs) -> Result<(Alphabet, Vec<Word>), Error> {
    let alphabet = load_alphabet(&args.alphabet)?;
    let words = alphabet.parse_words(&args.words)?;
    Ok((alphabet, words))
}

fn format_all(alphabet: &Alphabet, words: &[Word]) -> Vec<String> {
    words.iter().map(|w| alphabet.format_word(w)).collect()
}

fn lower_doc(alphabet: &Alphabet, x: &LowerSet) -> Value {
    to_value(SetDoc::from_lower(alphabet, x))
}

fn upper_doc(alphabet: &Alphabet, z: &UpperSet) -> Value {
    to_value(SetDoc::from_upper(alphabet, z))
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Classify(arg) => {
            let alphabet = load_alphabet(arg)?;
            Ok(Outcome::ok(json!({
                "alphabet": alphabet.to_doc(),
                "class": alphabet.classify(),
            })))
        }
        Command::Leq(args) => {
            let (alphabet, words) = load_words(args)?;
            let [w, x] = words.as_slice() else {
                return Err(Failure::Usage(format!(
                    "leq takes exactly two words, got {}",
                    words.len()
                )));
            };
            Ok(Outcome::ok(json!({
                "left": alphabet.format_word(w),
                "right": alphabet.format_word(x),
                "leq": higman_leq(&alphabet, w, x),
            })))
        }
        Command::Cone(args) => {
            let (alphabet, words) = load_words(&args.words)?;
            let value = match args.kind {
                Kind::Upper => upper_doc(&alphabet, &upper_cone(&alphabet, &words)?),
                Kind::Lower => lower_doc(&alphabet, &lower_cone(&alphabet, &words)?),
            };
            Ok(Outcome::ok(json!({
                "input": format_all(&alphabet, &words),
                "cone": value,
            })))
        }
        Command::Closure(args) => {
            let (alphabet, words) = load_words(&args.words)?;
            let input = format_all(&alphabet, &words);
            match args.kind {
                Kind::Lower if args.oracle => Err(Failure::Usage(
                    "--oracle applies to upper closures only".into(),
                )),
                Kind::Lower => {
                    let x = closure_down(&alphabet, &words)?;
                    let doc = SetDoc::from_lower(&alphabet, &x);
                    Ok(Outcome::ok(
                        json!({ "input": input, "kind": doc.kind, "result": doc.gens }),
                    ))
                }
                Kind::Upper => {
                    let z = closure_up(&alphabet, &words)?;
                    let mut value =
                        json!({ "input": input, "kind": "upper", "result": z.format(&alphabet) });
                    if args.oracle {
                        let report = stable_closure_with_oracle(&alphabet, &words, &Rule::FOUR)?;
                        check_agreement(report.applicable, report.agreement)?;
                        value["applicable"] = json!(report.applicable);
                        value["agreement"] = json!(report.agreement);
                    }
                    Ok(Outcome::ok(value))
                }
            }
        }
        Command::CheckClosed(args) => {
            let (alphabet, words) = load_words(&args.words)?;
            let z = UpperSet::new(&alphabet, &words)?;
            let decision = closedness_decision(&alphabet, &z, args.oracle)?;
            check_agreement(decision.applicable, decision.agreement)?;
            Ok(Outcome {
                holds: decision.closed,
                value: to_value(decision.to_doc(&alphabet, &z)),
            })
        }
        Command::CheckLowerClosed(args) => {
            let (alphabet, words) = load_words(args)?;
            let x = LowerSet::new(&alphabet, &words)?;
            let witness = lower_closure_witness(&alphabet, &x)?;
            debug_assert_eq!(witness.is_none(), is_closed_lower(&alphabet, &x)?);
            Ok(Outcome::ok(json!({
                "set": lower_doc(&alphabet, &x),
                "closed": witness.is_none(),
                "witness": witness.map(|w| alphabet.format_word(&w)),
            })))
        }
        Command::StableClosure(args) => {
            let (alphabet, words) = load_words(&args.words)?;
            let rules = rules_or_default(&args.rules);
            let report = if args.oracle {
                let report = stable_closure_with_oracle(&alphabet, &words, &rules)?;
                check_agreement(
                    report.applicable && rules_cover_four(&rules),
                    report.agreement,
                )?;
                report
            } else {
                stable_closure(&alphabet, &words, &rules)?
            };
            Ok(Outcome::ok(report.to_doc(&alphabet)))
        }
        Command::IsStable(args) => {
            if args.oracle {
                return Err(Failure::Usage(
                    "--oracle applies to stable-closure only".into(),
                ));
            }
            let (alphabet, words) = load_words(&args.words)?;
            let rules = rules_or_default(&args.rules);
            let z = UpperSet::new(&alphabet, &words)?;
            let value = match is_stable(&alphabet, &z, &rules)? {
                Stability::Stable => json!({
                    "set": z.format(&alphabet),
                    "rules": rules,
                    "stable": true,
                }),
                Stability::Violated { rule, witness } => json!({
                    "set": z.format(&alphabet),
                    "rules": rules,
                    "stable": false,
                    "rule": rule,
                    "witness": alphabet.format_word(&witness),
                }),
            };
            Ok(Outcome::ok(value))
        }
        Command::ConjectureSearch(args) => {
            let alphabet = load_alphabet(&args.alphabet)?;
            let report = conjecture_search(&alphabet, args.max_gens, args.max_len)?;
            Ok(Outcome::ok(report.to_doc(&alphabet)))
        }
        Command::GraphDistances(arg) => {
            let g = load_graph(arg)?;
            Ok(Outcome::ok(distance_table(&g)?.to_doc()))
        }
        Command::GraphEmbeddable(arg) => {
            let g = load_graph(arg)?;
            let doc = embeddable_verdict(&g)?.to_doc();
            Ok(Outcome {
                holds: doc.embeddable,
                value: json!({ "embeddable": doc.embeddable, "failing": doc.failing }),
            })
        }
    }
}

fn rules_or_default(rules: &[Rule]) -> Vec<Rule> {
    if rules.is_empty() {
        Rule::FOUR.to_vec()
    } else {
        rules.to_vec()
    }
}

fn rules_cover_four(rules: &[Rule]) -> bool {
    Rule::FOUR.iter().all(|r| rules.contains(r))
}

/// Disagreement between the rules and the oracle is an error only where
/// the two must coincide.
fn check_agreement(must_agree: bool, agreement: Option<bool>) -> Result<(), Failure> {
    if must_agree && agreement == Some(false) {
        return Err(Failure::Domain(Error::Document(
            "rule saturation and the Galois oracle disagree".into(),
        )));
    }
    Ok(())
}

fn print(value: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    println!("{}", text.expect("values serialize"));
}

/// Flags that end a `--words` list.
const FLAGS: &[&str] = &[
    "--alphabet",
    "--graph",
    "--words",
    "--rules",
    "--max-gens",
    "--max-len",
    "--oracle",
    "--pretty",
    "--kind",
    "--help",
    "-h",
];

fn is_flag(arg: &str) -> bool {
    FLAGS.iter().any(|f| {
        arg == *f
            || arg
                .strip_prefix(f)
                .is_some_and(|rest| rest.starts_with('='))
    })
}

/// Rewrites `--words a b c` as `--words=a --words=b --words=c` so that word
/// literals starting with `-` are never read as flags.
fn expand_words(args: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut in_words = false;
    for arg in args {
        if arg == "--words" {
            in_words = true;
        } else if in_words && !is_flag(&arg) {
            out.push(format!("--words={arg}"));
        } else {
            in_words = false;
            out.push(arg);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(expand_words(std::env::args()));
    match run(&cli.command) {
        Ok(outcome) => {
            print(&outcome.value, cli.pretty);
            if outcome.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(Failure::Domain(e)) => {
            print(
                &json!({ "error": { "kind": e.kind(), "detail": e.to_string() } }),
                cli.pretty,
            );
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            Cli::command()
                .error(clap::error::ErrorKind::ArgumentConflict, msg)
                .print()
                .ok();
            ExitCode::from(2)
        }
    }
}
