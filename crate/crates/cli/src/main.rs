//! `htorelli`: batch front end for the word, braid and homology-action
//! operations. Exit codes: 0 success, 1 domain error, 2 usage error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use htorelli::{
    action_matrix, balanced_decompose, burau, burau_at, center_word, enumerate_even_words, epsilon,
    factor_kernel_word, in_ker_epsilon, in_kn, in_torelli_kernel, is_pure, permutation,
    schreier_generators, section, split, verify_factorization, BetaVector, BraidWord, Error, Word,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "htorelli",
    version,
    about = "Word algebra for hyperelliptic Torelli Birman kernels"
)]
struct Cli {
    /// Emit a single JSON object with "inputs" and "result"
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Free-group words in z1..z<2g+1>
    #[command(subcommand)]
    Word(WordCommand),
    /// Braid words in s1..s<n-1>
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Action on the arc classes b1..b<2g+1>
    #[command(subcommand)]
    Action(ActionCommand),
}

#[derive(Args, Clone, Copy)]
struct Size {
    /// Genus; the word rank is 2g+1 and braids use 2g+2 strands
    #[arg(short = 'g', long = "genus", value_parser = clap::value_parser!(u32).range(1..))]
    genus: Option<u32>,
    /// Explicit rank (word commands) or strand count (braid commands)
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    n: Option<u32>,
}

impl Size {
    fn rank(self) -> Result<usize, Failure> {
        match (self.n, self.genus) {
            (Some(n), _) => Ok(n as usize),
            (None, Some(g)) => Ok(2 * g as usize + 1),
            (None, None) => Err(Failure::Usage("one of -g or -n is required".into())),
        }
    }

    fn strands(self) -> Result<usize, Failure> {
        match (self.n, self.genus) {
            (Some(n), _) => Ok(n as usize),
            (None, Some(g)) => Ok(2 * g as usize + 2),
            (None, None) => Err(Failure::Usage("one of -g or -n is required".into())),
        }
    }

    fn to_json(self) -> Value {
        json!({ "genus": self.genus, "n": self.n })
    }
}

#[derive(Args)]
struct WordInput {
    #[command(flatten)]
    size: Size,
    /// Word such as "z1 z2^-1"; the empty string is the identity
    word: String,
}

#[derive(Subcommand)]
enum WordCommand {
    /// Freely reduce a word
    Reduce(WordInput),
    /// Evaluate epsilon on an even word
    Eps(WordInput),
    /// Split an even word as k · s(v) with k in ker epsilon
    Split(WordInput),
    /// Test membership in ker epsilon
    Kernel(WordInput),
    /// Factor a kernel word into conjugated normal generators
    Factor(WordInput),
    /// Schreier generators of ker epsilon over cosets of radius <= R
    Schreier {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value_t = 1)]
        radius: u64,
    },
    /// Enumerate even reduced words up to a length
    Enum {
        #[command(flatten)]
        size: Size,
        #[arg(long = "max-len", default_value_t = 4)]
        max_len: usize,
    },
}

#[derive(Args)]
struct BraidInput {
    #[command(flatten)]
    size: Size,
    /// Braid word such as "s1 s2^-1"; the empty string is the identity
    word: String,
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Reduced Burau matrix over Z[t, t^-1]
    Burau(BraidInput),
    /// Reduced Burau matrix specialized at t = ±1
    Eval {
        #[command(flatten)]
        input: BraidInput,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        at: i64,
    },
    /// Strand permutation
    Perm(BraidInput),
    /// Test membership in K_n
    Kernel(BraidInput),
    /// The full twist generating the center
    Center {
        #[command(flatten)]
        size: Size,
    },
}

#[derive(Subcommand)]
enum ActionCommand {
    /// Matrix of the action, columns are images of b1..b<2g+1>
    Matrix(WordInput),
    /// Image of one arc class and the Torelli test
    Fix {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, default_value_t = 1)]
        beta: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::MalformedToken { .. }
            | Error::IndexOutOfRange { .. }
            | Error::TooFewStrands(_)
            | Error::ZeroRank
            | Error::NonUnitSpecialization(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

/// Text and JSON renderings of one command's result.
struct Report {
    inputs: Value,
    result: Value,
    text: String,
}

fn show_word(w: &Word) -> String {
    if w.is_identity() {
        "<id>".into()
    } else {
        w.to_string()
    }
}

fn show_braid(b: &BraidWord) -> String {
    if b.is_empty() {
        "<id>".into()
    } else {
        b.to_string()
    }
}

fn word_inputs(command: &str, input: &WordInput) -> Value {
    json!({ "command": command, "size": input.size.to_json(), "word": input.word })
}

fn run_word(cmd: WordCommand) -> Result<Report, Failure> {
    match cmd {
        WordCommand::Reduce(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            Ok(Report {
                inputs: word_inputs("word reduce", &input),
                result: json!(w.to_string()),
                text: show_word(&w),
            })
        }
        WordCommand::Eps(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            let v = epsilon(&w)?;
            Ok(Report {
                inputs: word_inputs("word eps", &input),
                result: v.to_json(),
                text: v.to_string(),
            })
        }
        WordCommand::Split(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            let (k, v) = split(&w)?;
            let s = section(&v);
            let pairs = balanced_decompose(&v);
            let pairs_text = if pairs.is_empty() {
                "<none>".to_string()
            } else {
                pairs
                    .iter()
                    .map(|(p, m)| format!("e{p} - e{m}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok(Report {
                inputs: word_inputs("word split", &input),
                result: json!({
                    "kernel": k.to_string(),
                    "epsilon": v.to_json(),
                    "section": s.to_string(),
                    "pairs": pairs,
                }),
                text: format!(
                    "k = {}\nv = {v}\ns(v) = {}\npairs = {}",
                    show_word(&k),
                    show_word(&s),
                    pairs_text
                ),
            })
        }
        WordCommand::Kernel(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            let member = in_ker_epsilon(&w);
            let text = match (member, epsilon(&w)) {
                (true, _) => "true".to_string(),
                (false, Ok(v)) => format!("false (epsilon = {v})"),
                (false, Err(_)) => "false (odd word)".to_string(),
            };
            Ok(Report {
                inputs: word_inputs("word kernel", &input),
                result: json!(member),
                text,
            })
        }
        WordCommand::Factor(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            let f = factor_kernel_word(&w)?;
            let verified = verify_factorization(&w, &f);
            let mut text = f.to_string();
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&format!("verified: {verified}"));
            Ok(Report {
                inputs: word_inputs("word factor", &input),
                result: json!({ "factors": f.to_json(), "verified": verified }),
                text,
            })
        }
        WordCommand::Schreier { size, radius } => {
            let genus = match (size.genus, size.n) {
                (Some(g), _) => g as usize,
                (None, Some(n)) if n % 2 == 1 && n >= 3 => (n as usize - 1) / 2,
                _ => {
                    return Err(Failure::Usage(
                        "schreier needs -g, or an odd -n >= 3".into(),
                    ))
                }
            };
            let gens = schreier_generators(genus, radius);
            Ok(Report {
                inputs: json!({ "command": "word schreier", "size": size.to_json(), "radius": radius }),
                result: Value::from(gens.iter().map(ToString::to_string).collect::<Vec<_>>()),
                text: gens.iter().map(show_word).collect::<Vec<_>>().join("\n"),
            })
        }
        WordCommand::Enum { size, max_len } => {
            let words: Vec<Word> = enumerate_even_words(size.rank()?, max_len).collect();
            Ok(Report {
                inputs: json!({ "command": "word enum", "size": size.to_json(), "max_len": max_len }),
                result: Value::from(words.iter().map(ToString::to_string).collect::<Vec<_>>()),
                text: words.iter().map(show_word).collect::<Vec<_>>().join("\n"),
            })
        }
    }
}

fn braid_inputs(command: &str, input: &BraidInput) -> Value {
    json!({ "command": command, "size": input.size.to_json(), "word": input.word })
}

fn run_braid(cmd: BraidCommand) -> Result<Report, Failure> {
    match cmd {
        BraidCommand::Burau(input) => {
            let b = BraidWord::parse(&input.word, input.size.strands()?)?;
            let m = burau(&b);
            Ok(Report {
                inputs: braid_inputs("braid burau", &input),
                result: m.to_json(),
                text: m.to_string(),
            })
        }
        BraidCommand::Eval { input, at } => {
            let b = BraidWord::parse(&input.word, input.size.strands()?)?;
            let m = burau_at(&b, at)?;
            let mut inputs = braid_inputs("braid eval", &input);
            inputs["at"] = json!(at);
            Ok(Report {
                inputs,
                result: m.to_json(),
                text: m.to_string(),
            })
        }
        BraidCommand::Perm(input) => {
            let b = BraidWord::parse(&input.word, input.size.strands()?)?;
            let p = permutation(&b);
            Ok(Report {
                inputs: braid_inputs("braid perm", &input),
                result: json!({ "images": p.images(), "pure": p.is_identity() }),
                text: format!("{p}\npure: {}", p.is_identity()),
            })
        }
        BraidCommand::Kernel(input) => {
            let b = BraidWord::parse(&input.word, input.size.strands()?)?;
            let member = in_kn(&b);
            let text = if member {
                "true".to_string()
            } else if !is_pure(&b) {
                format!("false (not pure: {})", permutation(&b))
            } else {
                let image = burau_at(&b, -1)?;
                if image.is_scalar(-1) {
                    "false (image = -I)".to_string()
                } else {
                    format!("false (image = {})", image.to_json())
                }
            };
            Ok(Report {
                inputs: braid_inputs("braid kernel", &input),
                result: json!(member),
                text,
            })
        }
        BraidCommand::Center { size } => {
            let b = center_word(size.strands()?)?;
            Ok(Report {
                inputs: json!({ "command": "braid center", "size": size.to_json() }),
                result: json!(b.to_string()),
                text: show_braid(&b),
            })
        }
    }
}

fn run_action(cmd: ActionCommand) -> Result<Report, Failure> {
    match cmd {
        ActionCommand::Matrix(input) => {
            let w = Word::parse(&input.word, input.size.rank()?)?;
            let m = action_matrix(&w)?;
            Ok(Report {
                inputs: word_inputs("action matrix", &input),
                result: m.to_json(),
                text: m.to_string(),
            })
        }
        ActionCommand::Fix { input, beta } => {
            let rank = input.size.rank()?;
            let w = Word::parse(&input.word, rank)?;
            if beta == 0 || beta > rank {
                return Err(Failure::Usage(format!("--beta must lie in 1..={rank}")));
            }
            let image = action_matrix(&w)?.image_of_basis(beta);
            let fixed = image == BetaVector::basis(rank, beta);
            let torelli = in_torelli_kernel(&w);
            let mut inputs = word_inputs("action fix", &input);
            inputs["beta"] = json!(beta);
            Ok(Report {
                inputs,
                result: json!({
                    "image": image.to_json(),
                    "fixed": fixed,
                    "torelli": torelli,
                }),
                text: format!("b{beta} -> {image}\nfixed: {fixed}\ntorelli: {torelli}"),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Word(cmd) => run_word(cmd),
        Command::Braid(cmd) => run_braid(cmd),
        Command::Action(cmd) => run_action(cmd),
    };
    match outcome {
        Ok(report) => {
            let mut out = io::stdout().lock();
            let body = if cli.json {
                json!({ "inputs": report.inputs, "result": report.result }).to_string()
            } else {
                report.text
            };
            // a closed pipe is not worth a panic
            let _ = writeln!(out, "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
