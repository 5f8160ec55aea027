//! Command-line front end for `quantlang`: JSON automaton documents in, JSON
//! result documents out.
//!
//! Exit codes: 0 success, 1 parse or validation errors, 2 closure errors and
//! non-isolated thresholds, 3 resource caps.

pub mod document;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use quantlang::analysis::{
    boolean_weight_reduction, cutpoint_ddisc, cutpoint_dlavg, isolation_check_dlavg, isolation_probe_disc,
    sampled_dsup, IsolationResult,
};
use quantlang::closure::omega::complement_nlsup;
use quantlang::omega::lasso_membership;
use quantlang::rational::to_decimal;
use quantlang::sampling::sample_lassos;
use quantlang::{
    compose, epsilon_approximation, evaluate_finite, evaluate_lasso, format_rational, initial_choice,
    parse_rational, parse_word, scale, shift, top_value, validate, LassoWord, Operation, Rational, ValueFunction,
    Word, WeightedAutomaton,
};

pub use document::{AutomatonDocument, LoadedAutomaton, ResultDocument, ValidationDocument};

/// Default cap on `|u| + |v|` for words given on the command line.
pub const DEFAULT_MAX_POSITIONS: usize = 10_000;
/// Largest prefix and period drawn when sampling lassos.
pub const SAMPLE_PREFIX: usize = 4;
pub const SAMPLE_PERIOD: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "quantlang", version, about = "Weighted automata and quantitative languages")]
pub struct Cli {
    /// Add a display-only decimal approximation with this many digits.
    #[arg(long, global = true, value_name = "DIGITS")]
    pub decimal: Option<usize>,
    /// Largest word length (prefix plus period) accepted on the command line.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POSITIONS)]
    pub max_positions: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BinaryOp {
    Max,
    Min,
    Sum,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Also write the constructed automaton document to this file.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Sampling {
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check totality and determinism.
    Validate { file: PathBuf },
    /// Exact value of a finite word `a b a` or a lasso `a (b a)`.
    Eval {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// max, min or sum of two automata.
    Compose {
        op: BinaryOp,
        a: PathBuf,
        b: PathBuf,
        /// Treat the inputs as nondeterministic (initial choice for max).
        #[arg(long)]
        nondet: bool,
        #[command(flatten)]
        out: Output,
    },
    /// 1 - L_A.
    Complement {
        file: PathBuf,
        /// Treat a deterministic LimSup input as nondeterministic.
        #[arg(long)]
        nondet: bool,
        #[command(flatten)]
        out: Output,
    },
    /// c + L_A.
    Shift {
        file: PathBuf,
        #[arg(short = 'c', long = "constant", allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        out: Output,
    },
    /// c * L_A for c >= 0.
    Scale {
        file: PathBuf,
        #[arg(short = 'c', long = "constant", allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        out: Output,
    },
    /// Equivalent limit-average automaton with weights in {0, 1}.
    ReduceBool {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Büchi automaton for {w : L(w) >= eta}.
    Cutpoint {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        /// Isolation margin; required for discounted sums.
        #[arg(long)]
        eps: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Whether eta is isolated.
    Isolate {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        /// Probe tolerance for discounted sums.
        #[arg(long, default_value = "1/100")]
        delta: String,
        /// Probe depth for discounted sums.
        #[arg(long, default_value_t = 10)]
        max_depth: usize,
    },
    /// Random eps-approximation: every weight moved by at most eps.
    Perturb {
        file: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Sampled lower bound on sup_w |L_A(w) - L_B(w)|.
    Dsup {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Largest value over all words, with a witness lasso.
    Top { file: PathBuf },
    /// Sampled refinement check: largest |L_A - L_B| and the first word with L_A > L_B.
    Diff {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("word has {0} positions, more than --max-positions {1}")]
    WordTooLong(usize, usize),
    #[error(transparent)]
    Library(#[from] quantlang::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(quantlang::Error::Closure(_) | quantlang::Error::NotIsolated { .. }) => 2,
            CliError::Library(quantlang::Error::TooLarge(_)) | CliError::WordTooLong(..) => 3,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_document(path: &Path) -> Result<AutomatonDocument> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn load_weighted(path: &Path) -> Result<(String, WeightedAutomaton)> {
    let doc = read_document(path)?;
    let a = doc.to_weighted()?;
    Ok((doc.name, a))
}

fn rational_arg(name: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| CliError::Usage(format!("--{name} `{text}`: {e}")))
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

struct Context {
    decimal: Option<usize>,
    max_positions: usize,
}

impl Context {
    fn value(&self, doc: &mut ResultDocument, v: &Rational) {
        doc.value = Some(format_rational(v));
        doc.decimal = self.decimal.map(|k| to_decimal(v, k));
    }
}

fn emit(doc: &mut ResultDocument, name: String, a: &WeightedAutomaton, out: &Output) -> Result<()> {
    let automaton = AutomatonDocument::from_weighted(&name, a);
    write_output(&automaton, out)?;
    doc.automaton = Some(automaton);
    Ok(())
}

fn write_output(automaton: &AutomatonDocument, out: &Output) -> Result<()> {
    if let Some(path) = &out.output {
        let text = serde_json::to_string_pretty(automaton).expect("documents serialize");
        fs::write(path, text + "\n").map_err(|e| CliError::Io {
            path: display(path),
            message: e.to_string(),
        })?;
    }
    Ok(())
}

fn same_alphabet(a: &WeightedAutomaton, b: &WeightedAutomaton) -> Result<()> {
    let mut x = a.alphabet().to_vec();
    let mut y = b.alphabet().to_vec();
    x.sort();
    y.sort();
    if x != y {
        return Err(CliError::Usage("the two automata have different alphabets".into()));
    }
    Ok(())
}

/// Seeded sample of lassos over `a`'s alphabet.
pub fn sample(a: &WeightedAutomaton, sampling: &Sampling) -> Vec<LassoWord> {
    sample_lassos(a.alphabet(), sampling.samples, sampling.seed, SAMPLE_PREFIX, SAMPLE_PERIOD)
}

/// Runs one command and returns its result document.
pub fn run(cli: &Cli) -> Result<ResultDocument> {
    let ctx = Context {
        decimal: cli.decimal,
        max_positions: cli.max_positions,
    };
    let mut doc = ResultDocument::default();
    match &cli.command {
        Command::Validate { file } => {
            doc.operation = "validate".into();
            doc.inputs = vec![display(file)];
            let parsed = read_document(file)?.to_automaton_unchecked()?;
            let report = match &parsed {
                LoadedAutomaton::Weighted(a) => validate(a),
                LoadedAutomaton::Boolean(b) => validate(b.as_weighted()),
            };
            doc.status = Some(if report.is_total { "valid" } else { "invalid" }.into());
            doc.validation = Some((&report).into());
            if !report.is_total {
                return Err(quantlang::Error::NotTotal(report.violations).into());
            }
        }
        Command::Eval { file, word } => {
            doc.operation = format!("eval {word}");
            doc.inputs = vec![display(file)];
            let w = parse_word(word)?;
            let positions = match &w {
                Word::Finite(f) => f.len(),
                Word::Lasso(l) => l.positions(),
            };
            if positions > ctx.max_positions {
                return Err(CliError::WordTooLong(positions, ctx.max_positions));
            }
            match (read_document(file)?.to_automaton()?, &w) {
                (LoadedAutomaton::Weighted(a), Word::Finite(f)) => ctx.value(&mut doc, &evaluate_finite(&a, f)?),
                (LoadedAutomaton::Weighted(a), Word::Lasso(l)) => ctx.value(&mut doc, &evaluate_lasso(&a, l)?),
                (LoadedAutomaton::Boolean(b), Word::Lasso(l)) => {
                    let accepted = lasso_membership(&b, l)?;
                    doc.status = Some(if accepted { "accepted" } else { "rejected" }.into());
                }
                (LoadedAutomaton::Boolean(_), Word::Finite(_)) => {
                    return Err(CliError::Usage("Büchi automata read lasso words only".into()))
                }
            }
        }
        Command::Compose { op, a, b, nondet, out } => {
            let name = format!("{op:?}").to_lowercase();
            doc.operation = format!("compose {name}{}", if *nondet { " --nondet" } else { "" });
            doc.inputs = vec![display(a), display(b)];
            let (na, x) = load_weighted(a)?;
            let (nb, y) = load_weighted(b)?;
            let result = match (op, nondet) {
                (BinaryOp::Max, true) => initial_choice(&x, &y)?,
                (_, true) => return Err(CliError::Usage("--nondet applies to max only".into())),
                (BinaryOp::Max, false) => compose(Operation::Max, &x, &y)?,
                (BinaryOp::Min, false) => compose(Operation::Min, &x, &y)?,
                (BinaryOp::Sum, false) => compose(Operation::Sum, &x, &y)?,
            };
            emit(&mut doc, format!("{name}({na},{nb})"), &result, out)?;
        }
        Command::Complement { file, nondet, out } => {
            doc.operation = format!("complement{}", if *nondet { " --nondet" } else { "" });
            doc.inputs = vec![display(file)];
            let (name, a) = load_weighted(file)?;
            let result = if *nondet {
                if *a.value_function() != ValueFunction::LimSup {
                    return Err(CliError::Usage("--nondet applies to limsup automata only".into()));
                }
                complement_nlsup(&a)?
            } else {
                quantlang::complement(&a)?
            };
            emit(&mut doc, format!("complement({name})"), &result, out)?;
        }
        Command::Shift { file, c, out } => {
            doc.operation = format!("shift {c}");
            doc.inputs = vec![display(file)];
            let c = rational_arg("constant", c)?;
            let (name, a) = load_weighted(file)?;
            emit(&mut doc, format!("shift({name})"), &shift(&a, &c), out)?;
        }
        Command::Scale { file, c, out } => {
            doc.operation = format!("scale {c}");
            doc.inputs = vec![display(file)];
            let c = rational_arg("constant", c)?;
            let (name, a) = load_weighted(file)?;
            emit(&mut doc, format!("scale({name})"), &scale(&a, &c)?, out)?;
        }
        Command::ReduceBool { file, out } => {
            doc.operation = "reduce-bool".into();
            doc.inputs = vec![display(file)];
            let (name, a) = load_weighted(file)?;
            emit(&mut doc, format!("bool({name})"), &boolean_weight_reduction(&a)?, out)?;
        }
        Command::Cutpoint { file, eta, eps, out } => {
            doc.operation = format!("cutpoint {eta}");
            doc.inputs = vec![display(file)];
            let eta = rational_arg("eta", eta)?;
            let (name, a) = load_weighted(file)?;
            let c = match (a.value_function(), eps) {
                (ValueFunction::LimAvg, _) => cutpoint_dlavg(&a, &eta)?,
                (ValueFunction::Disc(_), Some(eps)) => cutpoint_ddisc(&a, &eta, &rational_arg("eps", eps)?)?,
                (ValueFunction::Disc(_), None) => {
                    return Err(CliError::Usage("discounted automata need --eps".into()));
                }
                (other, _) => return Err(quantlang::Error::UnsupportedTag(other.to_string()).into()),
            };
            doc.depth = c.depth;
            let automaton = AutomatonDocument::from_boolean(&format!("cutpoint({name})"), &c.automaton);
            write_output(&automaton, out)?;
            doc.automaton = Some(automaton);
        }
        Command::Isolate {
            file,
            eta,
            delta,
            max_depth,
        } => {
            doc.operation = format!("isolate {eta}");
            doc.inputs = vec![display(file)];
            let eta = rational_arg("eta", eta)?;
            let (_, a) = load_weighted(file)?;
            let result = match a.value_function() {
                ValueFunction::LimAvg => isolation_check_dlavg(&a, &eta)?,
                ValueFunction::Disc(_) => isolation_probe_disc(&a, &eta, &rational_arg("delta", delta)?, *max_depth)?,
                other => return Err(quantlang::Error::UnsupportedTag(other.to_string()).into()),
            };
            match result {
                IsolationResult::Isolated { margin } => {
                    doc.status = Some("isolated".into());
                    doc.margin = Some(format_rational(&margin));
                }
                IsolationResult::NotIsolated { witness, value } => {
                    doc.status = Some("not-isolated".into());
                    doc.witness = Some(witness.to_string());
                    ctx.value(&mut doc, &value);
                }
                IsolationResult::Unknown { depth } => {
                    doc.status = Some("unknown".into());
                    doc.depth = Some(depth);
                }
            }
        }
        Command::Perturb { file, eps, seed, out } => {
            doc.operation = format!("perturb {eps}");
            doc.inputs = vec![display(file)];
            doc.seed = Some(*seed);
            let eps = rational_arg("eps", eps)?;
            if eps <= Rational::from_integer(0.into()) {
                return Err(quantlang::Error::EpsNotPositive.into());
            }
            let (name, a) = load_weighted(file)?;
            emit(&mut doc, format!("perturb({name})"), &epsilon_approximation(&a, &eps, *seed), out)?;
        }
        Command::Dsup { a, b, sampling } => {
            doc.operation = "dsup".into();
            doc.inputs = vec![display(a), display(b)];
            let (_, x) = load_weighted(a)?;
            let (_, y) = load_weighted(b)?;
            same_alphabet(&x, &y)?;
            let words = sample(&x, sampling);
            doc.samples = Some(sampling.samples);
            doc.seed = Some(sampling.seed);
            ctx.value(&mut doc, &sampled_dsup(&x, &y, &words)?);
        }
        Command::Top { file } => {
            doc.operation = "top".into();
            doc.inputs = vec![display(file)];
            let (_, a) = load_weighted(file)?;
            let (value, witness) = top_value(&a)?;
            ctx.value(&mut doc, &value);
            doc.witness = Some(witness.to_string());
        }
        Command::Diff { a, b, sampling } => {
            doc.operation = "diff".into();
            doc.inputs = vec![display(a), display(b)];
            let (_, x) = load_weighted(a)?;
            let (_, y) = load_weighted(b)?;
            same_alphabet(&x, &y)?;
            if x.value_function() != y.value_function() {
                return Err(quantlang::Error::TagMismatch(x.value_function().to_string(), y.value_function().to_string()).into());
            }
            let mut largest = Rational::from_integer(0.into());
            for w in sample(&x, sampling) {
                let (vx, vy) = (evaluate_lasso(&x, &w)?, evaluate_lasso(&y, &w)?);
                if doc.witness.is_none() && vx > vy {
                    doc.witness = Some(w.to_string());
                }
                let d = if vx > vy { vx - vy } else { vy - vx };
                if d > largest {
                    largest = d;
                }
            }
            doc.samples = Some(sampling.samples);
            doc.seed = Some(sampling.seed);
            doc.status = Some(if doc.witness.is_some() { "violated" } else { "refines" }.into());
            ctx.value(&mut doc, &largest);
        }
    }
    Ok(doc)
}
