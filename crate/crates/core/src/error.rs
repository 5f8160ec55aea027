use std::fmt;

use thiserror::Error;

use crate::rational::{format_rational, Rational};
use crate::words::LassoWord;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operation {
    Max,
    Min,
    Sum,
    Complement,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Max => "max",
            Operation::Min => "min",
            Operation::Sum => "sum",
            Operation::Complement => "complement",
        })
    }
}

/// A requested closure operation for which the automaton class is known not
/// to be closed. No automaton is constructed in that case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureError {
    pub operation: Operation,
    /// Class acronym, e.g. `DLavg` or `nondeterministic Sum`.
    pub class: String,
    /// The non-closure statement.
    pub citation: &'static str,
    /// A language in the closure that the class cannot define.
    pub counterexample: &'static str,
}

impl fmt::Display for ClosureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is not closed under {}: {} (counterexample: {})",
            self.class, self.operation, self.citation, self.counterexample
        )
    }
}

impl std::error::Error for ClosureError {}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("transition relation is not total; missing (state, symbol) pairs: {}", format_pairs(.0))]
    NotTotal(Vec<(String, String)>),
    #[error("symbol `{0}` is not in the automaton alphabet")]
    AlphabetMismatch(String),
    #[error("value functions differ: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("discount factors differ: {} vs {}", format_rational(.0), format_rational(.1))]
    LambdaMismatch(Rational, Rational),
    #[error("value function {0} does not apply to this kind of word")]
    WrongArity(String),
    #[error("discounted sum requires a discount factor")]
    MissingLambda,
    #[error("discount factor must satisfy 0 < lambda < 1, got {}", format_rational(.0))]
    InvalidLambda(Rational),
    #[error("scale factor must be non-negative, got {}", format_rational(.0))]
    NegativeScale(Rational),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error("operation does not support value function {0}")]
    UnsupportedTag(String),
    #[error("weight {} is outside [0, 1]", format_rational(.0))]
    WeightOutOfRange(Rational),
    #[error("threshold {} is not isolated{}", format_rational(.eta), .witness.as_ref().map(|w| format!(" (word {w} has value {})", format_rational(.value))).unwrap_or_default())]
    NotIsolated {
        eta: Rational,
        witness: Option<LassoWord>,
        value: Rational,
    },
    #[error("epsilon must be positive")]
    EpsNotPositive,
    #[error("node {0} has no successor")]
    DeadEnd(String),
    #[error("graph has no reachable cycle")]
    Acyclic,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("the automaton must be deterministic")]
    NotDeterministic,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("empty sequence")]
    EmptySequence,
}

fn format_pairs(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(q, s)| format!("({q}, {s})"))
        .collect::<Vec<_>>()
        .join(", ")
}
