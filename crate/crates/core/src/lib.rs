//! Quantitative languages as executable objects.
//!
//! Weighted automata over finite words (`Max`, `Last`, `Sum`) and infinite
//! words (`Sup`, `LimSup`, `LimInf`, `LimAvg`, discounted sum), exact
//! evaluation on finite and ultimately periodic words, closure constructions
//! under max, min, sum and complement, Büchi machinery, cut-point languages
//! and robustness bounds. All arithmetic is exact.

pub mod analysis;
pub mod automaton;
pub mod closure;
pub mod error;
mod explore;
pub mod fixtures;
pub mod omega;
pub mod oracle;
pub mod rational;
pub mod sampling;
pub mod valuation;
pub mod words;

pub use automaton::{
    epsilon_approximation, scale, shift, validate, weight_set, AutomatonBuilder, StateId, SymbolId, Transition,
    ValidationReport, ValueFunction, WeightedAutomaton,
};
pub use closure::{complement, compose, initial_choice};
pub use error::{ClosureError, Error, Operation, Result};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use valuation::{evaluate_finite, evaluate_lasso, top_value, value_finite, value_lasso};
pub use words::{parse_word, FiniteWord, LassoWord, Word};
pub use explore::MAX_CONSTRUCTED_STATES;
pub use omega::{Acceptance, BooleanOmegaAutomaton};
pub use analysis::{CutpointAutomaton, IsolationResult};
