//! JSON documents read and written by the command-line tool.
//!
//! Rationals are always `"p/q"` strings. Weighted automata carry a value
//! function tag in `type`; Büchi and coBüchi automata use `type: "buchi"` or
//! `"cobuchi"` and mark transitions with `accepting` instead of `weight`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use quantlang::omega::BoolTransition;
use quantlang::{
    format_rational, parse_rational, Acceptance, BooleanOmegaAutomaton, Error, Rational, Transition, ValidationReport,
    ValueFunction, WeightedAutomaton,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransitionDocument {
    pub from: String,
    pub symbol: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub accepting: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub name: String,
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub transitions: Vec<TransitionDocument>,
}

/// Either automaton kind a document can describe.
#[derive(Debug, Clone)]
pub enum LoadedAutomaton {
    Weighted(WeightedAutomaton),
    Boolean(BooleanOmegaAutomaton),
}

fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidAutomaton(message.into())
}

fn rational(field: &str, text: &str) -> Result<Rational, Error> {
    parse_rational(text).map_err(|e| invalid(format!("{field} `{text}`: {e}")))
}

impl AutomatonDocument {
    pub fn from_weighted(name: &str, a: &WeightedAutomaton) -> Self {
        let vf = a.value_function();
        AutomatonDocument {
            name: name.to_string(),
            kind: vf.name().to_string(),
            lambda: vf.lambda().map(format_rational),
            alphabet: a.alphabet().to_vec(),
            states: a.states().to_vec(),
            initial: a.state_name(a.initial()).to_string(),
            transitions: a
                .transitions()
                .iter()
                .map(|t| TransitionDocument {
                    from: a.state_name(t.source).to_string(),
                    symbol: a.alphabet()[t.symbol].clone(),
                    to: a.state_name(t.target).to_string(),
                    weight: Some(format_rational(&t.weight)),
                    accepting: None,
                })
                .collect(),
        }
    }

    pub fn from_boolean(name: &str, b: &BooleanOmegaAutomaton) -> Self {
        AutomatonDocument {
            name: name.to_string(),
            kind: match b.kind() {
                Acceptance::Buchi => "buchi",
                Acceptance::CoBuchi => "cobuchi",
            }
            .to_string(),
            lambda: None,
            alphabet: b.alphabet().to_vec(),
            states: b.states().to_vec(),
            initial: b.state_name(b.initial()).to_string(),
            transitions: b
                .transitions()
                .iter()
                .map(|t| TransitionDocument {
                    from: b.state_name(t.source).to_string(),
                    symbol: b.alphabet()[t.symbol].clone(),
                    to: b.state_name(t.target).to_string(),
                    weight: None,
                    accepting: Some(t.accepting),
                })
                .collect(),
        }
    }

    fn index(&self, list: &[String], what: &str, name: &str) -> Result<usize, Error> {
        list.iter()
            .position(|s| s == name)
            .ok_or_else(|| invalid(format!("unknown {what} `{name}`")))
    }

    fn check_unique(list: &[String], what: &str) -> Result<(), Error> {
        let mut seen = BTreeSet::new();
        for s in list {
            if !seen.insert(s) {
                return Err(invalid(format!("duplicate {what} `{s}`")));
            }
        }
        Ok(())
    }

    /// Builds the automaton without checking totality.
    pub fn to_automaton_unchecked(&self) -> Result<LoadedAutomaton, Error> {
        Self::check_unique(&self.states, "state")?;
        Self::check_unique(&self.alphabet, "symbol")?;
        let initial = self.index(&self.states, "initial state", &self.initial)?;
        let acceptance = match self.kind.as_str() {
            "buchi" => Some(Acceptance::Buchi),
            "cobuchi" => Some(Acceptance::CoBuchi),
            _ => None,
        };
        if let Some(kind) = acceptance {
            let mut transitions = Vec::with_capacity(self.transitions.len());
            for t in &self.transitions {
                if t.weight.is_some() {
                    return Err(invalid("boolean automata take `accepting`, not `weight`"));
                }
                transitions.push(BoolTransition {
                    source: self.index(&self.states, "state", &t.from)?,
                    symbol: self.index(&self.alphabet, "symbol", &t.symbol)?,
                    target: self.index(&self.states, "state", &t.to)?,
                    accepting: t.accepting.unwrap_or(false),
                });
            }
            let b = BooleanOmegaAutomaton::new(kind, self.states.clone(), initial, self.alphabet.clone(), transitions)?;
            return Ok(LoadedAutomaton::Boolean(b));
        }
        let lambda = match (&self.lambda, self.kind.as_str()) {
            (Some(l), "disc") => Some(rational("lambda", l)?),
            (None, "disc") => return Err(Error::MissingLambda),
            (Some(_), _) => return Err(invalid("`lambda` is only allowed for type disc")),
            (None, _) => None,
        };
        let vf = ValueFunction::from_name(&self.kind, lambda)?;
        let mut transitions = Vec::with_capacity(self.transitions.len());
        for t in &self.transitions {
            let weight = t
                .weight
                .as_deref()
                .ok_or_else(|| invalid(format!("transition {} -{}-> {} has no weight", t.from, t.symbol, t.to)))?;
            if t.accepting.is_some() {
                return Err(invalid("weighted automata take `weight`, not `accepting`"));
            }
            transitions.push(Transition {
                source: self.index(&self.states, "state", &t.from)?,
                symbol: self.index(&self.alphabet, "symbol", &t.symbol)?,
                target: self.index(&self.states, "state", &t.to)?,
                weight: rational("weight", weight)?,
            });
        }
        let a = WeightedAutomaton::new(self.states.clone(), initial, self.alphabet.clone(), transitions, vf)?;
        Ok(LoadedAutomaton::Weighted(a))
    }

    /// Builds the automaton, rejecting partial transition relations with the
    /// list of missing (state, symbol) pairs.
    pub fn to_automaton(&self) -> Result<LoadedAutomaton, Error> {
        let loaded = self.to_automaton_unchecked()?;
        if let LoadedAutomaton::Weighted(a) = &loaded {
            a.require_total()?;
        }
        Ok(loaded)
    }

    pub fn to_weighted(&self) -> Result<WeightedAutomaton, Error> {
        match self.to_automaton()? {
            LoadedAutomaton::Weighted(a) => Ok(a),
            LoadedAutomaton::Boolean(_) => Err(invalid(format!(
                "`{}` is a {} automaton; this command needs a weighted automaton",
                self.name, self.kind
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationDocument {
    pub total: bool,
    pub deterministic: bool,
    /// Missing `(state, symbol)` pairs.
    pub missing: Vec<[String; 2]>,
}

impl From<&ValidationReport> for ValidationDocument {
    fn from(r: &ValidationReport) -> Self {
        ValidationDocument {
            total: r.is_total,
            deterministic: r.is_deterministic,
            missing: r.violations.iter().map(|(q, s)| [q.clone(), s.clone()]).collect(),
        }
    }
}

/// Output of every command. Unused fields are omitted.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    /// Echo of the command and its arguments.
    pub operation: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    /// Display-only approximation of `value`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub automaton: Option<AutomatonDocument>,
}
