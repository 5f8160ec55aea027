//! The weighted automaton model.
//!
//! An automaton has named states, a distinguished initial state, a finite
//! alphabet, a transition relation with rational weights and a value
//! function. The value of a word is the supremum of the values of its runs.
//! Parallel transitions (same source, symbol and target with different
//! weights) are allowed; they are distinguished by their index.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, Rational};

pub type StateId = usize;
pub type SymbolId = usize;

/// Perturbation granularity used by [`epsilon_approximation`].
pub const PERTURBATION_GRANULARITY: i64 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ValueFunction {
    Max,
    Last,
    Sum,
    Sup,
    LimSup,
    LimInf,
    LimAvg,
    Disc(Rational),
}

impl ValueFunction {
    /// Discounted sum with a checked factor.
    pub fn disc(lambda: Rational) -> Result<Self> {
        if lambda.is_positive() && lambda < Rational::one() {
            Ok(ValueFunction::Disc(lambda))
        } else {
            Err(Error::InvalidLambda(lambda))
        }
    }

    pub fn is_finite_word(&self) -> bool {
        matches!(self, ValueFunction::Max | ValueFunction::Last | ValueFunction::Sum)
    }

    pub fn lambda(&self) -> Option<&Rational> {
        match self {
            ValueFunction::Disc(l) => Some(l),
            _ => None,
        }
    }

    /// Lower-case name used in documents (`disc` without its factor).
    pub fn name(&self) -> &'static str {
        match self {
            ValueFunction::Max => "max",
            ValueFunction::Last => "last",
            ValueFunction::Sum => "sum",
            ValueFunction::Sup => "sup",
            ValueFunction::LimSup => "limsup",
            ValueFunction::LimInf => "liminf",
            ValueFunction::LimAvg => "limavg",
            ValueFunction::Disc(_) => "disc",
        }
    }

    pub fn from_name(name: &str, lambda: Option<Rational>) -> Result<Self> {
        let vf = match name.to_ascii_lowercase().as_str() {
            "max" => ValueFunction::Max,
            "last" => ValueFunction::Last,
            "sum" => ValueFunction::Sum,
            "sup" => ValueFunction::Sup,
            "limsup" => ValueFunction::LimSup,
            "liminf" => ValueFunction::LimInf,
            "limavg" => ValueFunction::LimAvg,
            "disc" => return ValueFunction::disc(lambda.ok_or(Error::MissingLambda)?),
            other => return Err(Error::UnsupportedTag(other.to_string())),
        };
        Ok(vf)
    }

    /// Short class acronym such as `DLavg` or `NSup`.
    pub fn class_name(&self, deterministic: bool) -> String {
        let d = if deterministic { "D" } else { "N" };
        let kind = match self {
            ValueFunction::Max => return format!("{} Max", det_word(deterministic)),
            ValueFunction::Last => return format!("{} Last", det_word(deterministic)),
            ValueFunction::Sum => return format!("{} Sum", det_word(deterministic)),
            ValueFunction::Sup => "Sup",
            ValueFunction::LimSup => "Lsup",
            ValueFunction::LimInf => "Linf",
            ValueFunction::LimAvg => "Lavg",
            ValueFunction::Disc(_) => "Disc",
        };
        format!("{d}{kind}")
    }
}

fn det_word(deterministic: bool) -> &'static str {
    if deterministic {
        "deterministic"
    } else {
        "nondeterministic"
    }
}

impl fmt::Display for ValueFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueFunction::Disc(l) => write!(f, "disc({})", format_rational(l)),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub source: StateId,
    pub symbol: SymbolId,
    pub target: StateId,
    pub weight: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub is_total: bool,
    pub is_deterministic: bool,
    /// `(state, symbol)` pairs without any successor.
    pub violations: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct WeightedAutomaton {
    states: Vec<String>,
    initial: StateId,
    alphabet: Vec<String>,
    transitions: Vec<Transition>,
    value_function: ValueFunction,
    // out[state][symbol] = indices into `transitions`
    out: Vec<Vec<Vec<usize>>>,
}

impl WeightedAutomaton {
    pub fn new(
        states: Vec<String>,
        initial: StateId,
        alphabet: Vec<String>,
        transitions: Vec<Transition>,
        value_function: ValueFunction,
    ) -> Result<Self> {
        if states.is_empty() {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if alphabet.is_empty() {
            return Err(Error::InvalidAutomaton("empty alphabet".into()));
        }
        check_unique(&states, "state")?;
        check_unique(&alphabet, "symbol")?;
        if initial >= states.len() {
            return Err(Error::InvalidAutomaton("initial state out of range".into()));
        }
        if let ValueFunction::Disc(l) = &value_function {
            ValueFunction::disc(l.clone())?;
        }
        let mut out = vec![vec![Vec::new(); alphabet.len()]; states.len()];
        for (i, t) in transitions.iter().enumerate() {
            if t.source >= states.len() || t.target >= states.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "transition {i} references an unknown state"
                )));
            }
            if t.symbol >= alphabet.len() {
                return Err(Error::InvalidAutomaton(format!(
                    "transition {i} references an unknown symbol"
                )));
            }
            out[t.source][t.symbol].push(i);
        }
        Ok(WeightedAutomaton {
            states,
            initial,
            alphabet,
            transitions,
            value_function,
            out,
        })
    }

    pub fn builder(value_function: ValueFunction) -> AutomatonBuilder {
        AutomatonBuilder::new(value_function)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q]
    }

    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name)
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn symbol_index(&self, name: &str) -> Option<SymbolId> {
        self.alphabet.iter().position(|s| s == name)
    }

    /// Maps symbol names to indices, failing on the first unknown symbol.
    pub fn encode<'a>(&self, symbols: impl IntoIterator<Item = &'a String>) -> Result<Vec<SymbolId>> {
        symbols
            .into_iter()
            .map(|s| {
                self.symbol_index(s)
                    .ok_or_else(|| Error::AlphabetMismatch(s.clone()))
            })
            .collect()
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn value_function(&self) -> &ValueFunction {
        &self.value_function
    }

    /// Transitions leaving `q` on `symbol`.
    pub fn successors(&self, q: StateId, symbol: SymbolId) -> impl Iterator<Item = &Transition> + '_ {
        self.out[q][symbol].iter().map(move |&i| &self.transitions[i])
    }

    pub fn successor_indices(&self, q: StateId, symbol: SymbolId) -> &[usize] {
        &self.out[q][symbol]
    }

    pub fn is_total(&self) -> bool {
        self.out.iter().all(|row| row.iter().all(|ts| !ts.is_empty()))
    }

    /// Exactly one successor state for every state and symbol.
    pub fn is_deterministic(&self) -> bool {
        self.out.iter().all(|row| {
            row.iter().all(|ts| {
                let targets: BTreeSet<_> = ts.iter().map(|&i| self.transitions[i].target).collect();
                targets.len() == 1
            })
        })
    }

    /// Fails with [`Error::NotTotal`] unless every state has a successor on
    /// every symbol.
    pub fn require_total(&self) -> Result<()> {
        let report = validate(self);
        if report.is_total {
            Ok(())
        } else {
            Err(Error::NotTotal(report.violations))
        }
    }

    /// Same structure with every weight replaced by `f(weight)`.
    pub fn map_weights(&self, mut f: impl FnMut(&Rational) -> Rational) -> WeightedAutomaton {
        let mut a = self.clone();
        for t in &mut a.transitions {
            t.weight = f(&t.weight);
        }
        a
    }

    /// Same structure and weights under another value function.
    pub fn with_value_function(&self, value_function: ValueFunction) -> Result<WeightedAutomaton> {
        WeightedAutomaton::new(
            self.states.clone(),
            self.initial,
            self.alphabet.clone(),
            self.transitions.clone(),
            value_function,
        )
    }

    pub fn max_abs_weight(&self) -> Rational {
        self.transitions
            .iter()
            .map(|t| t.weight.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn check_unique(names: &[String], what: &str) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(Error::InvalidAutomaton(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}

/// Incremental construction by state and symbol names. States are numbered
/// in order of first mention; the first mentioned state is initial unless
/// [`AutomatonBuilder::initial`] says otherwise.
#[derive(Debug, Clone)]
pub struct AutomatonBuilder {
    value_function: ValueFunction,
    states: Vec<String>,
    state_ids: HashMap<String, StateId>,
    alphabet: Vec<String>,
    initial: Option<String>,
    edges: Vec<(String, String, String, Rational)>,
}

impl AutomatonBuilder {
    pub fn new(value_function: ValueFunction) -> Self {
        AutomatonBuilder {
            value_function,
            states: Vec::new(),
            state_ids: HashMap::new(),
            alphabet: Vec::new(),
            initial: None,
            edges: Vec::new(),
        }
    }

    pub fn alphabet<I, S>(mut self, symbols: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.alphabet = symbols.into_iter().map(Into::into).collect();
        self
    }

    pub fn state(mut self, name: impl Into<String>) -> Self {
        self.touch(name.into());
        self
    }

    pub fn initial(mut self, name: impl Into<String>) -> Self {
        let name = name.into();
        self.touch(name.clone());
        self.initial = Some(name);
        self
    }

    pub fn edge(
        mut self,
        from: impl Into<String>,
        symbol: impl Into<String>,
        to: impl Into<String>,
        weight: Rational,
    ) -> Self {
        let (from, to) = (from.into(), to.into());
        self.touch(from.clone());
        self.touch(to.clone());
        self.edges.push((from, symbol.into(), to, weight));
        self
    }

    /// Self-loop or edge on every symbol of the alphabet set so far.
    pub fn edge_all(mut self, from: &str, to: &str, weight: Rational) -> Self {
        for s in self.alphabet.clone() {
            self = self.edge(from, s, to, weight.clone());
        }
        self
    }

    fn touch(&mut self, name: String) {
        if !self.state_ids.contains_key(&name) {
            self.state_ids.insert(name.clone(), self.states.len());
            self.states.push(name);
        }
    }

    pub fn build(self) -> Result<WeightedAutomaton> {
        let initial = match &self.initial {
            Some(n) => self.state_ids[n],
            None => 0,
        };
        let mut transitions = Vec::with_capacity(self.edges.len());
        for (from, sym, to, w) in self.edges {
            let symbol = self
                .alphabet
                .iter()
                .position(|s| *s == sym)
                .ok_or_else(|| Error::AlphabetMismatch(sym.clone()))?;
            transitions.push(Transition {
                source: self.state_ids[&from],
                symbol,
                target: self.state_ids[&to],
                weight: w,
            });
        }
        WeightedAutomaton::new(self.states, initial, self.alphabet, transitions, self.value_function)
    }
}

pub fn validate(a: &WeightedAutomaton) -> ValidationReport {
    let mut violations = Vec::new();
    for q in 0..a.num_states() {
        for s in 0..a.alphabet().len() {
            if a.successor_indices(q, s).is_empty() {
                violations.push((a.state_name(q).to_string(), a.alphabet()[s].clone()));
            }
        }
    }
    let is_total = violations.is_empty();
    ValidationReport {
        is_total,
        is_deterministic: is_total && a.is_deterministic(),
        violations,
    }
}

/// Distinct transition weights in increasing order.
pub fn weight_set(a: &WeightedAutomaton) -> Vec<Rational> {
    let set: BTreeSet<Rational> = a.transitions().iter().map(|t| t.weight.clone()).collect();
    set.into_iter().collect()
}

/// Automaton for `c + L_A`.
///
/// `Sum` and `Disc` automata get a fresh copy of the initial state whose
/// outgoing weights carry the shift; every other value function is shifted
/// by adding `c` to all weights.
pub fn shift(a: &WeightedAutomaton, c: &Rational) -> WeightedAutomaton {
    match a.value_function() {
        ValueFunction::Sum | ValueFunction::Disc(_) => {
            let mut states = a.states().to_vec();
            let mut name = format!("{}'", a.state_name(a.initial()));
            while states.contains(&name) {
                name.push('\'');
            }
            states.push(name);
            let fresh = states.len() - 1;
            let mut transitions = a.transitions().to_vec();
            for t in a.transitions().iter().filter(|t| t.source == a.initial()) {
                transitions.push(Transition {
                    source: fresh,
                    symbol: t.symbol,
                    target: t.target,
                    weight: &t.weight + c,
                });
            }
            WeightedAutomaton::new(
                states,
                fresh,
                a.alphabet().to_vec(),
                transitions,
                a.value_function().clone(),
            )
            .expect("shift preserves well-formedness")
        }
        _ => a.map_weights(|w| w + c),
    }
}

/// Automaton for `c * L_A`, `c >= 0`.
pub fn scale(a: &WeightedAutomaton, c: &Rational) -> Result<WeightedAutomaton> {
    if c.is_negative() {
        return Err(Error::NegativeScale(c.clone()));
    }
    Ok(a.map_weights(|w| w * c))
}

/// Same states and transitions, every weight moved by `k * eps / 16` for an
/// integer `k` in `[-16, 16]` drawn from a PRNG seeded with `seed`.
pub fn epsilon_approximation(a: &WeightedAutomaton, eps: &Rational, seed: u64) -> WeightedAutomaton {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = eps / int(PERTURBATION_GRANULARITY);
    a.map_weights(|w| {
        let k = rng.gen_range(-PERTURBATION_GRANULARITY..=PERTURBATION_GRANULARITY);
        w + &step * int(k)
    })
}
