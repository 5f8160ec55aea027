//! Small reference automata used throughout the tests, benches and docs.

use crate::automaton::{ValueFunction, WeightedAutomaton};
use crate::rational::{int, Rational};

/// Bank alphabet: first letter is bank 1's move, second is bank 2's.
pub const BANK_ALPHABET: [&str; 4] = ["g1g2", "g1b2", "b1g2", "b1b2"];

/// One state, `a` loop with weight 1, `b` loop with weight 0 (limit average).
pub fn freq_a_limavg() -> WeightedAutomaton {
    single_state(ValueFunction::LimAvg, int(1), int(0))
}

/// One state with loops `a:wa` and `b:wb` over `{a, b}`.
pub fn single_state(vf: ValueFunction, wa: Rational, wb: Rational) -> WeightedAutomaton {
    WeightedAutomaton::builder(vf)
        .alphabet(["a", "b"])
        .edge("q", "a", "q", wa)
        .edge("q", "b", "q", wb)
        .build()
        .expect("well-formed")
}

/// Refined motor model with a separate slow-down state.
pub fn motor_a() -> WeightedAutomaton {
    WeightedAutomaton::builder(ValueFunction::LimAvg)
        .alphabet(["on", "off", "slow"])
        .initial("OFF")
        .edge("OFF", "off", "OFF", int(0))
        .edge("OFF", "on", "ON", int(10))
        .edge("OFF", "slow", "SLOW", int(5))
        .edge("ON", "on", "ON", int(2))
        .edge("ON", "off", "OFF", int(10))
        .edge("ON", "slow", "SLOW", int(5))
        .edge("SLOW", "slow", "SLOW", int(1))
        .edge("SLOW", "off", "OFF", int(5))
        .edge("SLOW", "on", "ON", int(5))
        .build()
        .expect("well-formed")
}

/// Abstract motor model: any mode change costs 10.
pub fn motor_b() -> WeightedAutomaton {
    WeightedAutomaton::builder(ValueFunction::LimAvg)
        .alphabet(["on", "off", "slow"])
        .initial("OFF")
        .edge("OFF", "off", "OFF", int(0))
        .edge("OFF", "on", "ON", int(10))
        .edge("OFF", "slow", "ON", int(10))
        .edge("ON", "on", "ON", int(2))
        .edge("ON", "off", "OFF", int(10))
        .edge("ON", "slow", "OFF", int(10))
        .build()
        .expect("well-formed")
}

fn bank(
    lambda: Rational,
    good: &str,
    bad: &str,
    good_letters: [&str; 2],
    bad_letters: [&str; 2],
    good_reward: i64,
    bad_reward: i64,
) -> WeightedAutomaton {
    let mut b = WeightedAutomaton::builder(ValueFunction::disc(lambda).expect("0 < lambda < 1"))
        .alphabet(BANK_ALPHABET)
        .initial(good);
    for s in good_letters {
        b = b
            .edge(good, s, good, int(good_reward))
            .edge(bad, s, good, int(good_reward));
    }
    for s in bad_letters {
        b = b
            .edge(good, s, bad, int(bad_reward))
            .edge(bad, s, bad, int(bad_reward));
    }
    b.build().expect("well-formed")
}

/// 100 dollars in bank 1: reward 8 in the good state, 2 in the bad state.
pub fn bank_a1(lambda: Rational) -> WeightedAutomaton {
    bank(lambda, "G1", "B1", ["g1g2", "g1b2"], ["b1g2", "b1b2"], 8, 2)
}

/// 100 dollars in bank 2: reward 6 in the good state, 4 in the bad state.
pub fn bank_a2(lambda: Rational) -> WeightedAutomaton {
    bank(lambda, "G2", "B2", ["g1g2", "b1g2"], ["g1b2", "b1b2"], 6, 4)
}

/// Deterministic `Sum` automaton over `{a, b}` counting occurrences of `symbol`.
pub fn sum_counter(symbol: &str) -> WeightedAutomaton {
    let other = if symbol == "a" { "b" } else { "a" };
    WeightedAutomaton::builder(ValueFunction::Sum)
        .alphabet(["a", "b"])
        .edge("q", symbol, "q", int(1))
        .edge("q", other, "q", int(0))
        .build()
        .expect("well-formed")
}

/// Deterministic limit-average automaton with two SCCs: `q0` loops on `a`
/// with weight 1 and moves to the weight-0 sink `q1` on `b`.
pub fn two_scc_limavg() -> WeightedAutomaton {
    WeightedAutomaton::builder(ValueFunction::LimAvg)
        .alphabet(["a", "b"])
        .edge("q0", "a", "q0", int(1))
        .edge("q0", "b", "q1", int(0))
        .edge("q1", "a", "q1", int(0))
        .edge("q1", "b", "q1", int(0))
        .build()
        .expect("well-formed")
}

/// One-state discounted automaton with `a` weighted `(1 + lambda) / 2`.
pub fn half_plus_lambda_disc(lambda: Rational) -> WeightedAutomaton {
    let wa = (Rational::from_integer(1.into()) + &lambda) / int(2);
    single_state(ValueFunction::disc(lambda).expect("0 < lambda < 1"), wa, int(0))
}
