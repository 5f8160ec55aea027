//! Finite words and ultimately periodic infinite words.
//!
//! Textual grammar: symbols are separated by whitespace, and a lasso
//! `u (v)` denotes `u v v v ...`. Parentheses are tokens of their own, so
//! `(ab)` is the period consisting of the single symbol `ab`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteWord {
    symbols: Vec<String>,
}

impl FiniteWord {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(FiniteWord { symbols })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbols.join(" "))
    }
}

/// `prefix · period^ω` with a nonempty period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LassoWord {
    prefix: Vec<String>,
    period: Vec<String>,
}

impl LassoWord {
    pub fn new<S: Into<String>>(
        prefix: impl IntoIterator<Item = S>,
        period: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let prefix = prefix.into_iter().map(Into::into).collect();
        let period: Vec<String> = period.into_iter().map(Into::into).collect();
        if period.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(LassoWord { prefix, period })
    }

    pub fn prefix(&self) -> &[String] {
        &self.prefix
    }

    pub fn period(&self) -> &[String] {
        &self.period
    }

    /// `|u| + |v|`, the number of distinct positions of the lasso.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    /// Symbol at position `i` of the infinite word.
    pub fn symbol_at(&self, i: usize) -> &str {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `n` symbols. `n` must be at least 1.
    pub fn unroll(&self, n: usize) -> Result<FiniteWord> {
        FiniteWord::new((0..n).map(|i| self.symbol_at(i).to_string()))
    }

    /// Canonical representative: primitive period and shortest prefix.
    /// Two lassos denote the same infinite word iff their normal forms are
    /// equal.
    pub fn normalize(&self) -> LassoWord {
        let mut period = primitive_root(&self.period).to_vec();
        let mut prefix = self.prefix.clone();
        while let (Some(u), Some(v)) = (prefix.last(), period.last()) {
            if u != v {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        LassoWord { prefix, period }
    }
}

impl fmt::Display for LassoWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            write!(f, "{} ", self.prefix.join(" "))?;
        }
        write!(f, "({})", self.period.join(" "))
    }
}

fn primitive_root(v: &[String]) -> &[String] {
    let n = v.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|i| v[i] == v[i - d]) {
            return &v[..d];
        }
    }
    v
}

/// Either kind of word, as produced by [`parse_word`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Finite(FiniteWord),
    Lasso(LassoWord),
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Finite(w) => w.fmt(f),
            Word::Lasso(w) => w.fmt(f),
        }
    }
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Open,
    Close,
    Symbol(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        let is_sep = c.is_whitespace() || c == '(' || c == ')';
        if is_sep {
            if let Some(s) = start.take() {
                tokens.push((s, Token::Symbol(&text[s..i])));
            }
            match c {
                '(' => tokens.push((i, Token::Open)),
                ')' => tokens.push((i, Token::Close)),
                _ => {}
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s, Token::Symbol(&text[s..])));
    }
    tokens
}

/// Parses `sym+` (finite word) or `sym* ( sym+ )` (lasso).
pub fn parse_word(text: &str) -> Result<Word> {
    let syntax = |position: usize, message: &str| Error::Syntax {
        position,
        message: message.to_string(),
    };
    let tokens = tokenize(text);
    let mut prefix = Vec::new();
    let mut iter = tokens.into_iter();
    let mut open_at = None;
    for (pos, tok) in iter.by_ref() {
        match tok {
            Token::Symbol(s) => prefix.push(s.to_string()),
            Token::Open => {
                open_at = Some(pos);
                break;
            }
            Token::Close => return Err(syntax(pos, "unexpected `)`")),
        }
    }
    let Some(open_pos) = open_at else {
        if prefix.is_empty() {
            return Err(syntax(0, "empty word"));
        }
        return Ok(Word::Finite(FiniteWord { symbols: prefix }));
    };
    let mut period = Vec::new();
    let mut closed = false;
    for (pos, tok) in iter.by_ref() {
        match tok {
            Token::Symbol(s) => period.push(s.to_string()),
            Token::Open => return Err(syntax(pos, "nested `(`")),
            Token::Close => {
                if period.is_empty() {
                    return Err(syntax(pos, "empty period"));
                }
                closed = true;
                break;
            }
        }
    }
    if !closed {
        return Err(syntax(open_pos, "unclosed `(`"));
    }
    if let Some((pos, _)) = iter.next() {
        return Err(syntax(pos, "trailing input after period"));
    }
    Ok(Word::Lasso(LassoWord { prefix, period }))
}
