//! Free-group and free-abelian normal forms.
//!
//! Text grammar: whitespace-separated tokens `name` or `name^k`, where `k`
//! is a signed decimal integer and names match `[A-Za-z][A-Za-z0-9_.]*`.
//! Rendering emits `name` for exponent 1, `name^k` otherwise, with single
//! spaces between syllables; the identity renders as the empty string.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::num::{self, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    #[error("invalid generator name {name:?} at byte {position}")]
    InvalidName { name: String, position: usize },
    #[error("unknown generator {name:?} at byte {position}")]
    UnknownGenerator { name: String, position: usize },
    #[error("malformed exponent {text:?} at byte {position}")]
    MalformedExponent { text: String, position: usize },
}

impl WordParseError {
    pub fn position(&self) -> usize {
        match self {
            WordParseError::InvalidName { position, .. }
            | WordParseError::UnknownGenerator { position, .. }
            | WordParseError::MalformedExponent { position, .. } => *position,
        }
    }
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Splits text into `(generator, exponent)` tokens without reducing.
pub fn tokenize(text: &str, alphabet: Option<&BTreeSet<String>>) -> Result<Vec<(String, Int)>, WordParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split_whitespace() {
        let position = text[offset..].find(piece).map(|p| p + offset).unwrap_or(offset);
        offset = position + piece.len();
        let (name, exp) = match piece.split_once('^') {
            Some((name, exp_text)) => {
                let exp = num::parse_int(exp_text).ok_or_else(|| WordParseError::MalformedExponent {
                    text: exp_text.to_string(),
                    position: position + name.len() + 1,
                })?;
                (name, exp)
            }
            None => (piece, Int::ONE),
        };
        if !is_valid_name(name) {
            return Err(WordParseError::InvalidName { name: name.to_string(), position });
        }
        if let Some(alpha) = alphabet {
            if !alpha.contains(name) {
                return Err(WordParseError::UnknownGenerator { name: name.to_string(), position });
            }
        }
        out.push((name.to_string(), exp));
    }
    Ok(out)
}

fn render_token(f: &mut fmt::Formatter<'_>, name: &str, exp: &Int) -> fmt::Result {
    if *exp == Int::ONE {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

/// A reduced word in a free group: adjacent syllables have distinct
/// generators and no exponent is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    syllables: Vec<(String, Int)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(name: &str) -> Self {
        Self::power(name, Int::ONE)
    }

    pub fn power(name: &str, exp: Int) -> Self {
        Self::reduce([(name.to_string(), exp)])
    }

    /// Free reduction of an arbitrary syllable sequence.
    pub fn reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (String, Int)>,
    {
        let mut w = Self::identity();
        for (g, e) in raw {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, gen: String, exp: Int) {
        if exp.is_zero() {
            return;
        }
        match self.syllables.last_mut() {
            Some((last, e)) if *last == gen => {
                *e += exp;
                if e.is_zero() {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((gen, exp)),
        }
    }

    pub fn syllables(&self) -> &[(String, Int)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    /// Length in letters, i.e. the sum of absolute exponents.
    pub fn letter_len(&self) -> Int {
        self.syllables.iter().map(|(_, e)| num::abs_int(e)).fold(Int::ZERO, |a, b| a + b)
    }

    pub fn multiply(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for (g, e) in &other.syllables {
            out.push(g.clone(), e.clone());
        }
        out
    }

    pub fn invert(&self) -> GroupWord {
        GroupWord {
            syllables: self.syllables.iter().rev().map(|(g, e)| (g.clone(), -e.clone())).collect(),
        }
    }

    /// `self^n` for any integer `n`, by repeated squaring.
    pub fn pow(&self, n: i64) -> GroupWord {
        let mut base = if n < 0 { self.invert() } else { self.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = GroupWord::identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugate_by(&self, h: &GroupWord) -> GroupWord {
        h.invert().multiply(self).multiply(h)
    }

    pub fn generators(&self) -> BTreeSet<String> {
        self.syllables.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn abelianize(&self) -> AbelianWord {
        AbelianWord::from_pairs(self.syllables.iter().cloned())
    }

    /// Parses and reduces `text`; with an alphabet, unknown names are errors.
    pub fn parse(text: &str, alphabet: Option<&BTreeSet<String>>) -> Result<Self, WordParseError> {
        Ok(Self::reduce(tokenize(text, alphabet)?))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            render_token(f, g, e)?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, None)
    }
}

/// An element of a free abelian group as a sparse exponent map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianWord {
    exps: BTreeMap<String, Int>,
}

impl AbelianWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (String, Int)>,
    {
        let mut w = Self::identity();
        for (g, e) in pairs {
            w.add(g, e);
        }
        w
    }

    fn add(&mut self, gen: String, exp: Int) {
        if exp.is_zero() {
            return;
        }
        let entry = self.exps.entry(gen.clone()).or_insert(Int::ZERO);
        *entry += exp;
        if entry.is_zero() {
            self.exps.remove(&gen);
        }
    }

    pub fn exponent(&self, gen: &str) -> Int {
        self.exps.get(gen).cloned().unwrap_or(Int::ZERO)
    }

    pub fn exponents(&self) -> &BTreeMap<String, Int> {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn multiply(&self, other: &AbelianWord) -> AbelianWord {
        let mut out = self.clone();
        for (g, e) in &other.exps {
            out.add(g.clone(), e.clone());
        }
        out
    }

    pub fn invert(&self) -> AbelianWord {
        AbelianWord {
            exps: self.exps.iter().map(|(g, e)| (g.clone(), -e.clone())).collect(),
        }
    }

    pub fn parse(text: &str, alphabet: Option<&BTreeSet<String>>) -> Result<Self, WordParseError> {
        Ok(Self::from_pairs(tokenize(text, alphabet)?))
    }
}

impl fmt::Display for AbelianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (g, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            render_token(f, g, e)?;
        }
        Ok(())
    }
}

impl FromStr for AbelianWord {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, None)
    }
}
