//! Free products of racks.
//!
//! Elements are pairs `(x, g)` with `x` in a factor `X_t` and `g` in the
//! free product of the factor adjoint groups, modulo `(x, g w) ~ (x·g, w)`.
//! Orienting the relation as "absorb a leading syllable from the base
//! factor into the base" yields a canonical representative in which the
//! tail does not start in the base factor, so equality is syntactic.
//!
//! Text syntax: `factor.element | word`, e.g. `b.0 | a.0^2 b.0^-1`, where
//! the word uses dotted generator names `factor.i` for `e_i` in that
//! factor. The part after `|` may be empty.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::adjoint::{generator_name, AdjValue, AdjointModel, FactorModel, FreeRackModel, ModelKind, TrivialRackModel};
use crate::num::{self, Int};
use crate::word::{self, GroupWord, WordParseError};
use crate::Sign;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeProductError {
    #[error("a free product needs at least 2 factors, got {0}")]
    TooFewFactors(usize),
    #[error("duplicate factor name {0:?}")]
    DuplicateFactor(String),
    #[error("invalid factor name {0:?}; expected [A-Za-z][A-Za-z0-9_]*")]
    InvalidFactorName(String),
    #[error("unknown factor {0:?}")]
    UnknownFactor(String),
    #[error("{element} is not an element of factor {factor:?}")]
    ElementOutOfRange { factor: String, element: String },
    #[error("elements belong to different free products")]
    MixedParents,
    #[error("malformed element {text:?}: {reason}")]
    Malformed { text: String, reason: String },
    #[error(transparent)]
    Word(#[from] WordParseError),
    #[error("operation requires a free quandle (one-element trivial factors)")]
    NotFreeQuandle,
    #[error("operation requires a free rack (one-generator free rack factors)")]
    NotFreeRack,
    #[error("syllable in factor {0:?} is not a power of a single generator")]
    NotSingleGenerator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub factor: usize,
    pub value: AdjValue,
}

/// A factorization `g₁ ⋯ gₙ`: no identity syllables and adjacent syllables
/// in distinct factors. Built only through [`FreeProductRack`] methods.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SyllableWord(Vec<Syllable>);

impl SyllableWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Syllable> {
        self.0.first()
    }

    fn push(&mut self, s: Syllable) {
        if s.value.is_identity() {
            return;
        }
        match self.0.last_mut() {
            Some(last) if last.factor == s.factor => {
                last.value = last.value.add(&s.value);
                if last.value.is_identity() {
                    self.0.pop();
                }
            }
            _ => self.0.push(s),
        }
    }

    /// Free-product normal form of an arbitrary syllable sequence. All
    /// factor groups here are abelian, so merging is coordinatewise.
    pub fn factorize<I: IntoIterator<Item = Syllable>>(raw: I) -> Self {
        let mut w = Self::identity();
        for s in raw {
            w.push(s);
        }
        w
    }

    pub fn multiply(&self, other: &SyllableWord) -> SyllableWord {
        let mut out = self.clone();
        out.0.reserve(other.len());
        for s in &other.0 {
            out.push(s.clone());
        }
        out
    }

    pub fn invert(&self) -> SyllableWord {
        SyllableWord(
            self.0
                .iter()
                .rev()
                .map(|s| Syllable { factor: s.factor, value: s.value.neg() })
                .collect(),
        )
    }

    /// `self^n` for `n ≥ 0` by repeated squaring.
    pub fn pow(&self, n: u64) -> SyllableWord {
        let mut acc = SyllableWord::identity();
        let mut base = self.clone();
        let mut k = n;
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

    pub fn suffix(&self, start: usize) -> SyllableWord {
        SyllableWord(self.0[start..].to_vec())
    }

    pub fn prefix(&self, end: usize) -> SyllableWord {
        SyllableWord(self.0[..end].to_vec())
    }
}

/// An element in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeProductElement {
    parent: u64,
    factor: usize,
    base: Int,
    tail: SyllableWord,
}

impl FreeProductElement {
    pub fn factor(&self) -> usize {
        self.factor
    }

    pub fn base(&self) -> &Int {
        &self.base
    }

    pub fn tail(&self) -> &SyllableWord {
        &self.tail
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub model: FactorModel,
}

#[derive(Debug, Clone)]
pub struct FreeProductRack {
    id: u64,
    factors: Vec<Factor>,
    quandle: bool,
}

fn is_factor_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FreeProductRack {
    pub fn new(factors: Vec<Factor>) -> Result<Self, FreeProductError> {
        if factors.len() < 2 {
            return Err(FreeProductError::TooFewFactors(factors.len()));
        }
        let mut seen = BTreeSet::new();
        for f in &factors {
            if !is_factor_name(&f.name) {
                return Err(FreeProductError::InvalidFactorName(f.name.clone()));
            }
            if !seen.insert(f.name.as_str()) {
                return Err(FreeProductError::DuplicateFactor(f.name.clone()));
            }
        }
        let quandle = factors.iter().all(|f| f.model.is_quandle());
        Ok(Self { id: NEXT_ID.fetch_add(1, Ordering::Relaxed), factors, quandle })
    }

    /// Free rack on `names`: free product of one-generator free racks.
    pub fn free_rack<S: AsRef<str>>(names: &[S]) -> Result<Self, FreeProductError> {
        Self::new(
            names
                .iter()
                .map(|n| Factor { name: n.as_ref().to_string(), model: FactorModel::FreeRack(FreeRackModel) })
                .collect(),
        )
    }

    /// Free quandle on `names`: free product of one-element trivial quandles.
    pub fn free_quandle<S: AsRef<str>>(names: &[S]) -> Result<Self, FreeProductError> {
        Self::trivial_product(&names.iter().map(|n| (n.as_ref(), 1)).collect::<Vec<_>>())
    }

    /// Free product of trivial racks `T_{n₁} ∗ T_{n₂} ∗ ⋯`.
    pub fn trivial_product(spec: &[(&str, usize)]) -> Result<Self, FreeProductError> {
        Self::new(
            spec.iter()
                .map(|&(name, n)| Factor {
                    name: name.to_string(),
                    model: FactorModel::Trivial(crate::adjoint::trivial_rack_model(n.max(1))),
                })
                .collect(),
        )
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn model(&self, factor: usize) -> &FactorModel {
        &self.factors[factor].model
    }

    pub fn factor_name(&self, factor: usize) -> &str {
        &self.factors[factor].name
    }

    pub fn factor_index(&self, name: &str) -> Result<usize, FreeProductError> {
        self.factors
            .iter()
            .position(|f| f.name == name)
            .ok_or_else(|| FreeProductError::UnknownFactor(name.to_string()))
    }

    pub fn is_quandle(&self) -> bool {
        self.quandle
    }

    pub fn is_free_quandle(&self) -> bool {
        self.factors.iter().all(|f| matches!(f.model, FactorModel::Trivial(m) if m.rank() == 1))
    }

    pub fn is_free_rack(&self) -> bool {
        self.factors.iter().all(|f| matches!(f.model, FactorModel::FreeRack(_)))
    }

    /// Factorization of a named syllable list.
    pub fn factorize_named<I>(&self, raw: I) -> Result<SyllableWord, FreeProductError>
    where
        I: IntoIterator<Item = (String, AdjValue)>,
    {
        let mut out = Vec::new();
        for (name, value) in raw {
            let factor = self.factor_index(&name)?;
            assert_eq!(value.rank(), self.model(factor).rank(), "value rank must match factor {name}");
            out.push(Syllable { factor, value });
        }
        Ok(SyllableWord::factorize(out))
    }

    /// The syllable `e_x^k` in `factor`.
    pub fn generator_power(&self, factor: usize, x: &Int, k: &Int) -> Syllable {
        Syllable { factor, value: self.model(factor).embed(x).scale(k) }
    }

    /// Canonical form of `(x, g)`: a leading syllable from the base factor
    /// acts on `x` and is dropped. One step suffices since `g` alternates.
    pub fn reduce_element(&self, factor: usize, x: Int, g: SyllableWord) -> FreeProductElement {
        debug_assert!(self.model(factor).contains(&x));
        let (base, tail) = match g.first() {
            Some(s) if s.factor == factor => {
                let base = self.model(factor).act(&x, &s.value);
                (base, g.suffix(1))
            }
            _ => (x, g),
        };
        FreeProductElement { parent: self.id, factor, base, tail }
    }

    /// `(x, ε)`.
    pub fn base_element(&self, factor: usize, x: Int) -> Result<FreeProductElement, FreeProductError> {
        if !self.model(factor).contains(&x) {
            return Err(FreeProductError::ElementOutOfRange {
                factor: self.factor_name(factor).to_string(),
                element: x.to_string(),
            });
        }
        Ok(self.reduce_element(factor, x, SyllableWord::identity()))
    }

    pub fn element(&self, factor: usize, x: Int, g: SyllableWord) -> Result<FreeProductElement, FreeProductError> {
        self.base_element(factor, x.clone())?;
        Ok(self.reduce_element(factor, x, g))
    }

    fn check(&self, p: &FreeProductElement) -> Result<(), FreeProductError> {
        if p.parent == self.id {
            Ok(())
        } else {
            Err(FreeProductError::MixedParents)
        }
    }

    /// `(x, g) ◁^{±1} (y, h) = (x, g h⁻¹ e_y^{±1} h)`.
    pub fn rack_op(&self, p: &FreeProductElement, q: &FreeProductElement, sign: Sign) -> Result<FreeProductElement, FreeProductError> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.rack_op_unchecked(p, q, sign))
    }

    pub(crate) fn rack_op_unchecked(&self, p: &FreeProductElement, q: &FreeProductElement, sign: Sign) -> FreeProductElement {
        let ey = self.generator_power(q.factor, &q.base, &Int::from(sign.as_i64()));
        let mut tail = p.tail.multiply(&q.tail.invert());
        tail.push(ey);
        let tail = tail.multiply(&q.tail);
        self.reduce_element(p.factor, p.base.clone(), tail)
    }

    pub fn equal(&self, p: &FreeProductElement, q: &FreeProductElement) -> Result<bool, FreeProductError> {
        self.check(p)?;
        self.check(q)?;
        Ok(p == q)
    }

    /// `g⁻¹ s g` in the free group on the factor names, for a free quandle.
    pub fn conjugate_form(&self, p: &FreeProductElement) -> Result<GroupWord, FreeProductError> {
        self.check(p)?;
        if !self.is_free_quandle() {
            return Err(FreeProductError::NotFreeQuandle);
        }
        let g = self.letters(&p.tail);
        let s = GroupWord::generator(self.factor_name(p.factor));
        Ok(s.conjugate_by(&g))
    }

    /// The pair `(s, e_s^k g)` of the free rack on the factor names, where
    /// `p = (s.k | g)`.
    pub fn to_free_rack_pair(&self, p: &FreeProductElement) -> Result<(String, GroupWord), FreeProductError> {
        self.check(p)?;
        if !self.is_free_rack() {
            return Err(FreeProductError::NotFreeRack);
        }
        let name = self.factor_name(p.factor).to_string();
        let head = GroupWord::power(&name, p.base.clone());
        Ok((name, head.multiply(&self.letters(&p.tail))))
    }

    /// Inverse of [`FreeProductRack::to_free_rack_pair`].
    pub fn from_free_rack_pair(&self, s: &str, g: &GroupWord) -> Result<FreeProductElement, FreeProductError> {
        if !self.is_free_rack() {
            return Err(FreeProductError::NotFreeRack);
        }
        let factor = self.factor_index(s)?;
        let tail = self.factorize_named(g.syllables().iter().map(|(n, e)| (n.clone(), AdjValue::scalar(e.clone()))))?;
        Ok(self.reduce_element(factor, Int::ZERO, tail))
    }

    /// Tail as a word over factor names; requires rank-one factors.
    fn letters(&self, w: &SyllableWord) -> GroupWord {
        GroupWord::reduce(w.syllables().iter().map(|s| {
            debug_assert_eq!(s.value.rank(), 1);
            (self.factor_name(s.factor).to_string(), s.value.exponents()[0].clone())
        }))
    }

    /// The tail as a free-group word over the dotted generator names. For
    /// free-abelian factors of rank > 1 the generators of a syllable are
    /// listed in coordinate order.
    pub fn tail_as_group_word(&self, w: &SyllableWord) -> GroupWord {
        GroupWord::reduce(w.syllables().iter().flat_map(|s| self.syllable_tokens(s)))
    }

    fn syllable_tokens(&self, s: &Syllable) -> Vec<(String, Int)> {
        let name = self.factor_name(s.factor);
        s.value
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| (generator_name(name, i), e.clone()))
            .collect()
    }

    /// Σ over factors of the number of orbits of the factor's adjoint action.
    pub fn factor_orbit_sum(&self) -> usize {
        self.factors.iter().map(|f| f.model.orbit_count()).sum()
    }

    /// `rack:a,b`, `quandle:a,b`, `trivial:a=2,b=3`, or `product:a=rack,b=2`
    /// when free-rack and trivial factors are mixed.
    pub fn describe(&self) -> String {
        let names = || self.factors.iter().map(|f| f.name.clone()).collect::<Vec<_>>().join(",");
        let sized = |f: &Factor| match f.model.carrier_size() {
            Some(n) => format!("{}={n}", f.name),
            None => format!("{}=rack", f.name),
        };
        if self.is_free_rack() {
            format!("rack:{}", names())
        } else if self.is_free_quandle() {
            format!("quandle:{}", names())
        } else if self.factors.iter().all(|f| f.model.carrier_size().is_some()) {
            format!("trivial:{}", self.factors.iter().map(sized).collect::<Vec<_>>().join(","))
        } else {
            format!("product:{}", self.factors.iter().map(sized).collect::<Vec<_>>().join(","))
        }
    }

    /// Inverse of [`describe`](Self::describe).
    pub fn from_descriptor(text: &str) -> Result<Self, FreeProductError> {
        let bad = |reason: &str| FreeProductError::Malformed { text: text.to_string(), reason: reason.to_string() };
        let (kind, rest) = text.split_once(':').ok_or_else(|| bad("expected kind:factors"))?;
        let items: Vec<&str> = rest.split(',').map(str::trim).collect();
        match kind.trim() {
            "rack" => Self::free_rack(&items),
            "quandle" => Self::free_quandle(&items),
            "trivial" | "product" => {
                let mut factors = Vec::with_capacity(items.len());
                for item in items {
                    let (name, size) = item.split_once('=').ok_or_else(|| bad("expected name=size"))?;
                    let model = match (size.trim(), kind.trim()) {
                        ("rack", "product") => FactorModel::FreeRack(FreeRackModel),
                        (n, _) => match n.parse::<usize>() {
                            Ok(n) if n >= 1 => FactorModel::Trivial(crate::adjoint::trivial_rack_model(n)),
                            _ => return Err(bad("factor sizes must be positive integers")),
                        },
                    };
                    factors.push(Factor { name: name.trim().to_string(), model });
                }
                Self::new(factors)
            }
            _ => Err(bad("kind must be rack, quandle, trivial or product")),
        }
    }

    pub fn render(&self, p: &FreeProductElement) -> String {
        let tail = self.render_word(&p.tail);
        let base = format!("{}.{}", self.factor_name(p.factor), p.base);
        if tail.is_empty() {
            format!("{base} |")
        } else {
            format!("{base} | {tail}")
        }
    }

    pub fn render_word(&self, w: &SyllableWord) -> String {
        self.tail_as_group_word(w).to_string()
    }

    pub fn display<'a>(&'a self, p: &'a FreeProductElement) -> impl fmt::Display + 'a {
        DisplayElement(self, p)
    }

    /// Parses a tail word over dotted generator names.
    pub fn parse_word(&self, text: &str) -> Result<SyllableWord, FreeProductError> {
        let tokens = word::tokenize(text, None)?;
        let mut raw = Vec::with_capacity(tokens.len());
        for (name, exp) in tokens {
            let (factor_name, element) = name.split_once('.').ok_or_else(|| FreeProductError::Malformed {
                text: text.to_string(),
                reason: format!("generator {name:?} is not of the form factor.element"),
            })?;
            let factor = self.factor_index(factor_name)?;
            let x = self.parse_carrier_element(factor, element)?;
            raw.push(self.generator_power(factor, &x, &exp));
        }
        Ok(SyllableWord::factorize(raw))
    }

    fn parse_carrier_element(&self, factor: usize, text: &str) -> Result<Int, FreeProductError> {
        let out_of_range = || FreeProductError::ElementOutOfRange {
            factor: self.factor_name(factor).to_string(),
            element: text.to_string(),
        };
        let x = num::parse_int(text).ok_or_else(out_of_range)?;
        if self.model(factor).contains(&x) {
            Ok(x)
        } else {
            Err(out_of_range())
        }
    }

    /// Parses `factor.element | word` and reduces it.
    pub fn parse_element(&self, text: &str) -> Result<FreeProductElement, FreeProductError> {
        let malformed = |reason: &str| FreeProductError::Malformed { text: text.to_string(), reason: reason.to_string() };
        let (base, tail) = match text.split_once('|') {
            Some((b, t)) => (b.trim(), t),
            None => (text.trim(), ""),
        };
        let (factor_name, element) = base.split_once('.').ok_or_else(|| malformed("base must be factor.element"))?;
        let factor = self.factor_index(factor_name)?;
        let x = self.parse_carrier_element(factor, element)?;
        let g = self.parse_word(tail)?;
        Ok(self.reduce_element(factor, x, g))
    }

    /// Rank-one description of a factor, used for reports.
    pub fn factor_kind(&self, factor: usize) -> ModelKind {
        self.model(factor).kind()
    }

    /// Number of elements of a factor, or `None` for the infinite free rack.
    pub fn factor_size(&self, factor: usize) -> Option<usize> {
        self.model(factor).carrier_size()
    }

    /// Trivial factor model, if the factor is one.
    pub fn trivial_model(&self, factor: usize) -> Option<TrivialRackModel> {
        match self.model(factor) {
            FactorModel::Trivial(m) => Some(*m),
            FactorModel::FreeRack(_) => None,
        }
    }
}

struct DisplayElement<'a>(&'a FreeProductRack, &'a FreeProductElement);

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}
