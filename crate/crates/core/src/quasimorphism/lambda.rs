//! Uniformly bounded families of odd bounded functions on the factor
//! adjoint groups.
//!
//! Oddness holds by construction: every built-in kind is defined through
//! its values on one representative of each pair `{g, g⁻¹}`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::adjoint::{AdjValue, AdjointModel};
use crate::free_product::FreeProductRack;
use crate::num::{self, Int, Rational, RationalSum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("no λ given for factor {0:?}")]
    MissingFactor(String),
    #[error("λ given for factor {0:?}, which is not in the free product")]
    UnknownFactor(String),
    #[error("λ given twice for factor {0:?}")]
    DuplicateFactor(String),
    #[error("declared bound {declared} is below sup |λ| = {actual}")]
    BoundTooSmall { declared: String, actual: String },
    #[error("declared bound must be nonnegative")]
    NegativeBound,
    #[error("table entry for the identity of factor {0:?}; odd functions vanish there")]
    IdentityEntry(String),
    #[error("table for factor {factor:?} lists {element} twice (possibly as an inverse)")]
    DuplicateEntry { factor: String, element: String },
    #[error("table entry for factor {factor:?} has rank {found}, expected {expected}")]
    RankMismatch { factor: String, found: usize, expected: usize },
    #[error("{element} is not an element of factor {factor:?}")]
    BadElement { factor: String, element: String },
}

/// Behaviour of an odd function on integers beyond its explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddTail {
    Zero,
    /// `σ(n) = c` for every `n` past the table, and `−c` on the negative side.
    Constant(Rational),
}

/// An odd function `σ : Z → Q` given by `σ(1), …, σ(m)` and a tail rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddIntFn {
    values: Vec<Rational>,
    tail: OddTail,
}

impl OddIntFn {
    pub fn new(values: Vec<Rational>, tail: OddTail) -> Self {
        Self { values, tail }
    }

    /// `σ(±k) = ±1`, zero elsewhere.
    pub fn indicator(k: usize) -> Self {
        assert!(k >= 1, "indicator support must avoid 0");
        let mut values = vec![Rational::ZERO; k];
        values[k - 1] = Rational::ONE;
        Self { values, tail: OddTail::Zero }
    }

    /// `σ(n) = sign(n)`.
    pub fn sign() -> Self {
        Self { values: Vec::new(), tail: OddTail::Constant(Rational::ONE) }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn tail(&self) -> &OddTail {
        &self.tail
    }

    /// Largest `n` with an explicit table value.
    pub fn cutoff(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, n: &Int) -> Rational {
        let positive = num::abs_int(n);
        let v = match usize::try_from(&positive) {
            Ok(0) => return Rational::ZERO,
            Ok(k) if k <= self.values.len() => self.values[k - 1].clone(),
            _ => match &self.tail {
                OddTail::Zero => Rational::ZERO,
                OddTail::Constant(c) => c.clone(),
            },
        };
        if num::is_negative(n) {
            -v
        } else {
            v
        }
    }

    pub fn sup(&self) -> Rational {
        let tail = match &self.tail {
            OddTail::Zero => Rational::ZERO,
            OddTail::Constant(c) => num::abs(c),
        };
        self.values.iter().map(num::abs).fold(tail, |a, b| if b > a { b } else { a })
    }

    pub fn is_zero(&self) -> bool {
        self.sup().is_zero()
    }
}

/// λ on one factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorLambda {
    Zero,
    /// Sign of the total exponent sum.
    Sign,
    /// `λ(e_x^n) = σ(n)` for the distinguished element `x`, zero on every
    /// value that is not a power of `e_x`.
    Iota { element: Int, sigma: OddIntFn },
    /// Explicit values on finitely many elements, zero elsewhere. Entries
    /// are normalized to the representative of `{g, g⁻¹}` whose first
    /// nonzero coordinate is positive.
    Table { entries: BTreeMap<AdjValue, Rational> },
}

impl FactorLambda {
    /// Builds a table from arbitrary `(g, λ(g))` pairs, extending oddly.
    pub fn table(factor: &str, rank: usize, pairs: Vec<(AdjValue, Rational)>) -> Result<Self, LambdaError> {
        let mut entries = BTreeMap::new();
        for (g, v) in pairs {
            if g.rank() != rank {
                return Err(LambdaError::RankMismatch { factor: factor.into(), found: g.rank(), expected: rank });
            }
            if g.is_identity() {
                return Err(LambdaError::IdentityEntry(factor.into()));
            }
            let (key, val) = if g.is_positive_representative() { (g, v) } else { (g.neg(), -v) };
            if entries.contains_key(&key) {
                return Err(LambdaError::DuplicateEntry { factor: factor.into(), element: format!("{:?}", key.exponents()) });
            }
            entries.insert(key, val);
        }
        Ok(FactorLambda::Table { entries })
    }

    pub fn sup(&self) -> Rational {
        match self {
            FactorLambda::Zero => Rational::ZERO,
            FactorLambda::Sign => Rational::ONE,
            FactorLambda::Iota { sigma, .. } => sigma.sup(),
            FactorLambda::Table { entries } => {
                entries.values().map(num::abs).fold(Rational::ZERO, |a, b| if b > a { b } else { a })
            }
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FactorLambda::Zero => "zero",
            FactorLambda::Sign => "sign",
            FactorLambda::Iota { .. } => "iota",
            FactorLambda::Table { .. } => "table",
        }
    }
}

/// Per-factor λ keyed by factor name, with a declared uniform bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaFamily {
    entries: Vec<(String, FactorLambda)>,
    bound: Rational,
}

impl LambdaFamily {
    /// Checks that the declared bound dominates every factor's sup.
    pub fn new(entries: Vec<(String, FactorLambda)>, bound: Rational) -> Result<Self, LambdaError> {
        if bound < Rational::ZERO {
            return Err(LambdaError::NegativeBound);
        }
        for (i, (name, l)) in entries.iter().enumerate() {
            if entries[..i].iter().any(|(n, _)| n == name) {
                return Err(LambdaError::DuplicateFactor(name.clone()));
            }
            let actual = l.sup();
            if actual > bound {
                return Err(LambdaError::BoundTooSmall {
                    declared: num::format_rational(&bound),
                    actual: num::format_rational(&actual),
                });
            }
        }
        Ok(Self { entries, bound })
    }

    fn uniform<S: AsRef<str>>(names: &[S], l: FactorLambda, bound: Rational) -> Self {
        let entries = names.iter().map(|n| (n.as_ref().to_string(), l.clone())).collect();
        Self { entries, bound }
    }

    /// Sign of the exponent sum on every factor; ‖λ‖∞ = 1.
    pub fn sign<S: AsRef<str>>(names: &[S]) -> Self {
        Self::uniform(names, FactorLambda::Sign, Rational::ONE)
    }

    pub fn zero<S: AsRef<str>>(names: &[S]) -> Self {
        Self::uniform(names, FactorLambda::Zero, Rational::ZERO)
    }

    /// `ι(σ)`: `σ` on powers of `e_{x₀}` in factor `s₀`, zero elsewhere.
    pub fn iota<S: AsRef<str>>(names: &[S], s0: &str, x0: Int, sigma: OddIntFn) -> Self {
        let bound = sigma.sup();
        let entries = names
            .iter()
            .map(|n| {
                let n = n.as_ref().to_string();
                let l = if n == s0 {
                    FactorLambda::Iota { element: x0.clone(), sigma: sigma.clone() }
                } else {
                    FactorLambda::Zero
                };
                (n, l)
            })
            .collect();
        Self { entries, bound }
    }

    pub fn for_parent(parent: &FreeProductRack, kind: FamilyKind) -> Self {
        let names: Vec<&str> = parent.factors().iter().map(|f| f.name.as_str()).collect();
        match kind {
            FamilyKind::Zero => Self::zero(&names),
            FamilyKind::Sign => Self::sign(&names),
        }
    }

    pub fn entries(&self) -> &[(String, FactorLambda)] {
        &self.entries
    }

    /// The declared `‖λ‖∞`.
    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn get(&self, factor: &str) -> Option<&FactorLambda> {
        self.entries.iter().find(|(n, _)| n == factor).map(|(_, l)| l)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|(_, l)| l.sup().is_zero())
    }

    /// `Σ cᵢ λ⁽ⁱ⁾` for families whose factors all carry `Iota` with the same
    /// distinguished element, or `Zero`; used by certificates.
    pub fn iota_combination(names: &[String], s0: &str, x0: Int, coeffs: &[(Rational, &OddIntFn)]) -> Self {
        let len = coeffs.iter().map(|(_, s)| s.cutoff()).max().unwrap_or(0);
        let values = (1..=len)
            .map(|k| {
                let mut acc = RationalSum::new();
                for (c, s) in coeffs {
                    acc.add(&(c * s.eval(&Int::from(k))));
                }
                acc.total()
            })
            .collect();
        Self::iota(names, s0, x0, OddIntFn::new(values, OddTail::Zero))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Zero,
    Sign,
}

/// A family resolved against a free product: one λ per factor index, with
/// `Iota` elements turned into the coordinate of `e_{x₀}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum BoundLambda {
    Zero,
    Sign,
    Iota { coordinate: usize, sigma: OddIntFn },
    Table { entries: BTreeMap<AdjValue, Rational> },
}

impl BoundLambda {
    pub(crate) fn bind(family: &LambdaFamily, parent: &FreeProductRack) -> Result<Vec<BoundLambda>, LambdaError> {
        for (name, _) in family.entries() {
            if parent.factor_index(name).is_err() {
                return Err(LambdaError::UnknownFactor(name.clone()));
            }
        }
        parent
            .factors()
            .iter()
            .map(|f| {
                let l = family.get(&f.name).ok_or_else(|| LambdaError::MissingFactor(f.name.clone()))?;
                Ok(match l {
                    FactorLambda::Zero => BoundLambda::Zero,
                    FactorLambda::Sign => BoundLambda::Sign,
                    FactorLambda::Iota { element, sigma } => {
                        if !f.model.contains(element) {
                            return Err(LambdaError::BadElement { factor: f.name.clone(), element: element.to_string() });
                        }
                        let e = f.model.embed(element);
                        let (coordinate, _) = e.as_single_power().expect("generators are unit vectors");
                        BoundLambda::Iota { coordinate, sigma: sigma.clone() }
                    }
                    FactorLambda::Table { entries } => {
                        if let Some(k) = entries.keys().find(|k| k.rank() != f.model.rank()) {
                            return Err(LambdaError::RankMismatch {
                                factor: f.name.clone(),
                                found: k.rank(),
                                expected: f.model.rank(),
                            });
                        }
                        BoundLambda::Table { entries: entries.clone() }
                    }
                })
            })
            .collect()
    }

    /// Adds `λ(g)` to `acc`.
    #[inline]
    pub(crate) fn accumulate(&self, g: &AdjValue, acc: &mut RationalSum) {
        match self {
            BoundLambda::Zero => {}
            BoundLambda::Sign => {
                let s = if g.rank() == 1 { num::signum(&g.exponents()[0]) } else { num::signum(&g.total()) };
                acc.add_small(i64::from(s));
            }
            BoundLambda::Iota { coordinate, sigma } => {
                if let Some((i, n)) = g.as_single_power() {
                    if i == *coordinate {
                        acc.add(&sigma.eval(n));
                    }
                }
            }
            BoundLambda::Table { entries } => {
                if g.is_positive_representative() {
                    if let Some(v) = entries.get(g) {
                        acc.add(v);
                    }
                } else if let Some(v) = entries.get(&g.neg()) {
                    acc.sub(v);
                }
            }
        }
    }

    pub(crate) fn eval(&self, g: &AdjValue) -> Rational {
        let mut acc = RationalSum::new();
        self.accumulate(g, &mut acc);
        acc.total()
    }

    /// Values `g` with `λ(g)` possibly nonzero, in a fixed probing order.
    pub(crate) fn probes(&self, rank: usize) -> Vec<AdjValue> {
        match self {
            BoundLambda::Zero => Vec::new(),
            BoundLambda::Sign => vec![AdjValue::unit(rank, 0, Int::ONE)],
            BoundLambda::Iota { coordinate, sigma } => (1..=sigma.cutoff() + 1)
                .map(|m| AdjValue::unit(rank, *coordinate, Int::from(m)))
                .collect(),
            BoundLambda::Table { entries } => entries.keys().cloned().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rational;

    #[test]
    fn odd_int_functions() {
        let s = OddIntFn::indicator(3);
        assert_eq!(s.eval(&Int::from(3)), Rational::ONE);
        assert_eq!(s.eval(&Int::from(-3)), -Rational::ONE);
        assert_eq!(s.eval(&Int::from(2)), Rational::ZERO);
        assert_eq!(s.eval(&Int::from(4)), Rational::ZERO);
        assert_eq!(s.eval(&Int::ZERO), Rational::ZERO);
        let sg = OddIntFn::sign();
        assert_eq!(sg.eval(&"-100000000000000000000000".parse().unwrap()), -Rational::ONE);
        assert_eq!(sg.sup(), Rational::ONE);
        let t = OddIntFn::new(vec![rational(1, 2), rational(-3, 4)], OddTail::Constant(rational(1, 3)));
        assert_eq!(t.sup(), rational(3, 4));
        assert_eq!(t.eval(&Int::from(-2)), rational(3, 4));
        assert_eq!(t.eval(&Int::from(9)), rational(1, 3));
        assert!(OddIntFn::new(vec![Rational::ZERO], OddTail::Zero).is_zero());
        assert!(!t.is_zero());
    }

    #[test]
    fn tables_are_odd_by_construction() {
        let g = AdjValue::from_exponents(vec![Int::from(-1), Int::from(2)]);
        let l = FactorLambda::table("a", 2, vec![(g.clone(), rational(1, 2))]).unwrap();
        let FactorLambda::Table { entries } = &l else { unreachable!() };
        assert_eq!(entries.get(&g.neg()), Some(&rational(-1, 2)));
        let dup = FactorLambda::table("a", 2, vec![(g.clone(), Rational::ONE), (g.neg(), Rational::ONE)]);
        assert!(matches!(dup, Err(LambdaError::DuplicateEntry { .. })));
        assert!(matches!(
            FactorLambda::table("a", 2, vec![(AdjValue::zero(2), Rational::ONE)]),
            Err(LambdaError::IdentityEntry(_))
        ));
    }

    #[test]
    fn declared_bounds_are_checked() {
        let e = LambdaFamily::new(vec![("a".into(), FactorLambda::Sign)], rational(1, 2));
        assert!(matches!(e, Err(LambdaError::BoundTooSmall { .. })));
        assert!(LambdaFamily::new(vec![("a".into(), FactorLambda::Sign)], rational(2, 1)).is_ok());
        assert!(matches!(
            LambdaFamily::new(vec![("a".into(), FactorLambda::Zero), ("a".into(), FactorLambda::Zero)], Rational::ONE),
            Err(LambdaError::DuplicateFactor(_))
        ));
    }

    #[test]
    fn binding_checks_factors() {
        let parent = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        let only_a = LambdaFamily::sign(&["a"]);
        assert_eq!(BoundLambda::bind(&only_a, &parent), Err(LambdaError::MissingFactor("b".into())));
        let extra = LambdaFamily::sign(&["a", "b", "c"]);
        assert_eq!(BoundLambda::bind(&extra, &parent), Err(LambdaError::UnknownFactor("c".into())));
        let t = FreeProductRack::trivial_product(&[("a", 2), ("b", 3)]).unwrap();
        let bad = LambdaFamily::iota(&["a", "b"], "a", Int::from(5), OddIntFn::indicator(1));
        assert!(matches!(BoundLambda::bind(&bad, &t), Err(LambdaError::BadElement { .. })));
    }

    #[test]
    fn combinations_of_indicators() {
        let names = vec!["a".to_string(), "b".to_string()];
        let s1 = OddIntFn::indicator(1);
        let s3 = OddIntFn::indicator(3);
        let fam = LambdaFamily::iota_combination(&names, "a", Int::ZERO, &[(rational(2, 1), &s1), (rational(-1, 2), &s3)]);
        let FactorLambda::Iota { sigma, .. } = fam.get("a").unwrap() else { unreachable!() };
        assert_eq!(sigma.eval(&Int::from(1)), rational(2, 1));
        assert_eq!(sigma.eval(&Int::from(-3)), rational(1, 2));
        assert_eq!(fam.bound(), &rational(2, 1));
    }
}
