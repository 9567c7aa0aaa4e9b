//! Homogeneous quasimorphisms on free groups and their rack counterparts.
//!
//! For a quasimorphism `φ` with defect at most `D`, the homogenization
//! `φ̄(g) = lim φ(gᴺ)/N` satisfies `|φ̄(g) − φ(gᴺ)/N| ≤ D/N`. An estimate at
//! exponent `N` is therefore the interval with center `φ(gᴺ)/N` and radius
//! `D/N`; it is only as trustworthy as the supplied `D`, which is never
//! guessed here. Estimates at `N` and `2N` always intersect for a valid `D`.

use thiserror::Error;

use crate::adjoint::{generator_name, AdjointModel};
use crate::exec;
use crate::free_product::{FreeProductElement, FreeProductRack};
use crate::num::{self, Int, Rational};
use crate::sample::{self, SamplerConfig};
use crate::word::GroupWord;

use super::brooks::BrooksQm;

/// A quasimorphism on a free group, evaluated on reduced words.
pub trait WordQuasimorphism: Sync {
    fn value(&self, g: &GroupWord) -> Rational;

    /// True when `φ(gⁿ) = n φ(g)` holds exactly, so no estimate is needed.
    fn is_homogeneous(&self) -> bool {
        false
    }
}

impl WordQuasimorphism for BrooksQm {
    fn value(&self, g: &GroupWord) -> Rational {
        Rational::from(self.count(g))
    }
}

/// The homomorphism `g ↦ Σ` exponents; defect 0 and homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ExponentSum;

impl WordQuasimorphism for ExponentSum {
    fn value(&self, g: &GroupWord) -> Rational {
        Rational::from(g.syllables().iter().fold(Int::ZERO, |acc, (_, e)| acc + e))
    }

    fn is_homogeneous(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogenizeError {
    #[error("defect bound {bound} is below the observed defect {observed}")]
    BoundBelowObserved { bound: String, observed: String },
    #[error("defect bound must be nonnegative")]
    NegativeBound,
    #[error("exponent N must be at least 1")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousEstimate {
    pub center: Rational,
    pub radius: Rational,
    pub exponent: u64,
    pub defect_bound: Rational,
}

impl HomogeneousEstimate {
    pub fn lower(&self) -> Rational {
        &self.center - &self.radius
    }

    pub fn upper(&self) -> Rational {
        &self.center + &self.radius
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lower() <= *v && *v <= self.upper()
    }

    pub fn intersects(&self, other: &HomogeneousEstimate) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// `max |v|` over the interval.
    pub fn magnitude_bound(&self) -> Rational {
        num::abs(&self.center) + &self.radius
    }
}

/// Observed `max |φ(g) + φ(h) − φ(gh)|` over seeded word pairs over `letters`.
pub fn word_defect_estimate(qm: &dyn WordQuasimorphism, letters: &[String], cfg: &SamplerConfig) -> (Rational, Option<(GroupWord, GroupWord)>) {
    let best = exec::map_reduce(
        cfg.execution,
        cfg.samples,
        |i| {
            let mut rng = cfg.rng(i);
            let (g, h) = sample::correlated_word_pair(&mut rng, letters, cfg.max_syllables, cfg.max_exponent);
            let d = num::abs(&(qm.value(&g) + qm.value(&h) - qm.value(&g.multiply(&h))));
            Some((d, i, (g, h)))
        },
        None,
        exec::max_by_key_index,
    );
    match best {
        Some((d, _, w)) => (d, Some(w)),
        None => (Rational::ZERO, None),
    }
}

/// `φ(gᴺ)/N ± D/N`.
pub fn homogenize(qm: &dyn WordQuasimorphism, g: &GroupWord, defect_bound: &Rational, n: u64) -> Result<HomogeneousEstimate, HomogenizeError> {
    if *defect_bound < Rational::ZERO {
        return Err(HomogenizeError::NegativeBound);
    }
    if n == 0 {
        return Err(HomogenizeError::ZeroExponent);
    }
    let big_n = Rational::from(n);
    let center = qm.value(&g.pow(n as i64)) / &big_n;
    Ok(HomogeneousEstimate { center, radius: defect_bound / &big_n, exponent: n, defect_bound: defect_bound.clone() })
}

/// A quasimorphism paired with a defect bound that survived a consistency
/// check against sampled pairs.
pub struct Homogenizer<'a> {
    qm: &'a dyn WordQuasimorphism,
    defect_bound: Rational,
    observed: Rational,
}

impl<'a> Homogenizer<'a> {
    /// Rejects `defect_bound` if sampling over `letters` already exhibits a
    /// larger defect.
    pub fn checked(qm: &'a dyn WordQuasimorphism, defect_bound: Rational, letters: &[String], cfg: &SamplerConfig) -> Result<Self, HomogenizeError> {
        if defect_bound < Rational::ZERO {
            return Err(HomogenizeError::NegativeBound);
        }
        let (observed, _) = word_defect_estimate(qm, letters, cfg);
        if observed > defect_bound {
            return Err(HomogenizeError::BoundBelowObserved {
                bound: num::format_rational(&defect_bound),
                observed: num::format_rational(&observed),
            });
        }
        Ok(Self { qm, defect_bound, observed })
    }

    pub fn observed_defect(&self) -> &Rational {
        &self.observed
    }

    pub fn defect_bound(&self) -> &Rational {
        &self.defect_bound
    }

    pub fn estimate(&self, g: &GroupWord, n: u64) -> HomogeneousEstimate {
        homogenize(self.qm, g, &self.defect_bound, n).expect("bound and exponent were validated")
    }

    /// Estimates at `N = 1, 2, 4, …, 2^max_log2`, stopping early once the
    /// radius drops below `tolerance`.
    pub fn doubling(&self, g: &GroupWord, tolerance: &Rational, max_log2: u32) -> Vec<HomogeneousEstimate> {
        let mut out = Vec::new();
        for k in 0..=max_log2 {
            let e = self.estimate(g, 1u64 << k);
            let done = e.radius < *tolerance;
            out.push(e);
            if done {
                break;
            }
        }
        out
    }

    /// `M ≥ max_y |φ̄(e_y)|` over the factor generators of `parent`, taken
    /// from the upper ends of their intervals at exponent `n`.
    pub fn generator_bound(&self, parent: &FreeProductRack, n: u64) -> Rational {
        generators(parent)
            .iter()
            .map(|y| self.estimate(&GroupWord::generator(y), n).magnitude_bound())
            .fold(Rational::ZERO, |a, b| if b > a { b } else { a })
    }

    /// Bound `D + M` on `|φ̂(p) − φ̂(p ◁ q)|` for the induced rack quasimorphism.
    pub fn rack_defect_bound(&self, parent: &FreeProductRack, n: u64) -> Rational {
        &self.defect_bound + self.generator_bound(parent, n)
    }
}

fn generators(parent: &FreeProductRack) -> Vec<String> {
    (0..parent.factor_count())
        .flat_map(|f| (0..parent.model(f).rank()).map(move |i| generator_name(parent.factor_name(f), i)))
        .collect()
}

/// `φ̂(x, g) = φ(g)` with the tail read as a word over dotted generators.
pub fn homogeneous_rack_qm(qm: &dyn WordQuasimorphism, parent: &FreeProductRack, p: &FreeProductElement) -> Rational {
    qm.value(&parent.tail_as_group_word(p.tail()))
}

/// Interval estimate of `φ̄` on the tail of `p`.
pub fn homogeneous_rack_estimate(h: &Homogenizer<'_>, parent: &FreeProductRack, p: &FreeProductElement, n: u64) -> HomogeneousEstimate {
    h.estimate(&parent.tail_as_group_word(p.tail()), n)
}
