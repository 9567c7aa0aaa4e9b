//! Linear-growth witnesses for nonzero λ.
//!
//! If `λ_{s₀}(g₀) ≠ 0` and `x` lies in a factor `t ≠ s₀`, then
//! `(x, (g₀ e_x^{±1})ⁿ)` is reduced and `φ̂_λ` takes the value
//! `n·(λ_{s₀}(g₀) ± λ_t(e_x))` on it; at least one sign gives a nonzero slope.

use thiserror::Error;

use crate::adjoint::{AdjointModel, AdjValue};
use crate::free_product::{FreeProductElement, FreeProductRack, Syllable, SyllableWord};
use crate::num::{self, Int, Rational};
use crate::Sign;

use super::rolli::RolliQm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("λ vanishes on every probe; cannot certify unboundedness")]
    AllProbesZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnboundednessWitness {
    /// `g₀` in factor `s₀`.
    pub g0: Syllable,
    /// Factor `t` and element `x` of the base.
    pub base_factor: usize,
    pub base: Int,
    pub sign: Sign,
    /// `λ_{s₀}(g₀) + λ_t(e_x^{±1})`; `φ̂(witness(n)) = n · slope`.
    pub slope: Rational,
}

impl UnboundednessWitness {
    /// The period `g₀ e_x^{±1}`.
    pub fn period(&self, parent: &FreeProductRack) -> SyllableWord {
        let ex = parent.generator_power(self.base_factor, &self.base, &Int::from(self.sign.as_i64()));
        SyllableWord::factorize([self.g0.clone(), ex])
    }

    /// `(x, (g₀ e_x^{±1})ⁿ)`.
    pub fn element(&self, parent: &FreeProductRack, n: u64) -> FreeProductElement {
        parent.reduce_element(self.base_factor, self.base.clone(), self.period(parent).pow(n))
    }

    pub fn growth_rate(&self) -> Rational {
        num::abs(&self.slope)
    }
}

/// Finds `g₀` by probing each factor in order, then takes `x` = element 0 of
/// the first other factor and the sign of `e_x` with the larger `|slope|`.
pub fn unboundedness_witness(qm: &RolliQm, parent: &FreeProductRack) -> Result<UnboundednessWitness, WitnessError> {
    assert_eq!(qm.parent_id(), parent.id(), "quasimorphism bound to a different free product");
    for (s0, lambda) in qm.lambdas().iter().enumerate() {
        let rank = parent.model(s0).rank();
        let Some((g0, a)) = lambda
            .probes(rank)
            .into_iter()
            .map(|g| {
                let v = lambda.eval(&g);
                (g, v)
            })
            .find(|(_, v)| !v.is_zero())
        else {
            continue;
        };
        let t = if s0 == 0 { 1 } else { 0 };
        let x = Int::ZERO;
        let ex: AdjValue = parent.model(t).embed(&x);
        let c = qm.factor_value(t, &ex);
        let plus = &a + &c;
        let minus = &a - &c;
        let (sign, slope) = if num::abs(&plus) >= num::abs(&minus) { (Sign::Plus, plus) } else { (Sign::Minus, minus) };
        return Ok(UnboundednessWitness { g0: Syllable { factor: s0, value: g0 }, base_factor: t, base: x, sign, slope });
    }
    Err(WitnessError::AllProbesZero)
}
