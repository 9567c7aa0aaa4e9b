//! Rolli quasimorphisms `φ_λ(g) = Σ λ_{sᵢ}(gᵢ)` over the factorization of
//! `g`, and the induced rack quasimorphisms `φ̂_λ(x, g) = φ_λ(g)` on reduced
//! elements.

use crate::free_product::{FreeProductElement, FreeProductRack, SyllableWord};
use crate::num::{Rational, RationalSum};

use super::lambda::{BoundLambda, LambdaError, LambdaFamily};

/// A λ family bound to a specific free product.
#[derive(Debug, Clone)]
pub struct RolliQm {
    parent: u64,
    lambdas: Vec<BoundLambda>,
    bound: Rational,
}

pub fn rolli_qm(family: &LambdaFamily, parent: &FreeProductRack) -> Result<RolliQm, LambdaError> {
    Ok(RolliQm { parent: parent.id(), lambdas: BoundLambda::bind(family, parent)?, bound: family.bound().clone() })
}

impl RolliQm {
    /// `φ_λ(g)`.
    pub fn value(&self, g: &SyllableWord) -> Rational {
        let mut acc = RationalSum::new();
        for s in g.syllables() {
            self.lambdas[s.factor].accumulate(&s.value, &mut acc);
        }
        acc.total()
    }

    /// `φ̂_λ(p)`, evaluated on the canonical reduced form.
    pub fn rack_value(&self, p: &FreeProductElement) -> Rational {
        assert_eq!(p.parent_id(), self.parent, "element from a different free product");
        self.value(p.tail())
    }

    /// `λ_s(g)` on a single factor.
    pub fn factor_value(&self, factor: usize, g: &crate::adjoint::AdjValue) -> Rational {
        self.lambdas[factor].eval(g)
    }

    /// The declared `‖λ‖∞`.
    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub(crate) fn lambdas(&self) -> &[BoundLambda] {
        &self.lambdas
    }
}

/// `φ_λ(g)` for a family not yet bound to `parent`.
pub fn rolli_value(family: &LambdaFamily, parent: &FreeProductRack, g: &SyllableWord) -> Result<Rational, LambdaError> {
    Ok(rolli_qm(family, parent)?.value(g))
}

/// `φ̂_λ(p)` for a family not yet bound to `parent`.
pub fn rack_qm(family: &LambdaFamily, parent: &FreeProductRack, p: &FreeProductElement) -> Result<Rational, LambdaError> {
    Ok(rolli_qm(family, parent)?.rack_value(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Int;

    #[test]
    fn sign_family_examples() {
        let parent = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        let qm = rolli_qm(&LambdaFamily::sign(&["a", "b"]), &parent).unwrap();
        let g = parent.parse_word("a.0^2 b.0^-3 a.0").unwrap();
        assert_eq!(qm.value(&g), Rational::ONE);
        assert_eq!(qm.value(&SyllableWord::identity()), Rational::ZERO);
        assert_eq!(qm.rack_value(&parent.parse_element("b.0 | a.0^2").unwrap()), Rational::ONE);
        assert_eq!(qm.rack_value(&parent.parse_element("a.4 |").unwrap()), Rational::ZERO);
        let zero = rolli_qm(&LambdaFamily::zero(&["a", "b"]), &parent).unwrap();
        assert_eq!(zero.value(&g), Rational::ZERO);
    }

    #[test]
    fn witness_identity_small_n() {
        let parent = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        let qm = rolli_qm(&LambdaFamily::sign(&["a", "b"]), &parent).unwrap();
        let period = parent.parse_word("a.0 b.0").unwrap();
        for n in 1..20u64 {
            let p = parent.reduce_element(1, Int::ZERO, period.pow(n));
            assert_eq!(qm.rack_value(&p), Rational::from(Int::from(2 * n)));
        }
    }
}
