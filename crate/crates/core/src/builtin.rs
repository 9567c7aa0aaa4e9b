//! Named racks, groups and λ families that tests, benches and the command
//! line share.

use crate::adjoint::{AdjValue, AdjointModel};
use crate::free_product::FreeProductRack;
use crate::num::rational;
use crate::quasimorphism::{value_set, FactorLambda, LambdaFamily, OddIntFn, OddTail};
use crate::rack::{FiniteGroup, FiniteRack};
use crate::{Int, Rational};

/// Trivial racks T1..T6, dihedral quandles R3..R6 and the conjugation
/// quandles of S3 and Z2..Z6.
pub fn racks() -> Vec<FiniteRack> {
    let mut out: Vec<FiniteRack> = (1..=6).map(FiniteRack::trivial).collect();
    out.extend((3..=6).map(FiniteRack::dihedral));
    out.push(FiniteRack::conjugation(&FiniteGroup::symmetric(3)));
    out.extend((2..=6).map(|n| FiniteRack::conjugation(&FiniteGroup::cyclic(n))));
    out
}

pub fn rack(name: &str) -> Option<FiniteRack> {
    racks().into_iter().find(|r| r.name() == name)
}

pub fn groups() -> Vec<FiniteGroup> {
    let mut out = vec![FiniteGroup::trivial()];
    out.extend((2..=8).map(FiniteGroup::cyclic));
    out.extend((3..=4).map(FiniteGroup::symmetric));
    out
}

pub const LAMBDA_NAMES: [&str; 4] = ["sign", "iota2", "iota-tail", "table"];

/// The built-in family called `name`, laid out over the factors of `parent`.
pub fn lambda(name: &str, parent: &FreeProductRack) -> Option<LambdaFamily> {
    let names: Vec<String> = parent.factors().iter().map(|f| f.name.clone()).collect();
    let s0 = parent.factor_name(0);
    Some(match name {
        "sign" => LambdaFamily::sign(&names),
        "iota2" => LambdaFamily::iota(&names, s0, Int::ZERO, OddIntFn::indicator(2)),
        "iota-tail" => LambdaFamily::iota(
            &names,
            s0,
            Int::ZERO,
            OddIntFn::new(vec![rational(1, 2), rational(-1, 3)], OddTail::Constant(rational(1, 5))),
        ),
        "table" => table_family(parent, &[4, -3, 1, 0, 2, -4]),
        _ => return None,
    })
}

pub fn lambdas(parent: &FreeProductRack) -> Vec<(&'static str, LambdaFamily)> {
    LAMBDA_NAMES.iter().map(|&n| (n, lambda(n, parent).expect("listed names resolve"))).collect()
}

/// Odd tables with values `v/4`, cycling through `values`, on the exponent
/// vectors of each factor with entries in `[−2, 2]`.
fn table_family(parent: &FreeProductRack, values: &[i64]) -> LambdaFamily {
    let mut k = 0;
    let entries = (0..parent.factor_count())
        .map(|f| {
            let model = parent.model(f);
            let pairs: Vec<(AdjValue, Rational)> = value_set(model, 2)
                .into_iter()
                .filter(|g| g.is_positive_representative())
                .map(|g| {
                    k += 1;
                    (g, rational(values[k % values.len()], 4))
                })
                .collect();
            let name = parent.factor_name(f);
            (name.to_string(), FactorLambda::table(name, model.rank(), pairs).expect("positive representatives are distinct"))
        })
        .collect();
    LambdaFamily::new(entries, Rational::ONE).expect("table values lie in [-1, 1]")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasimorphism::rolli_qm;

    #[test]
    fn catalog_is_valid() {
        assert_eq!(racks().len(), 16);
        assert!(racks().iter().all(|r| r.size() <= 6));
        assert_eq!(rack("R5").unwrap().size(), 5);
        assert!(rack("R7").is_none());
        for parent in [
            FreeProductRack::free_rack(&["a", "b"]).unwrap(),
            FreeProductRack::free_quandle(&["a", "b"]).unwrap(),
            FreeProductRack::trivial_product(&[("a", 2), ("b", 3)]).unwrap(),
        ] {
            for (name, l) in lambdas(&parent) {
                assert!(rolli_qm(&l, &parent).is_ok(), "{name}");
            }
        }
        assert!(lambda("nope", &FreeProductRack::free_rack(&["a", "b"]).unwrap()).is_none());
    }
}
