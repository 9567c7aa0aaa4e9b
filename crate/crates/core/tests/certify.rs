mod common;

use proptest::prelude::*;
use rackqm::adjoint::AdjointModel;
use rackqm::certify::{boundedness_refutation, growth_along, independence_certificate, iota_family, CertifyError};
use rackqm::free_product::SyllableWord;
use rackqm::io::{certificate_to_json, check_certificate};
use rackqm::num::rational;
use rackqm::quasimorphism::{rolli_qm, LambdaFamily, OddIntFn};
use rackqm::{Execution, Int, Rational};

#[test]
fn identity_for_every_rank_up_to_64() {
    for parent in common::parents() {
        for k in 1..=64 {
            for n in [1, 5] {
                let c = independence_certificate(&parent, k, n, Execution::Parallel).unwrap();
                assert!(c.is_identity(), "{} k={k} n={n}", parent.describe());
                assert_eq!(c.verdict, k);
            }
        }
        let big = independence_certificate(&parent, 64, 1000, Execution::Parallel).unwrap();
        assert!(big.is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn certificates_are_stable_in_n(pi in 0usize..3, k in 1usize..12, n in 1u64..400, m in 1u64..400) {
        let parent = &common::parents()[pi];
        let a = independence_certificate(parent, k, n, Execution::Sequential).unwrap();
        let b = independence_certificate(parent, k, m, Execution::Sequential).unwrap();
        prop_assert_eq!(&a.matrix, &b.matrix);
        for (i, fam) in a.family.iter().enumerate() {
            let qm = rolli_qm(fam, parent).unwrap();
            for w in &a.witnesses {
                let raw = qm.rack_value(&w.element(parent));
                prop_assert_eq!(raw, Rational::from(n) * &a.matrix[i][w.index - 1]);
            }
        }
    }

    #[test]
    fn combinations_grow_along_some_witness(pi in 0usize..3, coeffs in prop::collection::vec(-5i64..=5, 1..8)) {
        prop_assume!(coeffs.iter().any(|&c| c != 0));
        let parent = &common::parents()[pi];
        let sigmas: Vec<OddIntFn> = (1..=coeffs.len()).map(OddIntFn::indicator).collect();
        let names: Vec<String> = parent.factors().iter().map(|f| f.name.clone()).collect();
        let terms: Vec<(Rational, &OddIntFn)> = coeffs.iter().zip(&sigmas).map(|(&c, s)| (rational(c, 3), s)).collect();
        let fam = LambdaFamily::iota_combination(&names, parent.factor_name(0), Int::ZERO, &terms);
        let qm = rolli_qm(&fam, parent).unwrap();
        let cert = independence_certificate(parent, coeffs.len(), 50, Execution::Sequential).unwrap();
        for (w, &c) in cert.witnesses.iter().zip(&coeffs) {
            prop_assert_eq!(qm.rack_value(&w.element(parent)), Rational::from(50) * rational(c, 3));
        }
    }
}

#[test]
fn invalid_arguments() {
    let parent = &common::parents()[0];
    assert_eq!(independence_certificate(parent, 0, 10, Execution::Sequential).unwrap_err(), CertifyError::ZeroRank);
    assert_eq!(independence_certificate(parent, 3, 0, Execution::Sequential).unwrap_err(), CertifyError::ZeroExponent);
}

#[test]
fn json_certificates_recheck_from_scratch() {
    for parent in common::parents() {
        let cert = independence_certificate(&parent, 8, 1000, Execution::Parallel).unwrap();
        let json = certificate_to_json(&cert, &parent);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["rank", "n", "family", "witnesses", "matrix", "verdict"] {
            assert!(doc.get(key).is_some(), "missing {key}");
        }
        assert_eq!(doc["witnesses"].as_array().unwrap().len(), 8);
        assert!(check_certificate(&json).unwrap().is_valid());
        let mut forged = doc.clone();
        forged["matrix"][0][1] = "1/1".into();
        let check = check_certificate(&forged.to_string()).unwrap();
        assert!(!check.matrix_matches);
        assert!(check.verdict_matches);
    }
}

#[test]
fn growth_reports() {
    for parent in common::parents() {
        let names: Vec<String> = parent.factors().iter().map(|f| f.name.clone()).collect();
        let qm = rolli_qm(&LambdaFamily::sign(&names), &parent).unwrap();
        let report = boundedness_refutation(&qm, &parent, &[1, 10, 100]).unwrap();
        assert!(report.is_linear());
        assert_eq!(report.factor_orbit_sum, parent.factors().iter().map(|f| f.model.carrier_size().unwrap_or(1)).sum::<usize>());

        let qm3 = rolli_qm(&iota_family(&parent, OddIntFn::indicator(3)), &parent).unwrap();
        let period = |j: i64| {
            SyllableWord::factorize([
                parent.generator_power(0, &Int::ZERO, &Int::from(j)),
                parent.generator_power(1, &Int::ZERO, &Int::ONE),
            ])
        };
        let on3 = growth_along(&qm3, &parent, 1, &Int::ZERO, &period(3), &[1, 7, 70]);
        assert!(on3.iter().all(|(n, v)| *v == Rational::from(*n)));
        let on2 = growth_along(&qm3, &parent, 1, &Int::ZERO, &period(2), &[1, 7, 70]);
        assert!(on2.iter().all(|(_, v)| v.is_zero()));

        let zero = rolli_qm(&LambdaFamily::zero(&names), &parent).unwrap();
        assert!(boundedness_refutation(&zero, &parent, &[1]).is_err());
    }
}
