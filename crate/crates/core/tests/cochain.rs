mod common;

use proptest::prelude::*;
use rackqm::cochain::{coboundary, cohomology_dims, decode, encode, is_degenerate, Cochain, CochainError, DEFAULT_CAP};
use rackqm::num::rational;
use rackqm::rack::FiniteRack;
use rackqm::{Execution, Rational};

/// Dense `δⁿ` straight from the definition, with 1-based face indices
/// `i = 2..=n+1`.
fn dense_oracle(rack: &FiniteRack, n: usize) -> Vec<Vec<i64>> {
    let size = rack.size();
    let rows = size.pow(n as u32 + 1);
    let mut m = vec![vec![0i64; size.pow(n as u32)]; rows];
    if n == 0 {
        return m;
    }
    for (r, row) in m.iter_mut().enumerate() {
        let x = decode(r, size, n + 1);
        for i in 2..=n + 1 {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let drop: Vec<usize> = (1..=n + 1).filter(|&j| j != i).map(|j| x[j - 1]).collect();
            let acted: Vec<usize> = (1..i).map(|j| rack.op(x[j - 1], x[i - 1])).chain(x[i..].iter().copied()).collect();
            row[encode(&drop, size)] += sign;
            row[encode(&acted, size)] -= sign;
        }
    }
    m
}

#[test]
fn coboundaries_match_the_definition() {
    let mut racks = common::builtin_racks();
    racks.push(common::shift_rack(4));
    for r in &racks {
        for n in 0..=2 {
            let d = coboundary(r, n, Execution::Parallel, DEFAULT_CAP).unwrap();
            assert_eq!(d.to_dense(), dense_oracle(r, n as usize), "{} degree {n}", r.name());
        }
    }
}

#[test]
fn coboundary_squares_to_zero() {
    let mut racks = common::builtin_racks();
    racks.push(common::shift_rack(3));
    for r in &racks {
        for n in -1..=2 {
            let d0 = coboundary(r, n, Execution::Parallel, DEFAULT_CAP).unwrap();
            let d1 = coboundary(r, n + 1, Execution::Parallel, DEFAULT_CAP).unwrap();
            assert!(d1.compose(&d0).iter().all(Vec::is_empty), "{} degree {n}", r.name());
        }
        assert!(coboundary(r, 0, Execution::Sequential, DEFAULT_CAP).unwrap().is_zero());
        assert!(coboundary(r, -1, Execution::Sequential, DEFAULT_CAP).unwrap().is_zero());
    }
}

#[test]
fn low_degree_cohomology() {
    let mut racks = common::builtin_racks();
    racks.extend((2..=5).map(common::shift_rack));
    for r in &racks {
        let dims = cohomology_dims(r, 2, false, Execution::Parallel, DEFAULT_CAP).unwrap();
        let c = r.components().count;
        assert_eq!(dims[0], 1, "{}", r.name());
        assert_eq!(dims[1], c, "{}", r.name());
        // Rational rack cohomology of a finite rack with c orbits is Q^{cⁿ}.
        assert_eq!(dims[2], c * c, "{}", r.name());
    }
    let t3 = FiniteRack::trivial(3);
    assert_eq!(cohomology_dims(&t3, 3, false, Execution::Parallel, DEFAULT_CAP).unwrap(), vec![1, 3, 9, 27]);
}

#[test]
fn quandle_mode() {
    for r in common::builtin_racks().into_iter().filter(FiniteRack::is_quandle) {
        let size = r.size();
        for n in 0..=3 {
            let d = coboundary(&r, n, Execution::Parallel, DEFAULT_CAP).unwrap();
            assert!(d.preserves_degenerate_vanishing(size), "{} degree {n}", r.name());
        }
        let q = cohomology_dims(&r, 2, true, Execution::Parallel, DEFAULT_CAP).unwrap();
        let full = cohomology_dims(&r, 2, false, Execution::Parallel, DEFAULT_CAP).unwrap();
        assert_eq!(q[1], full[1]);
        assert!(q[2] <= full[2]);
    }
    // Trivial quandle T_c: every nondegenerate cochain is a cocycle, c(c − 1)^{n−1}.
    for c in 1..=4 {
        let dims = cohomology_dims(&FiniteRack::trivial(c), 3, true, Execution::Parallel, DEFAULT_CAP).unwrap();
        assert_eq!(dims[1..], [c, c * (c - 1), c * (c - 1) * (c - 1)]);
    }
    assert!(matches!(
        cohomology_dims(&common::shift_rack(3), 2, true, Execution::Parallel, DEFAULT_CAP),
        Err(CochainError::NotAQuandle(_))
    ));
}

#[test]
fn tuple_encoding() {
    for size in 1usize..5 {
        for len in 0..4 {
            for i in 0..size.pow(len as u32) {
                let t = decode(i, size, len);
                assert_eq!(encode(&t, size), i);
                assert_eq!(is_degenerate(&t), t.windows(2).any(|w| w[0] == w[1]));
            }
        }
    }
}

proptest! {
    #[test]
    fn cochains_are_bounded(i in 0usize..15, n in 0usize..3, vals in prop::collection::vec(-1000i64..1000, 1..8)) {
        let r = &common::builtin_racks()[i];
        let dim = r.size().pow(n as u32);
        let values: Vec<Rational> = (0..dim).map(|k| rational(vals[k % vals.len()], 7)).collect();
        let f = Cochain::new(r, n, values.clone()).unwrap();
        let sup = f.sup_norm();
        prop_assert!(values.iter().all(|v| rackqm::num::abs(v) <= sup));
        let df = coboundary(r, n as i64, Execution::Sequential, DEFAULT_CAP).unwrap().apply(&f);
        let ddf = coboundary(r, n as i64 + 1, Execution::Sequential, DEFAULT_CAP).unwrap().apply(&df);
        prop_assert!(ddf.values().iter().all(Rational::is_zero));
    }
}
