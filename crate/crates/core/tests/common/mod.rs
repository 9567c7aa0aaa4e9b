#![allow(dead_code)]

use rackqm::free_product::FreeProductRack;
use rackqm::rack::{FiniteGroup, FiniteRack};

pub fn builtin_racks() -> Vec<FiniteRack> {
    rackqm::builtin::racks()
}

/// Cyclic permutation rack `x ◁ y = x + 1 mod n`, which is not a quandle.
pub fn shift_rack(n: usize) -> FiniteRack {
    FiniteRack::from_table((0..n).map(|x| vec![(x + 1) % n; n]).collect()).unwrap()
}

pub fn builtin_groups() -> Vec<FiniteGroup> {
    rackqm::builtin::groups()
}

/// The three parents every certificate and sampler test runs on.
pub fn parents() -> Vec<FreeProductRack> {
    vec![
        FreeProductRack::free_rack(&["a", "b"]).unwrap(),
        FreeProductRack::free_quandle(&["a", "b"]).unwrap(),
        FreeProductRack::trivial_product(&[("a", 2), ("b", 3)]).unwrap(),
    ]
}
