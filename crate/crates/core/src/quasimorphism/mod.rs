//! Quasimorphisms on free products and the rack quasimorphisms they induce.
//!
//! Values are exact rationals. Defect estimates are observed maxima, hence
//! lower bounds for the true defect; upper bounds are only ever taken as
//! inputs.

mod brooks;
mod defect;
mod homogeneous;
mod lambda;
mod rolli;
mod v0;
mod witness;

pub use brooks::{brooks_qm, BrooksQm, EmptyWordError};
pub use defect::{
    exhaustive_group_defect, group_defect_estimate, group_defect_of, rack_defect_estimate, rack_defect_of,
    sampled_group_defect, value_set, word_count, ExhaustiveBudget, GroupDefectReport, RackDefectReport,
};
pub use homogeneous::{
    homogeneous_rack_estimate, homogeneous_rack_qm, homogenize, word_defect_estimate, ExponentSum, HomogeneousEstimate,
    HomogenizeError, Homogenizer, WordQuasimorphism,
};
pub use lambda::{FactorLambda, FamilyKind, LambdaError, LambdaFamily, OddIntFn, OddTail};
pub use rolli::{rack_qm, rolli_qm, rolli_value, RolliQm};
pub use v0::{v0_dim, v0_dim_by_elimination};
pub use witness::{unboundedness_witness, UnboundednessWitness, WitnessError};
