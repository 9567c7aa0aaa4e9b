//! Finite-rank independence certificates and growth reports.
//!
//! For `k` odd indicators `σᵢ` of `±i`, the families `λ⁽ⁱ⁾ = ι(σᵢ)` put `σᵢ`
//! on powers of `e_{x₀}` in the first factor and vanish elsewhere. On the
//! reduced witnesses `w_j(n) = (x, (e_{x₀}^j e_x)ⁿ)`, with `x` in the second
//! factor, `φ̂_{λ⁽ⁱ⁾}(w_j(n)) = n·σᵢ(j) = n·[i = j]`. The evaluation matrix
//! is the identity, so any nonzero combination `Σ cᵢ λ⁽ⁱ⁾` grows with slope
//! `|c_j|` along some witness and the `k` rack quasimorphisms are
//! independent modulo bounded functions.

use thiserror::Error;

use crate::exec::{self, Execution};
use crate::free_product::{FreeProductElement, FreeProductRack, SyllableWord};
use crate::linalg;
use crate::num::{Int, Rational};
use crate::quasimorphism::{rolli_qm, unboundedness_witness, LambdaFamily, OddIntFn, RolliQm, UnboundednessWitness, WitnessError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("exponent n must be at least 1")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateWitness {
    pub index: usize,
    pub base_factor: usize,
    pub base: Int,
    pub period: SyllableWord,
    pub power: u64,
}

impl CertificateWitness {
    pub fn element(&self, parent: &FreeProductRack) -> FreeProductElement {
        parent.reduce_element(self.base_factor, self.base.clone(), self.period.pow(self.power))
    }
}

#[derive(Debug, Clone)]
pub struct IndependenceCertificate {
    pub rank: usize,
    pub n: u64,
    /// Distinguished factor and element of every `ι(σᵢ)`.
    pub factor: usize,
    pub element: Int,
    /// `λ⁽ⁱ⁾` for `i = 1..=rank`.
    pub family: Vec<LambdaFamily>,
    pub witnesses: Vec<CertificateWitness>,
    /// `M[i][j] = φ̂_{λ⁽ⁱ⁾}(w_j(n)) / n`.
    pub matrix: Vec<Vec<Rational>>,
    pub verdict: usize,
}

impl IndependenceCertificate {
    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| *v == if i == j { Rational::ONE } else { Rational::ZERO })
        })
    }
}

fn factor_names(parent: &FreeProductRack) -> Vec<String> {
    parent.factors().iter().map(|f| f.name.clone()).collect()
}

/// `ι(σ)` on the first factor at element 0.
pub fn iota_family(parent: &FreeProductRack, sigma: OddIntFn) -> LambdaFamily {
    LambdaFamily::iota(&factor_names(parent), parent.factor_name(0), Int::ZERO, sigma)
}

pub fn independence_certificate(parent: &FreeProductRack, rank: usize, n: u64, execution: Execution) -> Result<IndependenceCertificate, CertifyError> {
    if rank == 0 {
        return Err(CertifyError::ZeroRank);
    }
    if n == 0 {
        return Err(CertifyError::ZeroExponent);
    }
    let (s0, t) = (0, 1);
    let x0 = Int::ZERO;
    let family: Vec<LambdaFamily> = (1..=rank).map(|i| iota_family(parent, OddIntFn::indicator(i))).collect();
    let qms: Vec<RolliQm> = family.iter().map(|l| rolli_qm(l, parent).expect("iota families cover every factor")).collect();
    let witnesses: Vec<CertificateWitness> = (1..=rank)
        .map(|j| {
            let period = SyllableWord::factorize([
                parent.generator_power(s0, &x0, &Int::from(j)),
                parent.generator_power(t, &Int::ZERO, &Int::ONE),
            ]);
            CertificateWitness { index: j, base_factor: t, base: Int::ZERO, period, power: n }
        })
        .collect();
    let big_n = Rational::from(n);
    let columns = exec::map_indices(execution, rank, |j| {
        let w = witnesses[j].element(parent);
        qms.iter().map(|qm| qm.rack_value(&w) / &big_n).collect::<Vec<_>>()
    });
    let matrix: Vec<Vec<Rational>> = (0..rank).map(|i| (0..rank).map(|j| columns[j][i].clone()).collect()).collect();
    let verdict = linalg::rank_rational(&matrix);
    Ok(IndependenceCertificate { rank, n, factor: s0, element: x0, family, witnesses, matrix, verdict })
}

/// `n ↦ φ̂(x, periodⁿ)` for the given `n`.
pub fn growth_along(qm: &RolliQm, parent: &FreeProductRack, base_factor: usize, base: &Int, period: &SyllableWord, ns: &[u64]) -> Vec<(u64, Rational)> {
    ns.iter()
        .map(|&n| (n, qm.rack_value(&parent.reduce_element(base_factor, base.clone(), period.pow(n)))))
        .collect()
}

#[derive(Debug, Clone)]
pub struct GrowthReport {
    /// Σ over factors of the orbit count of the factor rack.
    pub factor_orbit_sum: usize,
    pub witness: UnboundednessWitness,
    pub table: Vec<(u64, Rational)>,
}

impl GrowthReport {
    pub fn is_linear(&self) -> bool {
        self.table.iter().all(|(n, v)| *v == Rational::from(*n) * &self.witness.slope)
    }
}

/// Exhibits linear growth of `φ̂_λ` along its unboundedness witness.
pub fn boundedness_refutation(qm: &RolliQm, parent: &FreeProductRack, ns: &[u64]) -> Result<GrowthReport, WitnessError> {
    let witness = unboundedness_witness(qm, parent)?;
    let table = ns.iter().map(|&n| (n, qm.rack_value(&witness.element(parent, n)))).collect();
    Ok(GrowthReport { factor_orbit_sum: parent.factor_orbit_sum(), witness, table })
}
