//! JSON documents: rack and group tables, λ families and certificates.
//!
//! Rationals are always strings `"p/q"`. Free-product elements and words
//! use the text syntax of [`crate::free_product`].

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::adjoint::{AdjValue, AdjointModel};
use crate::certify::{CertificateWitness, IndependenceCertificate};
use crate::free_product::{FreeProductError, FreeProductRack};
use crate::num::{self, Rational};
use crate::quasimorphism::{rolli_qm, FactorLambda, LambdaError, LambdaFamily, OddIntFn, OddTail};
use crate::rack::{FiniteGroup, FiniteRack, GroupError, RackError, RackKind};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error(transparent)]
    Rack(#[from] RackError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error(transparent)]
    FreeProduct(#[from] FreeProductError),
}

impl IoError {
    /// The underlying rack axiom violation, if any.
    pub fn rack_error(&self) -> Option<&RackError> {
        match self {
            IoError::Rack(e) => Some(e),
            _ => None,
        }
    }
}

fn format_err(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

fn read(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })
}

fn parse_q(text: &str, what: &str) -> Result<Rational, IoError> {
    num::parse_rational(text).map_err(|_| format_err(format!("{what}: {text:?} is not a rational \"p/q\"")))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RackDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub kind: String,
}

pub fn rack_from_document(doc: RackDocument) -> Result<FiniteRack, IoError> {
    let claim = match doc.kind.as_str() {
        "rack" => RackKind::Rack,
        "quandle" => RackKind::Quandle,
        other => return Err(format_err(format!("kind must be \"rack\" or \"quandle\", got {other:?}"))),
    };
    Ok(FiniteRack::new(&doc.name, doc.elements, doc.table, claim)?)
}

pub fn rack_to_document(rack: &FiniteRack) -> RackDocument {
    RackDocument {
        name: rack.name().to_string(),
        elements: rack.labels().to_vec(),
        table: rack.table(),
        kind: rack.kind().to_string(),
    }
}

pub fn parse_rack(text: &str) -> Result<FiniteRack, IoError> {
    rack_from_document(serde_json::from_str(text)?)
}

pub fn load_rack(path: &Path) -> Result<FiniteRack, IoError> {
    parse_rack(&read(path)?)
}

pub fn rack_to_json(rack: &FiniteRack) -> String {
    serde_json::to_string_pretty(&rack_to_document(rack)).expect("rack documents serialize")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<usize>>,
}

pub fn parse_group(text: &str) -> Result<FiniteGroup, IoError> {
    let doc: GroupDocument = serde_json::from_str(text)?;
    Ok(FiniteGroup::new(&doc.name, doc.elements, doc.table, doc.inverse)?)
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, IoError> {
    parse_group(&read(path)?)
}

pub fn group_to_json(group: &FiniteGroup) -> String {
    let doc = GroupDocument {
        name: group.name().to_string(),
        elements: group.labels().to_vec(),
        table: group.table(),
        inverse: Some(group.inverses().to_vec()),
    };
    serde_json::to_string_pretty(&doc).expect("group documents serialize")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LambdaDocument {
    pub family: Vec<LambdaEntry>,
    pub bound: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LambdaEntry {
    Zero { factor: String },
    Sign { factor: String },
    Iota { factor: String, element: String, sigma: SigmaDocument },
    Table { factor: String, entries: Vec<TableEntry> },
}

/// `{"indicator": k}`, or explicit values `σ(1), …, σ(m)` with a tail that
/// is `"zero"` or the constant `σ(n)` for `n > m`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SigmaDocument {
    Indicator { indicator: usize },
    Values { values: Vec<String>, tail: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableEntry {
    pub element: String,
    pub value: String,
}

fn sigma_from_document(doc: &SigmaDocument) -> Result<OddIntFn, IoError> {
    match doc {
        SigmaDocument::Indicator { indicator: 0 } => Err(format_err("indicator support must be at least 1")),
        SigmaDocument::Indicator { indicator } => Ok(OddIntFn::indicator(*indicator)),
        SigmaDocument::Values { values, tail } => {
            let values = values.iter().map(|v| parse_q(v, "sigma value")).collect::<Result<_, _>>()?;
            let tail = match tail.as_str() {
                "zero" => OddTail::Zero,
                c => OddTail::Constant(parse_q(c, "sigma tail")?),
            };
            Ok(OddIntFn::new(values, tail))
        }
    }
}

fn sigma_to_document(sigma: &OddIntFn) -> SigmaDocument {
    SigmaDocument::Values {
        values: sigma.values().iter().map(num::format_rational).collect(),
        tail: match sigma.tail() {
            OddTail::Zero => "zero".to_string(),
            OddTail::Constant(c) => num::format_rational(c),
        },
    }
}

/// Builds a family whose table entries are interpreted in `parent`.
pub fn lambda_from_document(doc: &LambdaDocument, parent: &FreeProductRack) -> Result<LambdaFamily, IoError> {
    let bound = parse_q(&doc.bound, "bound")?;
    let mut entries = Vec::with_capacity(doc.family.len());
    for e in &doc.family {
        let (name, l) = match e {
            LambdaEntry::Zero { factor } => (factor, FactorLambda::Zero),
            LambdaEntry::Sign { factor } => (factor, FactorLambda::Sign),
            LambdaEntry::Iota { factor, element, sigma } => {
                let element = num::parse_int(element).ok_or_else(|| format_err(format!("iota element {element:?} is not an integer")))?;
                (factor, FactorLambda::Iota { element, sigma: sigma_from_document(sigma)? })
            }
            LambdaEntry::Table { factor, entries: rows } => {
                let index = parent.factor_index(factor)?;
                let rank = parent.model(index).rank();
                let mut pairs = Vec::with_capacity(rows.len());
                for row in rows {
                    let w = parent.parse_word(&row.element)?;
                    let value = match w.syllables() {
                        [] => AdjValue::zero(rank),
                        [s] if s.factor == index => s.value.clone(),
                        _ => {
                            return Err(format_err(format!(
                                "table element {:?} is not an element of factor {factor:?}",
                                row.element
                            )))
                        }
                    };
                    pairs.push((value, parse_q(&row.value, "table value")?));
                }
                (factor, FactorLambda::table(factor, rank, pairs)?)
            }
        };
        entries.push((name.clone(), l));
    }
    let family = LambdaFamily::new(entries, bound)?;
    rolli_qm(&family, parent)?;
    Ok(family)
}

pub fn lambda_to_document(family: &LambdaFamily, parent: &FreeProductRack) -> LambdaDocument {
    let family_entries = family
        .entries()
        .iter()
        .map(|(name, l)| {
            let factor = name.clone();
            match l {
                FactorLambda::Zero => LambdaEntry::Zero { factor },
                FactorLambda::Sign => LambdaEntry::Sign { factor },
                FactorLambda::Iota { element, sigma } => {
                    LambdaEntry::Iota { factor, element: element.to_string(), sigma: sigma_to_document(sigma) }
                }
                FactorLambda::Table { entries } => {
                    let index = parent.factor_index(name).expect("family factors belong to the parent");
                    let rows = entries
                        .iter()
                        .map(|(g, v)| {
                            let w = parent
                                .factorize_named([(name.clone(), g.clone())])
                                .expect("family factors belong to the parent");
                            debug_assert_eq!(w.first().map(|s| s.factor), Some(index));
                            TableEntry { element: parent.render_word(&w), value: num::format_rational(v) }
                        })
                        .collect();
                    LambdaEntry::Table { factor, entries: rows }
                }
            }
        })
        .collect();
    LambdaDocument { family: family_entries, bound: num::format_rational(family.bound()) }
}

pub fn parse_lambda(text: &str, parent: &FreeProductRack) -> Result<LambdaFamily, IoError> {
    lambda_from_document(&serde_json::from_str(text)?, parent)
}

pub fn load_lambda(path: &Path, parent: &FreeProductRack) -> Result<LambdaFamily, IoError> {
    parse_lambda(&read(path)?, parent)
}

pub fn lambda_to_json(family: &LambdaFamily, parent: &FreeProductRack) -> String {
    serde_json::to_string_pretty(&lambda_to_document(family, parent)).expect("lambda documents serialize")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub index: usize,
    pub base: String,
    pub period: String,
    pub power: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub rank: usize,
    pub n: u64,
    pub family: Vec<LambdaDocument>,
    pub witnesses: Vec<WitnessDocument>,
    pub matrix: Vec<Vec<String>>,
    pub verdict: usize,
    pub parent: String,
}

fn render_base(parent: &FreeProductRack, factor: usize, base: &crate::Int) -> String {
    format!("{}.{}", parent.factor_name(factor), base)
}

pub fn certificate_to_document(cert: &IndependenceCertificate, parent: &FreeProductRack) -> CertificateDocument {
    CertificateDocument {
        rank: cert.rank,
        n: cert.n,
        family: cert.family.iter().map(|l| lambda_to_document(l, parent)).collect(),
        witnesses: cert
            .witnesses
            .iter()
            .map(|w: &CertificateWitness| WitnessDocument {
                index: w.index,
                base: render_base(parent, w.base_factor, &w.base),
                period: parent.render_word(&w.period),
                power: w.power,
            })
            .collect(),
        matrix: cert.matrix.iter().map(|row| row.iter().map(num::format_rational).collect()).collect(),
        verdict: cert.verdict,
        parent: parent.describe(),
    }
}

pub fn certificate_to_json(cert: &IndependenceCertificate, parent: &FreeProductRack) -> String {
    serde_json::to_string_pretty(&certificate_to_document(cert, parent)).expect("certificates serialize")
}

/// Outcome of re-evaluating a certificate document from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub matrix_matches: bool,
    pub verdict_matches: bool,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.matrix_matches && self.verdict_matches
    }
}

/// Rebuilds the parent, every `λ⁽ⁱ⁾` and every witness from the document
/// alone, then recomputes the matrix and its rank.
pub fn check_certificate(text: &str) -> Result<CertificateCheck, IoError> {
    let doc: CertificateDocument = serde_json::from_str(text)?;
    let parent = FreeProductRack::from_descriptor(&doc.parent)?;
    if doc.family.len() != doc.rank || doc.witnesses.len() != doc.rank {
        return Err(format_err("family and witness lists must both have length rank"));
    }
    if doc.matrix.len() != doc.rank || doc.matrix.iter().any(|r| r.len() != doc.rank) {
        return Err(format_err("matrix must be rank × rank"));
    }
    if doc.n == 0 {
        return Err(format_err("n must be at least 1"));
    }
    let qms = doc
        .family
        .iter()
        .map(|l| Ok(rolli_qm(&lambda_from_document(l, &parent)?, &parent)?))
        .collect::<Result<Vec<_>, IoError>>()?;
    let big_n = Rational::from(doc.n);
    let mut computed = vec![vec![Rational::ZERO; doc.rank]; doc.rank];
    for (j, w) in doc.witnesses.iter().enumerate() {
        let base = parent.parse_element(&w.base)?;
        if !base.tail().is_empty() {
            return Err(format_err(format!("witness base {:?} must be a bare element", w.base)));
        }
        let period = parent.parse_word(&w.period)?;
        let p = parent.reduce_element(base.factor(), base.base().clone(), period.pow(w.power));
        for (i, qm) in qms.iter().enumerate() {
            computed[i][j] = qm.rack_value(&p) / &big_n;
        }
    }
    let declared = doc
        .matrix
        .iter()
        .map(|row| row.iter().map(|v| parse_q(v, "matrix entry")).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CertificateCheck {
        matrix_matches: declared == computed,
        verdict_matches: crate::linalg::rank_rational(&computed) == doc.verdict,
    })
}
