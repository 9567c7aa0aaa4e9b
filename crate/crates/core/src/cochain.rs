//! Rack and quandle cochain complexes of finite racks, over the rationals.
//!
//! `Cⁿ` is the space of functions `Xⁿ → Q`; the tuple `(x₁, …, xₙ)` has
//! index `Σ xᵢ·|X|^{n−i}`. The coboundary is
//!
//! `δⁿf(x₁, …, x_{n+1}) = Σᵢ (−1)ⁱ [f(…, x̂ᵢ, …) − f(x₁◁xᵢ, …, x_{i−1}◁xᵢ, x_{i+1}, …)]`
//!
//! and `δⁿ = 0` for `n ≤ 0`. Quandle cochains are those vanishing on
//! tuples with `xᵢ = xᵢ₊₁`; for a quandle they form a subcomplex, computed
//! here on the coordinate subspace of nondegenerate tuples.

use std::fmt::Write as _;

use thiserror::Error;

use crate::exec::{self, Execution};
use crate::free_product::{FreeProductElement, FreeProductRack};
use crate::linalg;
use crate::num::{self, Int, Rational};
use crate::quasimorphism::RolliQm;
use crate::rack::FiniteRack;
use crate::sample::{self, SamplerConfig};
use crate::Sign;

/// Default limit on `|X|^{n+1}`, the row count of `δⁿ`.
pub const DEFAULT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CochainError {
    #[error("|X|^{exponent} = {size} exceeds the cap of {cap} entries")]
    CapExceeded { exponent: usize, size: String, cap: usize },
    #[error("quandle mode needs a quandle; {0} is only a rack")]
    NotAQuandle(String),
    #[error("cochain of degree {degree} needs {expected} values, got {found}")]
    Length { degree: usize, expected: usize, found: usize },
}

fn power(n: usize, k: usize, cap: usize) -> Result<usize, CochainError> {
    let mut acc: usize = 1;
    for _ in 0..k {
        acc = acc.checked_mul(n).filter(|&v| v <= cap).ok_or_else(|| CochainError::CapExceeded {
            exponent: k,
            size: Int::from(n).pow(k).to_string(),
            cap,
        })?;
    }
    Ok(acc)
}

/// Digits of `index` in base `n`, most significant first.
pub fn decode(index: usize, n: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    let mut r = index;
    for slot in out.iter_mut().rev() {
        *slot = r % n;
        r /= n;
    }
    out
}

pub fn encode(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

pub fn is_degenerate(tuple: &[usize]) -> bool {
    tuple.windows(2).any(|w| w[0] == w[1])
}

/// A function `Xⁿ → Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: Vec<Rational>,
}

impl Cochain {
    pub fn new(rack: &FiniteRack, degree: usize, values: Vec<Rational>) -> Result<Self, CochainError> {
        let expected = power(rack.size(), degree, DEFAULT_CAP)?;
        if values.len() != expected {
            return Err(CochainError::Length { degree, expected, found: values.len() });
        }
        Ok(Self { degree, values })
    }

    pub fn zero(rack: &FiniteRack, degree: usize) -> Result<Self, CochainError> {
        let len = power(rack.size(), degree, DEFAULT_CAP)?;
        Ok(Self { degree, values: vec![Rational::ZERO; len] })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn sup_norm(&self) -> Rational {
        self.values.iter().map(num::abs).fold(Rational::ZERO, |a, b| if b > a { b } else { a })
    }
}

/// `δⁿ` as a sparse integer matrix of shape `|X|^{n+1} × |X|ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    degree: i64,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

fn cochain_dim(size: usize, degree: i64, cap: usize) -> Result<usize, CochainError> {
    if degree < 0 {
        Ok(0)
    } else {
        power(size, degree as usize, cap)
    }
}

pub fn coboundary(rack: &FiniteRack, degree: i64, execution: Execution, cap: usize) -> Result<CoboundaryMatrix, CochainError> {
    let size = rack.size();
    let rows = cochain_dim(size, degree + 1, cap)?;
    let cols = cochain_dim(size, degree, cap)?;
    if degree <= 0 {
        return Ok(CoboundaryMatrix { degree, rows, cols, entries: vec![Vec::new(); rows] });
    }
    let n = degree as usize;
    let entries = exec::map_indices(execution, rows, |r| {
        let t = decode(r, size, n + 1);
        let mut row: Vec<(usize, i64)> = Vec::with_capacity(2 * (n + 1));
        let mut face = Vec::with_capacity(n);
        for i in 0..=n {
            let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
            face.clear();
            face.extend(t.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x));
            row.push((encode(&face, size), sign));
            face.clear();
            face.extend((0..i).map(|j| rack.op(t[j], t[i])));
            face.extend(t[i + 1..].iter().copied());
            row.push((encode(&face, size), -sign));
        }
        row.sort_unstable();
        let mut merged: Vec<(usize, i64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        merged
    });
    Ok(CoboundaryMatrix { degree, rows, cols, entries })
}

impl CoboundaryMatrix {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.entries[r]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.entries[r].iter().find(|&&(k, _)| k == c).map_or(0, |&(_, v)| v)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().flatten().map(|&(_, v)| v.abs()).max().unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|row| {
                let mut d = vec![0; self.cols];
                for &(c, v) in row {
                    d[c] = v;
                }
                d
            })
            .collect()
    }

    /// `self · other` (apply `other` first); shapes must chain.
    pub fn compose(&self, other: &CoboundaryMatrix) -> Vec<Vec<(usize, i64)>> {
        assert_eq!(self.cols, other.rows, "shapes do not chain");
        self.entries
            .iter()
            .map(|row| {
                let mut acc = std::collections::BTreeMap::<usize, i64>::new();
                for &(k, a) in row {
                    for &(c, b) in &other.entries[k] {
                        *acc.entry(c).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect()
    }

    pub fn apply(&self, f: &Cochain) -> Cochain {
        assert_eq!(f.values.len(), self.cols);
        let values = self
            .entries
            .iter()
            .map(|row| {
                let mut s = num::RationalSum::new();
                for &(c, v) in row {
                    s.add(&(Rational::from(v) * &f.values[c]));
                }
                s.total()
            })
            .collect();
        Cochain { degree: (self.degree + 1).max(0) as usize, values }
    }

    pub fn rank(&self) -> usize {
        linalg::rank_i64(&self.to_dense())
    }

    /// The block with nondegenerate rows and columns, reindexed in tuple
    /// order. This is the quandle coboundary.
    pub fn nondegenerate_block(&self, size: usize) -> CoboundaryMatrix {
        let (rows, cols) = self.nondegenerate_indices(size);
        let col_pos: std::collections::HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let entries = rows
            .iter()
            .map(|&r| self.entries[r].iter().filter_map(|&(c, v)| col_pos.get(&c).map(|&i| (i, v))).collect())
            .collect();
        CoboundaryMatrix { degree: self.degree, rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn nondegenerate_rank(&self, size: usize) -> usize {
        self.nondegenerate_block(size).rank()
    }

    fn nondegenerate_indices(&self, size: usize) -> (Vec<usize>, Vec<usize>) {
        let filter = |count: usize, len: i64| -> Vec<usize> {
            if len < 0 {
                return Vec::new();
            }
            (0..count).filter(|&i| !is_degenerate(&decode(i, size, len as usize))).collect()
        };
        (filter(self.rows, self.degree + 1), filter(self.cols, self.degree))
    }

    /// True when cochains vanishing on degenerate tuples are mapped to
    /// cochains vanishing on degenerate tuples, i.e. the block with
    /// degenerate rows and nondegenerate columns is zero.
    pub fn preserves_degenerate_vanishing(&self, size: usize) -> bool {
        if self.degree < 0 {
            return true;
        }
        let n = self.degree as usize;
        (0..self.rows)
            .filter(|&r| is_degenerate(&decode(r, size, n + 1)))
            .all(|r| self.entries[r].iter().all(|&(c, _)| is_degenerate(&decode(c, size, n))))
    }

    /// `# delta n rows cols`, then one dense row per line.
    pub fn dump(&self) -> String {
        let mut out = format!("# delta {} {} {}\n", self.degree, self.rows, self.cols);
        for row in self.to_dense() {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// `dim Hᵏ` for `k = 0..=max_degree`.
pub fn cohomology_dims(rack: &FiniteRack, max_degree: usize, quandle_mode: bool, execution: Execution, cap: usize) -> Result<Vec<usize>, CochainError> {
    if quandle_mode && !rack.is_quandle() {
        return Err(CochainError::NotAQuandle(rack.name().to_string()));
    }
    let size = rack.size();
    let mut ranks = Vec::with_capacity(max_degree + 2);
    let mut dims = Vec::with_capacity(max_degree + 1);
    for k in -1..=max_degree as i64 {
        let d = coboundary(rack, k, execution, cap)?;
        if quandle_mode {
            debug_assert!(d.preserves_degenerate_vanishing(size));
            ranks.push(d.nondegenerate_rank(size));
        } else {
            ranks.push(d.rank());
        }
        if k >= 0 {
            dims.push(d.nondegenerate_indices(size).1.len());
        }
    }
    Ok((0..=max_degree)
        .map(|k| {
            let cols = if quandle_mode { dims[k] } else { size.pow(k as u32) };
            cols - ranks[k + 1] - ranks[k]
        })
        .collect())
}

/// Outcome of checking `φ̂(p) − φ̂(p ◁ p) = 0` on samples.
#[derive(Debug, Clone)]
pub struct DiagonalReport {
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<FreeProductElement>,
}

pub fn check_cocycle_diag(qm: &RolliQm, parent: &FreeProductRack, cfg: &SamplerConfig) -> DiagonalReport {
    let first = exec::map_reduce(
        cfg.execution,
        cfg.samples,
        |i| {
            let mut rng = cfg.rng(i);
            let p = sample::random_element(&mut rng, parent, cfg);
            let pp = parent.rack_op(&p, &p, Sign::Plus).expect("same parent");
            if qm.rack_value(&p) == qm.rack_value(&pp) {
                (0usize, None)
            } else {
                (1, Some((i, p)))
            }
        },
        (0, None),
        |(a, x): (usize, Option<(usize, FreeProductElement)>), (b, y)| {
            let first = match (x, y) {
                (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                (x, y) => x.or(y),
            };
            (a + b, first)
        },
    );
    DiagonalReport { samples: cfg.samples, failures: first.0, first_failure: first.1.map(|(_, p)| p) }
}

/// Observed sup of `|δ¹φ̂(p, q)|` and pointwise `δ²δ¹φ̂ = 0` on triples.
#[derive(Debug, Clone)]
pub struct TwoCocycleReport {
    pub max: Rational,
    pub bound: Rational,
    pub samples: usize,
    pub triple_failures: usize,
}

impl TwoCocycleReport {
    pub fn within_bound(&self) -> bool {
        self.max <= self.bound
    }
}

pub fn bounded_2cocycle_check(qm: &RolliQm, parent: &FreeProductRack, cfg: &SamplerConfig) -> TwoCocycleReport {
    let f = |p: &FreeProductElement, q: &FreeProductElement| {
        let pq = parent.rack_op(p, q, Sign::Plus).expect("same parent");
        qm.rack_value(p) - qm.rack_value(&pq)
    };
    let op = |p: &FreeProductElement, q: &FreeProductElement| parent.rack_op(p, q, Sign::Plus).expect("same parent");
    let (max, failures) = exec::map_reduce(
        cfg.execution,
        cfg.samples,
        |i| {
            let mut rng = cfg.rng(i);
            let (x, y) = sample::correlated_pair(&mut rng, parent, cfg);
            let z = sample::random_element(&mut rng, parent, cfg);
            let d1 = num::abs(&f(&x, &y));
            // δ²F(x, y, z) = F(x, z) − F(x, y) − F(x◁y, z) + F(x◁z, y◁z)
            let d2 = f(&x, &z) - f(&x, &y) - f(&op(&x, &y), &z) + f(&op(&x, &z), &op(&y, &z));
            (d1, usize::from(!d2.is_zero()))
        },
        (Rational::ZERO, 0),
        |(a, x), (b, y)| (if b > a { b } else { a }, x + y),
    );
    TwoCocycleReport { max, bound: Rational::from(4) * qm.bound(), samples: cfg.samples, triple_failures: failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::FiniteGroup;

    const SEQ: Execution = Execution::Sequential;

    #[test]
    fn low_degrees() {
        let r = FiniteRack::dihedral(3);
        assert!(coboundary(&r, 0, SEQ, DEFAULT_CAP).unwrap().is_zero());
        assert!(coboundary(&r, -1, SEQ, DEFAULT_CAP).unwrap().is_zero());
        let d1 = coboundary(&r, 1, SEQ, DEFAULT_CAP).unwrap();
        assert_eq!(d1.shape(), (9, 3));
        for x in 0..3 {
            for y in 0..3 {
                let row = encode(&[x, y], 3);
                let target = (2 * y + 3 - x) % 3;
                if target == x {
                    assert!(d1.row(row).is_empty());
                } else {
                    assert_eq!(d1.entry(row, x), 1);
                    assert_eq!(d1.entry(row, target), -1);
                }
            }
        }
    }

    #[test]
    fn degree_two_matches_the_explicit_formula() {
        let r = FiniteRack::conjugation(&FiniteGroup::symmetric(3));
        let n = r.size();
        let d2 = coboundary(&r, 2, SEQ, DEFAULT_CAP).unwrap();
        let dense = d2.to_dense();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut expected = vec![0i64; n * n];
                    expected[encode(&[x, z], n)] += 1;
                    expected[encode(&[x, y], n)] -= 1;
                    expected[encode(&[r.op(x, y), z], n)] -= 1;
                    expected[encode(&[r.op(x, z), r.op(y, z)], n)] += 1;
                    assert_eq!(dense[encode(&[x, y, z], n)], expected);
                }
            }
        }
    }

    #[test]
    fn trivial_rack_cohomology() {
        let t = FiniteRack::trivial(3);
        for n in 1..=3 {
            assert!(coboundary(&t, n, SEQ, DEFAULT_CAP).unwrap().is_zero());
        }
        assert_eq!(cohomology_dims(&t, 2, false, SEQ, DEFAULT_CAP).unwrap(), vec![1, 3, 9]);
    }

    #[test]
    fn quandle_mode_is_bounded_by_rack_mode() {
        let r = FiniteRack::dihedral(3);
        let rack = cohomology_dims(&r, 2, false, SEQ, DEFAULT_CAP).unwrap();
        let quandle = cohomology_dims(&r, 2, true, SEQ, DEFAULT_CAP).unwrap();
        assert_eq!(rack[..2], [1, 1]);
        assert!(quandle.iter().zip(&rack).all(|(q, r)| q <= r));
        let shift: Vec<Vec<usize>> = (0..3).map(|i| vec![(i + 1) % 3; 3]).collect();
        let s = FiniteRack::from_table(shift).unwrap();
        assert!(matches!(cohomology_dims(&s, 1, true, SEQ, DEFAULT_CAP), Err(CochainError::NotAQuandle(_))));
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteRack::trivial(10);
        assert!(matches!(coboundary(&r, 3, SEQ, 1000), Err(CochainError::CapExceeded { .. })));
    }

    #[test]
    fn dump_format() {
        let r = FiniteRack::trivial(2);
        let text = coboundary(&r, 1, SEQ, DEFAULT_CAP).unwrap().dump();
        assert_eq!(text, "# delta 1 4 2\n0 0\n0 0\n0 0\n0 0\n");
    }

    #[test]
    fn apply_matches_formula() {
        let r = FiniteRack::dihedral(3);
        let f = Cochain::new(&r, 1, vec![Rational::from(1), Rational::from(5), Rational::from(-2)]).unwrap();
        let g = coboundary(&r, 1, SEQ, DEFAULT_CAP).unwrap().apply(&f);
        for x in 0..3 {
            for y in 0..3 {
                let expected = &f.values()[x] - &f.values()[r.op(x, y)];
                assert_eq!(g.values()[encode(&[x, y], 3)], expected);
            }
        }
        assert_eq!(f.sup_norm(), Rational::from(5));
    }
}
