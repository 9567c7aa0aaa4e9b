//! Seeded random elements for property checks and defect estimates.
//!
//! Sample `i` of a run with seed `s` draws from its own ChaCha stream
//! `(s, i)`, so results do not depend on how samples are scheduled.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjoint::{AdjValue, AdjointModel, FactorModel};
use crate::free_product::{FreeProductElement, FreeProductRack, Syllable, SyllableWord};
use crate::num::Int;
use crate::word::GroupWord;
use crate::Execution;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_syllables: usize,
    pub max_exponent: u32,
    pub execution: Execution,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self { seed: 0, samples: 10_000, max_syllables: 12, max_exponent: 5, execution: Execution::default() }
    }
}

impl SamplerConfig {
    pub fn with_samples(self, samples: usize) -> Self {
        Self { samples, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    /// The generator for sample `index`.
    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

fn nonzero_exponent(rng: &mut ChaCha8Rng, max_exp: u32) -> i64 {
    let m = i64::from(max_exp.max(1));
    let k = rng.random_range(1..=m);
    if rng.random_bool(0.5) {
        k
    } else {
        -k
    }
}

/// A nontrivial adjoint value. For ranks above one, half of the draws are
/// powers of a single generator so that generator-specific λ are exercised.
pub fn random_value(rng: &mut ChaCha8Rng, model: &FactorModel, max_exp: u32) -> AdjValue {
    let r = model.rank();
    if r == 1 || rng.random_bool(0.5) {
        let i = rng.random_range(0..r);
        return AdjValue::unit(r, i, Int::from(nonzero_exponent(rng, max_exp)));
    }
    let m = i64::from(max_exp.max(1));
    loop {
        let v = AdjValue::from_exponents((0..r).map(|_| Int::from(rng.random_range(-m..=m))).collect());
        if !v.is_identity() {
            return v;
        }
    }
}

/// A uniformly chosen factor different from `avoid`.
pub fn random_factor(rng: &mut ChaCha8Rng, count: usize, avoid: Option<usize>) -> usize {
    match avoid {
        None => rng.random_range(0..count),
        Some(a) => {
            let f = rng.random_range(0..count - 1);
            if f >= a {
                f + 1
            } else {
                f
            }
        }
    }
}

/// An alternating word of exactly `len` syllables whose first factor is
/// not `avoid`.
pub fn random_word_of_length(
    rng: &mut ChaCha8Rng,
    parent: &FreeProductRack,
    len: usize,
    max_exp: u32,
    avoid: Option<usize>,
) -> SyllableWord {
    let mut prev = avoid;
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let factor = random_factor(rng, parent.factor_count(), prev);
        out.push(Syllable { factor, value: random_value(rng, parent.model(factor), max_exp) });
        prev = Some(factor);
    }
    SyllableWord::factorize(out)
}

pub fn random_word(rng: &mut ChaCha8Rng, parent: &FreeProductRack, cfg: &SamplerConfig, avoid: Option<usize>) -> SyllableWord {
    let len = rng.random_range(0..=cfg.max_syllables);
    random_word_of_length(rng, parent, len, cfg.max_exponent, avoid)
}

pub fn random_base(rng: &mut ChaCha8Rng, model: &FactorModel, max_exp: u32) -> Int {
    match model.carrier_size() {
        Some(n) => Int::from(rng.random_range(0..n)),
        None => {
            let m = i64::from(max_exp);
            Int::from(rng.random_range(-m..=m))
        }
    }
}

pub fn random_element(rng: &mut ChaCha8Rng, parent: &FreeProductRack, cfg: &SamplerConfig) -> FreeProductElement {
    let factor = rng.random_range(0..parent.factor_count());
    let x = random_base(rng, parent.model(factor), cfg.max_exponent);
    let g = random_word(rng, parent, cfg, Some(factor));
    parent.reduce_element(factor, x, g)
}

/// A pair `(p, q)` where, with probability 3/4, the tail of `q` ends with a
/// suffix of the tail of `p`, so that `g h⁻¹` cancels in `p ◁ q`.
pub fn correlated_pair(rng: &mut ChaCha8Rng, parent: &FreeProductRack, cfg: &SamplerConfig) -> (FreeProductElement, FreeProductElement) {
    let p = random_element(rng, parent, cfg);
    if p.tail().is_empty() || rng.random_bool(0.25) {
        return (p, random_element(rng, parent, cfg));
    }
    let g = p.tail();
    let cut = rng.random_range(0..g.len());
    let shared = g.suffix(cut);
    let shared_first = shared.first().map(|s| s.factor);
    let head_len = rng.random_range(0..=cfg.max_syllables / 2);
    let factor = rng.random_range(0..parent.factor_count());
    let mut head = random_word_of_length(rng, parent, head_len, cfg.max_exponent, Some(factor));
    // Let the head end in the shared block's factor half the time, so the
    // junction merges instead of alternating cleanly.
    if let (Some(f), true) = (shared_first, rng.random_bool(0.5)) {
        if f != factor || !head.is_empty() {
            let extra = Syllable { factor: f, value: random_value(rng, parent.model(f), cfg.max_exponent) };
            head = head.multiply(&SyllableWord::factorize([extra]));
        }
    }
    let y = random_base(rng, parent.model(factor), cfg.max_exponent);
    let q = parent.reduce_element(factor, y, head.multiply(&shared));
    (p, q)
}

/// A pair `(g, h)` in the free product of the factor groups where, with
/// probability 3/4, `h` starts with the inverse of a suffix of `g`.
pub fn correlated_group_pair(rng: &mut ChaCha8Rng, parent: &FreeProductRack, cfg: &SamplerConfig) -> (SyllableWord, SyllableWord) {
    let g = random_word(rng, parent, cfg, None);
    let h = random_word(rng, parent, cfg, None);
    if g.is_empty() || rng.random_bool(0.25) {
        return (g, h);
    }
    let cut = rng.random_range(0..g.len());
    (g.clone(), g.suffix(cut).invert().multiply(&h))
}

/// A reduced free-group word over `letters`.
pub fn random_group_word(rng: &mut ChaCha8Rng, letters: &[String], max_syllables: usize, max_exp: u32) -> GroupWord {
    let len = rng.random_range(0..=max_syllables);
    let mut prev = None;
    let mut raw = Vec::with_capacity(len);
    for _ in 0..len {
        let i = random_factor(rng, letters.len(), prev);
        raw.push((letters[i].clone(), Int::from(nonzero_exponent(rng, max_exp))));
        prev = Some(i);
    }
    GroupWord::reduce(raw)
}

/// A pair of free-group words where `h` often starts by cancelling a suffix of `g`.
pub fn correlated_word_pair(rng: &mut ChaCha8Rng, letters: &[String], max_syllables: usize, max_exp: u32) -> (GroupWord, GroupWord) {
    let g = random_group_word(rng, letters, max_syllables, max_exp);
    let h = random_group_word(rng, letters, max_syllables, max_exp);
    if g.is_identity() || rng.random_bool(0.25) {
        return (g, h);
    }
    let cut = rng.random_range(0..g.syllable_len());
    let suffix = GroupWord::reduce(g.syllables()[cut..].iter().cloned());
    (g.clone(), suffix.invert().multiply(&h))
}
