//! Observed defects: certified lower bounds for `D(φ_λ)` and for the rack
//! defect `sup |φ̂_λ(p) − φ̂_λ(p ◁ q)|`.
//!
//! The exhaustive group enumeration does not visit pairs one by one. For
//! `g = P·u·c⁻¹` and `h = c·v·Q`, where `c` is the block cancelled in `gh`
//! and `u, v` merge into `uv ≠ 1`, the prefix `P` and suffix `Q` contribute
//! equally to `φ(g) + φ(h)` and to `φ(gh)`. The defect therefore depends only
//! on the junction `(c, u, v)` (or on `c` alone when nothing merges), and the
//! number of pairs sharing a junction is a product of word counts. Every
//! junction is evaluated on its shortest representative, and the class
//! sizes are summed to confirm that all `N²` pairs were covered.

use crate::adjoint::{AdjValue, AdjointModel};
use crate::exec::{self, Execution};
use crate::free_product::{FreeProductElement, FreeProductRack, Syllable, SyllableWord};
use crate::num::{self, Int, Rational};
use crate::sample::{self, SamplerConfig};
use crate::Sign;

use super::rolli::RolliQm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExhaustiveBudget {
    pub max_syllables: usize,
    pub max_exponent: u32,
}

#[derive(Debug, Clone)]
pub struct GroupDefectReport {
    pub max: Rational,
    pub witness: Option<(SyllableWord, SyllableWord)>,
    /// Pairs accounted for: `N²` for an exhaustive run, the sample count otherwise.
    pub pairs: u128,
    /// Distinct junction classes evaluated (exhaustive runs only).
    pub classes: u64,
}

#[derive(Debug, Clone)]
pub struct RackDefectReport {
    pub max: Rational,
    pub witness: Option<(FreeProductElement, FreeProductElement)>,
    pub samples: usize,
}

/// `|φ(g) + φ(h) − φ(gh)|`.
pub fn group_defect_of(qm: &RolliQm, g: &SyllableWord, h: &SyllableWord) -> Rational {
    num::abs(&(qm.value(g) + qm.value(h) - qm.value(&g.multiply(h))))
}

/// `|φ̂(p) − φ̂(p ◁ q)|`.
pub fn rack_defect_of(qm: &RolliQm, parent: &FreeProductRack, p: &FreeProductElement, q: &FreeProductElement) -> Rational {
    let pq = parent.rack_op(p, q, Sign::Plus).expect("sampled elements share the parent");
    num::abs(&(qm.rack_value(p) - qm.rack_value(&pq)))
}

/// Every nontrivial value of a factor with all coordinates in `[−m, m]`.
pub fn value_set(model: &impl AdjointModel, max_exponent: u32) -> Vec<AdjValue> {
    let m = i64::from(max_exponent);
    let r = model.rank();
    let mut out = Vec::new();
    let mut coords = vec![-m; r];
    loop {
        let v = AdjValue::from_exponents(coords.iter().map(|&c| Int::from(c)).collect());
        if !v.is_identity() {
            out.push(v);
        }
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            if coords[i] < m {
                coords[i] += 1;
                break;
            }
            coords[i] = -m;
            i += 1;
        }
    }
}

/// Word counts for the enumeration. `starts[k][f]` is the number of
/// alternating words of exactly `k` syllables whose first syllable is not in
/// factor `f`; index `f = F` imposes no restriction. By reversal the same
/// numbers count words whose last syllable avoids `f`.
struct WordCounts {
    sizes: Vec<u128>,
    starts: Vec<Vec<u128>>,
}

impl WordCounts {
    fn new(sizes: Vec<u128>, max_len: usize) -> Self {
        let f = sizes.len();
        let mut starts = vec![vec![1u128; f + 1]];
        for k in 1..=max_len {
            let prev = &starts[k - 1];
            let row = (0..=f)
                .map(|avoid| (0..f).filter(|&s| s != avoid).map(|s| sizes[s] * prev[s]).sum())
                .collect();
            starts.push(row);
        }
        Self { sizes, starts }
    }

    fn none(&self) -> usize {
        self.sizes.len()
    }

    /// Words of length `≤ m` avoiding `f` at the open end.
    fn up_to(&self, m: usize, f: usize) -> u128 {
        (0..=m).map(|k| self.starts[k][f]).sum()
    }

    /// Nonempty words of length `≤ m` whose end syllable is in factor `f`.
    fn ending_in(&self, m: usize, f: usize) -> u128 {
        (1..=m).map(|p| self.sizes[f] * self.starts[p - 1][f]).sum()
    }
}

/// Number of reduced words within the budget.
pub fn word_count(parent: &FreeProductRack, budget: ExhaustiveBudget) -> u128 {
    let sets = value_sets(parent, budget.max_exponent);
    let counts = WordCounts::new(sets.iter().map(|s| s.len() as u128).collect(), budget.max_syllables);
    counts.up_to(budget.max_syllables, counts.none())
}

fn value_sets(parent: &FreeProductRack, max_exponent: u32) -> Vec<Vec<AdjValue>> {
    (0..parent.factor_count()).map(|f| value_set(parent.model(f), max_exponent)).collect()
}

#[derive(Clone)]
struct Partial {
    best: Option<(Rational, usize, (SyllableWord, SyllableWord))>,
    pairs: u128,
    classes: u64,
}

impl Partial {
    fn empty() -> Self {
        Self { best: None, pairs: 0, classes: 0 }
    }

    fn merge(a: Partial, b: Partial) -> Partial {
        Partial {
            best: exec::max_by_key_index(a.best, b.best),
            pairs: a.pairs + b.pairs,
            classes: a.classes + b.classes,
        }
    }
}

struct Enumerator<'a> {
    qm: &'a RolliQm,
    sets: Vec<Vec<AdjValue>>,
    counts: WordCounts,
    max_len: usize,
}

impl Enumerator<'_> {
    fn record(&self, out: &mut Partial, task: usize, count: u128, g: SyllableWord, h: SyllableWord) {
        if count == 0 {
            return;
        }
        out.pairs += count;
        out.classes += 1;
        let d = group_defect_of(self.qm, &g, &h);
        let better = match &out.best {
            None => true,
            Some((m, _, _)) => d > *m,
        };
        if better {
            out.best = Some((d, task, (g, h)));
        }
    }

    /// Records the junction classes whose cancelled block is exactly `block`.
    fn classes_at(&self, block: &[Syllable], task: usize, out: &mut Partial) {
        let none = self.counts.none();
        let last = block.last().map_or(none, |s| s.factor);
        let rem = self.max_len - block.len();
        let c = SyllableWord::factorize(block.iter().cloned());
        let c_inv = c.invert();
        let others = || (0..self.sets.len()).filter(move |&f| f != last);

        let mut clean = self.counts.up_to(rem, last).pow(2);
        for f in others() {
            clean -= self.counts.ending_in(rem, f).pow(2);
        }
        self.record(out, task, clean, c_inv.clone(), c.clone());

        if rem == 0 {
            return;
        }
        for f in others() {
            let count = self.counts.up_to(rem - 1, f).pow(2);
            for u in &self.sets[f] {
                let g = SyllableWord::factorize([Syllable { factor: f, value: u.clone() }]).multiply(&c_inv);
                for v in &self.sets[f] {
                    if u.add(v).is_identity() {
                        continue;
                    }
                    let h = c.multiply(&SyllableWord::factorize([Syllable { factor: f, value: v.clone() }]));
                    self.record(out, task, count, g.clone(), h);
                }
            }
        }
    }

    /// Visits `block` and every alternating extension within the budget.
    fn visit(&self, block: &mut Vec<Syllable>, task: usize, out: &mut Partial) {
        self.classes_at(block, task, out);
        if block.len() == self.max_len {
            return;
        }
        let last = block.last().map(|s| s.factor);
        for f in (0..self.sets.len()).filter(|&f| Some(f) != last) {
            for v in &self.sets[f] {
                block.push(Syllable { factor: f, value: v.clone() });
                self.visit(block, task, out);
                block.pop();
            }
        }
    }
}

/// Exact maximum of `|φ(g) + φ(h) − φ(gh)|` over all pairs of reduced words
/// with at most `max_syllables` syllables and coordinates in
/// `[−max_exponent, max_exponent]`.
pub fn exhaustive_group_defect(qm: &RolliQm, parent: &FreeProductRack, budget: ExhaustiveBudget, execution: Execution) -> GroupDefectReport {
    assert_eq!(qm.parent_id(), parent.id(), "quasimorphism bound to a different free product");
    let sets = value_sets(parent, budget.max_exponent);
    let counts = WordCounts::new(sets.iter().map(|s| s.len() as u128).collect(), budget.max_syllables);
    let total = counts.up_to(budget.max_syllables, counts.none());
    let e = Enumerator { qm, sets, counts, max_len: budget.max_syllables };

    // Task 0 is the empty block alone; task i > 0 roots the blocks starting
    // with the (i−1)-th syllable.
    let roots: Vec<Syllable> = (0..e.sets.len())
        .flat_map(|f| e.sets[f].iter().map(move |v| Syllable { factor: f, value: v.clone() }))
        .collect();
    let partial = exec::map_reduce(
        execution,
        roots.len() + 1,
        |task| {
            let mut out = Partial::empty();
            if task == 0 {
                e.classes_at(&[], 0, &mut out);
            } else if e.max_len >= 1 {
                let mut block = vec![roots[task - 1].clone()];
                e.visit(&mut block, task, &mut out);
            }
            out
        },
        Partial::empty(),
        Partial::merge,
    );
    assert_eq!(partial.pairs, total * total, "junction classes must cover every pair exactly once");
    let (max, witness) = match partial.best {
        Some((d, _, w)) => (d, Some(w)),
        None => (Rational::ZERO, None),
    };
    GroupDefectReport { max, witness, pairs: partial.pairs, classes: partial.classes }
}

/// Maximum defect over seeded random pairs biased towards cancellation.
pub fn sampled_group_defect(qm: &RolliQm, parent: &FreeProductRack, cfg: &SamplerConfig) -> GroupDefectReport {
    let best = exec::map_reduce(
        cfg.execution,
        cfg.samples,
        |i| {
            let mut rng = cfg.rng(i);
            let (g, h) = sample::correlated_group_pair(&mut rng, parent, cfg);
            Some((group_defect_of(qm, &g, &h), i, (g, h)))
        },
        None,
        exec::max_by_key_index,
    );
    let (max, witness) = match best {
        Some((d, _, w)) => (d, Some(w)),
        None => (Rational::ZERO, None),
    };
    GroupDefectReport { max, witness, pairs: cfg.samples as u128, classes: 0 }
}

/// Exhaustive enumeration within `budget` followed by random sampling.
pub fn group_defect_estimate(qm: &RolliQm, parent: &FreeProductRack, budget: ExhaustiveBudget, cfg: &SamplerConfig) -> GroupDefectReport {
    let ex = exhaustive_group_defect(qm, parent, budget, cfg.execution);
    let sampled = sampled_group_defect(qm, parent, cfg);
    let pairs = ex.pairs + sampled.pairs;
    let classes = ex.classes;
    let mut best = if sampled.max > ex.max { sampled } else { ex };
    best.pairs = pairs;
    best.classes = classes;
    best
}

/// Maximum of `|φ̂(p) − φ̂(p ◁ q)|` over seeded random pairs.
pub fn rack_defect_estimate(qm: &RolliQm, parent: &FreeProductRack, cfg: &SamplerConfig) -> RackDefectReport {
    assert_eq!(qm.parent_id(), parent.id(), "quasimorphism bound to a different free product");
    let best = exec::map_reduce(
        cfg.execution,
        cfg.samples,
        |i| {
            let mut rng = cfg.rng(i);
            let (p, q) = sample::correlated_pair(&mut rng, parent, cfg);
            Some((rack_defect_of(qm, parent, &p, &q), i, (p, q)))
        },
        None,
        exec::max_by_key_index,
    );
    let (max, witness) = match best {
        Some((d, _, w)) => (d, Some(w)),
        None => (Rational::ZERO, None),
    };
    RackDefectReport { max, witness, samples: cfg.samples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasimorphism::{rolli_qm, LambdaFamily};

    #[test]
    fn value_sets_and_counts() {
        let parent = FreeProductRack::trivial_product(&[("a", 1), ("b", 2)]).unwrap();
        assert_eq!(value_set(parent.model(0), 2).len(), 4);
        assert_eq!(value_set(parent.model(1), 1).len(), 8);
        let fr = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        // 1 + 2·(6 + 36 + 216)
        assert_eq!(word_count(&fr, ExhaustiveBudget { max_syllables: 3, max_exponent: 3 }), 517);
    }

    #[test]
    fn zero_family_has_zero_defect() {
        let parent = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        let qm = rolli_qm(&LambdaFamily::zero(&["a", "b"]), &parent).unwrap();
        let r = exhaustive_group_defect(&qm, &parent, ExhaustiveBudget { max_syllables: 3, max_exponent: 2 }, Execution::Sequential);
        assert_eq!(r.max, Rational::ZERO);
        let cfg = SamplerConfig::default().with_samples(200);
        assert_eq!(rack_defect_estimate(&qm, &parent, &cfg).max, Rational::ZERO);
    }

    #[test]
    fn execution_modes_agree() {
        let parent = FreeProductRack::free_rack(&["a", "b"]).unwrap();
        let qm = rolli_qm(&LambdaFamily::sign(&["a", "b"]), &parent).unwrap();
        let budget = ExhaustiveBudget { max_syllables: 3, max_exponent: 2 };
        let s = exhaustive_group_defect(&qm, &parent, budget, Execution::Sequential);
        let p = exhaustive_group_defect(&qm, &parent, budget, Execution::Parallel);
        assert_eq!((s.max.clone(), s.witness.clone(), s.classes), (p.max, p.witness, p.classes));
        let cfg = SamplerConfig::default().with_samples(300);
        let a = rack_defect_estimate(&qm, &parent, &cfg);
        let b = rack_defect_estimate(&qm, &parent, &SamplerConfig { execution: Execution::Sequential, ..cfg });
        assert_eq!((a.max, a.witness), (b.max, b.witness));
    }
}
