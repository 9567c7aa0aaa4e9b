//! Adjoint groups `Ad(X) = ⟨e_x | e_x e_y = e_y e_{x◁y}⟩`.
//!
//! For a finite rack the full presentation is emitted, and generator
//! rewriting along witness paths is supported. Decidable arithmetic is
//! provided for the two factor classes used by free products: trivial racks
//! (free abelian adjoint group) and the one-generator free rack (infinite
//! cyclic adjoint group acting by translation).

use std::collections::BTreeSet;
use std::fmt;

use smallvec::{smallvec, SmallVec};
use thiserror::Error;

use crate::num::{self, Int};
use crate::rack::FiniteRack;
use crate::word::{AbelianWord, GroupWord};
use crate::Sign;

pub fn generator_name(prefix: &str, index: usize) -> String {
    format!("{prefix}.{index}")
}

/// The presentation of `Ad(X)` with one relator `e_x e_y e_{x◁y}⁻¹ e_y⁻¹`
/// per ordered pair, kept even when it reduces to the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<GroupWord>,
}

pub fn presentation(rack: &FiniteRack, prefix: &str) -> AdjointPresentation {
    let n = rack.size();
    let e = |i: usize, k: i64| (generator_name(prefix, i), Int::from(k));
    let generators = (0..n).map(|i| generator_name(prefix, i)).collect();
    let relators = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .map(|(x, y)| GroupWord::reduce([e(x, 1), e(y, 1), e(rack.op(x, y), -1), e(y, -1)]))
        .collect();
    AdjointPresentation { generators, relators }
}

impl AdjointPresentation {
    /// Text export: a `generators:` header, then one relator per line.
    /// Relators that reduce to the identity appear as empty lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.generators.join(" "));
        for r in &self.relators {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpressionError {
    #[error("the given set does not generate the rack; {missing} elements are unreachable")]
    NotGenerating { missing: usize },
    #[error("element {0} is out of range")]
    OutOfRange(usize),
}

/// Rewrites `e_x` over `{e_s : s ∈ gens}` using the breadth-first witness
/// `x = s₀ ◁^{ε₁} s₁ ⋯ ◁^{εₙ} sₙ`, giving
/// `e_x = e_{sₙ}^{−εₙ} ⋯ e_{s₁}^{−ε₁} e_{s₀} e_{s₁}^{ε₁} ⋯ e_{sₙ}^{εₙ}`.
pub fn express_generator(rack: &FiniteRack, gens: &[usize], x: usize, prefix: &str) -> Result<GroupWord, ExpressionError> {
    if x >= rack.size() {
        return Err(ExpressionError::OutOfRange(x));
    }
    let generation = rack.generation(gens);
    if !generation.is_generating() {
        let missing = rack.size() - generation.closure().len();
        return Err(ExpressionError::NotGenerating { missing });
    }
    let path = generation.witness(x).expect("generating sets reach every element");
    let conj: Vec<(String, Int)> = path
        .moves
        .iter()
        .map(|&(s, sign)| (generator_name(prefix, s), Int::from(sign.as_i64())))
        .collect();
    let left = conj.iter().rev().map(|(g, e)| (g.clone(), -e.clone()));
    let middle = std::iter::once((generator_name(prefix, path.start), Int::ONE));
    Ok(GroupWord::reduce(left.chain(middle).chain(conj.iter().cloned())))
}

fn generator_index(name: &str, prefix: &str, size: usize) -> Option<usize> {
    let idx: usize = name.strip_prefix(prefix)?.strip_prefix('.')?.parse().ok()?;
    (idx < size).then_some(idx)
}

/// The action of a word over `{e_s}` on a rack element, `x · w`.
/// Returns `None` if the word mentions an unknown generator.
pub fn act_word(rack: &FiniteRack, x: usize, w: &GroupWord, prefix: &str) -> Option<usize> {
    let mut x = x;
    for (name, exp) in w.syllables() {
        let s = generator_index(name, prefix, rack.size())?;
        let k = i64::try_from(exp).ok().unwrap_or_else(|| {
            // ψ_s has finite order dividing the size factorial; reduce first.
            let period = Int::from(permutation_order(&rack.psi(s)));
            i64::try_from(exp % &period).expect("reduced exponent fits")
        });
        x = rack.op_pow(x, s, k);
    }
    Some(x)
}

fn permutation_order(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order: u64 = 1;
    for start in 0..perm.len() {
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            order = lcm(order, len);
        }
    }
    order
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Checks `w = e_x` as far as it can be decided without solving the word
/// problem in `Ad(X)`: `w` and `e_x` must act identically on every element
/// and have the same image in `Ad(X)^ab ≅ Z^{components}`. A `false` answer
/// is conclusive; a `true` answer is not a proof of equality in general.
pub fn verify_expression(rack: &FiniteRack, x: usize, w: &GroupWord, prefix: &str) -> bool {
    if x >= rack.size() {
        return false;
    }
    let acts = (0..rack.size()).all(|y| act_word(rack, y, w, prefix) == Some(rack.op(y, x)));
    if !acts {
        return false;
    }
    let comps = rack.components();
    let mut sums = vec![Int::ZERO; comps.count];
    for (name, exp) in w.syllables() {
        let Some(s) = generator_index(name, prefix, rack.size()) else {
            return false;
        };
        sums[comps.component_of[s]] += exp;
    }
    let mut expected = vec![Int::ZERO; comps.count];
    expected[comps.component_of[x]] = Int::ONE;
    sums == expected
}

/// An element of a free abelian group `Z^r`, as a dense exponent vector.
/// Rank-one values stay inline.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdjValue(SmallVec<[Int; 1]>);

impl AdjValue {
    pub fn zero(rank: usize) -> Self {
        AdjValue(smallvec![Int::ZERO; rank])
    }

    pub fn unit(rank: usize, i: usize, exp: Int) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = exp;
        v
    }

    pub fn from_exponents(exps: Vec<Int>) -> Self {
        AdjValue(SmallVec::from_vec(exps))
    }

    pub fn scalar(exp: Int) -> Self {
        AdjValue(smallvec![exp])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[Int] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Int::is_zero)
    }

    pub fn add(&self, other: &AdjValue) -> AdjValue {
        debug_assert_eq!(self.rank(), other.rank());
        AdjValue(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> AdjValue {
        AdjValue(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, k: &Int) -> AdjValue {
        AdjValue(self.0.iter().map(|a| a * k).collect())
    }

    pub fn total(&self) -> Int {
        self.0.iter().fold(Int::ZERO, |acc, a| acc + a)
    }

    /// `Some((i, k))` when the value is `e_i^k` for a single coordinate.
    pub fn as_single_power(&self) -> Option<(usize, &Int)> {
        let mut found = None;
        for (i, a) in self.0.iter().enumerate() {
            if !a.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((i, a));
            }
        }
        found
    }

    /// True when the first nonzero coordinate is positive; exactly one of
    /// `g`, `g⁻¹` has this property for `g ≠ 1`.
    pub fn is_positive_representative(&self) -> bool {
        self.0.iter().find(|a| !a.is_zero()).is_some_and(|a| !num::is_negative(a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Trivial rack of the given size; the adjoint group is `Z^rank`.
    FreeAbelian { rank: usize },
    /// One-generator free rack; the adjoint group is the free group of rank one.
    FreeGroup,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::FreeAbelian { rank } => write!(f, "free-abelian(rank {rank})"),
            ModelKind::FreeGroup => f.write_str("free-group(rank 1)"),
        }
    }
}

/// A factor rack together with decidable arithmetic in its adjoint group.
/// Rack elements are integers; for finite carriers they are `0..size`.
pub trait AdjointModel {
    fn kind(&self) -> ModelKind;

    /// Rank of the free abelian group holding adjoint values.
    fn rank(&self) -> usize;

    /// `None` for an infinite carrier.
    fn carrier_size(&self) -> Option<usize>;

    fn contains(&self, x: &Int) -> bool;

    fn is_quandle(&self) -> bool;

    fn rack_op(&self, x: &Int, y: &Int) -> Int;

    /// The generator `e_x`.
    fn embed(&self, x: &Int) -> AdjValue;

    /// `x · g`.
    fn act(&self, x: &Int, g: &AdjValue) -> Int;

    /// Number of orbits of the adjoint action.
    fn orbit_count(&self) -> usize;

    fn identity(&self) -> AdjValue {
        AdjValue::zero(self.rank())
    }

    fn multiply(&self, g: &AdjValue, h: &AdjValue) -> AdjValue {
        g.add(h)
    }

    fn invert(&self, g: &AdjValue) -> AdjValue {
        g.neg()
    }

    fn is_identity(&self, g: &AdjValue) -> bool {
        g.is_identity()
    }

    /// Canonical normal form as a word over `prefix.i` generators, sorted by
    /// coordinate.
    fn normal_form(&self, g: &AdjValue, prefix: &str) -> AbelianWord {
        AbelianWord::from_pairs(
            g.exponents()
                .iter()
                .enumerate()
                .map(|(i, e)| (generator_name(prefix, i), e.clone())),
        )
    }

    /// Inverse of [`AdjointModel::normal_form`]; `None` for an unknown generator.
    fn from_normal_form(&self, w: &AbelianWord, prefix: &str) -> Option<AdjValue> {
        let mut v = self.identity();
        for (name, e) in w.exponents() {
            let i: usize = name.strip_prefix(prefix)?.strip_prefix('.')?.parse().ok()?;
            if i >= self.rank() {
                return None;
            }
            v.0[i] += e;
        }
        Some(v)
    }
}

/// Trivial rack `T_n` with adjoint group `Z^n` acting trivially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrivialRackModel {
    size: usize,
}

pub fn trivial_rack_model(n: usize) -> TrivialRackModel {
    assert!(n >= 1, "a trivial rack needs at least one element");
    TrivialRackModel { size: n }
}

impl AdjointModel for TrivialRackModel {
    fn kind(&self) -> ModelKind {
        ModelKind::FreeAbelian { rank: self.size }
    }

    fn rank(&self) -> usize {
        self.size
    }

    fn carrier_size(&self) -> Option<usize> {
        Some(self.size)
    }

    fn contains(&self, x: &Int) -> bool {
        !num::is_negative(x) && *x < Int::from(self.size)
    }

    fn is_quandle(&self) -> bool {
        true
    }

    fn rack_op(&self, x: &Int, _y: &Int) -> Int {
        x.clone()
    }

    fn embed(&self, x: &Int) -> AdjValue {
        let i = usize::try_from(x).expect("element of a trivial rack");
        AdjValue::unit(self.size, i, Int::ONE)
    }

    fn act(&self, x: &Int, _g: &AdjValue) -> Int {
        x.clone()
    }

    fn orbit_count(&self) -> usize {
        self.size
    }
}

/// The free rack on one generator: carrier `Z` with `k ◁ j = k + 1`. All
/// generators `e_k` coincide, so the adjoint group is `Z` and `e^m` acts by
/// translation by `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FreeRackModel;

impl AdjointModel for FreeRackModel {
    fn kind(&self) -> ModelKind {
        ModelKind::FreeGroup
    }

    fn rank(&self) -> usize {
        1
    }

    fn carrier_size(&self) -> Option<usize> {
        None
    }

    fn contains(&self, _x: &Int) -> bool {
        true
    }

    fn is_quandle(&self) -> bool {
        false
    }

    fn rack_op(&self, x: &Int, _y: &Int) -> Int {
        x + Int::ONE
    }

    fn embed(&self, _x: &Int) -> AdjValue {
        AdjValue::scalar(Int::ONE)
    }

    fn act(&self, x: &Int, g: &AdjValue) -> Int {
        x + &g.exponents()[0]
    }

    fn orbit_count(&self) -> usize {
        1
    }
}

/// The closed set of factor models, dispatched statically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorModel {
    Trivial(TrivialRackModel),
    FreeRack(FreeRackModel),
}

macro_rules! dispatch {
    ($self:ident, $m:ident => $e:expr) => {
        match $self {
            FactorModel::Trivial($m) => $e,
            FactorModel::FreeRack($m) => $e,
        }
    };
}

impl AdjointModel for FactorModel {
    fn kind(&self) -> ModelKind {
        dispatch!(self, m => m.kind())
    }

    fn rank(&self) -> usize {
        dispatch!(self, m => m.rank())
    }

    fn carrier_size(&self) -> Option<usize> {
        dispatch!(self, m => m.carrier_size())
    }

    fn contains(&self, x: &Int) -> bool {
        dispatch!(self, m => m.contains(x))
    }

    fn is_quandle(&self) -> bool {
        dispatch!(self, m => m.is_quandle())
    }

    fn rack_op(&self, x: &Int, y: &Int) -> Int {
        dispatch!(self, m => m.rack_op(x, y))
    }

    fn embed(&self, x: &Int) -> AdjValue {
        dispatch!(self, m => m.embed(x))
    }

    fn act(&self, x: &Int, g: &AdjValue) -> Int {
        dispatch!(self, m => m.act(x, g))
    }

    fn orbit_count(&self) -> usize {
        dispatch!(self, m => m.orbit_count())
    }
}

/// `x ◁^{sign} y` inside a single factor, via the adjoint action.
pub fn signed_op<M: AdjointModel + ?Sized>(model: &M, x: &Int, y: &Int, sign: Sign) -> Int {
    let e = model.embed(y);
    match sign {
        Sign::Plus => model.act(x, &e),
        Sign::Minus => model.act(x, &model.invert(&e)),
    }
}

/// Generator names `prefix.i` appearing in a presentation.
pub fn generator_set(prefix: &str, size: usize) -> BTreeSet<String> {
    (0..size).map(|i| generator_name(prefix, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rack::FiniteGroup;

    #[test]
    fn presentations() {
        let t2 = presentation(&FiniteRack::trivial(2), "e");
        assert_eq!(t2.relators.len(), 4);
        // x◁y = x turns every relator into a commutator.
        let comm: GroupWord = "e.0 e.1 e.0^-1 e.1^-1".parse().unwrap();
        assert_eq!(t2.relators[1], comm);
        assert!(t2.relators[0].is_identity());

        let one = presentation(&FiniteRack::trivial(1), "e");
        assert_eq!(one.relators.len(), 1);
        assert!(one.relators[0].is_identity());

        let r3 = presentation(&FiniteRack::dihedral(3), "e");
        assert_eq!(r3.relators.len(), 9);
        // (0, 1): e0 e1 = e1 e2
        assert_eq!(r3.relators[1], "e.0 e.1 e.2^-1 e.1^-1".parse().unwrap());
        let text = r3.to_text();
        assert!(text.starts_with("generators: e.0 e.1 e.2\n"));
        assert_eq!(text.lines().count(), 10);
    }

    #[test]
    fn trivial_model_examples() {
        let z = trivial_rack_model(1);
        assert_eq!(z.embed(&Int::ZERO), AdjValue::scalar(Int::ONE));
        let m = trivial_rack_model(2);
        let e0 = m.embed(&Int::ZERO);
        let e1 = m.embed(&Int::ONE);
        let prod = m.multiply(&e0.scale(&Int::from(2)), &m.multiply(&e1, &e0));
        assert_eq!(m.normal_form(&prod, "t").to_string(), "t.0^3 t.1");
        assert_eq!(m.act(&Int::ONE, &e0.scale(&Int::from(5))), Int::ONE);
        let back = m.from_normal_form(&m.normal_form(&prod, "t"), "t").unwrap();
        assert_eq!(back, prod);
    }

    #[test]
    fn free_rack_model_is_a_rack() {
        let m = FreeRackModel;
        for x in -3i64..3 {
            for y in -3i64..3 {
                for z in -3i64..3 {
                    let (x, y, z) = (Int::from(x), Int::from(y), Int::from(z));
                    let lhs = m.rack_op(&m.rack_op(&x, &y), &z);
                    let rhs = m.rack_op(&m.rack_op(&x, &z), &m.rack_op(&y, &z));
                    assert_eq!(lhs, rhs);
                }
                let (xi, yi) = (Int::from(x), Int::from(y));
                assert_eq!(signed_op(&m, &signed_op(&m, &xi, &yi, Sign::Plus), &yi, Sign::Minus), xi);
            }
        }
        assert_ne!(m.rack_op(&Int::ZERO, &Int::ZERO), Int::ZERO);
    }

    #[test]
    fn expressions() {
        let r = FiniteRack::dihedral(3);
        let w = express_generator(&r, &[0, 1], 2, "e").unwrap();
        assert_eq!(w.to_string(), "e.1^-1 e.0 e.1");
        assert!(verify_expression(&r, 2, &w, "e"));
        assert_eq!(express_generator(&r, &[0, 1], 0, "e").unwrap().to_string(), "e.0");
        assert!(!verify_expression(&r, 0, &"e.0^2".parse().unwrap(), "e"));

        let t = FiniteRack::trivial(3);
        for x in 0..3 {
            let w = express_generator(&t, &[0, 1, 2], x, "e").unwrap();
            assert_eq!(w, GroupWord::generator(&generator_name("e", x)));
            assert!(verify_expression(&t, x, &w, "e"));
        }
        assert!(matches!(
            express_generator(&t, &[0], 1, "e"),
            Err(ExpressionError::NotGenerating { missing: 2 })
        ));
    }

    #[test]
    fn expressions_verify_on_conjugation_racks() {
        let q = FiniteRack::conjugation(&FiniteGroup::symmetric(3));
        let comps = q.components();
        // One generator per component plus enough to reach everything.
        let gens: Vec<usize> = (0..q.size()).collect();
        for x in 0..q.size() {
            let w = express_generator(&q, &gens, x, "e").unwrap();
            assert!(verify_expression(&q, x, &w, "e"));
        }
        assert_eq!(comps.count, 3);
    }

    #[test]
    fn big_exponents_act_through_the_period() {
        let r = FiniteRack::dihedral(3);
        let w: GroupWord = "e.1^100000000000000000001".parse().unwrap();
        assert_eq!(act_word(&r, 0, &w, "e"), Some(r.op(0, 1)));
    }
}
