//! Finite racks and quandles given by operation tables.
//!
//! `table[i][j]` is the index of `elementᵢ ◁ elementⱼ`. A table is a rack
//! when every column map `i ↦ table[i][j]` is a permutation and the rack
//! identity `(i◁j)◁k = (i◁k)◁(j◁k)` holds; it is a quandle when moreover
//! `i◁i = i`. Validation is exhaustive.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::Sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RackKind {
    Rack,
    Quandle,
}

impl fmt::Display for RackKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RackKind::Rack => "rack",
            RackKind::Quandle => "quandle",
        })
    }
}

/// Axiom violations carry the witness that breaks them; shape errors are
/// reported separately so callers can tell malformed input from a table
/// that is well-formed but not a rack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RackError {
    #[error("empty table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry table[{row}][{col}] = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("{count} labels for {size} elements")]
    LabelCount { count: usize, size: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("right-invertibility fails: column {y} sends both {x1} and {x2} to {image}")]
    NotBijective { y: usize, x1: usize, x2: usize, image: usize },
    #[error("rack identity fails at (x, y, z) = ({x}, {y}, {z}): (x◁y)◁z = {lhs} but (x◁z)◁(y◁z) = {rhs}")]
    RackIdentity { x: usize, y: usize, z: usize, lhs: usize, rhs: usize },
    #[error("idempotence fails at x = {x}: x◁x = {image}")]
    NotIdempotent { x: usize, image: usize },
}

impl RackError {
    /// The violated axiom, or `None` for a malformed table.
    pub fn axiom(&self) -> Option<&'static str> {
        match self {
            RackError::NotBijective { .. } => Some("right-invertibility"),
            RackError::RackIdentity { .. } => Some("rack identity"),
            RackError::NotIdempotent { .. } => Some("idempotence"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRack {
    name: String,
    labels: Vec<String>,
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    kind: RackKind,
}

fn check_shape(table: &[Vec<usize>]) -> Result<usize, RackError> {
    let n = table.len();
    if n == 0 {
        return Err(RackError::Empty);
    }
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            return Err(RackError::NotSquare { row, len: r.len(), expected: n });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(RackError::OutOfRange { row, col, value });
        }
    }
    Ok(n)
}

impl FiniteRack {
    /// Validates a table. A `Rack` claim is upgraded to `Quandle` when
    /// idempotence holds; a `Quandle` claim must satisfy it.
    pub fn new(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>, claim: RackKind) -> Result<Self, RackError> {
        let n = check_shape(&table)?;
        if labels.len() != n {
            return Err(RackError::LabelCount { count: labels.len(), size: n });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(RackError::DuplicateLabel(l.clone()));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let op = |x: usize, y: usize| flat[x * n + y];

        let mut inverse = vec![usize::MAX; n * n];
        for y in 0..n {
            for x in 0..n {
                let image = op(x, y);
                let slot = &mut inverse[image * n + y];
                if *slot != usize::MAX {
                    return Err(RackError::NotBijective { y, x1: *slot, x2: x, image });
                }
                *slot = x;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = op(x, y);
                for z in 0..n {
                    let lhs = op(xy, z);
                    let rhs = op(op(x, z), op(y, z));
                    if lhs != rhs {
                        return Err(RackError::RackIdentity { x, y, z, lhs, rhs });
                    }
                }
            }
        }
        let idempotent_failure = (0..n).find(|&x| op(x, x) != x);
        let kind = match (claim, idempotent_failure) {
            (RackKind::Quandle, Some(x)) => return Err(RackError::NotIdempotent { x, image: op(x, x) }),
            (_, None) => RackKind::Quandle,
            (RackKind::Rack, Some(_)) => RackKind::Rack,
        };
        Ok(Self { name: name.to_string(), labels, n, table: flat, inverse, kind })
    }

    /// Validates a bare table with labels `0..n`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, RackError> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::new("X", labels, table, RackKind::Rack)
    }

    /// Trivial rack `T_n`: `x ◁ y = x`.
    pub fn trivial(n: usize) -> Self {
        assert!(n >= 1, "trivial rack needs at least one element");
        let table = (0..n).map(|i| vec![i; n]).collect();
        Self::new(&format!("T{n}"), (0..n).map(|i| i.to_string()).collect(), table, RackKind::Rack)
            .expect("trivial rack is valid")
    }

    /// Dihedral quandle `R_n`: `x ◁ y = 2y − x mod n`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral quandle needs at least one element");
        let table = (0..n).map(|i| (0..n).map(|j| (2 * j + n - i) % n).collect()).collect();
        Self::new(&format!("R{n}"), (0..n).map(|i| i.to_string()).collect(), table, RackKind::Rack)
            .expect("dihedral quandle is valid")
    }

    /// Conjugation rack of a group: `g ◁ h = h⁻¹ g h`.
    pub fn conjugation(group: &FiniteGroup) -> Self {
        let n = group.order();
        let table = (0..n)
            .map(|g| (0..n).map(|h| group.mul(group.mul(group.inverse(h), g), h)).collect())
            .collect();
        Self::new(&format!("Conj({})", group.name()), group.labels().to_vec(), table, RackKind::Rack)
            .expect("conjugation of a valid group is a rack")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RackKind {
        self.kind
    }

    pub fn is_quandle(&self) -> bool {
        self.kind == RackKind::Quandle
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.op(x, y) == x))
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// `x ◁⁻¹ y`, the unique `w` with `w ◁ y = x`.
    #[inline]
    pub fn op_inv(&self, x: usize, y: usize) -> usize {
        self.inverse[x * self.n + y]
    }

    #[inline]
    pub fn op_signed(&self, x: usize, y: usize, sign: Sign) -> usize {
        match sign {
            Sign::Plus => self.op(x, y),
            Sign::Minus => self.op_inv(x, y),
        }
    }

    /// `ψ_y^k (x) = x ◁^k y` for any integer `k`.
    pub fn op_pow(&self, mut x: usize, y: usize, k: i64) -> usize {
        let sign = if k < 0 { Sign::Minus } else { Sign::Plus };
        // ψ_y has order dividing n!, but iterating |k| mod the cycle length is enough.
        let steps = self.cycle_length(x, y);
        for _ in 0..(k.unsigned_abs() % steps as u64) {
            x = self.op_signed(x, y, sign);
        }
        x
    }

    fn cycle_length(&self, x: usize, y: usize) -> usize {
        let mut z = self.op(x, y);
        let mut len = 1;
        while z != x {
            z = self.op(z, y);
            len += 1;
        }
        len
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The permutation `ψ_y`.
    pub fn psi(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op(x, y)).collect()
    }

    pub fn psi_inverse(&self, y: usize) -> Vec<usize> {
        (0..self.n).map(|x| self.op_inv(x, y)).collect()
    }

    /// Relabels elements along `perm` (old index `i` becomes `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> FiniteRack {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut table = vec![vec![0; n]; n];
        let mut labels = vec![String::new(); n];
        for i in 0..n {
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..n {
                table[perm[i]][perm[j]] = perm[self.op(i, j)];
            }
        }
        FiniteRack::new(&self.name, labels, table, self.kind).expect("relabeling preserves the axioms")
    }

    /// Orbits of the group generated by all `ψ_y^{±1}`.
    pub fn components(&self) -> ComponentPartition {
        let mut component_of = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if component_of[start] != usize::MAX {
                continue;
            }
            component_of[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for y in 0..self.n {
                    for z in [self.op(x, y), self.op_inv(x, y)] {
                        if component_of[z] == usize::MAX {
                            component_of[z] = count;
                            queue.push_back(z);
                        }
                    }
                }
            }
            count += 1;
        }
        ComponentPartition { component_of, count }
    }

    /// Closure of `subset` under `◁^{±1}` by members of `subset`, with one
    /// breadth-first witness expression per reached element.
    pub fn generation(&self, subset: &[usize]) -> Generation {
        let mut witness: Vec<Option<WitnessPath>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in subset {
            assert!(s < self.n, "subset element {s} out of range");
            if witness[s].is_none() {
                witness[s] = Some(WitnessPath { start: s, moves: Vec::new() });
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &s in subset {
                for sign in [Sign::Plus, Sign::Minus] {
                    let z = self.op_signed(x, s, sign);
                    if witness[z].is_none() {
                        let mut path = witness[x].clone().expect("reached elements carry a witness");
                        path.moves.push((s, sign));
                        witness[z] = Some(path);
                        queue.push_back(z);
                    }
                }
            }
        }
        Generation { witness }
    }

    pub fn is_generating(&self, subset: &[usize]) -> bool {
        self.generation(subset).is_generating()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    /// Component sizes in ascending order.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.component_of {
            sizes[c] += 1;
        }
        sizes.sort_unstable();
        sizes
    }

    pub fn members(&self, component: usize) -> Vec<usize> {
        (0..self.component_of.len()).filter(|&i| self.component_of[i] == component).collect()
    }
}

/// `x = start ◁^{ε₁} s₁ ◁^{ε₂} ⋯ ◁^{εₙ} sₙ`, evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPath {
    pub start: usize,
    pub moves: Vec<(usize, Sign)>,
}

impl WitnessPath {
    pub fn evaluate(&self, rack: &FiniteRack) -> usize {
        self.moves.iter().fold(self.start, |x, &(s, sign)| rack.op_signed(x, s, sign))
    }
}

#[derive(Debug, Clone)]
pub struct Generation {
    witness: Vec<Option<WitnessPath>>,
}

impl Generation {
    pub fn is_generating(&self) -> bool {
        self.witness.iter().all(Option::is_some)
    }

    pub fn closure(&self) -> Vec<usize> {
        (0..self.witness.len()).filter(|&i| self.witness[i].is_some()).collect()
    }

    pub fn witness(&self, x: usize) -> Option<&WitnessPath> {
        self.witness.get(x).and_then(Option::as_ref)
    }
}

/// Exhaustive check of `f(x ◁ y) = f(x) ◁ f(y)`.
pub fn is_homomorphism(f: &[usize], source: &FiniteRack, target: &FiniteRack) -> bool {
    assert_eq!(f.len(), source.size(), "map must be total on the source");
    if f.iter().any(|&v| v >= target.size()) {
        return false;
    }
    (0..source.size()).all(|x| (0..source.size()).all(|y| f[source.op(x, y)] == target.op(f[x], f[y])))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("malformed table: {0}")]
    Shape(RackError),
    #[error("{count} labels for {size} elements")]
    LabelCount { count: usize, size: usize },
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("declared inverse of {element} is {declared}, but {element}·{declared} is not the identity")]
    InverseMismatch { element: usize, declared: usize },
}

/// A finite group by Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    n: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table; `inverse`, when supplied, must agree with it.
    pub fn new(
        name: &str,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
        inverse: Option<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = check_shape(&table).map_err(GroupError::Shape)?;
        if labels.len() != n {
            return Err(GroupError::LabelCount { count: labels.len(), size: n });
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let mul = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;
        let computed: Vec<usize> = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                    .ok_or(GroupError::NoInverse(a))
            })
            .collect::<Result<_, _>>()?;
        if let Some(declared) = inverse {
            for (element, (&d, &c)) in declared.iter().zip(&computed).enumerate() {
                if d != c {
                    return Err(GroupError::InverseMismatch { element, declared: d });
                }
            }
            if declared.len() != n {
                return Err(GroupError::LabelCount { count: declared.len(), size: n });
            }
        }
        Ok(Self { name: name.to_string(), labels, n, table: flat, identity, inverse: computed })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(&format!("Z{n}"), (0..n).map(|i| i.to_string()).collect(), table, None)
            .expect("cyclic group is valid")
    }

    pub fn trivial() -> Self {
        let mut g = Self::cyclic(1);
        g.name = "1".into();
        g
    }

    /// Symmetric group on `k` letters with product `(σ·τ)(i) = τ(σ(i))`;
    /// elements are labeled in cycle notation on letters `1..=k`.
    pub fn symmetric(k: usize) -> Self {
        assert!((1..=6).contains(&k), "symmetric groups are built for k ≤ 6");
        let perms = permutations(k);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&s.iter().map(|&i| t[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::new(&format!("S{k}"), labels, table, None).expect("symmetric group is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_singleton_are_quandles() {
        let t = FiniteRack::from_table(vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap();
        assert_eq!(t.kind(), RackKind::Quandle);
        assert_eq!(FiniteRack::from_table(vec![vec![0]]).unwrap().kind(), RackKind::Quandle);
    }

    #[test]
    fn dihedral_three_is_a_quandle() {
        let table = (0..3).map(|i| (0..3).map(|j| (2 * j + 3 - i) % 3).collect()).collect();
        let r = FiniteRack::from_table(table).unwrap();
        assert!(r.is_quandle());
        assert_eq!(r, FiniteRack::dihedral(3).permuted(&[0, 1, 2]).renamed("X"));
    }

    impl FiniteRack {
        fn renamed(mut self, name: &str) -> Self {
            self.name = name.into();
            self
        }
    }

    #[test]
    fn axiom_violations_name_a_witness() {
        let e = FiniteRack::from_table(vec![vec![0, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(e.axiom(), Some("right-invertibility"));
        assert!(matches!(e, RackError::NotBijective { y: 0, .. }));
        // x◁y = x+1 mod 3 is a rack but not a quandle.
        let shift: Vec<Vec<usize>> = (0..3).map(|i| vec![(i + 1) % 3; 3]).collect();
        let r = FiniteRack::from_table(shift.clone()).unwrap();
        assert_eq!(r.kind(), RackKind::Rack);
        let e = FiniteRack::new("S", (0..3).map(|i| i.to_string()).collect(), shift, RackKind::Quandle).unwrap_err();
        assert_eq!(e, RackError::NotIdempotent { x: 0, image: 1 });
        // Permutation columns that break self-distributivity.
        let bad = vec![vec![1, 0, 0], vec![0, 1, 2], vec![2, 2, 1]];
        let e = FiniteRack::from_table(bad).unwrap_err();
        assert_eq!(e.axiom(), Some("rack identity"));
        assert!(matches!(FiniteRack::from_table(vec![vec![0, 5], vec![1, 1]]), Err(RackError::OutOfRange { .. })));
        assert!(matches!(FiniteRack::from_table(vec![vec![0, 1], vec![1]]), Err(RackError::NotSquare { .. })));
        assert_eq!(FiniteRack::from_table(vec![]), Err(RackError::Empty));
    }

    #[test]
    fn conjugation_racks() {
        let c3 = FiniteRack::conjugation(&FiniteGroup::cyclic(3));
        assert!(c3.is_trivial());
        let triv = FiniteRack::conjugation(&FiniteGroup::trivial());
        assert_eq!(triv.size(), 1);
        assert!(triv.is_quandle());

        let s3 = FiniteGroup::symmetric(3);
        let q = FiniteRack::conjugation(&s3);
        assert_eq!(q.size(), 6);
        assert!(q.is_quandle());
        let t12 = q.index_of("(1 2)").unwrap();
        let t13 = q.index_of("(1 3)").unwrap();
        let t23 = q.index_of("(2 3)").unwrap();
        assert_eq!(q.op(t12, t13), t23);
    }

    #[test]
    fn component_examples() {
        assert_eq!(FiniteRack::trivial(4).components().count, 4);
        assert_eq!(FiniteRack::dihedral(3).components().count, 1);
        assert_eq!(FiniteRack::trivial(1).components().count, 1);
        // R4 splits into even and odd residues.
        assert_eq!(FiniteRack::dihedral(4).components().sizes(), vec![2, 2]);
        // S3: identity, transpositions, 3-cycles.
        let q = FiniteRack::conjugation(&FiniteGroup::symmetric(3));
        assert_eq!(q.components().sizes(), vec![1, 2, 3]);
    }

    #[test]
    fn generation_examples() {
        let t = FiniteRack::trivial(3);
        let g = t.generation(&[0]);
        assert!(!g.is_generating());
        assert_eq!(g.closure(), vec![0]);
        let r = FiniteRack::dihedral(3);
        let g = r.generation(&[0, 1]);
        assert!(g.is_generating());
        for x in 0..3 {
            assert_eq!(g.witness(x).unwrap().evaluate(&r), x);
        }
        assert_eq!(g.witness(2).unwrap().moves, vec![(1, Sign::Plus)]);
        assert!(t.is_generating(&[0, 1, 2]));
    }

    #[test]
    fn homomorphism_examples() {
        let r = FiniteRack::dihedral(3);
        assert!(is_homomorphism(&[0, 1, 2], &r, &r));
        assert!(is_homomorphism(&[1, 1, 1], &r, &r));
        // A transposition of R3 fixing the third point is an automorphism (x ↦ -x + c).
        assert!(is_homomorphism(&[1, 0, 2], &r, &r));
        // Collapsing two points of R3 onto distinct images is not.
        assert!(!is_homomorphism(&[0, 0, 1], &r, &r));
    }

    #[test]
    fn op_pow_matches_iteration() {
        let r = FiniteRack::conjugation(&FiniteGroup::symmetric(3));
        for x in 0..6 {
            for y in 0..6 {
                let mut z = x;
                for k in 0..7i64 {
                    assert_eq!(r.op_pow(x, y, k), z);
                    z = r.op(z, y);
                }
                assert_eq!(r.op_pow(r.op(x, y), y, -1), x);
            }
        }
    }

    #[test]
    fn group_validation() {
        assert_eq!(FiniteGroup::symmetric(3).order(), 6);
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::new("G", vec!["a".into(), "b".into()], bad, None).is_err());
        let z2 = FiniteGroup::cyclic(2).table();
        assert!(matches!(
            FiniteGroup::new("G", vec!["a".into(), "b".into()], z2, Some(vec![1, 0])),
            Err(GroupError::InverseMismatch { .. })
        ));
    }
}
