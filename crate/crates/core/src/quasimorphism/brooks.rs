//! Brooks counting quasimorphisms on free groups.
//!
//! `c_w(g)` counts letter-level occurrences of `w` in the reduced word `g`,
//! overlaps included, minus the occurrences of `w⁻¹`. Counting works on
//! syllables, so exponents of any size cost nothing extra: an occurrence of
//! a reduced `w` with `r ≥ 2` syllables matches `w`'s interior syllables
//! exactly and its end syllables as a suffix and a prefix of the
//! neighbouring syllables of `g`.

use thiserror::Error;

use crate::num::{self, Int};
use crate::word::GroupWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the counted word must be nonempty")]
pub struct EmptyWordError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrooksQm {
    w: GroupWord,
    w_inv: GroupWord,
}

pub fn brooks_qm(w: GroupWord) -> Result<BrooksQm, EmptyWordError> {
    if w.is_identity() {
        return Err(EmptyWordError);
    }
    let w_inv = w.invert();
    Ok(BrooksQm { w, w_inv })
}

/// `|b| ≥ |a|` with matching sign: `x^a` is a prefix (and a suffix) of `x^b`.
fn covers(a: &Int, b: &Int) -> bool {
    num::signum(a) == num::signum(b) && num::abs_int(b) >= num::abs_int(a)
}

fn occurrences(w: &GroupWord, g: &GroupWord) -> Int {
    let ws = w.syllables();
    let gs = g.syllables();
    let r = ws.len();
    if r == 1 {
        let (x, a) = &ws[0];
        return gs
            .iter()
            .filter(|(y, b)| y == x && covers(a, b))
            .map(|(_, b)| num::abs_int(b) - num::abs_int(a) + Int::ONE)
            .fold(Int::ZERO, |acc, v| acc + v);
    }
    if gs.len() < r {
        return Int::ZERO;
    }
    let mut count = 0u64;
    for j in 0..=gs.len() - r {
        let window = &gs[j..j + r];
        let (first, last) = (&ws[0], &ws[r - 1]);
        let ends = window[0].0 == first.0
            && covers(&first.1, &window[0].1)
            && window[r - 1].0 == last.0
            && covers(&last.1, &window[r - 1].1);
        if ends && window[1..r - 1] == ws[1..r - 1] {
            count += 1;
        }
    }
    Int::from(count)
}

impl BrooksQm {
    pub fn word(&self) -> &GroupWord {
        &self.w
    }

    pub fn count(&self, g: &GroupWord) -> Int {
        occurrences(&self.w, g) - occurrences(&self.w_inv, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let ab = brooks_qm(w("a b")).unwrap();
        assert_eq!(ab.count(&w("a b a b")), Int::from(2));
        assert_eq!(ab.count(&w("b^-1 a^-1")), Int::from(-1));
        let a = brooks_qm(w("a")).unwrap();
        assert_eq!(a.count(&w("a^3")), Int::from(3));
        assert_eq!(a.count(&w("a^-3 b a")), Int::from(-2));
        assert_eq!(brooks_qm(GroupWord::identity()), Err(EmptyWordError));
    }

    #[test]
    fn overlapping_and_large_exponents() {
        let aa = brooks_qm(w("a^2")).unwrap();
        assert_eq!(aa.count(&w("a^5")), Int::from(4));
        let huge: GroupWord = "a^100000000000000000000".parse().unwrap();
        assert_eq!(aa.count(&huge), "99999999999999999999".parse::<Int>().unwrap());
        let aba = brooks_qm(w("a b a")).unwrap();
        assert_eq!(aba.count(&w("a b a b a")), Int::from(2));
        assert_eq!(aba.count(&w("a^3 b a^2 b a")), Int::from(2));
        assert_eq!(aba.count(&w("a b^2 a")), Int::ZERO);
    }
}
