//! Exact integer and rational helpers.
//!
//! Integers are [`dashu_int::IBig`] and rationals [`dashu_ratio::RBig`];
//! both keep small values inline, which matters for the sampling loops.
//! Rationals cross every text boundary as `"p/q"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use dashu_int::IBig as Int;
pub use dashu_ratio::RBig as Rational;

use dashu_int::UBig;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {text:?}: expected \"p/q\" or an integer")]
pub struct ParseRationalError {
    pub text: String,
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rational(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::from_parts_signed(Int::from(p), Int::from(q))
}

pub fn rational_from_int(v: &Int) -> Rational {
    Rational::from(v.clone())
}

pub fn is_negative(v: &Int) -> bool {
    *v < Int::ZERO
}

pub fn abs_int(v: &Int) -> Int {
    if is_negative(v) {
        -v.clone()
    } else {
        v.clone()
    }
}

pub fn abs(v: &Rational) -> Rational {
    if *v < Rational::ZERO {
        -v.clone()
    } else {
        v.clone()
    }
}

/// Sign of an integer as -1, 0 or 1.
pub fn signum(v: &Int) -> i8 {
    match v.cmp(&Int::ZERO) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn format_rational(v: &Rational) -> String {
    if v.denominator().is_one() {
        v.numerator().to_string()
    } else {
        format!("{}/{}", v.numerator(), v.denominator())
    }
}

/// Parses `p/q`, `-p/q` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError { text: text.to_string() };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num = parse_int(num).ok_or_else(err)?;
    let den = parse_int(den).ok_or_else(err)?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::from_parts_signed(num, den))
}

/// Parses a signed decimal integer (`-12`, `+3`, `7`).
pub fn parse_int(text: &str) -> Option<Int> {
    let digits = text.strip_prefix('+').unwrap_or(text);
    let body = digits.strip_prefix('-').unwrap_or(digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Int::from_str(digits).ok()
}

/// Least common multiple of rational denominators; used to move a finite
/// set of rationals onto a common integer scale.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> UBig {
    let mut acc = UBig::ONE;
    for v in values {
        let d = v.denominator();
        let g = gcd(&acc, d);
        acc = &acc / &g * d;
    }
    acc
}

fn gcd(a: &UBig, b: &UBig) -> UBig {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// Running exact sum that defers rational normalization: numerators are
/// accumulated per distinct denominator and combined once at the end.
#[derive(Debug, Default, Clone)]
pub struct RationalSum {
    small: i128,
    buckets: Vec<(UBig, Int)>,
}

impl RationalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let d = v.denominator();
        match self.buckets.iter_mut().find(|(den, _)| den == d) {
            Some((_, num)) => *num += v.numerator(),
            None => self.buckets.push((d.clone(), v.numerator().clone())),
        }
    }

    /// Adds a machine integer without touching the rational buckets.
    pub fn add_small(&mut self, v: i64) {
        match self.small.checked_add(i128::from(v)) {
            Some(s) => self.small = s,
            None => {
                self.add(&Rational::from(Int::from(self.small)));
                self.small = i128::from(v);
            }
        }
    }

    pub fn sub(&mut self, v: &Rational) {
        self.add(&-v.clone());
    }

    pub fn total(self) -> Rational {
        let small = Rational::from(Int::from(self.small));
        self.buckets
            .into_iter()
            .map(|(d, n)| Rational::from_parts(n, d))
            .fold(small, |acc, v| acc + v)
    }
}

/// Display adapter for `p/q` formatting inside `format!`.
pub struct Frac<'a>(pub &'a Rational);

impl fmt::Display for Frac<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numerator(), self.0.denominator())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_round_trip_through_text() {
        for (p, q) in [(0, 1), (3, 4), (-7, 2), (6, 3)] {
            let r = rational(p, q);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rational(6, 3)), "2");
        assert_eq!(format_rational(&rational(-1, 3)), "-1/3");
        assert_eq!(parse_rational("5").unwrap(), rational(5, 1));
        assert_eq!(parse_rational(" -1/2 ").unwrap(), rational(-1, 2));
    }

    #[test]
    fn malformed_rationals_are_rejected() {
        for bad in ["", "1/0", "a/b", "1/2/3", "--1", "1.5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn rational_sum_matches_direct_sum() {
        let vals = [rational(1, 2), rational(1, 3), rational(-5, 6), rational(7, 2), rational(1, 3)];
        let mut s = RationalSum::new();
        for v in &vals {
            s.add(v);
        }
        s.add_small(-4);
        s.add_small(i64::MAX);
        let direct = vals.iter().fold(Rational::ZERO, |a, v| a + v) + rational(-4, 1) + rational(i64::MAX, 1);
        assert_eq!(s.total(), direct);
    }

    #[test]
    fn common_denominator_is_lcm() {
        let vals = [rational(1, 4), rational(1, 6), rational(3, 1)];
        assert_eq!(common_denominator(&vals), UBig::from(12u8));
    }
}
