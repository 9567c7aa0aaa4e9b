//! Exact rank computations.
//!
//! Fraction-free Gaussian elimination over arbitrary-precision integers.
//! After each elimination step a row is divided by the gcd of its entries,
//! which keeps entries small for the sparse ±1/±2 matrices met in practice.

use dashu_int::UBig;

use crate::num::{self, Int, Rational};

fn gcd(a: &Int, b: &Int) -> Int {
    let (mut a, mut b) = (num::abs_int(a), num::abs_int(b));
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn remove_content(row: &mut [Int]) {
    let mut g = Int::ZERO;
    for v in row.iter() {
        if !v.is_zero() {
            g = gcd(&g, v);
            if g == Int::ONE {
                return;
            }
        }
    }
    if g > Int::ONE {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Rank of an integer matrix given as rows of equal length.
pub fn rank(mut rows: Vec<Vec<Int>>) -> usize {
    rows.retain(|r| r.iter().any(|v| !v.is_zero()));
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        let a = pivot[col].clone();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let b = row[col].clone();
            for c in col..cols {
                let v = &a * &row[c] - &b * &pivot[c];
                row[c] = v;
            }
            remove_content(&mut row[col..]);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a matrix with small integer entries.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
}

/// Rank of a rational matrix; each row is scaled by the lcm of its
/// denominators first, which does not change the rank.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    let int_rows = rows
        .iter()
        .map(|r| {
            let scale = Int::from(num::common_denominator(r.iter()));
            r.iter()
                .map(|v| {
                    let scaled = v * Rational::from(scale.clone());
                    debug_assert_eq!(scaled.denominator(), &UBig::ONE);
                    scaled.numerator().clone()
                })
                .collect()
        })
        .collect();
    rank(int_rows)
}
